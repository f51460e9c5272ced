#pragma once

#include <functional>
#include <stdexcept>
#include <string>

// Deterministic adaptive quadrature for the two semi-infinite integrals of
// the half-space force, plus the independent composite-Simpson oracle used
// by the test suites.
//
// The adaptive engine is a globally adaptive embedded Gauss(7)/Kronrod(15)
// rule: the panel with the largest error estimate is bisected until the
// summed error estimate meets max(rel_tol*|value|, abs_tol).  Evaluation
// order and summation order are fixed, so results are bit-deterministic
// for identical inputs.

namespace lifforce {

struct QuadratureSpec {
  double rel_tol = 1e-8;        // in (0, 1e-2]
  double abs_tol = 1e-30;       // error floor, integrand units
  int max_subdivisions = 200;   // >= 10
  long oracle_grid_points = 400000; // Simpson oracle budget, product over both axes
};

// Throws std::domain_error on out-of-range members.
void validate(const QuadratureSpec& spec);

struct IntegralEstimate {
  double value = 0.0;
  double abs_error = 0.0; // estimated bound on |value - exact|
  long long evaluations = 0;
};

// Raised when the panel budget is exhausted before the tolerance is met.
// Carries the best estimate reached.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& message, IntegralEstimate best)
      : std::runtime_error(message), best_(best) {}
  const IntegralEstimate& best_estimate() const { return best_; }

private:
  IntegralEstimate best_;
};

// Adaptive integral over a finite interval [a, b].
IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec);

// int_1^inf f(p) dp, for f finite on [1, inf) decaying at least as p^-2.
// Computed through the algebraic map p = 1/t, t in (0, 1].
IntegralEstimate integrate_unit_to_inf(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec);

// int_0^inf f(x) dx, for f integrable at 0 and exponentially decaying.
// Computed through the logarithmic map x = -ln(u), u in (0, 1).
IntegralEstimate integrate_zero_to_inf(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec);

// Brute-force tensor-grid composite Simpson estimate of
//   int_1^inf dp int_0^inf dx f(p, x)
// on the transformed coordinates (p = 1/t with t in (0, 1]; x truncated where
// e^-x < 1e-16).  Deterministic, no error control; used as the independent
// oracle in tests.  `budget` caps the product of the per-axis node counts.
double oracle_double_integral(const std::function<double(double, double)>& f, long budget);

} // namespace lifforce
