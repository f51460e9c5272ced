#pragma once

// Physical constants and the two unit conversions the library needs.
// Everything internal is SI; CGS (dyn, dyn/cm^2) exists only at output
// boundaries.

namespace lifforce::units {

inline constexpr double hbar = 1.054571817e-34; // J s   (CODATA 2018)
inline constexpr double c_light = 2.99792458e8; // m/s   (exact)

inline constexpr long double pi_l = 3.14159265358979323846264338327950288L;
inline constexpr double pi = static_cast<double>(pi_l);

// 1 Pa = 1 N/m^2 = 10 dyn/cm^2, 1 N = 1e5 dyn.  Both factors are exact.
inline constexpr double dyn_cm2_per_pascal = 10.0;
inline constexpr double dyn_per_newton = 1.0e5;

inline constexpr double si_pressure_to_cgs(double pascal) { return pascal * dyn_cm2_per_pascal; }
inline constexpr double cgs_pressure_to_si(double dyn_cm2) { return dyn_cm2 / dyn_cm2_per_pascal; }

inline constexpr double si_force_to_cgs(double newton) { return newton * dyn_per_newton; }
inline constexpr double cgs_force_to_si(double dyn) { return dyn / dyn_per_newton; }

} // namespace lifforce::units
