#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Dielectric permittivity models evaluated on the imaginary frequency axis,
// eps(i*xi).  All models are real-valued, positive, and (for the dispersive
// ones) monotonically non-increasing in xi.

namespace lifforce {

struct ConstantModel {
  double eps0 = 1.0; // must be > 0
};

// eps(i*xi) = 1 + omega_p^2 / (xi * (xi + gamma)).  Diverges at xi = 0, so
// a Drude medium has no finite static permittivity and cannot fill the gap.
struct DrudeModel {
  double omega_p = 0.0; // plasma frequency, rad/s, > 0
  double gamma = 0.0;   // relaxation rate, rad/s, >= 0
};

struct LorentzOscillator {
  double strength = 0.0; // C_k, dimensionless, >= 0
  double omega = 0.0;    // resonance, rad/s, > 0
  double gamma = 0.0;    // damping, rad/s, >= 0
};

// Ninham-Parsegian form: eps(i*xi) = 1 + sum_k C_k w_k^2 / (w_k^2 + xi^2 + g_k xi)
struct LorentzModel {
  std::vector<LorentzOscillator> oscillators;
};

using PermittivityModel = std::variant<ConstantModel, DrudeModel, LorentzModel>;

// Throws std::domain_error if the model parameters violate the invariants
// listed above.
void validate(const PermittivityModel& model);

// eps(i*xi) for xi >= 0 (rad/s).  Throws std::domain_error for xi < 0 and
// for a Drude model at xi = 0 (pole).
double permittivity_at(const PermittivityModel& model, double xi);

// eps(i*0).  Throws std::domain_error for Drude models.
double static_permittivity(const PermittivityModel& model);

bool is_constant_model(const PermittivityModel& model);

struct Material {
  std::string name;
  PermittivityModel model;
  std::string provenance;
};

class registry_error : public std::runtime_error {
public:
  registry_error(std::string message, int line)
      : std::runtime_error(std::move(message)), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Parses the plain-text materials registry (grammar in README.md).
// Duplicate names and unknown fields are rejected with line diagnostics.
std::vector<Material> registry_load(const std::filesystem::path& path);
std::vector<Material> registry_parse(std::istream& in, const std::string& origin = "<stream>");

const Material* find_material(std::span<const Material> registry, const std::string& name);

// The registry shipped with the library: vacuum, toluene, and the matched
// flint-glass / fluorite pair of the gap-contrast worked example, plus one
// Drude and one Lorentz material so dispersive paths are exercised.
const std::vector<Material>& builtin_materials();

} // namespace lifforce
