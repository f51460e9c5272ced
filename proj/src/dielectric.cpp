#include "lifforce/dielectric.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace lifforce {

namespace {

struct ValidateVisitor {
  void operator()(const ConstantModel& m) const {
    if (!(m.eps0 > 0.0))
      throw std::domain_error("constant permittivity requires eps0 > 0");
  }
  void operator()(const DrudeModel& m) const {
    if (!(m.omega_p > 0.0))
      throw std::domain_error("Drude model requires omega_p > 0");
    if (!(m.gamma >= 0.0))
      throw std::domain_error("Drude model requires gamma >= 0");
  }
  void operator()(const LorentzModel& m) const {
    for (const auto& osc : m.oscillators) {
      if (!(osc.strength >= 0.0))
        throw std::domain_error("Lorentz oscillator requires strength >= 0");
      if (!(osc.omega > 0.0))
        throw std::domain_error("Lorentz oscillator requires omega > 0");
      if (!(osc.gamma >= 0.0))
        throw std::domain_error("Lorentz oscillator requires gamma >= 0");
    }
  }
};

} // namespace

void validate(const PermittivityModel& model) { std::visit(ValidateVisitor{}, model); }

double permittivity_at(const PermittivityModel& model, double xi) {
  validate(model);
  if (!(xi >= 0.0))
    throw std::domain_error("permittivity_at requires xi >= 0");

  struct Eval {
    double xi;
    double operator()(const ConstantModel& m) const { return m.eps0; }
    double operator()(const DrudeModel& m) const {
      // The xi->0 pole exists for every gamma: 1/(xi*(xi+gamma)) diverges.
      if (xi == 0.0)
        throw std::domain_error("Drude permittivity has a pole at xi = 0");
      return 1.0 + m.omega_p * m.omega_p / (xi * (xi + m.gamma));
    }
    double operator()(const LorentzModel& m) const {
      double eps = 1.0;
      for (const auto& osc : m.oscillators) {
        const double w2 = osc.omega * osc.omega;
        eps += osc.strength * w2 / (w2 + xi * xi + osc.gamma * xi);
      }
      return eps;
    }
  };
  return std::visit(Eval{xi}, model);
}

double static_permittivity(const PermittivityModel& model) {
  validate(model);
  if (std::holds_alternative<DrudeModel>(model))
    throw std::domain_error("Drude model has no finite static permittivity");
  return permittivity_at(model, 0.0);
}

bool is_constant_model(const PermittivityModel& model) {
  return std::holds_alternative<ConstantModel>(model);
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& origin, int line) {
  try {
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size())
      throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw registry_error(origin + ":" + std::to_string(line) + ": invalid number '" + text + "'",
                         line);
  }
}

struct PendingMaterial {
  std::string name;
  int line = 0;
  std::string model_kind; // "", "constant", "drude", "lorentz"
  std::optional<double> eps;
  std::optional<double> omega_p;
  std::optional<double> gamma;
  std::vector<LorentzOscillator> oscillators;
  std::string provenance;
};

Material finish(const PendingMaterial& p, const std::string& origin) {
  auto fail = [&](const std::string& what) -> registry_error {
    return registry_error(
        origin + ":" + std::to_string(p.line) + ": material '" + p.name + "': " + what, p.line);
  };
  if (p.model_kind.empty()) throw fail("missing 'model' field");

  Material m;
  m.name = p.name;
  m.provenance = p.provenance;
  if (p.model_kind == "constant") {
    if (!p.eps) throw fail("constant model requires 'eps'");
    if (p.omega_p || p.gamma || !p.oscillators.empty())
      throw fail("field not valid for a constant model");
    m.model = ConstantModel{*p.eps};
  } else if (p.model_kind == "drude") {
    if (!p.omega_p) throw fail("drude model requires 'omega_p'");
    if (p.eps || !p.oscillators.empty()) throw fail("field not valid for a drude model");
    m.model = DrudeModel{*p.omega_p, p.gamma.value_or(0.0)};
  } else if (p.model_kind == "lorentz") {
    if (p.oscillators.empty()) throw fail("lorentz model requires at least one 'oscillator'");
    if (p.eps || p.omega_p || p.gamma) throw fail("field not valid for a lorentz model");
    m.model = LorentzModel{p.oscillators};
  } else {
    throw fail("unknown model '" + p.model_kind + "' (expected constant|drude|lorentz)");
  }
  try {
    validate(m.model);
  } catch (const std::domain_error& e) {
    throw fail(e.what());
  }
  return m;
}

} // namespace

std::vector<Material> registry_parse(std::istream& in, const std::string& origin) {
  std::vector<Material> out;
  std::set<std::string> seen;
  std::optional<PendingMaterial> current;

  auto flush = [&]() {
    if (!current) return;
    Material m = finish(*current, origin);
    if (!seen.insert(m.name).second)
      throw registry_error(origin + ":" + std::to_string(current->line) + ": duplicate material '" +
                               m.name + "'",
                           current->line);
    out.push_back(std::move(m));
    current.reset();
  };

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw registry_error(origin + ":" + std::to_string(lineno) + ": missing ']' in header",
                             lineno);
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty())
        throw registry_error(origin + ":" + std::to_string(lineno) + ": empty material name",
                             lineno);
      flush();
      current = PendingMaterial{};
      current->name = name;
      current->line = lineno;
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw registry_error(origin + ":" + std::to_string(lineno) + ": expected 'key = value'",
                           lineno);
    if (!current)
      throw registry_error(origin + ":" + std::to_string(lineno) +
                               ": field outside of a [material] table",
                           lineno);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "model") {
      current->model_kind = value;
    } else if (key == "provenance") {
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
        value = value.substr(1, value.size() - 2);
      current->provenance = value;
    } else if (key == "eps") {
      current->eps = parse_number(value, origin, lineno);
    } else if (key == "omega_p") {
      current->omega_p = parse_number(value, origin, lineno);
    } else if (key == "gamma") {
      current->gamma = parse_number(value, origin, lineno);
    } else if (key == "oscillator") {
      // "C, omega[, gamma]" with omega and gamma in rad/s
      std::vector<std::string> parts;
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) parts.push_back(trim(item));
      if (parts.size() != 2 && parts.size() != 3)
        throw registry_error(origin + ":" + std::to_string(lineno) +
                                 ": oscillator expects 'C, omega[, gamma]'",
                             lineno);
      LorentzOscillator osc;
      osc.strength = parse_number(parts[0], origin, lineno);
      osc.omega = parse_number(parts[1], origin, lineno);
      osc.gamma = parts.size() == 3 ? parse_number(parts[2], origin, lineno) : 0.0;
      current->oscillators.push_back(osc);
    } else {
      throw registry_error(origin + ":" + std::to_string(lineno) + ": unknown field '" + key +
                               "' in material '" + current->name + "'",
                           lineno);
    }
  }
  flush();
  return out;
}

std::vector<Material> registry_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw registry_error("cannot open materials file '" + path.string() + "'", 0);
  return registry_parse(in, path.string());
}

const Material* find_material(std::span<const Material> registry, const std::string& name) {
  auto it = std::find_if(registry.begin(), registry.end(),
                         [&](const Material& m) { return m.name == name; });
  return it == registry.end() ? nullptr : &*it;
}

const std::vector<Material>& builtin_materials() {
  static const std::vector<Material> registry = {
      {"vacuum", ConstantModel{1.0}, "eps = 1 by definition"},
      {"toluene", ConstantModel{2.25}, "visible-band dielectric constant, dispersion ignored"},
      {"flint-glass", ConstantModel{2.4525},
       "matched to a toluene gap with relative contrast delta = 0.09: 2.25*(1+0.09)"},
      {"fluorite", ConstantModel{2.0475},
       "matched to a toluene gap with relative contrast delta = 0.09: 2.25*(1-0.09)"},
      {"gold-drude", DrudeModel{1.37e16, 5.32e13},
       "free-electron fit, omega_p = 9.0 eV, gamma = 35 meV"},
      {"fused-silica", LorentzModel{{{1.098, 2.034e16, 0.0}, {0.829, 1.88e14, 0.0}}},
       "two-oscillator UV+IR fit, undamped"},
  };
  return registry;
}

} // namespace lifforce
