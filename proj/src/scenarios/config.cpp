#include "blochdrive/scenarios/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "blochdrive/analytic/bessel.hpp"
#include "blochdrive/core/errors.hpp"

namespace blochdrive {

using nlohmann::json;

namespace {

struct KindInfo {
  ScenarioKind kind;
  std::string_view name;
  std::string_view blurb;
};

constexpr std::array<KindInfo, 8> kKinds{{
    {ScenarioKind::bloch_oscillation, "bloch_oscillation",
     "static field F0=0.2, packet oscillates with period 2pi/F0"},
    {ScenarioKind::bloch_translation, "bloch_translation",
     "ac-dc field n=1, F_A=1, omega=1; straight drift with small shaking"},
    {ScenarioKind::super_bloch, "super_bloch",
     "ac-dc field detuned by delta=0.02; slow oscillation of the mean position"},
    {ScenarioKind::dynamic_localization, "dynamic_localization",
     "n=0 with F_A/omega at the first zero of J0, plus +-10% detuned runs"},
    {ScenarioKind::pulse_train, "pulse_train",
     "four Gaussian pulses of impulse pi/2: accelerate, stop, turn, stop"},
    {ScenarioKind::ring_chain_equivalence, "ring_chain_equivalence",
     "chain with field vs ring with flux phi=-I(t), same packet"},
    {ScenarioKind::shaking_sweep, "shaking_sweep",
     "analytic maximum shaking amplitude against drive frequency"},
    {ScenarioKind::custom, "custom", "user supplied lattice, drive and packet"},
}};

[[noreturn]] void config_error(const std::string& msg) { throw ConfigError(msg); }

template <typename T>
T required(const json& block, const char* key, const char* where) {
  auto it = block.find(key);
  if (it == block.end()) config_error(std::string(where) + ": missing key '" + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    config_error(std::string(where) + ": bad value for '" + key + "'");
  }
}

template <typename T>
void maybe(const json& block, const char* key, T& out, const char* where) {
  auto it = block.find(key);
  if (it == block.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    config_error(std::string(where) + ": bad value for '" + key + "'");
  }
}

void check_object(const json& block, const char* where) {
  if (!block.is_object()) config_error(std::string(where) + " must be an object");
}

std::string_view kind_name(LatticeKind k) { return k == LatticeKind::chain ? "chain" : "ring"; }

ScenarioConfig base_chain(ScenarioKind kind) {
  ScenarioConfig c;
  c.scenario = kind;
  c.lattice = LatticeSpec::chain(200, 1.0);
  c.packet = PacketParams{kPi / 2, 100.0, 0.1};
  c.grid.eps = 0.01;
  c.grid.sample_every = 10;
  c.output.directory = "out/" + std::string(to_string(kind));
  return c;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "custom";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  config_error("unknown scenario '" + std::string(name) + "'");
}

const std::vector<ScenarioKind>& preset_kinds() {
  static const std::vector<ScenarioKind> kinds = [] {
    std::vector<ScenarioKind> out;
    for (const auto& k : kKinds)
      if (k.kind != ScenarioKind::custom) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

std::string_view describe(ScenarioKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.blurb;
  return {};
}

ScenarioConfig preset(ScenarioKind kind) {
  ScenarioConfig c = base_chain(kind);
  switch (kind) {
    case ScenarioKind::bloch_oscillation: {
      const double F0 = 0.2;
      c.field = field::Constant{F0};
      c.grid.t_end = 3 * kTwoPi / F0;
      c.grid.snapshot_every = 100;
      c.tolerances = {{"period_rel", 0.02}, {"extent_rel", 0.03}};
      break;
    }
    case ScenarioKind::bloch_translation: {
      c.field = field::AcDc{1, 0.0, 1.0, 1.0};
      c.packet.center = 130.0;
      c.grid.t_end = 5 * kTwoPi;
      c.grid.snapshot_every = 50;
      c.tolerances = {{"drift_rel", 0.02}, {"fidelity_min", 0.999}, {"shaking_rel", 0.1}};
      break;
    }
    case ScenarioKind::super_bloch: {
      const field::AcDc f{1, 0.02, 1.0, 1.0};
      c.field = f;
      // a little over one long period so both turning points are seen
      c.grid.t_end = 1.1 * kTwoPi / (f.delta * f.omega);
      c.grid.snapshot_every = 500;
      c.tolerances = {{"period_rel", 0.03}, {"extent_rel", 0.05}};
      break;
    }
    case ScenarioKind::dynamic_localization: {
      c.field = field::AcDc{0, 0.0, bessel_j0_root(1), 1.0};
      c.grid.t_end = 10 * kTwoPi;
      c.grid.snapshot_every = 100;
      c.tolerances = {{"drift_max", 0.02}, {"detuned_drift_min", 0.1}, {"detuned_drift_rel", 0.05}};
      break;
    }
    case ScenarioKind::pulse_train: {
      const int N = c.lattice.sites;
      std::vector<double> centers;
      for (int n = 1; n <= 4; ++n) centers.push_back(n * N / (10.0 * c.lattice.hopping));
      c.field = field::GaussianTrain{0.886, centers};
      c.packet = PacketParams{0.0, 120.0, 0.1};
      c.grid.t_end = N / (2 * c.lattice.hopping);
      c.grid.eps = 0.0059;
      c.grid.sample_every = 17;
      c.grid.snapshot_every = 170;
      c.tolerances = {{"momentum_abs", 0.02}, {"velocity_abs", 0.05}};
      break;
    }
    case ScenarioKind::ring_chain_equivalence: {
      c.field = field::AcDc{1, 0.0, 1.0, 1.0};
      c.flux_from_field = true;
      c.packet.center = 130.0;
      c.grid.t_end = 5 * kTwoPi;
      c.grid.snapshot_every = 50;
      c.tolerances = {{"distance_max", 1e-3}};
      break;
    }
    case ScenarioKind::shaking_sweep: {
      c.field.reset();
      c.tolerances = {{"suppression_ratio", 5.0}};
      break;
    }
    case ScenarioKind::custom: {
      c.field = field::Constant{0.0};
      c.grid.t_end = 20.0;
      c.tolerances = {{"center_abs", 0.5}, {"momentum_abs", 0.02}};
      break;
    }
  }
  return c;
}

double ScenarioConfig::tolerance(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it == tolerances.end())
    config_error("scenario " + std::string(to_string(scenario)) + ": no tolerance '" + key + "'");
  return it->second;
}

FluxProfile ScenarioConfig::flux_profile() const {
  if (flux_from_field) {
    if (!field) config_error("flux_from_field needs a field block");
    return FluxProfile::from_field(*field);
  }
  if (!flux) config_error("ring lattice needs a flux block or flux_from_field");
  return FluxProfile::direct(*flux);
}

void ScenarioConfig::validate() const {
  try {
    lattice.validate();
  } catch (const std::exception& e) {
    config_error(std::string("lattice: ") + e.what());
  }
  if (output.precision < 1 || output.precision > 17) config_error("output.precision must be in [1, 17]");
  if (output.directory.empty()) config_error("output.directory is empty");
  for (const auto& [key, value] : tolerances)
    if (!(value >= 0.0) || !std::isfinite(value)) config_error("tolerance '" + key + "' must be >= 0");

  if (scenario == ScenarioKind::shaking_sweep) {
    if (sweep.n_values.empty() || sweep.F_A_values.empty()) config_error("sweep: empty n or F_A list");
    if (!(sweep.omega_min > 0.0) || !(sweep.omega_max > sweep.omega_min))
      config_error("sweep: omega range must be positive and increasing");
    if (sweep.omega_count < 2) config_error("sweep: omega_count must be >= 2");
    for (int n : sweep.n_values)
      if (n < 0 || n > 20) config_error("sweep: n must be in [0, 20]");
    return;
  }

  if (!(grid.t_end > 0.0)) config_error("grid.t_end must be positive");
  if (!(grid.eps > 0.0)) config_error("grid.eps must be positive");
  if (grid.sample_every < 1) config_error("grid.sample_every must be >= 1");
  if (grid.snapshot_every < 0) config_error("grid.snapshot_every must be >= 0");
  if (!(packet.alpha > 0.0)) config_error("packet.alpha must be positive");
  if (packet.center < 0.0 || packet.center > lattice.sites - 1)
    config_error("packet.center lies outside the lattice");
  if (packet.position_spread() > lattice.sites / 4.0)
    config_error("packet spread 1/alpha exceeds a quarter of the lattice");

  if (lattice.is_chain()) {
    if (!field) config_error("chain lattice needs a field block");
    if (flux || (flux_from_field && scenario != ScenarioKind::ring_chain_equivalence))
      config_error("flux given for a chain lattice");
  } else if (!flux_from_field && !flux) {
    config_error("ring lattice needs a flux block or flux_from_field");
  }

  if (scenario == ScenarioKind::ring_chain_equivalence) {
    if (!lattice.is_chain() || !field || !flux_from_field)
      config_error("ring_chain_equivalence needs a chain lattice, a field and flux_from_field");
  }
  if (scenario == ScenarioKind::bloch_oscillation && !(field && field->get_if<field::Constant>()))
    config_error("bloch_oscillation needs a constant field");
  if ((scenario == ScenarioKind::bloch_translation || scenario == ScenarioKind::super_bloch ||
       scenario == ScenarioKind::dynamic_localization) &&
      !(field && field->get_if<field::AcDc>()))
    config_error(std::string(to_string(scenario)) + " needs an ac_dc field");
  if (scenario == ScenarioKind::super_bloch && field->get_if<field::AcDc>()->delta == 0.0)
    config_error("super_bloch needs a nonzero delta");
  if (scenario == ScenarioKind::pulse_train && !(field && !field->pulse_centers().empty()))
    config_error("pulse_train needs a gaussian_train or sawtooth_train field");
}

FieldProfile field_from_json(const json& block) {
  check_object(block, "field");
  const auto type = required<std::string>(block, "type", "field");
  try {
    if (type == "constant") {
      field::Constant f;
      if (block.contains("value"))
        f.F0 = required<double>(block, "value", "field");
      else
        f.F0 = required<double>(block, "F0", "field");
      return f;
    }
    if (type == "ac_dc") {
      field::AcDc f;
      f.n = required<int>(block, "n", "field");
      maybe(block, "delta", f.delta, "field");
      f.F_A = required<double>(block, "F_A", "field");
      f.omega = required<double>(block, "omega", "field");
      return f;
    }
    if (type == "gaussian_train") {
      field::GaussianTrain f;
      f.sigma = required<double>(block, "sigma", "field");
      f.centers = required<std::vector<double>>(block, "centers", "field");
      return f;
    }
    if (type == "sawtooth_train") {
      field::SawtoothTrain f;
      const auto it = block.find("pulses");
      if (it == block.end() || !it->is_array()) config_error("field: sawtooth_train needs a pulses array");
      for (const auto& p : *it) {
        check_object(p, "field.pulses[]");
        f.pulses.push_back({required<double>(p, "center", "field.pulses[]"),
                            required<double>(p, "width", "field.pulses[]"),
                            required<double>(p, "impulse", "field.pulses[]")});
      }
      return f;
    }
    if (type == "tabulated") {
      field::Tabulated f;
      f.times = required<std::vector<double>>(block, "times", "field");
      f.values = required<std::vector<double>>(block, "values", "field");
      return f;
    }
  } catch (const ArgumentError& e) {
    config_error(std::string("field: ") + e.what());
  } catch (const DomainError& e) {
    config_error(std::string("field: ") + e.what());
  }
  config_error("field: unknown type '" + type + "'");
}

json field_to_json(const FieldProfile& profile) {
  return std::visit(
      [](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, field::Constant>) {
          return {{"type", "constant"}, {"F0", f.F0}};
        } else if constexpr (std::is_same_v<T, field::AcDc>) {
          return {{"type", "ac_dc"}, {"n", f.n}, {"delta", f.delta}, {"F_A", f.F_A}, {"omega", f.omega}};
        } else if constexpr (std::is_same_v<T, field::GaussianTrain>) {
          return {{"type", "gaussian_train"}, {"sigma", f.sigma}, {"centers", f.centers}};
        } else if constexpr (std::is_same_v<T, field::SawtoothTrain>) {
          json pulses = json::array();
          for (const auto& p : f.pulses)
            pulses.push_back({{"center", p.center}, {"width", p.width}, {"impulse", p.impulse}});
          return {{"type", "sawtooth_train"}, {"pulses", pulses}};
        } else {
          return {{"type", "tabulated"}, {"times", f.times}, {"values", f.values}};
        }
      },
      profile.variant());
}

ScenarioConfig apply_config(const json& doc, ScenarioConfig c) {
  check_object(doc, "config");
  static const std::array<std::string_view, 10> known{"scenario", "lattice", "field",  "flux",
                                                      "flux_from_field", "packet", "grid", "output",
                                                      "tolerances", "sweep"};
  for (const auto& item : doc.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || item.key() == k;
    if (!ok) config_error("unknown top-level key '" + item.key() + "'");
  }

  if (doc.contains("scenario")) {
    const auto kind = parse_scenario_kind(required<std::string>(doc, "scenario", "config"));
    if (kind != c.scenario) c = preset(kind);
  }

  if (doc.contains("lattice")) {
    const json& b = doc["lattice"];
    check_object(b, "lattice");
    std::string kind(kind_name(c.lattice.kind));
    maybe(b, "kind", kind, "lattice");
    if (kind != "chain" && kind != "ring") config_error("lattice.kind must be chain or ring");
    int sites = c.lattice.sites;
    double hopping = c.lattice.hopping;
    maybe(b, "sites", sites, "lattice");
    maybe(b, "hopping", hopping, "lattice");
    try {
      c.lattice = kind == "chain" ? LatticeSpec::chain(sites, hopping) : LatticeSpec::ring(sites, hopping);
    } catch (const ArgumentError& e) {
      config_error(std::string("lattice: ") + e.what());
    }
    maybe(b, "position_offset", c.lattice.position_offset, "lattice");
  }

  if (doc.contains("field")) {
    if (doc["field"].is_null())
      c.field.reset();
    else
      c.field = field_from_json(doc["field"]);
  }
  if (doc.contains("flux")) {
    if (doc["flux"].is_null()) {
      c.flux.reset();
    } else {
      c.flux = field_from_json(doc["flux"]);
      c.flux_from_field = false;
    }
  }
  maybe(doc, "flux_from_field", c.flux_from_field, "config");

  if (doc.contains("packet")) {
    const json& b = doc["packet"];
    check_object(b, "packet");
    maybe(b, "k0", c.packet.k0, "packet");
    if (b.contains("k0_pi")) c.packet.k0 = kPi * required<double>(b, "k0_pi", "packet");
    maybe(b, "center", c.packet.center, "packet");
    maybe(b, "N_A", c.packet.center, "packet");
    maybe(b, "alpha", c.packet.alpha, "packet");
  }

  if (doc.contains("grid")) {
    const json& b = doc["grid"];
    check_object(b, "grid");
    maybe(b, "t_end", c.grid.t_end, "grid");
    maybe(b, "eps", c.grid.eps, "grid");
    maybe(b, "sample_every", c.grid.sample_every, "grid");
    maybe(b, "snapshot_every", c.grid.snapshot_every, "grid");
    if (b.contains("method")) {
      try {
        c.grid.method = parse_step_method(required<std::string>(b, "method", "grid"));
      } catch (const ArgumentError& e) {
        config_error(std::string("grid.method: ") + e.what());
      }
    }
  }

  if (doc.contains("output")) {
    const json& b = doc["output"];
    check_object(b, "output");
    maybe(b, "directory", c.output.directory, "output");
    maybe(b, "precision", c.output.precision, "output");
  }

  if (doc.contains("tolerances")) {
    const json& b = doc["tolerances"];
    check_object(b, "tolerances");
    for (const auto& item : b.items()) {
      if (!item.value().is_number()) config_error("tolerance '" + item.key() + "' must be a number");
      c.tolerances[item.key()] = item.value().get<double>();
    }
  }

  if (doc.contains("sweep")) {
    const json& b = doc["sweep"];
    check_object(b, "sweep");
    maybe(b, "n", c.sweep.n_values, "sweep");
    maybe(b, "F_A", c.sweep.F_A_values, "sweep");
    maybe(b, "omega_min", c.sweep.omega_min, "sweep");
    maybe(b, "omega_max", c.sweep.omega_max, "sweep");
    maybe(b, "omega_count", c.sweep.omega_count, "sweep");
  }
  return c;
}

ScenarioConfig parse_config(const json& doc) {
  check_object(doc, "config");
  ScenarioKind kind = ScenarioKind::custom;
  if (doc.contains("scenario")) kind = parse_scenario_kind(required<std::string>(doc, "scenario", "config"));
  return apply_config(doc, preset(kind));
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    config_error("config '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

json to_json(const ScenarioConfig& c) {
  json doc;
  doc["scenario"] = std::string(to_string(c.scenario));
  doc["lattice"] = {{"kind", std::string(kind_name(c.lattice.kind))},
                    {"sites", c.lattice.sites},
                    {"hopping", c.lattice.hopping},
                    {"position_offset", c.lattice.position_offset}};
  if (c.field) doc["field"] = field_to_json(*c.field);
  if (c.flux) doc["flux"] = field_to_json(*c.flux);
  doc["flux_from_field"] = c.flux_from_field;
  doc["packet"] = {{"k0", c.packet.k0}, {"center", c.packet.center}, {"alpha", c.packet.alpha}};
  doc["grid"] = {{"t_end", c.grid.t_end},
                 {"eps", c.grid.eps},
                 {"sample_every", c.grid.sample_every},
                 {"snapshot_every", c.grid.snapshot_every},
                 {"method", std::string(to_string(c.grid.method))}};
  doc["output"] = {{"directory", c.output.directory}, {"precision", c.output.precision}};
  doc["tolerances"] = c.tolerances;
  doc["sweep"] = {{"n", c.sweep.n_values},
                  {"F_A", c.sweep.F_A_values},
                  {"omega_min", c.sweep.omega_min},
                  {"omega_max", c.sweep.omega_max},
                  {"omega_count", c.sweep.omega_count}};
  return doc;
}

}  // namespace blochdrive
