#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blochdrive/analytic/packet.hpp"
#include "blochdrive/core/types.hpp"
#include "blochdrive/fields/profile.hpp"
#include "blochdrive/numeric/stepper.hpp"

namespace blochdrive {

enum class ScenarioKind {
  bloch_oscillation,
  bloch_translation,
  super_bloch,
  dynamic_localization,
  pulse_train,
  ring_chain_equivalence,
  shaking_sweep,
  custom,
};

std::string_view to_string(ScenarioKind kind);
// Throws ConfigError for unknown names.
ScenarioKind parse_scenario_kind(std::string_view name);
// Every preset-backed scenario, in listing order.
const std::vector<ScenarioKind>& preset_kinds();
std::string_view describe(ScenarioKind kind);

struct GridConfig {
  double t_end = 0.0;
  double eps = 0.01;
  int sample_every = 10;
  int snapshot_every = 0;
  StepMethod method = StepMethod::exact_diag;
};

struct OutputConfig {
  std::string directory = "out";
  int precision = 17;
};

struct SweepConfig {
  std::vector<int> n_values{0, 1, 2};
  std::vector<double> F_A_values{0.5, 1.0, 2.0};
  double omega_min = 0.5;
  double omega_max = 10.0;
  int omega_count = 40;
};

// Complete description of one scenario run.
// The drive is `field` for a chain. A ring takes `flux`, or the flux
// equivalent to `field` when `flux_from_field` is set.
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::custom;
  LatticeSpec lattice = LatticeSpec::chain(200);
  std::optional<FieldProfile> field;
  std::optional<FieldProfile> flux;
  bool flux_from_field = false;
  PacketParams packet;
  GridConfig grid;
  OutputConfig output;
  std::map<std::string, double> tolerances;
  SweepConfig sweep;

  // Throws ConfigError when a block needed by the scenario is missing or a
  // parameter violates a module precondition.
  void validate() const;

  // Tolerance by key; ConfigError when absent.
  double tolerance(const std::string& key) const;

  FluxProfile flux_profile() const;
};

// Preset reproducing one of the reference figures.
ScenarioConfig preset(ScenarioKind kind);

// Applies the keys present in `doc` on top of `base`. A `scenario` key
// replaces the base by that preset before the remaining keys are applied.
ScenarioConfig apply_config(const nlohmann::json& doc, ScenarioConfig base);

// Parses a full document; missing keys come from the named preset (or the
// custom defaults).
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::string& path);

nlohmann::json to_json(const ScenarioConfig& config);
nlohmann::json field_to_json(const FieldProfile& profile);
// Throws ConfigError on unknown types or missing parameters.
FieldProfile field_from_json(const nlohmann::json& block);

}  // namespace blochdrive
