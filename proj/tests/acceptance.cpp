// Acceptance suite: one PASS/FAIL line per criterion.
//
//   bloch_drive_acceptance [--criterion N ...] [--out DIR]
//                          [--check-fixtures DIR] [--write-fixtures DIR]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "blochdrive/analytic/bessel.hpp"
#include "blochdrive/analytic/packet.hpp"
#include "blochdrive/analytic/predictors.hpp"
#include "blochdrive/analytic/propagators.hpp"
#include "blochdrive/core/errors.hpp"
#include "blochdrive/numeric/evolution.hpp"
#include "blochdrive/scenarios/analysis.hpp"
#include "blochdrive/scenarios/runner.hpp"

using namespace blochdrive;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

fs::path g_out = "acceptance_out";

std::string num(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

const ScenarioOutcome& preset_run(ScenarioKind kind) {
  static std::map<ScenarioKind, ScenarioOutcome> cache;
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  auto config = preset(kind);
  config.output.directory = (g_out / "presets" / std::string(to_string(kind))).string();
  return cache.emplace(kind, run_scenario(config)).first->second;
}

double measured(ScenarioKind kind, std::string_view quantity) {
  const auto* row = preset_run(kind).report.find(quantity);
  if (!row) throw StateError("report has no row " + std::string(quantity));
  return row->measured;
}

Verdict unitarity() {
  // time-dependent drive, so every step builds a fresh decomposition
  const auto lattice = LatticeSpec::chain(200);
  const auto psi = gwp_build({0.0, 100.0, 0.1}, lattice);
  RunOptions o;
  o.method = StepMethod::exact_diag;
  o.sample_every = 10;
  const TimeGrid grid{0.0, 100.0, 10000};
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_evolution(psi, lattice, FieldProfile(field::AcDc{1, 0.0, 1.0, 1.0}), grid, o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double drift = 0.0;
  for (const auto& s : r.series.samples) drift = std::max(drift, std::abs(s.norm - 1.0));
  drift = std::max(drift, std::abs(r.final_state.norm() - 1.0));
  return {drift < 1e-9 && secs < 60.0,
          "10^4 exact steps at N=200: max |norm-1| = " + num(drift, 3) + " (limit 1e-9), " +
              num(secs, 3) + " s (limit 60 s)"};
}

Verdict bloch_oscillations() {
  const double period = measured(ScenarioKind::bloch_oscillation, "period");
  const double extent = measured(ScenarioKind::bloch_oscillation, "extent");
  const double p_err = std::abs(period / (10 * kPi) - 1);
  const double e_err = std::abs(extent / 20.0 - 1);
  return {p_err <= 0.02 && e_err <= 0.03,
          "period " + num(period, 8) + " vs 10pi (rel " + num(p_err, 3) + ", limit 0.02); extent " +
              num(extent, 8) + " vs 20 (rel " + num(e_err, 3) + ", limit 0.03)"};
}

Verdict impulse_momentum() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  const auto lattice = LatticeSpec::chain(200);
  const double k0 = kPi / 2;
  const auto psi = gwp_build({k0, 100.0, 0.1}, lattice);
  double worst = 0.0;
  for (int f = 0; f < 5; ++f) {
    field::Tabulated tab;
    for (int i = 0; i <= 20; ++i) {
      tab.times.push_back(i);
      tab.values.push_back(value(rng));
    }
    const FieldProfile profile = tab;
    RunOptions o;
    o.sample_every = 10;
    const auto r = run_evolution(psi, lattice, profile, TimeGrid::with_step(0.0, 20.0, 0.01), o);
    for (const auto& s : r.series.samples) {
      const double expect = k0 - impulse(profile, 0.0, s.t);
      worst = std::max(worst, circular_distance(s.central_momentum, expect));
    }
  }
  return {worst <= 1e-2, "5 random tabulated fields: max |k - (k0 - I)| mod 2pi = " + num(worst, 3) +
                             " rad (limit 1e-2)"};
}

Verdict shape_preservation() {
  bool ok = true;
  std::string detail;
  for (auto kind : preset_kinds()) {
    if (kind == ScenarioKind::shaking_sweep) continue;
    for (const auto& [arm, series] : preset_run(kind).runs) {
      const double v = width_variation(series, kChainEdgeTolerance);
      ok = ok && v < 0.01;
      detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(kind)) +
                (arm == "main" ? "" : "/" + arm) + " " + num(100 * v, 3) + "%";
    }
  }
  return {ok, "width variation (limit 1%): " + detail};
}

Verdict analytic_fidelity() {
  const double f = measured(ScenarioKind::bloch_translation, "min_fidelity");
  return {f >= 0.999, "min fidelity over t <= 5 tau = " + num(f, 12) + " (limit 0.999)"};
}

Verdict translation_drift() {
  const double predicted = 2.0 * -1.0 * bessel_jn(1, 1.0) * std::sin(kPi / 2);
  const double v = measured(ScenarioKind::bloch_translation, "drift_velocity");
  const double rel = std::abs(v / predicted - 1);
  return {rel <= 0.02, "mean velocity " + num(v, 8) + " vs " + num(predicted, 8) + " (rel " +
                           num(rel, 3) + ", limit 0.02)"};
}

Verdict dynamic_localization() {
  const auto k = ScenarioKind::dynamic_localization;
  const double at_root = measured(k, "drift_speed");
  const double up = measured(k, "drift_speed_plus_10pct");
  const double down = measured(k, "drift_speed_minus_10pct");
  const double two_j = 2.0;
  return {at_root < 0.01 * two_j && up > 0.05 * two_j && down > 0.05 * two_j,
          "drift at first J0 root " + num(at_root, 3) + " (limit < 0.02); +10% " + num(up, 4) +
              ", -10% " + num(down, 4) + " (limit > 0.1)"};
}

Verdict super_bloch() {
  const double long_period = kTwoPi / (0.02 * 1.0);
  const double extent_pred = 4 * std::abs(bessel_jn(1, 1.0)) / 0.02;
  const double period = measured(ScenarioKind::super_bloch, "period");
  const double extent = measured(ScenarioKind::super_bloch, "extent");
  const double p_err = std::abs(period / long_period - 1);
  const double e_err = std::abs(extent / extent_pred - 1);
  return {p_err <= 0.03 && e_err <= 0.05,
          "long period " + num(period, 8) + " vs 2pi/(delta omega) = " + num(long_period, 8) + " (rel " +
              num(p_err, 3) + ", limit 0.03); extent " + num(extent, 6) + " vs " + num(extent_pred, 6) +
              " (rel " + num(e_err, 3) + ", limit 0.05)"};
}

Verdict pulse_control() {
  const double k_target[] = {-kPi / 2, -kPi, -3 * kPi / 2, 0.0};
  const double v_target[] = {-2.0, 0.0, 2.0, 0.0};
  double k_err = 0.0, v_err = 0.0;
  for (int p = 0; p < 4; ++p) {
    const auto i = std::to_string(p + 1);
    k_err = std::max(k_err, circular_distance(
                                measured(ScenarioKind::pulse_train, "momentum_after_pulse_" + i), k_target[p]));
    v_err = std::max(v_err,
                     std::abs(measured(ScenarioKind::pulse_train, "velocity_plateau_" + i) - v_target[p]));
  }
  return {k_err <= 0.02 && v_err <= 0.05,
          "max momentum error " + num(k_err, 3) + " rad (limit 0.02); max plateau velocity error " +
              num(v_err, 3) + " J (limit 0.05)"};
}

Verdict train_shape() {
  const auto a = preset(ScenarioKind::pulse_train);
  const auto r = compare_trains(a, sawtooth_variant(a, 3.0), 1e-2);
  double worst = 0.0;
  for (const auto& row : r.rows()) worst = std::max(worst, row.measured);
  return {worst < 1e-2, "Gaussian vs sawtooth trains: max L2 probability distance " + num(worst, 3) +
                            " over " + std::to_string(r.rows().size()) + " quiet times (limit 1e-2)"};
}

Verdict ring_chain() {
  const double d = measured(ScenarioKind::ring_chain_equivalence, "max_probability_distance");
  return {d < 1e-3, "max L2 probability distance chain vs ring = " + num(d, 3) + " (limit 1e-3)"};
}

Verdict bessel_kernel() {
  double path = 0.0, rec = 0.0;
  for (int n = 0; n <= 10; ++n)
    for (int i = 0; i <= 240; ++i) {
      const double z = 0.05 * i;
      path = std::max(path, std::abs(bessel_jn_series(n, z) - bessel_jn_integral(n, z)));
    }
  for (int n = 1; n <= 10; ++n)
    for (int i = 2; i <= 240; ++i) {
      const double z = 0.05 * i;
      rec = std::max(rec, std::abs(bessel_jn(n - 1, z) + bessel_jn(n + 1, z) - 2 * n / z * bessel_jn(n, z)));
    }
  return {path <= 1e-10 && rec <= 1e-10, "series vs integral max diff " + num(path, 3) +
                                             "; recurrence max residual " + num(rec, 3) + " (limit 1e-10)"};
}

Verdict shaking_suppression() {
  const double low = shaking_max(1, 1.0, 1.0, 1.0, kPi / 2);
  const double high = shaking_max(1, 1.0, 10.0, 1.0, kPi / 2);
  return {high < low / 5, "shaking_max(omega=1) = " + num(low, 6) + ", (omega=10) = " + num(high, 6) +
                              ", ratio " + num(low / high, 4) + " (limit > 5)"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "unitarity", unitarity},
      {2, "bloch oscillations", bloch_oscillations},
      {3, "impulse-momentum theorem", impulse_momentum},
      {4, "shape preservation", shape_preservation},
      {5, "analytic vs oracle fidelity", analytic_fidelity},
      {6, "bloch translation drift", translation_drift},
      {7, "dynamic localization", dynamic_localization},
      {8, "super bloch oscillations", super_bloch},
      {9, "pulse-train control", pulse_control},
      {10, "train-shape independence", train_shape},
      {11, "ring-chain equivalence", ring_chain},
      {12, "bessel kernel", bessel_kernel},
      {13, "shaking suppression", shaking_suppression},
  };
  return all;
}

bool same_value(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reports of every preset against the stored ones: same rows, same status,
// values equal to 1e-9 relative (SIMD and scalar kernels differ in rounding).
bool check_fixtures(const fs::path& dir) {
  bool ok = true;
  for (auto kind : preset_kinds()) {
    const std::string name(to_string(kind));
    const fs::path stored = dir / (name + ".report.txt");
    const fs::path fresh = g_out / "presets" / name / "report.txt";
    if (!fs::exists(fresh)) preset_run(kind);
    std::string why;
    if (!fs::exists(stored)) {
      why = "missing fixture";
    } else {
      const auto a = ComparisonReport::parse(read_file(stored));
      const auto b = ComparisonReport::parse(read_file(fresh));
      if (a.rows().size() != b.rows().size()) why = "row count differs";
      for (std::size_t i = 0; why.empty() && i < a.rows().size(); ++i) {
        const auto &x = a.rows()[i], &y = b.rows()[i];
        if (x.quantity != y.quantity || x.pass != y.pass || !same_value(x.predicted, y.predicted) ||
            !same_value(x.measured, y.measured) || x.tolerance != y.tolerance)
          why = "row " + x.quantity + " differs";
      }
    }
    std::printf("fixture %-24s [%s]%s%s\n", name.c_str(), why.empty() ? "PASS" : "FAIL",
                why.empty() ? "" : " ", why.c_str());
    ok = ok && why.empty();
  }
  return ok;
}

void write_fixtures(const fs::path& dir) {
  fs::create_directories(dir);
  for (auto kind : preset_kinds()) {
    const std::string name(to_string(kind));
    const fs::path fresh = g_out / "presets" / name / "report.txt";
    if (!fs::exists(fresh)) preset_run(kind);
    fs::copy_file(fresh, dir / (name + ".report.txt"), fs::copy_options::overwrite_existing);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> selected;
  std::string out = g_out.string(), check_dir, write_dir;
  app.add_option("--criterion", selected, "criterion number (repeatable); default all");
  app.add_option("--out", out, "scratch directory for scenario outputs");
  app.add_option("--check-fixtures", check_dir, "compare preset reports with stored fixtures");
  app.add_option("--write-fixtures", write_dir, "store preset reports as fixtures");
  CLI11_PARSE(app, argc, argv);
  g_out = out;

  bool all_pass = true;
  const bool fixtures_only = selected.empty() && (!check_dir.empty() || !write_dir.empty());
  for (const auto& c : criteria()) {
    if (fixtures_only) break;
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    std::printf("criterion %02d %-30s [%s] %s\n", c.id, c.name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && v.pass;
  }
  if (!write_dir.empty()) write_fixtures(write_dir);
  if (!check_dir.empty()) all_pass = check_fixtures(check_dir) && all_pass;
  return all_pass ? 0 : 1;
}
