#include "blochdrive/scenarios/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "blochdrive/analytic/bessel.hpp"
#include "blochdrive/analytic/packet.hpp"
#include "blochdrive/analytic/predictors.hpp"
#include "blochdrive/analytic/propagators.hpp"
#include "blochdrive/core/errors.hpp"
#include "blochdrive/scenarios/analysis.hpp"
#include "blochdrive/scenarios/csv.hpp"

namespace blochdrive {

namespace fs = std::filesystem;

namespace {

using Meta = std::vector<std::pair<std::string, std::string>>;

struct Arm {
  std::string label;
  LatticeSpec lattice;
  Drive drive;
  EvolutionResult result;
};

Drive drive_for(const ScenarioConfig& c, const LatticeSpec& lattice) {
  if (lattice.is_chain()) return *c.field;
  return c.flux_profile();
}

EvolutionResult run_arm(const ScenarioConfig& c, const LatticeSpec& lattice, const Drive& drive) {
  const StateVector initial = gwp_build(c.packet, lattice);
  RunOptions opts;
  opts.method = c.grid.method;
  opts.sample_every = c.grid.sample_every;
  opts.snapshot_every = c.grid.snapshot_every;
  return run_evolution(initial, lattice, drive, TimeGrid::with_step(0.0, c.grid.t_end, c.grid.eps),
                       opts);
}

Arm make_arm(std::string label, const ScenarioConfig& c, const LatticeSpec& lattice) {
  Arm a{std::move(label), lattice, drive_for(c, lattice), {}};
  a.result = run_arm(c, lattice, a.drive);
  return a;
}

const field::AcDc& ac_dc(const ScenarioConfig& c) { return *c.field->get_if<field::AcDc>(); }

Meta run_meta(const ScenarioConfig& c, const TimeScale& ts, std::string_view arm,
              const LatticeSpec& lattice) {
  const int p = c.output.precision;
  return {{"scenario", std::string(to_string(c.scenario))},
          {"arm", std::string(arm)},
          {"time_unit", ts.unit},
          {"time_scale", format_number(ts.scale, p)},
          {"lattice", std::string(lattice.is_chain() ? "chain" : "ring")},
          {"sites", std::to_string(c.lattice.sites)},
          {"hopping", format_number(c.lattice.hopping, p)},
          {"k0", format_number(c.packet.k0, p)},
          {"center", format_number(c.packet.center, p)},
          {"alpha", format_number(c.packet.alpha, p)},
          {"method", std::string(to_string(c.grid.method))},
          {"eps", format_number(TimeGrid::with_step(0.0, c.grid.t_end, c.grid.eps).step(), p)}};
}

void write_observables(const fs::path& path, const ObservableSeries& series, const Meta& meta,
                       const TimeScale& ts, int precision) {
  CsvWriter w(path, {"t", "center", "width", "k_center", "v_g", "norm", "edge_occupancy"}, meta,
              precision);
  for (const auto& s : series.samples)
    w.row({s.t / ts.scale, s.center, s.width, s.central_momentum, s.group_velocity, s.norm,
           s.edge_occupancy});
}

void write_envelope(const fs::path& path, const std::vector<Snapshot>& snapshots, const Meta& meta,
                    const TimeScale& ts, int precision) {
  CsvWriter w(path, {"t", "j", "probability"}, meta, precision);
  for (const auto& snap : snapshots) {
    const auto probs = snap.state.probabilities();
    for (std::size_t j = 0; j < probs.size(); ++j)
      w.row({snap.t / ts.scale, static_cast<double>(j), probs[j]});
  }
}

// Slow mean of D(t) for the presets that have one; D itself otherwise.
double mean_displacement(const ScenarioConfig& c, double t, double D) {
  const double J = c.lattice.hopping;
  switch (c.scenario) {
    case ScenarioKind::bloch_translation:
    case ScenarioKind::dynamic_localization:
    case ScenarioKind::ring_chain_equivalence: {
      const auto& f = ac_dc(c);
      if (f.delta != 0.0) break;
      return predict_bloch_translation(f.n, f.F_A, f.omega, J, c.packet.k0).drift_velocity * t;
    }
    case ScenarioKind::super_bloch: {
      const auto& f = ac_dc(c);
      return super_bloch_mean_displacement(f.n, f.delta, f.F_A, f.omega, J, c.packet.k0, t);
    }
    default:
      break;
  }
  return D;
}

std::vector<EvolvedPacket> predicted_packets(const ScenarioConfig& c, std::span<const double> times) {
  if (c.lattice.is_chain()) return gwp_evolve_series(c.packet, *c.field, c.lattice.hopping, times);
  return gwp_evolve_series(c.packet, c.flux_profile(), c.lattice.hopping, times);
}

double predicted_velocity(const ScenarioConfig& c, double t) {
  if (c.lattice.is_chain()) return group_velocity(c.packet, *c.field, c.lattice.hopping, t);
  return group_velocity(c.packet, c.flux_profile(), c.lattice.hopping, t);
}

void write_predicted(const fs::path& path, const ScenarioConfig& c, std::span<const double> times,
                     const Meta& meta, const TimeScale& ts) {
  const auto packets = predicted_packets(c, times);
  CsvWriter w(path, {"t", "D", "D_bar", "v_g", "center", "k_center"}, meta, c.output.precision);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto& p = packets[i];
    w.row({times[i] / ts.scale, p.displacement, mean_displacement(c, times[i], p.displacement),
           predicted_velocity(c, times[i]), p.center, p.k_center});
  }
}

// Mean velocity from the center at the start and at the last whole period.
double mean_drift(const ObservableSeries& series, double period) {
  const auto t = sample_times(series);
  const auto x = column(series, &ObservableSample::center);
  const double periods = std::floor(t.back() / period + 1e-9);
  if (periods < 1) throw StateError("run shorter than one drive period");
  const double span = periods * period;
  return (interpolate_at(t, x, span) - interpolate_at(t, x, 0.0)) / span;
}

void report_bloch_oscillation(const ScenarioConfig& c, const ObservableSeries& s,
                              ComparisonReport& r) {
  const double F0 = c.field->get_if<field::Constant>()->F0;
  const auto pred = predict_bloch_oscillation(F0, c.lattice.hopping, c.packet.k0);
  const auto t = sample_times(s);
  const auto x = column(s, &ObservableSample::center);
  r.add("period", pred.period, measure_period(t, x), c.tolerance("period_rel"), Check::relative);
  r.add("extent", pred.extent, peak_to_peak(x), c.tolerance("extent_rel"), Check::relative);
}

void report_bloch_translation(const ScenarioConfig& c, const Arm& arm, ComparisonReport& r) {
  const auto& f = ac_dc(c);
  const double J = c.lattice.hopping;
  const auto pred = predict_bloch_translation(f.n, f.F_A, f.omega, J, c.packet.k0);
  const double tau = kTwoPi / f.omega;
  const auto& s = arm.result.series;
  const double drift = mean_drift(s, tau);
  r.add("drift_velocity", pred.drift_velocity, drift, c.tolerance("drift_rel"), Check::relative);

  double shake = 0.0;
  const double x0 = s[0].center;
  for (const auto& sample : s.samples)
    shake = std::max(shake, std::abs(sample.center - x0 - pred.drift_velocity * sample.t));
  r.add("shaking_max", pred.shaking_max, shake, c.tolerance("shaking_rel"), Check::relative);

  const StateVector initial = gwp_build(c.packet, c.lattice);
  double worst = 1.0;
  for (const auto& snap : arm.result.snapshots) {
    if (snap.t == 0.0) continue;
    const auto exact = chain_propagate_state(initial, *c.field, c.lattice, 0.0, snap.t);
    worst = std::min(worst, fidelity(exact, snap.state));
  }
  r.add("min_fidelity", 1.0, worst, 1.0 - c.tolerance("fidelity_min"), Check::absolute);
}

void report_super_bloch(const ScenarioConfig& c, const ObservableSeries& s, ComparisonReport& r) {
  const auto& f = ac_dc(c);
  const auto pred =
      predict_super_bloch(f.n, f.delta, f.F_A, f.omega, c.lattice.hopping, c.packet.k0);
  const auto t = sample_times(s);
  const auto x = column(s, &ObservableSample::center);
  const double dt = t.size() > 1 ? t[1] - t[0] : 1.0;
  // average out the fast shaking over one drive period
  const int window = std::max(1, static_cast<int>(std::lround(kTwoPi / f.omega / dt)));
  const auto smooth = moving_average(x, window);
  r.add("period", pred.period, measure_period(t, smooth), c.tolerance("period_rel"),
        Check::relative);
  r.add("extent", pred.extent, peak_to_peak(smooth), c.tolerance("extent_rel"), Check::relative);
}

void report_pulse_train(const ScenarioConfig& c, const ObservableSeries& s, ComparisonReport& r) {
  const auto centers = c.field->pulse_centers();
  const auto half = c.field->pulse_half_widths();
  const auto t = sample_times(s);
  const auto x = column(s, &ObservableSample::center);
  for (std::size_t p = 0; p < centers.size(); ++p) {
    const double quiet_start = centers[p] + half[p];
    const double quiet_end = p + 1 < centers.size() ? centers[p + 1] - half[p + 1] : c.grid.t_end;
    if (!(quiet_end > quiet_start)) throw ConfigError("pulse_train: pulses leave no quiet time");
    const double mid = 0.5 * (quiet_start + quiet_end);
    const auto k_pred = gwp_evolve_params(c.packet, *c.field, c.lattice.hopping, mid).k_center;
    const double k_meas = s[nearest_sample(s, mid)].central_momentum;
    r.add("momentum_after_pulse_" + std::to_string(p + 1), k_pred, k_meas,
          c.tolerance("momentum_abs"), Check::circular);
    const double v_pred = predicted_velocity(c, mid);
    const double v_meas = (interpolate_at(t, x, quiet_end) - interpolate_at(t, x, quiet_start)) /
                          (quiet_end - quiet_start);
    r.add("velocity_plateau_" + std::to_string(p + 1), v_pred, v_meas,
          c.tolerance("velocity_abs") * c.lattice.hopping, Check::absolute);
  }
}

void report_custom(const ScenarioConfig& c, const ObservableSeries& s, ComparisonReport& r) {
  const auto t = sample_times(s);
  const auto packets = predicted_packets(c, t);
  double center_err = 0.0, k_err = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    center_err = std::max(center_err, std::abs(s[i].center - packets[i].center));
    if (!std::isnan(s[i].central_momentum))
      k_err = std::max(k_err, circular_distance(s[i].central_momentum, packets[i].k_center));
  }
  r.add("max_center_error", 0.0, center_err, c.tolerance("center_abs"), Check::absolute);
  r.add("max_momentum_error", 0.0, k_err, c.tolerance("momentum_abs"), Check::absolute);
}

double max_distance(const Arm& a, const Arm& b) {
  if (a.result.snapshots.size() != b.result.snapshots.size())
    throw StateError("arms produced different snapshot counts");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.result.snapshots.size(); ++i)
    worst = std::max(worst, probability_distance(a.result.snapshots[i].state,
                                                 b.result.snapshots[i].state));
  return worst;
}

ScenarioConfig detuned(const ScenarioConfig& c, double factor) {
  ScenarioConfig d = c;
  auto f = ac_dc(c);
  f.F_A *= factor;
  d.field = f;
  d.grid.snapshot_every = 0;
  return d;
}

void write_report(const fs::path& dir, const ComparisonReport& r, int precision) {
  std::ofstream out(dir / "report.txt", std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write report in '" + dir.string() + "'");
  out << r.render(precision);
}

ScenarioOutcome run_sweep_scenario(const ScenarioConfig& c) {
  ScenarioOutcome out{ComparisonReport(std::string(to_string(c.scenario))), c.output.directory, {}};
  fs::create_directories(out.directory);
  const auto points = sweep_shaking(c.sweep, c.lattice.hopping, c.packet.k0);
  write_sweep_csv(out.directory / "sweep.csv", points, c.output.precision);
  const double J = c.lattice.hopping;
  const double low = shaking_max(1, 1.0, 1.0, J, c.packet.k0);
  const double high = shaking_max(1, 1.0, 10.0, J, c.packet.k0);
  out.report.note("shaking_max(n=1, F_A=1) at omega=1 over omega=10");
  out.report.add("suppression_ratio", c.tolerance("suppression_ratio"), low / high, 0.0,
                 Check::at_least);
  write_report(out.directory, out.report, c.output.precision);
  return out;
}

}  // namespace

TimeScale time_scale(const ScenarioConfig& c) {
  const double J = c.lattice.hopping;
  switch (c.scenario) {
    case ScenarioKind::bloch_translation:
    case ScenarioKind::dynamic_localization:
    case ScenarioKind::ring_chain_equivalence:
      if (c.field && c.field->get_if<field::AcDc>()) return {"tau", kTwoPi / ac_dc(c).omega};
      break;
    case ScenarioKind::super_bloch: {
      const auto& f = ac_dc(c);
      return {"tau_sbo", kTwoPi / std::abs(f.delta * f.omega)};
    }
    case ScenarioKind::pulse_train:
      return {"N/2J", c.lattice.sites / (2.0 * J)};
    default:
      break;
  }
  return {"1/J", 1.0 / J};
}

ScenarioOutcome run_scenario(const ScenarioConfig& c) {
  c.validate();
  if (c.scenario == ScenarioKind::shaking_sweep) return run_sweep_scenario(c);

  ScenarioOutcome out{ComparisonReport(std::string(to_string(c.scenario))), c.output.directory, {}};
  const TimeScale ts = time_scale(c);
  const int precision = c.output.precision;

  std::vector<Arm> arms;
  if (c.scenario == ScenarioKind::ring_chain_equivalence) {
    const auto ring = LatticeSpec::ring(c.lattice.sites, c.lattice.hopping);
    auto ring_arm = std::async(std::launch::async, [&] { return make_arm("ring", c, ring); });
    arms.push_back(make_arm("chain", c, c.lattice));
    arms.push_back(ring_arm.get());
  } else if (c.scenario == ScenarioKind::dynamic_localization) {
    const auto up = detuned(c, 1.1), down = detuned(c, 0.9);
    auto a_up = std::async(std::launch::async, [&] { return make_arm("detuned_up", up, up.lattice); });
    auto a_down =
        std::async(std::launch::async, [&] { return make_arm("detuned_down", down, down.lattice); });
    arms.push_back(make_arm("main", c, c.lattice));
    arms.push_back(a_up.get());
    arms.push_back(a_down.get());
  } else {
    arms.push_back(make_arm("main", c, c.lattice));
  }

  const Arm& main = arms.front();
  const auto& series = main.result.series;
  auto& report = out.report;
  switch (c.scenario) {
    case ScenarioKind::bloch_oscillation:
      report_bloch_oscillation(c, series, report);
      break;
    case ScenarioKind::bloch_translation:
      report_bloch_translation(c, main, report);
      break;
    case ScenarioKind::dynamic_localization: {
      const auto& f = ac_dc(c);
      const double tau = kTwoPi / f.omega;
      const double J = c.lattice.hopping;
      report.add("drift_speed", 0.0, std::abs(mean_drift(series, tau)),
                 c.tolerance("drift_max") * J, Check::absolute);
      const char* names[] = {"", "drift_speed_plus_10pct", "drift_speed_minus_10pct"};
      const double factors[] = {1.0, 1.1, 0.9};
      for (int i = 1; i < 3; ++i) {
        const double pred = std::abs(
            predict_bloch_translation(f.n, f.F_A * factors[i], f.omega, J, c.packet.k0).drift_velocity);
        const double meas = std::abs(mean_drift(arms[i].result.series, tau));
        report.add(names[i], pred, meas, c.tolerance("detuned_drift_rel"), Check::relative);
        report.add(std::string(names[i]) + "_floor", c.tolerance("detuned_drift_min") * J, meas, 0.0,
                   Check::at_least);
      }
      break;
    }
    case ScenarioKind::super_bloch:
      report_super_bloch(c, series, report);
      break;
    case ScenarioKind::pulse_train:
      report_pulse_train(c, series, report);
      break;
    case ScenarioKind::ring_chain_equivalence:
      report.add("max_probability_distance", 0.0, max_distance(arms[0], arms[1]),
                 c.tolerance("distance_max"), Check::absolute);
      break;
    case ScenarioKind::custom:
    case ScenarioKind::shaking_sweep:
      report_custom(c, series, report);
      break;
  }

  fs::create_directories(out.directory);
  for (const auto& arm : arms) {
    const std::string suffix = arm.label == "main" || arm.label == "chain" ? "" : "_" + arm.label;
    const Meta meta = run_meta(c, ts, arm.label, arm.lattice);
    write_observables(out.directory / ("observables" + suffix + ".csv"), arm.result.series, meta, ts,
                      precision);
    if (!arm.result.snapshots.empty())
      write_envelope(out.directory / ("envelope" + suffix + ".csv"), arm.result.snapshots, meta, ts,
                     precision);
    out.runs.emplace_back(arm.label, arm.result.series);
  }
  write_predicted(out.directory / "predicted.csv", c, sample_times(series), run_meta(c, ts, "main", c.lattice), ts);
  {
    std::ofstream cfg(out.directory / "config.json", std::ios::binary | std::ios::trunc);
    cfg << to_json(c).dump(2) << '\n';
  }
  write_report(out.directory, report, precision);
  return out;
}

std::string predict_scenario(const ScenarioConfig& c) {
  c.validate();
  std::ostringstream s;
  s << "scenario " << to_string(c.scenario) << '\n';
  const double J = c.lattice.hopping;
  const double k0 = c.packet.k0;
  if (c.scenario == ScenarioKind::shaking_sweep) {
    fs::create_directories(c.output.directory);
    write_sweep_csv(fs::path(c.output.directory) / "sweep.csv", sweep_shaking(c.sweep, J, k0),
                    c.output.precision);
    s << "wrote " << (fs::path(c.output.directory) / "sweep.csv").string() << '\n';
    return s.str();
  }

  const auto line = [&](const PhenomenonPrediction& p) {
    s << "phenomenon " << to_string(p.kind) << '\n'
      << "period " << format_number(p.period) << '\n'
      << "extent " << format_number(p.extent) << '\n'
      << "drift_velocity " << format_number(p.drift_velocity) << '\n'
      << "effective_hopping " << format_number(p.effective_hopping) << '\n'
      << "effective_force " << format_number(p.effective_force) << '\n'
      << "shaking_max " << format_number(p.shaking_max) << '\n';
  };
  if (c.field) {
    if (const auto* f = c.field->get_if<field::Constant>(); f && f->F0 != 0.0)
      line(predict_bloch_oscillation(f->F0, J, k0));
    if (const auto* f = c.field->get_if<field::AcDc>()) {
      if (f->delta != 0.0)
        line(predict_super_bloch(f->n, f->delta, f->F_A, f->omega, J, k0));
      else if (std::abs(bessel_jn_signed(f->n, f->F_A / f->omega)) < 1e-6)
        line(predict_dynamic_localization(f->n, f->F_A, f->omega, J, k0));
      else
        line(predict_bloch_translation(f->n, f->F_A, f->omega, J, k0));
    }
  }

  const TimeScale ts = time_scale(c);
  const auto grid = TimeGrid::with_step(0.0, c.grid.t_end, c.grid.eps);
  std::vector<double> times;
  for (int n = 0; n <= grid.steps; n += c.grid.sample_every) times.push_back(grid.time(n));
  if (times.back() != grid.t_end) times.push_back(grid.t_end);
  fs::create_directories(c.output.directory);
  write_predicted(fs::path(c.output.directory) / "predicted.csv", c, times, run_meta(c, ts, "main", c.lattice), ts);
  s << "wrote " << (fs::path(c.output.directory) / "predicted.csv").string() << '\n';
  return s.str();
}

std::vector<ShakingPoint> sweep_shaking(const SweepConfig& sw, double J, double k0) {
  if (!(sw.omega_min > 0.0) || !(sw.omega_max > sw.omega_min) || sw.omega_count < 2)
    throw ArgumentError("sweep_shaking: omega range must be positive and increasing");
  std::vector<ShakingPoint> points;
  for (int n : sw.n_values) {
    for (double F_A : sw.F_A_values) {
      double previous = std::numeric_limits<double>::infinity();
      for (int i = 0; i < sw.omega_count; ++i) {
        const double omega =
            sw.omega_min + (sw.omega_max - sw.omega_min) * i / static_cast<double>(sw.omega_count - 1);
        ShakingPoint p;
        p.n = n;
        p.F_A = F_A;
        p.omega = omega;
        p.shaking_max = shaking_max(n, F_A, omega, J, k0);
        p.drift_velocity = predict_bloch_translation(n, F_A, omega, J, k0).drift_velocity;
        p.monotone = p.shaking_max <= previous;
        previous = p.shaking_max;
        points.push_back(p);
      }
    }
  }
  return points;
}

void write_sweep_csv(const fs::path& path, const std::vector<ShakingPoint>& points, int precision) {
  CsvWriter w(path, {"n", "F_A", "omega", "shaking_max", "drift_velocity", "monotone"},
              {{"scenario", "shaking_sweep"}, {"time_unit", "1/J"}, {"time_scale", "1"}}, precision);
  for (const auto& p : points)
    w.row({static_cast<double>(p.n), p.F_A, p.omega, p.shaking_max, p.drift_velocity,
           p.monotone ? 1.0 : 0.0});
}

ScenarioConfig sawtooth_variant(const ScenarioConfig& gaussian, double width) {
  if (!gaussian.field || gaussian.field->pulse_centers().empty())
    throw ArgumentError("sawtooth_variant: config has no pulse train");
  const auto centers = gaussian.field->pulse_centers();
  const auto impulses = gaussian.field->pulse_impulses();
  field::SawtoothTrain train;
  for (std::size_t i = 0; i < centers.size(); ++i) train.pulses.push_back({centers[i], width, impulses[i]});
  ScenarioConfig out = gaussian;
  out.field = train;
  out.output.directory = gaussian.output.directory + "_sawtooth";
  return out;
}

namespace {

// States at the requested times, reached by evolving segment by segment.
std::vector<StateVector> states_at(const ScenarioConfig& c, std::span<const double> times) {
  std::vector<StateVector> out;
  StateVector psi = gwp_build(c.packet, c.lattice);
  RunOptions opts;
  opts.method = c.grid.method;
  opts.sample_every = std::numeric_limits<int>::max();
  double t0 = 0.0;
  for (double t : times) {
    if (t > t0) {
      const auto grid = TimeGrid::with_step(t0, t, c.grid.eps);
      psi = run_evolution(psi, c.lattice, *c.field, grid, opts).final_state;
    }
    out.push_back(psi);
    t0 = t;
  }
  return out;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

}  // namespace

ComparisonReport compare_trains(const ScenarioConfig& a, const ScenarioConfig& b, double tolerance) {
  for (const auto* c : {&a, &b}) {
    c->validate();
    if (!c->lattice.is_chain() || !c->field || c->field->pulse_centers().empty())
      throw ArgumentError("compare_trains: both configs need a chain with a pulse train");
  }
  const auto ia = a.field->pulse_impulses(), ib = b.field->pulse_impulses();
  const auto ca = a.field->pulse_centers(), cb = b.field->pulse_centers();
  if (ia.size() != ib.size()) throw ArgumentError("compare_trains: trains have different pulse counts");
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (!close(ia[i], ib[i]))
      throw ArgumentError("compare_trains: pulse " + std::to_string(i + 1) + " impulses differ");
    if (!close(ca[i], cb[i]))
      throw ArgumentError("compare_trains: pulse " + std::to_string(i + 1) + " timing differs");
  }
  if (a.lattice.sites != b.lattice.sites || a.lattice.hopping != b.lattice.hopping ||
      a.packet.k0 != b.packet.k0 || a.packet.center != b.packet.center ||
      a.packet.alpha != b.packet.alpha || a.grid.t_end != b.grid.t_end)
    throw ArgumentError("compare_trains: lattice, packet or duration differ");

  const auto ha = a.field->pulse_half_widths(), hb = b.field->pulse_half_widths();
  std::vector<double> times;
  for (std::size_t p = 0; p < ca.size(); ++p) {
    const double start = ca[p] + std::max(ha[p], hb[p]);
    const double end = p + 1 < ca.size() ? ca[p + 1] - std::max(ha[p + 1], hb[p + 1]) : a.grid.t_end;
    if (!(end > start)) throw ArgumentError("compare_trains: no quiet time after pulse " + std::to_string(p + 1));
    times.push_back(p + 1 < ca.size() ? 0.5 * (start + end) : end);
  }

  auto arm_b = std::async(std::launch::async, [&] { return states_at(b, times); });
  const auto sa = states_at(a, times);
  const auto sb = arm_b.get();

  ComparisonReport r("compare_trains");
  r.note(a.field->type_name() + " vs " + b.field->type_name());
  for (std::size_t i = 0; i < times.size(); ++i)
    r.add("distance_after_pulse_" + std::to_string(i + 1), 0.0, probability_distance(sa[i], sb[i]),
          tolerance, Check::absolute);
  return r;
}

}  // namespace blochdrive
