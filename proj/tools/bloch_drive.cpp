// bloch-drive: scenario runner for driven tight-binding lattices.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/scenarios/config.hpp"
#include "blochdrive/scenarios/runner.hpp"

namespace bd = blochdrive;

namespace {

enum Exit { kPass = 0, kTolerance = 1, kConfig = 2, kAbort = 3 };

struct CommonFlags {
  std::optional<std::string> scenario;
  std::optional<std::string> config;
  std::optional<std::string> out_dir;
  std::optional<double> eps;
  std::optional<double> t_end;
  std::optional<std::string> method;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--scenario", f.scenario, "preset name (see list-scenarios)");
  cmd->add_option("--config", f.config, "JSON config file; keys override the preset");
  cmd->add_option("--out-dir", f.out_dir, "output directory");
  cmd->add_option("--eps", f.eps, "time step");
  cmd->add_option("--t-end", f.t_end, "final time in units of 1/J");
  cmd->add_option("--method", f.method, "exact_diag or split_step");
}

// flag > BLOCH_DRIVE_OUT > config file
std::string output_directory(const std::optional<std::string>& flag, const std::string& fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BLOCH_DRIVE_OUT"); env && *env) return env;
  return fallback;
}

bd::ScenarioConfig resolve(const CommonFlags& f) {
  nlohmann::json doc = nlohmann::json::object();
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw bd::ConfigError("cannot open config '" + *f.config + "'");
    try {
      doc = nlohmann::json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
      throw bd::ConfigError("config '" + *f.config + "': " + e.what());
    }
  }
  if (f.scenario) doc["scenario"] = *f.scenario;
  if (f.eps) doc["grid"]["eps"] = *f.eps;
  if (f.t_end) doc["grid"]["t_end"] = *f.t_end;
  if (f.method) doc["grid"]["method"] = *f.method;
  auto config = bd::parse_config(doc);
  config.output.directory = output_directory(f.out_dir, config.output.directory);
  config.validate();
  return config;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw bd::ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const bd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const bd::ArgumentError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const bd::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const bd::BoundaryContaminationError& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return kAbort;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return kAbort;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven 1D tight-binding lattice simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags, predict_flags;
  auto* run = app.add_subcommand("run", "numeric run plus analytic comparison report");
  add_common(run, run_flags);
  auto* predict = app.add_subcommand("predict", "analytic predictions only");
  add_common(predict, predict_flags);

  std::optional<std::string> config_a, config_b, trains_out;
  double sawtooth_width = 3.0, train_tolerance = 1e-2;
  auto* trains = app.add_subcommand("compare-trains", "compare two pulse trains with matched impulses");
  trains->add_option("--config-a", config_a, "first train (default: pulse_train preset)");
  trains->add_option("--config-b", config_b, "second train (default: sawtooth version of the first)");
  trains->add_option("--sawtooth-width", sawtooth_width, "pulse width of the default sawtooth train");
  trains->add_option("--tolerance", train_tolerance, "L2 distance tolerance");
  trains->add_option("--out-dir", trains_out, "output directory");

  std::optional<std::string> sweep_config, sweep_out;
  std::vector<int> sweep_n;
  std::vector<double> sweep_fa;
  std::optional<double> omega_min, omega_max, sweep_k0;
  std::optional<int> omega_count;
  auto* sweep = app.add_subcommand("sweep", "maximum shaking amplitude against frequency");
  sweep->add_option("--config", sweep_config, "JSON config with a sweep block");
  sweep->add_option("--out-dir", sweep_out, "output directory");
  sweep->add_option("--n", sweep_n, "Bessel orders");
  sweep->add_option("--F-A", sweep_fa, "ac amplitudes");
  sweep->add_option("--omega-min", omega_min);
  sweep->add_option("--omega-max", omega_max);
  sweep->add_option("--omega-count", omega_count);
  sweep->add_option("--k0", sweep_k0, "central momentum");

  app.add_subcommand("list-scenarios", "list the presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  if (run->parsed()) {
    return guarded([&] {
      const auto config = resolve(run_flags);
      const auto outcome = bd::run_scenario(config);
      std::cout << outcome.report.render(config.output.precision);
      std::cout << "output " << outcome.directory.string() << '\n';
      return outcome.exit_code();
    });
  }
  if (predict->parsed()) {
    return guarded([&] {
      std::cout << bd::predict_scenario(resolve(predict_flags));
      return int{kPass};
    });
  }
  if (trains->parsed()) {
    return guarded([&] {
      const auto a = config_a ? bd::load_config(*config_a) : bd::preset(bd::ScenarioKind::pulse_train);
      const auto b = config_b ? bd::load_config(*config_b) : bd::sawtooth_variant(a, sawtooth_width);
      const auto report = bd::compare_trains(a, b, train_tolerance);
      const std::string dir = output_directory(trains_out, "out/compare_trains");
      write_text(std::filesystem::path(dir) / "report.txt", report.render());
      std::cout << report.render();
      return report.passed() ? int{kPass} : int{kTolerance};
    });
  }
  if (sweep->parsed()) {
    return guarded([&] {
      auto config = sweep_config ? bd::load_config(*sweep_config) : bd::preset(bd::ScenarioKind::shaking_sweep);
      if (config.scenario != bd::ScenarioKind::shaking_sweep) {
        auto base = bd::preset(bd::ScenarioKind::shaking_sweep);
        base.sweep = config.sweep;
        base.lattice = config.lattice;
        base.packet = config.packet;
        config = base;
      }
      if (!sweep_n.empty()) config.sweep.n_values = sweep_n;
      if (!sweep_fa.empty()) config.sweep.F_A_values = sweep_fa;
      if (omega_min) config.sweep.omega_min = *omega_min;
      if (omega_max) config.sweep.omega_max = *omega_max;
      if (omega_count) config.sweep.omega_count = *omega_count;
      if (sweep_k0) config.packet.k0 = *sweep_k0;
      config.output.directory = output_directory(sweep_out, config.output.directory);
      const auto outcome = bd::run_scenario(config);
      std::cout << outcome.report.render(config.output.precision);
      std::cout << "output " << outcome.directory.string() << '\n';
      return outcome.exit_code();
    });
  }
  for (auto kind : bd::preset_kinds()) std::cout << bd::to_string(kind) << "  " << bd::describe(kind) << '\n';
  std::cout << bd::to_string(bd::ScenarioKind::custom) << "  " << bd::describe(bd::ScenarioKind::custom) << '\n';
  return kPass;
}
