#include "thermohf_app/commands.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "thermohf/errors.hpp"
#include "thermohf/harmonic_oscillator.hpp"
#include "thermohf/ising.hpp"
#include "thermohf/lipkin.hpp"
#include "thermohf_app/output.hpp"

namespace thermohf::app {

namespace {

std::unique_ptr<ParametricModel> make_model(const RunConfig& c) {
  switch (c.model) {
    case ModelKind::ho:
      // λ is sampled down to 1 − h, which sets the slowest-decaying level spacing.
      return std::make_unique<ho::Model>(ho::truncation_for(c.t_max, 1.0 - c.diff.relative_step));
    case ModelKind::ising: {
      ising::Params p;
      p.coupling_j = c.coupling_j;
      p.field_h = c.field_h;
      p.n_spins = static_cast<std::size_t>(c.n);
      return std::make_unique<ising::Model>(p, c.coupling);
    }
    case ModelKind::lipkin: {
      lipkin::Params p;
      p.n_particles = c.n;
      p.epsilon = c.epsilon;
      p.v_coupling = c.v_coupling;
      return std::make_unique<lipkin::Model>(p);
    }
  }
  throw UsageError("unknown model");
}

bool isatty_stdout() { return ::isatty(::fileno(stdout)) != 0; }

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, const RunConfig& config) {
  if (config.format == OutputFormat::csv) {
    write_csv(out, rows);
  } else {
    write_json(out, rows, config);
  }
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& config) {
  std::unique_ptr<ParametricModel> model;
  try {
    model = make_model(config);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto grid = temperature_grid(config.t_min, config.t_max, config.t_steps, config.grid);
  SweepOptions options;
  options.diff = config.diff;
  return hf_sweep(*model, grid, options);
}

int cmd_sweep(const RunConfig& config, std::ostream& stdout_stream, std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    rows = run_sweep(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return exit_code::numerical;
  }

  if (config.out.empty() || config.out == "-") {
    write_rows(stdout_stream, rows, config);
    return exit_code::ok;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << config.out << "' for writing\n";
    return exit_code::usage;
  }
  write_rows(file, rows, config);
  return exit_code::ok;
}

int cmd_verify(const VerifySettings& settings, std::ostream& out, std::ostream& err, bool color) {
  std::vector<CheckResult> results;
  try {
    results = run_verify(settings);
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return exit_code::numerical;
  }
  return print_report(out, results, color) ? exit_code::ok : exit_code::verification_failed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical-ensemble thermodynamics and finite-temperature Hellmann-Feynman checks"};
  app.require_subcommand(1);

  KeyValues sweep_values;
  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "Temperature sweep of one model");
  // --h is the field strength here, so help is long-form only.
  sweep->set_help_flag("--help", "Print this help message and exit");
  for (std::string_view key : kConfigKeys) {
    sweep->add_option("--" + std::string(key), sweep_values[std::string(key)]);
  }
  sweep->add_option("--config", config_path, "Flat key = value file; flags take precedence");

  std::string fig_model;
  std::string fig_format = "csv";
  std::string fig_out;
  auto* fig = app.add_subcommand("fig", "Sweep with the figure parameters");
  fig->add_option("model", fig_model, "ho, ising or lipkin")->required();
  fig->add_option("--format", fig_format);
  fig->add_option("--out", fig_out);

  std::string scope = "all";
  double tolerance_scale = 1.0;
  int oracle_n = 0;
  auto* verify = app.add_subcommand("verify", "Run the identity and oracle checks");
  verify->add_option("--scope", scope, "all, ho, ising or lipkin");
  verify->add_option("--tol-scale", tolerance_scale, "Multiply every tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--N", oracle_n, "Oracle size: largest enumerated Ising chain and Lipkin Fock-space N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*sweep) {
      KeyValues flags;
      for (std::string_view key : kConfigKeys) {
        if (sweep->count("--" + std::string(key)) > 0) flags[std::string(key)] = sweep_values[std::string(key)];
      }
      const KeyValues file = config_path.empty() ? KeyValues{} : read_config_file(config_path);
      return cmd_sweep(resolve_run_config(flags, file), out, err);
    }
    if (*fig) {
      KeyValues flags{{"model", fig_model}, {"format", fig_format}};
      if (!fig_out.empty()) flags["out"] = fig_out;
      return cmd_sweep(resolve_run_config(flags, {}), out, err);
    }
    VerifySettings settings;
    settings.scope = parse_scope(scope);
    settings.tolerance_scale = tolerance_scale;
    if (oracle_n != 0) {
      if (oracle_n < 2 || oracle_n > 12) throw UsageError("verify --N must lie in [2, 12]");
      settings.ising_max_spins = oracle_n;
      settings.lipkin_fock_particles = oracle_n;
    }
    const char* no_color = std::getenv("NO_COLOR");
    const bool color = (no_color == nullptr || *no_color == '\0') && &out == &std::cout && isatty_stdout();
    return cmd_verify(settings, out, err, color);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace thermohf::app
