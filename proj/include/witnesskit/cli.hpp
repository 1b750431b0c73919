#pragma once

// Command-line front end. `run` is the whole program minus process setup so that
// tests can drive it with an argument vector and capture both streams.
//
// Exit codes: 0 success, 2 input error, 3 precondition violation.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "witnesskit/criteria.hpp"
#include "witnesskit/io.hpp"
#include "witnesskit/maps.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/version.hpp"
#include "witnesskit/witness.hpp"

namespace witnesskit::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kPreconditionError = 3 };

struct SweepRow {
  double a;
  double q_trace_norm;
  double threshold;
  bool detected;
};

/// Grid of `steps` points between lo and hi (inclusive), geometric if `log`.
inline std::vector<double> sweep_grid(double lo, double hi, int steps, bool log) {
  if (!(lo > 0.0) || !(hi > lo)) throw ValueError("sweep range must satisfy 0 < min < max");
  if (steps < 1) throw ValueError("sweep needs at least one step");
  std::vector<double> grid;
  grid.reserve(std::size_t(steps));
  for (int i = 0; i < steps; ++i) {
    const double u = steps == 1 ? 0.0 : double(i) / double(steps - 1);
    grid.push_back(log ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u);
  }
  return grid;
}

/// de Vicente value of rho4(a) over the grid; threshold 3/4.
inline std::vector<SweepRow> sweep_rho4(const std::vector<double>& grid) {
  std::vector<SweepRow> rows(grid.size());
  const double threshold = devicente_threshold(4, 4);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double q = devicente_value(correlation_data(rho4({grid[i]}), 4, 4));
    rows[i] = {grid[i], q, threshold, exceeds(q, threshold)};
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "a,q_trace_norm,threshold,detected\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s\n", r.a, r.q_trace_norm, r.threshold,
                  r.detected ? "true" : "false");
    out += buf;
  }
  return out;
}

namespace detail {

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open for writing");
  f << text;
}

inline std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive maps, entanglement witnesses and correlation-matrix separability criteria",
               "witnesskit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  double load_tol = io::kDefaultLoadTolerance;
  std::uint64_t seed = 12345;
  app.add_option("--tol", load_tol, "Hermiticity / unit-trace tolerance when loading documents")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomised commands");

  std::string output;

  auto* detect_cmd = app.add_subcommand("detect", "Run all separability criteria on a state document");
  std::string state_file;
  std::vector<double> x1s;
  std::vector<double> x2s;
  detect_cmd->add_option("state", state_file, "State JSON file")->required();
  detect_cmd->add_option("--x1", x1s, "Filter parameter x1 (repeatable, paired with --x2)")->take_all();
  detect_cmd->add_option("--x2", x2s, "Filter parameter x2 (repeatable, paired with --x1)")->take_all();
  detect_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  auto* certify_cmd = app.add_subcommand("certify-map", "Positivity and complete-positivity certificates");
  std::string map_file;
  certify_cmd->add_option("mapspec", map_file, "MapSpec JSON file")->required();
  certify_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep-a", "de Vicente value of the 4x4 family over a grid of a");
  double sweep_min = 0.05;
  double sweep_max = 20.0;
  double sweep_cap = 1e3;
  int sweep_steps = 50;
  bool sweep_log = false;
  sweep_cmd->add_option("--min", sweep_min, "Smallest a");
  sweep_cmd->add_option("--max", sweep_max, "Largest a");
  sweep_cmd->add_option("--steps", sweep_steps, "Number of grid points");
  sweep_cmd->add_option("--cap", sweep_cap, "Largest admissible a");
  sweep_cmd->add_flag("--log", sweep_log, "Geometric grid");
  sweep_cmd->add_option("-o,--output", output, "Write CSV to file instead of stdout");

  auto* volume_cmd = app.add_subcommand("volume-ratio", "Monte-Carlo CP-sphere / Fujiwara-Algoet volume ratio");
  std::uint64_t samples = 10'000'000;
  volume_cmd->add_option("--samples", samples, "Number of samples (>= 1e4)");
  volume_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  auto* mirror_cmd = app.add_subcommand("mirror", "Mirror bound 2 R00 / sqrt(d1 d2) of a certified witness");
  std::string witness_file;
  mirror_cmd->add_option("witness", witness_file, "Witness JSON file")->required();
  mirror_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  auto* examples_cmd = app.add_subcommand("examples", "Write a named example document");
  std::string example_name;
  double param_a = 2.0;
  double param_b = 0.0;
  int param_d = 2;
  int param_family = 1;
  examples_cmd->add_option("name", example_name, "rho4 | terhal | choi-witness | bell | bell-witness")
      ->required()
      ->check(CLI::IsMember({"rho4", "terhal", "choi-witness", "bell", "bell-witness"}));
  examples_cmd->add_option("--a", param_a, "rho4 parameter a, or bell-witness coefficient a");
  examples_cmd->add_option("--b", param_b, "bell-witness coefficient b");
  examples_cmd->add_option("--d", param_d, "bell: local dimension of the maximally entangled state");
  examples_cmd->add_option("--family", param_family, "bell-witness family 1..6");
  examples_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("witnesskit");
  for (const auto& a : args) storage.push_back(a);
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*detect_cmd) {
      const io::StateDocument doc = io::state_from_json(io::load_json(state_file), load_tol, state_file);
      if (x1s.size() != x2s.size()) throw ValueError("--x1 and --x2 must be given the same number of times");
      std::vector<FilterParams> filters;
      for (std::size_t i = 0; i < x1s.size(); ++i) filters.push_back({x1s[i], x2s[i]});
      if (filters.empty()) filters = default_filters();
      const DetectionReport rep = detect(doc.rho, doc.d1, doc.d2, filters, load_tol);
      detail::emit(detail::dump(io::report_to_json(rep)), output, out);
    } else if (*certify_cmd) {
      const MapSpec m = io::mapspec_from_json(io::load_json(map_file), map_file);
      detail::emit(detail::dump(io::certificates_to_json(m)), output, out);
    } else if (*sweep_cmd) {
      if (sweep_max > sweep_cap) throw ValueError("--max exceeds --cap (a must stay finite)");
      const auto rows = sweep_rho4(sweep_grid(sweep_min, sweep_max, sweep_steps, sweep_log));
      detail::emit(sweep_csv(rows), output, out);
    } else if (*volume_cmd) {
      const double estimate = volume_ratio_mc(samples, seed);
      const double analytic = volume_ratio_analytic();
      const io::json j = {{"estimate", estimate},
                          {"analytic", analytic},
                          {"abs_error", std::abs(estimate - analytic)},
                          {"samples", samples},
                          {"seed", seed},
                          {"tool_version", kVersion}};
      detail::emit(detail::dump(j), output, out);
    } else if (*mirror_cmd) {
      const Witness w = io::witness_from_json(io::load_json(witness_file), load_tol, witness_file);
      const double mu = mirror_bound(w);
      const io::json j = {{"mu_bound", mu},
                          {"positivity", io::positivity_to_json(positivity_certificate(w.coeffs))},
                          {"tool_version", kVersion}};
      detail::emit(detail::dump(j), output, out);
    } else if (*examples_cmd) {
      io::json j;
      if (example_name == "rho4") {
        j = io::state_to_json(rho4({param_a}), 4, 4);
      } else if (example_name == "terhal") {
        j = io::state_to_json(terhal_state(), 3, 4);
      } else if (example_name == "bell") {
        j = io::state_to_json(max_entangled(param_d), param_d, param_d);
      } else if (example_name == "choi-witness") {
        j = io::witness_to_json(choi_map_witness());
      } else {
        j = io::witness_to_json(bell_diagonal_witness(param_family, param_a, param_b));
      }
      detail::emit(detail::dump(j), output, out);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const std::invalid_argument& e) {  // ParseError, DimensionError, ValueError
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace witnesskit::cli
