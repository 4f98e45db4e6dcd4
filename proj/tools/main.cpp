// Command-line front end. Exit codes: 0 success, 1 verification or
// simulation check failure, 2 usage or domain errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coalesce/analysis.hpp"
#include "coalesce/chain.hpp"
#include "coalesce/io.hpp"
#include "coalesce/partition.hpp"
#include "coalesce/simulate.hpp"
#include "coalesce/symmetric.hpp"
#include "coalesce/verify.hpp"

namespace {

int emit(const std::string& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << document;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  file << document;
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return 2;
  }
  return 0;
}

std::string render_landing(const coalesce::ChainAnalysis& analysis, coalesce::Format format,
                           int max_n) {
  using coalesce::Json;
  if (format == coalesce::Format::json) {
    Json doc;
    doc["n"] = analysis.n;
    doc["stages"] = Json::array();
    for (const auto& landing : analysis.landing) {
      Json entry;
      entry["t"] = landing.t;
      Json values = Json::array();
      for (const auto& p : landing.probabilities) values.push_back(coalesce::to_string(p));
      entry["landing"] = values;
      doc["stages"].push_back(entry);
    }
    return doc.dump(2) + "\n";
  }
  if (format == coalesce::Format::csv) {
    std::string out = "t,landing\n";
    for (const auto& landing : analysis.landing) {
      const auto space = coalesce::enumerate_stage(analysis.n, landing.t, max_n);
      std::string cell;
      for (std::size_t s = 0; s < landing.probabilities.size(); ++s) {
        if (s > 0) cell += ';';
        cell += space.state(s).part_string() + "=" + coalesce::to_string(landing.probabilities[s]);
      }
      out += coalesce::detail::csv_row({std::to_string(landing.t), cell});
    }
    return out;
  }
  std::ostringstream out;
  out << "n = " << analysis.n << '\n';
  for (const auto& landing : analysis.landing) {
    const auto space = coalesce::enumerate_stage(analysis.n, landing.t, max_n);
    out << "t = " << landing.t << "  landing: "
        << coalesce::landing_label_line(space, landing.probabilities) << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of the winner-absorbs-loser team coalescence chain"};
  app.require_subcommand(1);

  int n = 0;
  int t = -1;
  std::string format_name = "pretty";
  std::string out_path;
  int max_n = coalesce::kDefaultMaxN;
  long long trials = 100000;
  std::uint64_t seed = 1;
  double z_threshold = 4.0;

  const auto add_common = [&](CLI::App* cmd, bool with_t) {
    cmd->add_option("--n", n, "number of players")->required();
    if (with_t) cmd->add_option("--t", t, "restrict output to the stage with t teams");
    cmd->add_option("--format", format_name, "output format: json, csv, or pretty");
    cmd->add_option("--out", out_path, "write to this path instead of standard output");
    cmd->add_option("--max-n", max_n, "override the state-space size cap");
  };

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list the partition state spaces S(n,t)");
  add_common(cmd_enumerate, true);
  auto* cmd_matrix =
      app.add_subcommand("matrix", "exact transition matrix blocks A_t and A_t,t-1");
  add_common(cmd_matrix, true);
  auto* cmd_landing = app.add_subcommand("landing", "stage entry distributions L_t");
  add_common(cmd_landing, false);
  auto* cmd_times =
      app.add_subcommand("times", "expected stage times and total absorption time");
  add_common(cmd_times, false);
  auto* cmd_variance =
      app.add_subcommand("variance", "variance of the absorption time from the start");
  add_common(cmd_variance, false);
  auto* cmd_symmetric =
      app.add_subcommand("symmetric", "per-player expected-wins system and its solution");
  add_common(cmd_symmetric, false);
  auto* cmd_simulate =
      app.add_subcommand("simulate", "Monte Carlo validation against the exact analysis");
  add_common(cmd_simulate, false);
  cmd_simulate->add_option("--trials", trials, "number of simulated games");
  cmd_simulate->add_option("--seed", seed, "master seed for per-trial seeding");
  cmd_simulate->add_option("--z-threshold", z_threshold, "|z| accepted as statistical agreement");
  auto* cmd_verify = app.add_subcommand("verify", "run every exact identity check");
  add_common(cmd_verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const coalesce::Format format = coalesce::parse_format(format_name);

    if (app.got_subcommand(cmd_enumerate)) {
      std::vector<coalesce::StageSpace> stages;
      if (t >= 0) {
        stages.push_back(coalesce::enumerate_stage(n, t, max_n));
      } else {
        for (int s = n; s >= 1; --s) stages.push_back(coalesce::enumerate_stage(n, s, max_n));
      }
      return emit(coalesce::render_enumeration(n, stages, format), out_path);
    }

    if (app.got_subcommand(cmd_matrix)) {
      std::vector<coalesce::StageMatrices> chain;
      if (t >= 0) {
        chain.push_back(coalesce::build_stage(n, t, max_n));
      } else {
        chain = coalesce::build_full_chain(n, max_n);
      }
      return emit(coalesce::render_stage_matrices(n, chain, format, max_n), out_path);
    }

    if (app.got_subcommand(cmd_landing)) {
      const auto analysis = coalesce::analyze(n, false, max_n);
      return emit(render_landing(analysis, format, max_n), out_path);
    }

    if (app.got_subcommand(cmd_times)) {
      const auto analysis = coalesce::analyze(n, false, max_n);
      return emit(coalesce::render_analysis(analysis, format, max_n), out_path);
    }

    if (app.got_subcommand(cmd_variance)) {
      const auto analysis = coalesce::analyze(n, true, max_n);
      if (format == coalesce::Format::pretty)
        return emit(coalesce::to_string(*analysis.variance) + "\n", out_path);
      return emit(coalesce::render_analysis(analysis, format, max_n), out_path);
    }

    if (app.got_subcommand(cmd_symmetric)) {
      const auto system = coalesce::build_system(n);
      const auto x = coalesce::expected_wins(n);
      return emit(coalesce::render_symmetric(system, x, format), out_path);
    }

    if (app.got_subcommand(cmd_simulate)) {
      coalesce::SimulationConfig config;
      config.n = n;
      config.trials = trials;
      config.master_seed = seed;
      config.max_n = max_n;
      const auto report = coalesce::simulate(config);
      const auto analysis = coalesce::analyze(n, true, max_n);
      const auto comparison = coalesce::compare(report, analysis, z_threshold);
      const int rc = emit(coalesce::render_comparison(report, comparison, format), out_path);
      if (rc != 0) return rc;
      return comparison.all_within ? 0 : 1;
    }

    if (app.got_subcommand(cmd_verify)) {
      const auto checks = coalesce::run_all_checks(n, max_n);
      bool all_pass = true;
      for (const auto& check : checks) all_pass = all_pass && check.pass;
      const int rc = emit(coalesce::render_checks(n, checks, format), out_path);
      if (rc != 0) return rc;
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
