#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tourney/automorphism.hpp"
#include "tourney/certificates.hpp"
#include "tourney/distinguishing.hpp"
#include "tourney/indegree.hpp"
#include "tourney/sweep.hpp"

using namespace tourney;

namespace {

constexpr int kUsageError = 2;

std::string join(const std::vector<int>& values, const char* sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? sep : "") << values[k];
  return out.str();
}

int run_check(int p, const std::string& neg, const std::string& mode) {
  const auto t = build_cyclic(p, ConnectorSet::parse(p, neg));
  const auto result = check_conjecture(t, mode == "brute" ? CheckMode::BruteForce : CheckMode::CertifiedFirst);
  const std::size_t order = result.group_order ? result.group_order : automorphisms(t.graph()).size();
  std::cout << (result.holds ? "HOLDS" : "FAILS") << " (" << result.method() << " |Aut|=" << order << ")\n";
  if (result.certificate) std::cout << "witness: " << result.certificate->describe() << '\n';
  if (result.witness) std::cout << "witness: " << result.witness->to_cycle_string() << '\n';
  return result.holds ? 0 : 1;
}

int run_aut(int p, const std::string& neg, bool pseudo, const std::string& file) {
  Tournament t;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    t = parse_tournament(in);
  } else if (pseudo) {
    t = build_pseudo_cyclic(p, ConnectorSet::parse(p, neg)).graph();
  } else {
    t = build_cyclic(p, ConnectorSet::parse(p, neg)).graph();
  }
  const auto group = automorphisms(t);
  std::cout << "|Aut|=" << group.size() << '\n';
  for (const auto& perm : group) std::cout << perm.to_cycle_string() << '\n';
  return 0;
}

void draw_path(const std::vector<int>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  for (int level = *hi; level >= *lo; --level) {
    std::cout << (level < 10 ? " " : "") << level << " |";
    for (int v : values) std::cout << (v == level ? " *" : "  ");
    std::cout << '\n';
  }
  std::cout << "   +";
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << "--";
  std::cout << "\n    ";
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << ' ' << i % 10;
  std::cout << '\n';
}

int run_profile(int p, const std::string& neg) {
  const auto prof = classify_vertices(p, ConnectorSet::parse(p, neg));
  std::cout << "IS = (" << join(prof.values, ",") << ")\n";
  std::cout << "kinds =";
  for (auto kind : prof.kinds) std::cout << ' ' << to_string(kind);
  std::cout << '\n';
  std::cout << "alpha=" << prof.ascents << " delta=" << prof.descents << " pi=" << prof.plateaus << '\n';
  for (const auto& run : prof.plateau_runs)
    std::cout << "plateau " << run.start << ".." << run.last() << " (" << run.length << " vertices)\n";
  draw_path(prof.values);
  return 0;
}

int run_paley(int n) {
  const auto t = build_paley(n);
  const auto result = check_conjecture(t, CheckMode::BruteForce);
  std::cout << (result.holds ? "HOLDS" : "FAILS") << ", |Aut|=" << result.group_order
            << ", rho=" << distinguishing_cost(t.graph()) << '\n';
  return result.holds ? 0 : 1;
}

int run_sweep_command(const SweepConfig& cfg, const std::string& summary_path) {
  const auto report = run_sweep(cfg);
  std::cout << "instances=" << report.total << " holding=" << report.holding
            << " failures=" << report.failures.size() << " wall_ms=" << static_cast<long>(report.wall_ms) << '\n';
  for (const auto& [method, count] : report.by_method) std::cout << "  " << method << ' ' << count << '\n';
  if (!summary_path.empty()) {
    std::ofstream out(summary_path);
    if (!out) throw std::runtime_error("cannot open " + summary_path + " for writing");
    out << summary_csv(report);
  }
  if (!report.failures.empty()) {
    std::cout << "counterexample records in " << cfg.output_path << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic tournaments, automorphism groups and distinguishing labelings"};
  app.require_subcommand(1);

  int p = 1;
  std::string neg;
  std::string mode = "certified";

  auto* check = app.add_subcommand("check", "check the canonical 2-labeling of T(2p+1;S-)");
  check->add_option("--p", p, "half order")->required()->check(CLI::PositiveNumber);
  check->add_option("--neg", neg, "negative connectors, e.g. 2,5,6");
  check->add_option("--mode", mode)->check(CLI::IsMember({"brute", "certified"}));

  bool pseudo = false;
  std::string file;
  auto* aut = app.add_subcommand("aut", "print the automorphism group");
  aut->add_option("--p", p, "half order")->check(CLI::PositiveNumber);
  aut->add_option("--neg", neg, "negative connectors");
  aut->add_flag("--pseudo", pseudo, "use P(p;N) instead of T(2p+1;S-)");
  aut->add_option("--file", file, "tournament literal: n, then one out-neighbour line per vertex");

  auto* profile = app.add_subcommand("profile", "indegree sequence and classification of P(p;N)");
  profile->add_option("--p", p, "half order")->required()->check(CLI::PositiveNumber);
  profile->add_option("--neg", neg, "connectors N");

  int n = 7;
  auto* paley = app.add_subcommand("paley", "build and check QR_n");
  paley->add_option("--n", n, "prime, 3 mod 4")->required();

  SweepConfig cfg;
  std::string sweep_mode = "certified";
  bool no_timing = false;
  std::string summary_path;
  auto* sweep = app.add_subcommand("sweep", "check every connector set in a range of p");
  sweep->add_option("--p-min", cfg.p_min)->required();
  sweep->add_option("--p-max", cfg.p_max)->required();
  sweep->add_flag("--dedup", cfg.dedup_converse, "one instance per converse pair");
  sweep->add_option("--workers", cfg.workers, "threads; TOURNEY_WORKERS overrides");
  sweep->add_option("--mode", sweep_mode)->check(CLI::IsMember({"brute", "certified"}));
  sweep->add_option("--out", cfg.output_path, "JSON lines output")->required();
  sweep->add_flag("--force", cfg.force, "allow p-max above 9");
  sweep->add_flag("--no-timing", no_timing, "write ms as 0 for byte-stable output");
  sweep->add_option("--summary", summary_path, "CSV summary path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*check) return run_check(p, neg, mode);
    if (*aut) {
      if (file.empty() && p < 1) throw std::invalid_argument("aut needs --p or --file");
      return run_aut(p, neg, pseudo, file);
    }
    if (*profile) return run_profile(p, neg);
    if (*paley) return run_paley(n);
    if (*sweep) {
      cfg.mode = sweep_mode == "brute" ? SweepMode::BruteOnly : SweepMode::CertifiedFirst;
      cfg.record_timing = !no_timing;
      return run_sweep_command(cfg, summary_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
