#include "tourney/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tourney/automorphism.hpp"

namespace tourney {

using Json = nlohmann::ordered_json;

std::vector<ConnectorSet> enumerate_connector_sets(int p, bool dedup_converse) {
  if (p < 1 || p > (kMaxVertices - 1) / 2) throw std::invalid_argument("half order out of range");
  const VertexSet full = all_vertices(p);
  std::vector<ConnectorSet> sets;
  for (VertexSet mask = 0; mask <= full; ++mask) {
    if (dedup_converse && mask > (full & ~mask)) continue;
    sets.push_back(ConnectorSet::from_mask(p, mask));
  }
  return sets;
}

SweepRecord evaluate_instance(int p, const ConnectorSet& neg, SweepMode mode, bool record_timing) {
  const auto start = std::chrono::steady_clock::now();
  const auto t = build_cyclic(p, neg);
  const auto result =
      check_conjecture(t, mode == SweepMode::BruteOnly ? CheckMode::BruteForce : CheckMode::CertifiedFirst);
  SweepRecord record;
  record.p = p;
  record.neg = neg;
  record.holds = result.holds;
  record.method = result.method();
  record.aut_order = result.group_order ? result.group_order : automorphisms(t.graph()).size();
  record.witness = result.witness;
  if (record_timing)
    record.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

namespace {

struct Instance {
  int p;
  ConnectorSet neg;
};

void validate(const SweepConfig& cfg) {
  if (cfg.p_min < 1) throw std::invalid_argument("p_min must be >= 1");
  if (cfg.p_min > cfg.p_max) throw std::invalid_argument("p_min must be <= p_max");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.p_max > kDefaultMaxHalfOrder && !cfg.force)
    throw std::invalid_argument("p_max above " + std::to_string(kDefaultMaxHalfOrder) + " needs --force");
  if (2 * cfg.p_max + 1 > kMaxVertices) throw SizeLimitError("p_max too large for bit-packed adjacency");
}

std::vector<Instance> instances(const SweepConfig& cfg) {
  std::vector<Instance> out;
  for (int p = cfg.p_min; p <= cfg.p_max; ++p)
    for (auto& neg : enumerate_connector_sets(p, cfg.dedup_converse)) out.push_back({p, std::move(neg)});
  return out;
}

int effective_workers(int workers) {
  if (const char* env = std::getenv("TOURNEY_WORKERS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return workers;
}

SweepReport finish(const SweepConfig& cfg, std::vector<SweepRecord> records,
                   std::chrono::steady_clock::time_point start) {
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return a.p != b.p ? a.p < b.p : a.neg.mask() < b.neg.mask();
  });
  SweepReport report;
  report.total = records.size();
  for (const auto& record : records) {
    ++report.by_method[record.method];
    if (record.holds)
      ++report.holding;
    else
      report.failures.push_back(record);
  }
  report.records = std::move(records);
  if (!cfg.output_path.empty()) write_records(cfg.output_path, report.records);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const auto work = instances(cfg);
  std::vector<SweepRecord> slots(work.size());
  const int workers = effective_workers(cfg.workers);
  const auto count = static_cast<std::int64_t>(work.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t k = 0; k < count; ++k)
    slots[k] = evaluate_instance(work[k].p, work[k].neg, cfg.mode, cfg.record_timing);

  return finish(cfg, std::move(slots), start);
}

SweepReport run_sweep_serial(const SweepConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  std::vector<SweepRecord> records;
  for (const auto& [p, neg] : instances(cfg)) records.push_back(evaluate_instance(p, neg, cfg.mode, cfg.record_timing));
  return finish(cfg, std::move(records), start);
}

std::string to_json_line(const SweepRecord& record) {
  Json j;
  j["p"] = record.p;
  j["neg"] = record.neg.members();
  j["holds"] = record.holds;
  j["method"] = record.method;
  j["aut_order"] = record.aut_order;
  j["ms"] = std::round(record.ms * 1000.0) / 1000.0;
  if (record.witness) {
    const auto images = record.witness->images();
    j["witness"] = std::vector<int>(images.begin(), images.end());
  }
  return j.dump();
}

SweepRecord from_json_line(const std::string& line) {
  const auto j = Json::parse(line);
  SweepRecord record;
  record.p = j.at("p").get<int>();
  const auto members = j.at("neg").get<std::vector<int>>();
  record.neg = ConnectorSet(record.p, members);
  record.holds = j.at("holds").get<bool>();
  record.method = j.at("method").get<std::string>();
  record.aut_order = j.at("aut_order").get<std::size_t>();
  record.ms = j.at("ms").get<double>();
  if (j.contains("witness")) record.witness = Permutation(j["witness"].get<std::vector<int>>());
  return record;
}

void write_records(const std::string& path, const std::vector<SweepRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& record : records) out << to_json_line(record) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string summary_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "method,count\n";
  for (const auto& [method, count] : report.by_method) out << method << ',' << count << '\n';
  out << "total," << report.total << '\n';
  out << "failures," << report.failures.size() << '\n';
  return out.str();
}

}  // namespace tourney
