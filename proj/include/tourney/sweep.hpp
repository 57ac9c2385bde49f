#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tourney/distinguishing.hpp"
#include "tourney/permutation.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

enum class SweepMode { CertifiedFirst, BruteOnly };

struct SweepConfig {
  int p_min = 1;
  int p_max = 7;
  SweepMode mode = SweepMode::CertifiedFirst;
  bool dedup_converse = false;
  int workers = 1;
  std::string output_path;  // empty: keep records in memory only
  bool record_timing = true;
  bool force = false;  // allow p_max above kDefaultMaxHalfOrder
};

inline constexpr int kDefaultMaxHalfOrder = 9;

struct SweepRecord {
  int p = 0;
  ConnectorSet neg;
  bool holds = false;
  std::string method;
  std::size_t aut_order = 0;
  double ms = 0.0;
  std::optional<Permutation> witness;
};

struct SweepReport {
  std::size_t total = 0;
  std::size_t holding = 0;
  std::vector<SweepRecord> failures;
  std::map<std::string, std::size_t> by_method;
  double wall_ms = 0.0;
  std::vector<SweepRecord> records;  // sorted by (p, neg mask)
};

/// All subsets of {1..p} in mask order. With dedup, keeps S- only when its
/// mask is below the mask of its complement (the converse's connector set).
std::vector<ConnectorSet> enumerate_connector_sets(int p, bool dedup_converse);

SweepRecord evaluate_instance(int p, const ConnectorSet& neg, SweepMode mode, bool record_timing = true);

/// Throws std::invalid_argument on a bad config, std::runtime_error on I/O failure.
/// TOURNEY_WORKERS in the environment overrides cfg.workers.
SweepReport run_sweep(const SweepConfig& cfg);
/// Single-threaded reference; same records.
SweepReport run_sweep_serial(const SweepConfig& cfg);

/// {"p":..,"neg":[..],"holds":..,"method":"..","aut_order":..,"ms":..} plus
/// "witness" in cycle notation for a failing record.
std::string to_json_line(const SweepRecord& record);
SweepRecord from_json_line(const std::string& line);
void write_records(const std::string& path, const std::vector<SweepRecord>& records);

/// method,count rows followed by total and failures.
std::string summary_csv(const SweepReport& report);

}  // namespace tourney
