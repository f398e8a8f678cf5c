#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpms/datagen.hpp"
#include "qpms/model.hpp"
#include "qpms/solvers.hpp"

namespace qpms {

inline constexpr int kReportSchema = 1;

struct RunReport {
  int n = 0;
  int m = 0;
  int l = 0;
  int d = 0;
  int q = 0;
  std::string algorithm;
  int threads = 1;
  double wall_seconds = 0.0;
  std::uint64_t visited_nodes = 0;
  std::size_t work_units = 0;
  std::size_t motif_count = 0;
  std::vector<Motif> motifs;  // empty when elided
  bool motifs_elided = false;
  bool timed_out = false;
  std::optional<bool> recovered;  // only with ground truth
};

/// Motif list is elided when it has more than `max_listed` entries.
RunReport make_report(const Instance& inst, const SolverOptions& opts,
                      const SolveResult& result, double wall_seconds,
                      const GroundTruth* truth = nullptr,
                      std::size_t max_listed = 10000);

nlohmann::json to_json(const RunReport& report, const Alphabet& alphabet);

/// One `MOTIF<TAB>support` line per motif, in set order.
std::string format_motifs(const MotifSet& motifs, const Alphabet& alphabet);

struct BenchCase {
  int l;
  int d;
};

/// (13,4), (15,5), ..., (23,9).
std::vector<BenchCase> challenging_suite();

struct BenchConfig {
  std::vector<BenchCase> cases = challenging_suite();
  int n = 20;
  int m = 600;
  int q = 20;
  std::vector<Algorithm> algorithms{Algorithm::Sigma};
  std::vector<std::uint64_t> seeds{1};
  double timeout_seconds = 3600.0;
  int threads = 1;
};

struct BenchRow {
  int l = 0;
  int d = 0;
  int q = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string status = "ok";  // ok | TIMEOUT | BUDGET
  double wall_seconds = 0.0;
  std::uint64_t visited_nodes = 0;
  std::size_t motif_count = 0;
  bool recovered = false;
};

/// Runs every (case, seed, algorithm) on a freshly generated FM instance.
/// A run past its timeout is recorded as such, not treated as an error.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_tsv(const std::vector<BenchRow>& rows);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace qpms
