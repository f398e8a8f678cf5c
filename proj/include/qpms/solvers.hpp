#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpms/model.hpp"

namespace qpms {

enum class Algorithm { Oracle, Prune, Qpms7, Traver, Sigma };

std::string_view to_string(Algorithm a) noexcept;
/// Parses oracle|prune|qpms7|traver|sigma; throws BadParams otherwise.
Algorithm parse_algorithm(std::string_view name);

struct SolverOptions {
  Algorithm algorithm = Algorithm::Sigma;
  // Pair-solver refinements; none of them changes the motif set.
  bool string_reordering = true;
  bool position_reordering = true;
  // Route window distances through bit-plane l-mers. Always on for Sigma.
  bool use_compressed = false;
  // The q'' subtree cut of the single-root solver; off only for testing.
  bool quorum_prune = true;
  int threads = 1;
  // Consecutive root windows per work unit.
  int chunk = 8;
  std::uint64_t oracle_budget = 65536;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveResult {
  MotifSet motifs;
  std::uint64_t visited_nodes = 0;
  std::size_t work_units = 0;
  bool timed_out = false;
};

struct Verification {
  bool is_motif = false;
  int support = 0;
};

/// Counts the sequences holding a window within d of `candidate`.
Verification verify_motif(const Instance& inst, std::span<const Code> candidate);
inline Verification verify_motif(const Instance& inst, const Lmer& candidate) {
  return verify_motif(inst, candidate.codes());
}

/// Checks every l-mer of the alphabet; throws BudgetExceeded when
/// sigma^l > opts.oracle_budget.
SolveResult solve_oracle(const Instance& inst, const SolverOptions& opts = {});

/// Neighborhood-tree search rooted at each window of s_1..s_{n-q+1}, with
/// per-window distances maintained incrementally and the q'' subtree cut.
SolveResult solve_qpmsprune(const Instance& inst, const SolverOptions& opts = {});

/// Pair-guided search over string pairs i < j among s_1..s_{n-q+2}; window
/// feasibility comes from the precomputed 2d pair table plus the three-ball
/// test. Falls back to solve_qpmsprune when q < 2.
SolveResult solve_qpms7(const Instance& inst, const SolverOptions& opts = {});

/// Pair search with table-free feasibility, elimination of redundant string
/// combinations, and optional string and position reordering.
SolveResult solve_traver(const Instance& inst, const SolverOptions& opts = {});

/// solve_traver with every distance computed on bit-plane compressed l-mers.
SolveResult solve_sigma(const Instance& inst, const SolverOptions& opts = {});

/// Runs the solver named by opts.algorithm.
SolveResult solve(const Instance& inst, const SolverOptions& opts = {});

/// Solves the first k sequences with quorum max(q - (n - k), 1) using
/// opts.algorithm, then keeps candidates that verify against all n. k is
/// raised to n - q + 1 when smaller.
SolveResult solve_subset_then_verify(const Instance& inst, int k,
                                     const SolverOptions& opts = {});
/// Smallest subset keeping the subset quorum >= 2, but at least half of n.
int default_subset_size(const Instance& inst);

/// Surviving candidate windows per sequence. All rows live in one buffer;
/// a row's survivors are compacted into its own prefix.
class WindowSet {
 public:
  struct Row {
    int sequence = 0;
    std::size_t begin = 0;
    std::size_t size = 0;
  };

  /// Every window of every listed sequence.
  static WindowSet all(const Instance& inst, std::span<const int> sequences);
  static WindowSet all(const Instance& inst);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::span<const int> row(std::size_t r) const {
    return std::span<const int>(slots_).subspan(rows_[r].begin, rows_[r].size);
  }
  /// Survivors of the given sequence, ascending.
  std::vector<int> windows_of(int sequence) const;

 private:
  friend WindowSet filter_windows(WindowSet ws, const Instance& inst,
                                  std::span<const Code> candidate, int radius);
  std::vector<int> slots_;
  std::vector<Row> rows_;
};

/// Keeps windows within `radius` of `candidate`, then orders rows by size
/// (ties by sequence index). A negative radius empties every row.
WindowSet filter_windows(WindowSet ws, const Instance& inst,
                         std::span<const Code> candidate, int radius);

}  // namespace qpms
