#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpms/model.hpp"

namespace qpms {

/// 1-based start position of the aligned l-mer in each sequence.
struct StartVector {
  std::vector<int> starts;
  auto operator<=>(const StartVector&) const = default;
};

/// One row per sequence: the l-mer at that sequence's start.
using AlignmentMatrix = std::vector<Lmer>;

/// sigma x l symbol counts of an alignment.
class ProfileMatrix {
 public:
  ProfileMatrix(int sigma, int l, int rows);

  int sigma() const noexcept { return sigma_; }
  int length() const noexcept { return l_; }
  int rows() const noexcept { return rows_; }
  int count(int symbol, int column) const { return counts_[symbol * l_ + column]; }
  int& count(int symbol, int column) { return counts_[symbol * l_ + column]; }
  int column_max(int column) const;

 private:
  int sigma_;
  int l_;
  int rows_;
  std::vector<int> counts_;
};

AlignmentMatrix alignment_matrix(std::span<const Sequence> seqs,
                                 const StartVector& s, int l);
ProfileMatrix profile_matrix(const AlignmentMatrix& alignment, int sigma);
/// Most frequent symbol per column, lowest code on ties.
Lmer consensus_string(const ProfileMatrix& profile);
/// Sum of the column maxima.
int consensus_score(const ProfileMatrix& profile);

struct BestStarts {
  StartVector starts;
  int score = 0;
};

/// Exhaustive maximization of the consensus score over all start vectors.
/// Returns the lexicographically smallest maximizer. Throws BudgetExceeded
/// when (m - l + 1)^t > budget.
BestStarts best_starts(std::span<const Sequence> seqs, int l, int sigma,
                       std::uint64_t budget = 10'000'000);

}  // namespace qpms
