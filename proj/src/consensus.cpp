#include "qpms/consensus.hpp"

#include <algorithm>
#include <string>

namespace qpms {

ProfileMatrix::ProfileMatrix(int sigma, int l, int rows)
    : sigma_(sigma), l_(l), rows_(rows), counts_(static_cast<std::size_t>(sigma) * l, 0) {}

int ProfileMatrix::column_max(int column) const {
  int best = 0;
  for (int a = 0; a < sigma_; ++a) best = std::max(best, count(a, column));
  return best;
}

AlignmentMatrix alignment_matrix(std::span<const Sequence> seqs,
                                 const StartVector& s, int l) {
  if (s.starts.size() != seqs.size())
    throw BadStart("start vector has " + std::to_string(s.starts.size()) +
                   " entries for " + std::to_string(seqs.size()) + " sequences");
  AlignmentMatrix rows;
  rows.reserve(seqs.size());
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const int start = s.starts[i];
    const int last = static_cast<int>(seqs[i].size()) - l + 1;
    if (l < 1 || start < 1 || start > last)
      throw BadStart("start " + std::to_string(start) + " of sequence " +
                     std::to_string(i + 1) + " outside [1, " + std::to_string(last) + "]");
    rows.emplace_back(seqs[i].window(start - 1, l));
  }
  return rows;
}

ProfileMatrix profile_matrix(const AlignmentMatrix& alignment, int sigma) {
  const int l = alignment.empty() ? 0 : static_cast<int>(alignment.front().size());
  ProfileMatrix p(sigma, l, static_cast<int>(alignment.size()));
  for (const Lmer& row : alignment) {
    if (static_cast<int>(row.size()) != l)
      throw LengthMismatch("alignment rows differ in length");
    for (int j = 0; j < l; ++j) ++p.count(row[j], j);
  }
  return p;
}

Lmer consensus_string(const ProfileMatrix& profile) {
  std::vector<Code> out(profile.length(), 0);
  for (int j = 0; j < profile.length(); ++j) {
    int best = 0;
    for (int a = 1; a < profile.sigma(); ++a)
      if (profile.count(a, j) > profile.count(best, j)) best = a;
    out[j] = static_cast<Code>(best);
  }
  return Lmer(std::move(out));
}

int consensus_score(const ProfileMatrix& profile) {
  int score = 0;
  for (int j = 0; j < profile.length(); ++j) score += profile.column_max(j);
  return score;
}

BestStarts best_starts(std::span<const Sequence> seqs, int l, int sigma,
                       std::uint64_t budget) {
  const int t = static_cast<int>(seqs.size());
  if (t == 0) throw BadParams("best_starts: no sequences");
  std::vector<int> choices(t);
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) {
    choices[i] = static_cast<int>(seqs[i].size()) - l + 1;
    if (l < 1 || choices[i] < 1) throw BadParams("best_starts: l exceeds a sequence");
    if (total > budget / static_cast<std::uint64_t>(choices[i]))
      throw BudgetExceeded("best_starts: search space exceeds budget of " +
                           std::to_string(budget));
    total *= static_cast<std::uint64_t>(choices[i]);
  }

  // Column counts are updated row by row as the odometer advances.
  ProfileMatrix counts(sigma, l, t);
  std::vector<int> start(t, 0);
  auto add = [&](int i, int delta) {
    const Code* w = seqs[i].codes.data() + start[i];
    for (int j = 0; j < l; ++j) counts.count(w[j], j) += delta;
  };
  for (int i = 0; i < t; ++i) add(i, +1);

  BestStarts best;
  best.score = -1;
  for (std::uint64_t k = 0; k < total; ++k) {
    const int score = consensus_score(counts);
    if (score > best.score) {
      best.score = score;
      best.starts.starts.resize(t);
      for (int i = 0; i < t; ++i) best.starts.starts[i] = start[i] + 1;
    }
    for (int i = t - 1; i >= 0; --i) {
      add(i, -1);
      if (++start[i] < choices[i]) {
        add(i, +1);
        break;
      }
      start[i] = 0;
      add(i, +1);
    }
  }
  return best;
}

}  // namespace qpms
