#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qpms/model.hpp"

namespace qpms {

/// |B(a, d)| for an l-length string over an alphabet of size sigma.
/// Throws std::overflow_error when the count does not fit in 64 bits.
std::uint64_t ball_size(int l, int d, int sigma);

/// Every string within Hamming distance `radius` of x, in tree order.
std::vector<Lmer> ball_enumerate(const Lmer& x, int radius, int sigma);

enum class Visit { Descend, Prune, Abort };

struct NeighborhoodNode {
  const Lmer& candidate;
  int level;         // mismatches from the root
  int last_changed;  // highest changed position, -1 at the root
};

/// Depth-first walk of the duplicate-free neighborhood tree T_d(x): a node's
/// children change one position greater than its last changed position to a
/// symbol different from x there. Children are ordered by position, then
/// symbol code. Returns false when the visitor aborted.
bool traverse_tree(const Lmer& x, int d, int sigma,
                   const std::function<Visit(const NeighborhoodNode&)>& visitor);

/// 0-based position sets of a string triple by equality pattern:
/// R1 a=b=c, R2 a=b!=c, R3 c=a!=b, R4 b=c!=a, R5 pairwise distinct.
struct PositionClasses {
  std::vector<int> r1, r2, r3, r4, r5;

  int differing() const noexcept {
    return static_cast<int>(r2.size() + r3.size() + r4.size() + r5.size());
  }
};

PositionClasses position_classes(const Lmer& a, const Lmer& b, const Lmer& c);

/// Pairwise and triple distances of three centers; enough to decide whether
/// three Hamming balls share a string.
struct TripleGeometry {
  int ab = 0;
  int bc = 0;
  int ca = 0;
  int differing = 0;  // |R2| + |R3| + |R4| + |R5|
};

constexpr bool balls_intersect(const TripleGeometry& g, int da, int db,
                               int dc) noexcept {
  if (da < 0 || db < 0 || dc < 0) return false;
  if (da + db < g.ab || db + dc < g.bc || dc + da < g.ca) return false;
  return da + db + dc >= g.differing;
}

TripleGeometry triple_geometry(const Lmer& a, const Lmer& b, const Lmer& c);

/// True iff B(a, da), B(b, db) and B(c, dc) have a common string.
bool balls_intersect(const Lmer& a, int da, const Lmer& b, int db, const Lmer& c,
                     int dc);

/// A bijection on [0, l). Applying it to x yields x[perm[0]], x[perm[1]], ...
class PositionPermutation {
 public:
  explicit PositionPermutation(std::vector<int> perm);
  static PositionPermutation identity(int l);
  /// Positions where a and b differ, ascending, then the rest ascending.
  static PositionPermutation differing_first(std::span<const Code> a,
                                             std::span<const Code> b);

  std::size_t size() const noexcept { return perm_.size(); }
  int operator[](std::size_t j) const { return perm_[j]; }
  std::span<const int> positions() const noexcept { return perm_; }
  PositionPermutation inverse() const;

 private:
  std::vector<int> perm_;
};

/// x|_P: the letters of x at the (0-based) positions listed in P, in order.
Lmer select_positions(const Lmer& x, std::span<const int> positions);

Lmer reorder_positions(const Lmer& x, const PositionPermutation& p);
Lmer inverse_reorder(const Lmer& y, const PositionPermutation& p);

}  // namespace qpms
