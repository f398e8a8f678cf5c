#include "qpms/neighborhood.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>


namespace qpms {

namespace {

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace

std::uint64_t ball_size(int l, int d, int sigma) {
  if (l < 0 || d < 0 || d > l || sigma < 2)
    throw BadParams("ball_size: need 0 <= d <= l and sigma >= 2");
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(l, i)
  std::uint64_t power = 1;  // (sigma - 1)^i
  for (int i = 0; i <= d; ++i) {
    if (i > 0) {
      // C(l, i) = C(l, i-1) * (l - i + 1) / i, exact at every step
      const unsigned __int128 wide =
          static_cast<unsigned __int128>(binom) * static_cast<unsigned>(l - i + 1) / i;
      if (wide > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("ball_size overflow");
      binom = static_cast<std::uint64_t>(wide);
      if (!checked_mul(power, static_cast<std::uint64_t>(sigma - 1), power))
        throw std::overflow_error("ball_size overflow");
    }
    std::uint64_t term = 0;
    if (!checked_mul(binom, power, term) || total + term < total)
      throw std::overflow_error("ball_size overflow");
    total += term;
  }
  return total;
}

bool traverse_tree(const Lmer& x, int d, int sigma,
                   const std::function<Visit(const NeighborhoodNode&)>& visitor) {
  Lmer t = x;
  const int l = static_cast<int>(x.size());
  bool aborted = false;
  auto walk = [&](auto&& self, int level, int last) -> void {
    Visit v = visitor(NeighborhoodNode{t, level, last});
    if (v == Visit::Abort) {
      aborted = true;
      return;
    }
    if (v == Visit::Prune || level == d) return;
    for (int pos = last + 1; pos < l; ++pos) {
      const Code original = x[pos];
      for (int sym = 0; sym < sigma; ++sym) {
        if (sym == original) continue;
        t[pos] = static_cast<Code>(sym);
        self(self, level + 1, pos);
        t[pos] = original;
        if (aborted) return;
      }
    }
  };
  walk(walk, 0, -1);
  return !aborted;
}

std::vector<Lmer> ball_enumerate(const Lmer& x, int radius, int sigma) {
  if (radius < 0 || radius > static_cast<int>(x.size()))
    throw BadParams("ball_enumerate: radius out of range");
  std::vector<Lmer> out;
  traverse_tree(x, radius, sigma, [&](const NeighborhoodNode& node) {
    out.push_back(node.candidate);
    return Visit::Descend;
  });
  return out;
}

PositionClasses position_classes(const Lmer& a, const Lmer& b, const Lmer& c) {
  if (a.size() != b.size() || b.size() != c.size())
    throw LengthMismatch("position_classes: lengths differ");
  PositionClasses pc;
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    const bool ab = a[j] == b[j];
    const bool bc = b[j] == c[j];
    const bool ca = c[j] == a[j];
    if (ab && bc)
      pc.r1.push_back(j);
    else if (ab)
      pc.r2.push_back(j);
    else if (ca)
      pc.r3.push_back(j);
    else if (bc)
      pc.r4.push_back(j);
    else
      pc.r5.push_back(j);
  }
  return pc;
}

TripleGeometry triple_geometry(const Lmer& a, const Lmer& b, const Lmer& c) {
  if (a.size() != b.size() || b.size() != c.size())
    throw LengthMismatch("triple_geometry: lengths differ");
  TripleGeometry g;
  for (std::size_t j = 0; j < a.size(); ++j) {
    g.ab += a[j] != b[j];
    g.bc += b[j] != c[j];
    g.ca += c[j] != a[j];
    g.differing += (a[j] != b[j]) || (b[j] != c[j]);
  }
  return g;
}

bool balls_intersect(const Lmer& a, int da, const Lmer& b, int db, const Lmer& c,
                     int dc) {
  return balls_intersect(triple_geometry(a, b, c), da, db, dc);
}

PositionPermutation::PositionPermutation(std::vector<int> perm)
    : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
      throw BadParams("PositionPermutation: not a bijection");
    seen[p] = true;
  }
}

PositionPermutation PositionPermutation::identity(int l) {
  std::vector<int> perm(l);
  for (int j = 0; j < l; ++j) perm[j] = j;
  return PositionPermutation(std::move(perm));
}

PositionPermutation PositionPermutation::differing_first(std::span<const Code> a,
                                                         std::span<const Code> b) {
  if (a.size() != b.size()) throw LengthMismatch("differing_first: lengths differ");
  std::vector<int> perm;
  perm.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) perm.push_back(static_cast<int>(j));
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] == b[j]) perm.push_back(static_cast<int>(j));
  return PositionPermutation(std::move(perm));
}

PositionPermutation PositionPermutation::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) inv[perm_[j]] = static_cast<int>(j);
  return PositionPermutation(std::move(inv));
}

Lmer select_positions(const Lmer& x, std::span<const int> positions) {
  std::vector<Code> out;
  out.reserve(positions.size());
  for (int p : positions) {
    if (p < 0 || p >= static_cast<int>(x.size()))
      throw LengthMismatch("select_positions: position out of range");
    out.push_back(x[p]);
  }
  return Lmer(std::move(out));
}

Lmer reorder_positions(const Lmer& x, const PositionPermutation& p) {
  if (p.size() != x.size()) throw LengthMismatch("reorder_positions: size mismatch");
  return select_positions(x, p.positions());
}

Lmer inverse_reorder(const Lmer& y, const PositionPermutation& p) {
  if (p.size() != y.size()) throw LengthMismatch("inverse_reorder: size mismatch");
  return reorder_positions(y, p.inverse());
}

}  // namespace qpms
