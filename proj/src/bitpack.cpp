#include "qpms/bitpack.hpp"

#include <algorithm>
#include <limits>

namespace qpms {

CompressedLmer compress_lmer(std::span<const Code> x, int bits_per_symbol) {
  CompressedLmer c;
  c.length = static_cast<int>(x.size());
  c.planes = bits_per_symbol;
  const int wpp = c.words_per_plane();
  c.words.assign(static_cast<std::size_t>(bits_per_symbol) * wpp, 0u);
  for (int j = 0; j < c.length; ++j) {
    const std::uint32_t bit = 1u << (j % 32);
    for (int b = 0; b < bits_per_symbol; ++b)
      if ((x[j] >> b) & 1u) c.words[b * wpp + j / 32] |= bit;
  }
  return c;
}

Lmer decompress_lmer(const CompressedLmer& c) {
  std::vector<Code> codes(c.length, 0);
  const int wpp = c.words_per_plane();
  for (int j = 0; j < c.length; ++j)
    for (int b = 0; b < c.planes; ++b)
      if ((c.words[b * wpp + j / 32] >> (j % 32)) & 1u)
        codes[j] = static_cast<Code>(codes[j] | (1u << b));
  return Lmer(std::move(codes));
}

int popcount32_portable(std::uint32_t w) noexcept {
  w = w - ((w >> 1) & 0x55555555u);
  w = (w & 0x33333333u) + ((w >> 2) & 0x33333333u);
  w = (w + (w >> 4)) & 0x0F0F0F0Fu;
  return static_cast<int>((w * 0x01010101u) >> 24);
}

int hamming_naive(std::span<const Code> a, std::span<const Code> b) {
  if (a.size() != b.size()) throw LengthMismatch("hamming_naive: lengths differ");
  int dist = 0;
  for (std::size_t j = 0; j < a.size(); ++j) dist += a[j] != b[j];
  return dist;
}

int hamming_compressed(const CompressedLmer& a, const CompressedLmer& b) {
  if (a.length != b.length || a.planes != b.planes)
    throw LengthMismatch("hamming_compressed: shapes differ");
  const int wpp = a.words_per_plane();
  int dist = 0;
  for (int w = 0; w < wpp; ++w) {
    std::uint32_t diff = 0;
    for (int p = 0; p < a.planes; ++p)
      diff |= a.words[p * wpp + w] ^ b.words[p * wpp + w];
    dist += popcount32(diff);
  }
  return dist;
}

int hamming_to_sequence(std::span<const Code> x, const Sequence& s) {
  if (x.size() > s.size())
    throw LengthMismatch("hamming_to_sequence: l-mer longer than sequence");
  int best = std::numeric_limits<int>::max();
  for (std::size_t r = 0; r + x.size() <= s.size(); ++r) {
    int dist = 0;
    for (std::size_t j = 0; j < x.size() && dist < best; ++j)
      dist += x[j] != s.codes[r + j];
    best = std::min(best, dist);
    if (best == 0) break;
  }
  return best;
}

std::vector<int> window_distances(std::span<const Code> x, const Sequence& s) {
  if (x.size() > s.size())
    throw LengthMismatch("window_distances: l-mer longer than sequence");
  std::vector<int> out(s.size() - x.size() + 1);
  for (std::size_t r = 0; r < out.size(); ++r)
    out[r] = hamming_naive(x, s.window(r, x.size()));
  return out;
}

void incremental_update(std::span<int> dists, int position, Code from, Code to,
                        const Sequence& s) {
  if (from == to) return;
  const Code* aligned = s.codes.data() + position;
  for (std::size_t r = 0; r < dists.size(); ++r) {
    const Code c = aligned[r];
    dists[r] += (c == from) - (c == to);
  }
}

PairDistanceTable::PairDistanceTable(const Instance& inst)
    : inst_(&inst), windows_(inst.windows()) {
  const int n = inst.n();
  blocks_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      blocks_[i * n + j] = std::make_unique<Block>();
}

const PairDistanceTable::Block& PairDistanceTable::block(int lo, int hi) const {
  Block& blk = *blocks_[lo * inst_->n() + hi];
  std::call_once(blk.once, [&] {
    const std::size_t w = windows_;
    blk.bits.assign((w * w + 63) / 64, 0);
    const int l = inst_->l;
    const int limit = 2 * inst_->d;
    const auto& a = inst_->sequences[lo];
    const auto& b = inst_->sequences[hi];
    for (std::size_t p = 0; p < w; ++p)
      for (std::size_t r = 0; r < w; ++r) {
        int dist = 0;
        for (int j = 0; j < l && dist <= limit; ++j)
          dist += a.codes[p + j] != b.codes[r + j];
        if (dist <= limit) {
          const std::size_t idx = p * w + r;
          blk.bits[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
      }
  });
  return blk;
}

bool PairDistanceTable::within(int i, int p, int j, int r) const {
  if (i > j) {
    std::swap(i, j);
    std::swap(p, r);
  }
  const Block& blk = block(i, j);
  const std::size_t idx = static_cast<std::size_t>(p) * windows_ + r;
  return (blk.bits[idx / 64] >> (idx % 64)) & 1u;
}

int PairDistanceTable::materialized_pairs() const {
  int count = 0;
  for (const auto& b : blocks_)
    if (b && !b->bits.empty()) ++count;
  return count;
}

PairDistanceTable precompute_pair_distances(const Instance& inst) {
  return PairDistanceTable(inst);
}

}  // namespace qpms
