#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "qpms/model.hpp"

namespace qpms {

/// Bit-plane packed l-mer. Plane b holds bit b of every symbol code; position
/// j lives at bit (j % 32) of word j / 32 of its plane. Planes are stored
/// back to back, so `words` has bits_per_symbol * ceil(l / 32) entries and
/// every bit at a position >= l is zero.
struct CompressedLmer {
  int length = 0;
  int planes = 0;
  std::vector<std::uint32_t> words;

  int words_per_plane() const noexcept { return (length + 31) / 32; }
  std::span<const std::uint32_t> plane(int b) const {
    return std::span<const std::uint32_t>(words).subspan(
        static_cast<std::size_t>(b) * words_per_plane(), words_per_plane());
  }
  bool operator==(const CompressedLmer&) const = default;
};

CompressedLmer compress_lmer(std::span<const Code> x, int bits_per_symbol);
inline CompressedLmer compress_lmer(const Lmer& x, const Alphabet& alphabet) {
  return compress_lmer(x.codes(), alphabet.bits_per_symbol());
}
Lmer decompress_lmer(const CompressedLmer& c);

/// Set-bit count through the platform facility (std::popcount).
inline int popcount32(std::uint32_t w) noexcept { return std::popcount(w); }
/// Portable set-bit count, kept to cross-check popcount32.
int popcount32_portable(std::uint32_t w) noexcept;

int hamming_naive(std::span<const Code> a, std::span<const Code> b);
inline int hamming_naive(const Lmer& a, const Lmer& b) {
  return hamming_naive(a.codes(), b.codes());
}

int hamming_compressed(const CompressedLmer& a, const CompressedLmer& b);

/// Minimum Hamming distance from x to any length-|x| window of s.
int hamming_to_sequence(std::span<const Code> x, const Sequence& s);
inline int hamming_to_sequence(const Lmer& x, const Sequence& s) {
  return hamming_to_sequence(x.codes(), s);
}

/// Per-window distances from `x` to every window of `s`.
std::vector<int> window_distances(std::span<const Code> x, const Sequence& s);

/// Updates `dists` (distances from a candidate t to every window of `s`) for
/// the change t[position]: from -> to.
void incremental_update(std::span<int> dists, int position, Code from, Code to,
                        const Sequence& s);

/// For each pair of sequences, one bit per (window, window) pair telling
/// whether the two l-mers are within 2d. Rows for a sequence pair are built
/// on first use; lookups are safe from concurrent threads.
class PairDistanceTable {
 public:
  explicit PairDistanceTable(const Instance& inst);

  /// True when d_H(window p of s_i, window r of s_j) <= 2d.
  bool within(int i, int p, int j, int r) const;

  /// Number of sequence pairs whose bits have been materialized.
  int materialized_pairs() const;

 private:
  struct Block {
    std::once_flag once;
    std::vector<std::uint64_t> bits;
  };

  const Block& block(int lo, int hi) const;

  const Instance* inst_;
  int windows_;
  mutable std::vector<std::unique_ptr<Block>> blocks_;
};

PairDistanceTable precompute_pair_distances(const Instance& inst);

}  // namespace qpms
