#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpms/error.hpp"

namespace qpms {

using Code = std::uint8_t;

/// Ordered symbol set. Codes are the symbol indices, so code order is the
/// alphabetical order of `symbols()`.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  static Alphabet dna();      // A C G T
  static Alphabet protein();  // the 20 amino acids, alphabetical

  const std::string& symbols() const noexcept { return symbols_; }
  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  int bits_per_symbol() const noexcept { return bits_; }

  /// Code for `c` (case-insensitive), or -1 when `c` is not in the alphabet.
  int code_of(char c) const noexcept {
    return lookup_[static_cast<unsigned char>(c)];
  }
  char symbol(Code code) const { return symbols_.at(code); }

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  int bits_ = 0;
  std::array<int, 256> lookup_{};
};

/// A fixed-length string over an alphabet, stored as codes.
class Lmer {
 public:
  Lmer() = default;
  explicit Lmer(std::vector<Code> codes) : codes_(std::move(codes)) {}
  Lmer(std::span<const Code> codes) : codes_(codes.begin(), codes.end()) {}

  std::size_t size() const noexcept { return codes_.size(); }
  Code operator[](std::size_t i) const { return codes_[i]; }
  Code& operator[](std::size_t i) { return codes_[i]; }
  std::span<const Code> codes() const noexcept { return codes_; }
  auto begin() const noexcept { return codes_.begin(); }
  auto end() const noexcept { return codes_.end(); }

  auto operator<=>(const Lmer&) const = default;
  bool operator==(const Lmer&) const = default;

 private:
  std::vector<Code> codes_;
};

struct Sequence {
  std::vector<Code> codes;
  std::string id;

  std::size_t size() const noexcept { return codes.size(); }
  /// The length-`l` substring starting at 0-based `start`.
  std::span<const Code> window(std::size_t start, std::size_t l) const {
    return std::span<const Code>(codes).subspan(start, l);
  }
  bool operator==(const Sequence&) const = default;
};

/// A validated quorum planted-motif problem. Construct with validate_instance.
struct Instance {
  Alphabet alphabet = Alphabet::dna();
  std::vector<Sequence> sequences;
  int l = 0;
  int d = 0;
  int q = 0;

  int n() const noexcept { return static_cast<int>(sequences.size()); }
  int m() const noexcept {
    return sequences.empty() ? 0 : static_cast<int>(sequences.front().size());
  }
  int windows() const noexcept { return m() - l + 1; }
};

struct Motif {
  Lmer lmer;
  int support = 0;
  bool operator==(const Motif&) const = default;
};

/// Deduplicated motifs in code-lexicographic order.
struct MotifSet {
  int l = 0;
  int d = 0;
  int q = 0;
  std::vector<Motif> motifs;

  std::size_t size() const noexcept { return motifs.size(); }
  bool contains(const Lmer& x) const;
  bool operator==(const MotifSet&) const = default;
};

/// Sorts by l-mer and drops duplicate l-mers, keeping the first support seen.
void canonicalize(std::vector<Motif>& motifs);

Sequence encode_sequence(std::string_view text, const Alphabet& alphabet);
Lmer encode_lmer(std::string_view text, const Alphabet& alphabet);
std::string decode(std::span<const Code> codes, const Alphabet& alphabet);
inline std::string decode(const Lmer& x, const Alphabet& alphabet) {
  return decode(x.codes(), alphabet);
}

std::vector<Sequence> parse_fasta(std::string_view text,
                                  const Alphabet& alphabet = Alphabet::dna());

Instance validate_instance(std::vector<Sequence> sequences, int l, int d, int q,
                           const Alphabet& alphabet = Alphabet::dna());

}  // namespace qpms
