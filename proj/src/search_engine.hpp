// Internal search engines shared by the tree-based solvers.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "qpms/bitpack.hpp"
#include "qpms/model.hpp"
#include "qpms/neighborhood.hpp"
#include "qpms/scheduler.hpp"
#include "qpms/solvers.hpp"

namespace qpms::detail {

inline constexpr int kMaxPairLength = 128;
inline constexpr int kMaxPlanes = 8;

/// Set of l-mer positions, bit j of word j / 32 for position j.
template <int W>
struct Mask {
  std::array<std::uint32_t, W> w{};

  friend Mask operator&(const Mask& a, const Mask& b) {
    Mask r;
    for (int k = 0; k < W; ++k) r.w[k] = a.w[k] & b.w[k];
    return r;
  }
  friend Mask operator|(const Mask& a, const Mask& b) {
    Mask r;
    for (int k = 0; k < W; ++k) r.w[k] = a.w[k] | b.w[k];
    return r;
  }
  Mask operator~() const {
    Mask r;
    for (int k = 0; k < W; ++k) r.w[k] = ~w[k];
    return r;
  }
  void set(int j) { w[j / 32] |= 1u << (j % 32); }
  int count() const {
    int c = 0;
    for (int k = 0; k < W; ++k) c += std::popcount(w[k]);
    return c;
  }
  /// |this & other|
  int count_and(const Mask& other) const {
    int c = 0;
    for (int k = 0; k < W; ++k) c += std::popcount(w[k] & other.w[k]);
    return c;
  }
};

/// A candidate l-mer in both code and bit-plane form.
template <int W>
struct Candidate {
  std::array<Code, kMaxPairLength> codes{};
  std::array<std::array<std::uint32_t, W>, kMaxPlanes> planes{};

  void load(std::span<const Code> x, int bits) {
    planes = {};
    for (std::size_t j = 0; j < x.size(); ++j) {
      codes[j] = x[j];
      for (int b = 0; b < bits; ++b)
        if ((x[j] >> b) & 1u) planes[b][j / 32] |= 1u << (j % 32);
    }
  }
  void set(int pos, Code sym, int bits) {
    const Code old = codes[pos];
    const std::uint32_t bit = 1u << (pos % 32);
    for (int b = 0; b < bits; ++b)
      if (((old ^ sym) >> b) & 1u) planes[b][pos / 32] ^= bit;
    codes[pos] = sym;
  }
};

/// Mismatch masks computed symbol by symbol from the raw sequences.
template <int W>
class RawWindows {
 public:
  explicit RawWindows(const Instance& inst) : inst_(&inst) {}

  int bits() const noexcept { return inst_->alphabet.bits_per_symbol(); }

  Mask<W> mismatch(const Candidate<W>& t, int h, int w) const {
    Mask<W> m;
    const Code* y = inst_->sequences[h].codes.data() + w;
    for (int j = 0; j < inst_->l; ++j)
      if (t.codes[j] != y[j]) m.set(j);
    return m;
  }

 private:
  const Instance* inst_;
};

/// Mismatch masks from bit-plane compressed windows: XOR per plane, OR
/// across planes.
template <int W>
class PackedWindows {
 public:
  explicit PackedWindows(const Instance& inst)
      : bits_(inst.alphabet.bits_per_symbol()),
        windows_(inst.windows()),
        stride_(bits_ * W) {
    words_.assign(static_cast<std::size_t>(inst.n()) * windows_ * stride_, 0u);
    for (int h = 0; h < inst.n(); ++h)
      for (int w = 0; w < windows_; ++w) {
        const CompressedLmer c = compress_lmer(inst.sequences[h].window(w, inst.l), bits_);
        std::copy(c.words.begin(), c.words.end(),
                  words_.begin() + (static_cast<std::size_t>(h) * windows_ + w) * stride_);
      }
  }

  int bits() const noexcept { return bits_; }

  Mask<W> mismatch(const Candidate<W>& t, int h, int w) const {
    const std::uint32_t* y =
        words_.data() + (static_cast<std::size_t>(h) * windows_ + w) * stride_;
    Mask<W> m;
    for (int b = 0; b < bits_; ++b)
      for (int k = 0; k < W; ++k) m.w[k] |= t.planes[b][k] ^ y[b * W + k];
    return m;
  }

 private:
  int bits_;
  int windows_;
  int stride_;
  std::vector<std::uint32_t> words_;
};

enum class PairVariant { Qpms7, Traver };

struct PairConfig {
  PairVariant variant = PairVariant::Traver;
  bool string_reordering = true;
  bool position_reordering = true;
};

/// Roots of the pair search: (origin sequence, window of x0) in origin-major
/// order.
struct RootIndex {
  int origins = 0;
  int windows = 0;
  std::size_t count() const {
    return static_cast<std::size_t>(origins) * static_cast<std::size_t>(windows);
  }
};

/// Pair-guided neighborhood search. For a root x0 in s_i and each admissible
/// reference window r, walks the tree T_d(x0) keeping only nodes whose
/// subtree can still reach B(r, d); for every remaining sequence a row of
/// windows whose ball meets the subtree is kept, and a subtree is cut once
/// too few sequences have a non-empty row.
template <int W, class Windows>
class PairSearcher final : public RootSearcher {
 public:
  PairSearcher(const Instance& inst, const Windows& windows, PairConfig config,
               const PairDistanceTable* table)
      : inst_(inst),
        windows_(windows),
        config_(config),
        table_(table),
        n_(inst.n()),
        l_(inst.l),
        d_(inst.d),
        sigma_(inst.alphabet.size()),
        nw_(inst.windows()),
        bits_(windows.bits()) {
    mxy_.resize(static_cast<std::size_t>(n_) * nw_);
    mry_.resize(static_cast<std::size_t>(n_) * nw_);
    arena_.resize(static_cast<std::size_t>(d_ + 2) * n_ * nw_);
    levels_.resize(d_ + 2);
    suffix_.resize(l_ + 1);
  }

  static RootIndex roots(const Instance& inst) {
    return RootIndex{inst.n() - inst.q + 1, inst.windows()};
  }

  void search(std::size_t root, WorkSink& sink) override {
    const int origin = static_cast<int>(root / nw_);
    const int x_start = static_cast<int>(root % nw_);
    search_root(origin, x_start, sink);
  }

 private:
  struct Row {
    int sequence;
    std::size_t begin;
    std::size_t size;
  };

  Mask<W>& mxy(int h, int w) { return mxy_[static_cast<std::size_t>(h) * nw_ + w]; }
  Mask<W>& mry(int h, int w) { return mry_[static_cast<std::size_t>(h) * nw_ + w]; }

  void search_root(int origin, int x_start, WorkSink& sink) {
    x0_.load(inst_.sequences[origin].window(x_start, l_), bits_);
    for (int h = 0; h < n_; ++h) {
      if (h == origin) continue;
      for (int w = 0; w < nw_; ++w) mxy(h, w) = windows_.mismatch(x0_, h, w);
    }

    for (int ref : reference_sequences(origin)) {
      verify_.clear();
      for (int h = 0; h < n_; ++h) {
        if (h == origin || h == ref) continue;
        if (config_.variant == PairVariant::Traver && !config_.string_reordering &&
            h < ref)
          continue;
        if (config_.variant == PairVariant::Traver && h < origin) continue;
        verify_.push_back(h);
      }
      need_ = inst_.q - 2;
      if (static_cast<int>(verify_.size()) < need_) continue;
      for (int r = 0; r < nw_; ++r) {
        if (table_ != nullptr) {
          if (!table_->within(origin, x_start, ref, r)) continue;
        } else if (mxy(ref, r).count() > 2 * d_) {
          continue;
        }
        search_pair(origin, x_start, ref, r, sink);
      }
    }
  }

  /// Sequences supplying the reference window r for a root in `origin`.
  std::vector<int> reference_sequences(int origin) const {
    const int n = n_;
    const int q = inst_.q;
    std::vector<int> refs;
    if (config_.variant == PairVariant::Qpms7 || !config_.string_reordering) {
      for (int j = origin + 1; j < n - q + 2 && j < n; ++j) refs.push_back(j);
      return refs;
    }
    // Among the later sequences, at most (n - origin - 1) - (q - 1) miss any
    // given motif of this root, so that many plus one always contain one
    // supporting sequence. Take those farthest from x0.
    const int take = n - origin - q + 1;
    std::vector<std::pair<int, int>> ranked;  // (-min distance, sequence)
    for (int h = origin + 1; h < n; ++h) {
      int best = l_ + 1;
      for (int w = 0; w < nw_; ++w)
        best = std::min(best, mxy_[static_cast<std::size_t>(h) * nw_ + w].count());
      ranked.emplace_back(-best, h);
    }
    std::sort(ranked.begin(), ranked.end());
    for (int k = 0; k < take && k < static_cast<int>(ranked.size()); ++k)
      refs.push_back(ranked[k].second);
    return refs;
  }

  void search_pair(int origin, int x_start, int ref, int r_start, WorkSink& sink) {
    ref_.load(inst_.sequences[ref].window(r_start, l_), bits_);
    mxr_ = mxy(ref, r_start);

    if (config_.position_reordering) {
      int k = 0;
      for (int j = 0; j < l_; ++j)
        if (x0_.codes[j] != ref_.codes[j]) perm_[k++] = j;
      for (int j = 0; j < l_; ++j)
        if (x0_.codes[j] == ref_.codes[j]) perm_[k++] = j;
    } else {
      for (int j = 0; j < l_; ++j) perm_[j] = j;
    }
    // suffix_[s]: positions perm_[s..l-1]
    suffix_[l_] = Mask<W>{};
    for (int s = l_ - 1; s >= 0; --s) {
      suffix_[s] = suffix_[s + 1];
      suffix_[s].set(perm_[s]);
    }

    // Root rows: windows whose ball meets B(x0, d) and B(r, d).
    const int dxr = mxr_.count();
    if (dxr > 2 * d_) return;
    t_ = x0_;
    auto& rows = levels_[d_ + 1];
    rows.clear();
    std::size_t top = static_cast<std::size_t>(d_ + 1) * n_ * nw_;
    int lost = 0;
    const int slack = static_cast<int>(verify_.size()) - need_;
    for (int h : verify_) {
      const std::size_t begin = top;
      for (int w = 0; w < nw_; ++w) {
        if (table_ != nullptr) {
          if (!table_->within(origin, x_start, h, w) || !table_->within(ref, r_start, h, w))
            continue;
        }
        const int a = mxy(h, w).count();
        if (a > 2 * d_) continue;
        const Mask<W> m = windows_.mismatch(ref_, h, w);
        const int b = m.count();
        if (b > 2 * d_) continue;
        if ((mxr_ | m).count() > 3 * d_) continue;
        mry(h, w) = m;
        arena_[top++] = w;
      }
      if (top == begin) {
        if (++lost > slack) return;
      } else {
        rows.push_back(Row{h, begin, top - begin});
      }
    }
    sort_rows(rows);
    visit(0, -1, dxr, sink, d_ + 1);
  }

  static void sort_rows(std::vector<Row>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return a.size != b.size ? a.size < b.size : a.sequence < b.sequence;
    });
  }

  /// Node at `level` whose last change is at permuted index `last`.
  /// `t_` holds the node string; `dtr` is d_H(t, r).
  void visit(int level, int last, int dtr, WorkSink& sink, int parent) {
    sink.tick();
    const Mask<W>& suffix = suffix_[last + 1];
    const int dxr_suffix = mxr_.count_and(suffix);
    const int ra = d_ - level;
    const int rb = d_ - (dtr - dxr_suffix);

    // Survivors of the parent's rows go to this level's arena region.
    std::vector<Row>& next = levels_[level];
    next.clear();
    const std::vector<Row>& source = levels_[parent];
    std::size_t top = static_cast<std::size_t>(level) * n_ * nw_;
    int lost = 0;
    int support = 0;
    const int slack = static_cast<int>(verify_.size()) - need_;
    for (const Row& row : source) {
      const std::size_t begin = top;
      bool supported = false;
      const int h = row.sequence;
      for (std::size_t k = 0; k < row.size; ++k) {
        const int w = arena_[row.begin + k];
        const int dty = windows_.mismatch(t_, h, w).count();
        const Mask<W>& xy = mxy(h, w);
        const int a = xy.count_and(suffix);
        const int rc = d_ - (dty - a);
        if (rc < 0 || rc + ra < a) continue;
        const Mask<W>& ry = mry(h, w);
        if (rb + rc < ry.count_and(suffix)) continue;
        if (ra + rb + rc < (mxr_ | ry).count_and(suffix)) continue;
        arena_[top++] = w;
        supported |= dty <= d_;
      }
      if (top == begin) {
        if (++lost > slack) return;
      } else {
        next.push_back(Row{h, begin, top - begin});
        support += supported;
      }
    }
    sort_rows(next);

    if (dtr <= d_ && support >= need_) emit(sink);
    if (level == d_) return;

    for (int idx = last + 1; idx < l_; ++idx) {
      const int pos = perm_[idx];
      const Mask<W>& child_suffix = suffix_[idx + 1];
      const int child_dxr_suffix = mxr_.count_and(child_suffix);
      const Code original = x0_.codes[pos];
      const Code ref_sym = ref_.codes[pos];
      const int child_ra = ra - 1;
      for (int sym = 0; sym < sigma_; ++sym) {
        if (sym == original) continue;
        const int child_dtr = dtr - (original != ref_sym) + (sym != ref_sym);
        const int child_rb = d_ - (child_dtr - child_dxr_suffix);
        if (child_rb < 0 || child_ra + child_rb < child_dxr_suffix) continue;
        t_.set(pos, static_cast<Code>(sym), bits_);
        visit(level + 1, idx, child_dtr, sink, level);
        t_.set(pos, original, bits_);
      }
    }
  }

  void emit(WorkSink& sink) {
    const std::span<const Code> codes(t_.codes.data(), l_);
    const Verification v = verify_motif(inst_, codes);
    if (v.is_motif) sink.emit(Motif{Lmer(codes), v.support});
  }

  const Instance& inst_;
  const Windows& windows_;
  PairConfig config_;
  const PairDistanceTable* table_;
  int n_, l_, d_, sigma_, nw_, bits_;

  int need_ = 0;
  std::vector<int> verify_;
  Candidate<W> x0_;
  Candidate<W> ref_;
  Candidate<W> t_;
  Mask<W> mxr_;
  std::array<int, kMaxPairLength> perm_{};
  std::vector<Mask<W>> suffix_;
  std::vector<Mask<W>> mxy_;
  std::vector<Mask<W>> mry_;
  std::vector<int> arena_;
  std::vector<std::vector<Row>> levels_;
};

}  // namespace qpms::detail
