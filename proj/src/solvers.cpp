#include "qpms/solvers.hpp"

#include <algorithm>
#include <limits>

#include "qpms/bitpack.hpp"
#include "qpms/scheduler.hpp"
#include "search_engine.hpp"

namespace qpms {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Prune: return "prune";
    case Algorithm::Qpms7: return "qpms7";
    case Algorithm::Traver: return "traver";
    case Algorithm::Sigma: return "sigma";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Oracle, Algorithm::Prune, Algorithm::Qpms7,
                      Algorithm::Traver, Algorithm::Sigma})
    if (to_string(a) == name) return a;
  throw BadParams("unknown algorithm '" + std::string(name) + "'");
}

Verification verify_motif(const Instance& inst, std::span<const Code> candidate) {
  Verification v;
  for (const auto& s : inst.sequences)
    if (hamming_to_sequence(candidate, s) <= inst.d) ++v.support;
  v.is_motif = v.support >= inst.q;
  return v;
}

SolveResult solve_oracle(const Instance& inst, const SolverOptions& opts) {
  const std::uint64_t sigma = inst.alphabet.size();
  std::uint64_t total = 1;
  for (int j = 0; j < inst.l; ++j) {
    if (total > opts.oracle_budget / sigma) {
      total = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    total *= sigma;
  }
  if (total > opts.oracle_budget)
    throw BudgetExceeded("oracle: sigma^l exceeds the enumeration budget of " +
                         std::to_string(opts.oracle_budget));

  SolveResult result;
  result.motifs.l = inst.l;
  result.motifs.d = inst.d;
  result.motifs.q = inst.q;
  result.work_units = 1;
  std::vector<Code> x(inst.l, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    ++result.visited_nodes;
    const Verification v = verify_motif(inst, x);
    if (v.is_motif) result.motifs.motifs.push_back(Motif{Lmer(x), v.support});
    // next l-mer in lexicographic order
    for (int j = inst.l - 1; j >= 0; --j) {
      if (++x[j] < sigma) break;
      x[j] = 0;
    }
  }
  return result;
}

namespace {

/// Tree T_d(x) search from every window x of s_1..s_{n-q+1}, tracking the
/// distance from the current node to every window of each later sequence.
class PruneSearcher final : public RootSearcher {
 public:
  PruneSearcher(const Instance& inst, bool quorum_prune)
      : inst_(inst), quorum_prune_(quorum_prune), nw_(inst.windows()) {
    dists_.resize(inst.n());
  }

  static std::size_t roots(const Instance& inst) {
    return static_cast<std::size_t>(inst.n() - inst.q + 1) * inst.windows();
  }

  void search(std::size_t root, WorkSink& sink) override {
    const int origin = static_cast<int>(root / nw_);
    const int x_start = static_cast<int>(root % nw_);
    const auto x = inst_.sequences[origin].window(x_start, inst_.l);
    root_.assign(x.begin(), x.end());
    t_ = root_;
    later_.clear();
    for (int h = origin + 1; h < inst_.n(); ++h) {
      later_.push_back(h);
      dists_[h] = window_distances(root_, inst_.sequences[h]);
    }
    need_ = inst_.q - 1;
    visit(0, -1, sink);
  }

 private:
  void visit(int level, int last, WorkSink& sink) {
    sink.tick();
    const int d = inst_.d;
    const int loose = 2 * d - level;
    int within = 0;        // q'
    int within_loose = 0;  // q''
    for (int h : later_) {
      const int best = *std::min_element(dists_[h].begin(), dists_[h].end());
      within += best <= d;
      within_loose += best <= loose;
    }
    if (within >= need_) {
      const Verification v = verify_motif(inst_, t_);
      if (v.is_motif) sink.emit(Motif{Lmer(t_), v.support});
    }
    if (quorum_prune_ && within_loose < need_) return;
    if (level == d) return;

    const int sigma = inst_.alphabet.size();
    for (int pos = last + 1; pos < inst_.l; ++pos) {
      const Code original = root_[pos];
      for (int sym = 0; sym < sigma; ++sym) {
        if (sym == original) continue;
        change(pos, original, static_cast<Code>(sym));
        visit(level + 1, pos, sink);
        change(pos, static_cast<Code>(sym), original);
      }
    }
  }

  void change(int pos, Code from, Code to) {
    t_[pos] = to;
    for (int h : later_) incremental_update(dists_[h], pos, from, to, inst_.sequences[h]);
  }

  const Instance& inst_;
  bool quorum_prune_;
  int nw_;
  int need_ = 0;
  std::vector<Code> root_;
  std::vector<Code> t_;
  std::vector<int> later_;
  std::vector<std::vector<int>> dists_;
};

class PrunePlan final : public SearchPlan {
 public:
  PrunePlan(const Instance& inst, bool quorum_prune)
      : inst_(inst), quorum_prune_(quorum_prune) {}
  std::size_t roots() const override { return PruneSearcher::roots(inst_); }
  std::unique_ptr<RootSearcher> make_searcher() const override {
    return std::make_unique<PruneSearcher>(inst_, quorum_prune_);
  }

 private:
  const Instance& inst_;
  bool quorum_prune_;
};

template <int W, template <int> class Windows>
class PairPlan final : public SearchPlan {
 public:
  PairPlan(const Instance& inst, detail::PairConfig config, const PairDistanceTable* table)
      : inst_(inst), config_(config), table_(table), windows_(inst) {}

  std::size_t roots() const override {
    return detail::PairSearcher<W, Windows<W>>::roots(inst_).count();
  }
  std::unique_ptr<RootSearcher> make_searcher() const override {
    return std::make_unique<detail::PairSearcher<W, Windows<W>>>(inst_, windows_, config_,
                                                                 table_);
  }

 private:
  const Instance& inst_;
  detail::PairConfig config_;
  const PairDistanceTable* table_;
  Windows<W> windows_;
};

template <int W>
SolveResult run_pair_w(const Instance& inst, const SolverOptions& opts,
                       detail::PairConfig config, bool compressed,
                       const PairDistanceTable* table) {
  if (compressed) {
    PairPlan<W, detail::PackedWindows> plan(inst, config, table);
    return run_plan(plan, inst, opts);
  }
  PairPlan<W, detail::RawWindows> plan(inst, config, table);
  return run_plan(plan, inst, opts);
}

SolveResult run_pair(const Instance& inst, const SolverOptions& opts,
                     detail::PairConfig config, bool compressed,
                     const PairDistanceTable* table) {
  if (inst.l > detail::kMaxPairLength)
    throw BadParams("pair solvers support l <= " + std::to_string(detail::kMaxPairLength));
  if (inst.alphabet.bits_per_symbol() > detail::kMaxPlanes)
    throw BadParams("alphabet too large for bit-plane packing");
  switch ((inst.l + 31) / 32) {
    case 1: return run_pair_w<1>(inst, opts, config, compressed, table);
    case 2: return run_pair_w<2>(inst, opts, config, compressed, table);
    case 3: return run_pair_w<3>(inst, opts, config, compressed, table);
    default: return run_pair_w<4>(inst, opts, config, compressed, table);
  }
}

}  // namespace

SolveResult solve_qpmsprune(const Instance& inst, const SolverOptions& opts) {
  PrunePlan plan(inst, opts.quorum_prune);
  return run_plan(plan, inst, opts);
}

SolveResult solve_qpms7(const Instance& inst, const SolverOptions& opts) {
  if (inst.q < 2) return solve_qpmsprune(inst, opts);
  const PairDistanceTable table = precompute_pair_distances(inst);
  detail::PairConfig config;
  config.variant = detail::PairVariant::Qpms7;
  config.string_reordering = false;
  config.position_reordering = false;
  return run_pair(inst, opts, config, opts.use_compressed, &table);
}

SolveResult solve_traver(const Instance& inst, const SolverOptions& opts) {
  if (inst.q < 2) return solve_qpmsprune(inst, opts);
  detail::PairConfig config;
  config.variant = detail::PairVariant::Traver;
  config.string_reordering = opts.string_reordering;
  config.position_reordering = opts.position_reordering;
  return run_pair(inst, opts, config, opts.use_compressed, nullptr);
}

SolveResult solve_sigma(const Instance& inst, const SolverOptions& opts) {
  SolverOptions compressed = opts;
  compressed.use_compressed = true;
  return solve_traver(inst, compressed);
}

SolveResult solve(const Instance& inst, const SolverOptions& opts) {
  switch (opts.algorithm) {
    case Algorithm::Oracle: return solve_oracle(inst, opts);
    case Algorithm::Prune: return solve_qpmsprune(inst, opts);
    case Algorithm::Qpms7: return solve_qpms7(inst, opts);
    case Algorithm::Traver: return solve_traver(inst, opts);
    case Algorithm::Sigma: return solve_sigma(inst, opts);
  }
  throw BadParams("unknown algorithm");
}

int default_subset_size(const Instance& inst) {
  const int n = inst.n();
  return std::min(n, std::max({2, n - inst.q + 2, (n + 1) / 2}));
}

SolveResult solve_subset_then_verify(const Instance& inst, int k,
                                     const SolverOptions& opts) {
  const int n = inst.n();
  if (k < 2 || k > n) throw BadParams("subset size must satisfy 2 <= k <= n");
  // Fewer than n - q + 1 strings can miss a motif entirely.
  k = std::max(k, n - inst.q + 1);
  if (k == n) return solve(inst, opts);
  std::vector<Sequence> head(inst.sequences.begin(), inst.sequences.begin() + k);
  const int sub_q = std::max(inst.q - (n - k), 1);
  const Instance sub =
      validate_instance(std::move(head), inst.l, inst.d, sub_q, inst.alphabet);
  SolveResult partial = solve(sub, opts);

  SolveResult result;
  result.motifs.l = inst.l;
  result.motifs.d = inst.d;
  result.motifs.q = inst.q;
  result.visited_nodes = partial.visited_nodes;
  result.work_units = partial.work_units;
  result.timed_out = partial.timed_out;
  for (const Motif& m : partial.motifs.motifs) {
    const Verification v = verify_motif(inst, m.lmer);
    if (v.is_motif) result.motifs.motifs.push_back(Motif{m.lmer, v.support});
  }
  return result;
}

WindowSet WindowSet::all(const Instance& inst, std::span<const int> sequences) {
  WindowSet ws;
  for (int h : sequences) {
    WindowSet::Row row{h, ws.slots_.size(), static_cast<std::size_t>(inst.windows())};
    for (int w = 0; w < inst.windows(); ++w) ws.slots_.push_back(w);
    ws.rows_.push_back(row);
  }
  return ws;
}

WindowSet WindowSet::all(const Instance& inst) {
  std::vector<int> every(inst.n());
  for (int h = 0; h < inst.n(); ++h) every[h] = h;
  return all(inst, every);
}

std::vector<int> WindowSet::windows_of(int sequence) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].sequence == sequence) {
      auto s = row(r);
      return {s.begin(), s.end()};
    }
  return {};
}

WindowSet filter_windows(WindowSet ws, const Instance& inst,
                         std::span<const Code> candidate, int radius) {
  for (auto& row : ws.rows_) {
    const auto& seq = inst.sequences[row.sequence];
    std::size_t kept = 0;
    for (std::size_t k = 0; k < row.size; ++k) {
      const int w = ws.slots_[row.begin + k];
      if (radius >= 0 && hamming_naive(candidate, seq.window(w, inst.l)) <= radius)
        ws.slots_[row.begin + kept++] = w;
    }
    row.size = kept;
  }
  std::stable_sort(ws.rows_.begin(), ws.rows_.end(),
                   [](const WindowSet::Row& a, const WindowSet::Row& b) {
                     return a.size != b.size ? a.size < b.size : a.sequence < b.sequence;
                   });
  return ws;
}

}  // namespace qpms
