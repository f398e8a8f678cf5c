#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qpms/model.hpp"
#include "qpms/solvers.hpp"

namespace qpms {

/// Thrown inside a worker once the run's deadline has passed.
struct Cancelled {};

class CancelState {
 public:
  explicit CancelState(std::optional<std::chrono::steady_clock::time_point> deadline)
      : deadline_(deadline) {}

  bool cancelled() const noexcept { return flag_.load(std::memory_order_relaxed); }
  /// Throws Cancelled when the deadline passed or another worker gave up.
  void check();

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<bool> flag_{false};
};

/// Per-unit output: candidate motifs (already verified) and the node count.
class WorkSink {
 public:
  explicit WorkSink(CancelState* cancel = nullptr) : cancel_(cancel) {}

  void tick() {
    if ((++nodes_ & 1023u) == 0 && cancel_ != nullptr) cancel_->check();
  }
  void emit(Motif m) { motifs_.push_back(std::move(m)); }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::vector<Motif>& motifs() noexcept { return motifs_; }

 private:
  CancelState* cancel_;
  std::uint64_t nodes_ = 0;
  std::vector<Motif> motifs_;
};

/// Searches single roots; owns thread-private scratch.
class RootSearcher {
 public:
  virtual ~RootSearcher() = default;
  virtual void search(std::size_t root, WorkSink& sink) = 0;
};

/// A solver run split into independent window-rooted searches.
class SearchPlan {
 public:
  virtual ~SearchPlan() = default;
  virtual std::size_t roots() const = 0;
  virtual std::unique_ptr<RootSearcher> make_searcher() const = 0;
};

std::size_t work_unit_count(std::size_t roots, int chunk);

/// Runs every root of `plan`, `opts.chunk` consecutive roots per work unit,
/// on `opts.threads` workers pulling from one shared queue. The merged set is
/// independent of thread count and completion order.
SolveResult run_plan(const SearchPlan& plan, const Instance& inst,
                     const SolverOptions& opts);

/// Builds the plan for opts.algorithm and runs it.
SolveResult schedule(const Instance& inst, const SolverOptions& opts);

}  // namespace qpms
