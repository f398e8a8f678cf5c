#include "qpms/scheduler.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace qpms {

void CancelState::check() {
  if (flag_.load(std::memory_order_relaxed)) throw Cancelled{};
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
    flag_.store(true, std::memory_order_relaxed);
    throw Cancelled{};
  }
}

std::size_t work_unit_count(std::size_t roots, int chunk) {
  const std::size_t c = chunk < 1 ? 1 : static_cast<std::size_t>(chunk);
  return (roots + c - 1) / c;
}

SolveResult run_plan(const SearchPlan& plan, const Instance& inst,
                     const SolverOptions& opts) {
  const std::size_t roots = plan.roots();
  const std::size_t chunk = opts.chunk < 1 ? 1 : static_cast<std::size_t>(opts.chunk);
  const std::size_t units = work_unit_count(roots, opts.chunk);

  CancelState cancel(opts.deadline);
  std::vector<std::vector<Motif>> partial(units);
  std::vector<std::uint64_t> nodes(units, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    auto searcher = plan.make_searcher();
    try {
      for (std::size_t u = next.fetch_add(1); u < units; u = next.fetch_add(1)) {
        WorkSink sink(&cancel);
        const std::size_t end = std::min(roots, (u + 1) * chunk);
        for (std::size_t root = u * chunk; root < end; ++root)
          searcher->search(root, sink);
        canonicalize(sink.motifs());
        partial[u] = std::move(sink.motifs());
        nodes[u] = sink.nodes();
      }
    } catch (const Cancelled&) {
      // other workers notice through the shared flag
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(units);
    }
  };

  const int threads = std::max(1, opts.threads);
  if (threads == 1 || units <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SolveResult result;
  result.motifs.l = inst.l;
  result.motifs.d = inst.d;
  result.motifs.q = inst.q;
  result.work_units = units;
  result.timed_out = cancel.cancelled();
  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  result.motifs.motifs.reserve(total);
  for (std::size_t u = 0; u < units; ++u) {
    result.visited_nodes += nodes[u];
    for (auto& m : partial[u]) result.motifs.motifs.push_back(std::move(m));
  }
  canonicalize(result.motifs.motifs);
  return result;
}

SolveResult schedule(const Instance& inst, const SolverOptions& opts) {
  return solve(inst, opts);
}

}  // namespace qpms
