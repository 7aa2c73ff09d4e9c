#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace wordrep::detail {

inline constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

/// Shared state handed to each branch so it can notice cancellation and
/// charge explored nodes against a common budget.
class StopToken {
 public:
  StopToken(std::size_t branch, bool deterministic, const std::atomic<std::size_t>& best,
            std::atomic<std::uint64_t>& spent, std::uint64_t limit)
      : branch_(branch), deterministic_(deterministic), best_(best), spent_(spent), limit_(limit) {}

  /// Charge `delta` nodes; true when the branch must stop.
  bool poll(std::uint64_t delta) {
    if (limit_ != 0 && spent_.fetch_add(delta, std::memory_order_relaxed) + delta > limit_) {
      over_budget_ = true;
      return true;
    }
    const std::size_t best = best_.load(std::memory_order_relaxed);
    cancelled_ = deterministic_ ? best < branch_ : best != kNoBranch;
    return cancelled_;
  }

  bool over_budget() const noexcept { return over_budget_; }
  bool cancelled() const noexcept { return cancelled_; }

 private:
  std::size_t branch_;
  bool deterministic_;
  const std::atomic<std::size_t>& best_;
  std::atomic<std::uint64_t>& spent_;
  std::uint64_t limit_;
  bool over_budget_ = false;
  bool cancelled_ = false;
};

struct BranchOutcome {
  bool found = false;
  bool stopped = false;  // cancelled or over budget before finishing
  std::uint64_t nodes = 0;
};

struct BranchSummary {
  std::optional<std::size_t> winner;
  std::uint64_t nodes = 0;
  bool aborted = false;  // no witness, and the budget stopped the search
};

/// Runs fn(branch, token) for branch = 0..count-1 over `jobs` threads.
/// Deterministic mode picks the lowest successful branch and only counts
/// nodes of branches up to it, so the summary does not depend on `jobs`.
template <class Fn>
BranchSummary run_branches(std::size_t count, unsigned jobs, bool deterministic,
                           std::uint64_t node_limit, Fn&& fn) {
  std::atomic<std::size_t> best{kNoBranch};
  std::atomic<std::uint64_t> spent{0};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> budget_hit{false};
  std::vector<BranchOutcome> outcomes(count);
  std::vector<bool> over_budget(count, false);

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= count) return;
      const std::size_t cur = best.load();
      if ((deterministic ? cur < b : cur != kNoBranch) || budget_hit.load()) {
        outcomes[b].stopped = true;
        continue;
      }
      StopToken token(b, deterministic, best, spent, node_limit);
      outcomes[b] = fn(b, token);
      if (token.over_budget()) {
        over_budget[b] = true;
        budget_hit = true;
      }
      if (outcomes[b].found) {
        std::size_t expected = best.load();
        while (b < expected && !best.compare_exchange_weak(expected, b)) {
        }
      }
    }
  };

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BranchSummary summary;
  for (std::size_t b = 0; b < count; ++b) {
    if (outcomes[b].found) {
      summary.winner = b;
      break;
    }
  }
  const std::size_t last = deterministic && summary.winner ? *summary.winner : count - 1;
  for (std::size_t b = 0; b < count; ++b) {
    if (deterministic && b > last) break;
    summary.nodes += outcomes[b].nodes;
    if (over_budget[b] || (!summary.winner && outcomes[b].stopped)) summary.aborted = true;
  }
  // A witness stands on its own even when the budget cut other branches short.
  if (summary.winner) summary.aborted = false;
  return summary;
}

}  // namespace wordrep::detail
