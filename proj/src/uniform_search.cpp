#include "uniform_search.hpp"

#include <algorithm>
#include <bit>

namespace wordrep::detail {

namespace {

constexpr std::uint64_t bit(std::uint32_t v) { return std::uint64_t{1} << v; }

/// Depth-first construction of a word position by position. For every pair
/// of letters it tracks which of the two came last (`since[v]`: letters
/// placed after v's latest copy) and whether the pair has already failed to
/// alternate (`broken`). A partial word is dropped as soon as
///   - an adjacent pair repeats a letter without the other in between, or
///   - a non-adjacent pair can no longer fail to alternate.
class Searcher {
 public:
  explicit Searcher(const UniformProblem& p)
      : p_(p), n_(p.n), length_(p.base.size()), all_(n_ == 64 ? ~0ULL : bit(static_cast<std::uint32_t>(n_)) - 1) {
    for (std::size_t v = 0; v < n_; ++v) {
      if ((p.free_letters >> v) & 1U) length_ += static_cast<std::size_t>(p.copies[v]);
      nonadj_.push_back(all_ & ~p.adj[v] & ~bit(static_cast<std::uint32_t>(v)));
    }
    frames_.resize(length_ + 1);
    for (auto& f : frames_) {
      f.since.assign(n_, 0);
      f.broken.assign(n_, 0);
      f.remaining.assign(n_, 0);
    }
    Frame& root = frames_[0];
    for (std::size_t v = 0; v < n_; ++v) {
      root.remaining[v] = p.copies[v];
      if (root.remaining[v] > 0) root.available |= bit(static_cast<std::uint32_t>(v));
      if (root.remaining[v] <= 1) root.low |= bit(static_cast<std::uint32_t>(v));
    }
    word_.resize(length_);
  }

  std::size_t length() const noexcept { return length_; }

  /// Letters allowed at `depth` given the frame, ascending.
  std::uint64_t candidates(std::size_t depth) const {
    const Frame& f = frames_[depth];
    std::uint64_t c = f.available & p_.free_letters;
    if (f.base_pos < p_.base.size()) c |= bit(p_.base[f.base_pos]);
    if (depth == 0 && p_.first) c &= bit(*p_.first);
    return c;
  }

  /// Forces `prefix`, then searches the rest. True when a full word is found.
  bool run(std::span<const std::uint32_t> prefix, StopToken& token) {
    token_ = &token;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      if (!((candidates(d) >> prefix[d]) & 1U) || !place(d, prefix[d])) return false;
    }
    return dfs(prefix.size());
  }

  const std::vector<std::uint32_t>& word() const noexcept { return word_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool stopped() const noexcept { return stopped_; }

 private:
  struct Frame {
    std::vector<std::uint64_t> since;
    std::vector<std::uint64_t> broken;
    std::vector<int> remaining;
    std::uint64_t placed = 0;
    std::uint64_t available = 0;  // remaining > 0
    std::uint64_t low = 0;        // remaining <= 1
    std::size_t base_pos = 0;
  };

  bool place(std::size_t depth, std::uint32_t v) {
    const Frame& cur = frames_[depth];
    Frame& nxt = frames_[depth + 1];
    const std::uint64_t vb = bit(v);

    std::uint64_t repeated = 0;
    if (cur.placed & vb) {
      repeated = all_ & ~vb & ~cur.since[v];
      if (repeated & p_.adj[v]) return false;
    }

    std::copy(cur.since.begin(), cur.since.end(), nxt.since.begin());
    std::copy(cur.broken.begin(), cur.broken.end(), nxt.broken.begin());
    std::copy(cur.remaining.begin(), cur.remaining.end(), nxt.remaining.begin());
    nxt.placed = cur.placed | vb;
    nxt.available = cur.available;
    nxt.low = cur.low;
    nxt.base_pos = cur.base_pos;
    if (!((p_.free_letters >> v) & 1U)) ++nxt.base_pos;

    if (repeated) {
      nxt.broken[v] |= repeated;
      for (std::uint64_t m = repeated; m; m &= m - 1) nxt.broken[std::countr_zero(m)] |= vb;
    }
    for (std::size_t w = 0; w < n_; ++w) nxt.since[w] |= vb;
    nxt.since[v] = 0;

    const int left = --nxt.remaining[v];
    if (left == 0) nxt.available &= ~vb;
    if (left <= 1) nxt.low |= vb;

    // v now comes last in each of its pairs. With no copies of v left, a
    // non-adjacent partner with at most one copy left can only alternate.
    if (left == 0 && (nonadj_[v] & ~nxt.broken[v] & nxt.low) != 0) return false;

    if (p_.reversal_tiebreak && depth + 1 >= 2) {
      const std::uint32_t second = depth == 1 ? v : word_[1];
      const std::uint64_t at_least_second = all_ & ~(bit(second) - 1);
      if (depth + 1 < length_ && (nxt.available & at_least_second) == 0) return false;
      if (depth + 1 == length_ && v < second) return false;
    }

    word_[depth] = v;
    if (++nodes_ % 4096 == 0 && token_->poll(4096)) stopped_ = true;
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == length_) return true;
    for (std::uint64_t c = candidates(depth); c && !stopped_; c &= c - 1) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(c));
      if (place(depth, v) && dfs(depth + 1)) return true;
    }
    return false;
  }

  const UniformProblem& p_;
  std::size_t n_;
  std::size_t length_;
  std::uint64_t all_;
  std::vector<std::uint64_t> nonadj_;
  std::vector<Frame> frames_;
  std::vector<std::uint32_t> word_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  StopToken* token_ = nullptr;
};

}  // namespace

UniformResult solve_uniform(const UniformProblem& problem, unsigned jobs, bool deterministic,
                            std::uint64_t node_limit) {
  UniformResult result;
  Searcher probe(problem);
  const std::size_t length = probe.length();

  // Branch on the first freely chosen position: the second letter when the
  // first is forced, otherwise the first.
  std::vector<std::uint32_t> head;
  if (problem.first && length >= 1) head.push_back(*problem.first);
  if (length <= head.size()) {
    std::atomic<std::size_t> best{kNoBranch};
    std::atomic<std::uint64_t> spent{0};
    StopToken token(0, deterministic, best, spent, 0);
    if (probe.run(head, token)) result.word = probe.word();
    result.nodes = probe.nodes();
    return result;
  }

  // Candidate letters at the branching depth.
  std::vector<std::vector<std::uint32_t>> prefixes;
  {
    for (std::uint32_t v = 0; v < problem.n; ++v) {
      auto prefix = head;
      prefix.push_back(v);
      prefixes.push_back(std::move(prefix));
    }
  }

  std::vector<std::vector<std::uint32_t>> words(prefixes.size());
  auto summary = run_branches(prefixes.size(), jobs, deterministic, node_limit,
                              [&](std::size_t b, StopToken& token) {
                                Searcher s(problem);
                                BranchOutcome out;
                                out.found = s.run(prefixes[b], token);
                                out.stopped = s.stopped();
                                out.nodes = s.nodes();
                                if (out.found) words[b] = s.word();
                                return out;
                              });
  result.nodes = summary.nodes;
  result.aborted = summary.aborted;
  if (summary.winner) result.word = words[*summary.winner];
  return result;
}

}  // namespace wordrep::detail
