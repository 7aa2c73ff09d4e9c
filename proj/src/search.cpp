#include "wordrep/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

#include "uniform_search.hpp"
#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.size());
  for (Vertex v = 0; v < g.size(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

Word to_word(const Graph& g, const std::vector<std::uint32_t>& letters) {
  std::vector<std::string> tokens;
  tokens.reserve(letters.size());
  for (auto l : letters) tokens.push_back(g.label(l));
  return Word(tokens);
}

void finish(Certificate& c, const Graph& g, const detail::UniformResult& r, Clock::time_point start) {
  c.nodes_explored = r.nodes;
  c.elapsed_ms = ms_since(start);
  if (r.word) {
    Word w = to_word(g, *r.word);
    if (!represents(w, g)) throw VerificationError("search produced a word that does not represent the graph");
    c.status = SearchStatus::witness_found;
    c.witness = std::move(w);
  } else {
    c.status = r.aborted ? SearchStatus::aborted : SearchStatus::exhausted;
  }
}

}  // namespace

LinearOrderFamily::LinearOrderFamily(std::vector<std::vector<std::string>> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidInput("a linear order family needs at least one order");
  std::vector<std::string> ref = orders_.front();
  std::sort(ref.begin(), ref.end());
  if (std::adjacent_find(ref.begin(), ref.end()) != ref.end()) throw InvalidInput("repeated vertex in a linear order");
  for (const auto& o : orders_) {
    std::vector<std::string> s = o;
    std::sort(s.begin(), s.end());
    if (s != ref) throw InvalidInput("linear orders must be permutations of the same vertex set");
  }
}

Word LinearOrderFamily::concatenate() const {
  std::vector<std::string> tokens;
  for (const auto& o : orders_) tokens.insert(tokens.end(), o.begin(), o.end());
  return Word(tokens);
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::witness_found:
      return "witness-found";
    case SearchStatus::exhausted:
      return "exhausted";
    case SearchStatus::aborted:
      return "aborted";
  }
  return "unknown";
}

Certificate find_k_uniform_representant(const Graph& g, int k, const SearchOptions& opts) {
  if (k <= 0) throw InvalidInput("k must be positive");
  if (g.size() > 64) throw InvalidInput("k-uniform search supports at most 64 vertices");
  const auto start = Clock::now();
  Certificate c;
  c.query = "k-uniform k=" + std::to_string(k) + " n=" + std::to_string(g.size());
  if (g.empty()) {
    c.status = SearchStatus::witness_found;
    c.witness = Word();
    return c;
  }

  detail::UniformProblem p;
  p.n = g.size();
  p.adj = adjacency_masks(g);
  p.copies.assign(p.n, k);
  p.free_letters = p.n == 64 ? ~0ULL : (std::uint64_t{1} << p.n) - 1;
  Vertex first = 0;
  for (Vertex v = 1; v < g.size(); ++v) {
    if (g.degree(v) > g.degree(first)) first = v;
  }
  p.first = static_cast<std::uint32_t>(first);
  p.reversal_tiebreak = true;

  finish(c, g, detail::solve_uniform(p, opts.jobs, opts.deterministic, opts.node_limit), start);
  return c;
}

Certificate find_interleaving(const Word& base, std::span<const std::string> fresh, const Graph& target, int k,
                              const SearchOptions& opts) {
  if (k <= 0) throw InvalidInput("k must be positive");
  if (target.size() > 64) throw InvalidInput("interleaving search supports at most 64 vertices");
  const auto start = Clock::now();

  detail::UniformProblem p;
  p.n = target.size();
  p.adj = adjacency_masks(target);
  p.copies.assign(p.n, 0);
  std::vector<bool> covered(p.n, false);
  for (Letter l : base.letters()) {
    const Vertex v = target.index_of(base.alphabet()[l]);
    p.base.push_back(static_cast<std::uint32_t>(v));
    ++p.copies[v];
    covered[v] = true;
  }
  for (const auto& label : fresh) {
    const Vertex v = target.index_of(label);
    if (covered[v]) throw InvalidInput("fresh letter " + label + " already placed");
    covered[v] = true;
    p.copies[v] = k;
    p.free_letters |= std::uint64_t{1} << v;
  }
  for (Vertex v = 0; v < p.n; ++v) {
    if (!covered[v]) throw InvalidInput("vertex " + target.label(v) + " is neither in the base word nor fresh");
  }

  Certificate c;
  c.query = "interleave k=" + std::to_string(k) + " fresh=" + std::to_string(fresh.size()) +
            " base=" + std::to_string(base.size());
  finish(c, target, detail::solve_uniform(p, opts.jobs, opts.deterministic, opts.node_limit), start);
  return c;
}

RepresentationNumber representation_number(const Graph& g, const SearchOptions& opts, std::optional<int> max_k) {
  RepresentationNumber result;
  const int n = static_cast<int>(g.size());
  const int limit = max_k ? *max_k : std::max(n, 1);
  if (limit <= 0) throw InvalidInput("max k must be positive");

  if (g.is_complete()) {
    Certificate c;
    c.query = "k-uniform k=1 n=" + std::to_string(n);
    c.status = SearchStatus::witness_found;
    c.witness = Word(g.labels());
    result.attempts.push_back(std::move(c));
    result.k = 1;
    return result;
  }

  for (int k = 1; k <= limit; ++k) {
    result.attempts.push_back(find_k_uniform_representant(g, k, opts));
    const Certificate& c = result.attempts.back();
    if (c.found()) {
      result.k = k;
      return result;
    }
    if (c.status == SearchStatus::aborted) {
      result.aborted = true;
      return result;
    }
  }
  // A word-representable graph on n vertices is n-representable.
  if (limit >= n) result.word_representable = false;
  return result;
}

// ---------------------------------------------------------------------------
// Transitive orientations

namespace {

class TransitiveSearch {
 public:
  TransitiveSearch(const Graph& g, bool fix_first)
      : g_(g), edges_(g.edges()), out_(g.size(), 0), in_(g.size(), 0), fix_first_(fix_first) {
    adj_ = adjacency_masks(g);
  }

  /// Calls fn(orientation) for each transitive orientation; fn returns false to stop.
  template <class Fn>
  void run(Fn&& fn) {
    stop_ = false;
    dfs(0, fn);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool consistent(Vertex u, Vertex v) const {
    // u -> v closes 2-paths w -> u -> v and u -> v -> w.
    for (std::uint64_t m = in_[u]; m; m &= m - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(m));
      if (w != v && (!((adj_[v] >> w) & 1U) || ((out_[v] >> w) & 1U))) return false;
    }
    for (std::uint64_t m = out_[v]; m; m &= m - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(m));
      if (w != u && (!((adj_[u] >> w) & 1U) || ((out_[w] >> u) & 1U))) return false;
    }
    return true;
  }

  template <class Fn>
  void dfs(std::size_t i, Fn& fn) {
    if (stop_) return;
    if (i == edges_.size()) {
      std::vector<Edge> arcs;
      for (Vertex u = 0; u < g_.size(); ++u) {
        for (std::uint64_t m = out_[u]; m; m &= m - 1) arcs.emplace_back(u, static_cast<Vertex>(std::countr_zero(m)));
      }
      Orientation d(g_, arcs);
      if (!is_transitive(d)) throw VerificationError("orientation search produced a non-transitive orientation");
      if (!fn(d)) stop_ = true;
      return;
    }
    const auto [a, b] = edges_[i];
    for (int dir = 0; dir < 2 && !stop_; ++dir) {
      if (fix_first_ && i == 0 && dir == 1) break;
      const Vertex u = dir == 0 ? a : b;
      const Vertex v = dir == 0 ? b : a;
      ++nodes_;
      if (!consistent(u, v)) continue;
      out_[u] |= std::uint64_t{1} << v;
      in_[v] |= std::uint64_t{1} << u;
      dfs(i + 1, fn);
      out_[u] &= ~(std::uint64_t{1} << v);
      in_[v] &= ~(std::uint64_t{1} << u);
    }
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
  bool fix_first_;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Certificate find_transitive_orientation(const Graph& g, const SearchOptions&) {
  if (g.size() > 64) throw InvalidInput("orientation search supports at most 64 vertices");
  const auto start = Clock::now();
  Certificate c;
  c.query = "transitive-orientation n=" + std::to_string(g.size());
  // Reversing a transitive orientation keeps it transitive, so the first
  // edge may be fixed low -> high; that is also the first choice tried.
  TransitiveSearch s(g, true);
  std::optional<Orientation> found;
  s.run([&](const Orientation& d) {
    found = d;
    return false;
  });
  c.nodes_explored = s.nodes();
  c.elapsed_ms = ms_since(start);
  if (found) {
    c.status = SearchStatus::witness_found;
    c.witness = *found;
  } else {
    c.status = SearchStatus::exhausted;
  }
  return c;
}

std::vector<Orientation> all_transitive_orientations(const Graph& g, std::size_t limit) {
  if (g.size() > 64) throw InvalidInput("orientation search supports at most 64 vertices");
  std::vector<Orientation> out;
  TransitiveSearch s(g, false);
  s.run([&](const Orientation& d) {
    out.push_back(d);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Poset dimension

std::vector<std::vector<Vertex>> linear_extensions(const Orientation& d) {
  const std::size_t n = d.base().size();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> prefix;
  std::uint64_t placed = 0;
  auto rec = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      out.push_back(prefix);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t vb = std::uint64_t{1} << v;
      if ((placed & vb) || (d.predecessors(v) & ~placed)) continue;
      placed |= vb;
      prefix.push_back(v);
      self(self);
      prefix.pop_back();
      placed &= ~vb;
    }
  };
  rec(rec);
  return out;
}

PosetDimension poset_dimension(const Orientation& d) {
  if (!is_transitive(d)) throw InvalidInput("poset dimension needs a transitive orientation");
  const Graph& g = d.base();
  const std::size_t n = g.size();
  PosetDimension result;
  if (n == 0) {
    result.dimension = 0;
    return result;
  }

  const auto exts = linear_extensions(d);
  result.linear_extensions = exts.size();

  // Extensions form a realizer iff they reverse every critical pair: an
  // incomparable (a, b) with everything below a below b and everything above
  // b above a. Pair (b, a) is covered by an extension putting b before a.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b || g.has_edge(a, b)) continue;
      const bool down = (d.predecessors(a) & ~d.predecessors(b)) == 0;
      const bool up = (d.successors(b) & ~d.successors(a)) == 0;
      if (down && up) pairs.emplace_back(b, a);
    }
  }
  const std::size_t words = std::max<std::size_t>((pairs.size() + 63) / 64, 1);
  std::vector<std::vector<std::uint64_t>> patterns;
  std::vector<std::size_t> source;  // first extension with each pattern
  {
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    for (std::size_t e = 0; e < exts.size(); ++e) {
      std::vector<std::size_t> pos(n);
      for (std::size_t i = 0; i < n; ++i) pos[exts[e][i]] = i;
      std::vector<std::uint64_t> pat(words, 0);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (pos[pairs[p].first] < pos[pairs[p].second]) pat[p / 64] |= std::uint64_t{1} << (p % 64);
      }
      if (seen.emplace(pat, e).second) {
        patterns.push_back(std::move(pat));
        source.push_back(e);
      }
    }
  }
  // Drop patterns strictly contained in another one.
  auto subset = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    for (std::size_t i = 0; i < words; ++i) {
      if (x[i] & ~y[i]) return false;
    }
    return true;
  };
  std::vector<std::vector<std::uint64_t>> cover;
  std::vector<std::size_t> cover_ext;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < patterns.size() && !dominated; ++j) {
      dominated = j != i && patterns[j] != patterns[i] && subset(patterns[i], patterns[j]);
    }
    if (!dominated) {
      cover.push_back(patterns[i]);
      cover_ext.push_back(source[i]);
    }
  }
  std::vector<std::uint64_t> full(words, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) full[p / 64] |= std::uint64_t{1} << (p % 64);

  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> have(words, 0);
  auto first_uncovered = [&]() -> std::optional<std::size_t> {
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t missing = full[w] & ~have[w];
      if (missing) return w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
    }
    return std::nullopt;
  };
  auto rec = [&](auto&& self, int left) -> bool {
    ++result.nodes;
    const auto gap = first_uncovered();
    if (!gap) return true;
    if (left == 0) return false;
    const std::size_t w = *gap / 64;
    const std::uint64_t b = std::uint64_t{1} << (*gap % 64);
    for (std::size_t e = 0; e < cover.size(); ++e) {
      if (!(cover[e][w] & b)) continue;
      const auto saved = have;
      for (std::size_t i = 0; i < words; ++i) have[i] |= cover[e][i];
      chosen.push_back(e);
      if (self(self, left - 1)) return true;
      chosen.pop_back();
      have = saved;
    }
    return false;
  };

  for (int t = 1;; ++t) {
    chosen.clear();
    std::fill(have.begin(), have.end(), 0);
    if (rec(rec, t)) {
      result.dimension = t;
      break;
    }
  }

  std::vector<std::vector<std::string>> orders;
  for (auto e : chosen) {
    std::vector<std::string> o;
    for (auto v : exts[cover_ext[e]]) o.push_back(g.label(v));
    orders.push_back(std::move(o));
  }
  // A chain has nothing to cover but still needs its one extension.
  if (orders.empty()) {
    std::vector<std::string> o;
    for (auto v : exts.front()) o.push_back(g.label(v));
    orders.push_back(std::move(o));
  }
  result.realizer = LinearOrderFamily(std::move(orders));
  return result;
}

Certificate find_permutational_representation(const Graph& g, int k, const SearchOptions& opts) {
  if (k <= 0) throw InvalidInput("k must be positive");
  const auto start = Clock::now();
  Certificate c;
  c.query = "permutational k=" + std::to_string(k) + " n=" + std::to_string(g.size());
  if (g.empty()) {
    c.status = SearchStatus::witness_found;
    c.witness = Word();
    return c;
  }
  Certificate orient = find_transitive_orientation(g, opts);
  c.nodes_explored = orient.nodes_explored;
  if (!orient.found()) {
    c.status = SearchStatus::exhausted;
    c.elapsed_ms = ms_since(start);
    return c;
  }
  // Every transitive orientation of g has the same dimension, so one suffices.
  PosetDimension dim = poset_dimension(orient.orientation());
  c.nodes_explored += dim.nodes;
  c.elapsed_ms = ms_since(start);
  if (dim.dimension > k) {
    c.status = SearchStatus::exhausted;
    return c;
  }
  auto orders = dim.realizer.orders();
  const std::size_t t = orders.size();
  for (std::size_t i = t; i < static_cast<std::size_t>(k); ++i) orders.push_back(orders[i % t]);
  LinearOrderFamily family(std::move(orders));
  if (!represents(family.concatenate(), g)) throw VerificationError("realizer does not represent the graph");
  c.status = SearchStatus::witness_found;
  c.witness = std::move(family);
  return c;
}

}  // namespace wordrep
