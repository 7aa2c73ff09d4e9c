#include "wordrep/orientation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "parallel.hpp"
#include "text_util.hpp"

namespace wordrep {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

template <class F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

void require_small(const Graph& g) {
  if (g.size() > 64) throw InvalidInput("orientations support at most 64 vertices");
}

/// DFS over directed paths u -> ... -> cur; reports a path that closes on
/// `target` through an arc and, together with the arc u -> target, spans a
/// non-adjacent pair. `reach` restricts intermediate vertices to those that
/// can still reach the target.
class ShortcutFinder {
 public:
  ShortcutFinder(std::span<const std::uint64_t> succ, std::span<const std::uint64_t> adj)
      : succ_(succ), adj_(adj) {}

  bool run(Vertex u, Vertex target, std::uint64_t reach) {
    target_ = target;
    reach_ = reach;
    path_.assign(1, u);
    return extend(u, bit(u), true);
  }

  ShortcutWitness witness() const {
    std::vector<Vertex> p = path_;
    p.push_back(target_);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (!((adj_[p[i]] >> p[j]) & 1U)) return {p, {p[i], p[j]}};
      }
    }
    return {p, {p.front(), p.back()}};  // unreachable for a found path
  }

 private:
  bool extend(Vertex cur, std::uint64_t on_path, bool clique) {
    const std::uint64_t next = succ_[cur];
    if (((next >> target_) & 1U) && path_.size() >= 3 &&
        (!clique || (on_path & ~adj_[target_]) != 0)) {
      return true;
    }
    bool found = false;
    for_each_bit(next & reach_ & ~on_path, [&](Vertex s) {
      if (found) return;
      path_.push_back(s);
      const bool still = clique && (adj_[s] & on_path) == on_path;
      found = extend(s, on_path | bit(s), still);
      if (!found) path_.pop_back();
    });
    return found;
  }

  std::span<const std::uint64_t> succ_;
  std::span<const std::uint64_t> adj_;
  Vertex target_ = 0;
  std::uint64_t reach_ = 0;
  std::vector<Vertex> path_;
};

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.size());
  for (Vertex v = 0; v < g.size(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

}  // namespace

Orientation::Orientation(Graph base, std::span<const Edge> arcs)
    : base_(std::move(base)), out_(base_.size(), 0), in_(base_.size(), 0) {
  require_small(base_);
  for (auto [u, v] : arcs) {
    if (u >= size() || v >= size() || !base_.has_edge(u, v)) {
      throw InvalidInput("arc is not an edge of the base graph");
    }
    if (has_arc(u, v) || has_arc(v, u)) {
      throw InvalidInput("edge " + base_.label(u) + "-" + base_.label(v) + " directed twice");
    }
    out_[u] |= bit(v);
    in_[v] |= bit(u);
  }
  std::size_t count = 0;
  for (auto m : out_) count += std::popcount(m);
  if (count != base_.edge_count()) throw InvalidInput("some base edge is left undirected");
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) for_each_bit(out_[u], [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

Orientation orient_by_order(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> rank(g.size(), g.size());
  if (order.size() != g.size()) throw InvalidInput("order is not a permutation of the vertices");
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.size() || rank[order[i]] != g.size()) {
      throw InvalidInput("order is not a permutation of the vertices");
    }
    rank[order[i]] = i;
  }
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.push_back(rank[u] < rank[v] ? Edge{u, v} : Edge{v, u});
  }
  return Orientation(g, arcs);
}

Orientation orient_by_order(const Graph& g, std::span<const std::string> order) {
  std::vector<Vertex> idx;
  for (const auto& l : order) idx.push_back(g.index_of(l));
  return orient_by_order(g, std::span<const Vertex>(idx));
}

std::optional<std::vector<Vertex>> find_directed_cycle(const Orientation& d) {
  const std::size_t n = d.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Vertex> parent(n, n);
  for (Vertex root = 0; root < n; ++root) {
    if (state[root]) continue;
    // Iterative DFS; stack holds (vertex, remaining successor mask).
    std::vector<std::pair<Vertex, std::uint64_t>> stack{{root, d.successors(root)}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, rest] = stack.back();
      if (!rest) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const Vertex w = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      if (state[w] == 1) {
        std::vector<Vertex> cycle{w};
        for (auto it = stack.rbegin(); it != stack.rend() && it->first != w; ++it) {
          cycle.push_back(it->first);
        }
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, d.successors(w));
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Orientation& d) { return !find_directed_cycle(d); }

bool is_transitive(const Orientation& d) {
  for (Vertex u = 0; u < d.size(); ++u) {
    std::uint64_t two_step = 0;
    for_each_bit(d.successors(u), [&](Vertex v) { two_step |= d.successors(v); });
    if ((two_step & ~d.successors(u)) != 0) return false;
  }
  return true;
}

std::optional<ShortcutWitness> find_shortcut(const Orientation& d) {
  if (auto cycle = find_directed_cycle(d)) {
    std::string msg = "orientation has a directed cycle:";
    for (Vertex v : *cycle) msg += " " + d.base().label(v);
    throw CyclicOrientation(*cycle, msg);
  }
  const std::size_t n = d.size();
  std::vector<std::uint64_t> succ(n), adj = adjacency_masks(d.base());
  for (Vertex v = 0; v < n; ++v) succ[v] = d.successors(v);

  // reaches[x]: vertices reachable from x (acyclic, so a fixed point is quick).
  std::vector<std::uint64_t> reaches(succ);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x = 0; x < n; ++x) {
      std::uint64_t r = reaches[x];
      for_each_bit(reaches[x], [&](Vertex y) { r |= reaches[y]; });
      if (r != reaches[x]) {
        reaches[x] = r;
        changed = true;
      }
    }
  }

  ShortcutFinder finder(succ, adj);
  for (auto [u, v] : d.arcs()) {
    std::uint64_t can_reach_v = 0;
    for (Vertex x = 0; x < n; ++x) {
      if ((reaches[x] >> v) & 1U) can_reach_v |= bit(x);
    }
    if (finder.run(u, v, can_reach_v)) return finder.witness();
  }
  return std::nullopt;
}

bool is_valid_shortcut(const Orientation& d, const ShortcutWitness& w) {
  const auto& p = w.path;
  if (p.size() < 4) return false;
  for (Vertex v : p) {
    if (v >= d.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!d.has_arc(p[i], p[i + 1])) return false;
  }
  if (!d.has_arc(p.front(), p.back())) return false;
  auto pos = [&](Vertex v) { return std::find(p.begin(), p.end(), v) - p.begin(); };
  const auto i = pos(w.missing_pair.first);
  const auto j = pos(w.missing_pair.second);
  if (i >= static_cast<std::ptrdiff_t>(p.size()) || j >= static_cast<std::ptrdiff_t>(p.size()) || i >= j) {
    return false;
  }
  return !d.base().has_edge(w.missing_pair.first, w.missing_pair.second);
}

bool is_semi_transitive(const Orientation& d) {
  if (!is_acyclic(d)) return false;
  return !find_shortcut(d);
}

// ---------------------------------------------------------------------------

namespace {

/// Places vertices one at a time; the newest vertex is a sink of the placed
/// set, so any new shortcut must end in it.
class OrderSearch {
 public:
  explicit OrderSearch(const Graph& g) : n_(g.size()), adj_(adjacency_masks(g)), succ_(n_, 0) {
    memo_enabled_ = n_ <= 7;
    if (memo_enabled_) {
      edge_id_.assign(n_ * n_, 0);
      unsigned id = 0;
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
          if ((adj_[u] >> v) & 1U) edge_id_[u * n_ + v] = edge_id_[v * n_ + u] = id++;
    }
  }

  bool run_from(Vertex first, detail::StopToken& token) {
    token_ = &token;
    order_.clear();
    placed_ = 0;
    key_edges_ = 0;
    std::fill(succ_.begin(), succ_.end(), 0);
    place(first);
    const bool ok = !stopped_ && dfs();
    if (!ok) unplace(first, 0);
    return ok;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool stopped() const noexcept { return stopped_; }
  const std::vector<Vertex>& order() const noexcept { return order_; }

 private:
  /// Returns the key_edges_ contribution so it can be undone.
  std::uint64_t place(Vertex v) {
    std::uint64_t added = 0;
    for_each_bit(adj_[v] & placed_, [&](Vertex u) {
      succ_[u] |= bit(v);
      if (memo_enabled_ && u < v) added |= std::uint64_t{1} << edge_id_[u * n_ + v];
    });
    placed_ |= bit(v);
    key_edges_ |= added;
    order_.push_back(v);
    if (++nodes_ % 4096 == 0 && token_->poll(4096)) stopped_ = true;
    return added;
  }

  void unplace(Vertex v, std::uint64_t added) {
    order_.pop_back();
    placed_ &= ~bit(v);
    key_edges_ &= ~added;
    for_each_bit(adj_[v] & placed_, [&](Vertex u) { succ_[u] &= ~bit(v); });
  }

  bool new_shortcut(Vertex v) {
    const std::uint64_t preds = adj_[v] & placed_ & ~bit(v);
    if (std::popcount(preds) < 2) return false;
    // Vertices of the placed set that can reach v, found in reverse placement order.
    std::uint64_t reach = preds;
    for (auto it = order_.rbegin() + 1; it != order_.rend(); ++it) {
      if (succ_[*it] & reach) reach |= bit(*it);
    }
    ShortcutFinder finder(succ_, adj_);
    bool found = false;
    for_each_bit(preds, [&](Vertex u) {
      if (!found) found = finder.run(u, v, reach & ~bit(v));
    });
    return found;
  }

  bool dfs() {
    if (order_.size() == n_) return true;
    for (Vertex v = 0; v < n_ && !stopped_; ++v) {
      if ((placed_ >> v) & 1U) continue;
      const std::uint64_t added = place(v);
      bool ok = false;
      if (!new_shortcut(v)) {
        const std::uint64_t key = placed_ | (key_edges_ << 7);
        if (!memo_enabled_ || !failed_.contains(key)) {
          ok = dfs();
          if (!ok && memo_enabled_ && !stopped_) failed_.insert(key);
        }
      }
      if (ok) return true;
      unplace(v, added);
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> succ_;
  std::vector<Vertex> order_;
  std::uint64_t placed_ = 0;
  std::uint64_t key_edges_ = 0;
  bool memo_enabled_ = false;
  std::vector<unsigned> edge_id_;
  std::unordered_set<std::uint64_t> failed_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  detail::StopToken* token_ = nullptr;
};

}  // namespace

SemiTransitiveResult search_semi_transitive(const Graph& g, const OrderSearchOptions& opts) {
  require_small(g);
  SemiTransitiveResult result;
  if (g.empty()) {
    result.orientation = Orientation(g, {});
    return result;
  }
  std::vector<std::vector<Vertex>> orders(g.size());
  auto summary = detail::run_branches(
      g.size(), opts.jobs, opts.deterministic, opts.node_limit,
      [&](std::size_t first, detail::StopToken& token) {
        OrderSearch search(g);
        detail::BranchOutcome out;
        out.found = search.run_from(first, token);
        out.stopped = search.stopped();
        out.nodes = search.nodes();
        if (out.found) orders[first] = search.order();
        return out;
      });
  result.nodes = summary.nodes;
  result.aborted = summary.aborted;
  if (summary.winner) {
    result.order = orders[*summary.winner];
    result.orientation = orient_by_order(g, std::span<const Vertex>(result.order));
    if (!is_semi_transitive(*result.orientation)) {
      throw VerificationError("order search produced an orientation with a shortcut");
    }
  }
  return result;
}

std::optional<Orientation> exists_semi_transitive(const Graph& g) {
  return search_semi_transitive(g).orientation;
}

// ---------------------------------------------------------------------------

Orientation parse_orientation(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  bool header_seen = false;
  bool arcs_seen = false;
  std::vector<std::pair<std::string, std::string>> arcs;
  std::vector<std::pair<std::string, std::string>> plain;
  std::vector<std::size_t> plain_lines;

  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (tokens.front().text == "vertices:") {
      if (header_seen || arcs_seen) {
        throw ParseError(line_no, tokens.front().column, "header must come first and only once");
      }
      header_seen = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!is_valid_label(tokens[i].text)) throw ParseError(line_no, tokens[i].column, "invalid label");
        if (!index.emplace(tokens[i].text, labels.size()).second) {
          throw ParseError(line_no, tokens[i].column, "duplicate vertex");
        }
        labels.push_back(tokens[i].text);
      }
      continue;
    }
    const bool directed = tokens.size() == 3 && tokens[1].text == "->";
    if (!directed && tokens.size() != 2) {
      throw ParseError(line_no, tokens.front().column, "expected '<u> -> <v>' or '<u> <v>'");
    }
    const auto& a = tokens.front();
    const auto& b = tokens.back();
    for (const auto* t : {&a, &b}) {
      if (!is_valid_label(t->text)) throw ParseError(line_no, t->column, "invalid label");
      if (!index.contains(t->text)) {
        if (header_seen) throw ParseError(line_no, t->column, "vertex not in header");
        index.emplace(t->text, labels.size());
        labels.push_back(t->text);
      }
    }
    if (a.text == b.text) throw ParseError(line_no, b.column, "self-loop");
    arcs_seen = true;
    if (directed) {
      arcs.emplace_back(a.text, b.text);
    } else {
      plain.emplace_back(a.text, b.text);
      plain_lines.push_back(line_no);
    }
  }

  Graph g(labels);
  std::vector<Edge> arc_idx;
  for (const auto& [u, v] : arcs) {
    g.add_edge(u, v);
    arc_idx.emplace_back(index.at(u), index.at(v));
  }
  for (std::size_t i = 0; i < plain.size(); ++i) {
    const auto& [u, v] = plain[i];
    if (!g.has_edge(u, v)) {
      throw ParseError(plain_lines[i], 1, "edge " + u + " " + v + " has no direction");
    }
  }
  return Orientation(g, arc_idx);
}

std::string format_orientation(const Orientation& d) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& l : d.base().labels()) out << ' ' << l;
  out << '\n';
  for (auto [u, v] : d.arcs()) out << d.base().label(u) << " -> " << d.base().label(v) << '\n';
  return out.str();
}

}  // namespace wordrep
