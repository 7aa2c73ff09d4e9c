#include "wordrep/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "wordrep/errors.hpp"

namespace wordrep {

bool is_valid_label(std::string_view label) {
  if (label.empty() || label.front() == '#') return false;
  return std::none_of(label.begin(), label.end(),
                      [](unsigned char c) { return std::isspace(c) != 0; });
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_labels();
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : Graph(std::move(labels)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::index_labels() {
  index_.clear();
  index_.reserve(labels_.size());
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (!is_valid_label(labels_[v])) {
      throw InvalidInput("invalid vertex label '" + labels_[v] + "'");
    }
    if (!index_.emplace(labels_[v], v).second) {
      throw InvalidInput("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  words_ = (labels_.size() + 63) / 64;
  rows_.assign(labels_.size() * words_, 0);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InvalidInput("unknown vertex '" + std::string(label) + "'");
}

bool Graph::has_edge(std::string_view u, std::string_view v) const {
  return has_edge(index_of(u), index_of(v));
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loop at '" + labels_[u] + "'");
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::add_edge(std::string_view u, std::string_view v) { add_edge(index_of(u), index_of(v)); }

void Graph::remove_edge(Vertex u, Vertex v) {
  rows_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[v * words_ + w]);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < size(); ++v) total += degree(v);
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < size(); ++u) {
    if (has_edge(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v = u + 1; v < size(); ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (size() > 64) throw InvalidInput("graph too large for 64-bit masks");
  return rows_[v];
}

bool Graph::is_complete() const {
  const std::size_t n = size();
  return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.labels_ == b.labels_ && a.rows_ == b.rows_;
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  std::vector<Vertex> to_b(a.size());
  for (Vertex v = 0; v < a.size(); ++v) {
    auto w = b.find(a.label(v));
    if (!w) return false;
    to_b[v] = *w;
  }
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = u + 1; v < a.size(); ++v) {
      if (a.has_edge(u, v) != b.has_edge(to_b[u], to_b[v])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Graph add_apex(const Graph& g, const std::string& label) {
  if (g.contains(label)) throw InvalidInput("apex label '" + label + "' already in graph");
  auto labels = g.labels();
  labels.push_back(label);
  auto edges = g.edges();
  const Vertex apex = g.size();
  for (Vertex v = 0; v < g.size(); ++v) edges.emplace_back(v, apex);
  return Graph(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::string> labels;
  for (Vertex v : keep) {
    if (v >= g.size()) throw InvalidInput("vertex index out of range");
    labels.push_back(g.label(v));
  }
  Graph out(std::move(labels));
  for (Vertex i = 0; i < keep.size(); ++i) {
    for (Vertex j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> keep) {
  std::vector<Vertex> idx;
  idx.reserve(keep.size());
  for (const auto& label : keep) idx.push_back(g.index_of(label));
  return induced_subgraph(g, std::span<const Vertex>(idx));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto labels = a.labels();
  for (const auto& l : b.labels()) {
    if (a.contains(l)) throw InvalidInput("label '" + l + "' occurs in both graphs");
    labels.push_back(l);
  }
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return Graph(std::move(labels), edges);
}

Graph connect_by_edge(const Graph& a, const Graph& b, const std::string& x, const std::string& y) {
  a.index_of(x);
  b.index_of(y);
  Graph out = disjoint_union(a, b);
  out.add_edge(x, y);
  return out;
}

Graph glue_at_vertex(const Graph& a, const Graph& b, const std::string& x, const std::string& y,
                     const std::string& z) {
  const Vertex xa = a.index_of(x);
  const Vertex yb = b.index_of(y);
  auto name = [&](const Graph& g, Vertex v, Vertex merged) {
    return v == merged ? z : g.label(v);
  };
  std::vector<std::string> labels;
  for (Vertex v = 0; v < a.size(); ++v) labels.push_back(name(a, v, xa));
  for (Vertex v = 0; v < b.size(); ++v) {
    if (v != yb) labels.push_back(b.label(v));
  }
  Graph out(std::move(labels));  // throws on collisions
  for (auto [u, v] : a.edges()) out.add_edge(name(a, u, xa), name(a, v, xa));
  for (auto [u, v] : b.edges()) out.add_edge(name(b, u, yb), name(b, v, yb));
  return out;
}

Graph substitute_vertex(const Graph& g, const std::string& x, const Graph& module) {
  const Vertex xv = g.index_of(x);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v != xv) labels.push_back(g.label(v));
  }
  for (const auto& l : module.labels()) labels.push_back(l);
  Graph out(std::move(labels));
  for (auto [u, v] : g.edges()) {
    if (u != xv && v != xv) out.add_edge(g.label(u), g.label(v));
  }
  for (auto [u, v] : module.edges()) out.add_edge(module.label(u), module.label(v));
  for (Vertex z : g.neighbors(xv)) {
    for (const auto& m : module.labels()) out.add_edge(m, g.label(z));
  }
  return out;
}

Graph relabel(const Graph& g, const std::unordered_map<std::string, std::string>& mapping) {
  std::vector<std::string> labels = g.labels();
  for (auto& l : labels) {
    if (auto it = mapping.find(l); it != mapping.end()) l = it->second;
  }
  auto edges = g.edges();
  return Graph(std::move(labels), edges);
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.size();
}

bool is_tree(const Graph& g) {
  return !g.empty() && g.edge_count() + 1 == g.size() && is_connected(g);
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<Vertex> order;  // vertices of a, mapped in this order
  std::vector<Vertex> image;  // a-vertex -> b-vertex
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex cand = 0; cand < b.size(); ++cand) {
      if (used[cand] || a.degree(v) != b.degree(cand)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order[i];
        ok = a.has_edge(u, v) == b.has_edge(image[u], cand);
      }
      if (!ok) continue;
      used[cand] = true;
      image[v] = cand;
      if (extend(depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < a.size(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.size(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  IsoSearch s{a, b, {}, std::vector<Vertex>(a.size()), std::vector<bool>(b.size(), false)};
  // Map high-degree vertices first so adjacency checks bite early.
  s.order.resize(a.size());
  for (Vertex v = 0; v < a.size(); ++v) s.order[v] = v;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
  return s.extend(0);
}

namespace {

bool colorable(const Graph& g, const std::vector<Vertex>& order, std::vector<int>& color,
               std::size_t depth, int colors, int used) {
  if (depth == order.size()) return true;
  const Vertex v = order[depth];
  // A fresh colour is interchangeable with any other fresh colour.
  const int limit = std::min(colors, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      ok = !(color[order[i]] == c && g.has_edge(order[i], v));
    }
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, order, color, depth + 1, colors, std::max(used, c + 1))) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.empty()) return 0;
  std::vector<Vertex> order(g.size());
  for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  std::vector<int> color(g.size(), -1);
  for (int c = 1;; ++c) {
    if (colorable(g, order, color, 0, c, 0)) return c;
  }
}

}  // namespace wordrep
