#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordrep {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// True for a usable vertex token: non-empty, no whitespace, not starting with '#'.
bool is_valid_label(std::string_view label);

/// Simple undirected graph over string labels. Vertices are indexed in label
/// order; adjacency is kept as one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  std::optional<Vertex> find(std::string_view label) const;
  /// Index of `label`; throws InvalidInput when absent.
  Vertex index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  bool has_edge(std::string_view u, std::string_view v) const;

  void add_edge(Vertex u, Vertex v);
  void add_edge(std::string_view u, std::string_view v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Neighbourhood of v as a 64-bit mask. Requires size() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  bool is_complete() const;

  /// Same labels in the same order and the same edges.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void index_labels();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Same label set and same edges between equal labels; vertex order ignored.
bool same_labeled_graph(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Named families

enum class Family { complete, path, cycle, prism, ladder, crown, petersen };

struct FamilySpec {
  Family family;
  int n = 0;  // ignored for petersen
};

std::string_view family_name(Family f);
/// Throws InvalidInput on an unknown family name.
Family parse_family(std::string_view name);

/// Canonical labels "1".."n" (and "1'".."n'" for the two-rail families).
Graph build_family(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Operations

Graph add_apex(const Graph& g, const std::string& label);
Graph induced_subgraph(const Graph& g, std::span<const std::string> keep);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Vertex-disjoint union; throws when label sets overlap.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Union of `a` and `b` plus the edge (x, y), x in a, y in b.
Graph connect_by_edge(const Graph& a, const Graph& b, const std::string& x, const std::string& y);
/// Union of `a` and `b` with x (in a) and y (in b) merged into a vertex `z`.
Graph glue_at_vertex(const Graph& a, const Graph& b, const std::string& x, const std::string& y,
                     const std::string& z);
/// Replace x by the vertices of `module`, each adjacent to every former neighbour of x.
Graph substitute_vertex(const Graph& g, const std::string& x, const Graph& module);
/// Rename labels. `mapping` is applied where present; labels must stay unique.
Graph relabel(const Graph& g, const std::unordered_map<std::string, std::string>& mapping);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Brute force over degree-compatible bijections. Meant for about 10 vertices.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Exact chromatic number (0 for the empty graph).
int chromatic_number(const Graph& g);

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   vertices: a b c d
//   a b
//   b c
//
// Without the header, vertices are ordered by first appearance.

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace wordrep
