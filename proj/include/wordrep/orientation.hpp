#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

/// Every edge of a base graph directed one way. Limited to 64 vertices.
class Orientation {
 public:
  Orientation() = default;
  /// `arcs` must direct each base edge exactly once and name no non-edge.
  Orientation(Graph base, std::span<const Edge> arcs);

  const Graph& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  bool has_arc(Vertex u, Vertex v) const noexcept { return (out_[u] >> v) & 1U; }
  std::uint64_t successors(Vertex v) const noexcept { return out_[v]; }
  std::uint64_t predecessors(Vertex v) const noexcept { return in_[v]; }
  /// Arcs sorted by (tail, head).
  std::vector<Edge> arcs() const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.base_ == b.base_ && a.out_ == b.out_;
  }

 private:
  Graph base_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// Thrown for an orientation that contains a directed cycle.
class CyclicOrientation : public InvalidInput {
 public:
  CyclicOrientation(std::vector<Vertex> cycle, const std::string& what)
      : InvalidInput(what), cycle_(std::move(cycle)) {}
  const std::vector<Vertex>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

/// Directed path v_1 -> ... -> v_k (k >= 4) with arc v_1 -> v_k, and two
/// non-adjacent path vertices.
struct ShortcutWitness {
  std::vector<Vertex> path;
  std::pair<Vertex, Vertex> missing_pair;  // path positions i < j, as vertices
};

/// Each edge directed from the earlier vertex of `order` to the later one.
Orientation orient_by_order(const Graph& g, std::span<const Vertex> order);
Orientation orient_by_order(const Graph& g, std::span<const std::string> order);

std::optional<std::vector<Vertex>> find_directed_cycle(const Orientation& d);
bool is_acyclic(const Orientation& d);
bool is_transitive(const Orientation& d);

/// Throws CyclicOrientation (carrying a cycle) on cyclic input.
std::optional<ShortcutWitness> find_shortcut(const Orientation& d);
/// Re-checks a witness from scratch.
bool is_valid_shortcut(const Orientation& d, const ShortcutWitness& w);
bool is_semi_transitive(const Orientation& d);

struct SemiTransitiveResult {
  std::optional<Orientation> orientation;
  std::vector<Vertex> order;  // the vertex order that induced it
  std::uint64_t nodes = 0;
  bool aborted = false;
};

struct OrderSearchOptions {
  unsigned jobs = 1;
  bool deterministic = true;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

/// Searches vertex orders (every acyclic orientation is induced by one) with
/// prefix pruning. Deterministic mode returns the lexicographically least
/// successful order. Meant for about 9 vertices.
SemiTransitiveResult search_semi_transitive(const Graph& g, const OrderSearchOptions& opts = {});
std::optional<Orientation> exists_semi_transitive(const Graph& g);

// Text format: graph format where edges are written `u -> v`.
Orientation parse_orientation(std::string_view text);
std::string format_orientation(const Orientation& d);

}  // namespace wordrep
