#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/search.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// How often the builders below had to leave their direct construction.
/// `repairs` counts bounded interleaving searches, `fallbacks` full searches.
struct TransformStats {
  std::uint64_t attempts = 0;
  std::uint64_t repairs = 0;
  std::uint64_t fallbacks = 0;
};

/// Lift a k-uniform word to `target` >= k by repeated extend_uniform.
Word lift_uniform(const Word& w, int target);

/// Pendant vertex y attached to x. Needs a k-uniform word with k >= 2.
Word add_leaf(const Word& w, const std::string& x, const std::string& y);

/// Fresh labels p1, p2, ... skipping anything already in `taken`.
std::vector<std::string> fresh_labels(const Word& taken, std::size_t count, const std::string& prefix = "p");

/// Joins x and y by a new path with `length` >= 3 edges. Input and output are
/// 3-uniform; the internal vertices are named by fresh_labels().
Word add_path(const Word& w, const std::string& x, const std::string& y, int length,
              TransformStats* stats = nullptr, const SearchOptions& opts = {});

enum class CombineMode { connect_edge, glue_vertex };

/// Both words k-uniform for one k >= 2 over disjoint alphabets. connect_edge
/// adds the edge (x, y); glue_vertex merges x and y into `z`.
Word combine(const Word& w1, const Word& w2, const std::string& x, const std::string& y, CombineMode mode,
             const std::string& z = "z", TransformStats* stats = nullptr, const SearchOptions& opts = {});

struct RepNumberInput {
  int k1 = 1;
  int k2 = 1;
  int n1 = 1;
  int n2 = 1;
};

struct CombinedRepNumber {
  int connected = 1;  // G': joined by an edge
  int glued = 1;      // G'': glued in a vertex
};

CombinedRepNumber combined_rep_number(const RepNumberInput& in);

/// Replaces the i-th occurrence of x by module order i (cycling through the
/// family when it has fewer orders than occurrences).
Word substitute_module(const Word& w, const std::string& x, const LinearOrderFamily& module);

/// 2-uniform word for the ladder L_n.
Word ladder_word(int n);

/// The k permutations whose concatenation represents the crown H_{k,k}.
LinearOrderFamily crown_permutations(int k);
Word crown_perm_word(int k);

/// 2-uniform word for a tree, rooted at its least label.
Word tree_word(const Graph& t);

/// 2-uniform word for C_n on labels 1..n.
Word cycle_word(int n);

/// p_1 a p_2 a ... p_k a.
Word cone_word(const LinearOrderFamily& perms, const std::string& apex);

}  // namespace wordrep
