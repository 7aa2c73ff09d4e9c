#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Non-empty list of permutations of one vertex set.
class LinearOrderFamily {
 public:
  LinearOrderFamily() = default;
  explicit LinearOrderFamily(std::vector<std::vector<std::string>> orders);

  const std::vector<std::vector<std::string>>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return orders_.size(); }
  /// p_1 p_2 ... p_k as one word.
  Word concatenate() const;
  Word order_word(std::size_t i) const { return Word(orders_.at(i)); }

  friend bool operator==(const LinearOrderFamily&, const LinearOrderFamily&) = default;

 private:
  std::vector<std::vector<std::string>> orders_;
};

enum class SearchStatus { witness_found, exhausted, aborted };
std::string_view status_name(SearchStatus s);

using Witness = std::variant<std::monostate, Word, Orientation, LinearOrderFamily>;

/// Outcome of one search. A witness is always re-verified before it is
/// returned; `exhausted` means the (symmetry-reduced) space was fully explored.
struct Certificate {
  std::string query;
  SearchStatus status = SearchStatus::exhausted;
  Witness witness;
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;

  bool found() const noexcept { return status == SearchStatus::witness_found; }
  const Word& word() const { return std::get<Word>(witness); }
  const Orientation& orientation() const { return std::get<Orientation>(witness); }
  const LinearOrderFamily& orders() const { return std::get<LinearOrderFamily>(witness); }
};

struct SearchOptions {
  unsigned jobs = 1;
  bool deterministic = true;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

/// k-uniform representant search. The word is taken to start with the first
/// vertex of maximum degree (cyclic shifts are free for uniform words), and of
/// a word and its reversed rotation only the one whose second letter is not
/// after its last letter is explored. Deterministic mode returns the
/// lexicographically least such word.
Certificate find_k_uniform_representant(const Graph& g, int k, const SearchOptions& opts = {});

/// Interleave k copies of each letter of `fresh` into `base` (base order kept)
/// so the result represents `target`. Used to repair constructions.
Certificate find_interleaving(const Word& base, std::span<const std::string> fresh, const Graph& target,
                              int k, const SearchOptions& opts = {});

struct RepresentationNumber {
  std::optional<int> k;             // least k with a witness
  std::vector<Certificate> attempts;  // attempts[i] is for k = i + 1
  bool word_representable = true;   // false once k = |V| is exhausted
  bool aborted = false;

  const Certificate& witness() const { return attempts.back(); }
};

/// Tries k = 1, 2, ... up to `max_k` (default |V|). A complete graph answers 1
/// without search.
RepresentationNumber representation_number(const Graph& g, const SearchOptions& opts = {},
                                           std::optional<int> max_k = std::nullopt);

/// Backtracking over edge directions with pruning on 2-paths.
Certificate find_transitive_orientation(const Graph& g, const SearchOptions& opts = {});

/// Every transitive orientation of g (small graphs only).
std::vector<Orientation> all_transitive_orientations(const Graph& g, std::size_t limit = 0);

struct PosetDimension {
  int dimension = 0;
  LinearOrderFamily realizer;
  std::size_t linear_extensions = 0;
  std::uint64_t nodes = 0;
};

/// Linear extensions of a transitive orientation, as vertex sequences.
std::vector<std::vector<Vertex>> linear_extensions(const Orientation& d);

/// Least t such that t linear extensions intersect to d. Rejects
/// non-transitive input. Meant for at most about 8 elements.
PosetDimension poset_dimension(const Orientation& d);

/// p_1 ... p_k representing g, or exhausted when no k permutations do.
Certificate find_permutational_representation(const Graph& g, int k, const SearchOptions& opts = {});

}  // namespace wordrep
