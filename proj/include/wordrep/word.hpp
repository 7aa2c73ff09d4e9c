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

#include "wordrep/graph.hpp"

namespace wordrep {

using Letter = std::uint32_t;

/// A finite word over vertex labels. Letters are stored as indices into the
/// alphabet, which lists labels in order of first occurrence.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const std::string> tokens);
  Word(std::initializer_list<std::string> tokens)
      : Word(std::span<const std::string>(tokens.begin(), tokens.size())) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::string& token(std::size_t pos) const { return alphabet_[letters_.at(pos)]; }
  std::vector<std::string> tokens() const;

  std::optional<Letter> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  /// Ascending positions of `label`; empty when the label does not occur.
  std::span<const std::size_t> occurrences(std::string_view label) const;
  std::span<const std::size_t> occurrences(Letter l) const { return occurrences_[l]; }
  std::size_t count(std::string_view label) const { return occurrences(label).size(); }

  /// Whitespace-separated tokens.
  std::string str() const;
  /// Tokens concatenated; multi-character tokens (ignoring trailing primes)
  /// are wrapped in parentheses so parse_word() reads them back.
  std::string compact() const;

  friend bool operator==(const Word& a, const Word& b) { return a.tokens() == b.tokens(); }

 private:
  std::vector<std::string> alphabet_;
  std::unordered_map<std::string, Letter> index_;
  std::vector<Letter> letters_;
  std::vector<std::vector<std::size_t>> occurrences_;
};

/// Parse a word. Text containing whitespace is read as whitespace-separated
/// tokens. A single bare string is split into characters, where a run of
/// primes attaches to the preceding character and "(...)" groups one token,
/// so "1387296(10)7" and "11'11'" both work. When `known` is given, a bare
/// string that is itself a vertex of `known` stays one token, and split
/// tokens must all be vertices of `known`.
Word parse_word(std::string_view text, const Graph* known = nullptr);

/// Throws InvalidInput when x == y or either letter is absent.
bool alternates(const Word& w, std::string_view x, std::string_view y);

/// Vertices are the alphabet (first-occurrence order); edges join alternating letters.
Graph derive_graph(const Word& w);

/// True iff derive_graph(w) equals g label-for-label. Throws InvalidInput when
/// the alphabet differs from the vertex set, naming the symmetric difference.
bool represents(const Word& w, const Graph& g);

struct UniformityProfile {
  std::optional<int> k;  // set iff every letter occurs exactly k times
  std::vector<std::pair<std::string, int>> counts;  // alphabet order
};

UniformityProfile uniformity(const Word& w);

Word reverse(const Word& w);
/// w = u v with |u| = cut  ->  v u. Requires a uniform word.
Word cyclic_shift(const Word& w, std::size_t cut);
/// Each letter once, in order of first occurrence.
Word initial_permutation(const Word& w);
/// k-uniform -> (k+1)-uniform word representing the same graph.
Word extend_uniform(const Word& w);

Word concatenate(std::span<const Word> parts);

}  // namespace wordrep
