#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "wordrep/errors.hpp"

namespace wordrep {

Word::Word(std::span<const std::string> tokens) {
  letters_.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!is_valid_label(t)) throw InvalidInput("invalid letter '" + t + "'");
    auto [it, fresh] = index_.emplace(t, static_cast<Letter>(alphabet_.size()));
    if (fresh) {
      alphabet_.push_back(t);
      occurrences_.emplace_back();
    }
    occurrences_[it->second].push_back(letters_.size());
    letters_.push_back(it->second);
  }
}

std::vector<std::string> Word::tokens() const {
  std::vector<std::string> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(alphabet_[l]);
  return out;
}

std::optional<Letter> Word::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> Word::occurrences(std::string_view label) const {
  if (auto l = find(label)) return occurrences_[*l];
  return {};
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_[letters_[i]];
  }
  return out;
}

std::string Word::compact() const {
  std::string out;
  for (Letter l : letters_) {
    const std::string& t = alphabet_[l];
    const std::size_t core = t.find_last_not_of('\'') + 1;
    if (core == 1 && t[0] != '(' && t[0] != ')') {
      out += t;
    } else {
      out += '(' + t.substr(0, core) + ')' + t.substr(core);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_bare(std::string_view s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '\'') {
      if (out.empty()) throw ParseError(1, i + 1, "prime without a preceding letter");
      out.back() += '\'';
      ++i;
    } else if (s[i] == '(') {
      const std::size_t close = s.find(')', i);
      if (close == std::string_view::npos) throw ParseError(1, i + 1, "unbalanced '('");
      if (close == i + 1) throw ParseError(1, i + 1, "empty '()' group");
      out.emplace_back(s.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (s[i] == ')') {
      throw ParseError(1, i + 1, "unbalanced ')'");
    } else {
      out.emplace_back(1, s[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, const Graph* known) {
  std::vector<std::string> tokens;
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);

  const bool has_space = std::any_of(trimmed.begin(), trimmed.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
  if (has_space) {
    std::istringstream in{std::string(trimmed)};
    for (std::string t; in >> t;) tokens.push_back(t);
  } else if (!trimmed.empty()) {
    if (known && known->contains(trimmed)) {
      tokens.emplace_back(trimmed);
    } else {
      tokens = split_bare(trimmed);
      if (known) {
        for (const auto& t : tokens) {
          if (!known->contains(t)) {
            throw InvalidInput("letter '" + t + "' of bare word is not a vertex; "
                               "separate tokens with whitespace");
          }
        }
      }
    }
  }
  return Word(tokens);
}

// ---------------------------------------------------------------------------

bool alternates(const Word& w, std::string_view x, std::string_view y) {
  if (x == y) throw InvalidInput("alternation needs two distinct letters");
  auto px = w.occurrences(x);
  auto py = w.occurrences(y);
  if (px.empty()) throw InvalidInput("letter '" + std::string(x) + "' not in word");
  if (py.empty()) throw InvalidInput("letter '" + std::string(y) + "' not in word");
  // Merge the two position lists; alternation means no two consecutive
  // entries come from the same list.
  std::size_t i = 0, j = 0;
  int last = -1;
  while (i < px.size() || j < py.size()) {
    int cur;
    if (j == py.size() || (i < px.size() && px[i] < py[j])) {
      cur = 0;
      ++i;
    } else {
      cur = 1;
      ++j;
    }
    if (cur == last) return false;
    last = cur;
  }
  return true;
}

Graph derive_graph(const Word& w) {
  const std::size_t n = w.alphabet().size();
  // last[v]: position of the latest occurrence of v so far (or npos).
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last(n, npos);
  std::vector<std::vector<bool>> broken(n, std::vector<bool>(n, false));
  const auto letters = w.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    const Letter v = letters[pos];
    if (last[v] != npos) {
      // v repeats: every letter not seen since v's previous copy is now
      // non-alternating with v (including letters not seen at all yet).
      for (Letter u = 0; u < n; ++u) {
        if (u != v && (last[u] == npos || last[u] < last[v])) {
          broken[v][u] = true;
          broken[u][v] = true;
        }
      }
    }
    last[v] = pos;
  }
  Graph g(w.alphabet());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!broken[u][v]) g.add_edge(u, v);
    }
  }
  return g;
}

bool represents(const Word& w, const Graph& g) {
  std::set<std::string> a(w.alphabet().begin(), w.alphabet().end());
  std::set<std::string> b(g.labels().begin(), g.labels().end());
  if (a != b) {
    std::string msg = "word alphabet differs from vertex set:";
    for (const auto& l : a)
      if (!b.contains(l)) msg += " +" + l;
    for (const auto& l : b)
      if (!a.contains(l)) msg += " -" + l;
    throw InvalidInput(msg);
  }
  return same_labeled_graph(derive_graph(w), g);
}

UniformityProfile uniformity(const Word& w) {
  UniformityProfile p;
  for (Letter l = 0; l < w.alphabet().size(); ++l) {
    p.counts.emplace_back(w.alphabet()[l], static_cast<int>(w.occurrences(l).size()));
  }
  if (!p.counts.empty() &&
      std::all_of(p.counts.begin(), p.counts.end(),
                  [&](const auto& c) { return c.second == p.counts.front().second; })) {
    p.k = p.counts.front().second;
  }
  return p;
}

Word reverse(const Word& w) {
  auto t = w.tokens();
  std::reverse(t.begin(), t.end());
  return Word(t);
}

Word cyclic_shift(const Word& w, std::size_t cut) {
  if (!w.empty() && !uniformity(w).k) {
    throw InvalidInput("cyclic shift preserves the graph only for uniform words");
  }
  if (cut > w.size()) throw InvalidInput("cut position beyond word length");
  auto t = w.tokens();
  std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cut), t.end());
  return Word(t);
}

Word initial_permutation(const Word& w) { return Word(w.alphabet()); }

Word extend_uniform(const Word& w) {
  const auto profile = uniformity(w);
  if (!w.empty() && !profile.k) throw InvalidInput("extend_uniform needs a uniform word");
  // p w, where p lists letters by first occurrence: each pair keeps its
  // relative order at the front of w, so alternation is unchanged.
  auto t = initial_permutation(w).tokens();
  const auto rest = w.tokens();
  t.insert(t.end(), rest.begin(), rest.end());
  Word out(t);
  if (!same_labeled_graph(derive_graph(out), derive_graph(w))) {
    throw VerificationError("extend_uniform changed the represented graph");
  }
  return out;
}

Word concatenate(std::span<const Word> parts) {
  std::vector<std::string> t;
  for (const auto& p : parts) {
    auto pt = p.tokens();
    t.insert(t.end(), pt.begin(), pt.end());
  }
  return Word(t);
}

}  // namespace wordrep
