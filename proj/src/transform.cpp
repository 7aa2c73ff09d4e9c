#include "wordrep/transform.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

using Tokens = std::vector<std::string>;

int uniform_k(const Word& w, const char* what) {
  const auto k = uniformity(w).k;
  if (!k) throw InvalidInput(std::string(what) + " needs a uniform word");
  return *k;
}

void require_letter(const Word& w, const std::string& x) {
  if (!w.contains(x)) throw InvalidInput("letter " + x + " does not occur in the word");
}

void require_fresh(const Word& w, const std::string& y) {
  if (!is_valid_label(y)) throw InvalidInput("invalid label '" + y + "'");
  if (w.contains(y)) throw InvalidInput("label " + y + " is already used");
}

Word checked(Word w, const Graph& target, const char* what) {
  if (!represents(w, target)) throw VerificationError(std::string(what) + " produced a word that does not verify");
  return w;
}

/// w rotated to start at x, cut into the blocks that follow each x.
std::vector<Tokens> blocks_after(const Word& w, const std::string& x) {
  const Word s = cyclic_shift(w, w.occurrences(x).front());
  std::vector<Tokens> out;
  for (const auto& t : s.tokens()) {
    if (t == x) {
      out.emplace_back();
    } else {
      out.back().push_back(t);
    }
  }
  return out;
}

void append(Tokens& out, const Tokens& part) { out.insert(out.end(), part.begin(), part.end()); }

Tokens without(const std::vector<std::string>& alphabet, const std::string& x) {
  Tokens out;
  for (const auto& l : alphabet) {
    if (l != x) out.push_back(l);
  }
  return out;
}

}  // namespace

Word lift_uniform(const Word& w, int target) {
  Word out = w;
  for (int k = uniform_k(w, "lifting"); k < target; ++k) out = extend_uniform(out);
  return out;
}

Word add_leaf(const Word& w, const std::string& x, const std::string& y) {
  const int k = uniform_k(w, "adding a leaf");
  if (k < 2) throw InvalidInput("adding a leaf needs k >= 2");
  require_letter(w, x);
  require_fresh(w, y);

  // w = w0 x w1 x w2 ... x wk  ->  w0 y x y w1 x w2 y x w3 ... y x wk
  Tokens out;
  int seen = 0;
  for (const auto& t : w.tokens()) {
    if (t == x) {
      ++seen;
      if (seen == 1) {
        out.insert(out.end(), {y, x, y});
      } else if (seen == 2) {
        out.push_back(x);
      } else {
        out.insert(out.end(), {y, x});
      }
    } else {
      out.push_back(t);
    }
  }
  Graph target = derive_graph(w);
  target = Graph([&] {
    auto labels = target.labels();
    labels.push_back(y);
    return labels;
  }(), target.edges());
  target.add_edge(x, y);
  return checked(Word(out), target, "adding a leaf");
}

std::vector<std::string> fresh_labels(const Word& taken, std::size_t count, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t j = 1; out.size() < count; ++j) {
    std::string label = prefix + std::to_string(j);
    while (taken.contains(label)) label += "_";
    out.push_back(std::move(label));
  }
  return out;
}

Word add_path(const Word& w, const std::string& x, const std::string& y, int length, TransformStats* stats,
              const SearchOptions& opts) {
  if (length < 3) throw InvalidInput("the path needs at least 3 edges");
  if (uniform_k(w, "adding a path") != 3) throw InvalidInput("adding a path needs a 3-uniform word");
  require_letter(w, x);
  require_letter(w, y);
  if (x == y) throw InvalidInput("path ends must differ");

  const auto inner = fresh_labels(w, static_cast<std::size_t>(length - 1));
  Graph target = derive_graph(w);
  {
    auto labels = target.labels();
    labels.insert(labels.end(), inner.begin(), inner.end());
    target = Graph(std::move(labels), target.edges());
  }
  target.add_edge(x, inner.front());
  for (std::size_t i = 0; i + 1 < inner.size(); ++i) target.add_edge(inner[i], inner[i + 1]);
  target.add_edge(inner.back(), y);

  if (stats) ++stats->attempts;

  // Hang the inner vertices off x as a chain of leaves, then re-place the
  // last one so it also meets y.
  Word chain = w;
  std::string prev = x;
  for (const auto& p : inner) {
    chain = add_leaf(chain, prev, p);
    prev = p;
  }
  Tokens rest;
  for (const auto& t : chain.tokens()) {
    if (t != inner.back()) rest.push_back(t);
  }
  if (stats) ++stats->repairs;
  const std::string last[] = {inner.back()};
  Certificate c = find_interleaving(Word(rest), last, target, 3, opts);
  if (c.found()) return checked(c.word(), target, "adding a path");

  if (stats) ++stats->repairs;
  c = find_interleaving(w, inner, target, 3, opts);
  if (c.found()) return checked(c.word(), target, "adding a path");

  if (stats) ++stats->fallbacks;
  c = find_k_uniform_representant(target, 3, opts);
  if (!c.found()) throw VerificationError("no 3-uniform word found for the extended graph");
  return checked(c.word(), target, "adding a path");
}

Word combine(const Word& w1, const Word& w2, const std::string& x, const std::string& y, CombineMode mode,
             const std::string& z, TransformStats* stats, const SearchOptions& opts) {
  const int k = uniform_k(w1, "combining");
  if (uniform_k(w2, "combining") != k) throw InvalidInput("both words must be k-uniform for the same k");
  if (k < 2) throw InvalidInput("combining needs k >= 2");
  require_letter(w1, x);
  require_letter(w2, y);
  for (const auto& l : w2.alphabet()) {
    if (w1.contains(l)) throw InvalidInput("alphabets overlap in " + l);
  }

  const Graph g1 = derive_graph(w1);
  const Graph g2 = derive_graph(w2);
  Graph target;
  if (mode == CombineMode::connect_edge) {
    target = connect_by_edge(g1, g2, x, y);
  } else {
    if (z != x && z != y) {
      require_fresh(w1, z);
      require_fresh(w2, z);
    }
    target = glue_at_vertex(g1, g2, x, y, z);
  }
  if (stats) ++stats->attempts;

  Tokens out;
  if (g1.is_complete() && g2.is_complete()) {
    // Two cliques: a 2-uniform word lifted to k.
    const Tokens a = without(w1.alphabet(), x);
    const Tokens b = without(w2.alphabet(), y);
    if (mode == CombineMode::connect_edge) {
      append(out, a);
      out.push_back(x);
      append(out, a);
      out.insert(out.end(), {y, x});
      append(out, b);
      out.push_back(y);
      append(out, b);
    } else {
      append(out, a);
      out.push_back(z);
      append(out, a);
      append(out, b);
      out.push_back(z);
      append(out, b);
    }
    out = lift_uniform(Word(out), k).tokens();
  } else {
    const auto u = blocks_after(w1, x);
    const auto v = blocks_after(w2, y);
    const auto kk = static_cast<std::size_t>(k);
    if (mode == CombineMode::connect_edge) {
      // y v1 x y u1 x u2 v2 y x u3 v3 ... y x uk vk
      out.push_back(y);
      append(out, v[0]);
      out.insert(out.end(), {x, y});
      append(out, u[0]);
      out.push_back(x);
      append(out, u[1]);
      append(out, v[1]);
      for (std::size_t i = 2; i < kk; ++i) {
        out.insert(out.end(), {y, x});
        append(out, u[i]);
        append(out, v[i]);
      }
    } else {
      // z v1 u1 z u2 v2 ... z uk vk
      out.push_back(z);
      append(out, v[0]);
      append(out, u[0]);
      for (std::size_t i = 1; i < kk; ++i) {
        out.push_back(z);
        append(out, u[i]);
        append(out, v[i]);
      }
    }
  }

  Word candidate(out);
  if (represents(candidate, target)) return candidate;
  if (stats) ++stats->fallbacks;
  Certificate c = find_k_uniform_representant(target, k, opts);
  if (!c.found()) throw VerificationError("no k-uniform word found for the combined graph");
  return checked(c.word(), target, "combining");
}

CombinedRepNumber combined_rep_number(const RepNumberInput& in) {
  if (in.k1 < 1 || in.k2 < 1 || in.n1 < 1 || in.n2 < 1) throw InvalidInput("inputs must be at least 1");
  const int k = std::max(in.k1, in.k2);
  if (in.n1 == 1 && in.n2 == 1) return {1, 1};
  if (std::min(in.n1, in.n2) == 1) return {std::max(k, 2), k};
  return {std::max(k, 2), std::max(k, 2)};
}

Word substitute_module(const Word& w, const std::string& x, const LinearOrderFamily& module) {
  const int k = uniform_k(w, "module substitution");
  require_letter(w, x);
  if (static_cast<int>(module.size()) > k) {
    throw InvalidInput("the module needs " + std::to_string(module.size()) + " orders but x occurs " +
                       std::to_string(k) + " times; extend the word first");
  }
  const auto& first = module.orders().front();
  for (const auto& m : first) {
    if (m != x && w.contains(m)) throw InvalidInput("module label " + m + " collides with the word");
  }

  Tokens out;
  std::size_t seen = 0;
  for (const auto& t : w.tokens()) {
    if (t == x) {
      append(out, module.orders()[seen++ % module.size()]);
    } else {
      out.push_back(t);
    }
  }
  const Graph target = substitute_vertex(derive_graph(w), x, derive_graph(module.concatenate()));
  return checked(Word(out), target, "module substitution");
}

Word ladder_word(int n) {
  if (n < 1) throw InvalidInput("ladder size must be at least 1");
  auto p = [](int i) { return std::to_string(i) + "'"; };
  auto u = [](int i) { return std::to_string(i); };
  Tokens w = {u(1), p(1), u(1), p(1)};
  for (int i = 1; i < n; ++i) {
    Tokens next;
    bool done = false;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!done && j + 1 < w.size() && w[j] == p(i) && w[j + 1] == u(i)) {
        next.insert(next.end(), {p(i + 1), p(i), u(i + 1), p(i + 1), u(i), u(i + 1)});
        ++j;
        done = true;
      } else {
        next.push_back(w[j]);
      }
    }
    if (!done) throw VerificationError("ladder step found no factor i' i");
    std::reverse(next.begin(), next.end());
    w = std::move(next);
  }
  return checked(Word(w), build_family({Family::ladder, n}), "ladder construction");
}

LinearOrderFamily crown_permutations(int k) {
  if (k < 1) throw InvalidInput("crown size must be at least 1");
  if (k == 1) return LinearOrderFamily({{"1", "1'"}, {"1'", "1"}});
  std::vector<Tokens> orders;
  for (int m = k; m >= 1; --m) {
    Tokens o;
    for (int i = 1; i <= k; ++i) {
      if (i != m) o.push_back(std::to_string(i));
    }
    o.push_back(std::to_string(m) + "'");
    o.push_back(std::to_string(m));
    for (int i = k; i >= 1; --i) {
      if (i != m) o.push_back(std::to_string(i) + "'");
    }
    orders.push_back(std::move(o));
  }
  return LinearOrderFamily(std::move(orders));
}

Word crown_perm_word(int k) {
  return checked(crown_permutations(k).concatenate(), build_family({Family::crown, k}), "crown construction");
}

Word tree_word(const Graph& t) {
  if (!is_tree(t)) throw InvalidInput("tree_word needs a tree");
  if (t.empty()) return Word();
  Vertex root = 0;
  for (Vertex v = 1; v < t.size(); ++v) {
    if (t.label(v) < t.label(root)) root = v;
  }
  Tokens w = {t.label(root), t.label(root)};
  std::vector<bool> seen(t.size(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : t.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      queue.push_back(y);
      auto it = std::find(w.begin(), w.end(), t.label(x));
      it = w.erase(it);
      w.insert(it, {t.label(y), t.label(x), t.label(y)});
    }
  }
  return checked(Word(w), t, "tree construction");
}

Word cycle_word(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  const Graph cycle = build_family({Family::cycle, n});
  const Tokens path = tree_word(build_family({Family::path, n})).tokens();
  // Adjacent swaps first, then the pair that wraps around the end.
  for (std::size_t i = 0; i < path.size(); ++i) {
    Tokens w = path;
    std::swap(w[i], w[(i + 1) % w.size()]);
    Word candidate(w);
    if (represents(candidate, cycle)) return candidate;
  }
  throw VerificationError("no swap of the path word represents the cycle");
}

Word cone_word(const LinearOrderFamily& perms, const std::string& apex) {
  const Word base = perms.concatenate();
  require_fresh(base, apex);
  Tokens out;
  for (const auto& o : perms.orders()) {
    append(out, o);
    out.push_back(apex);
  }
  return checked(Word(out), add_apex(derive_graph(base), apex), "cone construction");
}

}  // namespace wordrep
