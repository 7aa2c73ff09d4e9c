#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/transform.hpp"

using namespace wordrep;

namespace {

Graph fam(Family f, int n = 0) { return build_family({f, n}); }

/// Graph of a word per the oracle, plus extra vertices and edges.
Graph oracle_graph(const Word& w, const oracle::Tokens& extra = {}, const oracle::EdgeSet& extra_edges = {}) {
  auto letters = oracle::alphabet(w.tokens());
  letters.insert(letters.end(), extra.begin(), extra.end());
  auto edges = oracle::edges_of_word(w.tokens());
  edges.insert(extra_edges.begin(), extra_edges.end());
  return bridge::graph_of(letters, edges);
}

Word pr3_word() { return find_k_uniform_representant(fam(Family::prism, 3), 3).word(); }

}  // namespace

TEST_CASE("adding a leaf") {
  const Word p3 = find_k_uniform_representant(fam(Family::path, 3), 2).word();
  const Word p4 = add_leaf(p3, "3", "4");
  CHECK(uniformity(p4).k == 2);
  CHECK(bridge::oracle_represents(p4, fam(Family::path, 4)));

  const Word k2 = add_leaf(parse_word("1212"), "1", "3");
  CHECK(bridge::oracle_represents(k2, oracle_graph(parse_word("1212"), {"3"}, {{"1", "3"}})));

  const Word pr = add_leaf(pr3_word(), "1", "a");
  CHECK(uniformity(pr).k == 3);
  CHECK(bridge::oracle_represents(pr, oracle_graph(pr3_word(), {"a"}, {{"1", "a"}})));

  CHECK_THROWS_AS(add_leaf(parse_word("12"), "1", "3"), InvalidInput);
  CHECK_THROWS_AS(add_leaf(parse_word("1212"), "1", "2"), InvalidInput);
  CHECK_THROWS_AS(add_leaf(parse_word("1212"), "5", "3"), InvalidInput);
}

TEST_CASE("adding a path") {
  TransformStats stats;
  const Word pr = pr3_word();
  const auto inner3 = fresh_labels(pr, 2);
  CHECK(inner3 == std::vector<std::string>{"p1", "p2"});
  const Word a = add_path(pr, "1", "2", 3, &stats);
  CHECK(uniformity(a).k == 3);
  CHECK(bridge::oracle_represents(
      a, oracle_graph(pr, {"p1", "p2"}, {{"1", "p1"}, {"p1", "p2"}, {"2", "p2"}})));

  const Word b = add_path(pr, "1", "1'", 4, &stats);
  CHECK(bridge::oracle_represents(
      b, oracle_graph(pr, {"p1", "p2", "p3"}, {{"1", "p1"}, {"p1", "p2"}, {"p2", "p3"}, {"1'", "p3"}})));

  const Word k4 = parse_word("123412341234");
  const Word c = add_path(k4, "1", "2", 3, &stats);
  CHECK(bridge::oracle_represents(c, oracle_graph(k4, {"p1", "p2"}, {{"1", "p1"}, {"p1", "p2"}, {"2", "p2"}})));
  CHECK(stats.attempts == 3);

  CHECK_THROWS_AS(add_path(pr, "1", "2", 2), InvalidInput);
  CHECK_THROWS_AS(add_path(parse_word("1212"), "1", "2", 3), InvalidInput);
  // Fresh labels skip collisions.
  CHECK(fresh_labels(parse_word("p1 p2 p1 p2"), 2) == std::vector<std::string>{"p1_", "p2_"});
}

TEST_CASE("combining two cliques reproduces the direct words") {
  const Word a = parse_word("x1 x x1 x");
  const Word b = parse_word("y y1 y y1");
  const Word e = combine(a, b, "x", "y", CombineMode::connect_edge);
  CHECK(e.str() == "x1 x x1 y x y1 y y1");
  const Word g = combine(a, b, "x", "y", CombineMode::glue_vertex, "z");
  CHECK(g.str() == "x1 z x1 y1 z y1");
  CHECK(bridge::edge_set(derive_graph(g)) == oracle::EdgeSet{{"x1", "z"}, {"y1", "z"}});
}

TEST_CASE("combining the prism with K_4") {
  TransformStats stats;
  const Word pr = pr3_word();
  const Word k4 = parse_word("a b c d a b c d a b c d");
  const Word e = combine(pr, k4, "1", "a", CombineMode::connect_edge, "z", &stats);
  CHECK(uniformity(e).k == 3);
  CHECK(bridge::oracle_represents(e, connect_by_edge(derive_graph(pr), derive_graph(k4), "1", "a")));
  const Word g = combine(pr, k4, "1", "a", CombineMode::glue_vertex, "z", &stats);
  CHECK(bridge::oracle_represents(g, glue_at_vertex(derive_graph(pr), derive_graph(k4), "1", "a", "z")));
  CHECK(stats.attempts == 2);
  CHECK(stats.fallbacks == 0);
  CHECK(chromatic_number(derive_graph(e)) == 4);

  CHECK_THROWS_AS(combine(pr, parse_word("a b a b"), "1", "a", CombineMode::connect_edge), InvalidInput);
  CHECK_THROWS_AS(combine(parse_word("1 2"), parse_word("a b"), "1", "a", CombineMode::connect_edge), InvalidInput);
  CHECK_THROWS_AS(combine(pr, pr, "1", "2", CombineMode::connect_edge), InvalidInput);
}

TEST_CASE("combine never needs its fallback on random inputs") {
  std::mt19937_64 rng(47);
  TransformStats stats;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const auto w1 = oracle::random_uniform_word(rng, oracle::numbered(1 + static_cast<int>(rng() % 4), "a"), k);
    const auto w2 = oracle::random_uniform_word(rng, oracle::numbered(1 + static_cast<int>(rng() % 4), "b"), k);
    const Word a(w1), b(w2);
    const auto mode = rng() % 2 ? CombineMode::connect_edge : CombineMode::glue_vertex;
    const std::string x = w1[rng() % w1.size()], y = w2[rng() % w2.size()];
    const Word c = combine(a, b, x, y, mode, "z", &stats);
    const Graph target = mode == CombineMode::connect_edge
                             ? connect_by_edge(derive_graph(a), derive_graph(b), x, y)
                             : glue_at_vertex(derive_graph(a), derive_graph(b), x, y, "z");
    CHECK(bridge::oracle_represents(c, target));
    CHECK(uniformity(c).k == k);
  }
  CHECK(stats.fallbacks == 0);
}

TEST_CASE("combined representation numbers") {
  CHECK(combined_rep_number({1, 1, 1, 1}).connected == 1);
  CHECK(combined_rep_number({1, 1, 1, 1}).glued == 1);
  const auto two = combined_rep_number({1, 3, 1, 6});
  CHECK(two.glued == 3);
  CHECK(two.connected == 3);
  const auto leaf = combined_rep_number({1, 1, 1, 3});
  CHECK(leaf.glued == 1);
  CHECK(leaf.connected == 2);
  const auto three = combined_rep_number({1, 1, 3, 3});
  CHECK(three.glued == 2);
  CHECK(three.connected == 2);
  CHECK_THROWS_AS(combined_rep_number({0, 1, 1, 1}), InvalidInput);
}

TEST_CASE("module substitution") {
  const Word pr = pr3_word();
  const LinearOrderFamily k3({{"a", "b", "c"}});
  const Word s = substitute_module(pr, "1", k3);
  CHECK(uniformity(s).k == 3);
  CHECK(s.size() == pr.size() + 3 * 2);
  const Graph m = derive_graph(parse_word("abc"));
  CHECK(bridge::oracle_represents(s, substitute_vertex(fam(Family::prism, 3), "1", m)));

  const Word single = substitute_module(pr, "1", LinearOrderFamily({{"q"}}));
  CHECK(derive_graph(single).size() == 6);
  CHECK(bridge::oracle_represents(single, relabel(fam(Family::prism, 3), {{"1", "q"}})));

  const LinearOrderFamily k4({{"a", "b", "c", "d"}});
  const Word big = substitute_module(pr, "1", k4);
  CHECK(derive_graph(big).size() == 9);
  CHECK(chromatic_number(derive_graph(big)) == 6);

  // A 3-permutation module needs x three times.
  const LinearOrderFamily crown3 = crown_permutations(3);
  CHECK_THROWS_AS(substitute_module(parse_word("1212"), "1", crown3), InvalidInput);
  CHECK_THROWS_AS(substitute_module(pr, "1", LinearOrderFamily({{"2"}})), InvalidInput);
}

TEST_CASE("ladder words match the table") {
  const char* rows[] = {
      "1 1' 1 1'",
      "1' 2 1 2' 2 1' 2' 1",
      "1 2' 1' 3 2 3' 3 2' 3' 1 2 1'",
      "1' 2 1 3' 2' 4 3 4' 4 3' 4' 2 3 1' 2' 1",
      "1 2' 1' 3 2 4' 3' 5 4 5' 5 4' 5' 3 4 2' 3' 1 2 1'",
  };
  for (int n = 1; n <= 5; ++n) CHECK(ladder_word(n).str() == rows[n - 1]);
  for (int n = 1; n <= 9; ++n) {
    const Word w = ladder_word(n);
    CHECK(uniformity(w).k == 2);
    CHECK(bridge::oracle_represents(w, fam(Family::ladder, n)));
    // The factor n' n survives for the next step.
    const auto t = w.tokens();
    bool factor = false;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      factor = factor || (t[i] == std::to_string(n) + "'" && t[i + 1] == std::to_string(n));
    CHECK(factor);
  }
  CHECK_THROWS_AS(ladder_word(0), InvalidInput);
}

TEST_CASE("crown words match the table") {
  const char* rows[] = {
      "1 1' 1' 1",
      "1 2' 2 1' 2 1' 1 2'",
      "1 2 3' 3 2' 1' 1 3 2' 2 3' 1' 2 3 1' 1 3' 2'",
      "1 2 3 4' 4 3' 2' 1' 1 2 4 3' 3 4' 2' 1' 1 3 4 2' 2 4' 3' 1' 2 3 4 1' 1 4' 3' 2'",
  };
  for (int k = 1; k <= 4; ++k) CHECK(crown_perm_word(k).str() == rows[k - 1]);
  for (int k = 2; k <= 7; ++k) {
    const auto perms = crown_permutations(k);
    CHECK(perms.size() == static_cast<std::size_t>(k));
    for (const auto& p : perms.orders()) CHECK(p.size() == static_cast<std::size_t>(2 * k));
    CHECK(bridge::oracle_represents(perms.concatenate(), fam(Family::crown, k)));
  }
}

TEST_CASE("tree words") {
  CHECK(tree_word(fam(Family::path, 2)).str() == "2 1 2 1");
  CHECK(tree_word(fam(Family::path, 3)).str() == "3 2 3 1 2 1");
  const Graph star({"c", "x", "y", "z"}, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(bridge::oracle_represents(tree_word(star), star));
  CHECK_THROWS_AS(tree_word(fam(Family::cycle, 4)), InvalidInput);

  // Random trees from Pruefer sequences.
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    std::vector<int> seq(std::max(n - 2, 0));
    for (auto& s : seq) s = static_cast<int>(rng() % n);
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    Graph t(oracle::numbered(n));
    for (int s : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      t.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(s));
      --deg[leaf];
      --deg[s];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] != 1) continue;
      if (u < 0) {
        u = v;
      } else {
        t.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
    REQUIRE(is_tree(t));
    const Word w = tree_word(t);
    CHECK(uniformity(w).k == 2);
    CHECK(bridge::oracle_represents(w, t));
  }
}

TEST_CASE("cycle words") {
  for (int n = 3; n <= 30; ++n) {
    const Word w = cycle_word(n);
    CHECK(uniformity(w).k == 2);
    CHECK(bridge::oracle_represents(w, fam(Family::cycle, n)));
  }
  CHECK(derive_graph(cycle_word(3)).is_complete());
  CHECK(are_isomorphic(derive_graph(cycle_word(6)), fam(Family::crown, 3)));
  CHECK_THROWS_AS(cycle_word(2), InvalidInput);
}

TEST_CASE("cone words") {
  const Word g3 = cone_word(crown_permutations(3), "0");
  CHECK(uniformity(g3).k == 3);
  CHECK(bridge::oracle_represents(g3, add_apex(fam(Family::crown, 3), "0")));
  const Word g2 = cone_word(crown_permutations(2), "0");
  CHECK(bridge::oracle_represents(g2, add_apex(fam(Family::crown, 2), "0")));
  const Word k4 = cone_word(LinearOrderFamily({{"1", "2", "3"}}), "0");
  CHECK(k4.str() == "1 2 3 0");
  CHECK(derive_graph(k4).is_complete());
  CHECK_THROWS_AS(cone_word(crown_permutations(2), "1"), InvalidInput);
}

TEST_CASE("lifting to a higher k") {
  const Word w = lift_uniform(parse_word("1212"), 4);
  CHECK(uniformity(w).k == 4);
  CHECK(represents(w, derive_graph(parse_word("1212"))));
  CHECK_THROWS_AS(lift_uniform(parse_word("112"), 3), InvalidInput);
}
