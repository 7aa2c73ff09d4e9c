#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/search.hpp"

using namespace wordrep;

namespace {

Graph fam(Family f, int n = 0) { return build_family({f, n}); }

oracle::Arcs to_arcs(const Orientation& d) {
  const auto n = d.size();
  oracle::Arcs a(n, std::vector<bool>(n, false));
  for (auto [u, v] : d.arcs()) a[u][v] = true;
  return a;
}

/// i -> j' for the crown H_{k,k}.
Orientation standard_crown(int k) {
  const Graph g = fam(Family::crown, k);
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    const bool u_primed = g.label(u).back() == '\'';
    arcs.push_back(u_primed ? Edge{v, u} : Edge{u, v});
  }
  return Orientation(g, arcs);
}

}  // namespace

TEST_CASE("k-uniform search on small named graphs") {
  CHECK(find_k_uniform_representant(fam(Family::prism, 3), 2).status == SearchStatus::exhausted);
  const auto pr3 = find_k_uniform_representant(fam(Family::prism, 3), 3);
  REQUIRE(pr3.found());
  CHECK(uniformity(pr3.word()).k == 3);
  CHECK(bridge::oracle_represents(pr3.word(), fam(Family::prism, 3)));

  const auto k5 = find_k_uniform_representant(fam(Family::complete, 5), 1);
  REQUIRE(k5.found());
  CHECK(k5.word().size() == 5);

  const auto c5 = find_k_uniform_representant(fam(Family::cycle, 5), 2);
  REQUIRE(c5.found());
  CHECK(bridge::oracle_represents(c5.word(), fam(Family::cycle, 5)));
  CHECK_THROWS_AS(find_k_uniform_representant(fam(Family::cycle, 5), 0), InvalidInput);
}

TEST_CASE("k-uniform search agrees with brute-force enumeration") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = n <= 3 ? 1 + static_cast<int>(rng() % 3) : 1 + static_cast<int>(rng() % 2);
    const auto a = oracle::random_adj(rng, n, 0.5);
    const Graph g = bridge::from_adj(a);
    const auto c = find_k_uniform_representant(g, k);
    CHECK(c.found() == oracle::k_representable(a, k));
    if (c.found()) {
      CHECK(uniformity(c.word()).k == k);
      CHECK(bridge::oracle_represents(c.word(), g));
    }
  }
}

TEST_CASE("deterministic witnesses are independent of the worker count") {
  for (const Graph& g : {fam(Family::prism, 4), fam(Family::petersen), fam(Family::ladder, 4)}) {
    const auto a = find_k_uniform_representant(g, 3, {1, true, 0});
    const auto b = find_k_uniform_representant(g, 3, {6, true, 0});
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.word() == b.word());
    CHECK(a.nodes_explored == b.nodes_explored);
  }
  const auto x = find_k_uniform_representant(fam(Family::prism, 4), 2, {1, true, 0});
  const auto y = find_k_uniform_representant(fam(Family::prism, 4), 2, {3, true, 0});
  CHECK(x.status == SearchStatus::exhausted);
  CHECK(y.status == SearchStatus::exhausted);
  CHECK(x.nodes_explored == y.nodes_explored);
}

TEST_CASE("a node budget aborts instead of claiming exhaustion") {
  const auto c = find_k_uniform_representant(fam(Family::prism, 5), 2, {1, true, 5000});
  CHECK(c.status == SearchStatus::aborted);
  CHECK_FALSE(c.found());
}

TEST_CASE("representation numbers") {
  for (int n = 1; n <= 6; ++n) CHECK(representation_number(fam(Family::complete, n)).k == 1);
  CHECK(representation_number(fam(Family::cycle, 5)).k == 2);
  CHECK(representation_number(fam(Family::ladder, 2)).k == 2);
  const auto pr3 = representation_number(fam(Family::prism, 3));
  CHECK(pr3.k == 3);
  REQUIRE(pr3.attempts.size() == 3);
  CHECK(pr3.attempts[0].status == SearchStatus::exhausted);
  CHECK(pr3.attempts[1].status == SearchStatus::exhausted);
  CHECK(pr3.witness().found());

  const Graph w5 = add_apex(fam(Family::cycle, 5), "0");
  const auto none = representation_number(w5);
  CHECK_FALSE(none.k);
  CHECK_FALSE(none.word_representable);
  CHECK(none.attempts.size() == 6);

  const auto capped = representation_number(fam(Family::prism, 3), {}, 2);
  CHECK_FALSE(capped.k);
  CHECK(capped.word_representable);
}

TEST_CASE("representation number is monotone under induced subgraphs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = bridge::from_adj(oracle::random_adj(rng, n, 0.5));
    const auto rg = representation_number(g);
    std::vector<std::string> keep;
    for (const auto& l : g.labels())
      if (rng() % 3) keep.push_back(l);
    if (keep.empty()) continue;
    const auto rs = representation_number(induced_subgraph(g, keep));
    if (rg.k) {
      REQUIRE(rs.k);
      CHECK(*rs.k <= *rg.k);
    }
  }
}

TEST_CASE("success at k carries over to k + 1") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = bridge::from_adj(oracle::random_adj(rng, n, 0.5));
    for (int k = 1; k <= 3; ++k) {
      const auto c = find_k_uniform_representant(g, k);
      if (!c.found()) continue;
      CHECK(find_k_uniform_representant(g, k + 1).found());
      CHECK(represents(extend_uniform(c.word()), g));
    }
  }
}

TEST_CASE("interleaving fresh letters into a fixed word") {
  const Graph p3 = fam(Family::path, 3);
  const Word base = parse_word("1212");
  const std::string fresh[] = {"3"};
  const auto c = find_interleaving(base, fresh, p3, 2);
  REQUIRE(c.found());
  // The base order survives.
  oracle::Tokens kept;
  for (const auto& t : c.word().tokens())
    if (t != "3") kept.push_back(t);
  CHECK(kept == base.tokens());
  CHECK(represents(c.word(), p3));
}

TEST_CASE("transitive orientations") {
  CHECK(find_transitive_orientation(fam(Family::cycle, 5)).status == SearchStatus::exhausted);
  for (int k = 1; k <= 4; ++k) {
    const auto c = find_transitive_orientation(fam(Family::crown, k));
    REQUIRE(c.found());
    CHECK(oracle::transitive(to_arcs(c.orientation())));
  }
  CHECK(find_transitive_orientation(fam(Family::complete, 3)).found());

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto a = oracle::random_adj(rng, n, 0.5);
    const Graph g = bridge::from_adj(a);
    CHECK(find_transitive_orientation(g).found() == oracle::comparability(a));
    std::size_t expected = 0;
    oracle::any_orientation(a, [&](const oracle::Arcs& d) {
      expected += oracle::transitive(d);
      return false;
    });
    CHECK(all_transitive_orientations(g).size() == expected);
  }
}

TEST_CASE("poset dimension") {
  const Graph k4 = fam(Family::complete, 4);
  const std::vector<Vertex> id{0, 1, 2, 3};
  CHECK(poset_dimension(orient_by_order(k4, id)).dimension == 1);
  CHECK(poset_dimension(standard_crown(2)).dimension == 2);
  CHECK(poset_dimension(standard_crown(3)).dimension == 3);
  CHECK(poset_dimension(standard_crown(4)).dimension == 4);

  const Graph p = fam(Family::path, 3);
  const std::vector<Edge> not_transitive{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(poset_dimension(Orientation(p, not_transitive)), InvalidInput);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = bridge::from_adj(oracle::random_adj(rng, n, 0.5));
    for (const auto& d : all_transitive_orientations(g, 4)) {
      const auto dim = poset_dimension(d);
      CHECK(dim.dimension == oracle::dimension(to_arcs(d)));
      CHECK(static_cast<int>(dim.realizer.size()) == dim.dimension);
      // The realizer's concatenation represents the comparability graph.
      CHECK(represents(dim.realizer.concatenate(), g));
      CHECK(dim.linear_extensions == linear_extensions(d).size());
    }
  }
}

TEST_CASE("permutational representations") {
  const auto p3 = find_permutational_representation(fam(Family::path, 3), 2);
  REQUIRE(p3.found());
  CHECK(p3.orders().size() == 2);
  CHECK(represents(p3.orders().concatenate(), fam(Family::path, 3)));
  CHECK(represents(parse_word("213231"), fam(Family::path, 3)));

  for (int k = 1; k <= 6; ++k) {
    CHECK(find_permutational_representation(fam(Family::cycle, 5), k).status == SearchStatus::exhausted);
  }
  const auto k3 = find_permutational_representation(fam(Family::complete, 3), 1);
  REQUIRE(k3.found());
  CHECK(k3.orders().size() == 1);
  CHECK(find_permutational_representation(fam(Family::crown, 3), 2).status == SearchStatus::exhausted);
  CHECK(find_permutational_representation(fam(Family::crown, 3), 3).found());
  CHECK(find_permutational_representation(fam(Family::crown, 3), 5).orders().size() == 5);
}

TEST_CASE("comparability graphs are exactly the permutationally representable ones") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto a = oracle::random_adj(rng, n, 0.5);
    const Graph g = bridge::from_adj(a);
    bool some_k = false;
    for (int k = 1; k <= n && !some_k; ++k) some_k = find_permutational_representation(g, k).found();
    CHECK(some_k == find_transitive_orientation(g).found());
    // Brute force: a word of k permutations is a k-uniform word; check k = 2 directly.
    if (n <= 4) {
      const auto c = find_permutational_representation(g, 2);
      if (c.found()) CHECK(oracle::edges_of_word(c.orders().concatenate().tokens()) == bridge::edge_set(g));
    }
  }
}

TEST_CASE("linear order families") {
  CHECK_THROWS_AS(LinearOrderFamily(std::vector<std::vector<std::string>>{}), InvalidInput);
  CHECK_THROWS_AS(LinearOrderFamily({{"1", "2"}, {"1", "3"}}), InvalidInput);
  CHECK_THROWS_AS(LinearOrderFamily(std::vector<std::vector<std::string>>{{"1", "1"}}), InvalidInput);
  const LinearOrderFamily f({{"1", "2"}, {"2", "1"}});
  CHECK(f.concatenate().compact() == "1221");
  CHECK(status_name(SearchStatus::witness_found) == "witness-found");
}
