#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "mcayley/aut.hpp"
#include "mcayley/constructions.hpp"

using namespace mcayley;

namespace {

bool preserves_arcs(const Digraph& g, const Perm& p) {
  for (auto [u, v] : g.arcs())
    if (!g.has_arc(p[u], p[v])) return false;
  return true;
}

Digraph petersen() {
  Digraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Closure of a generating set by breadth-first multiplication.
std::size_t brute_group_order(int n, const std::vector<Perm>& gens) {
  std::set<Perm> seen = {identity_perm(n)};
  std::vector<Perm> frontier = {identity_perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = compose(p, g);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST(Aut, AllSmallGraphsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (const Digraph& g : oracle::all_graphs(n)) {
      const PermGroup a = automorphism_group(g);
      ASSERT_EQ(a.order(), oracle::brute_force_aut_order(g)) << encode(g);
      for (const Perm& p : a.generators()) ASSERT_TRUE(preserves_arcs(g, p)) << encode(g);
    }
  for (const Digraph& g : oracle::all_digraphs(3)) ASSERT_EQ(automorphism_group(g).order(), oracle::brute_force_aut_order(g));
}

TEST(Aut, RandomDigraphsMatchBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const Digraph g = oracle::random_digraph(rng, n, 0.5, trial % 3 == 0);
    ASSERT_EQ(automorphism_group(g).order(), oracle::brute_force_aut_order(g)) << encode(g);
  }
}

TEST(Aut, KnownOrders) {
  EXPECT_EQ(automorphism_group(petersen()).order(), 120);
  EXPECT_EQ(automorphism_group(oracle::hypercube(4)).order(), 384);
  EXPECT_EQ(automorphism_group(oracle::hypercube(5)).order(), 3840);
  EXPECT_EQ(automorphism_group(complete_graph(8)).order(), 40320);
  EXPECT_EQ(automorphism_group(cycle_graph(9)).order(), 18);
  EXPECT_EQ(automorphism_group(directed_cycle(9)).order(), 9);
  EXPECT_EQ(automorphism_group(Digraph(12)).order(), BigInt("479001600"));
  // disjoint union of three triangles: 3!^3 * 3!
  Digraph t = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(3));
  EXPECT_EQ(automorphism_group(t).order(), 1296);
}

TEST(Aut, ColoringIsRespected) {
  const Digraph g = cycle_graph(6);
  Coloring c = {1, 0, 0, 0, 0, 0};
  const PermGroup a = automorphism_group(g, c);
  EXPECT_EQ(a.order(), 2);
  for (const Perm& p : a.generators())
    for (int v = 0; v < 6; ++v) EXPECT_EQ(c[p[v]], c[v]);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const Digraph h = oracle::random_digraph(rng, n, 0.5, true);
    Coloring col(n);
    for (int& x : col) x = static_cast<int>(rng() % 2);
    if (std::find(col.begin(), col.end(), 0) == col.end()) col[0] = 0;
    if (std::find(col.begin(), col.end(), 1) == col.end()) col[n - 1] = 1;
    const PermGroup a = automorphism_group(h, col);
    for (const Perm& p : a.generators()) {
      EXPECT_TRUE(preserves_arcs(h, p));
      for (int v = 0; v < n; ++v) EXPECT_EQ(col[p[v]], col[v]);
    }
  }
}

TEST(Aut, CanonicalFormIsRelabellingInvariant) {
  std::mt19937_64 rng(21);
  std::vector<Digraph> graphs = {petersen(), oracle::hypercube(4), sigma_z2z2(5), delta_q8(3)};
  for (int i = 0; i < 16; ++i) graphs.push_back(oracle::random_digraph(rng, 9 + i % 5, 0.3, i % 2 == 0));
  for (const Digraph& g : graphs) {
    const CanonicalForm base = canonical_form(g);
    for (int k = 0; k < 25; ++k) {
      const Digraph h = relabel(g, oracle::random_perm(rng, g.n()));
      EXPECT_EQ(canonical_form(h).certificate, base.certificate);
      EXPECT_TRUE(are_isomorphic(g, h));
    }
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_NE(canonical_form(directed_cycle(4)).certificate, canonical_form(cycle_graph(4)).certificate);
}

TEST(Aut, StopAboveAndSeeds) {
  AutOptions options;
  options.stop_above = BigInt(10);
  const AutResult r = analyze(complete_graph(6), std::nullopt, options);
  EXPECT_TRUE(r.aborted);
  EXPECT_GT(r.group.order(), 10);
  AutOptions seeded;
  seeded.known_generators = embedded_generators(make_group(GroupDesc::cyclic(5)), 1);
  const AutResult s = analyze(cycle_graph(5), std::nullopt, seeded);
  EXPECT_FALSE(s.aborted);
  EXPECT_EQ(s.group.order(), 10);
  AutOptions bad;
  bad.known_generators = {Perm{1, 0, 2, 3}};
  EXPECT_THROW(analyze(directed_cycle(4), std::nullopt, bad), std::invalid_argument);
}

TEST(Aut, NodeBudgetIsAnError) {
  AutOptions tiny;
  tiny.node_budget = 3;
  EXPECT_THROW(analyze(oracle::hypercube(5), std::nullopt, tiny), BudgetExceeded);
}

TEST(PermGroup, SchreierSimsMatchesClosure) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    std::vector<Perm> gens;
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < k; ++i) {
      // a transposition or a uniform random permutation
      Perm p = identity_perm(n);
      if (n > 1 && rng() % 2) std::swap(p[rng() % n], p[rng() % n]);
      else p = oracle::random_perm(rng, n);
      gens.push_back(p);
    }
    const PermGroup g(n, gens);
    EXPECT_EQ(g.order(), brute_group_order(n, gens));
    for (const Perm& p : gens) EXPECT_TRUE(g.contains(p));
  }
}

TEST(PermGroup, OrbitsAndSemiregularity) {
  const FiniteGroup q8 = make_group(GroupDesc::quaternion());
  const PermGroup e = embedded_action(q8, 3);
  EXPECT_EQ(e.order(), 8);
  EXPECT_TRUE(e.is_semiregular());
  EXPECT_EQ(e.orbits().size(), 3u);
  for (const auto& o : e.orbits()) EXPECT_EQ(o.size(), 8u);
  const PermGroup s3(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_FALSE(s3.is_semiregular());
  EXPECT_EQ(s3.point_stabilizer(0).order(), 2);
  EXPECT_EQ(cycle_notation({1, 0, 2}), "(0 1)");
  EXPECT_EQ(cycle_notation(identity_perm(3)), "()");
  EXPECT_EQ(compose({1, 2, 0}, {1, 0, 2}), Perm({0, 2, 1}));
}
