#include <gtest/gtest.h>

#include <numeric>

#include "mcayley/aut.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/presets.hpp"

using namespace mcayley;

namespace {

FiniteGroup G(const char* spec) { return make_group(parse_group(spec)); }

// Right multiplication by G is a group of automorphisms with m orbits of size |G|.
void expect_semiregular_copy(const FiniteGroup& group, const Digraph& g, int m) {
  for (const Perm& p : embedded_generators(group, m)) ASSERT_TRUE(is_automorphism(g, p));
  const PermGroup e = embedded_action(group, m);
  EXPECT_EQ(e.order(), group.order());
  EXPECT_TRUE(e.is_semiregular());
  const auto orbits = e.orbits();
  ASSERT_EQ(static_cast<int>(orbits.size()), m);
  for (int i = 0; i < m; ++i) {
    EXPECT_EQ(static_cast<int>(orbits[i].size()), group.order());
    EXPECT_EQ(orbits[i].front(), block_vertex(group, 0, i));
  }
}

}  // namespace

TEST(Constructions, CayleyGraph) {
  const FiniteGroup d8 = G("D8");
  const Element a = d8.generator("a"), b = d8.generator("b");
  const ElementSet R = {a, d8.inv(a), b};
  const Digraph g = cayley(d8, R);
  EXPECT_EQ(is_regular(g), 3);
  EXPECT_TRUE(g.is_symmetric());
  for (Element x = 0; x < d8.order(); ++x) EXPECT_TRUE(g.has_arc(x, d8.mul(b, x)));
  expect_semiregular_copy(d8, g, 1);
  EXPECT_THROW(cayley(d8, {0, a}), ConstructionError);
  EXPECT_FALSE(cayley(d8, {a}).is_symmetric());
}

TEST(Constructions, CosetDigraph) {
  const FiniteGroup d12 = G("D12");
  const ElementSet A = {d12.generator("a"), d12.inv(d12.generator("a")), d12.generator("b")};
  EXPECT_EQ(coset_digraph(d12, {0}, A), cayley(d12, A));
  const ElementSet H = closure(d12, {d12.generator("b")});
  const Digraph q = coset_digraph(d12, H, A);
  EXPECT_EQ(q.n(), 6);
  EXPECT_TRUE(q.is_symmetric());
  EXPECT_EQ(coset_digraph(d12, d12.all_elements(), A).n(), 1);
  EXPECT_THROW(coset_digraph(d12, {0, d12.generator("a")}, A), ConstructionError);
}

TEST(Constructions, BicayMatchesMCayley) {
  const FiniteGroup c7 = G("C7");
  const Element a = c7.generator("a");
  const ElementSet R = {a, c7.inv(a)}, L = {c7.pow(a, 2), c7.pow(a, 5)}, S = {0, a};
  MCayleySpec spec = MCayleySpec::empty(2);
  spec.T[0][0] = R;
  spec.T[1][1] = L;
  spec.T[0][1] = S;
  spec.T[1][0] = c7.inverse_of(S);
  EXPECT_TRUE(spec.is_undirected(c7));
  EXPECT_EQ(bicay(c7, R, L, S), m_cayley(c7, spec));
  EXPECT_EQ(is_regular(bicay(c7, R, L, S)), 4);
  expect_semiregular_copy(c7, bicay(c7, R, L, S), 2);
  spec.T[1][0] = S;
  EXPECT_FALSE(spec.is_undirected(c7));
}

TEST(Constructions, PresetsSatisfyInvariantsAndValency) {
  for (const GroupDesc& desc : preset_catalog()) {
    SCOPED_TRACE(desc.to_string());
    const Preset p = preset(desc);
    EXPECT_NO_THROW(check_connection_data(p.group, p.data));
    const auto& d = p.data;
    EXPECT_EQ(is_regular(preset_graph(p, 2)), static_cast<int>(d.R.size() + d.S.size()));
    for (int m = 3; m <= 5; ++m) {
      const Digraph g = preset_graph(p, m);
      EXPECT_TRUE(g.is_symmetric());
      EXPECT_EQ(is_regular(g), static_cast<int>(d.R.size() + d.S.size() + 1));
      expect_semiregular_copy(p.group, g, m);
    }
  }
}

TEST(Constructions, CyclicPresetValues) {
  const Preset p = preset(GroupDesc::cyclic(10));
  EXPECT_EQ(p.row, "cyclic");
  const Element a = p.group.generator("a");
  auto pw = [&](int k) { return p.group.pow(a, k); };
  EXPECT_EQ(p.data.R, ElementSet({pw(1), pw(9)}));
  EXPECT_EQ(p.data.L, ElementSet({pw(2), pw(8)}));
  EXPECT_EQ(p.data.S, ElementSet({0, pw(1), pw(3)}));
  EXPECT_EQ(p.data.T, ElementSet({pw(1), pw(9), pw(2), pw(8)}));
  EXPECT_EQ(p.data.x, pw(2));
  // the block-2 neighbourhood is a path on four vertices plus two isolated vertices
  const Digraph t = preset_graph(p, 3);
  const Digraph local = induced(t, t.out_neighbors(block_vertex(p.group, 0, 2))).graph;
  Digraph expected(6);
  expected.add_edge(0, 1);
  expected.add_edge(1, 2);
  expected.add_edge(2, 3);
  EXPECT_TRUE(are_isomorphic(local, expected));
}

TEST(Constructions, PresetCoverage) {
  EXPECT_THROW(preset(GroupDesc::cyclic(5)), ConstructionError);
  EXPECT_THROW(preset(GroupDesc::dihedral(12)), ConstructionError);
  EXPECT_THROW(preset(parse_group("E2^4")), ConstructionError);
  EXPECT_NO_THROW(preset(parse_group("A(6,3)")));
  EXPECT_NO_THROW(preset(parse_group("GDic(4,4)")));
  EXPECT_NO_THROW(preset(parse_group("GDic(6,2)")));
  // the generalized dicyclic rank >= 3 row is kept as transcribed and is
  // rejected by the inverse-closure check
  try {
    preset(parse_group("GDic(4,2,2)"));
    FAIL() << "expected the rank-3 generalized dicyclic row to be rejected";
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("fails its invariants"), std::string::npos);
  }
}

TEST(Constructions, ConnectionDataErrors) {
  const Preset p = preset(GroupDesc::cyclic(8));
  ConnectionData cd = p.data;
  cd.x = 0;
  EXPECT_THROW(check_connection_data(p.group, cd), ConstructionError);
  cd = p.data;
  cd.L.erase(*cd.L.begin());
  EXPECT_THROW(check_connection_data(p.group, cd), ConstructionError);
  cd = p.data;
  cd.T.insert(0);
  EXPECT_THROW(check_connection_data(p.group, cd), ConstructionError);
  EXPECT_THROW(theta_general(p.group, p.data, 2), ConstructionError);
}

TEST(Constructions, ThetaGrrCases) {
  const FiniteGroup d12 = G("D12");
  const Element a = d12.generator("a"), b = d12.generator("b");
  // a GRR set of D12 whose Cayley graph has no isolated vertex on R
  const ElementSet R = parse_element_set(d12, "a, a^-1, b, a*b, a^2*b");
  for (int m = 3; m <= 5; ++m) {
    const Digraph g = theta_grr(d12, R, a, m, 1);
    EXPECT_EQ(is_regular(g), static_cast<int>(R.size()) + 2);
    expect_semiregular_copy(d12, g, m);
  }
  const Digraph c2 = theta_grr(d12, R, a, 2, 2);
  EXPECT_EQ(is_regular(c2), static_cast<int>(R.size()) + 1);
  expect_semiregular_copy(d12, c2, 2);
  EXPECT_THROW(theta_grr(d12, R, a, 2, 1), ConstructionError);
  EXPECT_THROW(theta_grr(d12, R, b, 3, 1), ConstructionError);
  EXPECT_THROW(theta_grr(d12, R, d12.pow(a, 3), 2, 2), ConstructionError);
  EXPECT_THROW(theta_grr(d12, R, a, 2, 3), ConstructionError);
  EXPECT_THROW(theta_grr(d12, R, a, 3, 4), ConstructionError);
  EXPECT_THROW(theta_grr(d12, {a, d12.inv(a)}, a, 3, 1), ConstructionError);
}

TEST(Constructions, DeltaFamilies) {
  for (int n = 3; n <= 6; ++n)
    for (int m = 5; m <= 7; ++m)
      for (int delta = 0; delta < n; ++delta) {
        if (std::gcd(1 + delta, n) != 1) {
          EXPECT_THROW(delta_cyclic(n, m, delta), ConstructionError);
          continue;
        }
        const Digraph g = delta_cyclic(n, m, delta);
        EXPECT_EQ(g.n(), n * m);
        EXPECT_EQ(is_regular(g), 2 * n);
        expect_semiregular_copy(make_group(GroupDesc::cyclic(n)), g, m);
      }
  EXPECT_THROW(delta_cyclic(2, 5), ConstructionError);
  EXPECT_THROW(delta_cyclic(4, 4), ConstructionError);
  const FiniteGroup q8 = G("Q8");
  for (int m = 3; m <= 6; ++m) {
    const Digraph g = delta_q8(m);
    EXPECT_EQ(g.n(), 8 * m);
    EXPECT_EQ(is_regular(g), 5);
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(8 * m * 5 / 2));
    expect_semiregular_copy(q8, g, m);
  }
  const FiniteGroup v4 = G("E2^2");
  for (int m = 3; m <= 8; ++m) {
    const Digraph g = sigma_z2z2(m);
    EXPECT_EQ(is_regular(g), 3);
    expect_semiregular_copy(v4, g, m);
  }
}

TEST(Constructions, ElementaryAbelianLift) {
  const Preset e8 = preset(parse_group("E2^3"));
  const LiftResult r = elementary_abelian_lift(preset_graph(e8, 3), e8.group, 3);
  EXPECT_EQ(r.graph.n(), 48);
  expect_semiregular_copy(G("E2^4"), r.graph, 3);
  EXPECT_THROW(elementary_abelian_lift(preset_graph(e8, 3), G("C8"), 3), ConstructionError);
}

TEST(Constructions, Fixtures) {
  const Digraph z2 = section5_fixture("z2_3drr");
  EXPECT_EQ(z2.n(), 6);
  EXPECT_EQ(z2.arc_count(), 12u);
  expect_semiregular_copy(G("C2"), z2, 3);
  const Digraph z1 = section5_fixture("z1_6drr");
  EXPECT_EQ(z1.n(), 6);
  EXPECT_FALSE(z1.is_symmetric());
  EXPECT_THROW(section5_fixture("nope"), ConstructionError);
}
