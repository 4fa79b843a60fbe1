#include <gtest/gtest.h>

#include "mcayley/presets.hpp"
#include "mcayley/search.hpp"
#include "mcayley/verifier.hpp"

using namespace mcayley;

namespace {

FiniteGroup G(const char* spec) { return make_group(parse_group(spec)); }

SweepSpec sweep(const char* spec, int m, bool directed) {
  SweepSpec s;
  s.group = parse_group(spec);
  s.m = m;
  s.directed = directed;
  return s;
}

}  // namespace

TEST(Oracle, FirstRowFollowsTheClassification) {
  for (const char* g : {"C3", "C4", "C5", "C6", "A(4,2)", "Q8", "Dic12", "GDic(4,2)", "E2^2", "E2^3", "E2^4",
                        "D6", "D8", "D10", "Alt4", "X16a", "X16b", "X18", "X27", "Q8*C3", "Q8*C4"})
    EXPECT_FALSE(classification_oracle(1, G(g)).grr) << g;
  for (const char* g : {"C1", "C2", "E2^5", "D12", "D14", "D16", "C3*D6"})
    EXPECT_TRUE(classification_oracle(1, G(g)).grr) << g;
  for (const char* g : {"Q8", "E2^2", "E2^3", "E2^4", "E3^2"}) EXPECT_FALSE(classification_oracle(1, G(g)).drr) << g;
  for (const char* g : {"C1", "C2", "C4", "E2^5", "D8", "X16a"}) EXPECT_TRUE(classification_oracle(1, G(g)).drr) << g;
}

TEST(Oracle, LaterRows) {
  EXPECT_FALSE(classification_oracle(2, G("Q8")).grr);
  EXPECT_FALSE(classification_oracle(2, G("E2^2")).grr);
  EXPECT_FALSE(classification_oracle(2, G("C5")).grr);
  EXPECT_TRUE(classification_oracle(2, G("C6")).grr);
  EXPECT_TRUE(classification_oracle(2, G("E2^3")).grr);
  EXPECT_FALSE(classification_oracle(3, G("C3")).grr);
  EXPECT_TRUE(classification_oracle(3, G("C4")).grr);
  EXPECT_FALSE(classification_oracle(4, G("C2")).grr);
  EXPECT_TRUE(classification_oracle(5, G("C2")).grr);
  EXPECT_FALSE(classification_oracle(9, G("C1")).grr);
  EXPECT_TRUE(classification_oracle(10, G("C1")).grr);
  EXPECT_FALSE(classification_oracle(2, G("C2")).drr);
  EXPECT_TRUE(classification_oracle(2, G("C3")).drr);
  EXPECT_FALSE(classification_oracle(5, G("C1")).drr);
  EXPECT_TRUE(classification_oracle(6, G("C1")).drr);
  EXPECT_TRUE(classification_oracle(3, G("C2")).drr);
  EXPECT_THROW(classification_oracle(0, G("C2")), std::invalid_argument);
}

// Exhaustive sweeps agree with the oracle wherever they finish quickly.
TEST(Oracle, AgreesWithExhaustiveSearch) {
  for (const char* g : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "D6", "D8", "Q8", "E2^2", "E2^3", "A(4,2)",
                        "E3^2", "D10"}) {
    const FiniteGroup group = G(g);
    for (bool directed : {false, true}) {
      const Verdict v = directed ? exists_m_drr_exhaustive(sweep(g, 1, true)) : exists_m_grr_exhaustive(sweep(g, 1, false));
      ASSERT_FALSE(v.inconclusive);
      const OracleAnswer o = classification_oracle(1, group);
      EXPECT_EQ(v.exists, directed ? o.drr : o.grr) << g << (directed ? " DRR" : " GRR");
    }
  }
}

TEST(Verifier, PositiveChecksImplySemiregularAut) {
  for (const char* spec : {"C6", "D8", "Q8*C3"}) {
    const Preset p = preset(parse_group(spec));
    for (int m = 2; m <= 3; ++m) {
      const Digraph g = preset_graph(p, m);
      const auto c = is_m_grr(p.group, g, m);
      ASSERT_TRUE(c.holds) << spec << " " << c.diagnostics;
      EXPECT_TRUE(static_cast<bool>(c));
      const PermGroup a = automorphism_group(g);
      EXPECT_EQ(a.order(), p.group.order());
      EXPECT_TRUE(a.is_semiregular());
      EXPECT_EQ(static_cast<int>(a.orbits().size()), m);
    }
  }
}

TEST(Verifier, NegativeChecks) {
  const FiniteGroup c4 = G("C4");
  const auto k4 = is_m_grr(c4, complete_graph(4), 1);
  EXPECT_FALSE(k4.holds);
  EXPECT_FALSE(k4.order_matches);
  EXPECT_NE(k4.diagnostics.find("|Aut|"), std::string::npos);
  EXPECT_THROW(is_m_grr(c4, complete_graph(5), 1), std::invalid_argument);
  const auto dir = is_m_grr(c4, directed_cycle(4), 1);
  EXPECT_FALSE(dir.holds);
  EXPECT_FALSE(dir.symmetric);
  EXPECT_TRUE(is_m_drr(c4, directed_cycle(4), 1).holds);
  Digraph path(4);
  for (int i = 0; i < 3; ++i) path.add_edge(i, i + 1);
  EXPECT_FALSE(is_m_grr(c4, path, 1).regular);
}

TEST(Verifier, PresetConditionsImplyTheProperty) {
  for (const GroupDesc& desc : preset_catalog()) {
    SCOPED_TRACE(desc.to_string());
    const Preset p = preset(desc);
    const PrelReport r = check_lemma_prel(p.group, p.data);
    EXPECT_TRUE(r.bicay_is_2grr);
    EXPECT_TRUE(r.neighborhoods_distinct);
    if (!r.holds()) continue;
    for (int m = 3; m <= 5; ++m) EXPECT_TRUE(is_m_grr(p.group, preset_graph(p, m), m).holds) << "m=" << m;
  }
}

TEST(Verifier, GrrSearchAndAdmissibility) {
  EXPECT_FALSE(grr_search(G("C5")).has_value());
  EXPECT_FALSE(grr_search(G("Q8")).has_value());
  const auto c2 = grr_search(G("C2"));
  ASSERT_TRUE(c2.has_value());
  EXPECT_TRUE(c2->R.empty());  // two isolated vertices
  const FiniteGroup d12 = G("D12");
  const auto found = grr_search(d12);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(found->record.is_grr);
  EXPECT_TRUE(found->record.side_ok());
  // no smaller Cayley subset with an admissible R side is a GRR
  for_each_cayley_subset(d12, [&](const ElementSet& R) {
    if (R.size() >= found->R.size()) return false;
    const Admissibility a = grr_set_admissible(d12, R);
    EXPECT_FALSE(a.is_grr && a.side_ok());
    return true;
  });
  EXPECT_THROW(grr_search(G("C3*D12")), std::invalid_argument);
}

TEST(Verifier, CayleySubsetOrder) {
  const FiniteGroup c4 = G("C4");
  std::vector<ElementSet> seen;
  for_each_cayley_subset(c4, [&](const ElementSet& s) {
    seen.push_back(s);
    return true;
  });
  // classes {a, a^3} and {a^2}; 2^2 subsets by size then members
  ASSERT_EQ(seen.size(), 4u);
  EXPECT_TRUE(seen[0].empty());
  EXPECT_EQ(seen[1].size(), 1u);
  EXPECT_EQ(seen[3].size(), 3u);
  for (const auto& s : seen) EXPECT_TRUE(is_cayley_subset(c4, s));
}

TEST(Verifier, CaseSelectionAndVariants) {
  const FiniteGroup d12 = G("D12");
  const ElementSet R = grr_search(d12)->R;
  const auto c3 = theta_case_select(d12, R, 3);
  ASSERT_TRUE(c3.has_value());
  EXPECT_EQ(c3->case_id, 1);
  const auto c2 = theta_case_select(d12, R, 2);
  ASSERT_TRUE(c2.has_value());
  EXPECT_EQ(c2->case_id, 2);
  for (int m = 2; m <= 5; ++m) {
    const auto ext = extend_grr(d12, R, m);
    ASSERT_TRUE(ext.has_value());
    EXPECT_TRUE(is_m_grr(d12, ext->graph, m).holds) << ext->method;
  }
  const auto L = find_involution_variant_L(d12, R);
  ASSERT_TRUE(L.has_value());
  EXPECT_EQ(L->size(), R.size());
  EXPECT_NE(involution_count(d12, *L), involution_count(d12, R));
  const FiniteGroup c6 = G("C6");
  EXPECT_THROW(theta_case_select(c6, {c6.generator("a"), c6.inv(c6.generator("a"))}, 3), ConstructionError);
}
