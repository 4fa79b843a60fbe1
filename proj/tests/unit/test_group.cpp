#include <gtest/gtest.h>

#include <random>

#include "mcayley/group.hpp"

using namespace mcayley;

namespace {

const char* kSpecs[] = {"C1",   "C2",     "C6",    "C12",    "D6",     "D8",     "D12",  "Dic12",
                        "Dic16", "Q8",    "Alt4",  "A(4,2)", "A(3,3)", "E2^4",   "E3^2", "GDic(4,2)",
                        "X16a", "X16b",  "X18",   "X27",    "Q8*C3",  "Q8*C4",  "C3*D6"};

FiniteGroup G(const char* spec) { return make_group(parse_group(spec)); }

// Elements of order exactly two, counted straight from the table.
int table_involutions(const FiniteGroup& g) {
  int count = 0;
  for (Element x = 1; x < g.order(); ++x) count += g.mul(x, x) == 0;
  return count;
}

}  // namespace

TEST(Group, EveryBuiltGroupIsAssociativeWithIdentityZero) {
  for (const char* spec : kSpecs) {
    const FiniteGroup g = G(spec);
    SCOPED_TRACE(spec);
    EXPECT_TRUE(g.is_associative());
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(0, x), x);
      EXPECT_EQ(g.mul(x, g.inv(x)), 0);
    }
    EXPECT_EQ(static_cast<int>(closure(g, ElementSet(g.generators())).size()), g.order());
  }
}

TEST(Group, Orders) {
  const std::pair<const char*, int> expected[] = {
      {"C1", 1},     {"C6", 6},    {"D6", 6},      {"D12", 12},     {"Dic12", 12},  {"Q8", 8},
      {"Alt4", 12},  {"E2^2", 4},  {"E2^3", 8},    {"E2^4", 16},    {"E3^2", 9},    {"X16a", 16},
      {"X16b", 16},  {"X18", 18},  {"X27", 27},    {"Q8*C3", 24},   {"Q8*C4", 32},  {"D10", 10},
      {"D8", 8},     {"A(4,2)", 8}, {"GDic(4,2)", 16}};
  for (auto [spec, order] : expected) EXPECT_EQ(G(spec).order(), order) << spec;
}

TEST(Group, DihedralInvolutionsMatchBruteForce) {
  for (int k = 1; k <= 10; ++k) {
    const FiniteGroup g = make_group(GroupDesc::dihedral(2 * k));
    EXPECT_EQ(table_involutions(g), k % 2 == 0 ? k + 1 : k) << "order " << 2 * k;
    EXPECT_EQ(involution_count(g, g.non_identity()), table_involutions(g));
  }
}

TEST(Group, PresentedRelationsHold) {
  {
    const FiniteGroup g = G("X16a");
    const Element a = g.generator("a"), b = g.generator("b"), c = g.generator("c");
    for (Element x : {a, b, c}) EXPECT_EQ(g.mul(x, x), 0);
    const Element abc = g.mul(g.mul(a, b), c);
    EXPECT_EQ(abc, g.mul(g.mul(b, c), a));
    EXPECT_EQ(abc, g.mul(g.mul(c, a), b));
  }
  {
    const FiniteGroup g = G("X16b");
    const Element a = g.generator("a"), b = g.generator("b");
    EXPECT_EQ(element_order(g, a), 8);
    EXPECT_EQ(element_order(g, b), 2);
    EXPECT_EQ(g.mul(g.mul(b, a), b), g.pow(a, 5));
  }
  {
    const FiniteGroup g = G("X18");
    const Element a = g.generator("a"), b = g.generator("b"), c = g.generator("c");
    EXPECT_EQ(element_order(g, a), 3);
    EXPECT_EQ(element_order(g, b), 3);
    EXPECT_EQ(element_order(g, c), 2);
    EXPECT_EQ(g.mul(a, b), g.mul(b, a));
    EXPECT_EQ(g.pow(g.mul(a, c), 2), 0);
    EXPECT_EQ(g.pow(g.mul(c, b), 2), 0);
  }
  {
    const FiniteGroup g = G("X27");
    const Element a = g.generator("a"), b = g.generator("b"), c = g.generator("c");
    for (Element x : {a, b, c}) EXPECT_EQ(element_order(g, x), 3);
    EXPECT_EQ(g.mul(a, c), g.mul(c, a));
    EXPECT_EQ(g.mul(b, c), g.mul(c, b));
    EXPECT_EQ(g.mul(g.mul(g.inv(b), a), b), g.mul(a, c));
  }
  {
    const FiniteGroup g = G("Q8");
    const Element i = g.generator("i"), j = g.generator("j");
    EXPECT_EQ(g.mul(i, i), g.mul(j, j));
    EXPECT_EQ(element_order(g, i), 4);
    EXPECT_EQ(g.mul(g.mul(g.inv(j), i), j), g.inv(i));
  }
}

TEST(Group, ClosureIsIdempotentAndMonotone) {
  std::mt19937_64 rng(7);
  for (const char* spec : {"D12", "Alt4", "X18", "Q8*C3", "A(4,2)"}) {
    const FiniteGroup g = G(spec);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      ElementSet x, y;
      for (int k = 0; k < 2; ++k) x.insert(pick(rng));
      y = x;
      y.insert(pick(rng));
      const ElementSet cx = closure(g, x);
      EXPECT_EQ(closure(g, cx), cx);
      EXPECT_TRUE(cx.is_subset_of(closure(g, y)));
      EXPECT_TRUE(is_subgroup(g, cx));
      EXPECT_EQ(g.order() % static_cast<int>(cx.size()), 0);
    }
  }
}

TEST(Group, Examples) {
  const FiniteGroup c6 = G("C6");
  const Element a = c6.generator("a");
  EXPECT_EQ(element_order(c6, a), 6);
  const ElementSet sub = closure(c6, {c6.pow(a, 2)});
  EXPECT_EQ(sub, ElementSet({0, c6.pow(a, 2), c6.pow(a, 4)}));
  EXPECT_TRUE(is_cayley_subset(c6, {a, c6.inv(a)}));
  EXPECT_FALSE(is_cayley_subset(c6, {a}));
  EXPECT_FALSE(is_cayley_subset(c6, {0}));
  const FiniteGroup c5 = G("C5");
  EXPECT_EQ(involution_count(c5, {c5.generator("a"), c5.inv(c5.generator("a"))}), 0);
  EXPECT_FALSE(find_noncentral_highorder(c6).has_value());
  const FiniteGroup d12 = G("D12");
  const auto x = find_noncentral_highorder(d12);
  ASSERT_TRUE(x.has_value());
  EXPECT_GT(element_order(d12, *x), 2);
  EXPECT_FALSE(center(d12).contains(*x));
}

TEST(Group, StructuralPredicates) {
  EXPECT_TRUE(is_generalized_dicyclic(G("Q8")));
  EXPECT_TRUE(is_generalized_dicyclic(G("Dic12")));
  EXPECT_TRUE(is_generalized_dicyclic(G("GDic(4,2)")));
  EXPECT_FALSE(is_generalized_dicyclic(G("D8")));
  EXPECT_FALSE(is_generalized_dicyclic(G("C8")));
  EXPECT_FALSE(is_generalized_dicyclic(G("E2^3")));
  EXPECT_TRUE(is_cyclic(G("C2*C3")));
  EXPECT_FALSE(is_cyclic(G("E2^2")));
  EXPECT_TRUE(is_elementary_abelian(G("E3^2"), 3));
  EXPECT_FALSE(is_elementary_abelian(G("C9"), 3));
}

TEST(Group, Isomorphism) {
  EXPECT_TRUE(groups_isomorphic(G("C6"), G("C2*C3")));
  EXPECT_TRUE(groups_isomorphic(G("D6"), make_group(GroupDesc::product(parse_group("C1"), parse_group("D6")))));
  EXPECT_TRUE(groups_isomorphic(G("E2^2"), G("C2*C2")));
  EXPECT_FALSE(groups_isomorphic(G("C4"), G("E2^2")));
  EXPECT_FALSE(groups_isomorphic(G("D8"), G("Q8")));
  EXPECT_FALSE(groups_isomorphic(G("X16a"), G("X16b")));
  EXPECT_FALSE(groups_isomorphic(G("Dic12"), G("D12")));
  EXPECT_TRUE(groups_isomorphic(G("Dic16"), G("GDic(8)")));
}

TEST(Group, ParseRoundTrip) {
  for (const char* spec : kSpecs) EXPECT_EQ(parse_group(parse_group(spec).to_string()), parse_group(spec)) << spec;
  EXPECT_EQ(parse_group("Q8xC3"), parse_group("Q8*C3"));
  EXPECT_EQ(parse_group("E2^3"), GroupDesc::abelian({2, 2, 2}));
}

TEST(Group, ParseErrors) {
  for (const char* bad : {"", "C0", "D5", "A(2,4)", "A(4,3)", "GDic(2,2)", "GDic(3)", "X17", "Q9", "C6*"})
    EXPECT_THROW(make_group(parse_group(bad)), GroupError) << bad;
}

TEST(Group, WordParser) {
  const FiniteGroup g = G("A(4,2)");
  const Element a1 = g.generator("a_1"), a2 = g.generator("a_2");
  EXPECT_EQ(parse_element(g, "1"), 0);
  EXPECT_EQ(parse_element(g, "a_1^-1"), g.inv(a1));
  EXPECT_EQ(parse_element(g, "(a_1*a_2)^-1"), g.inv(g.mul(a1, a2)));
  EXPECT_EQ(parse_element(g, "a_1^6"), g.pow(a1, 2));
  EXPECT_EQ(parse_element_set(g, "a_1, (a_1*a_2)^-1, 1"), ElementSet({0, a1, g.inv(g.mul(a1, a2))}));
  EXPECT_THROW(parse_element(g, "b"), GroupError);
  EXPECT_THROW(parse_element(g, "a_1^"), GroupError);
  const FiniteGroup alt = G("Alt4");
  EXPECT_TRUE(alt.find_label("(1,2)(3,4)").has_value());
  EXPECT_EQ(parse_element(alt, "(1,2)(3,4)"), *alt.find_label("(1,2)(3,4)"));
}
