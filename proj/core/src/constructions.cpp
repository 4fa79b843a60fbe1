#include "mcayley/constructions.hpp"

#include <numeric>

#include "mcayley/verifier.hpp"

namespace mcayley {

namespace {

void require_cayley_subset(const FiniteGroup& group, const ElementSet& set, const char* name) {
  if (!is_cayley_subset(group, set))
    throw ConstructionError(std::string(name) + " must be inverse-closed and exclude the identity");
}

void require_valid(const FiniteGroup& group, const ElementSet& set) {
  for (Element g : set)
    if (g < 0 || g >= group.order()) throw ConstructionError("element index out of range");
}

}  // namespace

void check_connection_data(const FiniteGroup& group, const ConnectionData& cd) {
  for (const ElementSet* s : {&cd.R, &cd.L, &cd.S, &cd.T}) require_valid(group, *s);
  require_cayley_subset(group, cd.R, "R");
  require_cayley_subset(group, cd.L, "L");
  require_cayley_subset(group, cd.T, "T");
  if (cd.x < 0 || cd.x >= group.order()) throw ConstructionError("x out of range");
  if (cd.R.size() != cd.L.size())
    throw ConstructionError("|R| = " + std::to_string(cd.R.size()) + " differs from |L| = " +
                            std::to_string(cd.L.size()));
  if (cd.T.size() + 1 != cd.R.size() + cd.S.size())
    throw ConstructionError("|T| - |S| + 1 = " +
                            std::to_string(static_cast<long>(cd.T.size()) -
                                           static_cast<long>(cd.S.size()) + 1) +
                            " differs from |R| = " + std::to_string(cd.R.size()));
  if (cd.S.contains(cd.x)) throw ConstructionError("x lies in S");
}

MCayleySpec MCayleySpec::empty(int m) {
  if (m < 1) throw ConstructionError("m must be positive");
  MCayleySpec spec;
  spec.m = m;
  spec.T.assign(m, std::vector<ElementSet>(m));
  return spec;
}

bool MCayleySpec::is_undirected(const FiniteGroup& group) const {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (T[j][i] != group.inverse_of(T[i][j])) return false;
  return true;
}

Digraph cayley(const FiniteGroup& group, const ElementSet& R) {
  require_valid(group, R);
  if (R.contains(0)) throw ConstructionError("the identity would create loops");
  Digraph g(group.order());
  for (Element v = 0; v < group.order(); ++v)
    for (Element r : R) g.add_arc(v, group.mul(r, v));
  return g;
}

Digraph coset_digraph(const FiniteGroup& group, const ElementSet& H, const ElementSet& A) {
  require_valid(group, H);
  require_valid(group, A);
  if (!is_subgroup(group, H)) throw ConstructionError("H is not a subgroup");
  const int n = group.order();
  // Right cosets H g, numbered by least member.
  std::vector<int> coset(n, -1);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (coset[g] >= 0) continue;
    for (Element h : H) coset[group.mul(h, g)] = static_cast<int>(reps.size());
    reps.push_back(g);
  }
  std::vector<char> hah(n, 0);
  for (Element h1 : H)
    for (Element a : A)
      for (Element h2 : H) hah[group.mul(group.mul(h1, a), h2)] = 1;
  const int k = static_cast<int>(reps.size());
  Digraph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && hah[group.mul(reps[j], group.inv(reps[i]))]) g.add_arc(i, j);
  return g;
}

Digraph m_cayley(const FiniteGroup& group, const MCayleySpec& spec) {
  const int m = spec.m;
  if (m < 1) throw ConstructionError("m must be positive");
  if (static_cast<int>(spec.T.size()) != m) throw ConstructionError("connection matrix must be m x m");
  for (const auto& row : spec.T) {
    if (static_cast<int>(row.size()) != m) throw ConstructionError("connection matrix must be m x m");
    for (const ElementSet& s : row) require_valid(group, s);
  }
  for (int i = 0; i < m; ++i)
    if (spec.T[i][i].contains(0)) throw ConstructionError("identity in a diagonal connection set");
  const int n = group.order();
  Digraph g(n * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (Element t : spec.T[i][j])
        for (Element v = 0; v < n; ++v) g.add_arc(i * n + v, j * n + group.mul(t, v));
  return g;
}

Digraph bicay(const FiniteGroup& group, const ElementSet& R, const ElementSet& L,
              const ElementSet& S) {
  require_valid(group, R);
  require_valid(group, L);
  require_valid(group, S);
  require_cayley_subset(group, R, "R");
  require_cayley_subset(group, L, "L");
  MCayleySpec spec = MCayleySpec::empty(2);
  spec.T[0][0] = R;
  spec.T[1][1] = L;
  spec.T[0][1] = S;
  spec.T[1][0] = group.inverse_of(S);
  return m_cayley(group, spec);
}

Digraph theta_grr(const FiniteGroup& group, const ElementSet& R, Element x, int m, int case_id) {
  require_valid(group, R);
  require_cayley_subset(group, R, "R");
  if (x < 0 || x >= group.order()) throw ConstructionError("x out of range");
  {
    const Digraph cay = cayley(group, R);
    const VertexSet isolated = isolated_in_induced(cay, R.items());
    if (isolated.size() > 1)
      throw ConstructionError("Cay(G,R)[R] has more than one isolated vertex");
    ElementSet rest = R;
    for (int v : isolated) rest.erase(v);
    if (static_cast<int>(closure(group, rest).size()) != group.order())
      throw ConstructionError("R without its isolated vertex does not generate G");
  }
  const ElementSet z = center(group);
  const int ox = element_order(group, x);
  switch (case_id) {
    case 1:
      if (m < 3) throw ConstructionError("case 1 needs m >= 3");
      if (z.contains(x)) throw ConstructionError("case 1 needs x outside the center");
      if (ox <= 2) throw ConstructionError("case 1 needs o(x) > 2");
      break;
    case 2:
      if (m != 2) throw ConstructionError("case 2 needs m = 2");
      if (z.contains(group.mul(x, x))) throw ConstructionError("case 2 needs x^2 outside the center");
      break;
    case 3:
      if (m != 2) throw ConstructionError("case 3 needs m = 2");
      if (!squares_central(group)) throw ConstructionError("case 3 needs all squares central");
      if (z.contains(x) || R.contains(x))
        throw ConstructionError("case 3 needs x outside the center and outside R");
      if (ox <= 2) throw ConstructionError("case 3 needs o(x) > 2");
      break;
    default:
      throw ConstructionError("case must be 1, 2 or 3");
  }
  const int n = group.order();
  Digraph g(n * m);
  auto edge = [&](Element a, int i, Element b, int j) { g.add_edge(i * n + a, j * n + b); };
  for (Element v = 0; v < n; ++v) {
    if (case_id == 2) {
      for (Element r : R) {
        edge(v, 0, group.mul(r, v), 0);
        edge(v, 1, group.mul(r, v), 1);
      }
      edge(v, 0, group.mul(x, v), 1);
      continue;
    }
    for (int i = 0; i < m; ++i)
      for (Element r : R) edge(v, i, group.mul(r, v), i);
    for (int i = 0; i + 1 < m; ++i) edge(v, i, v, i + 1);
    edge(v, 0, group.mul(x, v), m - 1);
  }
  return g;
}

Digraph theta_general(const FiniteGroup& group, const ConnectionData& cd, int m) {
  check_connection_data(group, cd);
  if (m < 3) throw ConstructionError("the general construction needs m >= 3");
  const int n = group.order();
  Digraph g(n * m);
  auto edge = [&](Element a, int i, Element b, int j) { g.add_edge(i * n + a, j * n + b); };
  for (Element v = 0; v < n; ++v) {
    for (Element r : cd.R) edge(v, 0, group.mul(r, v), 0);
    for (Element l : cd.L) edge(v, 1, group.mul(l, v), 1);
    for (Element s : cd.S) edge(v, 0, group.mul(s, v), 1);
    for (int i = 2; i < m; ++i)
      for (Element t : cd.T) edge(v, i, group.mul(t, v), i);
    for (int i = 1; i + 1 < m; ++i) edge(v, i, v, i + 1);
    edge(v, 0, group.mul(cd.x, v), m - 1);
  }
  return g;
}

Digraph delta_cyclic(int n, int m, int delta) {
  if (n < 3) throw ConstructionError("n must be at least 3");
  if (m < 5) throw ConstructionError("m must be at least 5");
  if (delta < 0 || delta >= n) throw ConstructionError("delta must lie in 0..n-1");
  if (std::gcd(1 + delta, n) != 1) throw ConstructionError("gcd(1 + delta, n) must be 1");
  const FiniteGroup group = make_group(GroupDesc::cyclic(n));
  const Element x = group.generator("a");
  const Element xd = group.pow(x, delta);
  Digraph g(n * m);
  auto edge = [&](Element a, int i, Element b, int j) { g.add_edge(i * n + a, j * n + b); };
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) {
      if (u < v) {
        edge(u, 1, v, 1);
        edge(u, 2, v, 2);
      }
      if (u != v) {
        edge(u, 0, v, 2);
        edge(u, 3, v, m - 1);
        edge(u, 1, v, 4);
        for (int l = 4; l + 1 < m; ++l) edge(u, l, v, l + 1);
      }
      edge(u, 0, v, 3);
    }
    for (int i = 4; i < m; ++i) edge(u, i, group.mul(x, u), i);
    edge(u, 2, u, 3);
    edge(u, 0, group.mul(x, u), 1);
    edge(u, 1, group.mul(xd, u), 2);
  }
  return g;
}

Digraph delta_q8(int m) {
  if (m < 3) throw ConstructionError("m must be at least 3");
  const FiniteGroup group = make_group(GroupDesc::quaternion());
  const Element i = group.generator("i");
  const Element j = group.generator("j");
  const Element i2 = group.mul(i, i);
  MCayleySpec spec = MCayleySpec::empty(m);
  spec.T[0][0] = ElementSet{i, i2, group.inv(i)};
  for (int l = 1; l <= m - 3; ++l) spec.T[l][l] = ElementSet{i2};
  spec.T[m - 1][m - 1] = ElementSet{j, group.inv(j)};
  for (int l = 0; l + 1 < m; ++l) {
    ElementSet s{0, i};
    if (l == m - 2) s.insert(j);
    spec.T[l][l + 1] = s;
    spec.T[l + 1][l] = group.inverse_of(s);
  }
  return m_cayley(group, spec);
}

Digraph sigma_z2z2(int m) {
  if (m < 3) throw ConstructionError("m must be at least 3");
  // Layer i is {4i+1, ..., 4i+4}; 4i+1 is the identity of block i and the
  // two layer involutions become right multiplication by a_1 and a_2 of
  // A(2,2), whose element index is 2 e_1 + e_2.
  constexpr int offset_to_element[4] = {0, 2, 1, 3};
  auto vertex = [&](int x) {
    const int layer = (x - 1) / 4;
    return layer * 4 + offset_to_element[(x - 1) % 4];
  };
  Digraph g(4 * m);
  auto edge = [&](int x, int y) { g.add_edge(vertex(x), vertex(y)); };
  edge(1, 2);
  edge(2, 3);
  edge(3, 4);
  edge(1, 4);
  for (int x = 1; x <= 4 * m - 4; ++x) edge(x, x + 4);
  for (int l = 1; l <= m - 1; ++l) {
    edge(4 * l + 1, 4 * l + 3);
    edge(4 * l + 2, 4 * l + 4);
  }
  edge(4 * m - 1, 4 * m);
  edge(4 * m - 2, 4 * m - 3);
  return g;
}

LiftResult elementary_abelian_lift(const Digraph& delta, const FiniteGroup& base, int m) {
  if (m < 2) throw ConstructionError("the lift needs m >= 2");
  if (!delta.is_symmetric()) throw ConstructionError("the lift needs an undirected graph");
  if (!is_elementary_abelian(base, 2) || base.order() < 2)
    throw ConstructionError("the lift needs a nontrivial elementary abelian 2-group");
  if (delta.n() != base.order() * m) throw ConstructionError("vertex count is not m|G|");
  int rank = 0;
  while ((1 << rank) < base.order()) ++rank;
  const FiniteGroup lifted = make_group(GroupDesc::abelian(std::vector<int>(rank + 1, 2)));
  const Digraph k2 = complete_graph(2);
  Digraph product = cartesian_product(delta, k2);
  if (is_m_grr(lifted, product, m).holds) return {std::move(product), false};
  Digraph fallback = cartesian_product(complement(delta), k2);
  if (is_m_grr(lifted, fallback, m).holds) return {std::move(fallback), true};
  throw std::logic_error("neither the product nor the complement product is an m-GRR");
}

Digraph section5_fixture(std::string_view kind) {
  static constexpr int z2_3drr[12][2] = {{1, 3}, {1, 6}, {2, 4}, {2, 5}, {3, 4}, {3, 6},
                                         {4, 3}, {4, 5}, {5, 1}, {5, 2}, {6, 1}, {6, 2}};
  static constexpr int z1_6drr[12][2] = {{1, 6}, {1, 4}, {2, 4}, {2, 5}, {3, 2}, {3, 6},
                                         {4, 3}, {4, 5}, {5, 1}, {5, 3}, {6, 1}, {6, 2}};
  const int (*arcs)[2] = nullptr;
  if (kind == "z2_3drr")
    arcs = z2_3drr;
  else if (kind == "z1_6drr")
    arcs = z1_6drr;
  else
    throw ConstructionError("unknown fixture: " + std::string(kind));
  Digraph g(6);
  for (int k = 0; k < 12; ++k) g.add_arc(arcs[k][0] - 1, arcs[k][1] - 1);
  return g;
}

}  // namespace mcayley
