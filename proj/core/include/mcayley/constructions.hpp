#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcayley/digraph.hpp"
#include "mcayley/group.hpp"

namespace mcayley {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex g_i of an m-Cayley digraph over `group`.
inline int block_vertex(const FiniteGroup& group, Element g, int block) {
  return block * group.order() + g;
}

/// Connection sets of the generalized Θ construction.
struct ConnectionData {
  ElementSet R, L, S, T;
  Element x = 0;
};

/// Checks the Θ invariants: R, L, T Cayley subsets, |R| = |L| = |T| - |S| + 1,
/// x outside S. Throws ConstructionError naming the first violation.
void check_connection_data(const FiniteGroup& group, const ConnectionData& cd);

struct MCayleySpec {
  int m = 1;
  /// T[i][j] is the connection set from block i to block j.
  std::vector<std::vector<ElementSet>> T;

  static MCayleySpec empty(int m);
  /// True when T[j][i] is the elementwise inverse of T[i][j] for all i, j.
  bool is_undirected(const FiniteGroup& group) const;
};

/// Arcs (g, r g).
Digraph cayley(const FiniteGroup& group, const ElementSet& R);

/// Coset digraph on the right cosets of H: Hx -> Hy when y x^-1 lies in HAH.
Digraph coset_digraph(const FiniteGroup& group, const ElementSet& H, const ElementSet& A);

/// Arcs (g_i, (t g)_j) for t in T[i][j].
Digraph m_cayley(const FiniteGroup& group, const MCayleySpec& spec);

Digraph bicay(const FiniteGroup& group, const ElementSet& R, const ElementSet& L,
              const ElementSet& S);

/// The m-block extension of a GRR Cay(G,R) used for non-abelian groups.
///
/// case 1: m >= 3, x outside Z(G), o(x) > 2.
/// case 2: m = 2, x^2 outside Z(G).
/// case 3: m = 2, squares central, x outside Z(G) and R, o(x) > 2.
/// The GRR property of Cay(G,R) is not rechecked here; the side conditions on
/// isolated vertices and generation are.
Digraph theta_grr(const FiniteGroup& group, const ElementSet& R, Element x, int m, int case_id);

/// Block 0 carries R, block 1 carries L, blocks 2..m-1 carry T; S joins
/// blocks 0 and 1, identity matchings join consecutive blocks from 1 on, and
/// x joins block 0 to block m-1. Requires m >= 3.
Digraph theta_general(const FiniteGroup& group, const ConnectionData& cd, int m);

/// 2n-valent graph on nm vertices over Z_n; delta must satisfy gcd(1+delta, n) = 1.
Digraph delta_cyclic(int n, int m, int delta = 0);
/// Quintic graph on 8m vertices over Q8.
Digraph delta_q8(int m);
/// Cubic graph on 4m vertices with a semiregular Z2^2.
Digraph sigma_z2z2(int m);

struct LiftResult {
  Digraph graph;
  bool used_complement = false;
};

/// Δ x K2 for an m-GRR Δ over Z2^k (k >= 1, `base` elementary abelian),
/// falling back to the complement of Δ when the product is not an m-GRR of
/// Z2^(k+1). The returned graph is over direct_product(base, C2).
LiftResult elementary_abelian_lift(const Digraph& delta, const FiniteGroup& base, int m);

/// "z2_3drr" or "z1_6drr".
Digraph section5_fixture(std::string_view kind);

}  // namespace mcayley
