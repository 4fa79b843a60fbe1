#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "mcayley/aut.hpp"
#include "mcayley/constructions.hpp"

namespace mcayley {

/// Outcome of an m-GRR / m-DRR check. The property holds when the graph is
/// regular, the block-wise right multiplication by G consists of
/// automorphisms, and Aut has order exactly |G|.
struct MRepresentationCheck {
  bool holds = false;
  bool symmetric = false;
  bool regular = false;
  bool contains_embedded = false;
  bool order_matches = false;
  /// Exact order when the search ran to completion; otherwise a lower bound
  /// exceeding |G|.
  BigInt aut_order = 0;
  std::uint64_t nodes = 0;
  std::string diagnostics;

  explicit operator bool() const { return holds; }
};

/// Throws std::invalid_argument when the vertex count is not m|G|.
MRepresentationCheck is_m_grr(const FiniteGroup& group, const Digraph& g, int m);
MRepresentationCheck is_m_drr(const FiniteGroup& group, const Digraph& g, int m);

/// Both sides of the isolated-vertex criterion for Cay(G,R).
struct Admissibility {
  bool is_grr = false;
  std::size_t isolated = 0;  // |Cay(G,R)[R]_I|
  bool generates = false;    // <R minus those isolated vertices> = G
  std::size_t isolated_complement = 0;
  bool generates_complement = false;

  bool side_ok() const { return isolated <= 1 && generates; }
  bool complement_side_ok() const { return isolated_complement <= 1 && generates_complement; }
};

Admissibility grr_set_admissible(const FiniteGroup& group, const ElementSet& R);

/// Every Cayley subset of G, ordered by size and then by sorted members.
/// `visit` returns false to stop.
void for_each_cayley_subset(const FiniteGroup& group,
                            const std::function<bool(const ElementSet&)>& visit,
                            std::optional<std::size_t> only_size = std::nullopt);

struct GrrSet {
  ElementSet R;
  Admissibility record;
};

/// First Cayley subset R (in the order above) with Cay(G,R) a GRR whose R side
/// satisfies the isolated-vertex criterion. For |G| <= 2 that criterion is not
/// required. Requires |G| <= 32.
std::optional<GrrSet> grr_search(const FiniteGroup& group);

struct PrelReport {
  bool bicay_is_2grr = false;
  /// [Θ³(1_2)] differs from both [Θ³(1_0)] and [Θ³(1_1)].
  bool neighborhoods_distinct = false;
  /// [Θ³(1_0)] differs from [Θ³(1_1)]; informational.
  bool first_two_distinct = false;
  std::array<std::string, 3> certificates;

  bool holds() const { return bicay_is_2grr && neighborhoods_distinct; }
};

/// Throws ConstructionError when the connection data is invalid.
PrelReport check_lemma_prel(const FiniteGroup& group, const ConnectionData& cd);

/// Least Cayley subset L with |L| = |R| whose involution count differs from R's.
std::optional<ElementSet> find_involution_variant_L(const FiniteGroup& group, const ElementSet& R);

struct ThetaChoice {
  int case_id = 1;
  Element x = 0;
};

/// Recommends a case of theta_grr for this m, or nothing when none applies.
/// Throws ConstructionError when R fails the isolated-vertex criterion.
std::optional<ThetaChoice> theta_case_select(const FiniteGroup& group, const ElementSet& R, int m);

struct Extension {
  Digraph graph;
  /// "theta case 1", "theta case 2", "theta case 3" or "bicay S={1}".
  std::string method;
};

/// An m-block graph built from a GRR Cay(G,R): theta_grr with the case from
/// theta_case_select, or for m = 2 without a usable case, bicay(R, L, {1})
/// with L from find_involution_variant_L. Nothing when neither applies.
/// The result is not verified here.
std::optional<Extension> extend_grr(const FiniteGroup& group, const ElementSet& R, int m);

struct OracleAnswer {
  bool grr = true;
  bool drr = true;
  std::string grr_reason;
  std::string drr_reason;
};

/// Existence record for one (m, G) pair.
struct Verdict {
  int m = 1;
  std::string group;
  bool directed = false;
  bool exists = false;
  /// A budget ran out; `exists` is then meaningless.
  bool inconclusive = false;
  /// graph6 or digraph6 of the witness when `exists`.
  std::optional<std::string> witness;
  /// "construction", "exhaustive_search" or "oracle".
  std::string method;
  /// Candidates whose automorphism group was examined.
  std::uint64_t candidates = 0;
  /// Size of the unfiltered candidate space, as a decimal string.
  std::string space;
  double seconds = 0;
  std::string note;
};

/// Expected existence of an m-GRR and an m-DRR from the classification.
OracleAnswer classification_oracle(int m, const FiniteGroup& group);

}  // namespace mcayley
