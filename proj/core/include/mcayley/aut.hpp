#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcayley/digraph.hpp"
#include "mcayley/group.hpp"
#include "mcayley/permutation.hpp"

namespace mcayley {

/// Colour index per vertex; the colours used must be 0..k-1.
using Coloring = std::vector<int>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 10^7 unless MCAYLEY_NODE_BUDGET is set.
std::uint64_t default_node_budget();

struct AutOptions {
  /// Automorphisms known in advance; each is checked before use.
  std::vector<Perm> known_generators;
  /// Stop as soon as the group found so far is larger than this.
  std::optional<BigInt> stop_above;
  std::uint64_t node_budget = default_node_budget();
};

struct AutResult {
  PermGroup group{0};
  /// True when the search stopped early because of `stop_above`; the group is
  /// then a subgroup and no canonical form is available.
  bool aborted = false;
  /// labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
  std::string certificate;
  std::uint64_t nodes = 0;
};

/// Automorphism group and canonical form by partition refinement and
/// individualization. Throws BudgetExceeded past the node budget.
AutResult analyze(const Digraph& g, const std::optional<Coloring>& coloring = std::nullopt,
                  const AutOptions& options = {});

PermGroup automorphism_group(const Digraph& g,
                             const std::optional<Coloring>& coloring = std::nullopt);

struct CanonicalForm {
  std::vector<int> labeling;
  std::string certificate;
};

CanonicalForm canonical_form(const Digraph& g,
                             const std::optional<Coloring>& coloring = std::nullopt);

bool are_isomorphic(const Digraph& a, const Digraph& b,
                    const std::optional<Coloring>& ca = std::nullopt,
                    const std::optional<Coloring>& cb = std::nullopt);

bool is_automorphism(const Digraph& g, const Perm& p);

/// Right multiplication g_i -> (g h)_i for each generator h of G, on m blocks.
std::vector<Perm> embedded_generators(const FiniteGroup& group, int m);
PermGroup embedded_action(const FiniteGroup& group, int m);

}  // namespace mcayley
