#pragma once

#include <string>
#include <vector>

#include "mcayley/constructions.hpp"

namespace mcayley {

/// Connection data shipped with the library for one group.
struct Preset {
  /// Row of the preset table the data came from, e.g. "cyclic".
  std::string row;
  GroupDesc desc;
  FiniteGroup group;
  ConnectionData data;
};

/// Looks up the preset for a group descriptor and checks its invariants.
///
/// Covered: cyclic of order >= 6; dicyclic with o(a) >= 6; rank-2 abelian with
/// d_1 > 2; rank-2 generalized dicyclic with d_1 >= 4; abelian of rank >= 3
/// with d_1 > 2; generalized dicyclic of rank >= 3; E2^3; D6, D8, D10, Alt4,
/// Q8*C3, Q8*C4, X16a, X16b, X18, X27. Anything else, or a row whose data
/// fails the invariants, throws ConstructionError.
Preset preset(const GroupDesc& desc);

/// bicay(R, L, S) for m = 2 and theta_general for m >= 3.
Digraph preset_graph(const Preset& p, int m);

/// Descriptors of every group with a preset row that the test battery uses.
std::vector<GroupDesc> preset_catalog();

}  // namespace mcayley
