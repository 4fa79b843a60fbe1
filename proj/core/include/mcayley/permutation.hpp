#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcayley {

/// Image array: point i goes to perm[i].
using Perm = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

Perm identity_perm(int n);
/// p then q: (p*q)[i] = q[p[i]].
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);
/// 0-based cycle notation without fixed points; the identity is "()".
std::string cycle_notation(const Perm& p);

/// Permutation group kept as a base and strong generating set.
///
/// The chain is grown incrementally by a deterministic Schreier-Sims: every
/// Schreier generator of every level is sifted through the deeper levels and
/// any nontrivial residue becomes a new strong generator.
class PermGroup {
 public:
  explicit PermGroup(int degree, const std::vector<Perm>& generators = {},
                     std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  /// Non-redundant generators in the order they were added.
  const std::vector<Perm>& generators() const { return generators_; }
  /// Adds g; returns false when g was already a member.
  bool extend(const Perm& g);
  bool contains(const Perm& g) const;
  BigInt order() const;
  const std::vector<int>& base() const { return base_; }

  /// Orbit partition, each orbit sorted, orbits ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  /// Every point stabilizer is trivial.
  bool is_semiregular() const;
  PermGroup point_stabilizer(int v) const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into transversal, or -1
    std::vector<Perm> transversal;
    std::vector<std::vector<char>> checked;  // [orbit index][strong index]
  };

  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void add_level(int point);
  void complete();

  int degree_;
  std::vector<Perm> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::vector<Perm> strong_;
  std::vector<std::size_t> strong_depth_;  // deepest level the generator belongs to
};

}  // namespace mcayley
