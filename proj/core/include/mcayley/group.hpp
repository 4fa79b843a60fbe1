#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcayley {

/// Index of an element inside one FiniteGroup. The identity is always 0.
using Element = int;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free list of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> items);
  explicit ElementSet(std::vector<Element> items);

  bool contains(Element g) const;
  void insert(Element g);
  void erase(Element g);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  Element operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Element>& items() const { return items_; }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet united(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Element> items_;
};

/// A finite group stored as its full multiplication table.
///
/// Elements are the indices 0..order-1 and index 0 is the identity. The
/// constructor checks the identity row/column and the Latin-square property;
/// associativity is left to `is_associative` since it is cubic.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<Element> table,
              std::vector<std::pair<std::string, Element>> generator_names,
              std::string family_tag,
              std::vector<std::string> labels = {});

  int order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, long long k) const;
  const std::vector<Element>& table() const { return table_; }

  const std::vector<std::pair<std::string, Element>>& generator_names() const {
    return generator_names_;
  }
  std::vector<Element> generators() const;
  /// Throws GroupError when no generator carries `name`.
  Element generator(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  const std::string& family_tag() const { return family_tag_; }
  /// Human-readable name of an element: a word in the generators, or the
  /// permutation in cycle notation for permutation models.
  const std::string& label(Element g) const { return labels_[g]; }
  std::optional<Element> find_label(std::string_view label) const;

  bool is_abelian() const;
  bool is_associative() const;
  int exponent() const;

  ElementSet all_elements() const;
  ElementSet non_identity() const;
  ElementSet inverse_of(const ElementSet& set) const;
  /// {x*s : s in set}
  ElementSet left_translate(Element x, const ElementSet& set) const;

 private:
  void build_word_labels();

  int order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::pair<std::string, Element>> generator_names_;
  std::string family_tag_;
  std::vector<std::string> labels_;
};

int element_order(const FiniteGroup& group, Element g);
ElementSet center(const FiniteGroup& group);
bool squares_central(const FiniteGroup& group);
/// Subgroup generated by `gens`; the closure of the empty set is {1}.
ElementSet closure(const FiniteGroup& group, const ElementSet& gens);
bool is_subgroup(const FiniteGroup& group, const ElementSet& set);
bool is_cayley_subset(const FiniteGroup& group, const ElementSet& set);
int involution_count(const FiniteGroup& group, const ElementSet& set);
/// Least-index element outside the center with order > 2. Absent for abelian groups.
std::optional<Element> find_noncentral_highorder(const FiniteGroup& group);

/// True when some abelian subgroup A of index 2 with exponent > 2 is inverted
/// by an element x outside A whose square is an involution.
bool is_generalized_dicyclic(const FiniteGroup& group);
bool is_cyclic(const FiniteGroup& group);
bool is_elementary_abelian(const FiniteGroup& group, int p);
/// Exhaustive isomorphism test by extending generator images.
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// ---------------------------------------------------------------------------
// Group descriptors.

enum class Family {
  cyclic,
  dihedral,
  dicyclic,
  generalized_dicyclic,
  abelian,
  quaternion,
  alt4,
  exceptional,
  direct_product,
};

/// Names one group of the families the constructions need.
///
/// `params` holds the order (cyclic, dihedral, dicyclic) or the invariant
/// factors (abelian, generalized_dicyclic). For generalized dicyclic groups
/// `involution` is the exponent vector of the chosen involution y over the
/// abelian generators; empty means a_1^{d_1/2}.
struct GroupDesc {
  Family family = Family::cyclic;
  std::vector<int> params;
  std::vector<int> involution;
  std::string id;
  std::vector<GroupDesc> factors;

  static GroupDesc cyclic(int n);
  /// Dihedral group of order `order` (not degree).
  static GroupDesc dihedral(int order);
  /// Dicyclic group of order `order`; the rotation a has order order/2.
  static GroupDesc dicyclic(int order);
  static GroupDesc abelian(std::vector<int> invariant_factors);
  static GroupDesc generalized_dicyclic(std::vector<int> invariant_factors,
                                        std::vector<int> involution = {});
  static GroupDesc quaternion();
  static GroupDesc alt4();
  /// One of "16a", "16b", "18", "27".
  static GroupDesc exceptional(std::string id);
  static GroupDesc product(GroupDesc left, GroupDesc right);

  /// Canonical text in the CLI grammar, e.g. "D12" or "Q8*C3".
  std::string to_string() const;
  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;
};

FiniteGroup make_group(const GroupDesc& desc);

/// Parses the group grammar used on the command line.
///
///   C<n>            cyclic of order n
///   D<n>            dihedral of order n (D6 is Sym(3))
///   Dic<n>          dicyclic of order n
///   Q8, Alt4
///   A(d1,d2,...)    abelian with invariant factors d1 >= d2 >= ...
///   E<p>^<k>        elementary abelian p-group of rank k
///   GDic(d1,...)    generalized dicyclic over A(d1,...)
///   X16a X16b X18 X27
///   G*H or GxH      direct product, left factor major
GroupDesc parse_group(std::string_view text);

/// Parses a word such as "a^-1*b", "(a_1*a_2)^-1" or "1". An input equal to an
/// element label (e.g. "(1,2)(3,4)" in a permutation model) resolves to that
/// element. `aliases` renames generator names before lookup.
Element parse_element(const FiniteGroup& group, std::string_view text,
                      const std::vector<std::pair<std::string, std::string>>& aliases = {});
/// Comma-separated list of words; commas inside parentheses do not split.
ElementSet parse_element_set(const FiniteGroup& group, std::string_view text,
                             const std::vector<std::pair<std::string, std::string>>& aliases = {});

/// Multiplication table for the direct product, left factor major.
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);

/// Builds a group table by closing a set of permutation generators under
/// left-to-right composition (p*q applies p first).
FiniteGroup permutation_group_table(
    const std::vector<std::vector<int>>& generators,
    std::vector<std::string> names, std::string family_tag);

/// Closes square matrices over Z/p under multiplication.
FiniteGroup matrix_group_table(const std::vector<std::vector<int>>& generators,
                               int dim, int modulus,
                               std::vector<std::string> names,
                               std::string family_tag);

}  // namespace mcayley
