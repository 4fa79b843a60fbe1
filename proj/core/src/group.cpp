#include "mcayley/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace mcayley {

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::initializer_list<Element> items)
    : ElementSet(std::vector<Element>(items)) {}

ElementSet::ElementSet(std::vector<Element> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ElementSet::contains(Element g) const {
  return std::binary_search(items_.begin(), items_.end(), g);
}

void ElementSet::insert(Element g) {
  auto it = std::lower_bound(items_.begin(), items_.end(), g);
  if (it == items_.end() || *it != g) items_.insert(it, g);
}

void ElementSet::erase(Element g) {
  auto it = std::lower_bound(items_.begin(), items_.end(), g);
  if (it != items_.end() && *it == g) items_.erase(it);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(),
                       items_.end());
}

ElementSet ElementSet::united(const ElementSet& other) const {
  std::vector<Element> out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(int order, std::vector<Element> table,
                         std::vector<std::pair<std::string, Element>> generator_names,
                         std::string family_tag, std::vector<std::string> labels)
    : order_(order),
      table_(std::move(table)),
      generator_names_(std::move(generator_names)),
      family_tag_(std::move(family_tag)),
      labels_(std::move(labels)) {
  if (order_ < 1) throw GroupError("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw GroupError("multiplication table has the wrong size");
  inverse_.assign(order_, -1);
  std::vector<char> seen(order_);
  for (int a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw GroupError("index 0 is not the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order_; ++b) {
      Element c = mul(a, b);
      if (c < 0 || c >= order_ || seen[c]) throw GroupError("table is not a Latin square");
      seen[c] = 1;
      if (c == 0) inverse_[a] = b;
    }
  }
  for (int a = 0; a < order_; ++a)
    if (mul(inverse_[a], a) != 0) throw GroupError("inverse is not two-sided");
  for (const auto& [name, g] : generator_names_)
    if (g < 0 || g >= order_) throw GroupError("generator index out of range: " + name);
  if (labels_.empty()) {
    build_word_labels();
  } else {
    if (labels_.size() != static_cast<std::size_t>(order_))
      throw GroupError("label count differs from group order");
    ElementSet gens(generators());
    if (static_cast<int>(closure(*this, gens).size()) != order_)
      throw GroupError("named generators do not generate the group");
  }
}

void FiniteGroup::build_word_labels() {
  // Breadth-first words in the named generators, rendered as a^2*b.
  std::vector<std::vector<int>> word(order_);
  std::vector<char> done(order_, 0);
  std::deque<Element> queue{0};
  done[0] = 1;
  while (!queue.empty()) {
    Element g = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generator_names_.size(); ++k) {
      Element h = mul(g, generator_names_[k].second);
      if (done[h]) continue;
      done[h] = 1;
      word[h] = word[g];
      word[h].push_back(static_cast<int>(k));
      queue.push_back(h);
    }
  }
  for (int g = 0; g < order_; ++g)
    if (!done[g]) throw GroupError("named generators do not generate the group");
  labels_.assign(order_, "");
  for (int g = 0; g < order_; ++g) {
    if (word[g].empty()) {
      labels_[g] = "1";
      continue;
    }
    std::string out;
    for (std::size_t i = 0; i < word[g].size();) {
      std::size_t j = i;
      while (j < word[g].size() && word[g][j] == word[g][i]) ++j;
      if (!out.empty()) out += '*';
      out += generator_names_[word[g][i]].first;
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    labels_[g] = out;
  }
}

Element FiniteGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<Element> FiniteGroup::generators() const {
  std::vector<Element> out;
  for (const auto& [name, g] : generator_names_) out.push_back(g);
  return out;
}

Element FiniteGroup::generator(std::string_view name) const {
  for (const auto& [n, g] : generator_names_)
    if (n == name) return g;
  throw GroupError("no generator named " + std::string(name));
}

bool FiniteGroup::has_generator(std::string_view name) const {
  for (const auto& entry : generator_names_)
    if (entry.first == name) return true;
  return false;
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (int g = 0; g < order_; ++g)
    if (labels_[g] == label) return g;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_associative() const {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) {
      Element ab = mul(a, b);
      for (int c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, element_order(*this, g));
  return e;
}

ElementSet FiniteGroup::all_elements() const {
  std::vector<Element> v(order_);
  std::iota(v.begin(), v.end(), 0);
  return ElementSet(std::move(v));
}

ElementSet FiniteGroup::non_identity() const {
  std::vector<Element> v(order_ - 1);
  std::iota(v.begin(), v.end(), 1);
  return ElementSet(std::move(v));
}

ElementSet FiniteGroup::inverse_of(const ElementSet& set) const {
  std::vector<Element> v;
  for (Element g : set) v.push_back(inv(g));
  return ElementSet(std::move(v));
}

ElementSet FiniteGroup::left_translate(Element x, const ElementSet& set) const {
  std::vector<Element> v;
  for (Element g : set) v.push_back(mul(x, g));
  return ElementSet(std::move(v));
}

// ---------------------------------------------------------------------------
// Element predicates

int element_order(const FiniteGroup& group, Element g) {
  int k = 1;
  for (Element x = g; x != 0; x = group.mul(x, g)) ++k;
  return k;
}

ElementSet center(const FiniteGroup& group) {
  std::vector<Element> out;
  for (int z = 0; z < group.order(); ++z) {
    bool central = true;
    for (int g = 0; g < group.order() && central; ++g)
      central = group.mul(z, g) == group.mul(g, z);
    if (central) out.push_back(z);
  }
  return ElementSet(std::move(out));
}

bool squares_central(const FiniteGroup& group) {
  ElementSet z = center(group);
  for (int g = 0; g < group.order(); ++g)
    if (!z.contains(group.mul(g, g))) return false;
  return true;
}

ElementSet closure(const FiniteGroup& group, const ElementSet& gens) {
  std::vector<char> in(group.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : gens) {
      Element h = group.mul(members[i], s);
      if (!in[h]) {
        in[h] = 1;
        members.push_back(h);
      }
    }
  return ElementSet(std::move(members));
}

bool is_subgroup(const FiniteGroup& group, const ElementSet& set) {
  if (!set.contains(0)) return false;
  for (Element a : set)
    for (Element b : set)
      if (!set.contains(group.mul(a, b))) return false;
  return true;
}

bool is_cayley_subset(const FiniteGroup& group, const ElementSet& set) {
  if (set.contains(0)) return false;
  for (Element g : set)
    if (!set.contains(group.inv(g))) return false;
  return true;
}

int involution_count(const FiniteGroup& group, const ElementSet& set) {
  int count = 0;
  for (Element g : set)
    if (g != 0 && group.mul(g, g) == 0) ++count;
  return count;
}

std::optional<Element> find_noncentral_highorder(const FiniteGroup& group) {
  ElementSet z = center(group);
  for (int g = 0; g < group.order(); ++g)
    if (!z.contains(g) && element_order(group, g) > 2) return g;
  return std::nullopt;
}

bool is_cyclic(const FiniteGroup& group) {
  for (int g = 0; g < group.order(); ++g)
    if (element_order(group, g) == group.order()) return true;
  return false;
}

bool is_elementary_abelian(const FiniteGroup& group, int p) {
  if (!group.is_abelian()) return false;
  for (int g = 1; g < group.order(); ++g)
    if (element_order(group, g) != p) return false;
  return true;
}

bool is_generalized_dicyclic(const FiniteGroup& group) {
  const int n = group.order();
  if (n % 4 != 0) return false;
  std::vector<Element> squares;
  for (int g = 0; g < n; ++g) squares.push_back(group.mul(g, g));
  ElementSet sq = closure(group, ElementSet(squares));

  // G/<squares> is elementary abelian; label each element by its coset vector.
  std::vector<int> label(n, -1);
  for (Element h : sq) label[h] = 0;
  int rank = 0;
  for (int g = 0; g < n; ++g) {
    if (label[g] >= 0) continue;
    const int bit = 1 << rank++;
    std::vector<Element> current;
    for (int h = 0; h < n; ++h)
      if (label[h] >= 0) current.push_back(h);
    for (Element h : current) label[group.mul(h, g)] = label[h] ^ bit;
  }
  for (int f = 1; f < (1 << rank); ++f) {
    std::vector<Element> a_members;
    Element outside = -1;
    for (int g = 0; g < n; ++g) {
      if (__builtin_popcount(static_cast<unsigned>(label[g] & f)) % 2 == 0)
        a_members.push_back(g);
      else if (outside < 0)
        outside = g;
    }
    bool abelian = true;
    int exp = 1;
    for (Element a : a_members) {
      exp = std::lcm(exp, element_order(group, a));
      for (Element b : a_members)
        if (group.mul(a, b) != group.mul(b, a)) abelian = false;
    }
    if (!abelian || exp <= 2) continue;
    Element y = group.mul(outside, outside);
    if (y == 0) continue;
    bool inverts = true;
    for (Element a : a_members)
      if (group.mul(group.mul(group.inv(outside), a), outside) != group.inv(a)) {
        inverts = false;
        break;
      }
    if (inverts) return true;
  }
  return false;
}

namespace {

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> profile(g.order() + 1, 0);
  for (int x = 0; x < g.order(); ++x) ++profile[element_order(g, x)];
  return profile;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (order_profile(a) != order_profile(b)) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  // Finite abelian groups are determined by their element-order counts.
  if (a.is_abelian()) return true;
  if (center(a).size() != center(b).size()) return false;

  const int n = b.order();
  // Greedy generating set of b, highest element order first.
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element x, Element y) {
    return element_order(b, x) > element_order(b, y);
  });
  std::vector<Element> gens;
  ElementSet span{0};
  for (Element x : by_order) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(b, ElementSet(gens));
    if (static_cast<int>(span.size()) == n) break;
  }
  // Spanning tree: every element of b as parent * gens[via].
  std::vector<Element> parent(n, -1), via(n, -1), bfs{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element h = b.mul(bfs[i], gens[k]);
      if (seen[h]) continue;
      seen[h] = 1;
      parent[h] = bfs[i];
      via[h] = static_cast<int>(k);
      bfs.push_back(h);
    }

  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int x = 0; x < n; ++x)
      if (element_order(a, x) == element_order(b, gens[k])) candidates[k].push_back(x);

  std::vector<Element> images(gens.size());
  std::vector<Element> phi(n);
  std::vector<char> used(n);
  auto try_map = [&]() {
    phi[0] = 0;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      Element h = bfs[i];
      phi[h] = a.mul(phi[parent[h]], images[via[h]]);
    }
    std::fill(used.begin(), used.end(), 0);
    for (int x = 0; x < n; ++x) {
      if (used[phi[x]]) return false;
      used[phi[x]] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (phi[b.mul(x, gens[k])] != a.mul(phi[x], images[k])) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) return try_map();
    for (Element x : candidates[k]) {
      images[k] = x;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

// ---------------------------------------------------------------------------
// Table builders

namespace {

using Model = std::vector<int>;

FiniteGroup close_models(const std::vector<Model>& gens, const Model& identity,
                         const std::function<Model(const Model&, const Model&)>& product,
                         std::vector<std::string> names, std::string tag,
                         const std::function<std::string(const Model&)>& labeler) {
  std::map<Model, int> index{{identity, 0}};
  std::vector<Model> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const Model& g : gens) {
      Model h = product(elements[i], g);
      if (index.emplace(h, static_cast<int>(elements.size())).second) elements.push_back(h);
      if (elements.size() > 4096) throw GroupError("generated group is too large");
    }
  const int n = static_cast<int>(elements.size());
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = index.at(product(elements[a], elements[b]));
  std::vector<std::pair<std::string, Element>> named;
  for (std::size_t k = 0; k < gens.size() && k < names.size(); ++k)
    named.emplace_back(names[k], index.at(gens[k]));
  std::vector<std::string> labels;
  if (labeler)
    for (const Model& m : elements) labels.push_back(labeler(m));
  return FiniteGroup(n, std::move(table), std::move(named), std::move(tag), std::move(labels));
}

std::string cycle_notation_1based(const Model& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += '(';
    std::size_t p = s;
    bool first = true;
    while (!seen[p]) {
      seen[p] = 1;
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
      p = perm[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup permutation_group_table(const std::vector<std::vector<int>>& generators,
                                    std::vector<std::string> names,
                                    std::string family_tag) {
  if (generators.empty()) throw GroupError("no permutation generators");
  const std::size_t degree = generators.front().size();
  Model identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  auto compose = [](const Model& p, const Model& q) {
    Model r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  return close_models(generators, identity, compose, std::move(names), std::move(family_tag),
                      cycle_notation_1based);
}

FiniteGroup matrix_group_table(const std::vector<std::vector<int>>& generators, int dim,
                               int modulus, std::vector<std::string> names,
                               std::string family_tag) {
  Model identity(static_cast<std::size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) identity[i * dim + i] = 1;
  auto multiply = [dim, modulus](const Model& x, const Model& y) {
    Model r(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k)
        for (int j = 0; j < dim; ++j) r[i * dim + j] += x[i * dim + k] * y[k * dim + j];
    for (int& v : r) v = ((v % modulus) + modulus) % modulus;
    return r;
  };
  std::vector<Model> gens;
  for (Model g : generators) {
    for (int& v : g) v = ((v % modulus) + modulus) % modulus;
    gens.push_back(std::move(g));
  }
  return close_models(gens, identity, multiply, std::move(names), std::move(family_tag), {});
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const int nl = left.order(), nr = right.order(), n = nl * nr;
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = left.mul(a / nr, b / nr) * nr + right.mul(a % nr, b % nr);
  std::vector<std::pair<std::string, Element>> names;
  for (const auto& [name, g] : left.generator_names()) names.emplace_back(name, g * nr);
  for (const auto& [name, g] : right.generator_names()) {
    std::string unique = name;
    auto taken = [&](const std::string& s) {
      return std::any_of(names.begin(), names.end(), [&](const auto& e) { return e.first == s; });
    };
    while (taken(unique)) unique += '\'';
    names.emplace_back(unique, g);
  }
  return FiniteGroup(n, std::move(table), std::move(names), "direct_product");
}

// ---------------------------------------------------------------------------
// Families

namespace {

std::vector<int> mixed_radix(int index, const std::vector<int>& radix) {
  std::vector<int> digits(radix.size());
  for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
    digits[i] = index % radix[i];
    index /= radix[i];
  }
  return digits;
}

int from_mixed_radix(const std::vector<int>& digits, const std::vector<int>& radix) {
  int index = 0;
  for (std::size_t i = 0; i < radix.size(); ++i)
    index = index * radix[i] + ((digits[i] % radix[i]) + radix[i]) % radix[i];
  return index;
}

void check_invariant_factors(const std::vector<int>& d) {
  if (d.empty()) throw GroupError("abelian group needs at least one invariant factor");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 2) throw GroupError("invariant factors must be at least 2");
    if (i > 0 && d[i - 1] % d[i] != 0)
      throw GroupError("invariant factors must satisfy d_{i+1} | d_i");
  }
}

int product_of(const std::vector<int>& d) {
  int n = 1;
  for (int x : d) n *= x;
  return n;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  std::vector<std::pair<std::string, Element>> names;
  if (n > 1) names.emplace_back("a", 1);
  return FiniteGroup(n, std::move(table), std::move(names), "cyclic");
}

FiniteGroup dihedral_group(int order) {
  if (order < 2 || order % 2 != 0) throw GroupError("dihedral order must be even and positive");
  const int k = order / 2;
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int i = x % k, e = x / k, j = y % k, f = y / k;
      int r = ((i + (e ? -j : j)) % k + k) % k;
      table[x * order + y] = (e ^ f) * k + r;
    }
  std::vector<std::pair<std::string, Element>> names;
  if (k > 1) names.emplace_back("a", 1);
  names.emplace_back("b", k);
  return FiniteGroup(order, std::move(table), std::move(names), "dihedral");
}

FiniteGroup abelian_group(const std::vector<int>& d) {
  check_invariant_factors(d);
  const int n = product_of(d);
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto da = mixed_radix(a, d);
    for (int b = 0; b < n; ++b) {
      auto db = mixed_radix(b, d);
      for (std::size_t i = 0; i < d.size(); ++i) db[i] += da[i];
      table[a * n + b] = from_mixed_radix(db, d);
    }
  }
  std::vector<std::pair<std::string, Element>> names;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<int> unit(d.size(), 0);
    unit[i] = 1;
    names.emplace_back("a_" + std::to_string(i + 1), from_mixed_radix(unit, d));
  }
  return FiniteGroup(n, std::move(table), std::move(names), "abelian");
}

// Dic(A, y, x): elements a (index idx(a)) and a*x (index |A| + idx(a)),
// with x^2 = y and x a x^-1 = a^-1.
FiniteGroup gen_dicyclic_group(const std::vector<int>& d, std::vector<int> y,
                               std::vector<std::pair<std::string, Element>> names_override,
                               std::string tag) {
  check_invariant_factors(d);
  const int na = product_of(d);
  if (na % 2 != 0) throw GroupError("generalized dicyclic group needs an abelian group of even order");
  if (d.front() <= 2) throw GroupError("generalized dicyclic group needs exponent greater than 2");
  if (y.empty()) {
    y.assign(d.size(), 0);
    y[0] = d[0] / 2;
  }
  if (y.size() != d.size()) throw GroupError("involution vector has the wrong rank");
  for (std::size_t i = 0; i < d.size(); ++i) y[i] = ((y[i] % d[i]) + d[i]) % d[i];
  bool nonzero = false, order_two = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (y[i] != 0) nonzero = true;
    if ((2 * y[i]) % d[i] != 0) order_two = false;
  }
  if (!nonzero || !order_two) throw GroupError("y must be an involution of the abelian group");

  const int n = 2 * na;
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      auto a = mixed_radix(p % na, d);
      auto b = mixed_radix(q % na, d);
      int e = p / na, f = q / na;
      std::vector<int> r(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (e == 0)
          r[i] = a[i] + b[i];
        else
          r[i] = a[i] - b[i] + (f == 1 ? y[i] : 0);
      }
      table[p * n + q] = ((e + f) % 2) * na + from_mixed_radix(r, d);
    }
  std::vector<std::pair<std::string, Element>> names = std::move(names_override);
  if (names.empty()) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::vector<int> unit(d.size(), 0);
      unit[i] = 1;
      names.emplace_back("a_" + std::to_string(i + 1), from_mixed_radix(unit, d));
    }
    names.emplace_back("b", na);
  }
  return FiniteGroup(n, std::move(table), std::move(names), std::move(tag));
}

FiniteGroup dicyclic_group(int order, const char* rotation, const char* reflection,
                           std::string tag) {
  if (order < 8 || order % 4 != 0)
    throw GroupError("dicyclic order must be a multiple of 4 and at least 8");
  const int k = order / 2;
  return gen_dicyclic_group({k}, {k / 2}, {{rotation, 1}, {reflection, k}}, std::move(tag));
}

FiniteGroup alt4_group() {
  // (1,2,3) and (1,2)(3,4) on points 0..3.
  return permutation_group_table({{1, 2, 0, 3}, {1, 0, 3, 2}}, {"a", "b"}, "alt4");
}

FiniteGroup exceptional_group(const std::string& id) {
  if (id == "16a") {
    // Pauli matrices over GF(5), with i = 2: a^2=b^2=c^2=1 and abc=bca=cab.
    return matrix_group_table({{0, 1, 1, 0}, {0, 3, 2, 0}, {1, 0, 0, 4}}, 2, 5, {"a", "b", "c"},
                              "exceptional:16a");
  }
  if (id == "16b") {
    // Affine maps of Z8: a = x+1, b = 5x.
    std::vector<int> a(8), b(8);
    for (int x = 0; x < 8; ++x) {
      a[x] = (x + 1) % 8;
      b[x] = (5 * x) % 8;
    }
    return permutation_group_table({a, b}, {"a", "b"}, "exceptional:16b");
  }
  if (id == "18") {
    // Translations of Z3^2 and the point reflection.
    std::vector<int> a(9), b(9), c(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        a[3 * x + y] = 3 * ((x + 1) % 3) + y;
        b[3 * x + y] = 3 * x + (y + 1) % 3;
        c[3 * x + y] = 3 * ((3 - x) % 3) + (3 - y) % 3;
      }
    return permutation_group_table({a, b, c}, {"a", "b", "c"}, "exceptional:18");
  }
  if (id == "27") {
    // Unitriangular 3x3 matrices over GF(3); c := a^-1 b^-1 a b.
    FiniteGroup h = matrix_group_table({{1, 1, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 0, 1}},
                                       3, 3, {"a", "b"}, "exceptional:27");
    Element a = h.generator("a"), b = h.generator("b");
    Element c = h.mul(h.mul(h.inv(a), h.inv(b)), h.mul(a, b));
    std::vector<Element> table = h.table();
    return FiniteGroup(h.order(), std::move(table), {{"a", a}, {"b", b}, {"c", c}},
                       "exceptional:27");
  }
  throw GroupError("unknown exceptional group id: " + id);
}

}  // namespace

GroupDesc GroupDesc::cyclic(int n) { return {Family::cyclic, {n}, {}, {}, {}}; }
GroupDesc GroupDesc::dihedral(int order) { return {Family::dihedral, {order}, {}, {}, {}}; }
GroupDesc GroupDesc::dicyclic(int order) { return {Family::dicyclic, {order}, {}, {}, {}}; }
GroupDesc GroupDesc::abelian(std::vector<int> d) {
  return {Family::abelian, std::move(d), {}, {}, {}};
}
GroupDesc GroupDesc::generalized_dicyclic(std::vector<int> d, std::vector<int> y) {
  return {Family::generalized_dicyclic, std::move(d), std::move(y), {}, {}};
}
GroupDesc GroupDesc::quaternion() { return {Family::quaternion, {}, {}, {}, {}}; }
GroupDesc GroupDesc::alt4() { return {Family::alt4, {}, {}, {}, {}}; }
GroupDesc GroupDesc::exceptional(std::string id) {
  return {Family::exceptional, {}, {}, std::move(id), {}};
}
GroupDesc GroupDesc::product(GroupDesc left, GroupDesc right) {
  return {Family::direct_product, {}, {}, {}, {std::move(left), std::move(right)}};
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string GroupDesc::to_string() const {
  switch (family) {
    case Family::cyclic: return "C" + std::to_string(params.at(0));
    case Family::dihedral: return "D" + std::to_string(params.at(0));
    case Family::dicyclic: return "Dic" + std::to_string(params.at(0));
    case Family::abelian: return "A(" + join_ints(params) + ")";
    case Family::generalized_dicyclic: {
      std::string s = "GDic(" + join_ints(params) + ")";
      if (!involution.empty()) s += "[" + join_ints(involution) + "]";
      return s;
    }
    case Family::quaternion: return "Q8";
    case Family::alt4: return "Alt4";
    case Family::exceptional: return "X" + id;
    case Family::direct_product: {
      auto wrap = [](const GroupDesc& g) { return g.to_string(); };
      return wrap(factors.at(0)) + "*" + wrap(factors.at(1));
    }
  }
  return {};
}

FiniteGroup make_group(const GroupDesc& desc) {
  switch (desc.family) {
    case Family::cyclic: return cyclic_group(desc.params.at(0));
    case Family::dihedral: return dihedral_group(desc.params.at(0));
    case Family::dicyclic: return dicyclic_group(desc.params.at(0), "a", "b", "dicyclic");
    case Family::abelian: return abelian_group(desc.params);
    case Family::generalized_dicyclic:
      return gen_dicyclic_group(desc.params, desc.involution, {}, "generalized_dicyclic");
    case Family::quaternion: return dicyclic_group(8, "i", "j", "quaternion");
    case Family::alt4: return alt4_group();
    case Family::exceptional: return exceptional_group(desc.id);
    case Family::direct_product:
      if (desc.factors.size() != 2) throw GroupError("direct product needs two factors");
      return direct_product(make_group(desc.factors[0]), make_group(desc.factors[1]));
  }
  throw GroupError("unknown group family");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

int parse_positive(std::string_view s, std::string_view context) {
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw GroupError("expected a number in group spec: " + std::string(context));
  return std::stoi(std::string(s));
}

std::vector<int> parse_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(parse_positive(s.substr(start, comma - start), context));
    start = comma + 1;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

GroupDesc parse_atom(std::string_view s) {
  if (s == "Q8") return GroupDesc::quaternion();
  if (s == "Alt4") return GroupDesc::alt4();
  if (s == "X16a" || s == "X16b" || s == "X18" || s == "X27")
    return GroupDesc::exceptional(std::string(s.substr(1)));
  if (starts_with(s, "Dic")) return GroupDesc::dicyclic(parse_positive(s.substr(3), s));
  if (starts_with(s, "GDic(") && s.back() == ')')
    return GroupDesc::generalized_dicyclic(parse_list(s.substr(5, s.size() - 6), s));
  if (starts_with(s, "A(") && s.back() == ')')
    return GroupDesc::abelian(parse_list(s.substr(2, s.size() - 3), s));
  if (starts_with(s, "E")) {
    auto caret = s.find('^');
    if (caret == std::string_view::npos) throw GroupError("expected E<p>^<k>: " + std::string(s));
    int p = parse_positive(s.substr(1, caret - 1), s);
    int k = parse_positive(s.substr(caret + 1), s);
    if (k < 1) throw GroupError("rank must be positive: " + std::string(s));
    return GroupDesc::abelian(std::vector<int>(k, p));
  }
  if (starts_with(s, "C") || starts_with(s, "Z"))
    return GroupDesc::cyclic(parse_positive(s.substr(1), s));
  if (starts_with(s, "D")) return GroupDesc::dihedral(parse_positive(s.substr(1), s));
  throw GroupError("unrecognised group spec: " + std::string(s));
}

}  // namespace

GroupDesc parse_group(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '*' || c == 'x')) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  if (depth != 0) throw GroupError("unbalanced parentheses in group spec");
  for (auto p : parts)
    if (p.empty()) throw GroupError("empty factor in group spec: " + std::string(text));
  GroupDesc desc = parse_atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    desc = GroupDesc::product(std::move(desc), parse_atom(parts[i]));
  return desc;
}

}  // namespace mcayley

namespace mcayley {

namespace {

class WordParser {
 public:
  WordParser(const FiniteGroup& group, std::string_view text,
             const std::vector<std::pair<std::string, std::string>>& aliases)
      : group_(group), text_(text), aliases_(aliases) {}

  Element parse() {
    Element g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw GroupError("cannot parse element '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element g = term();
    while (accept('*')) g = group_.mul(g, term());
    return g;
  }

  Element term() {
    Element g = primary();
    if (accept('^')) {
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent");
      long long k = std::stoll(std::string(text_.substr(start, pos_ - start)));
      g = group_.pow(g, negative ? -k : k);
    }
    return g;
  }

  Element primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element g = expr();
      if (!accept(')')) fail("missing ')'");
      return g;
    }
    if (c == '1') {
      ++pos_;
      return 0;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (const auto& [from, to] : aliases_)
        if (from == name) {
          name = to;
          break;
        }
      if (!group_.has_generator(name)) fail("unknown generator " + name);
      return group_.generator(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const FiniteGroup& group_;
  std::string_view text_;
  const std::vector<std::pair<std::string, std::string>>& aliases_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Element parse_element(const FiniteGroup& group, std::string_view text,
                      const std::vector<std::pair<std::string, std::string>>& aliases) {
  text = trim(text);
  try {
    return WordParser(group, text, aliases).parse();
  } catch (const GroupError&) {
    if (auto g = group.find_label(text)) return *g;
    throw;
  }
}

ElementSet parse_element_set(const FiniteGroup& group, std::string_view text,
                             const std::vector<std::pair<std::string, std::string>>& aliases) {
  std::vector<Element> out;
  text = trim(text);
  if (text.empty()) return {};
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_element(group, text.substr(start, i - start), aliases));
      start = i + 1;
    }
  }
  return ElementSet(std::move(out));
}

}  // namespace mcayley
