#include "mcayley/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcayley {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      if (x != s) out += ' ';
      out += std::to_string(x);
      seen[x] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, const std::vector<Perm>& generators, std::vector<int> base_prefix)
    : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  levels_.reserve(degree + 1);
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw std::invalid_argument("base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) add_level(b);
  }
  for (const Perm& g : generators) extend(g);
}

void PermGroup::add_level(int point) {
  Level level;
  level.point = point;
  level.orbit = {point};
  level.slot.assign(degree_, -1);
  level.slot[point] = 0;
  level.transversal = {identity_perm(degree_)};
  level.checked.emplace_back();
  levels_.push_back(std::move(level));
  base_.push_back(point);
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    int x = g[level.point];
    int s = level.slot[x];
    if (s < 0) return {std::move(g), i};
    g = compose(g, inverse(level.transversal[s]));
  }
  return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_) return false;
  return is_identity(sift(g, 0).first);
}

bool PermGroup::extend(const Perm& g) {
  if (static_cast<int>(g.size()) != degree_ || !is_permutation(g))
    throw std::invalid_argument("not a permutation of the right degree");
  auto [h, depth] = sift(g, 0);
  if (is_identity(h)) return false;
  generators_.push_back(g);
  if (depth == levels_.size()) {
    int moved = 0;
    while (h[moved] == moved) ++moved;
    add_level(moved);
  }
  strong_.push_back(std::move(h));
  strong_depth_.push_back(depth);
  complete();
  return true;
}

void PermGroup::complete() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = levels_.size(); l-- > 0 && !changed;) {
      Level& level = levels_[l];
      // Grow the orbit with every strong generator belonging to this level.
      for (std::size_t k = 0; k < level.orbit.size(); ++k) {
        const int x = level.orbit[k];
        for (std::size_t s = 0; s < strong_.size(); ++s) {
          if (strong_depth_[s] < l) continue;
          const int y = strong_[s][x];
          if (level.slot[y] >= 0) continue;
          level.slot[y] = static_cast<int>(level.transversal.size());
          level.transversal.push_back(compose(level.transversal[level.slot[x]], strong_[s]));
          level.orbit.push_back(y);
        }
      }
      level.checked.resize(level.orbit.size());
      for (std::size_t k = 0; k < level.orbit.size() && !changed; ++k) {
        auto& done = level.checked[k];
        done.resize(strong_.size(), 0);
        const int x = level.orbit[k];
        for (std::size_t s = 0; s < strong_.size() && !changed; ++s) {
          if (done[s] || strong_depth_[s] < l) continue;
          done[s] = 1;
          const int y = strong_[s][x];
          Perm schreier = compose(compose(level.transversal[level.slot[x]], strong_[s]),
                                  inverse(level.transversal[level.slot[y]]));
          auto [h, depth] = sift(std::move(schreier), l + 1);
          if (is_identity(h)) continue;
          if (depth == levels_.size()) {
            int moved = 0;
            while (h[moved] == moved) ++moved;
            add_level(moved);
          }
          strong_.push_back(std::move(h));
          strong_depth_.push_back(depth);
          changed = true;
        }
      }
    }
  }
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const Level& level : levels_) n *= static_cast<unsigned>(level.orbit.size());
  return n;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : generators_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> index(degree_, -1);
  for (int x = 0; x < degree_; ++x) {
    int r = find(x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(x);
  }
  return out;
}

bool PermGroup::is_semiregular() const {
  const BigInt n = order();
  for (const auto& orbit : orbits())
    if (BigInt(orbit.size()) != n) return false;
  return true;
}

PermGroup PermGroup::point_stabilizer(int v) const {
  PermGroup rebased(degree_, generators_, {v});
  std::vector<Perm> gens;
  for (std::size_t s = 0; s < rebased.strong_.size(); ++s)
    if (rebased.strong_depth_[s] >= 1) gens.push_back(rebased.strong_[s]);
  return PermGroup(degree_, gens);
}

}  // namespace mcayley
