#include "mcayley/aut.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace mcayley {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("MCAYLEY_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

bool is_automorphism(const Digraph& g, const Perm& p) {
  if (static_cast<int>(p.size()) != g.n() || !is_permutation(p)) return false;
  for (auto [u, v] : g.arcs())
    if (!g.has_arc(p[u], p[v])) return false;
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

struct Partition {
  std::vector<int> lab;      // position -> vertex
  std::vector<int> cellof;   // vertex -> start of its cell
  std::vector<int> cellend;  // cell start -> one past its end
  int cells = 0;
};

class Engine {
 public:
  Engine(const Digraph& g, const std::optional<Coloring>& coloring, const AutOptions& options)
      : g_(g), n_(g.n()), options_(options), group_(g.n()) {
    out_adj_.resize(n_);
    in_adj_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      out_adj_[v] = g.out_neighbors(v);
      in_adj_[v] = g.in_neighbors(v);
    }
    colors_.assign(n_, 0);
    if (coloring) {
      if (static_cast<int>(coloring->size()) != n_)
        throw std::invalid_argument("colouring has the wrong length");
      colors_ = *coloring;
      int k = 0;
      for (int c : colors_) {
        if (c < 0) throw std::invalid_argument("negative colour");
        k = std::max(k, c + 1);
      }
      std::vector<char> used(k, 0);
      for (int c : colors_) used[c] = 1;
      if (std::find(used.begin(), used.end(), 0) != used.end())
        throw std::invalid_argument("colours must form an initial segment");
    }
    outc_.assign(n_, 0);
    inc_.assign(n_, 0);
    inq_.assign(n_, 0);
    for (const Perm& p : options_.known_generators) {
      if (!is_automorphism(g_, p)) throw std::invalid_argument("known generator is not an automorphism");
      for (int v = 0; v < n_; ++v)
        if (colors_[v] != colors_[p[v]])
          throw std::invalid_argument("known generator does not preserve colours");
      if (group_.extend(p)) gens_.push_back(p);
    }
  }

  AutResult run() {
    AutResult result;
    if (exceeds_limit()) {
      result.aborted = true;
      result.group = group_;
      return result;
    }
    Partition root = initial_partition();
    std::vector<int> all_cells;
    for (int s = 0; s < n_; s = root.cellend[s]) all_cells.push_back(s);
    std::uint64_t h = refine(root, all_cells);
    path_.clear();
    inv_.clear();
    inv_.push_back(h);
    search(root, 0, true);
    result.group = group_;
    result.nodes = nodes_;
    result.aborted = aborted_;
    if (!aborted_) {
      check_order();
      result.labeling.assign(n_, 0);
      for (int i = 0; i < n_; ++i) result.labeling[best_lab_[i]] = i;
      result.certificate = certificate();
    }
    return result;
  }

 private:
  Partition initial_partition() const {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](int a, int b) { return colors_[a] < colors_[b]; });
    p.cellof.assign(n_, 0);
    p.cellend.assign(n_, 0);
    for (int s = 0; s < n_;) {
      int e = s;
      while (e < n_ && colors_[p.lab[e]] == colors_[p.lab[s]]) ++e;
      for (int i = s; i < e; ++i) p.cellof[p.lab[i]] = s;
      p.cellend[s] = e;
      ++p.cells;
      s = e;
    }
    return p;
  }

  // Equitable refinement; returns a hash of the splitting trace.
  std::uint64_t refine(Partition& p, const std::vector<int>& initial) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    std::deque<int> queue;
    for (int s : initial) {
      queue.push_back(s);
      inq_[s] = 1;
    }
    std::vector<int> touched, touched_cells;
    std::vector<std::pair<std::uint64_t, int>> keyed;
    while (!queue.empty()) {
      if (p.cells == n_) {
        for (int s : queue) inq_[s] = 0;
        break;
      }
      const int w = queue.front();
      queue.pop_front();
      inq_[w] = 0;
      touched.clear();
      for (int pos = w; pos < p.cellend[w]; ++pos) {
        const int x = p.lab[pos];
        for (int u : in_adj_[x]) {
          if (outc_[u] == 0 && inc_[u] == 0) touched.push_back(u);
          ++outc_[u];
        }
        for (int u : out_adj_[x]) {
          if (outc_[u] == 0 && inc_[u] == 0) touched.push_back(u);
          ++inc_[u];
        }
      }
      touched_cells.clear();
      for (int u : touched) touched_cells.push_back(p.cellof[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                          touched_cells.end());
      h = mix(h, static_cast<std::uint64_t>(w));
      for (int c : touched_cells) {
        const int e = p.cellend[c];
        keyed.clear();
        for (int pos = c; pos < e; ++pos) {
          const int v = p.lab[pos];
          keyed.emplace_back(static_cast<std::uint64_t>(outc_[v]) * (n_ + 1) + inc_[v], v);
        }
        std::sort(keyed.begin(), keyed.end());
        h = mix(h, static_cast<std::uint64_t>(c));
        if (keyed.front().first == keyed.back().first) {
          h = mix(h, keyed.front().first);
          continue;
        }
        const bool was_queued = inq_[c];
        std::vector<int> starts;
        int largest = -1, largest_size = 0;
        for (int i = 0; i < static_cast<int>(keyed.size());) {
          int j = i;
          while (j < static_cast<int>(keyed.size()) && keyed[j].first == keyed[i].first) ++j;
          const int start = c + i;
          for (int k = i; k < j; ++k) {
            p.lab[c + k] = keyed[k].second;
            p.cellof[keyed[k].second] = start;
          }
          p.cellend[start] = c + j;
          h = mix(mix(h, keyed[i].first), static_cast<std::uint64_t>(j - i));
          if (j - i > largest_size) {
            largest_size = j - i;
            largest = static_cast<int>(starts.size());
          }
          starts.push_back(start);
          i = j;
        }
        p.cells += static_cast<int>(starts.size()) - 1;
        for (int k = 0; k < static_cast<int>(starts.size()); ++k) {
          if (inq_[starts[k]]) continue;
          if (!was_queued && k == largest) continue;
          queue.push_back(starts[k]);
          inq_[starts[k]] = 1;
        }
      }
      for (int u : touched) outc_[u] = inc_[u] = 0;
    }
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

  std::uint64_t individualize(Partition& p, int v) {
    const int s = p.cellof[v];
    const int e = p.cellend[s];
    int pos = s;
    while (p.lab[pos] != v) ++pos;
    std::swap(p.lab[pos], p.lab[s]);
    p.cellend[s] = s + 1;
    p.cellend[s + 1] = e;
    for (int i = s + 1; i < e; ++i) p.cellof[p.lab[i]] = s + 1;
    ++p.cells;
    return mix(refine(p, {s}), static_cast<std::uint64_t>(s));
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_size = n_ + 1;
    for (int s = 0; s < n_; s = p.cellend[s]) {
      const int size = p.cellend[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<std::uint64_t> leaf_key(const std::vector<int>& lab) const {
    const int words = (n_ + 63) / 64;
    std::vector<std::uint64_t> key(static_cast<std::size_t>(n_) * words + n_, 0);
    for (int i = 0; i < n_; ++i) {
      key[i] = static_cast<std::uint64_t>(colors_[lab[i]]);
      for (int j = 0; j < n_; ++j)
        if (g_.has_arc(lab[i], lab[j]))
          key[n_ + static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (63 - (j & 63));
    }
    return key;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  bool exceeds_limit() const {
    return options_.stop_above && group_.order() > *options_.stop_above;
  }

  void record(const std::vector<int>& from, const std::vector<int>& to) {
    Perm gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    if (!is_automorphism(g_, gamma))
      throw std::logic_error("search produced a map that is not an automorphism");
    if (group_.extend(gamma)) {
      gens_.push_back(std::move(gamma));
      if (exceeds_limit()) aborted_ = true;
    }
  }

  // Returns the depth of the node at which the search resumes.
  // Lexicographic comparison of the current invariant sequence with the best
  // leaf's; 0 means equal so far with the best path not yet exhausted.
  int compare_to_best() const {
    const std::size_t k = std::min(inv_.size(), best_inv_.size());
    for (std::size_t i = 0; i < k; ++i)
      if (inv_[i] != best_inv_[i]) return inv_[i] < best_inv_[i] ? -1 : 1;
    return inv_.size() > best_inv_.size() ? 1 : 0;
  }

  int leaf(const Partition& p, int depth, bool eq_first) {
    std::vector<std::uint64_t> key = leaf_key(p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_key_ = best_key_ = key;
      first_inv_ = best_inv_ = inv_;
      first_path_ = best_path_ = path_;
      return depth - 1;
    }
    if (eq_first && inv_.size() == first_inv_.size() && key == first_key_) {
      record(first_lab_, p.lab);
      return common_prefix(path_, first_path_);
    }
    int cmp_best = compare_to_best();
    if (cmp_best == 0 && inv_.size() < best_inv_.size()) cmp_best = -1;
    if (cmp_best == 0) {
      if (key == best_key_) {
        record(best_lab_, p.lab);
        return common_prefix(path_, best_path_);
      }
      cmp_best = key > best_key_ ? 1 : -1;
    }
    if (cmp_best > 0) {
      best_lab_ = p.lab;
      best_key_ = std::move(key);
      best_inv_ = inv_;
      best_path_ = path_;
    }
    return depth - 1;
  }

  std::vector<int> stabilizer_orbit_roots(int depth) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gamma : gens_) {
      bool fixes = true;
      for (int k = 0; k < depth && fixes; ++k) fixes = gamma[path_[k]] == path_[k];
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int x = 0; x < n_; ++x) parent[x] = find(x);
    return parent;
  }

  int search(const Partition& p, int depth, bool eq_first) {
    if (p.cells == n_) return leaf(p, depth, eq_first);
    const int s = target_cell(p);
    std::vector<int> children(p.lab.begin() + s, p.lab.begin() + p.cellend[s]);
    std::sort(children.begin(), children.end());
    std::size_t orbits_for = static_cast<std::size_t>(-1);
    std::vector<int> roots;
    for (int v : children) {
      if (aborted_) return -1;
      if (orbits_for != gens_.size()) {
        roots = stabilizer_orbit_roots(depth);
        orbits_for = gens_.size();
      }
      if (roots[v] != v) continue;
      if (++nodes_ > options_.node_budget)
        throw BudgetExceeded("automorphism search exceeded its node budget");
      Partition child = p;
      const std::uint64_t h = individualize(child, v);
      const int level = depth + 1;
      bool ef = !have_first_ ||
                (eq_first && level < static_cast<int>(first_inv_.size()) && first_inv_[level] == h);
      path_.push_back(v);
      inv_.push_back(h);
      if (have_first_ && !ef && compare_to_best() < 0) {
        path_.pop_back();
        inv_.pop_back();
        continue;
      }
      const int r = search(child, level, ef);
      path_.pop_back();
      inv_.pop_back();
      if (r < depth) return r;
    }
    return depth - 1;
  }

  // The order from the stabilizer chain must agree with the product of the
  // orbit lengths along the first path.
  void check_order() {
    BigInt product = 1;
    std::vector<int> saved = path_;
    path_ = first_path_;
    for (int k = 0; k < static_cast<int>(first_path_.size()); ++k) {
      std::vector<int> roots = stabilizer_orbit_roots(k);
      const int r = roots[first_path_[k]];
      product *= static_cast<unsigned>(std::count(roots.begin(), roots.end(), r));
    }
    path_ = saved;
    if (product != group_.order())
      throw std::logic_error("automorphism group order is inconsistent");
  }

  std::string certificate() const {
    std::string out = std::to_string(n_) + ':';
    for (int i = 0; i < n_; ++i) out += std::to_string(colors_[best_lab_[i]]) + ',';
    out += ':';
    out += encode_digraph6(relabel(g_, [&] {
      std::vector<int> perm(n_);
      for (int i = 0; i < n_; ++i) perm[best_lab_[i]] = i;
      return perm;
    }()));
    return out;
  }

  const Digraph& g_;
  const int n_;
  AutOptions options_;
  std::vector<std::vector<int>> out_adj_, in_adj_;
  std::vector<int> colors_;
  std::vector<int> outc_, inc_;
  std::vector<char> inq_;

  PermGroup group_;
  std::vector<Perm> gens_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;

  std::vector<int> path_;
  std::vector<std::uint64_t> inv_;
  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<std::uint64_t> first_key_, best_key_, first_inv_, best_inv_;
};

}  // namespace

AutResult analyze(const Digraph& g, const std::optional<Coloring>& coloring,
                  const AutOptions& options) {
  if (g.n() == 0) {
    AutResult r;
    r.certificate = "0::" + encode_digraph6(g);
    return r;
  }
  Engine engine(g, coloring, options);
  return engine.run();
}

PermGroup automorphism_group(const Digraph& g, const std::optional<Coloring>& coloring) {
  return analyze(g, coloring).group;
}

CanonicalForm canonical_form(const Digraph& g, const std::optional<Coloring>& coloring) {
  AutResult r = analyze(g, coloring);
  return {std::move(r.labeling), std::move(r.certificate)};
}

bool are_isomorphic(const Digraph& a, const Digraph& b, const std::optional<Coloring>& ca,
                    const std::optional<Coloring>& cb) {
  if (a.n() != b.n() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a, ca).certificate == canonical_form(b, cb).certificate;
}

std::vector<Perm> embedded_generators(const FiniteGroup& group, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const int n = group.order();
  std::vector<Perm> out;
  for (Element h : group.generators()) {
    Perm p(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < m; ++i)
      for (int g = 0; g < n; ++g) p[i * n + g] = i * n + group.mul(g, h);
    out.push_back(std::move(p));
  }
  return out;
}

PermGroup embedded_action(const FiniteGroup& group, int m) {
  return PermGroup(group.order() * m, embedded_generators(group, m));
}

}  // namespace mcayley
