#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls the automorphism engine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mcayley/digraph.hpp"

namespace oracle {

/// Number of permutations p with (u,v) an arc iff (p[u],p[v]) is, found by
/// extending partial maps and rejecting as soon as an arc among the mapped
/// vertices disagrees.
inline std::uint64_t brute_force_aut_order(const mcayley::Digraph& g) {
  const int n = g.n();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (g.out_degree(v) != g.out_degree(w) || g.in_degree(v) != g.in_degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = g.has_arc(u, v) == g.has_arc(image[u], w) && g.has_arc(v, u) == g.has_arc(w, image[u]);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

/// Every labelled graph on n vertices (n <= 6), edges indexed by pairs u < v.
inline std::vector<mcayley::Digraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<mcayley::Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    mcayley::Digraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

/// Every labelled digraph on n vertices (n <= 4).
inline std::vector<mcayley::Digraph> all_digraphs(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  std::vector<mcayley::Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    mcayley::Digraph g(n);
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (mask >> i & 1) g.add_arc(arcs[i].first, arcs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

inline mcayley::Digraph random_digraph(std::mt19937_64& rng, int n, double p, bool symmetric) {
  std::bernoulli_distribution coin(p);
  mcayley::Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = symmetric ? u + 1 : 0; v < n; ++v) {
      if (u == v || !coin(rng)) continue;
      if (symmetric)
        g.add_edge(u, v);
      else
        g.add_arc(u, v);
    }
  return g;
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// The d-cube; its automorphism group has order 2^d d!.
inline mcayley::Digraph hypercube(int d) {
  mcayley::Digraph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

}  // namespace oracle
