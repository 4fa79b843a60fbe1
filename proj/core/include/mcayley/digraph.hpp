#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcayley {

class DigraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxVertices = 4096;

/// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<int>;

/// Loopless digraph on vertices 0..n-1 stored as packed out- and in-rows.
///
/// A digraph whose arc relation is symmetric is treated as a graph. The number
/// of unmatched arcs is tracked incrementally, so `is_symmetric` is O(1).
class Digraph {
 public:
  explicit Digraph(int n = 0);

  int n() const { return n_; }
  int words() const { return words_; }

  bool has_arc(int u, int v) const {
    return (out_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  /// Adds both (u,v) and (v,u).
  void add_edge(int u, int v);

  bool is_symmetric() const { return unmatched_ == 0; }
  int out_degree(int v) const;
  int in_degree(int v) const;
  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;
  const std::uint64_t* out_row(int v) const { return out_.data() + v * words_; }
  const std::uint64_t* in_row(int v) const { return in_.data() + v * words_; }

  std::size_t arc_count() const { return arcs_; }
  /// Number of edges of a graph, i.e. arcs / 2. Throws on directed input.
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
  std::size_t arcs_ = 0;
  std::size_t unmatched_ = 0;
};

struct InducedGraph {
  Digraph graph;
  /// graph vertex i corresponds to host vertex vertices[i].
  VertexSet vertices;
};

Digraph complement(const Digraph& g);
InducedGraph induced(const Digraph& g, const VertexSet& x);
/// Vertices of X with no neighbour inside X. Graphs only.
VertexSet isolated_in_induced(const Digraph& g, const VertexSet& x);
/// Vertices at distance exactly i from v. Graphs only.
VertexSet distance_layer(const Digraph& g, int v, int i);
Digraph disjoint_union(const Digraph& a, const Digraph& b);
/// Vertex (u1,u2) has index u1 * b.n() + u2. Graphs only.
Digraph cartesian_product(const Digraph& a, const Digraph& b);
/// Common in- and out-valency, if every vertex has the same one.
std::optional<int> is_regular(const Digraph& g);
/// Vertex v of g becomes vertex perm[v] of the result.
Digraph relabel(const Digraph& g, const std::vector<int>& perm);
Digraph complete_graph(int n);
Digraph cycle_graph(int n);
Digraph directed_cycle(int n);

/// graph6 for graphs; throws on directed input.
std::string encode_graph6(const Digraph& g);
/// digraph6 (leading '&').
std::string encode_digraph6(const Digraph& g);
/// graph6 when symmetric, digraph6 otherwise.
std::string encode(const Digraph& g);
/// Accepts graph6 or digraph6, with or without the >>graph6<< / >>digraph6<< header.
Digraph decode(std::string_view text);

}  // namespace mcayley
