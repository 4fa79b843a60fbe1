#include "mcayley/digraph.hpp"

#include <algorithm>
#include <bit>

namespace mcayley {

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0 || n > kMaxVertices)
    throw DigraphError("vertex count out of range: " + std::to_string(n));
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
  in_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw DigraphError("vertex out of range: " + std::to_string(v));
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DigraphError("loops are not allowed");
  if (has_arc(u, v)) return;
  out_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  in_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++arcs_;
  if (has_arc(v, u))
    --unmatched_;
  else
    ++unmatched_;
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_arc(u, v)) return;
  out_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  in_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --arcs_;
  if (has_arc(v, u))
    ++unmatched_;
  else
    --unmatched_;
}

void Digraph::add_edge(int u, int v) {
  add_arc(u, v);
  add_arc(v, u);
}

int Digraph::out_degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(out_row(v)[w]);
  return d;
}

int Digraph::in_degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(in_row(v)[w]);
  return d;
}

namespace {

std::vector<int> bits_of(const std::uint64_t* row, int words) {
  std::vector<int> out;
  for (int w = 0; w < words; ++w)
    for (std::uint64_t x = row[w]; x; x &= x - 1) out.push_back(w * 64 + std::countr_zero(x));
  return out;
}

void require_graph(const Digraph& g, const char* what) {
  if (!g.is_symmetric()) throw DigraphError(std::string(what) + " requires an undirected graph");
}

}  // namespace

std::vector<int> Digraph::out_neighbors(int v) const { return bits_of(out_row(v), words_); }
std::vector<int> Digraph::in_neighbors(int v) const { return bits_of(in_row(v), words_); }

std::size_t Digraph::edge_count() const {
  require_graph(*this, "edge_count");
  return arcs_ / 2;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

Digraph complement(const Digraph& g) {
  Digraph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (u != v && !g.has_arc(u, v)) c.add_arc(u, v);
  return c;
}

InducedGraph induced(const Digraph& g, const VertexSet& x) {
  VertexSet vs = x;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (v < 0 || v >= g.n()) throw DigraphError("vertex out of range in induced subgraph");
  Digraph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && g.has_arc(vs[i], vs[j])) h.add_arc(static_cast<int>(i), static_cast<int>(j));
  return {std::move(h), std::move(vs)};
}

VertexSet isolated_in_induced(const Digraph& g, const VertexSet& x) {
  require_graph(g, "isolated_in_induced");
  InducedGraph h = induced(g, x);
  VertexSet out;
  for (int i = 0; i < h.graph.n(); ++i)
    if (h.graph.out_degree(i) == 0) out.push_back(h.vertices[i]);
  return out;
}

VertexSet distance_layer(const Digraph& g, int v, int i) {
  require_graph(g, "distance_layer");
  if (v < 0 || v >= g.n()) throw DigraphError("vertex out of range");
  if (i < 0) throw DigraphError("distance must be non-negative");
  std::vector<int> dist(g.n(), -1);
  std::vector<int> queue{v};
  dist[v] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int u = queue[k];
    if (dist[u] >= i) continue;
    for (int w : g.out_neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  VertexSet out;
  for (int u = 0; u < g.n(); ++u)
    if (dist[u] == i) out.push_back(u);
  return out;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  Digraph u(a.n() + b.n());
  for (auto [x, y] : a.arcs()) u.add_arc(x, y);
  for (auto [x, y] : b.arcs()) u.add_arc(a.n() + x, a.n() + y);
  return u;
}

Digraph cartesian_product(const Digraph& a, const Digraph& b) {
  require_graph(a, "cartesian_product");
  require_graph(b, "cartesian_product");
  const int nb = b.n();
  Digraph p(a.n() * nb);
  for (int u1 = 0; u1 < a.n(); ++u1)
    for (auto [x, y] : b.arcs()) p.add_arc(u1 * nb + x, u1 * nb + y);
  for (auto [x, y] : a.arcs())
    for (int u2 = 0; u2 < nb; ++u2) p.add_arc(x * nb + u2, y * nb + u2);
  return p;
}

std::optional<int> is_regular(const Digraph& g) {
  if (g.n() == 0) return 0;
  const int d = g.out_degree(0);
  for (int v = 0; v < g.n(); ++v)
    if (g.out_degree(v) != d || g.in_degree(v) != d) return std::nullopt;
  return d;
}

Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw DigraphError("relabeling has the wrong length");
  Digraph h(g.n());
  for (auto [x, y] : g.arcs()) h.add_arc(perm[x], perm[y]);
  return h;
}

Digraph complete_graph(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) g.add_arc(u, v);
  return g;
}

Digraph cycle_graph(int n) {
  Digraph g(n);
  if (n >= 3)
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  else if (n == 2)
    g.add_edge(0, 1);
  return g;
}

Digraph directed_cycle(int n) {
  Digraph g(n);
  if (n >= 2)
    for (int v = 0; v < n; ++v)
      if (v != (v + 1) % n) g.add_arc(v, (v + 1) % n);
  return g;
}

// ---------------------------------------------------------------------------
// graph6 / digraph6

namespace {

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
}

void put_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      v <<= 1;
      if (i + k < bits.size() && bits[i + k]) v |= 1;
    }
    out += static_cast<char>(v + 63);
  }
}

int take_size(std::string_view& s) {
  auto byte = [](char c) {
    if (c < 63 || c > 126) throw DigraphError("malformed graph6 byte");
    return c - 63;
  };
  if (s.empty()) throw DigraphError("empty graph6 string");
  if (s[0] != '~') {
    int n = byte(s[0]);
    s.remove_prefix(1);
    return n;
  }
  if (s.size() >= 2 && s[1] == '~') throw DigraphError("graph too large for this library");
  if (s.size() < 4) throw DigraphError("truncated graph6 size field");
  int n = (byte(s[1]) << 12) | (byte(s[2]) << 6) | byte(s[3]);
  s.remove_prefix(4);
  if (n > kMaxVertices) throw DigraphError("graph too large for this library");
  return n;
}

std::vector<bool> take_bits(std::string_view s, std::size_t count) {
  const std::size_t bytes = (count + 5) / 6;
  if (s.size() != bytes) throw DigraphError("graph6 length does not match vertex count");
  std::vector<bool> bits(bytes * 6);
  for (std::size_t i = 0; i < bytes; ++i) {
    char c = s[i];
    if (c < 63 || c > 126) throw DigraphError("malformed graph6 byte");
    int v = c - 63;
    for (int k = 0; k < 6; ++k) bits[i * 6 + k] = (v >> (5 - k)) & 1;
  }
  for (std::size_t i = count; i < bits.size(); ++i)
    if (bits[i]) throw DigraphError("nonzero padding bits");
  bits.resize(count);
  return bits;
}

}  // namespace

std::string encode_graph6(const Digraph& g) {
  if (!g.is_symmetric()) throw DigraphError("graph6 requires an undirected graph");
  std::string out;
  put_size(out, g.n());
  std::vector<bool> bits;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_arc(i, j));
  put_bits(out, bits);
  return out;
}

std::string encode_digraph6(const Digraph& g) {
  std::string out = "&";
  put_size(out, g.n());
  std::vector<bool> bits;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) bits.push_back(g.has_arc(i, j));
  put_bits(out, bits);
  return out;
}

std::string encode(const Digraph& g) {
  return g.is_symmetric() ? encode_graph6(g) : encode_digraph6(g);
}

Digraph decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  constexpr std::string_view g6_header = ">>graph6<<";
  constexpr std::string_view d6_header = ">>digraph6<<";
  bool directed = false;
  if (text.substr(0, g6_header.size()) == g6_header) {
    text.remove_prefix(g6_header.size());
  } else if (text.substr(0, d6_header.size()) == d6_header) {
    text.remove_prefix(d6_header.size());
    directed = true;
    if (text.empty() || text[0] != '&') throw DigraphError("digraph6 body must start with '&'");
  }
  if (!text.empty() && text[0] == '&') {
    directed = true;
    text.remove_prefix(1);
  } else if (directed) {
    throw DigraphError("digraph6 body must start with '&'");
  }
  const int n = take_size(text);
  Digraph g(n);
  if (directed) {
    auto bits = take_bits(text, static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (bits[static_cast<std::size_t>(i) * n + j]) {
          if (i == j) throw DigraphError("loops are not allowed");
          g.add_arc(i, j);
        }
  } else {
    auto bits = take_bits(text, static_cast<std::size_t>(n) * (n - (n > 0)) / 2);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (bits[k++]) g.add_edge(i, j);
  }
  return g;
}

}  // namespace mcayley
