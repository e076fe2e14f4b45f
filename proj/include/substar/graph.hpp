#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace substar {

inline constexpr int kMaxVertices = 64;

/// Error for malformed textual input; byte_offset() points at the offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Subset of {0..63}, the vertices of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }
  static VertexSet range(int n) {
    if (n <= 0) return VertexSet();
    return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
  }

  bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1) != 0; }
  void insert(int v) {
    check(v);
    bits_ |= 1ULL << v;
  }
  void erase(int v) {
    check(v);
    bits_ &= ~(1ULL << v);
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  int front() const {
    if (empty()) throw std::invalid_argument("front() of empty vertex set");
    return std::countr_zero(bits_);
  }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet& o) const { return bits_ <=> o.bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  static void check(int v) {
    if (v < 0 || v >= 64) throw std::invalid_argument("vertex out of range 0..63");
  }
  std::uint64_t bits_ = 0;
};

/// Finite simple undirected graph on vertices 0..n-1, n <= 64.
/// Adjacency is symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n >= 0 ? n : 0), 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range 0..64");
  }
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }
  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return ((adj_[static_cast<std::size_t>(u)] >> v) & 1) != 0;
  }
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
    adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
  }
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return VertexSet(adj_[static_cast<std::size_t>(v)]);
  }
  int degree(int v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool connected() const;
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Components sorted by their lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// graph6 serialization, bit-exact per the format definition (n+63 size byte,
// long form for n >= 63, upper-triangle bits column-major in 6-bit groups).
// An optional ">>graph6<<" header is tolerated and stripped.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids; blank lines and "#" comments ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Induced subgraph on s, relabeled by sorted order of s.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Witness that `pattern` occurs in `host` as an induced subgraph.
struct Embedding {
  int pattern_order = 0;
  std::vector<int> map;  // pattern vertex -> host vertex, injective
  bool valid_for(const Graph& host, const Graph& pattern) const;
};

bool are_isomorphic(const Graph& g, const Graph& h);

/// Deterministic complete invariant for n <= 10: the graph6 string of the
/// lexicographically minimal relabeling.
std::string canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 8, sorted by canonical_code.
std::vector<Graph> enumerate_connected_graphs(int n);

std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern);

}  // namespace substar
