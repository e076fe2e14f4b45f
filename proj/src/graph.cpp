#include "substar/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace substar {

bool Graph::connected() const {
  if (n_ <= 1) return true;
  VertexSet seen = VertexSet::of({0});
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : (neighbors(v) - seen).to_vector()) {
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return seen == vertices();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u).to_vector())
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (int s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet::of({s});
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : (g.neighbors(v) - comp).to_vector()) {
        comp.insert(w);
        stack.push_back(w);
      }
    }
    seen = seen | comp;
    comps.push_back(comp);
  }
  return comps;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", base);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 line truncated", base + text.size());
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range 63..126", base + i);
    return c - 63;
  };

  std::size_t pos = 0;
  long n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6 vertex count exceeds 64", base);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6 vertex count exceeds 64", base);

  Graph g(static_cast<int>(n));
  std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != pos + nbytes) {
    if (text.size() < pos + nbytes)
      throw ParseError("graph6 line truncated", base + text.size());
    throw ParseError("trailing bytes after graph6 data", base + pos + nbytes);
  }
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int group = byte_at(pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;  // (byte offset, content)
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') lines.emplace_back(start, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("edge list missing header line", 0);

  auto parse_ints = [](const std::pair<std::size_t, std::string>& l, int count) {
    std::istringstream in(l.second);
    std::vector<long> vals;
    long x;
    while (in >> x) vals.push_back(x);
    if (!in.eof() || static_cast<int>(vals.size()) != count)
      throw ParseError("expected " + std::to_string(count) + " integers on line", l.first);
    return vals;
  };

  auto header = parse_ints(lines[0], 2);
  if (header[0] < 0 || header[0] > kMaxVertices)
    throw ParseError("vertex count out of range 0..64", lines[0].first);
  if (header[1] < 0 || static_cast<std::size_t>(header[1]) + 1 != lines.size())
    throw ParseError("edge count does not match number of edge lines", lines[0].first);
  Graph g(static_cast<int>(header[0]));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = parse_ints(lines[i], 2);
    if (uv[0] < 0 || uv[0] >= header[0] || uv[1] < 0 || uv[1] >= header[0] || uv[0] == uv[1])
      throw ParseError("invalid edge endpoints", lines[i].first);
    g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set member out of range");
  std::vector<int> verts = s.to_vector();
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (g.adjacent(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

bool Embedding::valid_for(const Graph& host, const Graph& pattern) const {
  if (pattern_order != pattern.order() || static_cast<int>(map.size()) != pattern_order) return false;
  VertexSet used;
  for (int h : map) {
    if (h < 0 || h >= host.order() || used.contains(h)) return false;
    used.insert(h);
  }
  for (int a = 0; a < pattern_order; ++a)
    for (int b = a + 1; b < pattern_order; ++b)
      if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
  return true;
}

namespace {

// Pattern vertex order for embedding search: highest degree first, then each
// next vertex maximizing placed-neighbor count.
std::vector<int> search_order(const Graph& pattern) {
  int n = pattern.order();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (int u : order)
        if (pattern.adjacent(u, v)) ++links;
      int deg = pattern.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = true;
  }
  return order;
}

bool embed_from(const Graph& host, const Graph& pattern, const std::vector<int>& order,
                std::size_t depth, std::vector<int>& map, VertexSet& used) {
  if (depth == order.size()) return true;
  int p = order[depth];
  int pdeg = pattern.degree(p);
  int pco = pattern.order() - 1 - pdeg;
  for (int h = 0; h < host.order(); ++h) {
    if (used.contains(h)) continue;
    if (host.degree(h) < pdeg) continue;
    if (host.order() - 1 - host.degree(h) < pco) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i)
      ok = pattern.adjacent(p, order[i]) == host.adjacent(h, map[static_cast<std::size_t>(order[i])]);
    if (!ok) continue;
    map[static_cast<std::size_t>(p)] = h;
    used.insert(h);
    if (embed_from(host, pattern, order, depth + 1, map, used)) return true;
    used.erase(h);
  }
  return false;
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  if (pattern.order() == 0) return Embedding{0, {}};
  std::vector<int> order = search_order(pattern);
  std::vector<int> map(static_cast<std::size_t>(pattern.order()), -1);
  VertexSet used;
  if (!embed_from(host, pattern, order, 0, map, used)) return std::nullopt;
  return Embedding{pattern.order(), map};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto degs = [](const Graph& x) {
    std::vector<int> d;
    for (int v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(g) != degs(h)) return false;
  return find_induced_embedding(h, g).has_value();
}

namespace {

// Minimum-adjacency-bitstring search over all relabelings; the bit order is
// the graph6 upper-triangle order, so the winner is the lexicographically
// smallest graph6 body.
struct CanonSearch {
  const Graph& g;
  int n;
  std::uint64_t best = ~0ULL;
  int total_bits;
  std::vector<int> perm, best_perm;
  VertexSet used;

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.order()), total_bits(graph.order() * (graph.order() - 1) / 2) {}

  void run() {
    std::vector<int> identity;
    for (int v = 0; v < n; ++v) identity.push_back(v);
    best = value_of(identity);
    best_perm = identity;
    perm.assign(static_cast<std::size_t>(n), -1);
    descend(0, 0, 0, false);
  }

  std::uint64_t value_of(const std::vector<int>& p) const {
    std::uint64_t v = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) v = (v << 1) | (g.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) ? 1 : 0);
    return v;
  }

  void descend(int pos, std::uint64_t value, int bits, bool strictly_less) {
    if (pos == n) {
      if (value < best) {
        best = value;
        best_perm = perm;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used.contains(v)) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | (g.adjacent(perm[static_cast<std::size_t>(i)], v) ? 1 : 0);
      std::uint64_t next = (value << pos) | col;
      bool less = strictly_less;
      if (!less) {
        std::uint64_t prefix = best >> (total_bits - (bits + pos));
        if (next > prefix) continue;
        less = next < prefix;
      }
      perm[static_cast<std::size_t>(pos)] = v;
      used.insert(v);
      descend(pos + 1, next, bits + pos, less);
      used.erase(v);
    }
  }
};

}  // namespace

std::string canonical_code(const Graph& g) {
  if (g.order() > 10) throw std::invalid_argument("canonical_code limited to n <= 10");
  if (g.order() <= 1) return write_graph6(g);
  CanonSearch search(g);
  search.run();
  Graph canon(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.adjacent(search.best_perm[static_cast<std::size_t>(i)], search.best_perm[static_cast<std::size_t>(j)]))
        canon.add_edge(i, j);
  return write_graph6(canon);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration limited to 1 <= n <= 8");
  std::map<std::string, Graph> reps;
  reps.emplace(canonical_code(Graph(1)), Graph(1));
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [code, base] : reps) {
      // Attach a new vertex by every nonempty neighborhood; every connected
      // graph has a non-cut vertex, so this reaches each class.
      for (std::uint64_t mask = 1; mask < (1ULL << (size - 1)); ++mask) {
        Graph candidate(size);
        for (auto [u, v] : base.edges()) candidate.add_edge(u, v);
        for (int u : VertexSet(mask).to_vector()) candidate.add_edge(u, size - 1);
        std::string c = canonical_code(candidate);
        if (!next.contains(c)) next.emplace(c, parse_graph6(c));
      }
    }
    reps = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [code, graph] : reps) out.push_back(std::move(graph));
  return out;
}

}  // namespace substar
