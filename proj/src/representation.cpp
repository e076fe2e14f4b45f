#include "substar/representation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <variant>

#include "substar/chordal.hpp"

namespace substar {

std::vector<std::vector<int>> TreeRepresentation::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
      throw std::invalid_argument("tree edge index out of range");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

std::uint64_t TreeRepresentation::hosting_mask(int vertex) const {
  if (node_count() > 64) throw std::invalid_argument("host tree exceeds 64 nodes");
  std::uint64_t mask = 0;
  for (int i = 0; i < node_count(); ++i)
    if (nodes[static_cast<std::size_t>(i)].contains(vertex)) mask |= 1ULL << i;
  return mask;
}

bool TreeRepresentation::is_tree() const {
  int m = node_count();
  if (m == 0) return false;
  if (static_cast<int>(tree_edges.size()) != m - 1) return false;
  for (auto [a, b] : tree_edges)
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) return false;
  std::vector<std::vector<int>> adj = adjacency();
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == m;
}

void TreeRepresentation::normalize_edges() {
  for (auto& [a, b] : tree_edges)
    if (a > b) std::swap(a, b);
  std::sort(tree_edges.begin(), tree_edges.end());
}

namespace {

// BFS distances from start, restricted to the node mask.
std::vector<int> masked_distances(const std::vector<std::vector<int>>& adj, std::uint64_t mask,
                                  int start) {
  std::vector<int> dist(adj.size(), -1);
  dist[static_cast<std::size_t>(start)] = 0;
  std::vector<int> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : adj[static_cast<std::size_t>(x)])
      if (((mask >> y) & 1) != 0 && dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

bool masked_connected(const std::vector<std::vector<int>>& adj, std::uint64_t mask) {
  if (mask == 0) return false;
  auto dist = masked_distances(adj, mask, std::countr_zero(mask));
  for (int i = 0; i < static_cast<int>(adj.size()); ++i)
    if (((mask >> i) & 1) != 0 && dist[static_cast<std::size_t>(i)] < 0) return false;
  return true;
}

}  // namespace

bool verify_representation(const Graph& g, const TreeRepresentation& t) {
  if (t.host_order != g.order()) return false;
  if (!t.is_tree()) return false;
  if (t.node_count() > 64) return false;
  for (const VertexSet& s : t.nodes)
    if (!s.subset_of(g.vertices())) return false;
  auto adj = t.adjacency();
  std::vector<std::uint64_t> hosting(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    hosting[static_cast<std::size_t>(v)] = t.hosting_mask(v);
    if (!masked_connected(adj, hosting[static_cast<std::size_t>(v)])) return false;
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      bool meet = (hosting[static_cast<std::size_t>(u)] & hosting[static_cast<std::size_t>(v)]) != 0;
      if (meet != g.adjacent(u, v)) return false;
    }
  return true;
}

int subtree_diameter(const TreeRepresentation& t, int vertex) {
  std::uint64_t mask = t.hosting_mask(vertex);
  auto adj = t.adjacency();
  if (!masked_connected(adj, mask))
    throw std::invalid_argument("hosting set is empty or disconnected");
  auto d0 = masked_distances(adj, mask, std::countr_zero(mask));
  int far = std::countr_zero(mask);
  for (int i = 0; i < t.node_count(); ++i)
    if (((mask >> i) & 1) != 0 && d0[static_cast<std::size_t>(i)] > d0[static_cast<std::size_t>(far)]) far = i;
  auto d1 = masked_distances(adj, mask, far);
  int best = 0;
  for (int i = 0; i < t.node_count(); ++i)
    if (((mask >> i) & 1) != 0) best = std::max(best, d1[static_cast<std::size_t>(i)]);
  return best;
}

bool is_substar_representation(const TreeRepresentation& t) {
  for (int v = 0; v < t.host_order; ++v)
    if (subtree_diameter(t, v) > 2) return false;
  return true;
}

SubstarRepresentation make_substar_representation(TreeRepresentation rep) {
  if (!is_substar_representation(rep))
    throw std::invalid_argument("some hosted subtree has diameter > 2");
  return SubstarRepresentation{std::move(rep)};
}

namespace {

struct MutableTree {
  std::vector<VertexSet> sets;
  std::vector<std::vector<int>> adj;
  std::vector<bool> alive;

  explicit MutableTree(const TreeRepresentation& t)
      : sets(t.nodes), adj(t.adjacency()), alive(t.nodes.size(), true) {}

  void detach(int a, int b) {
    auto& la = adj[static_cast<std::size_t>(a)];
    la.erase(std::find(la.begin(), la.end(), b));
    auto& lb = adj[static_cast<std::size_t>(b)];
    lb.erase(std::find(lb.begin(), lb.end(), a));
  }

  // Merge node `gone` into `keep`; `keep`'s vertex set wins.
  void contract_into(int keep, int gone) {
    detach(keep, gone);
    for (int x : std::vector<int>(adj[static_cast<std::size_t>(gone)])) {
      detach(gone, x);
      adj[static_cast<std::size_t>(keep)].push_back(x);
      adj[static_cast<std::size_t>(x)].push_back(keep);
    }
    alive[static_cast<std::size_t>(gone)] = false;
    sets[static_cast<std::size_t>(gone)] = VertexSet();
  }

  // BFS over alive nodes; returns (distance, parent) pairs.
  std::pair<std::vector<int>, std::vector<int>> bfs(int start) const {
    std::vector<int> dist(sets.size(), -1), parent(sets.size(), -1);
    dist[static_cast<std::size_t>(start)] = 0;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int y : adj[static_cast<std::size_t>(x)])
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
    }
    return {dist, parent};
  }

  TreeRepresentation freeze(int host_order) const {
    TreeRepresentation out;
    out.host_order = host_order;
    std::vector<int> index(sets.size(), -1);
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (alive[i]) {
        index[i] = out.node_count();
        out.nodes.push_back(sets[i]);
      }
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (alive[i])
        for (int j : adj[i])
          if (static_cast<int>(i) < j)
            out.tree_edges.emplace_back(index[i], index[static_cast<std::size_t>(j)]);
    out.normalize_edges();
    return out;
  }
};

}  // namespace

TreeRepresentation normalize_representation(const Graph& g, const TreeRepresentation& t) {
  if (!verify_representation(g, t))
    throw std::invalid_argument("input is not a valid tree representation");
  auto chordality = is_chordal(g);
  auto* peo = std::get_if<EliminationOrder>(&chordality);
  if (peo == nullptr) throw std::runtime_error("represented graph must be chordal");
  std::vector<VertexSet> cliques = maximal_cliques(g, *peo).cliques;
  auto is_maximal = [&](VertexSet s) {
    return std::find(cliques.begin(), cliques.end(), s) != cliques.end();
  };

  std::vector<int> before(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) before[static_cast<std::size_t>(v)] = subtree_diameter(t, v);

  MutableTree tree(t);
  int total = static_cast<int>(tree.sets.size());

  // Grow non-maximal nodes toward the nearest node carrying a containing
  // maximal clique, one edge contraction at a time.
  for (;;) {
    int source = -1;
    for (int i = 0; i < total; ++i)
      if (tree.alive[static_cast<std::size_t>(i)] && !is_maximal(tree.sets[static_cast<std::size_t>(i)])) {
        source = i;
        break;
      }
    if (source == -1) break;
    auto [dist, parent] = tree.bfs(source);
    int target = -1;
    for (int j = 0; j < total; ++j) {
      if (!tree.alive[static_cast<std::size_t>(j)] || j == source) continue;
      const VertexSet& s = tree.sets[static_cast<std::size_t>(j)];
      if (!is_maximal(s) || !tree.sets[static_cast<std::size_t>(source)].subset_of(s)) continue;
      if (target == -1 || dist[static_cast<std::size_t>(j)] < dist[static_cast<std::size_t>(target)] ||
          (dist[static_cast<std::size_t>(j)] == dist[static_cast<std::size_t>(target)] && j < target))
        target = j;
    }
    if (target == -1)
      throw std::runtime_error("no maximal-clique node contains a non-maximal node's clique");
    int hop = target;
    while (parent[static_cast<std::size_t>(hop)] != source) hop = parent[static_cast<std::size_t>(hop)];
    if (!tree.sets[static_cast<std::size_t>(source)].subset_of(tree.sets[static_cast<std::size_t>(hop)]))
      throw std::runtime_error("contraction target does not host the contracted clique");
    tree.contract_into(hop, source);
  }

  // Contract paths between nodes carrying the same clique.
  for (;;) {
    int a = -1, b = -1;
    for (int i = 0; i < total && a == -1; ++i) {
      if (!tree.alive[static_cast<std::size_t>(i)]) continue;
      for (int j = i + 1; j < total; ++j)
        if (tree.alive[static_cast<std::size_t>(j)] &&
            tree.sets[static_cast<std::size_t>(i)] == tree.sets[static_cast<std::size_t>(j)]) {
          a = i;
          b = j;
          break;
        }
    }
    if (a == -1) break;
    auto [dist, parent] = tree.bfs(a);
    std::vector<int> path;
    for (int x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    for (int x : path)
      if (tree.sets[static_cast<std::size_t>(x)] != tree.sets[static_cast<std::size_t>(a)])
        throw std::runtime_error("path between duplicate nodes carries a different clique");
    int keep = *std::min_element(path.begin(), path.end());
    for (int x : path)
      if (x != keep) tree.contract_into(keep, x);
  }

  TreeRepresentation out = tree.freeze(g.order());
  std::vector<VertexSet> sorted_nodes = out.nodes;
  std::sort(sorted_nodes.begin(), sorted_nodes.end());
  if (sorted_nodes != cliques)
    throw std::runtime_error("normalization did not reach the clique bijection");
  if (!verify_representation(g, out))
    throw std::runtime_error("normalization broke the representation");
  for (int v = 0; v < g.order(); ++v)
    if (subtree_diameter(out, v) > before[static_cast<std::size_t>(v)])
      throw std::runtime_error("normalization increased a subtree diameter");
  return out;
}

std::string format_representation(const TreeRepresentation& t) {
  std::ostringstream out;
  out << "REP n=" << t.host_order << " nodes=" << t.node_count() << '\n';
  for (int i = 0; i < t.node_count(); ++i) {
    out << "NODE " << i << ':';
    const auto verts = t.nodes[static_cast<std::size_t>(i)].to_vector();
    for (std::size_t k = 0; k < verts.size(); ++k) out << (k == 0 ? " " : ",") << verts[k];
    out << '\n';
  }
  std::vector<std::pair<int, int>> edges = t.tree_edges;
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << "EDGE " << a << ' ' << b << '\n';
  return out.str();
}

TreeRepresentation parse_representation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing REP header", 0);
  int n = 0, m = 0;
  if (std::sscanf(line.c_str(), "REP n=%d nodes=%d", &n, &m) != 2)
    throw ParseError("malformed REP header", 0);
  if (n < 0 || n > kMaxVertices || m < 0 || m > 64) throw ParseError("REP sizes out of range", 0);
  TreeRepresentation t;
  t.host_order = n;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw ParseError("missing NODE line", 0);
    int idx = 0, consumed = 0;
    if (std::sscanf(line.c_str(), "NODE %d:%n", &idx, &consumed) != 1 || idx != i)
      throw ParseError("malformed NODE line", 0);
    VertexSet s;
    std::string rest = line.substr(static_cast<std::size_t>(consumed));
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream vs(rest);
    int v;
    while (vs >> v) {
      if (v < 0 || v >= n) throw ParseError("NODE vertex out of range", 0);
      s.insert(v);
    }
    t.nodes.push_back(s);
  }
  for (int e = 0; e < m - 1; ++e) {
    if (!std::getline(in, line)) throw ParseError("missing EDGE line", 0);
    int a = 0, b = 0;
    if (std::sscanf(line.c_str(), "EDGE %d %d", &a, &b) != 2 || a < 0 || b <= a || b >= m)
      throw ParseError("malformed EDGE line", 0);
    t.tree_edges.emplace_back(a, b);
  }
  return t;
}

}  // namespace substar
