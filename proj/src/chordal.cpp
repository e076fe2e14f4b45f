#include "substar/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace substar {

bool ChordlessCycleWitness::valid_for(const Graph& g) const {
  std::size_t k = cycle.size();
  if (k < 4) return false;
  VertexSet seen;
  for (int v : cycle) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& peo) {
  int n = g.order();
  if (static_cast<int>(peo.order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = peo.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = i;
  }
  for (int i = 0; i < n; ++i) {
    int v = peo.order[static_cast<std::size_t>(i)];
    VertexSet later;
    for (int u : g.neighbors(v).to_vector())
      if (pos[static_cast<std::size_t>(u)] > i) later.insert(u);
    for (int a : later.to_vector())
      if (!((later - VertexSet::of({a})) - g.neighbors(a)).empty()) return false;
  }
  return true;
}

namespace {

std::vector<int> mcs_elimination_order(const Graph& g) {
  int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> picked(static_cast<std::size_t>(n), false);
  std::vector<int> selection;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!picked[static_cast<std::size_t>(v)] &&
          (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    picked[static_cast<std::size_t>(best)] = true;
    selection.push_back(best);
    for (int u : g.neighbors(best).to_vector())
      if (!picked[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
  }
  std::reverse(selection.begin(), selection.end());
  return selection;
}

// Shortest a-b path avoiding N[v] \ {a,b}; together with v this closes a
// chordless cycle of length >= 4.
std::optional<std::vector<int>> cycle_through(const Graph& g, int v, int a, int b) {
  VertexSet blocked = (g.neighbors(v) | VertexSet::of({v})) - VertexSet::of({a, b});
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{a};
  VertexSet seen = VertexSet::of({a});
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == b) {
      std::vector<int> cycle{v};
      std::vector<int> path;
      for (int y = b; y != -1; y = parent[static_cast<std::size_t>(y)]) path.push_back(y);
      std::reverse(path.begin(), path.end());
      cycle.insert(cycle.end(), path.begin(), path.end());
      return cycle;
    }
    for (int y : ((g.neighbors(x) - blocked) - seen).to_vector()) {
      seen.insert(y);
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

ChordlessCycleWitness find_chordless_cycle(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nbrs = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        if (auto cycle = cycle_through(g, v, nbrs[i], nbrs[j]))
          return ChordlessCycleWitness{*cycle};
      }
  }
  throw std::runtime_error("no chordless cycle found in non-chordal graph");
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  EliminationOrder peo{mcs_elimination_order(g)};
  if (is_perfect_elimination_order(g, peo)) return peo;
  ChordlessCycleWitness witness = find_chordless_cycle(g);
  if (!witness.valid_for(g)) throw std::runtime_error("extracted cycle failed validation");
  return witness;
}

CliqueSet maximal_cliques(const Graph& g, const EliminationOrder& peo) {
  if (!is_perfect_elimination_order(g, peo))
    throw std::invalid_argument("not a perfect elimination order of the graph");
  int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo.order[static_cast<std::size_t>(i)])] = i;

  std::vector<VertexSet> candidates;
  for (int v = 0; v < n; ++v) {
    VertexSet c = VertexSet::of({v});
    for (int u : g.neighbors(v).to_vector())
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) c.insert(u);
    candidates.push_back(c);
  }
  std::vector<VertexSet> result;
  for (const VertexSet& c : candidates) {
    bool maximal = true;
    for (const VertexSet& d : candidates)
      if (c != d && c.subset_of(d)) {
        maximal = false;
        break;
      }
    if (maximal && std::find(result.begin(), result.end(), c) == result.end()) result.push_back(c);
  }
  std::sort(result.begin(), result.end());

  for (const VertexSet& q : result)
    for (int w : (g.vertices() - q).to_vector())
      if (q.subset_of(g.neighbors(w))) throw std::runtime_error("clique candidate not maximal");
  return CliqueSet{result};
}

namespace {

struct CliqueGraph {
  std::vector<VertexSet> cliques;
  std::vector<std::pair<int, int>> edges;  // intersecting pairs, (i<j) sorted
  std::vector<int> weights;                // |intersection| per edge
};

CliqueGraph clique_intersection_graph(const Graph& g) {
  auto chordality = is_chordal(g);
  auto* peo = std::get_if<EliminationOrder>(&chordality);
  if (peo == nullptr) throw std::invalid_argument("graph is not chordal");
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
  if (g.order() == 0) throw std::invalid_argument("graph is empty");
  CliqueGraph cg;
  cg.cliques = maximal_cliques(g, *peo).cliques;
  int m = static_cast<int>(cg.cliques.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int w = (cg.cliques[static_cast<std::size_t>(i)] & cg.cliques[static_cast<std::size_t>(j)]).size();
      if (w > 0) {
        cg.edges.emplace_back(i, j);
        cg.weights.push_back(w);
      }
    }
  return cg;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

bool coherent(const Graph& g, const TreeRepresentation& t) {
  auto adj = t.adjacency();
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t mask = t.hosting_mask(v);
    if (mask == 0) return false;
    int start = std::countr_zero(mask);
    std::uint64_t seen = 1ULL << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)])
        if (((mask >> y) & 1) != 0 && ((seen >> y) & 1) == 0) {
          seen |= 1ULL << y;
          stack.push_back(y);
        }
    }
    if (seen != mask) return false;
  }
  return true;
}

}  // namespace

TreeRepresentation build_clique_tree(const Graph& g) {
  CliqueGraph cg = clique_intersection_graph(g);
  int m = static_cast<int>(cg.cliques.size());
  TreeRepresentation t;
  t.host_order = g.order();
  t.nodes = cg.cliques;
  if (m > 1) {
    std::vector<std::size_t> idx(cg.edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (cg.weights[a] != cg.weights[b]) return cg.weights[a] > cg.weights[b];
      return cg.edges[a] < cg.edges[b];
    });
    UnionFind uf(m);
    for (std::size_t e : idx)
      if (uf.unite(cg.edges[e].first, cg.edges[e].second)) t.tree_edges.push_back(cg.edges[e]);
  }
  t.normalize_edges();
  if (!is_valid_clique_tree(g, t))
    throw std::runtime_error("maximum-weight spanning tree is not a clique tree");
  return t;
}

void for_each_clique_tree(const Graph& g,
                          const std::function<bool(const TreeRepresentation&)>& visit) {
  CliqueGraph cg = clique_intersection_graph(g);
  int m = static_cast<int>(cg.cliques.size());
  if (m == 1) {
    TreeRepresentation t;
    t.host_order = g.order();
    t.nodes = cg.cliques;
    visit(t);
    return;
  }

  // Backtracking over edge inclusion/exclusion with connectivity pruning.
  std::vector<std::pair<int, int>> chosen;
  bool stopped = false;

  auto feasible = [&](std::size_t next) {
    UnionFind uf(m);
    int comps = m;
    for (auto [a, b] : chosen)
      if (uf.unite(a, b)) --comps;
    for (std::size_t e = next; e < cg.edges.size(); ++e)
      if (uf.unite(cg.edges[e].first, cg.edges[e].second)) --comps;
    return comps == 1;
  };

  std::function<void(std::size_t, UnionFind)> walk = [&](std::size_t next, UnionFind uf) {
    if (stopped) return;
    if (static_cast<int>(chosen.size()) == m - 1) {
      TreeRepresentation t;
      t.host_order = g.order();
      t.nodes = cg.cliques;
      t.tree_edges = chosen;
      t.normalize_edges();
      if (coherent(g, t) && !visit(t)) stopped = true;
      return;
    }
    if (next == cg.edges.size()) return;
    auto [a, b] = cg.edges[next];
    if (uf.find(a) != uf.find(b)) {
      UnionFind with = uf;
      with.unite(a, b);
      chosen.push_back(cg.edges[next]);
      walk(next + 1, std::move(with));
      chosen.pop_back();
    }
    if (stopped) return;
    if (feasible(next + 1)) walk(next + 1, uf);
  };
  walk(0, UnionFind(m));
}

std::vector<TreeRepresentation> enumerate_clique_trees(const Graph& g) {
  std::vector<TreeRepresentation> out;
  for_each_clique_tree(g, [&](const TreeRepresentation& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool is_valid_clique_tree(const Graph& g, const TreeRepresentation& t) {
  if (t.host_order != g.order()) return false;
  auto chordality = is_chordal(g);
  auto* peo = std::get_if<EliminationOrder>(&chordality);
  if (peo == nullptr) return false;
  std::vector<VertexSet> cliques = maximal_cliques(g, *peo).cliques;
  std::vector<VertexSet> nodes = t.nodes;
  std::sort(nodes.begin(), nodes.end());
  if (nodes != cliques) return false;
  if (!t.is_tree()) return false;
  return coherent(g, t);
}

}  // namespace substar
