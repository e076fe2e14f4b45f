#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "substar/graph.hpp"

namespace substar {

/// Host tree whose nodes carry cliques of a graph, together with the induced
/// hosting map f(v) = set of nodes whose clique contains v (the paper's
/// (T,f)). Host trees are capped at 64 nodes so hosting maps fit a bitmask.
struct TreeRepresentation {
  int host_order = 0;                         // n of the represented graph
  std::vector<VertexSet> nodes;               // clique carried by each tree node
  std::vector<std::pair<int, int>> tree_edges;  // unordered pairs, stored (min,max)

  int node_count() const { return static_cast<int>(nodes.size()); }

  /// Node adjacency lists; node indices must be in range.
  std::vector<std::vector<int>> adjacency() const;

  /// f(v) as a bitmask over node indices.
  std::uint64_t hosting_mask(int vertex) const;

  /// Edges form a tree on the nodes (connected, acyclic, valid indices).
  bool is_tree() const;

  /// Sort edges as (min,max) pairs lexicographically.
  void normalize_edges();

  bool operator==(const TreeRepresentation&) const = default;
};

/// All three representation invariants against g: tree-ness, every hosting
/// set nonempty and connected, and adjacency iff subtree intersection.
bool verify_representation(const Graph& g, const TreeRepresentation& t);

/// Diameter in edges of the induced subtree f(v); 0 for a single node.
/// Throws if f(v) is empty or disconnected.
int subtree_diameter(const TreeRepresentation& t, int vertex);

/// True iff every vertex's hosted subtree has diameter <= 2.
bool is_substar_representation(const TreeRepresentation& t);

/// A representation all of whose hosted subtrees are stars.
struct SubstarRepresentation {
  TreeRepresentation rep;
};

/// Validating constructor: throws unless every subtree has diameter <= 2.
SubstarRepresentation make_substar_representation(TreeRepresentation rep);

/// Contract t to the canonical form whose nodes are in bijection with the
/// maximal cliques of g. Grows each non-maximal node toward the nearest node
/// carrying a containing maximal clique, then contracts paths between
/// duplicate nodes. No vertex's subtree diameter increases.
TreeRepresentation normalize_representation(const Graph& g, const TreeRepresentation& t);

// Textual form:
//   REP n=<n> nodes=<m>
//   NODE <i>: v1,v2,...        (m lines, vertices sorted)
//   EDGE <i> <j>               (m-1 lines, i<j, sorted lexicographically)
std::string format_representation(const TreeRepresentation& t);
TreeRepresentation parse_representation(std::string_view text);

}  // namespace substar
