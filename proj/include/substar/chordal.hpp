#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "substar/graph.hpp"
#include "substar/representation.hpp"

namespace substar {

/// Vertex order in which each vertex's later neighbors form a clique.
struct EliminationOrder {
  std::vector<int> order;
};

/// Induced cycle of length >= 4.
struct ChordlessCycleWitness {
  std::vector<int> cycle;
  bool valid_for(const Graph& g) const;
};

using ChordalityResult = std::variant<EliminationOrder, ChordlessCycleWitness>;

/// Maximum cardinality search followed by verification; on failure a
/// chordless cycle is extracted.
ChordalityResult is_chordal(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& peo);

/// The maximal cliques of a chordal graph, indexed.
struct CliqueSet {
  std::vector<VertexSet> cliques;
};

/// Complete set of maximal cliques via the PEO candidates {v} + later
/// neighbors; throws if peo is not a valid PEO of g.
CliqueSet maximal_cliques(const Graph& g, const EliminationOrder& peo);

/// Canonical clique tree: maximum-weight spanning tree of the clique
/// intersection graph (weight = intersection size). Throws on non-chordal or
/// disconnected input.
TreeRepresentation build_clique_tree(const Graph& g);

/// Visit every clique tree of g (spanning trees of the clique intersection
/// graph satisfying coherence), deterministically; stop early if the visitor
/// returns false.
void for_each_clique_tree(const Graph& g,
                          const std::function<bool(const TreeRepresentation&)>& visit);

std::vector<TreeRepresentation> enumerate_clique_trees(const Graph& g);

/// True iff t's nodes are exactly the maximal cliques of g, its edges form a
/// tree, and every vertex's clique nodes induce a connected subtree.
bool is_valid_clique_tree(const Graph& g, const TreeRepresentation& t);

}  // namespace substar
