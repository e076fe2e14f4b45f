#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "substar/chordal.hpp"
#include "substar/forbidden.hpp"
#include "substar/representation.hpp"

namespace substar {

/// Raised when proof-derived bookkeeping fails to assemble a verified object;
/// callers fall back to the exhaustive oracle.
class InternalDefectError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground truth: first clique tree in which every hosted subtree is a star,
/// if any. Requires chordal, connected input.
std::optional<SubstarRepresentation> substar_oracle(const Graph& g);

/// Component-wise oracle decision for arbitrary chordal graphs.
bool is_substar_graph(const Graph& g);

/// A neighbor q of q2 other than q3 is good if some vertex lies in Q and Q2
/// but not in Q3.
bool is_good_neighbor(const TreeRepresentation& t, int q, int q2, int q3);

/// Rewire every node of s from q2 to q3. The result is checked to still be a
/// tree; it may no longer be a valid representation for every vertex.
TreeRepresentation switch_nodes(const TreeRepresentation& t, const std::vector<int>& s, int q2,
                                int q3);

/// The proof object blocking star-ification on one side of the middle edge:
/// vertices w_0..w_k (w_0 = z) and distinct q2-neighbors q^1..q^k.
struct Construction {
  bool mirrored = false;  // built with q2 and q3 swapped
  int order = 0;          // k
  int q2 = -1, q3 = -1;   // middle edge, original orientation
  std::vector<int> chain_vertices;  // w_0..w_k
  std::vector<int> chain_nodes;     // q^1..q^k

  bool valid_for(const TreeRepresentation& t) const;
};

/// One level of the switching cascade.
struct CascadeLevel {
  std::vector<int> switched;                             // V_i
  std::vector<int> increased;                            // V_i'
  std::vector<std::pair<int, int>> problem_vertices;     // (q in V_i', x_q)
};

struct CascadeState {
  int q2 = -1, q3 = -1;  // effective middle orientation for this run
  std::vector<CascadeLevel> levels;
  TreeRepresentation current;
};

using CascadeOutcome = std::variant<Construction, TreeRepresentation>;

/// Run the proof's switching cascade for vertex z whose subtree has diameter
/// 3 with middle edge q2q3. Returns either a verified Construction (a good
/// node appeared in some V_k) or a repaired representation in which f(z) is a
/// star and no subtree diameter exceeds its input value. The mirrored flag
/// swaps the roles of q2 and q3. Throws InternalDefectError when verification
/// of either outcome fails.
CascadeOutcome run_cascade(const Graph& g, const TreeRepresentation& t, int z, int q2, int q3,
                           bool mirrored, CascadeState* trace = nullptr);

/// Assemble the forbidden induced subgraph implied by a construction of order
/// k and a mirrored construction of order l: H1/H2 when k = l = 1, H3^{k+l}
/// otherwise. The returned witness is verified; throws InternalDefectError if
/// no verifiable assembly exists.
ForbiddenWitness extract_witness(const Graph& g, const TreeRepresentation& t,
                                 const Construction& plain, const Construction& mirrored);

enum class SwitchStatus { Substar, Forbidden, Exhausted };

struct SwitchResult {
  SwitchStatus status = SwitchStatus::Exhausted;
  std::optional<SubstarRepresentation> representation;
  std::optional<ForbiddenWitness> witness;
  long steps = 0;
  std::string note;  // set when the search bailed out (why)
};

/// Theorem-driven search: repeatedly repair diameter-3 subtrees by cascading
/// switches; two blocked cascades on the same middle edge yield a forbidden
/// witness. step_limit <= 0 selects the default 10 * n * (clique count).
SwitchResult switching_search(const Graph& g, long step_limit = 0);

/// Per-component substar representations, node sets in host vertex ids.
struct SubstarCertificate {
  std::vector<TreeRepresentation> components;
};

using Certificate = std::variant<SubstarCertificate, ForbiddenWitness, ChordlessCycleWitness>;

/// Total classification: NotChordal with a cycle, Forbidden with an induced
/// family member, or Substar with per-component representations.
Certificate recognize(const Graph& g);

bool certificate_valid(const Graph& g, const Certificate& c);

// Text form: "RESULT substar|not-substar|not-chordal" followed by REP
// block(s), a WITNESS line, or a CYCLE line.
std::string format_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

}  // namespace substar
