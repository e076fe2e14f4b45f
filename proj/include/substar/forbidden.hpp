#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "substar/graph.hpp"

namespace substar {

enum class Family { H1, H2A, H2B, H2C, H3 };

/// Member of the forbidden family S; k is the order parameter of H3 (k >= 3)
/// and unused otherwise.
struct FamilyTag {
  Family family = Family::H1;
  int k = 0;

  bool operator==(const FamilyTag&) const = default;
};

std::string family_name(FamilyTag tag);
std::optional<Family> family_from_name(std::string_view name);

/// The labeled pattern graph of a family member (Figure-1 vertex labels map
/// to indices via family_role_names).
Graph make_forbidden(FamilyTag tag);

/// Role name of each pattern vertex, in pattern index order.
std::vector<std::string> family_role_names(FamilyTag tag);

/// Induced occurrence of a family member, with the pattern's role labels
/// mapped to host vertices.
struct ForbiddenWitness {
  FamilyTag family;
  std::map<std::string, int> roles;

  Embedding embedding() const;
};

bool witness_valid(const Graph& g, const ForbiddenWitness& w);

/// First induced family member under the fixed order H1, H2A, H2B, H2C,
/// then H3^k for ascending k while 2k+1 <= n.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g);

// "WITNESS family=<name> [k=<k>] roles=<role=vertex,...>" (roles sorted by name)
std::string format_witness(const ForbiddenWitness& w);
ForbiddenWitness parse_witness(std::string_view text);

}  // namespace substar
