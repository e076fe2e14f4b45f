#include "substar/forbidden.hpp"

#include <algorithm>
#include <sstream>

namespace substar {

std::string family_name(FamilyTag tag) {
  switch (tag.family) {
    case Family::H1: return "H1";
    case Family::H2A: return "H2A";
    case Family::H2B: return "H2B";
    case Family::H2C: return "H2C";
    case Family::H3: return "H3";
  }
  throw std::invalid_argument("unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "H1") return Family::H1;
  if (name == "H2A") return Family::H2A;
  if (name == "H2B") return Family::H2B;
  if (name == "H2C") return Family::H2C;
  if (name == "H3") return Family::H3;
  return std::nullopt;
}

namespace {

// H1 indices: w=0 x=1 a=2 y=3 b=4 z=5.
Graph make_h1() {
  return Graph::from_edges(6, {{2, 1}, {1, 0}, {0, 3}, {3, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

// H2 indices: u=0 x=1 a=2 v=3 y=4 b=5 z=6.
Graph make_h2(Family variant) {
  Graph g = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
  if (variant == Family::H2B) {
    g.add_edge(0, 3);  // uv
    g.add_edge(3, 1);  // vx
    g.add_edge(3, 2);  // va
  } else if (variant == Family::H2C) {
    g.add_edge(0, 3);
    g.add_edge(0, 4);  // uy
    g.add_edge(0, 5);  // ub
    g.add_edge(3, 1);
    g.add_edge(3, 2);
  }
  return g;
}

// H3^k indices: u=0, v=1, c_i=1+i for i in [k-1], a_j=k+j for j in [k].
Graph make_h3(int k) {
  if (k < 3) throw std::invalid_argument("H3 requires k >= 3");
  int n = 2 * k + 1;
  if (n > kMaxVertices) throw std::invalid_argument("H3 order exceeds 64 vertices");
  Graph g(n);
  std::vector<int> core{0, 1};
  for (int i = 1; i < k; ++i) core.push_back(1 + i);
  for (std::size_t a = 0; a < core.size(); ++a)
    for (std::size_t b = a + 1; b < core.size(); ++b)
      if (!(core[a] == 0 && core[b] == 1)) g.add_edge(core[a], core[b]);
  g.add_edge(0, k + 1);      // u a_1
  g.add_edge(1, k + k);      // v a_k
  for (int i = 1; i < k; ++i) {
    g.add_edge(k + i, 1 + i);      // a_i c_i
    g.add_edge(1 + i, k + i + 1);  // c_i a_{i+1}
  }
  return g;
}

}  // namespace

Graph make_forbidden(FamilyTag tag) {
  switch (tag.family) {
    case Family::H1: return make_h1();
    case Family::H2A:
    case Family::H2B:
    case Family::H2C: return make_h2(tag.family);
    case Family::H3: return make_h3(tag.k);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<std::string> family_role_names(FamilyTag tag) {
  switch (tag.family) {
    case Family::H1: return {"w", "x", "a", "y", "b", "z"};
    case Family::H2A:
    case Family::H2B:
    case Family::H2C: return {"u", "x", "a", "v", "y", "b", "z"};
    case Family::H3: {
      if (tag.k < 3) throw std::invalid_argument("H3 requires k >= 3");
      std::vector<std::string> names{"u", "v"};
      for (int i = 1; i < tag.k; ++i) names.push_back("c" + std::to_string(i));
      for (int j = 1; j <= tag.k; ++j) names.push_back("a" + std::to_string(j));
      return names;
    }
  }
  throw std::invalid_argument("unknown family");
}

Embedding ForbiddenWitness::embedding() const {
  std::vector<std::string> names = family_role_names(family);
  Embedding e;
  e.pattern_order = static_cast<int>(names.size());
  for (const std::string& name : names) {
    auto it = roles.find(name);
    e.map.push_back(it == roles.end() ? -1 : it->second);
  }
  return e;
}

bool witness_valid(const Graph& g, const ForbiddenWitness& w) {
  std::vector<std::string> names = family_role_names(w.family);
  if (w.roles.size() != names.size()) return false;
  return w.embedding().valid_for(g, make_forbidden(w.family));
}

std::optional<ForbiddenWitness> find_forbidden(const Graph& g) {
  std::vector<FamilyTag> order{{Family::H1, 0}, {Family::H2A, 0}, {Family::H2B, 0}, {Family::H2C, 0}};
  for (int k = 3; 2 * k + 1 <= g.order(); ++k) order.push_back({Family::H3, k});
  for (FamilyTag tag : order) {
    Graph pattern = make_forbidden(tag);
    if (auto embedding = find_induced_embedding(g, pattern)) {
      ForbiddenWitness w{tag, {}};
      std::vector<std::string> names = family_role_names(tag);
      for (std::size_t i = 0; i < names.size(); ++i) w.roles[names[i]] = embedding->map[i];
      return w;
    }
  }
  return std::nullopt;
}

std::string format_witness(const ForbiddenWitness& w) {
  std::ostringstream out;
  out << "WITNESS family=" << family_name(w.family);
  if (w.family.family == Family::H3) out << " k=" << w.family.k;
  out << " roles=";
  bool first = true;
  for (const auto& [name, vertex] : w.roles) {
    if (!first) out << ',';
    out << name << '=' << vertex;
    first = false;
  }
  return out.str();
}

ForbiddenWitness parse_witness(std::string_view text) {
  std::string line(text);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  std::istringstream in(line);
  std::string token;
  if (!(in >> token) || token != "WITNESS") throw ParseError("expected WITNESS line", 0);

  ForbiddenWitness w;
  bool have_family = false, have_roles = false;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("malformed WITNESS field", 0);
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "family") {
      auto fam = family_from_name(value);
      if (!fam) throw ParseError("unknown witness family", 0);
      w.family.family = *fam;
      have_family = true;
    } else if (key == "k") {
      w.family.k = std::stoi(value);
    } else if (key == "roles") {
      std::replace(value.begin(), value.end(), ',', ' ');
      std::istringstream rs(value);
      std::string pair;
      while (rs >> pair) {
        auto req = pair.find('=');
        if (req == std::string::npos) throw ParseError("malformed role binding", 0);
        w.roles[pair.substr(0, req)] = std::stoi(pair.substr(req + 1));
      }
      have_roles = true;
    } else {
      throw ParseError("unknown WITNESS field", 0);
    }
  }
  if (!have_family || !have_roles) throw ParseError("incomplete WITNESS line", 0);
  return w;
}

}  // namespace substar
