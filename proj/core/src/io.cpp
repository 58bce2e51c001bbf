#include "normdepth/io.hpp"

#include <fstream>
#include <sstream>

namespace normdepth {
namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

Mask index_set(const Json& list, int limit, const char* what) {
  if (!list.is_array()) fail(std::string(what) + " must be an array of indices");
  Mask m = 0;
  for (const auto& v : list) {
    const int i = as_int(v, what);
    if (i < 1 || i > limit) {
      fail(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
           std::to_string(limit));
    }
    m |= Mask{1} << (i - 1);
  }
  return m;
}

InputIdeal from_graph(Graph g) {
  try {
    MonomialIdeal ideal = edge_ideal(g);
    return {std::move(ideal), std::move(g)};
  } catch (const std::invalid_argument& ex) {
    fail(ex.what());
  }
}

Json index_list(Mask m) { return Monomial(m).indices(); }

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

}  // namespace

MonomialIdeal ideal_from_json(const Json& j) {
  const Json& gens = field(j, "gens");
  if (!gens.is_array()) fail("\"gens\" must be an array");
  if (auto vars = j.find("vars"); vars != j.end() && !vars->is_array()) {
    fail("\"vars\" must be an array");
  }
  std::vector<Monomial> monomials;
  for (const auto& g : gens) {
    const Mask m = index_set(g, kMaxVariables, "generator");
    if (m == 0) fail("generator 1 makes the ideal the unit ideal");
    monomials.emplace_back(m);
  }
  return compacted(minimalize(monomials));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json vars = Json::array();
  for (int i = 1; i <= ideal.ambient(); ++i) vars.push_back("x" + std::to_string(i));
  Json gens = Json::array();
  for (Monomial g : ideal.generators()) gens.push_back(g.indices());
  return Json{{"vars", vars}, {"gens", gens}};
}

Graph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "\"n\"");
  if (n < 0 || n > kMaxVariables) fail("vertex count outside 0..64");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) fail("\"edges\" must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) fail("each edge must be a pair [u, v]");
    list.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  try {
    return Graph(n, list);
  } catch (const std::invalid_argument& ex) {
    fail(ex.what());
  }
}

Json graph_to_json(const Graph& graph) {
  Json edges = Json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return Json{{"n", graph.vertex_count()}, {"edges", edges}};
}

Graph graph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    std::vector<long long> values;
    long long v;
    while (row >> v) values.push_back(v);
    row.clear();
    std::string rest;
    if (row >> rest) fail("line " + std::to_string(line_no) + ": unexpected \"" + rest + "\"");
    const std::size_t want = n ? 2 : 1;
    if (values.size() != want) {
      fail("line " + std::to_string(line_no) + ": expected " +
           (n ? std::string("an edge \"u v\"") : std::string("the vertex count")));
    }
    if (!n) {
      if (values[0] < 0 || values[0] > kMaxVariables) fail("vertex count outside 0..64");
      n = static_cast<int>(values[0]);
    } else {
      if (values[0] < 1 || values[1] < 1 || values[0] > *n || values[1] > *n) {
        fail("line " + std::to_string(line_no) + ": endpoint outside 1.." +
             std::to_string(*n));
      }
      edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    }
  }
  if (!n) fail("empty graph file");
  try {
    return Graph(*n, edges);
  } catch (const std::invalid_argument& ex) {
    fail(ex.what());
  }
}

std::string graph_to_text(const Graph& graph) {
  std::ostringstream os;
  os << graph.vertex_count() << '\n';
  for (auto [u, v] : graph.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

SimplicialComplex complex_from_json(const Json& j) {
  const int n = as_int(field(j, "vertices"), "\"vertices\"");
  if (n < 0 || n > kMaxVariables) fail("vertex count outside 0..64");
  const Json& facets = field(j, "facets");
  if (!facets.is_array()) fail("\"facets\" must be an array");
  std::vector<Mask> list;
  for (const auto& f : facets) list.push_back(index_set(f, n, "facet"));
  return SimplicialComplex(n, std::move(list));
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (Mask f : complex.facets()) facets.push_back(index_list(f));
  return Json{{"vertices", complex.vertex_count()}, {"facets", facets}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable table(as_int(field(j, "n"), "\"n\""));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail("\"entries\" must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) fail("each entry must be [i, j, rank]");
    const int rank = as_int(e[2], "rank");
    if (rank < 0) fail("negative Betti number");
    table.add(as_int(e[0], "i"), as_int(e[1], "j"), rank);
  }
  return table;
}

Json betti_to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, v] : table.entries()) entries.push_back({key.first, key.second, v});
  return Json{{"n", table.ambient()}, {"entries", entries}};
}

GProfile profile_from_json(const Json& j) {
  GProfile p;
  p.nu = as_int(field(j, "nu"), "\"nu\"");
  p.d = int_list(field(j, "d"), "\"d\"");
  p.depth = int_list(field(j, "depth"), "\"depth\"");
  p.g = int_list(field(j, "g"), "\"g\"");
  const auto nu = static_cast<std::size_t>(p.nu);
  if (p.d.size() != nu || p.depth.size() != nu || p.g.size() != nu) {
    fail("profile arrays must all have nu entries");
  }
  return p;
}

Json profile_to_json(const GProfile& profile) {
  return Json{{"nu", profile.nu}, {"d", profile.d}, {"depth", profile.depth}, {"g", profile.g}};
}

InputIdeal parse_input(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& ex) {
      fail(std::string("invalid JSON: ") + ex.what());
    }
    if (j.contains("gens")) return {ideal_from_json(j), std::nullopt};
    if (j.contains("edges")) {
      return from_graph(graph_from_json(j));
    }
    fail("JSON input has neither \"gens\" nor \"edges\"");
  }
  return from_graph(graph_from_text(text));
}

InputIdeal read_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace normdepth
