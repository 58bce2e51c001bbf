#pragma once

// JSON and text formats for ideals, graphs, complexes, Betti tables and
// profiles.
//
//   ideal    {"vars": ["x1", ...], "gens": [[1,2], [2,3], ...]}
//   graph    text: "n" then one "u v" per line; or {"n": n, "edges": [[u,v], ...]}
//   complex  {"vertices": n, "facets": [[...], ...]}
//   betti    {"n": n, "entries": [[i, j, rank], ...]}
//   profile  {"nu": nu, "d": [...], "depth": [...], "g": [...]}

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#ifdef NORMDEPTH_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "normdepth/betti.hpp"
#include "normdepth/complex.hpp"
#include "normdepth/graph.hpp"
#include "normdepth/monomial.hpp"

namespace normdepth {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimalizes, then relabels so the used variables are x1..x_m. Variables
/// named in "vars" but absent from every generator are dropped.
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& ideal);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& graph);
/// Blank lines and lines starting with '#' are ignored.
Graph graph_from_text(std::string_view text);
std::string graph_to_text(const Graph& graph);

SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& complex);

BettiTable betti_from_json(const Json& j);
Json betti_to_json(const BettiTable& table);

GProfile profile_from_json(const Json& j);
Json profile_to_json(const GProfile& profile);

/// An ideal read from disk, with its graph when the file described one.
struct InputIdeal {
  MonomialIdeal ideal;
  std::optional<Graph> graph;
};

/// Detects the format from the content: a JSON object with "gens" is an
/// ideal, one with "edges" a graph, anything else is read as a graph text
/// file. Throws ParseError on malformed content or an unreadable file.
InputIdeal read_input(const std::filesystem::path& path);
InputIdeal parse_input(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace normdepth
