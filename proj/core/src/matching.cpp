#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "normdepth/betti.hpp"
#include "normdepth/graph.hpp"

namespace normdepth {
namespace {

Mask edge_mask(const Edge& e) { return vertex_bit(e.first) | vertex_bit(e.second); }

int lowest_vertex(Mask m) { return std::countr_zero(m) + 1; }

void collect_matchings(const std::vector<Edge>& edges, std::size_t from, int remaining,
                       Mask used, std::vector<Edge>& current,
                       std::vector<Matching>& out) {
  if (remaining == 0) {
    out.push_back(Matching{current});
    return;
  }
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Mask m = edge_mask(edges[i]);
    if ((m & used) != 0) continue;
    current.push_back(edges[i]);
    collect_matchings(edges, i + 1, remaining - 1, used | m, current, out);
    current.pop_back();
  }
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& graph) : graph_(graph) {}

  int run() {
    search(graph_.all_vertices(), 0);
    return best_;
  }

 private:
  void search(Mask open, int count) {
    // Drop vertices with no open neighbour; they can never be matched.
    Mask live = 0;
    for (Mask b = open; b != 0; b &= b - 1) {
      const int v = lowest_vertex(b);
      if ((graph_.neighbors(v) & open) != 0) live |= vertex_bit(v);
    }
    best_ = std::max(best_, count);
    if (count + std::popcount(live) / 2 <= best_) return;
    const int v = lowest_vertex(live);
    const Mask rest = live & ~vertex_bit(v);
    for (Mask b = graph_.neighbors(v) & rest; b != 0; b &= b - 1) {
      search(rest & ~vertex_bit(lowest_vertex(b)), count + 1);
    }
    search(rest, count);
  }

  const Graph& graph_;
  int best_ = 0;
};

void validate_order(const Graph& graph, int k, std::span<const Monomial> order) {
  const MonomialIdeal power = squarefree_power(edge_ideal(graph), k);
  std::vector<Mask> expected;
  for (Monomial g : power.generators()) expected.push_back(g.bits());
  std::vector<Mask> given;
  for (Monomial g : order) given.push_back(g.bits());
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given) {
    throw std::invalid_argument("order is not a permutation of the minimal "
                                "generators of the squarefree power");
  }
  if (!has_linear_quotients(order)) {
    throw std::invalid_argument("order does not have linear quotients");
  }
}

// First k-matching (in enumeration order) covering exactly each vertex set.
std::map<Mask, Matching> matchings_by_support(const Graph& graph, int k) {
  std::map<Mask, Matching> out;
  for (auto& m : enumerate_matchings(graph, k)) out.try_emplace(m.vertices(), std::move(m));
  return out;
}

std::optional<ZeroDepthWitness> check_at(const Graph& graph,
                                         std::span<const Monomial> order,
                                         const Matching& matching,
                                         std::size_t index) {
  if (index < 2 || index > order.size()) return std::nullopt;
  const Mask support = order[index - 1].bits();
  if (matching.vertices() != support) return std::nullopt;
  if (!is_dominating_matching(graph, matching)) return std::nullopt;
  ZeroDepthWitness witness{matching, index, {}};
  for (Mask b = graph.all_vertices() & ~support; b != 0; b &= b - 1) {
    const int t = lowest_vertex(b);
    const Mask allowed = support | vertex_bit(t);
    std::size_t found = 0;
    for (std::size_t m = 1; m < index; ++m) {
      if ((order[m - 1].bits() & ~allowed) == 0) {
        found = m;
        break;
      }
    }
    if (found == 0) return std::nullopt;
    witness.cover.emplace_back(t, found);
  }
  return witness;
}

}  // namespace

Mask Matching::vertices() const noexcept {
  Mask m = 0;
  for (const auto& e : edges) m |= edge_mask(e);
  return m;
}

std::string Matching::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != 0) os << ',';
    os << '{' << edges[i].first << ',' << edges[i].second << '}';
  }
  os << '}';
  return os.str();
}

bool is_matching_of(const Graph& graph, const Matching& matching) {
  Mask used = 0;
  for (const auto& [u, v] : matching.edges) {
    if (!graph.adjacent(u, v)) return false;
    const Mask m = vertex_bit(u) | vertex_bit(v);
    if ((m & used) != 0) return false;
    used |= m;
  }
  return true;
}

int matching_number(const Graph& graph) { return MatchingSearch(graph).run(); }

std::vector<Matching> enumerate_matchings(const Graph& graph, int k) {
  if (k < 0) throw std::invalid_argument("matching size must be nonnegative");
  std::vector<Matching> out;
  std::vector<Edge> current;
  collect_matchings(graph.edges(), 0, k, 0, current, out);
  return out;
}

SimplicialComplex gamma_complex(const Graph& graph, int k) {
  const int nu = matching_number(graph);
  if (k < 1 || k > nu) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside 1.." +
                            std::to_string(nu));
  }
  std::vector<Mask> nonfaces;
  for (const auto& m : enumerate_matchings(graph, k)) nonfaces.push_back(m.vertices());
  std::sort(nonfaces.begin(), nonfaces.end());
  nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
  return complex_from_nonfaces(graph.vertex_count(), nonfaces);
}

bool is_dominating_matching(const Graph& graph, const Matching& matching) {
  if (!is_matching_of(graph, matching)) {
    throw std::invalid_argument(matching.to_string() + " is not a matching of the graph");
  }
  const Mask covered = matching.vertices();
  Mask dominated = covered;
  for (Mask b = covered; b != 0; b &= b - 1) dominated |= graph.neighbors(lowest_vertex(b));
  return (graph.all_vertices() & ~dominated) == 0;
}

CutSplit complement_cut_split(const Graph& graph, int cut_vertex,
                              std::optional<int> first_side) {
  if (auto v = graph.isolated_vertex()) {
    throw std::invalid_argument("graph has isolated vertex " + std::to_string(*v));
  }
  const Graph co = complement(graph);
  if (!is_chordal(co)) throw std::invalid_argument("complement is not chordal");
  if (!is_connected(co)) throw std::invalid_argument("complement is not connected");
  const auto cuts = cut_vertices(co);
  if (std::find(cuts.begin(), cuts.end(), cut_vertex) == cuts.end()) {
    throw std::invalid_argument("vertex " + std::to_string(cut_vertex) +
                                " is not a cut vertex of the complement");
  }
  const auto parts =
      connected_components(co, graph.all_vertices() & ~vertex_bit(cut_vertex));
  CutSplit split;
  split.cut_vertex = cut_vertex;
  std::size_t chosen = 0;
  if (first_side) {
    const auto it = std::find_if(parts.begin(), parts.end(), [&](Mask p) {
      return *first_side >= 1 && *first_side <= graph.vertex_count() &&
             (p & vertex_bit(*first_side)) != 0;
    });
    if (it == parts.end()) {
      throw std::invalid_argument("vertex " + std::to_string(*first_side) +
                                  " lies in no component of complement - " +
                                  std::to_string(cut_vertex));
    }
    chosen = static_cast<std::size_t>(it - parts.begin());
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    (i == chosen ? split.first : split.second) |= parts[i];
  }
  return split;
}

bool is_special_matching(const Graph& graph, const CutSplit& split,
                         const Matching& matching) {
  if (matching.size() < 2 || !is_matching_of(graph, matching)) return false;
  const auto& [a, b] = matching.edges[0];
  if (a != split.cut_vertex && b != split.cut_vertex) return false;
  const Mask e2 = edge_mask(matching.edges[1]);
  return std::popcount(e2 & split.first) == 1 && std::popcount(e2 & split.second) == 1;
}

Matching find_special_matching(const Graph& graph, const CutSplit& split, int k) {
  const int nu = matching_number(graph);
  if (k < 2 || k > nu) {
    throw std::invalid_argument("special matchings need 2 <= k <= " +
                                std::to_string(nu) + ", got " + std::to_string(k));
  }
  const int v = split.cut_vertex;
  const Mask nv = graph.neighbors(v);
  if (nv == 0) throw std::invalid_argument("cut vertex is isolated in the graph");

  std::vector<Edge> m = enumerate_matchings(graph, k).front().edges;
  auto covered = [&] {
    Mask c = 0;
    for (const auto& e : m) c |= edge_mask(e);
    return c;
  };

  // Route v into the first edge.
  auto with_v = std::find_if(m.begin(), m.end(), [&](const Edge& e) {
    return e.first == v || e.second == v;
  });
  if (with_v != m.end()) {
    const int j = with_v->first == v ? with_v->second : with_v->first;
    m.erase(with_v);
    m.insert(m.begin(), Edge{v, j});
  } else {
    auto touching = std::find_if(m.begin(), m.end(), [&](const Edge& e) {
      return (nv & edge_mask(e)) != 0;
    });
    if (touching != m.end()) {
      // Replace {j, w} by {v, j}.
      const int j = (nv & vertex_bit(touching->first)) != 0 ? touching->first
                                                             : touching->second;
      m.erase(touching);
      m.insert(m.begin(), Edge{v, j});
    } else {
      m.front() = Edge{v, lowest_vertex(nv)};
    }
  }

  // Make the second edge cross between the two sides.
  auto side = [&](int x) { return (split.first & vertex_bit(x)) != 0 ? 1 : 2; };
  auto oriented = [&](int x, int y) { return side(x) == 1 ? Edge{x, y} : Edge{y, x}; };
  for (std::size_t q = 1; q < m.size(); ++q) {
    if (side(m[q].first) != side(m[q].second)) {
      std::swap(m[1], m[q]);
      m[1] = oriented(m[1].first, m[1].second);
      return Matching{m};
    }
  }
  std::size_t in_first = 0, in_second = 0;
  for (std::size_t q = 1; q < m.size(); ++q) {
    (side(m[q].first) == 1 ? in_first : in_second) = q;
  }
  if (in_first != 0 && in_second != 0) {
    // Cross-swap {a1,a2} in the first side with {b1,b2} in the second.
    const auto [a1, a2] = m[in_first];
    const auto [b1, b2] = m[in_second];
    m[in_first] = Edge{a1, b2};
    m[in_second] = Edge{a2, b1};
    std::swap(m[1], m[in_first]);
    return Matching{m};
  }
  // All edges after the first lie on one side; the other side has a vertex
  // outside V(M) because each side holds a complement-neighbour of v, which
  // is not the partner of v.
  const bool on_first = in_first != 0;
  const Mask other = (on_first ? split.second : split.first) & ~covered();
  if (other == 0) {
    throw std::logic_error("special matching exchange found no free vertex");
  }
  const int fresh = lowest_vertex(other);
  m[1] = oriented(m[1].first, fresh);
  return Matching{m};
}

std::optional<ZeroDepthWitness> zero_depth_witness(const Graph& graph, int k,
                                                   std::span<const Monomial> order) {
  validate_order(graph, k, order);
  const auto by_support = matchings_by_support(graph, k);
  for (std::size_t i = order.size(); i >= 2; --i) {
    const auto it = by_support.find(order[i - 1].bits());
    if (it == by_support.end()) continue;
    if (auto w = check_at(graph, order, it->second, i)) return w;
  }
  return std::nullopt;
}

std::optional<ZeroDepthWitness> check_zero_depth_witness(
    const Graph& graph, int k, std::span<const Monomial> order,
    const Matching& matching, std::size_t index) {
  validate_order(graph, k, order);
  if (static_cast<int>(matching.size()) != k || !is_matching_of(graph, matching)) {
    return std::nullopt;
  }
  return check_at(graph, order, matching, index);
}

std::optional<ZeroDepthWitness> special_zero_depth_witness(
    const Graph& graph, const CutSplit& split, int k,
    std::span<const Monomial> order) {
  validate_order(graph, k, order);
  std::map<Mask, std::vector<Matching>> by_support;
  for (auto& m : enumerate_matchings(graph, k)) by_support[m.vertices()].push_back(std::move(m));
  for (std::size_t i = order.size(); i >= 1; --i) {
    const auto it = by_support.find(order[i - 1].bits());
    if (it == by_support.end()) continue;
    for (const auto& candidate : it->second) {
      // Reorder into special form if possible: {v, j} first, then a crossing edge.
      std::vector<Edge> edges = candidate.edges;
      auto first = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
        return e.first == split.cut_vertex || e.second == split.cut_vertex;
      });
      if (first == edges.end()) continue;
      std::iter_swap(edges.begin(), first);
      auto cross = std::find_if(edges.begin() + 1, edges.end(), [&](const Edge& e) {
        const Mask em = edge_mask(e);
        return std::popcount(em & split.first) == 1 && std::popcount(em & split.second) == 1;
      });
      if (cross == edges.end()) continue;
      std::iter_swap(edges.begin() + 1, cross);
      Matching special{edges};
      if (!is_special_matching(graph, split, special)) continue;
      return check_at(graph, order, special, i);
    }
  }
  return std::nullopt;
}

}  // namespace normdepth
