#pragma once

// Simple graphs on {1..n}, chordality, cut vertices, matchings and the
// complexes and ideals attached to them.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normdepth/complex.hpp"
#include "normdepth/monomial.hpp"

namespace normdepth {

/// Unordered pair stored with first < second.
using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;
  /// Vertices 1..n. Loops and out-of-range endpoints throw
  /// std::invalid_argument; duplicate edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return n_; }
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool adjacent(int u, int v) const noexcept;
  /// Neighbours of v as a vertex mask (bit v-1 for vertex v).
  Mask neighbors(int v) const noexcept { return adjacency_[static_cast<std::size_t>(v)]; }
  Mask all_vertices() const noexcept;
  /// Lowest-index vertex without neighbours.
  std::optional<int> isolated_vertex() const noexcept;

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Mask> adjacency_{Mask{0}};
};

inline constexpr Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

/// One generator x_u x_v per edge. Throws std::invalid_argument naming an
/// isolated vertex, since the ideal would then live in a larger ring than
/// its generators need.
MonomialIdeal edge_ideal(const Graph& graph);

Graph complement(const Graph& graph);

/// Disjoint union with one new edge {n+1, n+2}.
Graph with_disjoint_edge(const Graph& graph);
/// Disjoint union, relabeling the second graph by n1.
Graph disjoint_union(const Graph& first, const Graph& second);

Graph complete_graph(int n);
/// K_{a,b} on parts {1..a} and {a+1..a+b}.
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);

struct ChordalityReport {
  bool chordal = false;
  /// Perfect elimination ordering (first eliminated first) when chordal.
  std::vector<int> elimination_order;
};

/// Maximum cardinality search, then a perfect elimination check of the
/// reversed visit order.
ChordalityReport chordality(const Graph& graph);
inline bool is_chordal(const Graph& graph) { return chordality(graph).chordal; }
inline bool is_cochordal(const Graph& graph) { return is_chordal(complement(graph)); }

/// Components of the subgraph induced on `within`, as vertex masks ordered
/// by lowest vertex.
std::vector<Mask> connected_components(const Graph& graph, Mask within);
std::vector<Mask> connected_components(const Graph& graph);
bool is_connected(const Graph& graph);

/// Articulation points by depth-first low-link. Throws std::invalid_argument
/// if the graph is disconnected.
std::vector<int> cut_vertices(const Graph& graph);

/// Ordered list of pairwise disjoint edges. Order matters only where a
/// distinguished first or second edge is meaningful.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  Mask vertices() const noexcept;
  std::string to_string() const;
  bool operator==(const Matching&) const = default;
};

bool is_matching_of(const Graph& graph, const Matching& matching);

/// Exact maximum matching size by branching on the lowest uncovered vertex.
int matching_number(const Graph& graph);

/// Every k-matching exactly once, as sorted edge lists in lexicographic
/// order.
std::vector<Matching> enumerate_matchings(const Graph& graph, int k);

/// Complex of cliques of `graph`.
SimplicialComplex clique_complex(const Graph& graph);

/// Complex of vertex sets containing no k-matching's vertex set. Throws
/// std::out_of_range unless 1 <= k <= matching_number(graph).
SimplicialComplex gamma_complex(const Graph& graph, int k);

/// Every vertex outside V(M) has a neighbour in V(M). Throws
/// std::invalid_argument if M is not a matching of the graph.
bool is_dominating_matching(const Graph& graph, const Matching& matching);

/// A cut vertex v of the complement together with the two sides: `first` is
/// one component of complement - v, `second` the union of the others.
struct CutSplit {
  int cut_vertex = 0;
  Mask first = 0;
  Mask second = 0;
};

/// Validates that the complement is chordal and connected with cut vertex
/// `cut_vertex`, and that the graph has no isolated vertex. `first_side`
/// selects the component by any vertex it contains; by default the
/// component with the lowest vertex. Throws std::invalid_argument naming the
/// violated condition.
CutSplit complement_cut_split(const Graph& graph, int cut_vertex,
                              std::optional<int> first_side = std::nullopt);

/// k >= 2 matching whose first edge is {v, j} with j a neighbour of v in
/// the graph and whose second edge joins the two sides of the split.
bool is_special_matching(const Graph& graph, const CutSplit& split,
                         const Matching& matching);

/// Builds a special k-matching by exchange steps starting from the first
/// k-matching: route the cut vertex into the first edge, then make the second
/// edge cross between the sides. Throws std::invalid_argument when k is not
/// in 2..matching_number(graph).
Matching find_special_matching(const Graph& graph, const CutSplit& split, int k);

/// Witness that g(k) = 0 for an edge ideal with linear quotients order
/// u_1..u_s: a dominating k-matching M with V(M) = supp(u_i) such that each
/// t outside V(M) has some m < i with supp(u_m) inside V(M) + t.
struct ZeroDepthWitness {
  Matching matching;
  /// 1-based position in the order.
  std::size_t index = 0;
  /// (t, m) pairs, 1-based m.
  std::vector<std::pair<int, std::size_t>> cover;
};

/// Searches i = s..2 in descending order and returns the first witness.
/// `order` must be a linear quotients order of the k-th squarefree power of
/// the edge ideal (std::invalid_argument otherwise).
std::optional<ZeroDepthWitness> zero_depth_witness(const Graph& graph, int k,
                                                   std::span<const Monomial> order);

/// Checks a proposed (M, i) against the witness conditions.
std::optional<ZeroDepthWitness> check_zero_depth_witness(
    const Graph& graph, int k, std::span<const Monomial> order,
    const Matching& matching, std::size_t index);

/// Largest i whose support is the vertex set of a special k-matching, with
/// that matching checked as a witness.
std::optional<ZeroDepthWitness> special_zero_depth_witness(
    const Graph& graph, const CutSplit& split, int k,
    std::span<const Monomial> order);

}  // namespace normdepth
