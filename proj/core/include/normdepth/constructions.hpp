#pragma once

// Graphs and ideals with prescribed normalized depth profiles.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normdepth/graph.hpp"
#include "normdepth/monomial.hpp"

namespace normdepth {

struct ConstructionResult {
  MonomialIdeal ideal;
  /// Present when the ideal is an edge ideal.
  std::optional<Graph> graph;
  int nu = 0;
  std::vector<int> predicted_g;
  std::string provenance;

  int variable_count() const noexcept { return ideal.ambient(); }
};

/// Edges {2,4},{3,4},{2,5},{3,5},{2,6},{3,6},{1,6}. The complement is
/// chordal and connected with cut vertex 1.
Graph six_vertex_cut_graph();

/// K_{t-1,t} on C1 = {2..t} and C2 = {t+1..2t} plus the pendant edge
/// {1, 2t}. Its complement is chordal and connected with cut vertex 1 and
/// its matching number is t; both are rechecked on every call
/// (std::logic_error on failure). t < 2 throws std::invalid_argument.
Graph base_cut_vertex_graph(int t);

/// base_cut_vertex_graph(m - s + 1) plus s - 1 disjoint edges, predicted
/// g = (s, s-1, ..., 1, 0, ..., 0) with m entries. Requires 1 <= s < m.
ConstructionResult vanishing_tail_graph(int s, int m);

/// Profile of H plus one disjoint edge:
/// g(k) = min{gH(k) + 1, gH(k - 1)}, k = 1..nu+1, with gH(0) and gH(nu+1)
/// infinite. Throws std::invalid_argument unless H is cochordal and gH has
/// matching_number(H) entries.
std::vector<int> predict_adjoin_edge(const Graph& h, std::span<const int> gh);

/// (I(K_{t,t}), x_{2t+1}, ..., x_{2t+s}) with t = m - s, predicted s ones
/// then m - s zeros. Requires 1 <= s < m.
ConstructionResult step_profile_ideal(int s, int m);

/// step_profile_ideal(m, m + 1) times I(K_{m,m}) on fresh variables,
/// predicted m ones. Requires m >= 1.
ConstructionResult all_ones_profile_ideal(int m);

/// Realizes a non-increasing nonnegative target as a product of step and
/// all-ones factors: for each descent a_k > a_{k+1} (with a_{m+1} = 0),
/// a_k - a_{k+1} copies of step_profile_ideal(k, m) taken from the largest k
/// down, then a_m copies of all_ones_profile_ideal(m). The all-zero target
/// is I(K_{m,m}). Throws std::invalid_argument on an empty, negative or
/// increasing target.
ConstructionResult realize_profile(std::span<const int> target);

}  // namespace normdepth
