#include <doctest.h>

#include <algorithm>

#include "normdepth/betti.hpp"
#include "normdepth/constructions.hpp"
#include "normdepth/graph.hpp"

using namespace normdepth;

namespace {

Matching matching(std::initializer_list<Edge> edges) { return Matching{std::vector<Edge>(edges)}; }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction and validation") {
  const Graph g(3, {{2, 1}, {1, 2}, {3, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK(Graph(3, {{1, 2}}).isolated_vertex() == 3);
  CHECK_THROWS_AS(edge_ideal(Graph(3, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("complement of a path on four vertices is a path") {
  const Graph co = complement(path_graph(4));
  CHECK(co.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 4}});
  CHECK(is_chordal(co));
  CHECK(is_cochordal(path_graph(4)));
}

TEST_CASE("chordality") {
  CHECK(is_chordal(complete_graph(5)));
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK_FALSE(is_chordal(cycle_graph(5)));
  const Graph fan(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
  const ChordalityReport r = chordality(fan);
  CHECK(r.chordal);
  CHECK(r.elimination_order.size() == 4);
}

TEST_CASE("components and cut vertices") {
  CHECK(cut_vertices(path_graph(4)) == std::vector<int>{2, 3});
  CHECK(cut_vertices(cycle_graph(5)).empty());
  const Graph two(4, {{1, 2}, {3, 4}});
  CHECK(connected_components(two) == std::vector<Mask>{0b0011, 0b1100});
  CHECK_FALSE(is_connected(two));
  CHECK_THROWS_AS(cut_vertices(two), std::invalid_argument);
}

TEST_CASE("matchings") {
  CHECK(matching_number(complete_bipartite(3, 3)) == 3);
  CHECK(matching_number(complete_bipartite(1, 4)) == 1);
  CHECK(matching_number(path_graph(5)) == 2);
  CHECK(matching_number(complete_graph(7)) == 3);

  const auto c4 = enumerate_matchings(cycle_graph(4), 2);
  CHECK(c4.size() == 2);
  CHECK(c4[0] == matching({{1, 2}, {3, 4}}));
  CHECK(enumerate_matchings(cycle_graph(4), 3).empty());
  CHECK(enumerate_matchings(cycle_graph(4), 0).size() == 1);
  CHECK(enumerate_matchings(complete_graph(4), 1).size() == 6);

  CHECK(is_matching_of(path_graph(4), matching({{1, 2}, {3, 4}})));
  CHECK_FALSE(is_matching_of(path_graph(4), matching({{1, 2}, {2, 3}})));
}

TEST_CASE("dominating matchings") {
  const Graph p5 = path_graph(5);
  CHECK_FALSE(is_dominating_matching(p5, matching({{1, 2}})));
  CHECK(is_dominating_matching(p5, matching({{2, 3}, {4, 5}})));
  CHECK_THROWS_AS(is_dominating_matching(p5, matching({{1, 3}})), std::invalid_argument);
}

TEST_CASE("Gamma complexes") {
  const Graph p4 = path_graph(4);
  const SimplicialComplex g1 = gamma_complex(p4, 1);
  CHECK(stanley_reisner_ideal(g1) == edge_ideal(p4));
  CHECK(stanley_reisner_complex(squarefree_power(edge_ideal(p4), 2).widened(4)) ==
        gamma_complex(p4, 2));
  CHECK_THROWS_AS(gamma_complex(p4, 0), std::out_of_range);
  CHECK_THROWS_AS(gamma_complex(p4, 3), std::out_of_range);
}

TEST_CASE("clique complexes") {
  const SimplicialComplex k3 = clique_complex(complete_graph(3));
  CHECK(k3.facets() == std::vector<Mask>{0b111});
  CHECK(reduced_homology(clique_complex(cycle_graph(4))).dims ==
        std::map<int, std::int64_t>{{1, 1}});
}

TEST_CASE("graph operations") {
  const Graph g = with_disjoint_edge(path_graph(3));
  CHECK(g.vertex_count() == 5);
  CHECK(g.adjacent(4, 5));
  const Graph u = disjoint_union(path_graph(2), path_graph(3));
  CHECK(u.edges() == std::vector<Edge>{{1, 2}, {3, 4}, {4, 5}});
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
}

TEST_CASE("special matchings on the six-vertex cut graph") {
  const Graph g = six_vertex_cut_graph();
  const CutSplit split = complement_cut_split(g, 1);
  CHECK(split.first == 0b000110);
  CHECK(split.second == 0b111000);
  CHECK(complement_cut_split(g, 1, 5).first == 0b111000);

  const Matching m = matching({{1, 6}, {3, 5}});
  CHECK(is_special_matching(g, split, m));
  CHECK(is_dominating_matching(g, m));
  CHECK_FALSE(is_special_matching(g, split, matching({{3, 5}, {1, 6}})));
  CHECK(is_special_matching(g, split, matching({{1, 6}, {2, 4}, {3, 5}})));

  for (int k = 2; k <= 3; ++k) {
    const Matching s = find_special_matching(g, split, k);
    CHECK(s.size() == static_cast<std::size_t>(k));
    CHECK(is_special_matching(g, split, s));
    CHECK(is_dominating_matching(g, s));
  }
  CHECK_THROWS_AS(find_special_matching(g, split, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_special_matching(g, split, 4), std::invalid_argument);
  CHECK_THROWS_AS(complement_cut_split(g, 2), std::invalid_argument);
  CHECK_THROWS_AS(complement_cut_split(cycle_graph(5), 1), std::invalid_argument);
}

TEST_CASE("zero-depth witnesses on the six-vertex cut graph") {
  const Graph g = six_vertex_cut_graph();
  const auto m = [](std::initializer_list<int> idx) { return Monomial::from_indices(idx); };
  const std::vector<Monomial> order{m({2, 3, 4, 5}), m({2, 3, 4, 6}), m({1, 2, 4, 6}),
                                    m({1, 3, 4, 6}), m({1, 2, 5, 6}), m({1, 3, 5, 6}),
                                    m({2, 3, 5, 6})};
  REQUIRE(has_linear_quotients(order));
  const auto w = check_zero_depth_witness(g, 2, order, matching({{1, 6}, {3, 5}}), 6);
  REQUIRE(w.has_value());
  const std::vector<std::pair<int, std::size_t>> cover{{2, 5}, {4, 4}};
  CHECK(w->cover == cover);
  CHECK_FALSE(check_zero_depth_witness(g, 2, order, matching({{1, 6}, {3, 5}}), 1));

  const auto sw = special_zero_depth_witness(g, complement_cut_split(g, 1), 2, order);
  REQUIRE(sw.has_value());
  CHECK(sw->index == 6);

  const auto dw = zero_depth_witness(g, 2, order);
  REQUIRE(dw.has_value());
  CHECK(dw->index == 7);
  CHECK(dw->matching == matching({{2, 5}, {3, 6}}));

  const std::vector<Monomial> partial(order.begin(), order.end() - 1);
  CHECK_THROWS_AS(zero_depth_witness(g, 2, partial), std::invalid_argument);
}

}  // TEST_SUITE
