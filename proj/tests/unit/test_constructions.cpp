#include <doctest.h>

#include <algorithm>

#include "normdepth/betti.hpp"
#include "normdepth/constructions.hpp"

using namespace normdepth;

namespace {

void check_prediction(const ConstructionResult& c) {
  INFO(c.provenance);
  const GProfile p = g_profile(c.ideal);
  CHECK(p.nu == c.nu);
  CHECK(p.g == c.predicted_g);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("six-vertex cut graph") {
  const Graph g = six_vertex_cut_graph();
  CHECK(g.edge_count() == 7);
  CHECK(matching_number(g) == 3);
  CHECK(g_profile(edge_ideal(g)).g == std::vector<int>{1, 0, 0});
  CHECK(base_cut_vertex_graph(3) == g);
}

TEST_CASE("base cut-vertex graphs") {
  CHECK(base_cut_vertex_graph(2) == Graph(4, {{2, 3}, {2, 4}, {1, 4}}));
  for (int t = 2; t <= 4; ++t) {
    const Graph g = base_cut_vertex_graph(t);
    CHECK(g.vertex_count() == 2 * t);
    CHECK(matching_number(g) == t);
    const auto cuts = cut_vertices(complement(g));
    CHECK(std::find(cuts.begin(), cuts.end(), 1) != cuts.end());
  }
  CHECK_THROWS_AS(base_cut_vertex_graph(1), std::invalid_argument);
}

TEST_CASE("vanishing tail graphs") {
  const ConstructionResult c = vanishing_tail_graph(2, 3);
  CHECK(c.predicted_g == std::vector<int>{2, 1, 0});
  REQUIRE(c.graph.has_value());
  CHECK(c.graph->vertex_count() == 6);
  check_prediction(c);
  check_prediction(vanishing_tail_graph(1, 2));
  CHECK(vanishing_tail_graph(3, 4).predicted_g == std::vector<int>{3, 2, 1, 0});
  CHECK_THROWS_AS(vanishing_tail_graph(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(vanishing_tail_graph(0, 2), std::invalid_argument);
}

TEST_CASE("adjoining a disjoint edge") {
  CHECK(predict_adjoin_edge(path_graph(4), std::vector<int>{1, 0}) == std::vector<int>{2, 1, 0});
  CHECK(predict_adjoin_edge(path_graph(2), std::vector<int>{0}) == std::vector<int>{1, 0});
  CHECK(g_profile(edge_ideal(with_disjoint_edge(path_graph(4)))).g == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(predict_adjoin_edge(path_graph(4), std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(predict_adjoin_edge(Graph(4, {{1, 2}, {3, 4}}), std::vector<int>{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("step and all-ones profile ideals") {
  const ConstructionResult step = step_profile_ideal(1, 3);
  CHECK(step.predicted_g == std::vector<int>{1, 0, 0});
  CHECK(step.variable_count() == 5);
  check_prediction(step);
  check_prediction(step_profile_ideal(2, 3));
  CHECK_THROWS_AS(step_profile_ideal(2, 2), std::invalid_argument);

  const ConstructionResult ones = all_ones_profile_ideal(2);
  CHECK(ones.predicted_g == std::vector<int>{1, 1});
  check_prediction(ones);
  check_prediction(all_ones_profile_ideal(1));
  CHECK_THROWS_AS(all_ones_profile_ideal(0), std::invalid_argument);
}

TEST_CASE("realizing non-increasing targets") {
  for (const std::vector<int>& target :
       {std::vector<int>{0, 0}, std::vector<int>{1, 0}, std::vector<int>{1, 1}}) {
    const ConstructionResult c = realize_profile(target);
    CHECK(c.predicted_g == target);
    CHECK(c.variable_count() <= 11);
    check_prediction(c);
  }
  CHECK(realize_profile(std::vector<int>{2, 1}).variable_count() == 11);
  CHECK_THROWS_AS(realize_profile(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(realize_profile(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(realize_profile(std::vector<int>{-1}), std::invalid_argument);
  CHECK_THROWS_AS(realize_profile(std::vector<int>{9, 9, 9}), CapExceeded);
}

}  // TEST_SUITE
