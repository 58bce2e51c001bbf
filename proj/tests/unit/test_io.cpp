#include <doctest.h>

#include "normdepth/io.hpp"
#include "normdepth/random_instances.hpp"
#include "normdepth/sweep.hpp"

using namespace normdepth;

TEST_SUITE("io") {

TEST_CASE("ideal JSON round trip") {
  const MonomialIdeal i = minimalize({Monomial::from_indices({1, 2}), Monomial::from_indices({2, 3})});
  const Json j = ideal_to_json(i);
  CHECK(j["vars"] == Json{"x1", "x2", "x3"});
  CHECK(j["gens"] == Json{{1, 2}, {2, 3}});
  CHECK(ideal_from_json(j) == i);
}

TEST_CASE("ideal JSON is minimalized and compacted") {
  const MonomialIdeal i = ideal_from_json(Json::parse(R"({"gens": [[2, 5], [2, 5, 7], [5, 7]]})"));
  CHECK(i == minimalize({Monomial::from_indices({1, 2}), Monomial::from_indices({2, 3})}));
}

TEST_CASE("malformed ideal JSON") {
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"gens": [[0, 1]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"gens": [[]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"gens": 3})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"gens": [["x1"]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars": 1, "gens": [[1]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"([1, 2])")), ParseError);
}

TEST_CASE("graph JSON and text round trips") {
  const Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_to_text(g) == "4\n1 2\n2 3\n3 4\n");
  CHECK(graph_from_text(graph_to_text(g)) == g);
  CHECK(graph_from_text("# path\n\n4\n1 2 \n 2 3\n# tail\n3 4\n") == g);
}

TEST_CASE("malformed graph input") {
  CHECK_THROWS_AS(graph_from_text(""), ParseError);
  CHECK_THROWS_AS(graph_from_text("3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(graph_from_text("3\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(graph_from_text("3\n1 x\n"), ParseError);
  CHECK_THROWS_AS(graph_from_text("3\n2 2\n"), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), ParseError);
}

TEST_CASE("input detection") {
  const InputIdeal from_text = parse_input("3\n1 2\n2 3\n");
  REQUIRE(from_text.graph.has_value());
  CHECK(from_text.ideal.size() == 2);
  const InputIdeal from_json = parse_input(R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
  CHECK(from_json.graph == from_text.graph);
  const InputIdeal ideal = parse_input(R"({"gens": [[1, 2], [2, 3]]})");
  CHECK_FALSE(ideal.graph.has_value());
  CHECK(ideal.ideal == from_text.ideal);
  CHECK_THROWS_AS(parse_input("3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_input("{\"gens\": "), ParseError);
  CHECK_THROWS_AS(parse_input("{\"other\": 1}"), ParseError);
  CHECK_THROWS_AS(read_input("/nonexistent/normdepth-input"), ParseError);
}

TEST_CASE("complex, Betti and profile round trips") {
  const SimplicialComplex delta(3, {0b011, 0b100});
  CHECK(complex_from_json(complex_to_json(delta)) == delta);
  BettiTable b(3);
  b.add(0, 0, 1);
  b.add(1, 2, 2);
  CHECK(betti_from_json(betti_to_json(b)) == b);
  CHECK_THROWS_AS(betti_from_json(Json::parse(R"({"n": 3, "entries": [[1, 2, -1]]})")), ParseError);
  GProfile p;
  p.nu = 2;
  p.d = {2, 4};
  p.depth = {2, 3};
  p.g = {1, 0};
  CHECK(profile_from_json(profile_to_json(p)) == p);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"nu": 2, "d": [2], "depth": [2], "g": [1]})")),
                  ParseError);
}

}  // TEST_SUITE

TEST_SUITE("sweep") {

TEST_CASE("graphs without isolated vertices") {
  // Labeled graphs with no isolated vertex: 1, 4, 41, 768, 27449.
  CHECK(count_graphs(2) == 1);
  CHECK(count_graphs(3) == 4);
  CHECK(count_graphs(4) == 41);
  CHECK(count_graphs(5) == 768);
  CHECK(count_graphs(6) == 27449);
  int seen = 0;
  for_each_graph(4, [&](const Graph& g) {
    CHECK_FALSE(g.isolated_vertex().has_value());
    ++seen;
  });
  CHECK(seen == 41);
}

TEST_CASE("small sweep is clean and reproducible") {
  SweepOptions o;
  o.max_vertices = 4;
  o.keep_profiles = true;
  const SweepReport r = conjecture_sweep(o);
  CHECK(r.instances == 1 + 4 + 41);
  CHECK(r.counterexamples.empty());
  CHECK(r.profiles.size() == r.instances);
  CHECK(sweep_to_json(r).dump() == sweep_to_json(conjecture_sweep(o)).dump());
  CHECK_FALSE(sweep_to_json(r).contains("seconds"));
  CHECK(sweep_to_json(r, true).contains("seconds"));
  CHECK(sweep_to_json(r)["schema_version"] == kSchemaVersion);
}

TEST_CASE("sampled sweep") {
  SweepOptions o;
  o.max_vertices = 6;
  o.sample = 20;
  o.seed = 3;
  const SweepReport a = conjecture_sweep(o);
  CHECK(a.instances == 20);
  o.threads = 2;
  CHECK(sweep_to_json(conjecture_sweep(o)).dump() == sweep_to_json(a).dump());
}

TEST_CASE("sweep caps") {
  SweepOptions o;
  o.max_vertices = kExhaustiveSweepCap + 1;
  CHECK_THROWS_AS(conjecture_sweep(o), CapExceeded);
  o.max_vertices = kSampledSweepCap + 1;
  o.sample = 1;
  CHECK_THROWS_AS(conjecture_sweep(o), CapExceeded);
}

TEST_CASE("seeded random instances") {
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    const MonomialIdeal x = random_ideal(a, 6, 5);
    CHECK(x == random_ideal(b, 6, 5));
    CHECK(x.ambient_minimal());
    CHECK(x.size() <= 5);
    CHECK(x.ambient() <= 6);
  }
  Rng c(9);
  for (int i = 0; i < 10; ++i) {
    const Graph g = random_graph(c, 5);
    CHECK(g.vertex_count() == 5);
    CHECK_FALSE(g.isolated_vertex().has_value());
  }
  for (int i = 0; i < 100; ++i) {
    const int v = draw_int(c, -2, 3);
    CHECK(v >= -2);
    CHECK(v <= 3);
  }
}

}  // TEST_SUITE
