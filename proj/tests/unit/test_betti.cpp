#include <doctest.h>

#include "normdepth/betti.hpp"
#include "normdepth/graph.hpp"
#include "normdepth/random_instances.hpp"

using namespace normdepth;

namespace {

Monomial mono(std::initializer_list<int> idx) { return Monomial::from_indices(idx); }

}  // namespace

TEST_SUITE("betti") {

TEST_CASE("path on three vertices") {
  const MonomialIdeal i = minimalize({mono({1, 2}), mono({2, 3})});
  const BettiTable b = betti_hochster(i);
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 2) == 2);
  CHECK(b.at(2, 3) == 1);
  CHECK(b.entries().size() == 3);
  CHECK(b.projective_dimension() == 2);
  CHECK(depth(i) == 1);
  CHECK(betti_taylor(i) == b);
}

TEST_CASE("two coprime generators form a Koszul complex") {
  const MonomialIdeal i = minimalize({mono({1, 2}), mono({3, 4})});
  const BettiTable b = betti_hochster(i);
  CHECK(b.at(1, 2) == 2);
  CHECK(b.at(2, 4) == 1);
  CHECK(b.total(1) == 2);
  CHECK(depth(i) == 2);
  CHECK(betti_taylor(i, FieldSpec::prime(2)) == betti_hochster(i, FieldSpec::prime(2)));
  const LinearityReport lin = has_linear_resolution(i);
  CHECK_FALSE(lin.linear);
}

TEST_CASE("ideal Betti numbers shift the homological index") {
  const MonomialIdeal i = minimalize({mono({1, 2}), mono({2, 3})});
  const BettiTable b = ideal_betti(i, FieldSpec::rationals());
  CHECK(b.at(0, 2) == 2);
  CHECK(b.at(1, 3) == 1);
  CHECK(has_linear_resolution(i).linear);
}

TEST_CASE("linear resolutions of small edge ideals") {
  CHECK(has_linear_resolution(edge_ideal(cycle_graph(4))).linear);
  CHECK_FALSE(has_linear_resolution(edge_ideal(cycle_graph(5))).linear);
  const LinearityReport mixed = has_linear_resolution(minimalize({mono({1}), mono({2, 3})}));
  CHECK_FALSE(mixed.linear);
  CHECK_FALSE(mixed.reason.empty());
}

TEST_CASE("normalized depth profiles") {
  const GProfile c4 = g_profile(edge_ideal(complete_bipartite(2, 2)));
  CHECK(c4.nu == 2);
  CHECK(c4.g == std::vector<int>{0, 0});
  CHECK(c4.d == std::vector<int>{2, 4});
  CHECK(c4.depth == std::vector<int>{1, 3});

  CHECK(g_profile(edge_ideal(Graph(2, {{1, 2}}))).g == std::vector<int>{0});
  CHECK(g_profile(edge_ideal(path_graph(4))).g == std::vector<int>{1, 0});
  CHECK(g_profile(minimalize({mono({1}), mono({2})})).g == std::vector<int>{0, 0});

  CHECK_THROWS_AS(g_profile(MonomialIdeal{}), std::invalid_argument);
  CHECK_THROWS_AS(g_profile(minimalize({mono({1, 3})})), std::invalid_argument);
}

TEST_CASE("adjoining a variable") {
  const MonomialIdeal i = minimalize({mono({1, 2})});
  const GProfile p = g_profile(i);
  CHECK(p.g == std::vector<int>{0});
  const std::vector<int> predicted = predict_adjoin_variable(p.g, p.d);
  CHECK(predicted == std::vector<int>{1, 0});
  CHECK(g_profile(adjoin_variable(i)).g == predicted);
}

TEST_CASE("linear quotients orders") {
  const MonomialIdeal p4 = edge_ideal(path_graph(4));
  const auto order = linear_quotients_order(p4);
  REQUIRE(order.has_value());
  CHECK(has_linear_quotients(*order));
  const std::vector<Monomial> bad{mono({1, 2}), mono({3, 4}), mono({2, 3})};
  CHECK_FALSE(has_linear_quotients(bad));
  CHECK_FALSE(linear_quotients_order(minimalize({mono({1, 2}), mono({3, 4})})).has_value());
}

TEST_CASE("Betti splittings") {
  const MonomialIdeal whole = minimalize({mono({1, 2}), mono({2, 3}), mono({3, 4})});
  const MonomialIdeal first = minimalize({mono({1, 2}), mono({2, 3})});
  const MonomialIdeal second = minimalize({mono({3, 4})});
  CHECK(verify_betti_splitting(whole, first, second).holds);
  CHECK_THROWS_AS(verify_betti_splitting(whole, first, minimalize({mono({1, 4})})),
                  std::invalid_argument);
}

TEST_CASE("Hochster and Taylor agree on seeded random ideals") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const MonomialIdeal i = random_ideal(rng, 6, 6);
    CHECK(i.ambient_minimal());
    CHECK(betti_hochster(i) == betti_taylor(i));
  }
}

TEST_CASE("caps") {
  std::vector<Monomial> gens;
  for (int v = 1; v <= 17; ++v) gens.push_back(Monomial::variable(v));
  const MonomialIdeal many = minimalize(gens);
  CHECK_THROWS_AS(betti_taylor(many), CapExceeded);
  HochsterOptions small;
  small.max_variables = 8;
  CHECK_THROWS_AS(betti_hochster(many, FieldSpec::rationals(), small), CapExceeded);
}

}  // TEST_SUITE
