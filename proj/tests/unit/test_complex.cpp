#include <doctest.h>

#include "normdepth/complex.hpp"
#include "normdepth/stats.hpp"

using namespace normdepth;

TEST_SUITE("complex") {

TEST_CASE("Stanley-Reisner correspondence") {
  const MonomialIdeal i = minimalize({Monomial::from_indices({1, 2}), Monomial::from_indices({2, 3})});
  const SimplicialComplex delta = stanley_reisner_complex(i);
  CHECK(delta.facets() == std::vector<Mask>{0b010, 0b101});
  CHECK(stanley_reisner_ideal(delta) == i);
  CHECK(delta.contains_face(0b001));
  CHECK_FALSE(delta.contains_face(0b011));
  CHECK(induced_subcomplex(delta, 0b011).facets() == std::vector<Mask>{0b001, 0b010});
}

TEST_CASE("reduced homology of small complexes") {
  const SimplicialComplex boundary(3, {0b011, 0b110, 0b101});
  CHECK(reduced_homology(boundary).dims == std::map<int, std::int64_t>{{1, 1}});
  const SimplicialComplex points(2, {0b01, 0b10});
  CHECK(reduced_homology(points).dims == std::map<int, std::int64_t>{{0, 1}});
  CHECK(reduced_homology(SimplicialComplex::simplex(4, 0b1111)).acyclic());
  CHECK(reduced_homology(SimplicialComplex::irrelevant(3)).dims ==
        std::map<int, std::int64_t>{{-1, 1}});
  CHECK_THROWS_AS(reduced_homology(SimplicialComplex::void_complex(2)), std::domain_error);
}

TEST_CASE("projective plane homology depends on the characteristic") {
  // Six-vertex triangulation of the real projective plane.
  auto f = [](int a, int b, int c) { return Monomial::from_indices({a, b, c}).bits(); };
  const SimplicialComplex rp2(6, {f(1, 2, 4), f(1, 2, 6), f(1, 3, 5), f(1, 3, 6), f(1, 4, 5),
                                  f(2, 3, 4), f(2, 3, 5), f(2, 5, 6), f(3, 4, 6), f(4, 5, 6)});
  CHECK(reduced_homology(rp2).acyclic());
  CHECK(reduced_homology(rp2, FieldSpec::prime(2)).dims ==
        std::map<int, std::int64_t>{{1, 1}, {2, 1}});
  CHECK(reduced_homology(rp2, FieldSpec::prime(3)).acyclic());
}

TEST_CASE("cone points and connectivity") {
  const SimplicialComplex cone(3, {0b011, 0b110});
  CHECK(cone_point(cone) == 2);
  CHECK(reduced_homology(cone).acyclic());
  CHECK_FALSE(cone_point(SimplicialComplex(2, {0b01, 0b10})).has_value());
  CHECK(is_connected_complex(cone));
  CHECK_FALSE(is_connected_complex(SimplicialComplex(2, {0b01, 0b10})));
}

TEST_CASE("field validation") {
  CHECK(FieldSpec::prime(2).characteristic() == 2);
  CHECK_THROWS_AS(FieldSpec::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
  CHECK(FieldSpec::rationals().is_rational());
}

TEST_CASE("homology calls are counted and pass the Euler check") {
  auto& c = invariant_counters();
  const auto calls = c.homology_calls.load();
  const auto violations = c.euler_violations.load();
  reduced_homology(SimplicialComplex(3, {0b011, 0b110, 0b101}));
  CHECK(c.homology_calls.load() == calls + 1);
  CHECK(c.euler_violations.load() == violations);
}

}  // TEST_SUITE
