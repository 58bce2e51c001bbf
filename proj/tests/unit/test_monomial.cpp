#include <doctest.h>

#include "normdepth/monomial.hpp"

using namespace normdepth;

namespace {

Monomial mono(std::initializer_list<int> idx) { return Monomial::from_indices(idx); }

}  // namespace

TEST_SUITE("monomial") {

TEST_CASE("monomial basics") {
  const Monomial u = mono({1, 3, 5});
  CHECK(u.degree() == 3);
  CHECK(u.max_index() == 5);
  CHECK(u.to_string() == "x1x3x5");
  CHECK(Monomial().to_string() == "1");
  CHECK(mono({1, 3}).divides(u));
  CHECK_FALSE(mono({1, 2}).divides(u));
  CHECK(u.coprime(mono({2, 4})));
  CHECK(u.lcm(mono({2, 3})) == mono({1, 2, 3, 5}));
  CHECK(u.strip(mono({3})) == mono({1, 5}));
  CHECK(u.indices() == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(Monomial::variable(0), std::out_of_range);
  CHECK_THROWS_AS(Monomial::variable(65), std::out_of_range);
}

TEST_CASE("minimalize drops multiples and sorts canonically") {
  const MonomialIdeal i = minimalize({mono({2, 3, 4}), mono({1, 2}), mono({2, 3}), mono({1, 2})});
  REQUIRE(i.size() == 2);
  CHECK(i.generators()[0] == mono({1, 2}));
  CHECK(i.generators()[1] == mono({2, 3}));
  CHECK(i.ambient() == 3);
  CHECK(i.ambient_minimal());
  CHECK(minimalize(i.generators()) == i);
  CHECK(i.contains(mono({1, 2, 4})));
  CHECK_FALSE(i.contains(mono({1, 3})));

  const MonomialIdeal gap = minimalize({mono({1, 3})});
  CHECK(gap.ambient() == 3);
  CHECK_FALSE(gap.ambient_minimal());
  CHECK(compacted(gap) == minimalize({mono({1, 2})}));
}

TEST_CASE("monomial grade") {
  const MonomialIdeal p4 = minimalize({mono({1, 2}), mono({2, 3}), mono({3, 4})});
  CHECK(monomial_grade(p4) == 2);
  CHECK(monomial_grade(minimalize({mono({1, 2, 3})})) == 1);
  CHECK_THROWS_AS(monomial_grade(MonomialIdeal{}), std::domain_error);
}

TEST_CASE("squarefree powers of the six-vertex cut graph") {
  const MonomialIdeal i = minimalize({mono({2, 4}), mono({3, 4}), mono({2, 5}), mono({3, 5}),
                                      mono({2, 6}), mono({3, 6}), mono({1, 6})});
  const MonomialIdeal square = squarefree_power(i, 2);
  const MonomialIdeal listed =
      minimalize({mono({2, 3, 4, 5}), mono({2, 3, 4, 6}), mono({1, 2, 4, 6}), mono({1, 3, 4, 6}),
                  mono({2, 3, 5, 6}), mono({1, 2, 5, 6}), mono({1, 3, 5, 6})});
  CHECK(square == listed);
  const MonomialIdeal cube = squarefree_power(i, 3);
  REQUIRE(cube.size() == 1);
  CHECK(cube.generators()[0] == mono({1, 2, 3, 4, 5, 6}));
  CHECK(squarefree_power(i, 4).is_zero());
  CHECK(squarefree_power(i, 1) == i);
  CHECK(initial_degree(square) == 4);
  CHECK_THROWS_AS(squarefree_power(i, 0), std::invalid_argument);
}

TEST_CASE("ideal arithmetic") {
  const MonomialIdeal a = minimalize({mono({1, 2})});
  const MonomialIdeal b = minimalize({mono({1}), mono({2})});
  CHECK(product_disjoint(a, b) == minimalize({mono({1, 2, 3}), mono({1, 2, 4})}));
  CHECK(shifted(a, 2) == minimalize({mono({3, 4})}));
  CHECK(adjoin_variable(a) == minimalize({mono({1, 2}), mono({3})}));
  CHECK(ideal_sum(a, b) == b);
  CHECK(intersection(b, minimalize({mono({3})})) == minimalize({mono({1, 3}), mono({2, 3})}));
  CHECK(multiply(b, mono({3})) == minimalize({mono({1, 3}), mono({2, 3})}));
  CHECK(a.widened(4).ambient() == 4);
}

}  // TEST_SUITE
