#include <doctest.h>

#include "lcf/eval.hpp"
#include "lcf/walk.hpp"
#include "test_util.hpp"

using lcf::DomainError;
using lcf::Int;
using lcf::Tuple;

TEST_CASE("eval_lcf on the known tuples, raw N/D preserved") {
  const lcf::LcfValue one = lcf::eval_lcf(Tuple{2});
  CHECK(one.numerator == 1);
  CHECK(one.denominator == 1);

  const lcf::LcfValue circuit = lcf::eval_lcf(Tuple{0, 3, 2});
  CHECK(circuit.numerator == 20);
  CHECK(circuit.denominator == 5);
  CHECK(*circuit.positive_integer_value() == 4);

  const lcf::LcfValue doubled = lcf::eval_lcf(Tuple{2, 2});
  CHECK(doubled.numerator == 7);
  CHECK(doubled.denominator == 7);

  const lcf::LcfValue neg = lcf::eval_lcf(Tuple{1});
  CHECK(neg.numerator == 1);
  CHECK(neg.denominator == -1);
  CHECK_FALSE(neg.positive_integer_value().has_value());
  CHECK(neg.exact() == mpq_class(-1));

  CHECK_THROWS_AS(lcf::eval_lcf(Tuple{}), DomainError);
}

TEST_CASE("is_satisfying") {
  const auto circuit = lcf::is_satisfying(Tuple{0, 3, 2});
  CHECK(circuit.satisfying);
  CHECK(*circuit.value == 4);

  CHECK_FALSE(lcf::is_satisfying(Tuple{3}).satisfying);

  // Frozen from the explicit walk 1->4->13->40->20->10->5->16->8->4->2->1.
  const auto longer = lcf::is_satisfying(Tuple{0, 0, 3, 4});
  CHECK(longer.satisfying);
  CHECK(*longer.value == 1);
  CHECK(longer.raw.numerator == 47);
  CHECK(longer.raw.denominator == 47);

  CHECK_THROWS_AS(lcf::is_satisfying(Tuple{}), DomainError);
}

TEST_CASE("rotation values of the printed circuit") {
  const auto orbit = rotation_orbit(Tuple{0, 3, 2});
  std::vector<Int> values;
  for (const Tuple& r : orbit) values.push_back(*lcf::is_satisfying(r).value);
  CHECK(values == std::vector<Int>{4, 13, 5});
}

TEST_CASE("closed_form_vertex") {
  const Tuple t{0, 3, 2};
  CHECK(lcf::closed_form_vertex(t, 4, 1) == mpq_class(4));
  CHECK(lcf::closed_form_vertex(t, 4, 2) == mpq_class(13));
  CHECK(lcf::closed_form_vertex(t, 4, 3) == mpq_class(5));
  CHECK_THROWS_AS(lcf::closed_form_vertex(t, 4, 0), DomainError);
  CHECK_THROWS_AS(lcf::closed_form_vertex(t, 4, 4), DomainError);
  CHECK_THROWS_AS(lcf::closed_form_vertex(t, 0, 1), DomainError);
  CHECK_THROWS_AS(lcf::closed_form_vertex(Tuple{}, 1, 1), DomainError);
}

TEST_CASE("same_cycle") {
  CHECK(lcf::same_cycle(Tuple{0, 3, 2}, Tuple{2, 0, 3}));
  CHECK(lcf::same_cycle(Tuple{0, 3, 2}, Tuple{3, 2, 0}));
  CHECK_FALSE(lcf::same_cycle(Tuple{2}, Tuple{2, 2}));
  CHECK(lcf::same_cycle(Tuple{2}, Tuple{2}));
  CHECK_THROWS_AS(lcf::same_cycle(Tuple{1}, Tuple{2}), DomainError);
  CHECK_THROWS_AS(lcf::same_cycle(Tuple{2}, Tuple{3}), DomainError);
}

TEST_CASE("satisfaction is constant on rotation orbits (n<=4, sum<=10)") {
  for_each_tuple(1, 4, 10, [&](const Tuple& t) {
    const bool sat = lcf::is_satisfying(t).satisfying;
    for (std::size_t k = 1; k < t.size(); ++k) {
      CHECK(lcf::is_satisfying(rotate(t, k)).satisfying == sat);
    }
  });
}

TEST_CASE("satisfying values are never divisible by 3 (n<=4, sum<=10)") {
  for (const Tuple& t : satisfying_universe(4, 10)) {
    const Int v = *lcf::is_satisfying(t).value;
    CHECK(v % 3 != 0);
  }
}

TEST_CASE("denominator sign matches 2^S vs 3^n (n<=4, sum<=10)") {
  for_each_tuple(1, 4, 10, [&](const Tuple& t) {
    const lcf::LcfValue v = lcf::eval_lcf(t);
    const bool positive =
        lcf::pow2(t.entry_sum()) > lcf::pow3(t.size());
    CHECK((v.denominator > 0) == positive);
    CHECK(v.numerator >= 1);
    CHECK(v.denominator != 0);
  });
  // All-zero tuples in particular have D = 1 - 3^n < 0.
  CHECK_FALSE(lcf::is_satisfying(Tuple{0}).satisfying);
  CHECK_FALSE(lcf::is_satisfying(Tuple{0, 0, 0}).satisfying);
}

TEST_CASE("closed form tracks the walk's tripling vertices (n<=4, sum<=10)") {
  for (const Tuple& t : satisfying_universe(4, 10)) {
    const Int value = *lcf::is_satisfying(t).value;
    const lcf::WalkResult w = lcf::walk_tuple(t, value);
    REQUIRE(w.ok());
    std::vector<Int> walk_vertices;
    for (const lcf::Step& s : w.walk->steps) {
      if (s.label == lcf::StepLabel::g) walk_vertices.push_back(s.from);
    }
    REQUIRE(walk_vertices.size() == t.size());
    for (std::size_t k = 1; k <= t.size(); ++k) {
      const mpq_class x = lcf::closed_form_vertex(t, value, k);
      CHECK(x.get_den() == 1);
      CHECK(x.get_num() > 0);
      CHECK(x.get_num() == walk_vertices[k - 1]);
    }
  }
}
