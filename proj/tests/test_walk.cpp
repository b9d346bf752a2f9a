#include <doctest.h>

#include <algorithm>

#include "lcf/walk.hpp"
#include "test_util.hpp"

using lcf::DomainError;
using lcf::Int;
using lcf::Tuple;

namespace {

std::vector<Int> vertex_sequence(const lcf::CycleWalk& w) {
  std::vector<Int> seq{w.start};
  for (const lcf::Step& s : w.steps) seq.push_back(s.to);
  return seq;
}

}  // namespace

TEST_CASE("collatz_step") {
  CHECK(lcf::collatz_step(13) == 40);
  CHECK(lcf::collatz_step(40) == 20);
  CHECK(lcf::collatz_step(1) == 4);
  CHECK_THROWS_AS(lcf::collatz_step(0), DomainError);
}

TEST_CASE("loosened_successors") {
  CHECK(lcf::loosened_successors(4) == std::vector<Int>{2, 13});
  CHECK(lcf::loosened_successors(5) == std::vector<Int>{16});
  CHECK(lcf::loosened_successors(40) == std::vector<Int>{20, 121});
  CHECK_THROWS_AS(lcf::loosened_successors(0), DomainError);
}

TEST_CASE("loosened_children") {
  CHECK(lcf::loosened_children(1) == std::vector<Int>{2});
  CHECK(lcf::loosened_children(4) == std::vector<Int>{1, 8});
  CHECK(lcf::loosened_children(5) == std::vector<Int>{10});
  CHECK(lcf::loosened_children(7) == std::vector<Int>{2, 14});
  CHECK_THROWS_AS(lcf::loosened_children(0), DomainError);
}

TEST_CASE("children/successors duality up to 10000") {
  for (int n = 1; n <= 10000; ++n) {
    for (const Int& m : lcf::loosened_children(n)) {
      const auto succ = lcf::loosened_successors(m);
      CHECK(std::find(succ.begin(), succ.end(), Int(n)) != succ.end());
    }
  }
  for (int m = 1; m <= 10000; ++m) {
    for (const Int& v : lcf::loosened_successors(m)) {
      const auto kids = lcf::loosened_children(v);
      CHECK(std::find(kids.begin(), kids.end(), Int(m)) != kids.end());
    }
  }
  // The L(1)=2 exception: 0 is never offered as a child.
  CHECK(lcf::loosened_children(1) == std::vector<Int>{2});
}

TEST_CASE("walk_tuple traces the printed circuit") {
  const lcf::WalkResult w = lcf::walk_tuple(Tuple{0, 3, 2}, 4);
  REQUIRE(w.ok());
  CHECK(vertex_sequence(*w.walk) ==
        std::vector<Int>{4, 13, 40, 20, 10, 5, 16, 8, 4});
  CHECK(w.walk->g_count() == 3);

  const lcf::WalkResult trivial = lcf::walk_tuple(Tuple{2}, 1);
  REQUIRE(trivial.ok());
  CHECK(vertex_sequence(*trivial.walk) == std::vector<Int>{1, 4, 2, 1});
}

TEST_CASE("walk_tuple failure modes") {
  const lcf::WalkResult mismatch = lcf::walk_tuple(Tuple{1}, 1);
  REQUIRE_FALSE(mismatch.ok());
  CHECK(mismatch.failure->kind ==
        lcf::WalkFailure::Kind::endpoint_mismatch);
  CHECK(mismatch.failure->value == 2);

  const lcf::WalkResult odd = lcf::walk_tuple(Tuple{2}, 3);
  REQUIRE_FALSE(odd.ok());
  CHECK(odd.failure->kind == lcf::WalkFailure::Kind::odd_halving);
  CHECK(odd.failure->value == 5);
  CHECK(odd.failure->step_index == 2);

  const lcf::WalkResult capped = lcf::walk_tuple(Tuple{2}, 1, 1);
  REQUIRE_FALSE(capped.ok());
  CHECK(capped.failure->kind == lcf::WalkFailure::Kind::step_cap_exceeded);

  CHECK_THROWS_AS(lcf::walk_tuple(Tuple{}, 1), DomainError);
  CHECK_THROWS_AS(lcf::walk_tuple(Tuple{2}, 0), DomainError);
}

TEST_CASE("oracle_satisfies") {
  const auto circuit = lcf::oracle_satisfies(Tuple{0, 3, 2});
  CHECK(circuit.satisfying);
  CHECK(*circuit.value == 4);

  const auto longer = lcf::oracle_satisfies(Tuple{0, 0, 3, 4});
  CHECK(longer.satisfying);
  CHECK(*longer.value == 1);

  const auto nope = lcf::oracle_satisfies(Tuple{4});
  CHECK_FALSE(nope.satisfying);
  CHECK(nope.raw.numerator == 1);
  CHECK(nope.raw.denominator == 13);
}

TEST_CASE("oracle agrees with the algebraic test (n<=3, sum<=8)") {
  for_each_tuple(1, 3, 8, [&](const Tuple& t) {
    CHECK(lcf::oracle_satisfies(t).satisfying ==
          lcf::is_satisfying(t).satisfying);
  });
}

TEST_CASE("cycle_vertices") {
  const auto trivial = lcf::walk_tuple(Tuple{2}, 1);
  CHECK(lcf::cycle_vertices(*trivial.walk) == std::set<Int>{1, 2, 4});

  const auto circuit = lcf::walk_tuple(Tuple{0, 3, 2}, 4);
  CHECK(lcf::cycle_vertices(*circuit.walk) ==
        std::set<Int>{4, 13, 40, 20, 10, 5, 16, 8});
}

TEST_CASE("no cycle vertex is divisible by 3 (n<=4, sum<=10)") {
  for (const Tuple& t : satisfying_universe(4, 10)) {
    const auto w = lcf::walk_tuple(t, *lcf::is_satisfying(t).value);
    REQUIRE(w.ok());
    for (const Int& v : lcf::cycle_vertices(*w.walk)) CHECK(v % 3 != 0);
  }
}

TEST_CASE("is_trivial_tuple") {
  CHECK(lcf::is_trivial_tuple(Tuple{2}));
  CHECK(lcf::is_trivial_tuple(Tuple{0, 3, 2}));
  CHECK(lcf::is_trivial_tuple(Tuple{2, 2}));
  CHECK_THROWS_AS(lcf::is_trivial_tuple(Tuple{3}), DomainError);
}

TEST_CASE("edge_multiset counts traversals") {
  const auto doubled = lcf::walk_tuple(Tuple{2, 2}, 1);
  const lcf::EdgeMultiset m = lcf::edge_multiset(*doubled.walk);
  CHECK(m.anchor == 1);
  REQUIRE(m.counts.size() == 3);
  CHECK(m.counts.at({Int(1), lcf::StepLabel::g}) == 2);
  CHECK(m.counts.at({Int(4), lcf::StepLabel::f}) == 2);
  CHECK(m.counts.at({Int(2), lcf::StepLabel::f}) == 2);

  const auto once = lcf::walk_tuple(Tuple{2}, 1);
  for (const auto& [edge, count] : lcf::edge_multiset(*once.walk).counts) {
    CHECK(count == 1);
  }
}

TEST_CASE("concatenation order does not change the edge multiset") {
  const lcf::WalkResult ab = lcf::walk_tuple(Tuple{2, 0, 0, 3, 4}, 1);
  const lcf::WalkResult ba = lcf::walk_tuple(Tuple{0, 0, 3, 4, 2}, 1);
  REQUIRE(ab.ok());
  REQUIRE(ba.ok());
  CHECK(lcf::edge_multiset(*ab.walk) == lcf::edge_multiset(*ba.walk));
}
