#include <doctest.h>

#include "amst/counterexample.hpp"
#include "amst/error.hpp"

using namespace amst;

TEST_CASE("membership and equality of symbolic sets") {
  CHECK(expr_member(3, NatSetExpr::odds()));
  CHECK_FALSE(expr_member(2, NatSetExpr::odds()));
  CHECK(expr_member(2, NatSetExpr::all()));
  CHECK_FALSE(expr_member(7, NatSetExpr::empty()));

  // N∖{0} and the odds differ (2 separates them)
  CHECK_FALSE(expr_equal(NatSetExpr::all().minus(0), NatSetExpr::odds()));
  // normalization: removing then re-adding an odd is the identity
  CHECK(expr_equal(NatSetExpr::odds().minus(1).plus(1), NatSetExpr::odds()));
  CHECK(expr_equal(NatSetExpr::singleton(4).minus(4), NatSetExpr::empty()));
  CHECK_FALSE(expr_equal(NatSetExpr::odds().plus(0), NatSetExpr::odds()));
}

TEST_CASE("expr_equal matches extensional comparison on bounded points") {
  const std::vector<NatSetExpr> exprs = {
      NatSetExpr::all(),          NatSetExpr::odds(),
      NatSetExpr::empty(),        NatSetExpr::all().minus(3),
      NatSetExpr::odds().plus(2), NatSetExpr::finite({0, 1}),
      NatSetExpr::singleton(0),   NatSetExpr::odds().minus(1),
  };
  for (const auto& a : exprs)
    for (const auto& b : exprs) {
      bool extensionally_equal = true;
      for (std::uint64_t n = 0; n <= 32; ++n)
        if (expr_member(n, a) != expr_member(n, b)) extensionally_equal = false;
      CHECK(expr_equal(a, b) == extensionally_equal);
      CHECK(expr_equal(a, b) == expr_equal(b, a));
    }
}

TEST_CASE("the satisfaction rule ignores the model") {
  const NatSetExpr zero_one = NatSetExpr::finite({0, 1});
  for (std::uint64_t n = 0; n <= 20; ++n) {
    CHECK(example_satisfies(n, zero_one));
    CHECK_FALSE(example_satisfies(n, NatSetExpr::singleton(0)));
    CHECK_FALSE(example_satisfies(n, NatSetExpr::odds()));
    CHECK_FALSE(example_satisfies(n, NatSetExpr::all()));
  }
}

TEST_CASE("the six claims verify for every bound") {
  for (std::uint64_t bound : {2, 3, 8, 16}) {
    const auto rep = verify_counterexample(bound);
    REQUIRE(rep.claims.size() == 6);
    for (const auto& c : rep.claims) CHECK(c.verified);
    CHECK(rep.all_verified());
  }
  CHECK_THROWS_AS(verify_counterexample(1), Error);
}

TEST_CASE("claim (v) at k = 0") {
  const NatSetExpr co_zero = NatSetExpr::all().minus(0);
  CHECK_FALSE(expr_equal(co_zero, NatSetExpr::singleton(0)));
  CHECK_FALSE(expr_equal(co_zero, NatSetExpr::odds()));
  CHECK_FALSE(expr_equal(co_zero, NatSetExpr::all()));
  CHECK(example_satisfies(0, co_zero));
}
