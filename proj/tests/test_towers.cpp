#include <doctest.h>

#include <goodstein/evaluate.hpp>
#include <goodstein/grammar.hpp>
#include <goodstein/oracle.hpp>
#include <goodstein/towers.hpp>

using namespace goodstein;

TEST_CASE("tower_form builds the exact iterated power") {
  CHECK(render(tower_form(Base(2), 1)) == "1*2^(1*2^(0))");
  CHECK(render(tower_form(Base(2), 2)) == "1*2^(1*2^(1*2^(0)))");
  CHECK(*evaluate(tower_form(Base(2), 2)) == 4);
  CHECK(*evaluate(tower_form(Base(2), 4)) == 65536);
  CHECK(*evaluate(tower_form(Base(3), 3)) == BigNat("7625597484987"));
  CHECK(*evaluate(tower_form(Base(5), 2)) == 3125);
  CHECK_THROWS_AS(tower_form(Base(2), 0), std::invalid_argument);
}

TEST_CASE("superexp_value respects the digit cap") {
  CHECK(*superexp_value(Base(2), 4) == 65536);
  CHECK(!superexp_value(Base(3), 4).has_value());  // ~3.6e12 digits
  auto big = superexp_value(Base(2), 5);           // 2^65536
  REQUIRE(big.has_value());
  CHECK(to_decimal(*big).size() == 19729);
}

TEST_CASE("a deep tower is astronomical even to estimate") {
  CHECK(is_astronomical(estimate_digits(tower_form(Base(2), 7))));
  CHECK(!is_astronomical(estimate_digits(tower_form(Base(2), 5))));
}

TEST_CASE("tower_bound frozen answers") {
  CHECK(tower_bound(Base(3), BigNat("7625597484987")) == 3);
  CHECK(tower_bound(Base(2), 1) == 1);
  CHECK(tower_bound(Base(2), 2) == 1);
  CHECK(tower_bound(Base(2), 3) == 2);
  CHECK(tower_bound(Base(2), 4) == 2);
  CHECK(tower_bound(Base(2), 5) == 3);
  CHECK(tower_bound(Base(2), 16) == 3);
  CHECK(tower_bound(Base(2), 17) == 4);
  CHECK(tower_bound(Base(2), 65536) == 4);
  CHECK(tower_bound(Base(2), 65537) == 5);
  CHECK(tower_bound(Base(10), BigNat("1000000000000000000")) == 3);
  // 2^128 sits between 2^^4 = 65536 and 2^^5 = 2^65536
  CHECK(tower_bound(Base(2), BigNat("340282366920938463463374607431768211456")) == 5);
}

TEST_CASE("tower_bound is minimal against direct ascent") {
  for (std::uint64_t a = 2; a <= 10; ++a) {
    for (std::uint64_t b = 1; b <= 2000; ++b) {
      CHECK(tower_bound(Base(a), b) == oracle::tower_bound_small(a, b));
    }
    // spot checks around the second rung
    for (std::uint64_t b : {65535u, 65536u, 65537u, 1000000u}) {
      CHECK(tower_bound(Base(a), b) == oracle::tower_bound_small(a, b));
    }
  }
}

TEST_CASE("the geometric decrement identity holds on a grid") {
  for (std::uint64_t a = 1; a <= 12; ++a) {
    for (std::uint64_t b = 1; b <= 12; ++b) {
      CHECK(geometric_decrement_identity(a, b));
    }
  }
  CHECK(geometric_decrement_identity(2, 64));
  CHECK(geometric_decrement_identity(50, 50));
}
