#include <doctest.h>

#include <goodstein/errors.hpp>
#include <goodstein/evaluate.hpp>
#include <goodstein/form.hpp>
#include <goodstein/grammar.hpp>
#include <goodstein/oracle.hpp>

using namespace goodstein;

namespace {

NodePtr one() { return make_node({Atom{1, zero_node()}}); }
NodePtr c(std::uint64_t k) { return make_node({Atom{k, zero_node()}}); }

BigNat value_of(const HForm& f) {
  auto v = evaluate(f);
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_CASE("from_natural produces the unique block-free expansion") {
  CHECK(from_natural(0, Base(7)).is_zero());

  // 5 = 2^2 + 1 = 2^(2^1) + 2^0
  HForm five = from_natural(5, Base(2));
  CHECK(render(five) == "1*2^(1*2^(1*2^(0))) + 1*2^(0)");

  // 26 = 2*9 + 2*3 + 2
  HForm f = from_natural(26, Base(3));
  REQUIRE(f.node()->terms().size() == 3);
  for (const Term& t : f.node()->terms()) {
    CHECK(std::get<Atom>(t).coeff == 2);
  }

  for (std::uint64_t n = 0; n <= 300; ++n) {
    for (std::uint64_t b : {2, 3, 5, 10}) {
      HForm g = from_natural(n, Base(b));
      validate_canonical(g);
      CHECK(value_of(g) == n);
    }
  }
}

TEST_CASE("successor carries coefficients into the next power") {
  // 2 + 1 = 3 = 3^1
  HForm three = successor(from_natural(2, Base(3)));
  CHECK(render(three) == "1*3^(1*3^(0))");

  // 8 + 1 = 9 = 3^2 (carry chains through two levels)
  CHECK(render(successor(from_natural(8, Base(3)))) == "1*3^(2*3^(0))");

  for (std::uint64_t n = 0; n <= 400; ++n) {
    for (std::uint64_t b : {2, 3, 7}) {
      HForm s = successor(from_natural(n, Base(b)));
      CHECK(structurally_equal(s, from_natural(n + 1, Base(b))));
    }
  }
}

TEST_CASE("successor telescopes a full block into one power") {
  // 2*(3^0) + 1 = 3
  HForm two_block(Base(3), make_node({Run{2, zero_node(), one()}}));
  CHECK(render(successor(two_block)) == "1*3^(1*3^(0))");

  // 26 + 1 = 27 = 3^(3^1); the block bound carries its suppressed unit
  HForm dec27 = decrement(from_natural(27, Base(3)));
  CHECK(render(successor(dec27)) == "1*3^(1*3^(1*3^(0)))");
}

TEST_CASE("decrement at exponent zero just lowers the coefficient") {
  CHECK(render(decrement(from_natural(5, Base(7)))) == "4*7^(0)");
  CHECK(decrement(from_natural(1, Base(2))).is_zero());
  CHECK_THROWS_AS(decrement(from_natural(0, Base(2))), std::invalid_argument);
}

TEST_CASE("decrement borrows into a compressed block") {
  // 3 - 1: block is [0, 1), bound shared with the old exponent
  HForm two = decrement(from_natural(3, Base(3)));
  CHECK(render(two) == "2*3^[0..1*3^(0))");
  CHECK(value_of(two) == 2);

  // 27 - 1: the bound of [0, 27's exponent) is written 2+1, not 3^1,
  // so replacing the base literal cannot widen the block
  HForm tsix = decrement(from_natural(27, Base(3)));
  CHECK(render(tsix) == "2*3^[0..3*3^(0))");
  CHECK(value_of(tsix) == 26);

  // 2*3^1 - 1 keeps the leftover coefficient
  HForm five = decrement(from_natural(6, Base(3)));
  CHECK(render(five) == "1*3^(1*3^(0)) + 2*3^[0..1*3^(0))");
  CHECK(value_of(five) == 5);
}

TEST_CASE("decrement shrinks a block that touches exponent zero") {
  // 42 = 2*(4^0+4^1+4^2) over base 4; the classic m=4 step after 26
  HForm f42(Base(4), make_node({Run{2, zero_node(), c(3)}}));
  validate_canonical(f42);
  CHECK(value_of(f42) == 42);
  HForm f41 = decrement(f42);
  CHECK(render(f41) == "2*4^[1*4^(0)..3*4^(0)) + 1*4^(0)");
  CHECK(value_of(f41) == 41);

  // a one-element block collapses to a plain coefficient
  HForm f3(Base(4), make_node({Run{3, zero_node(), one()}}));
  CHECK(render(decrement(f3)) == "2*4^(0)");
}

TEST_CASE("decrement of a lifted block refills the exponents below it") {
  // 84 = 2*(6^1+6^2); removing 6^1 leaves 2*6^2 + 6^1 + 5*6^0
  HForm f84(Base(6), make_node({Run{2, one(), c(3)}}));
  validate_canonical(f84);
  CHECK(value_of(f84) == 84);
  HForm f83 = decrement(f84);
  CHECK(render(f83) ==
        "2*6^[2*6^(0)..3*6^(0)) + 1*6^(1*6^(0)) + 5*6^[0..1*6^(0))");
  CHECK(value_of(f83) == 83);
}

TEST_CASE("decrement drops the value by exactly one everywhere") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    for (std::uint64_t b : {2, 3, 6, 11}) {
      HForm g = decrement(from_natural(n, Base(b)));
      validate_canonical(g);
      CHECK(value_of(g) == n - 1);
    }
  }
}

TEST_CASE("successor and decrement invert on the safe footing") {
  // whenever the low coefficient has headroom, the round trip is structural
  for (std::uint64_t b : {3, 5, 8}) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (n % b == 0 || n % b == b - 1) continue;
      HForm f = from_natural(n, Base(b));
      CHECK(structurally_equal(decrement(successor(f)), f));
      CHECK(structurally_equal(successor(decrement(f)), f));
    }
  }
}

TEST_CASE("compare_value implements exact numeric order without evaluating") {
  for (std::uint64_t a = 0; a <= 120; ++a) {
    for (std::uint64_t b = 0; b <= 120; ++b) {
      auto got = compare_value(from_natural(a, Base(3)), from_natural(b, Base(3)));
      CHECK(got == (a <=> b));
    }
  }
  CHECK_THROWS_AS(
      compare_value(from_natural(1, Base(2)), from_natural(1, Base(3))),
      std::invalid_argument);
}

TEST_CASE("compare_value sees through compression and suppressed carries") {
  // 2*(3^0) written as a block versus the plain digit
  HForm block(Base(3), make_node({Run{2, zero_node(), one()}}));
  CHECK(compare_value(block, from_natural(2, Base(3))) ==
        std::strong_ordering::equal);

  // an uncarried 3*3^0 equals the carried 3^1
  HForm relaxed(Base(3), make_node({Atom{3, zero_node()}}));
  CHECK(compare_value(relaxed, from_natural(3, Base(3))) ==
        std::strong_ordering::equal);
  CHECK(compare_value(relaxed, from_natural(2, Base(3))) ==
        std::strong_ordering::greater);
  CHECK(compare_value(relaxed, from_natural(4, Base(3))) ==
        std::strong_ordering::less);

  // decrement's block bound for 27 compares equal to the number 27's exponent
  HForm f26 = decrement(from_natural(27, Base(3)));
  const Run& r = std::get<Run>(f26.node()->terms()[0]);
  CHECK(compare_value(HForm(Base(3), r.hi_excl), from_natural(3, Base(3))) ==
        std::strong_ordering::equal);
}

TEST_CASE("bump rereads the same tree over a larger base") {
  HForm f = decrement(from_natural(27, Base(3)));  // 26
  HForm g = bump(f, Base(4));
  CHECK(g.node().get() == f.node().get());  // shares, does not copy
  CHECK(value_of(g) == 42);                 // 2*(4^0+4^1+4^2)
  CHECK_THROWS_AS(bump(f, Base(3)), std::invalid_argument);
  CHECK_THROWS_AS(bump(f, Base(2)), std::invalid_argument);

  // block-free forms rebase exactly like the hereditary digit rewrite
  HForm h = bump(from_natural(311, Base(3)), Base(10));
  CHECK(value_of(h) == oracle::rebase_value(311, 3, 10));
  CHECK(value_of(h) == BigNat("1020000000112"));  // 10^12 + 2*10^10 + 112
}

TEST_CASE("bump preserves numeric order") {
  for (std::uint64_t a = 0; a <= 90; ++a) {
    for (std::uint64_t b = 0; b <= 90; ++b) {
      auto before = compare_value(from_natural(a, Base(3)), from_natural(b, Base(3)));
      auto after = compare_value(bump(from_natural(a, Base(3)), Base(7)),
                                 bump(from_natural(b, Base(3)), Base(7)));
      CHECK(before == after);
    }
  }
}

TEST_CASE("make_form rejects every canonicity violation") {
  CHECK_THROWS_AS(make_form(Base(3), {Atom{0, zero_node()}}), validation_error);
  CHECK_THROWS_AS(make_form(Base(3), {Atom{3, zero_node()}}), validation_error);
  CHECK_THROWS_AS(make_form(Base(3), {Atom{1, zero_node()}, Atom{1, one()}}),
                  validation_error);  // ascending
  CHECK_THROWS_AS(make_form(Base(3), {Atom{1, one()}, Atom{1, one()}}),
                  validation_error);  // duplicate exponent
  CHECK_THROWS_AS(make_form(Base(3), {Run{2, one(), one()}}),
                  validation_error);  // empty block
  CHECK_THROWS_AS(make_form(Base(3), {Run{1, zero_node(), c(2)}, Atom{1, one()}}),
                  validation_error);  // block overlaps the next term

  // touching is legal: block [1,3) directly above exponent 0
  HForm ok = make_form(Base(4), {Run{1, one(), c(3)}, Atom{2, zero_node()}});
  CHECK(value_of(ok) == 4 + 16 + 2);
}

TEST_CASE("block bounds may carry one uncarried unit, digits may not") {
  // bound value equal to the base is the suppressed-carry successor form
  HForm ok = make_form(Base(4), {Run{1, zero_node(), c(4)}});
  CHECK(value_of(ok) == 1 + 4 + 16 + 64);
  CHECK_THROWS_AS(make_form(Base(4), {Run{1, zero_node(), c(5)}}),
                  validation_error);
  // a term coefficient itself never reaches the base
  CHECK_THROWS_AS(make_form(Base(4), {Atom{4, zero_node()}}), validation_error);
}

TEST_CASE("operations share untouched subtrees") {
  // 311 ends in a unit digit, so decrement just drops the minimal term
  HForm f = from_natural(311, Base(2));
  HForm g = decrement(f);
  const auto& ft = f.node()->terms();
  const auto& gt = g.node()->terms();
  REQUIRE(gt.size() == ft.size() - 1);
  // every term above the rewritten minimal one is the same object
  for (std::size_t i = 0; i < gt.size(); ++i) {
    CHECK(std::get<Atom>(ft[i]).exp.get() == std::get<Atom>(gt[i]).exp.get());
  }
}
