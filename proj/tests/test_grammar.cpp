#include <doctest.h>

#include <goodstein/errors.hpp>
#include <goodstein/evaluate.hpp>
#include <goodstein/form.hpp>
#include <goodstein/grammar.hpp>
#include <goodstein/shape.hpp>

using namespace goodstein;

TEST_CASE("rendering is the documented canonical text") {
  CHECK(render(from_natural(5, Base(2))) == "1*2^(1*2^(1*2^(0))) + 1*2^(0)");
  CHECK(render(from_natural(0, Base(7))) == "0@7");
  CHECK(render(shape_of(from_natural(5, Base(2)))) ==
        "1*X^(1*X^(1*X^(0))) + 1*X^(0)");
  CHECK(render(shape_of(from_natural(0, Base(7)))) == "0@X");
  CHECK(render(decrement(from_natural(27, Base(3)))) == "2*3^[0..3*3^(0))");
}

TEST_CASE("forms round-trip through text") {
  for (std::uint64_t n : {0u, 1u, 2u, 5u, 26u, 27u, 100u, 311u, 65535u}) {
    for (std::uint64_t b : {2, 3, 10, 16}) {
      HForm f = from_natural(n, Base(b));
      std::string s = render(f);
      HForm back = parse_form(s);
      CHECK(structurally_equal(back, f));
      CHECK(render(back) == s);  // byte stable
    }
  }

  // engine-made blocks, including a suppressed-carry bound
  for (std::uint64_t n : {3u, 6u, 27u, 81u, 243u}) {
    HForm f = decrement(from_natural(n, Base(3)));
    std::string s = render(f);
    CHECK(structurally_equal(parse_form(s), f));
    CHECK(render(parse_form(s)) == s);
  }
}

TEST_CASE("whitespace between tokens is ignored") {
  HForm f = parse_form("  1*2^( 1*2^(0) )\t+ 1*2^(0) ");
  CHECK(structurally_equal(f, from_natural(3, Base(2))));
  CHECK(parse_form(" 0@5 ").is_zero());
}

TEST_CASE("syntax violations carry a byte offset") {
  auto pos_of = [](const char* text) {
    try {
      parse_form(text);
    } catch (const parse_error& e) {
      return e.position();
    }
    FAIL("expected parse_error for: ", text);
    return std::size_t(0);
  };

  CHECK(pos_of("") == 0);
  CHECK(pos_of("x") == 0);
  CHECK(pos_of("1*2^x") == 4);
  CHECK(pos_of("1*2^(0") == 6);          // unclosed exponent
  CHECK(pos_of("01*2^(0)") == 0);        // leading zero
  CHECK(pos_of("1*2^(0) 1*2^(0)") == 8); // missing separator
  CHECK(pos_of("1*2^[0.1)") == 6);       // block needs ".."
  CHECK(pos_of("1*X^(0)") == 2);         // X is the shape literal only
}

TEST_CASE("grammatical but non-canonical input fails validation") {
  CHECK_THROWS_AS(parse_form("0@1"), validation_error);
  CHECK_THROWS_AS(parse_form("2*2^(0)"), validation_error);
  CHECK_THROWS_AS(parse_form("0*2^(0)"), validation_error);
  CHECK_THROWS_AS(parse_form("1*2^(0) + 1*2^(1*2^(0))"), validation_error);
  CHECK_THROWS_AS(parse_form("1*2^(0) + 1*2^(0)"), validation_error);
  CHECK_THROWS_AS(parse_form("1*2^(1*3^(0))"), validation_error);  // mixed bases
  CHECK_THROWS_AS(parse_form("1*2^[0..0)"), validation_error);     // empty block
  CHECK_THROWS_AS(parse_form("1*4^[0..5*4^(0))"), validation_error);
}

TEST_CASE("suppressed-carry block bounds parse back") {
  HForm f = parse_form("2*3^[0..3*3^(0))");
  CHECK(*evaluate(f) == 26);
  CHECK(structurally_equal(f, decrement(from_natural(27, Base(3)))));

  // but a digit coefficient at the base is still rejected
  CHECK_THROWS_AS(parse_form("3*3^(0)"), validation_error);
}

TEST_CASE("shapes parse with the X literal and free coefficients") {
  Shape s = parse_shape("7*X^(0)");
  CHECK(render(s) == "7*X^(0)");

  Shape block = parse_shape("2*X^[0..3*X^(0))");
  CHECK(structurally_equal(block, shape_of(decrement(from_natural(27, Base(3))))));

  CHECK(parse_shape("0@X").is_zero());
  CHECK_THROWS_AS(parse_shape("1*2^(0)"), parse_error);  // digits are not X
  CHECK_THROWS_AS(parse_shape("0*X^(0)"), validation_error);
  CHECK_THROWS_AS(parse_shape("1*X^[0..0)"), validation_error);
}

TEST_CASE("zero exponents are literal zeros, not zero terms") {
  CHECK(*evaluate(parse_form("1*2^(0)")) == 1);
  CHECK_THROWS_AS(parse_form("1*2^(0*2^(0))"), validation_error);
}

TEST_CASE("decimal helpers accept canonical literals only") {
  CHECK(*parse_decimal("0") == 0);
  CHECK(*parse_decimal("311") == 311);
  CHECK(!parse_decimal("011").has_value());
  CHECK(!parse_decimal("-3").has_value());
  CHECK(!parse_decimal("1e3").has_value());
  CHECK(!parse_decimal("").has_value());
  CHECK(to_decimal(BigNat("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
}
