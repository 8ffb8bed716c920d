#include <doctest.h>

#include <goodstein/errors.hpp>
#include <goodstein/form.hpp>
#include <goodstein/grammar.hpp>
#include <goodstein/shape.hpp>

using namespace goodstein;

TEST_CASE("taking the shape is free and base replacement keeps it") {
  HForm f = decrement(from_natural(27, Base(3)));
  Shape s = shape_of(f);
  CHECK(s.node().get() == f.node().get());

  CHECK(structurally_equal(shape_of(bump(f, Base(4))), s));
  CHECK(structurally_equal(shape_of(bump(f, Base(1000))), s));
  CHECK(render(s) == "2*X^[0..3*X^(0))");
}

TEST_CASE("shape order matches value order on block-free forms") {
  for (std::uint64_t a = 0; a <= 150; ++a) {
    for (std::uint64_t b = 0; b <= 150; ++b) {
      auto sh = compare_shape(shape_of(from_natural(a, Base(3))),
                              shape_of(from_natural(b, Base(3))));
      CHECK(sh == (a <=> b));
    }
  }
}

TEST_CASE("shape order is insensitive to the base the form carried") {
  // 100 in any base has the same value order; shapes differ per base but
  // compare consistently when both sides use the same base
  for (std::uint64_t b : {2, 5, 13}) {
    CHECK(compare_shape(shape_of(from_natural(99, Base(b))),
                        shape_of(from_natural(100, Base(b)))) ==
          std::strong_ordering::less);
  }
}

TEST_CASE("a one-element block and its atom are the same shape rank") {
  Shape block = parse_shape("1*X^[0..1*X^(0))");
  Shape atom = parse_shape("1*X^(0)");
  CHECK(compare_shape(block, atom) == std::strong_ordering::equal);
  CHECK(compare_shape(atom, block) == std::strong_ordering::equal);
  // but they are distinct structures
  CHECK(!structurally_equal(block, atom));
}

TEST_CASE("make_shape enforces ordering but not a coefficient cap") {
  NodePtr one = make_node({Atom{1, zero_node()}});
  Shape big = make_shape({Atom{1000000, one}, Atom{999, zero_node()}});
  CHECK(render(big) == "1000000*X^(1*X^(0)) + 999*X^(0)");
  CHECK_THROWS_AS(make_shape({Atom{0, zero_node()}}), validation_error);
  CHECK_THROWS_AS(make_shape({Atom{1, zero_node()}, Atom{1, one}}),
                  validation_error);
}

TEST_CASE("check_step_decrease accepts real steps") {
  // the first four classic steps from 4
  HForm f = from_natural(4, Base(2));
  for (std::uint64_t b = 3; b <= 8; ++b) {
    HForm after = decrement(bump(f, Base(b)));
    StepDecrease d = check_step_decrease(f, after, Base(b));
    CHECK(d.ok);
    CHECK(d.detail.empty());
    CHECK(compare_shape(shape_of(after), shape_of(f)) ==
          std::strong_ordering::less);
    f = after;
  }
}

TEST_CASE("check_step_decrease flags a non-decreasing step") {
  HForm before = from_natural(2, Base(2));
  // a fake "after" equal to the bumped form: nothing was subtracted
  HForm fake = from_natural(3, Base(3));
  StepDecrease d = check_step_decrease(before, fake, Base(3));
  CHECK(!d.ok);
  CHECK(!d.detail.empty());

  // zero before the step is not a step at all
  StepDecrease z = check_step_decrease(from_natural(0, Base(2)),
                                       from_natural(0, Base(3)), Base(3));
  CHECK(!z.ok);
}

TEST_CASE("shapes of successive decrements strictly descend") {
  HForm f = from_natural(200, Base(3));
  Shape prev = shape_of(f);
  while (!f.is_zero()) {
    f = decrement(f);
    Shape cur = shape_of(f);
    CHECK(compare_shape(cur, prev) == std::strong_ordering::less);
    prev = cur;
  }
}
