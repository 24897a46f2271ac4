#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen32/errors.hpp"
#include "gen32/perm.hpp"

using namespace gen32;

TEST_CASE("composition is left to right") {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  const Perm ab = a * b;
  for (Point x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
  CHECK(ab.order() == 3);
}

TEST_CASE("inverse, powers, conjugation") {
  const Perm c = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.pow(5).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(c.order() == 5);
  const Perm g = Perm::from_cycles(5, {{0, 1}});
  CHECK(c.conjugate(g) == g.inverse() * c * g);
  CHECK(commutator(c, g) == c.inverse() * g.inverse() * c * g);
}

TEST_CASE("fixed points and first moved") {
  const Perm t = Perm::from_cycles(4, {{2, 3}});
  CHECK(t.fixed_points() == 2);
  CHECK(t.first_moved() == 2);
  CHECK(Perm(4).first_moved() == 4);
}

TEST_CASE("lexicographic order puts the identity first") {
  const Perm id(3);
  CHECK(id < Perm::from_cycles(3, {{1, 2}}));
  CHECK(Perm::from_cycles(3, {{1, 2}}) < Perm::from_cycles(3, {{0, 1}}));
}

TEST_CASE("text round trip and validation") {
  const Perm x = Perm::from_cycles(6, {{0, 3, 5}, {1, 2}});
  CHECK(Perm::parse(x.to_string()) == x);
  CHECK_THROWS_AS(Perm::parse("0 0 1"), FormatError);
  CHECK_THROWS_AS(Perm::parse("0 x 1"), FormatError);
  CHECK_THROWS(Perm(std::vector<Point>{0, 2}));
}
