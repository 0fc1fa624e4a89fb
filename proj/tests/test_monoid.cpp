#include "doctest.h"

#include "acts/error.hpp"
#include "acts/monoid.hpp"
#include "fixtures.hpp"

using namespace acts;

TEST_CASE("trivial monoid validates") {
  MonoidPtr m = validate_monoid("T", {{0}}, 0, {"1"});
  CHECK(m->order == 1);
  CHECK(m->at(0, 0) == 0);
}

TEST_CASE("two-element idempotent table validates") {
  MonoidPtr m = validate_monoid("E2", {{0, 1}, {1, 1}}, 0, {"1", "e"});
  CHECK(m->order == 2);
  CHECK(m->at(1, 1) == 1);
}

TEST_CASE("first associativity failure is reported lexicographically") {
  try {
    validate_monoid("bad", {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0, {"1", "a", "b"});
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    CHECK(e.where() == std::vector<long>{1, 1, 2});
  }
}

TEST_CASE("identity law failures are caught") {
  try {
    validate_monoid("bad", {{1, 1}, {1, 1}}, 0, {"1", "e"});
    FAIL("expected NotIdentity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIdentity);
  }
}

TEST_CASE("left-zero-plus-identity fixture is a monoid") {
  MonoidPtr m = fixtures::s3();
  CHECK(m->order == 3);
  CHECK(m->at(1, 2) == 1); // r*s = r
  CHECK(m->at(2, 1) == 2); // s*r = s
}

TEST_CASE("structural equality ignores labels") {
  MonoidPtr a = validate_monoid("X", {{0, 1}, {1, 1}}, 0, {"1", "e"});
  MonoidPtr b = validate_monoid("Y", {{0, 1}, {1, 1}}, 0, {"u", "v"});
  CHECK(same_monoid(*a, *b));
  CHECK_FALSE(same_monoid(*a, *fixtures::z2()));
}

TEST_CASE("canonical monoid form is relabeling-invariant") {
  // Z2 written with the identity in slot 1.
  MonoidPtr shuffled = validate_monoid("Z2s", {{1, 0}, {0, 1}}, 1, {"g", "1"});
  CHECK(canonical_monoid_form(*shuffled) == canonical_monoid_form(*fixtures::z2()));
  CHECK(canonical_monoid_form(*fixtures::z2()) != canonical_monoid_form(*fixtures::semilattice2()));
}
