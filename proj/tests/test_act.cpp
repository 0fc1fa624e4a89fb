#include <algorithm>

#include "doctest.h"

#include "acts/act.hpp"
#include "acts/error.hpp"
#include "acts/hom.hpp"
#include "fixtures.hpp"

using namespace acts;

TEST_CASE("act validation accepts the standard fixtures") {
  MonoidPtr e2 = fixtures::semilattice2();
  CHECK(validate_act("theta", e2, {{0, 0}}, {"o"})->size == 1);
  ActPtr a = validate_act("cp2", e2, {{0, 1}, {1, 1}}, {"a", "b"});
  CHECK(a->at(0, 1) == 1);
}

TEST_CASE("act axiom failures are caught") {
  MonoidPtr e2 = fixtures::semilattice2();
  try {
    validate_act("bad", e2, {{1, 1}, {1, 1}}, {"a", "b"});
    FAIL("expected IdentityAxiom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdentityAxiom);
    CHECK(e.where() == std::vector<long>{0});
  }
  // a*e = b but b*e = a breaks a*(e*e) = (a*e)*e.
  try {
    validate_act("bad2", e2, {{0, 1}, {1, 0}}, {"a", "b"});
    FAIL("expected AssociativityAxiom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AssociativityAxiom);
  }
}

TEST_CASE("generated subact walks the orbit") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  CHECK(generated_subact(b, {2}).members == std::vector<int>{0, 1, 2});
  CHECK(generated_subact(b, {0}).members == std::vector<int>{0});
  CHECK_THROWS_AS(generated_subact(b, {}), Error);
  try {
    generated_subact(b, {});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySeed);
  }
}

TEST_CASE("generated subact is idempotent") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  for (int a = 0; a < b->size; ++a) {
    SubactHandle u = generated_subact(b, {a});
    CHECK(generated_subact(b, u.members).members == u.members);
  }
}

TEST_CASE("make_subact rejects non-closed sets") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  CHECK_THROWS_AS(make_subact(b, {2}), Error);          // u's orbit leaves {u}
  CHECK(make_subact(b, {0, 1}).members.size() == 2);    // {p,q} closed
  CHECK_THROWS_AS(make_subact(b, {}), Error);
  CHECK_THROWS_AS(make_subact(b, {1, 0}), Error);       // not increasing
}

TEST_CASE("product with a one-element factor is isomorphic to the other factor") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr b = fixtures::b_act(s3);
  ActPtr t = fixtures::theta(s3);
  ActPtr p = product_act({t, b});
  CHECK(p->size == b->size);
  CHECK(is_isomorphic(*p, *b));
}

TEST_CASE("product sizes multiply and the action is componentwise") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr a = fixtures::fp2(s3);
  ActPtr b = fixtures::b_act(s3);
  ActPtr p = product_act({a, b});
  CHECK(p->size == 6);

  ActPtr bb = product_act({b, b});
  // (u,u)*r = (p,p): u has index 2, so (u,u) is element 2*3+2 = 8.
  int uu = 2 * 3 + 2;
  CHECK(bb->at(uu, 1) == 0 * 3 + 0);
  CHECK(bb->labels[uu] == "u*u");
}

TEST_CASE("product respects the materialization cap") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  try {
    product_act({b, b, b}, 10);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("products of acts over different monoids are rejected") {
  ActPtr x = fixtures::theta(fixtures::z2());
  ActPtr y = fixtures::theta(fixtures::semilattice2());
  try {
    product_act({x, y});
    FAIL("expected MixedMonoids");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedMonoids);
  }
}

TEST_CASE("single-factor product is isomorphic to the factor") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  CHECK(is_isomorphic(*product_act({b}), *b));
}

TEST_CASE("subact_as_act reindexes the table") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  SubactHandle pq = make_subact(b, {0, 1});
  ActPtr inner = subact_as_act(pq);
  CHECK(inner->size == 2);
  CHECK(inner->labels == std::vector<std::string>{"p", "q"});
  for (int s = 0; s < 3; ++s) {
    CHECK(inner->at(0, s) == 0);
    CHECK(inner->at(1, s) == 1);
  }
  ActHom incl = inclusion_hom(pq);
  CHECK(incl.map == std::vector<int>{0, 1});
}
