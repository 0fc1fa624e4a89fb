#include <algorithm>

#include "doctest.h"

#include "acts/classes.hpp"
#include "acts/enumeration.hpp"
#include "acts/error.hpp"
#include "acts/purity.hpp"
#include "fixtures.hpp"

using namespace acts;

TEST_CASE("right ideals of the small monoids") {
  MonoidPtr t = fixtures::trivial_monoid();
  std::vector<SubactHandle> ideals = right_ideal_acts(t, false);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0].members == std::vector<int>{0});

  MonoidPtr e2 = fixtures::semilattice2();
  std::vector<SubactHandle> principal = right_ideal_acts(e2, true);
  std::vector<SubactHandle> all = right_ideal_acts(e2, false);
  REQUIRE(principal.size() == 2); // {e} and S
  CHECK(principal[0].members == std::vector<int>{1});
  CHECK(principal[1].members == std::vector<int>{0, 1});
  REQUIRE(all.size() == 2); // unions add nothing new
  CHECK(all[0].members == principal[0].members);
  CHECK(all[1].members == principal[1].members);

  MonoidPtr s3 = fixtures::s3();
  std::vector<SubactHandle> p3 = right_ideal_acts(s3, true);
  std::vector<SubactHandle> a3 = right_ideal_acts(s3, false);
  REQUIRE(p3.size() == 3); // {r}, {s}, S
  CHECK(p3[0].members == std::vector<int>{1});
  CHECK(p3[1].members == std::vector<int>{2});
  CHECK(p3[2].members == std::vector<int>{0, 1, 2});
  REQUIRE(a3.size() == 4); // plus {r,s}
  CHECK(a3[2].members == std::vector<int>{1, 2});
}

TEST_CASE("ideals are action-closed and closed under union") {
  for (const MonoidPtr& m : {fixtures::semilattice2(), fixtures::z2(), fixtures::s3()}) {
    std::vector<SubactHandle> all = right_ideal_acts(m, false);
    for (const SubactHandle& i : all) CHECK_NOTHROW(make_subact(i.act, i.members));
    for (const SubactHandle& i : all)
      for (const SubactHandle& j : all) {
        std::vector<int> u;
        std::set_union(i.members.begin(), i.members.end(), j.members.begin(), j.members.end(),
                       std::back_inserter(u));
        bool found = false;
        for (const SubactHandle& k : all)
          if (k.members == u) found = true;
        CHECK(found);
      }
  }
}

TEST_CASE("right congruences of the small monoids") {
  CHECK(cyclic_acts(fixtures::trivial_monoid()).size() == 1);
  CHECK(cyclic_acts(fixtures::semilattice2()).size() == 2);
  CHECK(cyclic_acts(fixtures::s3()).size() == 3);
}

TEST_CASE("quotient acts are cyclic, i.e. generated by one element") {
  for (const MonoidPtr& m : {fixtures::semilattice2(), fixtures::z2(), fixtures::s3()})
    for (const auto& [rho, quotient] : cyclic_acts(m)) {
      bool generated = false;
      for (int x = 0; x < quotient->size && !generated; ++x)
        generated = static_cast<int>(generated_subact(quotient, {x}).members.size()) ==
                    quotient->size;
      CHECK(generated);
      // The identity's class always generates.
      CHECK(static_cast<int>(
                generated_subact(quotient, {rho.class_of[m->identity]}).members.size()) ==
            quotient->size);
    }
}

TEST_CASE("relative injectivity: vacuous, failing, and passing instances") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr a = fixtures::fp2(s3);

  CHECK(is_relatively_injective(a, {}).injective);

  ActPtr reg = regular_act(s3);
  SubactHandle rs = make_subact(reg, {1, 2}); // the ideal {r, s}
  RelInjResult bad = is_relatively_injective(a, {InclusionInstance{reg, rs}});
  CHECK_FALSE(bad.injective);
  REQUIRE(bad.counterexample);
  // h(r) = p, h(s) = q admits no extension; the lexicographically first
  // failing hom is (0, 1).
  CHECK(bad.counterexample->second.map == std::vector<int>{0, 1});

  SubactHandle just_r = make_subact(reg, {1});
  CHECK(is_relatively_injective(a, {InclusionInstance{reg, just_r}}).injective);
}

TEST_CASE("class membership fixtures over the left-zero monoid") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr a = fixtures::fp2(s3);
  CHECK(class_contains(all_acts(s3), a));
  CHECK(class_contains(weakly_p_injective(s3), a));
  CHECK_FALSE(class_contains(weakly_f_injective(s3), a));
  CHECK_FALSE(class_contains(almost_pure(s3), a));
  CHECK_FALSE(class_contains(absolutely_pure_bounded(s3, 4), a));
}

TEST_CASE("extensional classes test isomorphism") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr theta = fixtures::theta(s3);
  ActClass cls = extensional_class({theta});
  CHECK(class_contains(cls, fixtures::theta(s3, "other")));
  CHECK_FALSE(class_contains(cls, fixtures::fp2(s3)));

  // Members are deduplicated up to isomorphism.
  ActClass two = extensional_class({theta, fixtures::theta(s3, "copy")});
  CHECK(two.members.size() == 1);
}

TEST_CASE("mixed monoids are rejected") {
  ActPtr x = fixtures::theta(fixtures::z2());
  CHECK_THROWS_AS(class_contains(all_acts(fixtures::semilattice2()), x), Error);
}

TEST_CASE("class hierarchy over small catalogs") {
  // abs-pure(4) => almost pure => weakly f-injective => weakly p-injective.
  for (int order = 1; order <= 2; ++order)
    for (const MonoidPtr& m : enumerate_monoids(order))
      for (int size = 1; size <= 3; ++size)
        for (const ActPtr& act : enumerate_acts(m, size)) {
          bool ap = class_contains(absolutely_pure_bounded(m, 4), act);
          bool almost = class_contains(almost_pure(m), act);
          bool wf = class_contains(weakly_f_injective(m), act);
          bool wp = class_contains(weakly_p_injective(m), act);
          if (ap) CHECK(almost);
          if (almost) CHECK(wf);
          if (wf) CHECK(wp);
        }
}

TEST_CASE("abs-pure membership is monotone nonincreasing in the bound") {
  MonoidPtr s3 = fixtures::s3();
  for (const ActPtr& act : enumerate_acts(s3, 3))
    for (int n = 1; n + 1 <= 4; ++n) {
      bool wide = class_contains(absolutely_pure_bounded(s3, n + 1), act);
      if (wide) CHECK(class_contains(absolutely_pure_bounded(s3, n), act));
    }
}

TEST_CASE("closure report for the one-point extensional class") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr theta = fixtures::theta(s3);
  ClosureReport r = check_class_closure(extensional_class({theta}), {theta});
  CHECK(r.product_closed);
  CHECK(r.pure_subact_closed);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("weak p-injectivity is closed over the two-element semilattice") {
  MonoidPtr e2 = fixtures::semilattice2();
  std::vector<ActPtr> scope;
  for (int m = 1; m <= 2; ++m)
    for (const ActPtr& a : enumerate_acts(e2, m)) scope.push_back(a);
  ClosureReport r = check_class_closure(weakly_p_injective(e2), scope);
  CHECK(r.product_closed);
  CHECK(r.pure_subact_closed);
}

TEST_CASE("a self-product that changes size breaks extensional closure") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr reg = regular_act(s3);
  ClosureReport r = check_class_closure(extensional_class({reg}), {reg});
  CHECK_FALSE(r.product_closed);
  REQUIRE(!r.counterexamples.empty());
}

TEST_CASE("default abs-pure bound is |A| + |S|") {
  ActPtr b = fixtures::b_act(fixtures::s3());
  CHECK(default_abs_pure_bound(*b) == 6);
}
