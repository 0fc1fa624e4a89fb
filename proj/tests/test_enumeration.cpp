#include <algorithm>
#include <set>

#include "doctest.h"

#include "acts/enumeration.hpp"
#include "acts/error.hpp"
#include "acts/hom.hpp"
#include "fixtures.hpp"

using namespace acts;

namespace {

// Naive oracle: generate every valid table, then filter isomorphism classes.
int count_monoids_naive(int n) {
  std::vector<std::vector<int>> tables;
  std::vector<int> mul(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) mul[i] = i, mul[static_cast<size_t>(i) * n] = i;
  std::vector<size_t> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.push_back(static_cast<size_t>(i) * n + j);
  std::vector<int> assign(cells.size(), 0);
  while (true) {
    for (size_t c = 0; c < cells.size(); ++c) mul[cells[c]] = assign[c];
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n && assoc; ++c)
          assoc = mul[static_cast<size_t>(mul[static_cast<size_t>(a) * n + b]) * n + c] ==
                  mul[static_cast<size_t>(a) * n + mul[static_cast<size_t>(b) * n + c]];
    if (assoc) tables.push_back(mul);
    int i = static_cast<int>(assign.size()) - 1;
    while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
    if (assign.empty()) break;
  }
  if (cells.empty()) return 1;

  // Group by canonical form under identity-fixing permutations.
  std::set<std::vector<int>> classes;
  for (const std::vector<int>& t : tables) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = t[static_cast<size_t>(i) * n + j];
    MonoidPtr m = validate_monoid("tmp", rows, 0, {});
    classes.insert(canonical_monoid_form(*m));
  }
  return static_cast<int>(classes.size());
}

} // namespace

TEST_CASE("monoid counts match the naive oracle and the known values") {
  CHECK(enumerate_monoids(1).size() == 1);
  CHECK(enumerate_monoids(2).size() == 2);
  CHECK(enumerate_monoids(3).size() == 7);
  for (int n = 1; n <= 3; ++n)
    CHECK(static_cast<int>(enumerate_monoids(n).size()) == count_monoids_naive(n));
}

TEST_CASE("enumerated monoids are pairwise non-isomorphic and canonical") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<MonoidPtr> ms = enumerate_monoids(n);
    for (size_t i = 0; i < ms.size(); ++i) {
      CHECK(ms[i]->identity == 0);
      for (size_t j = i + 1; j < ms.size(); ++j)
        CHECK(canonical_monoid_form(*ms[i]) != canonical_monoid_form(*ms[j]));
    }
  }
}

TEST_CASE("monoid enumeration cap") {
  try {
    enumerate_monoids(9);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("act counts over the small monoids") {
  MonoidPtr t = fixtures::trivial_monoid();
  for (int m = 1; m <= 4; ++m) CHECK(enumerate_acts(t, m).size() == 1);

  MonoidPtr e2 = fixtures::semilattice2();
  CHECK(enumerate_acts(e2, 1).size() == 1);
  CHECK(enumerate_acts(e2, 2).size() == 2); // identity e-action; constant e-action

  MonoidPtr z2 = fixtures::z2();
  CHECK(enumerate_acts(z2, 1).size() == 1);
  CHECK(enumerate_acts(z2, 2).size() == 2); // two fixed points; one free orbit
}

TEST_CASE("enumerated acts are valid, canonical, and pairwise non-isomorphic") {
  for (const MonoidPtr& m : {fixtures::semilattice2(), fixtures::z2(), fixtures::s3()})
    for (int size = 1; size <= 3; ++size) {
      std::vector<ActPtr> acts = enumerate_acts(m, size);
      for (size_t i = 0; i < acts.size(); ++i)
        for (size_t j = i + 1; j < acts.size(); ++j)
          CHECK_FALSE(is_isomorphic(*acts[i], *acts[j]));
    }
}

TEST_CASE("every valid act is isomorphic to exactly one enumerated act") {
  // Generate all raw tables of size 2 and 3 over the semilattice and match
  // them against the enumeration.
  MonoidPtr e2 = fixtures::semilattice2();
  for (int m = 2; m <= 3; ++m) {
    std::vector<ActPtr> canon = enumerate_acts(e2, m);
    std::vector<int> assign(m, 0);
    while (true) {
      std::vector<std::vector<int>> table(m, std::vector<int>(2));
      for (int a = 0; a < m; ++a) {
        table[a][0] = a;
        table[a][1] = assign[a];
      }
      bool valid = true;
      ActPtr act;
      try {
        act = validate_act("raw", e2, table, {});
      } catch (const Error&) {
        valid = false;
      }
      if (valid) {
        int matches = 0;
        for (const ActPtr& c : canon)
          if (is_isomorphic(*act, *c)) ++matches;
        CHECK(matches == 1);
      }
      int i = m - 1;
      while (i >= 0 && assign[i] == m - 1) assign[i--] = 0;
      if (i < 0) break;
      ++assign[i];
    }
  }
}

TEST_CASE("enumeration is deterministic across runs") {
  MonoidPtr s3 = fixtures::s3();
  std::vector<ActPtr> a = enumerate_acts(s3, 3);
  std::vector<ActPtr> b = enumerate_acts(s3, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i]->action == b[i]->action);
}

TEST_CASE("extensions of the one-point act over the trivial monoid") {
  MonoidPtr t = fixtures::trivial_monoid();
  ActPtr theta = fixtures::theta(t);
  std::vector<SubactHandle> exts = enumerate_extensions(theta, 1);
  CHECK(exts.size() == 1);
  CHECK(exts[0].act->size == 2);
  CHECK(exts[0].members == std::vector<int>{0});
}

TEST_CASE("extensions of the two fixed points over the left-zero monoid") {
  MonoidPtr s3 = fixtures::s3();
  ActPtr a = fixtures::fp2(s3);
  std::vector<SubactHandle> exts = enumerate_extensions(a, 1);
  CHECK(exts.size() == 5); // (x*r, x*s) in {(p,p),(p,q),(q,p),(q,q),(x,x)}
  for (const SubactHandle& ext : exts) {
    CHECK(ext.act->size == 3);
    CHECK(ext.members == std::vector<int>{0, 1});
    // The prefix reproduces A exactly.
    for (int e = 0; e < a->size; ++e)
      for (int s = 0; s < s3->order; ++s) CHECK(ext.act->at(e, s) == a->at(e, s));
  }
}

TEST_CASE("extension request with extra = 0 is rejected") {
  ActPtr theta = fixtures::theta(fixtures::trivial_monoid());
  CHECK_THROWS_AS(enumerate_extensions(theta, 0), Error);
}

TEST_CASE("subact enumeration fixtures") {
  CHECK(enumerate_subacts(fixtures::theta(fixtures::trivial_monoid())).size() == 1);

  MonoidPtr e2 = fixtures::semilattice2();
  ActPtr reg =
      validate_act("E2reg", e2, {{0, 1}, {1, 1}}, {"1", "e"});
  std::vector<SubactHandle> subs = enumerate_subacts(reg);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].members == std::vector<int>{1}); // {e}
  CHECK(subs[1].members == std::vector<int>{0, 1});

  ActPtr b = fixtures::b_act(fixtures::s3());
  std::vector<SubactHandle> bsubs = enumerate_subacts(b);
  REQUIRE(bsubs.size() == 4);
  CHECK(bsubs[0].members == std::vector<int>{0});
  CHECK(bsubs[1].members == std::vector<int>{1});
  CHECK(bsubs[2].members == std::vector<int>{0, 1});
  CHECK(bsubs[3].members == std::vector<int>{0, 1, 2});
}

TEST_CASE("catalog construction is stable") {
  Catalog cat = build_catalog(2, 2);
  CHECK(cat.monoids.size() == 3); // 1 of order one, 2 of order two
  for (const MonoidPtr& m : cat.monoids) {
    const std::vector<ActPtr>& acts = cat.acts_by_monoid.at(m->name);
    CHECK(!acts.empty());
    for (const ActPtr& a : acts) CHECK(a->size <= 2);
  }
}
