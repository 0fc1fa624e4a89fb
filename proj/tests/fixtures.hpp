// Shared fixtures: the small monoids and acts most tests revolve around.
#ifndef ACTS_TEST_FIXTURES_HPP
#define ACTS_TEST_FIXTURES_HPP

#include "acts/act.hpp"

namespace fixtures {

inline acts::MonoidPtr trivial_monoid() {
  return acts::validate_monoid("T", {{0}}, 0, {"1"});
}

// {1, e} with e*e = e.
inline acts::MonoidPtr semilattice2() {
  return acts::validate_monoid("E2", {{0, 1}, {1, 1}}, 0, {"1", "e"});
}

// The two-element group.
inline acts::MonoidPtr z2() {
  return acts::validate_monoid("Z2", {{0, 1}, {1, 0}}, 0, {"1", "g"});
}

// Left-zero semigroup {r, s} with an adjoined identity: x*y = x off the
// identity.
inline acts::MonoidPtr s3() {
  return acts::validate_monoid("S3", {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0, {"1", "r", "s"});
}

// {p, q, u} over s3(): p, q fixed, u*r = p, u*s = q.
inline acts::ActPtr b_act(const acts::MonoidPtr& m) {
  return acts::validate_act("B", m, {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}}, {"p", "q", "u"});
}

// Two fixed points; valid over any monoid.
inline acts::ActPtr fp2(const acts::MonoidPtr& m, const std::string& name = "A") {
  std::vector<std::vector<int>> table{std::vector<int>(m->order, 0),
                                      std::vector<int>(m->order, 1)};
  return acts::validate_act(name, m, table, {"p", "q"});
}

// The one-element act.
inline acts::ActPtr theta(const acts::MonoidPtr& m, const std::string& name = "Theta") {
  return acts::validate_act(name, m, {std::vector<int>(m->order, 0)}, {"o"});
}

// The free orbit over z2(): swap action.
inline acts::ActPtr free_orbit_z2(const acts::MonoidPtr& m) {
  return acts::validate_act("F", m, {{0, 1}, {1, 0}}, {"a", "b"});
}

} // namespace fixtures

#endif
