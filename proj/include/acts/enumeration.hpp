// Canonical, isomorphism-free generators of small monoids, acts, subacts and
// one-point-at-a-time extensions. These feed every property sweep in the
// test suite.
#ifndef ACTS_ENUMERATION_HPP
#define ACTS_ENUMERATION_HPP

#include <map>
#include <string>
#include <vector>

#include "acts/act.hpp"

namespace acts {

inline constexpr int kMaxMonoidOrder = 4;
inline constexpr int kMaxEnumActSize = 5;

// All monoids of the given order up to isomorphism, identity at index 0,
// sorted by multiplication table. Throws Error{CapExceeded} past the cap.
std::vector<MonoidPtr> enumerate_monoids(int order, int cap = kMaxMonoidOrder);

// All acts of the given size over S up to isomorphism (act-element
// relabelings only), sorted by action table.
std::vector<ActPtr> enumerate_acts(const MonoidPtr& monoid, int size, int cap = kMaxEnumActSize);

// All acts of size |A| + extra containing A as the prefix subact, up to
// isomorphisms fixing A pointwise. Returned as handles onto the extension
// with members = A's indices.
std::vector<SubactHandle> enumerate_extensions(const ActPtr& base, int extra,
                                               int cap = kMaxEnumActSize + 3);

// All nonempty action-closed subsets, sorted by (size, members).
std::vector<SubactHandle> enumerate_subacts(const ActPtr& act, int cap = 20);

struct Catalog {
  int max_order = 0;
  int max_act_size = 0;
  std::vector<MonoidPtr> monoids;
  std::map<std::string, std::vector<ActPtr>> acts_by_monoid; // keyed by monoid name
};

// Monoids of order 1..max_order with all acts of size 1..max_act_size each.
Catalog build_catalog(int max_order, int max_act_size);

} // namespace acts

#endif
