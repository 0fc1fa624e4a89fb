// Homomorphism search between finite acts, plus canonical forms and
// isomorphism testing.
#ifndef ACTS_HOM_HPP
#define ACTS_HOM_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "acts/act.hpp"

namespace acts {

using PinnedMap = std::map<int, int>; // source index -> forced target index

// All homomorphisms source -> target extending the pinned entries, in
// lexicographic order of their map sequences. Search assigns a greedy
// generating set of the source and propagates images of generated elements.
std::vector<ActHom> enumerate_homs(ActPtr source, ActPtr target, const PinnedMap& pinned = {});

// Visits homs in the same order; the visitor returns false to stop early.
// Returns true when the sweep ran to completion.
bool for_each_hom(ActPtr source, ActPtr target, const PinnedMap& pinned,
                  const std::function<bool(const ActHom&)>& visit);

// Lexicographically least hom extending the pinned entries, if any.
std::optional<ActHom> first_hom(ActPtr source, ActPtr target, const PinnedMap& pinned = {});

std::size_t count_homs(ActPtr source, ActPtr target, const PinnedMap& pinned = {});

// Elements of the source not generated by earlier elements, ascending.
std::vector<int> greedy_generators(const Act& a);

// g after f (f first). Throws Error{Validation} when targets mismatch.
ActHom compose(const ActHom& g, const ActHom& f);

// Sorted set of target indices hit by the hom; always an action-closed set.
std::vector<int> hom_image_members(const ActHom& h);

bool is_bijective_hom(const ActHom& h);
// Inverse of a bijective hom (always a hom for finite acts).
std::optional<ActHom> hom_inverse(const ActHom& h);

// Lexicographically minimal action table over all relabelings of the act's
// elements (monoid elements are never permuted). The identity column is
// omitted since it is forced. Guarded: throws Error{CapExceeded} for acts
// with more than canonical_form_cap elements.
inline constexpr int kCanonicalFormCap = 9;
std::vector<int> canonical_act_form(const Act& a);

// Canonical-form equality over a shared monoid. Throws Error{MixedMonoids}.
bool is_isomorphic(const Act& a, const Act& b);

} // namespace acts

#endif
