// Preenvelopes of acts into a class: the product construction over all maps
// into small class representatives, bounded verification of the factoring
// property by exhaustive search, pure-closure reduction of the product, and
// retraction extraction.
#ifndef ACTS_PREENVELOPE_HPP
#define ACTS_PREENVELOPE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "acts/classes.hpp"
#include "acts/purity.hpp"

namespace acts {

// The product of all coordinate targets, kept symbolic: elements are index
// tuples, the action is componentwise, and the canonical map out of the
// source sends a to the tuple of its coordinate images. Never materialized
// during construction.
struct LazyProductAct {
  ActPtr source;                                      // A
  std::vector<std::pair<ActPtr, ActHom>> coordinates; // (C', f: A -> C')

  std::int64_t full_size() const; // product of coordinate sizes (1 when empty)
  std::vector<int> map_tuple(int a) const;
};

// Class representatives up to isomorphism with size <= bound, ascending size
// then table order.
std::vector<ActPtr> class_representatives(const ActClass& cls, int bound);

struct FactoringCertificate {
  ActPtr target; // C'
  ActHom f;      // A -> C'
  ActHom g;      // C -> C' with g(phi(a)) = f(a)
};

struct FactoringReport {
  ActHom candidate; // phi: A -> C
  ActClass cls;
  int verify_bound = 0;
  bool verified = false;
  std::optional<std::pair<ActPtr, ActHom>> counterexample; // first (C', f) with no g
  std::vector<FactoringCertificate> certificates;          // one g per checked pair
};

// Sweeps every act C' in the class with |C'| <= verify_bound (up to
// isomorphism) and every hom f out of phi's source; verified when each pair
// admits g with g(phi(a)) = f(a). Throws Error{TargetNotInClass} when phi's
// target is not in the class.
FactoringReport verify_preenvelope(const ActHom& phi, const ActClass& cls, int verify_bound);

// The product construction: one coordinate per pair (C', f) with C' a class
// representative of size <= rep_bound and f: A -> C'. The projection onto
// each coordinate factors that coordinate's map by construction.
LazyProductAct product_preenvelope(const ActPtr& act, const ActClass& cls, int rep_bound);

// Evaluates every projection certificate pointwise.
bool check_projection_certificates(const LazyProductAct& product);

struct ProductReduction {
  ActPtr reduced;                // U, as a standalone act
  ActHom map;                    // phi': A -> U
  ActPtr materialized;           // the full product act P
  SubactHandle closure_in_product; // U as a subact of P
  int closure_iterations = 0;
};

// Materializes the product (Error{TooLarge} over the cap), takes the image
// of the canonical map as seed, and shrinks to its pure closure in P.
ProductReduction reduce_via_pure_closure(const LazyProductAct& product,
                                         std::int64_t cap = kDefaultMaterializationCap);

// First verifying candidate scanning class targets by ascending size and
// homs in lexicographic order; smallest-target preenvelope under the bounds.
std::optional<std::pair<ActHom, FactoringReport>>
find_min_preenvelope(const ActPtr& act, const ActClass& cls, int target_bound, int verify_bound);

struct EnvelopeReport {
  FactoringReport preenvelope;
  bool envelope = false;
  std::optional<ActHom> failing_endo; // a non-bijective g with g(phi(a)) = phi(a)
};

// A preenvelope is an envelope when every endomorphism of the target fixing
// the image pointwise over phi is an automorphism.
EnvelopeReport verify_envelope(const ActHom& phi, const ActClass& cls, int verify_bound);

// Lexicographically least g with g(phi(a)) = a for all a, if any.
std::optional<ActHom> extract_retraction(const ActHom& phi);

} // namespace acts

#endif
