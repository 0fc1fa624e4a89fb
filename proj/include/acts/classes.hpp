// Act classes over a finite monoid: relative-injectivity predicates for the
// built-in kinds, extensional (listed) classes, and bounded closure checks.
#ifndef ACTS_CLASSES_HPP
#define ACTS_CLASSES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acts/act.hpp"
#include "acts/hom.hpp"

namespace acts {

enum class ClassKind {
  AllActs,
  WeaklyPInjective,      // injective rel. principal right ideals I -> S
  WeaklyFInjective,      // injective rel. all right ideals I -> S
  AlmostPure,            // injective rel. K -> L with L cyclic
  AbsolutelyPureBounded, // injective rel. K -> L with |L| <= bound
  Extensional,           // membership = isomorphic to a listed act
};

const char* class_kind_name(ClassKind k);

struct ActClass {
  ClassKind kind = ClassKind::AllActs;
  MonoidPtr monoid;            // the monoid the class lives over
  int bound = 0;               // AbsolutelyPureBounded only
  std::vector<ActPtr> members; // Extensional only; nonempty, pairwise non-isomorphic

  std::string describe() const;
};

ActClass all_acts(MonoidPtr monoid);
ActClass weakly_p_injective(MonoidPtr monoid);
ActClass weakly_f_injective(MonoidPtr monoid);
ActClass almost_pure(MonoidPtr monoid);
ActClass absolutely_pure_bounded(MonoidPtr monoid, int bound);
// Deduplicates the list up to isomorphism; throws on an empty list.
ActClass extensional_class(std::vector<ActPtr> members);

// Default bound for the absolute-purity surrogate when none is given.
int default_abs_pure_bound(const Act& act);

// An inclusion K -> L presented as the ambient act plus the subact handle.
struct InclusionInstance {
  ActPtr ambient;    // L
  SubactHandle inner; // K, with inner.act == ambient
};

// S as a right act over itself.
ActPtr regular_act(const MonoidPtr& monoid);

// "{k1,k2} <= L" rendering of an inclusion instance.
std::string instance_text(const InclusionInstance& inst);

// Right ideals of S as subacts of the regular act, sorted by (size, members).
// principal_only restricts to the cyclic ideals aS.
std::vector<SubactHandle> right_ideal_acts(const MonoidPtr& monoid, bool principal_only);

// A right congruence as the partition it induces (class_of[x] = class id,
// ids numbered by first occurrence).
struct RightCongruence {
  std::vector<int> class_of;
  int class_count = 0;
};

// All right congruences of S with their quotient acts, in restricted-growth
// order of the partition strings.
std::vector<std::pair<RightCongruence, ActPtr>> cyclic_acts(const MonoidPtr& monoid);

struct RelInjResult {
  bool injective = true;
  // First failing pair: the inclusion plus the hom K -> A with no extension.
  std::optional<std::pair<InclusionInstance, ActHom>> counterexample;
};

// True iff for every instance K -> L and every hom K -> A there is an
// extension L -> A agreeing with it on K.
RelInjResult is_relatively_injective(const ActPtr& act,
                                     const std::vector<InclusionInstance>& instances);

// The defining inclusion family of a built-in class kind.
std::vector<InclusionInstance> class_instances(const ActClass& cls);

bool class_contains(const ActClass& cls, const ActPtr& act);
// Same, with the failing instance when membership fails for a built-in kind.
RelInjResult class_membership(const ActClass& cls, const ActPtr& act);

struct ClosureReport {
  bool product_closed = true;
  bool pure_subact_closed = true;
  std::vector<std::string> counterexamples;
};

// Checks the class against binary products of class members from the scope
// and against pure subacts of class members from the scope.
ClosureReport check_class_closure(const ActClass& cls, const std::vector<ActPtr>& scope,
                                  std::int64_t cap = kDefaultMaterializationCap);

} // namespace acts

#endif
