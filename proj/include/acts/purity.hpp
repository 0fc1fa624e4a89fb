// Deciding purity of subacts, extracting witness systems, and computing pure
// closures.
//
// For finite acts, a subact A <= B is pure exactly when A is a retract of B:
// the complete diagram system of the inclusion is a single finite system, a
// solution of which in A is precisely a retraction B -> A. The module decides
// purity three independent ways (retraction search, diagram solving, bounded
// system enumeration) and cross-checks them in the test suite.
#ifndef ACTS_PURITY_HPP
#define ACTS_PURITY_HPP

#include <optional>

#include "acts/equations.hpp"
#include "acts/hom.hpp"

namespace acts {

inline constexpr long long kDefaultSystemBudget = 2000000;
inline constexpr int kSubsetScanCap = 20;

enum class PurityMethod { Retraction, Diagram, Bounded };

const char* purity_method_name(PurityMethod m);

struct PurityVerdict {
  bool pure = false;
  PurityMethod method = PurityMethod::Retraction;
  // Present iff not pure and the method produces one (diagram method attaches
  // the full diagram system).
  std::optional<EquationSystem> witness;
  // Present iff pure via a method that produces one: a hom B -> A (as a
  // standalone act) sending members[k] to k, i.e. fixing the subact pointwise.
  std::optional<ActHom> retraction;
};

// Retraction search: pure iff some hom B -> A fixes every member.
PurityVerdict is_pure(const SubactHandle& sub);

// Diagram route: pure iff the complete diagram system is solvable in A.
PurityVerdict is_pure_via_diagram(const SubactHandle& sub);

// A subsystem of the diagram that is solvable in the ambient act but not in
// the subact, shrunk by greedy single-equation deletion and compacted to the
// variables it still uses. Absent when the subact is pure.
std::optional<EquationSystem> purity_witness(const SubactHandle& sub);

// Truncated enumeration: true iff every system with at most max_vars
// variables and max_eqs equations (constants in the subact, enumerated up to
// variable renaming) that is solvable in the ambient act is solvable in the
// subact. Throws Error{CapExceeded} past the instance budget.
bool is_pure_bounded(const SubactHandle& sub, int max_vars, int max_eqs,
                     long long budget = kDefaultSystemBudget);

struct PureClosureResult {
  SubactHandle closure;
  int iterations = 0; // witness rounds taken
};

// Iterates: start from the generated subact of the seed; while impure, solve
// the current purity witness in the ambient act picking the solution that
// adds the fewest new elements (ties: lexicographically least sorted tuple of
// new elements, then least assignment), and absorb the solution values.
// Each round strictly grows the subact, so at most |A| rounds happen; more
// indicate a bug and raise Error{Internal}.
PureClosureResult pure_closure_detailed(ActPtr act, const std::vector<int>& seed);
SubactHandle pure_closure(ActPtr act, const std::vector<int>& seed);

// Brute-force baseline: the cardinality-smallest pure subact containing the
// seed (lexicographic tie-break). Subset scan, so the act size is capped.
SubactHandle minimal_pure_superact_oracle(ActPtr act, const std::vector<int>& seed,
                                          int cap = kSubsetScanCap);

} // namespace acts

#endif
