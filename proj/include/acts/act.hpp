// Finite right acts over a monoid: validated action tables, subacts,
// homomorphisms, and direct products.
#ifndef ACTS_ACT_HPP
#define ACTS_ACT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "acts/monoid.hpp"

namespace acts {

inline constexpr std::int64_t kDefaultMaterializationCap = 10000;

struct Act {
  std::string name;
  MonoidPtr monoid;
  int size = 0;                    // m
  std::vector<std::string> labels; // m distinct element labels
  std::vector<int> action;         // row-major m*n: action[a*n+s] = index of a * e_s

  int at(int a, int s) const { return action[static_cast<size_t>(a) * monoid->order + s]; }
  int label_index(const std::string& label) const; // -1 when absent
};

using ActPtr = std::shared_ptr<const Act>;

// A subact presented inside an ambient act: a nonempty, action-closed,
// strictly increasing list of element indices.
struct SubactHandle {
  ActPtr act;               // the ambient act
  std::vector<int> members; // sorted, nonempty, closed under the action

  bool contains(int elem) const;
  int position_of(int elem) const; // index into members, -1 when absent
  bool is_whole_act() const { return static_cast<int>(members.size()) == act->size; }
};

// A homomorphism of acts over one monoid: map[a * s] = map[a] * s.
struct ActHom {
  ActPtr source;
  ActPtr target;
  std::vector<int> map; // length source->size, entries index into target

  int operator()(int a) const { return map[a]; }
};

// Validates the unit and associativity axioms of a right act.
// Throws Error{IdentityAxiom} / Error{AssociativityAxiom} with the first
// failure in lexicographic order.
ActPtr validate_act(std::string name, MonoidPtr monoid, const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels);

// Checks nonemptiness, sortedness and closure; throws Error{Validation}.
SubactHandle make_subact(ActPtr act, std::vector<int> members);

// Smallest action-closed superset of the seed. Throws Error{EmptySeed}.
SubactHandle generated_subact(ActPtr act, const std::vector<int>& seed);

// The subact re-indexed as a standalone act (element k = members[k]).
ActPtr subact_as_act(const SubactHandle& sub, std::string name = "");

// The inclusion homomorphism subact_as_act(sub) -> sub.act.
ActHom inclusion_hom(const SubactHandle& sub);

// Direct product with componentwise action. Elements are tuples in
// lexicographic order, first factor most significant. Throws
// Error{MixedMonoids} and Error{TooLarge} when the size exceeds the cap.
ActPtr product_act(const std::vector<ActPtr>& factors,
                   std::int64_t cap = kDefaultMaterializationCap);

// Helpers shared across modules.
bool is_fixed_point(const Act& a, int elem);
std::vector<int> fixed_points(const Act& a);

// Validates an already-built map; throws Error{BadEmbedding} when the map is
// not a homomorphism and Error{MixedMonoids} when the acts disagree.
ActHom make_hom(ActPtr source, ActPtr target, std::vector<int> map);
bool is_hom_map(const Act& source, const Act& target, const std::vector<int>& map);

} // namespace acts

#endif
