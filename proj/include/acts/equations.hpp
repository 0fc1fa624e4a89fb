// Finite systems of act equations (x*r = x*s, x*r = y*s, x*r = a) and a
// complete solver over a finite target act.
#ifndef ACTS_EQUATIONS_HPP
#define ACTS_EQUATIONS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acts/act.hpp"

namespace acts {

struct VarTerm {
  int var;    // variable id < var_count
  int scalar; // monoid element index
  friend bool operator==(const VarTerm&, const VarTerm&) = default;
};

struct ConstTerm {
  int elem; // element index into the constants' ambient act
  friend bool operator==(const ConstTerm&, const ConstTerm&) = default;
};

using Term = std::variant<VarTerm, ConstTerm>;

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

// A system is written over the constants' ambient act (its "world"): constant
// terms name elements of that act, confined to the designated subact.
struct EquationSystem {
  int var_count = 0;
  std::vector<std::string> var_names; // length var_count, for presentation
  SubactHandle constants;
  std::vector<Equation> equations;

  ActPtr world() const { return constants.act; }
};

struct Assignment {
  std::vector<int> values; // length var_count, indices into the solved-in act
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Validates index ranges and the constants invariant. Default var names are
// x0, x1, ...
EquationSystem make_system(SubactHandle constants, int var_count, std::vector<Equation> equations,
                           std::vector<std::string> var_names = {});

// Identity embedding of the system's world into itself.
ActHom identity_embed(const EquationSystem& sys);

// Evaluates a term under an assignment in the embed's target act.
int eval_term(const Term& term, const Assignment& assignment, const ActHom& embed);

bool assignment_satisfies(const EquationSystem& sys, const Assignment& assignment,
                          const ActHom& embed);

// Lexicographically least satisfying assignment in embed's target act, or
// nullopt. Arc-consistency preprocessing followed by backtracking in variable
// and value order. Throws Error{BadEmbedding} when embed is not a valid hom
// out of the system's world.
std::optional<Assignment> solve_system(const EquationSystem& sys, ActPtr target,
                                       const ActHom& embed);

// Same, with every variable's domain restricted to the allowed target
// elements (empty = no restriction). Used by the pure-closure search.
std::optional<Assignment> solve_system_restricted(const EquationSystem& sys, ActPtr target,
                                                  const ActHom& embed,
                                                  const std::vector<char>& allowed);

// The complete equation system a subact A <= B imposes on the missing
// elements: one variable per element of B \ A, an equation for every action
// relation between missing elements, and a constant equation whenever the
// action lands in A. Tautologies are omitted and syntactic duplicates are
// normalized away. The system's world is A as a standalone act, so it can be
// solved both in A (identity embedding) and in B (inclusion embedding).
EquationSystem diagram_system(const SubactHandle& sub);

// Variable index <-> ambient element correspondence used by diagram_system:
// variable i stands for the i-th element of B \ A in ascending index order.
std::vector<int> diagram_variable_elements(const SubactHandle& sub);

// Serializes one equation in the catalog `system` grammar, e.g. "x_u.r = @p".
std::string equation_text(const EquationSystem& sys, const Equation& eq);

} // namespace acts

#endif
