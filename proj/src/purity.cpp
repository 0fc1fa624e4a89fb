#include "acts/purity.hpp"

#include <algorithm>
#include <map>

#include "acts/error.hpp"

namespace acts {

const char* purity_method_name(PurityMethod m) {
  switch (m) {
  case PurityMethod::Retraction: return "retraction";
  case PurityMethod::Diagram: return "diagram";
  case PurityMethod::Bounded: return "bounded";
  }
  return "unknown";
}

namespace {

PinnedMap identity_pins(const SubactHandle& sub) {
  PinnedMap pins;
  for (int k = 0; k < static_cast<int>(sub.members.size()); ++k) pins[sub.members[k]] = k;
  return pins;
}

} // namespace

PurityVerdict is_pure(const SubactHandle& sub) {
  PurityVerdict verdict;
  verdict.method = PurityMethod::Retraction;
  ActPtr inner = subact_as_act(sub);
  std::optional<ActHom> retraction = first_hom(sub.act, inner, identity_pins(sub));
  verdict.pure = retraction.has_value();
  verdict.retraction = std::move(retraction);
  return verdict;
}

PurityVerdict is_pure_via_diagram(const SubactHandle& sub) {
  PurityVerdict verdict;
  verdict.method = PurityMethod::Diagram;
  EquationSystem diagram = diagram_system(sub);
  std::optional<Assignment> solution =
      solve_system(diagram, diagram.world(), identity_embed(diagram));
  verdict.pure = solution.has_value();
  if (solution) {
    // A solution of the diagram in A is exactly a retraction B -> A.
    std::vector<int> vars = diagram_variable_elements(sub);
    std::vector<int> map(sub.act->size, -1);
    for (int k = 0; k < static_cast<int>(sub.members.size()); ++k) map[sub.members[k]] = k;
    for (int i = 0; i < static_cast<int>(vars.size()); ++i) map[vars[i]] = solution->values[i];
    verdict.retraction = make_hom(sub.act, diagram.world(), std::move(map));
  } else {
    verdict.witness = std::move(diagram);
  }
  return verdict;
}

namespace {

// Keeps the given subset of equations, with variables renumbered to the ones
// still used (ascending original id).
EquationSystem compact_system(const EquationSystem& sys, std::vector<Equation> keep) {
  std::vector<int> used(sys.var_count, -1);
  std::vector<std::string> names;
  int next = 0;
  auto touch = [&](const Term& t) {
    if (const auto* v = std::get_if<VarTerm>(&t))
      if (used[v->var] < 0) used[v->var] = 1; // mark
  };
  for (const Equation& eq : keep) {
    touch(eq.lhs);
    touch(eq.rhs);
  }
  for (int v = 0; v < sys.var_count; ++v)
    if (used[v] > 0) {
      used[v] = next++;
      names.push_back(sys.var_names[v]);
    }
  for (Equation& eq : keep)
    for (Term* t : {&eq.lhs, &eq.rhs})
      if (auto* v = std::get_if<VarTerm>(t)) v->var = used[v->var];
  return make_system(sys.constants, next, std::move(keep), std::move(names));
}

bool solvable_in_world(const EquationSystem& sys, const std::vector<Equation>& equations) {
  EquationSystem probe{sys.var_count, sys.var_names, sys.constants, equations};
  return solve_system(probe, probe.world(), identity_embed(probe)).has_value();
}

} // namespace

std::optional<EquationSystem> purity_witness(const SubactHandle& sub) {
  EquationSystem diagram = diagram_system(sub);
  if (solvable_in_world(diagram, diagram.equations)) return std::nullopt;

  // Greedy single-deletion: drop an equation whenever the remainder is still
  // unsolvable in the subact.
  std::vector<Equation> current = diagram.equations;
  size_t i = 0;
  while (i < current.size()) {
    std::vector<Equation> trial;
    trial.reserve(current.size() - 1);
    for (size_t j = 0; j < current.size(); ++j)
      if (j != i) trial.push_back(current[j]);
    if (!solvable_in_world(diagram, trial))
      current = std::move(trial);
    else
      ++i;
  }
  return compact_system(diagram, std::move(current));
}

namespace {

// Normalized candidate equations over max_vars variables with constants in
// the subact, in a fixed deterministic order.
std::vector<Equation> bounded_universe(const EquationSystem& base, int max_vars) {
  const int n = base.world()->monoid->order;
  std::vector<Equation> universe;
  auto term_rank = [n](const VarTerm& t) { return t.var * n + t.scalar; };
  for (int v1 = 0; v1 < max_vars; ++v1)
    for (int s1 = 0; s1 < n; ++s1)
      for (int v2 = v1; v2 < max_vars; ++v2)
        for (int s2 = 0; s2 < n; ++s2) {
          VarTerm a{v1, s1}, b{v2, s2};
          if (term_rank(b) <= term_rank(a)) continue;
          universe.push_back({a, b});
        }
  for (int v = 0; v < max_vars; ++v)
    for (int s = 0; s < n; ++s)
      for (int c : base.constants.members) universe.push_back({VarTerm{v, s}, ConstTerm{c}});
  return universe;
}

// Variables must appear in first-occurrence order 0,1,2,... so each renaming
// class is enumerated at least once and near-duplicates are skipped cheaply.
bool first_occurrence_canonical(const std::vector<const Equation*>& eqs) {
  int seen = 0;
  auto check = [&](const Term& t) {
    if (const auto* v = std::get_if<VarTerm>(&t)) {
      if (v->var > seen) return false;
      if (v->var == seen) ++seen;
    }
    return true;
  };
  for (const Equation* eq : eqs)
    if (!check(eq->lhs) || !check(eq->rhs)) return false;
  return true;
}

} // namespace

bool is_pure_bounded(const SubactHandle& sub, int max_vars, int max_eqs, long long budget) {
  if (max_vars < 1 || max_eqs < 1)
    throw Error(ErrorKind::Validation, "is_pure_bounded: bounds must be at least 1");

  ActPtr inner = subact_as_act(sub);
  SubactHandle whole = make_subact(inner, [&] {
    std::vector<int> all(inner->size);
    for (int i = 0; i < inner->size; ++i) all[i] = i;
    return all;
  }());
  EquationSystem base{max_vars, {}, whole, {}};
  for (int i = 0; i < max_vars; ++i) base.var_names.push_back("x" + std::to_string(i));
  ActHom inclusion = inclusion_hom(sub);
  ActHom identity = identity_embed(base);

  const std::vector<Equation> universe = bounded_universe(base, max_vars);
  const int u = static_cast<int>(universe.size());
  long long instances = 0;
  bool ok = true;

  // All combinations of 1..max_eqs universe equations, lexicographic.
  std::vector<int> pick;
  std::vector<const Equation*> chosen;
  auto test_current = [&]() {
    if (!first_occurrence_canonical(chosen)) return true;
    if (++instances > budget)
      throw Error(ErrorKind::CapExceeded, "is_pure_bounded: instance budget exceeded");
    EquationSystem probe{base.var_count, base.var_names, base.constants, {}};
    probe.equations.reserve(chosen.size());
    for (const Equation* eq : chosen) probe.equations.push_back(*eq);
    if (!solve_system(probe, sub.act, inclusion).has_value()) return true;
    return solve_system(probe, inner, identity).has_value();
  };

  std::function<bool(int)> rec = [&](int start) {
    if (!chosen.empty() && !test_current()) return false;
    if (static_cast<int>(chosen.size()) == max_eqs) return true;
    for (int i = start; i < u; ++i) {
      chosen.push_back(&universe[i]);
      bool keep_going = rec(i + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  ok = rec(0);
  return ok;
}

PureClosureResult pure_closure_detailed(ActPtr act, const std::vector<int>& seed) {
  SubactHandle current = generated_subact(act, seed);
  int rounds = 0;
  while (true) {
    if (is_pure(current).pure) return PureClosureResult{current, rounds};
    if (++rounds > act->size)
      throw Error(ErrorKind::Internal, "pure_closure: did not stabilize within |A| rounds");

    std::optional<EquationSystem> witness = purity_witness(current);
    if (!witness)
      throw Error(ErrorKind::Internal, "pure_closure: impure subact produced no witness");
    ActHom inclusion = inclusion_hom(current);

    std::vector<int> complement;
    for (int a = 0; a < act->size; ++a)
      if (!current.contains(a)) complement.push_back(a);

    // Smallest number of new elements first; among equal-size candidate sets,
    // lexicographic; the restricted solver then yields the least assignment.
    std::optional<Assignment> best;
    std::vector<char> allowed(act->size, 0);
    for (int a : current.members) allowed[a] = 1;
    const int c = static_cast<int>(complement.size());
    for (int k = 1; k <= c && !best; ++k) {
      std::vector<int> comb(k);
      for (int i = 0; i < k; ++i) comb[i] = i;
      while (true) {
        std::vector<char> mask = allowed;
        for (int i : comb) mask[complement[i]] = 1;
        best = solve_system_restricted(*witness, act, inclusion, mask);
        if (best) break;
        int i = k - 1;
        while (i >= 0 && comb[i] == c - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    if (!best)
      throw Error(ErrorKind::Internal, "pure_closure: witness has no solution in the ambient act");

    std::vector<int> next = current.members;
    next.insert(next.end(), best->values.begin(), best->values.end());
    current = generated_subact(act, next);
  }
}

SubactHandle pure_closure(ActPtr act, const std::vector<int>& seed) {
  return pure_closure_detailed(std::move(act), seed).closure;
}

SubactHandle minimal_pure_superact_oracle(ActPtr act, const std::vector<int>& seed, int cap) {
  if (act->size > cap)
    throw Error(ErrorKind::CapExceeded,
                "minimal_pure_superact_oracle: act size " + std::to_string(act->size) +
                    " exceeds subset-scan cap " + std::to_string(cap));
  SubactHandle base = generated_subact(act, seed);
  std::vector<int> complement;
  for (int a = 0; a < act->size; ++a)
    if (!base.contains(a)) complement.push_back(a);
  const int c = static_cast<int>(complement.size());

  for (int k = 0; k <= c; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::vector<int> members = base.members;
      for (int i : comb) members.push_back(complement[i]);
      std::sort(members.begin(), members.end());
      bool closed = true;
      for (int a : members) {
        for (int s = 0; s < act->monoid->order && closed; ++s)
          closed = std::binary_search(members.begin(), members.end(), act->at(a, s));
        if (!closed) break;
      }
      if (closed) {
        SubactHandle candidate{act, members};
        if (is_pure(candidate).pure) return candidate;
      }
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && comb[i] == c - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::Internal, "minimal_pure_superact_oracle: no pure superact found");
}

} // namespace acts
