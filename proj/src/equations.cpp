#include "acts/equations.hpp"

#include <algorithm>
#include <deque>

#include "acts/error.hpp"

namespace acts {

EquationSystem make_system(SubactHandle constants, int var_count, std::vector<Equation> equations,
                           std::vector<std::string> var_names) {
  if (var_count < 0) throw Error(ErrorKind::Validation, "system: negative variable count");
  if (var_names.empty())
    for (int i = 0; i < var_count; ++i) var_names.push_back("x" + std::to_string(i));
  if (static_cast<int>(var_names.size()) != var_count)
    throw Error(ErrorKind::Validation, "system: variable name count mismatch");
  for (const Equation& eq : equations) {
    for (const Term* t : {&eq.lhs, &eq.rhs}) {
      if (const auto* v = std::get_if<VarTerm>(t)) {
        if (v->var < 0 || v->var >= var_count)
          throw Error(ErrorKind::Validation, "system: variable id out of range");
        if (v->scalar < 0 || v->scalar >= constants.act->monoid->order)
          throw Error(ErrorKind::Validation, "system: scalar index out of range");
      } else {
        int e = std::get<ConstTerm>(*t).elem;
        if (!constants.contains(e))
          throw Error(ErrorKind::Validation, "system: constant is not in the constants subact");
      }
    }
  }
  return EquationSystem{var_count, std::move(var_names), std::move(constants),
                        std::move(equations)};
}

ActHom identity_embed(const EquationSystem& sys) {
  std::vector<int> id(sys.world()->size);
  for (int i = 0; i < sys.world()->size; ++i) id[i] = i;
  return ActHom{sys.world(), sys.world(), std::move(id)};
}

int eval_term(const Term& term, const Assignment& assignment, const ActHom& embed) {
  if (const auto* v = std::get_if<VarTerm>(&term))
    return embed.target->at(assignment.values[v->var], v->scalar);
  return embed.map[std::get<ConstTerm>(term).elem];
}

bool assignment_satisfies(const EquationSystem& sys, const Assignment& assignment,
                          const ActHom& embed) {
  for (const Equation& eq : sys.equations)
    if (eval_term(eq.lhs, assignment, embed) != eval_term(eq.rhs, assignment, embed))
      return false;
  return true;
}

namespace {

void check_embedding(const EquationSystem& sys, const ActPtr& target, const ActHom& embed) {
  if (!embed.source || !embed.target)
    throw Error(ErrorKind::BadEmbedding, "solve: embedding is missing an endpoint");
  if (embed.source->size != sys.world()->size || embed.source->action != sys.world()->action)
    throw Error(ErrorKind::BadEmbedding, "solve: embedding source is not the system's world act");
  if (embed.target->size != target->size || embed.target->action != target->action)
    throw Error(ErrorKind::BadEmbedding, "solve: embedding target is not the requested act");
  if (!same_monoid(*sys.world()->monoid, *target->monoid))
    throw Error(ErrorKind::MixedMonoids, "solve: system and target live over different monoids");
  if (!is_hom_map(*embed.source, *embed.target, embed.map))
    throw Error(ErrorKind::BadEmbedding, "solve: embedding is not a homomorphism");
}

struct BinaryConstraint {
  int x, rx; // lhs variable and scalar
  int y, ry; // rhs variable and scalar
};

struct Csp {
  std::vector<std::vector<int>> domain; // per variable, ascending
  std::vector<BinaryConstraint> binary;
  bool infeasible = false;
};

Csp compile(const EquationSystem& sys, const Act& target, const ActHom& embed,
            const std::vector<char>& allowed) {
  Csp csp;
  csp.domain.resize(sys.var_count);
  for (int v = 0; v < sys.var_count; ++v)
    for (int x = 0; x < target.size; ++x)
      if (allowed.empty() || allowed[x]) csp.domain[v].push_back(x);

  auto restrict_unary = [&](int var, auto&& keep) {
    auto& dom = csp.domain[var];
    dom.erase(std::remove_if(dom.begin(), dom.end(), [&](int x) { return !keep(x); }), dom.end());
    if (dom.empty()) csp.infeasible = true;
  };

  for (const Equation& eq : sys.equations) {
    if (csp.infeasible) return csp;
    const auto* lv = std::get_if<VarTerm>(&eq.lhs);
    const auto* rv = std::get_if<VarTerm>(&eq.rhs);
    if (!lv && !rv) {
      int a = embed.map[std::get<ConstTerm>(eq.lhs).elem];
      int b = embed.map[std::get<ConstTerm>(eq.rhs).elem];
      if (a != b) csp.infeasible = true;
    } else if (lv && !rv) {
      int c = embed.map[std::get<ConstTerm>(eq.rhs).elem];
      restrict_unary(lv->var, [&](int x) { return target.at(x, lv->scalar) == c; });
    } else if (!lv && rv) {
      int c = embed.map[std::get<ConstTerm>(eq.lhs).elem];
      restrict_unary(rv->var, [&](int x) { return target.at(x, rv->scalar) == c; });
    } else if (lv->var == rv->var) {
      restrict_unary(lv->var,
                     [&](int x) { return target.at(x, lv->scalar) == target.at(x, rv->scalar); });
    } else {
      csp.binary.push_back({lv->var, lv->scalar, rv->var, rv->scalar});
    }
  }
  return csp;
}

// AC-3 revision: drop values of var with no support on the other side.
bool revise(Csp& csp, const Act& target, const BinaryConstraint& c, bool left) {
  int var = left ? c.x : c.y;
  int other = left ? c.y : c.x;
  int rv = left ? c.rx : c.ry;
  int ro = left ? c.ry : c.rx;
  auto& dom = csp.domain[var];
  const auto& odom = csp.domain[other];
  size_t before = dom.size();
  dom.erase(std::remove_if(dom.begin(), dom.end(),
                           [&](int x) {
                             int vx = target.at(x, rv);
                             for (int y : odom)
                               if (target.at(y, ro) == vx) return false;
                             return true;
                           }),
            dom.end());
  return dom.size() != before;
}

void arc_consistency(Csp& csp, const Act& target) {
  std::deque<std::pair<int, bool>> work; // (constraint index, which side to revise)
  for (int i = 0; i < static_cast<int>(csp.binary.size()); ++i) {
    work.emplace_back(i, true);
    work.emplace_back(i, false);
  }
  while (!work.empty()) {
    auto [ci, left] = work.front();
    work.pop_front();
    if (!revise(csp, target, csp.binary[ci], left)) continue;
    int changed = left ? csp.binary[ci].x : csp.binary[ci].y;
    if (csp.domain[changed].empty()) {
      csp.infeasible = true;
      return;
    }
    for (int j = 0; j < static_cast<int>(csp.binary.size()); ++j) {
      if (csp.binary[j].x == changed) work.emplace_back(j, false);
      if (csp.binary[j].y == changed) work.emplace_back(j, true);
    }
  }
}

bool backtrack(const Csp& csp, const Act& target,
               const std::vector<std::vector<int>>& touching, std::vector<int>& values, int var) {
  if (var == static_cast<int>(csp.domain.size())) return true;
  for (int x : csp.domain[var]) {
    values[var] = x;
    bool ok = true;
    for (int ci : touching[var]) {
      const BinaryConstraint& c = csp.binary[ci];
      int other = c.x == var ? c.y : c.x;
      if (other > var) continue; // not yet assigned
      // Both endpoints assigned (the other one earlier, or a self-loop).
      if (target.at(values[c.x], c.rx) != target.at(values[c.y], c.ry)) {
        ok = false;
        break;
      }
    }
    if (ok && backtrack(csp, target, touching, values, var + 1)) return true;
  }
  values[var] = -1;
  return false;
}

std::optional<Assignment> solve_impl(const EquationSystem& sys, ActPtr target, const ActHom& embed,
                                     const std::vector<char>& allowed) {
  check_embedding(sys, target, embed);
  Csp csp = compile(sys, *target, embed, allowed);
  if (csp.infeasible) return std::nullopt;
  for (const auto& dom : csp.domain)
    if (dom.empty()) return std::nullopt;
  arc_consistency(csp, *target);
  if (csp.infeasible) return std::nullopt;

  std::vector<std::vector<int>> touching(sys.var_count);
  for (int i = 0; i < static_cast<int>(csp.binary.size()); ++i) {
    touching[csp.binary[i].x].push_back(i);
    if (csp.binary[i].y != csp.binary[i].x) touching[csp.binary[i].y].push_back(i);
  }
  std::vector<int> values(sys.var_count, -1);
  if (!backtrack(csp, *target, touching, values, 0)) return std::nullopt;
  return Assignment{std::move(values)};
}

} // namespace

std::optional<Assignment> solve_system(const EquationSystem& sys, ActPtr target,
                                       const ActHom& embed) {
  return solve_impl(sys, std::move(target), embed, {});
}

std::optional<Assignment> solve_system_restricted(const EquationSystem& sys, ActPtr target,
                                                  const ActHom& embed,
                                                  const std::vector<char>& allowed) {
  return solve_impl(sys, std::move(target), embed, allowed);
}

std::vector<int> diagram_variable_elements(const SubactHandle& sub) {
  std::vector<int> vars;
  for (int b = 0; b < sub.act->size; ++b)
    if (!sub.contains(b)) vars.push_back(b);
  return vars;
}

EquationSystem diagram_system(const SubactHandle& sub) {
  const Act& ambient = *sub.act;
  const int n = ambient.monoid->order;
  ActPtr world = subact_as_act(sub);
  SubactHandle constants = make_subact(world, [&] {
    std::vector<int> all(world->size);
    for (int i = 0; i < world->size; ++i) all[i] = i;
    return all;
  }());

  std::vector<int> vars = diagram_variable_elements(sub);
  const int V = static_cast<int>(vars.size());
  std::vector<std::string> names;
  names.reserve(V);
  for (int b : vars) names.push_back("x_" + ambient.labels[b]);

  std::vector<Equation> eqs;
  for (int i = 0; i < V; ++i)
    for (int s = 0; s < n; ++s) {
      int pos = sub.position_of(ambient.at(vars[i], s));
      if (pos >= 0) eqs.push_back({VarTerm{i, s}, ConstTerm{pos}});
    }
  for (int i = 0; i < V; ++i)
    for (int j = i; j < V; ++j)
      for (int r = 0; r < n; ++r) {
        int from = i == j ? r + 1 : 0; // same variable: keep r < s only
        for (int s = from; s < n; ++s)
          if (ambient.at(vars[i], r) == ambient.at(vars[j], s))
            eqs.push_back({VarTerm{i, r}, VarTerm{j, s}});
      }
  return make_system(std::move(constants), V, std::move(eqs), std::move(names));
}

std::string equation_text(const EquationSystem& sys, const Equation& eq) {
  auto term_text = [&](const Term& t) -> std::string {
    if (const auto* v = std::get_if<VarTerm>(&t))
      return sys.var_names[v->var] + "." + sys.world()->monoid->labels[v->scalar];
    return "@" + sys.world()->labels[std::get<ConstTerm>(t).elem];
  };
  return term_text(eq.lhs) + " = " + term_text(eq.rhs);
}

} // namespace acts
