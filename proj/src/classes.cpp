#include "acts/classes.hpp"

#include <algorithm>
#include <numeric>

#include "acts/enumeration.hpp"
#include "acts/error.hpp"
#include "acts/purity.hpp"

namespace acts {

const char* class_kind_name(ClassKind k) {
  switch (k) {
  case ClassKind::AllActs: return "all";
  case ClassKind::WeaklyPInjective: return "weakly-p-injective";
  case ClassKind::WeaklyFInjective: return "weakly-f-injective";
  case ClassKind::AlmostPure: return "almost-pure";
  case ClassKind::AbsolutelyPureBounded: return "abs-pure";
  case ClassKind::Extensional: return "extensional";
  }
  return "unknown";
}

std::string ActClass::describe() const {
  if (kind == ClassKind::AbsolutelyPureBounded)
    return std::string(class_kind_name(kind)) + ":" + std::to_string(bound);
  return class_kind_name(kind);
}

ActClass all_acts(MonoidPtr monoid) { return ActClass{ClassKind::AllActs, std::move(monoid), 0, {}}; }
ActClass weakly_p_injective(MonoidPtr monoid) {
  return ActClass{ClassKind::WeaklyPInjective, std::move(monoid), 0, {}};
}
ActClass weakly_f_injective(MonoidPtr monoid) {
  return ActClass{ClassKind::WeaklyFInjective, std::move(monoid), 0, {}};
}
ActClass almost_pure(MonoidPtr monoid) {
  return ActClass{ClassKind::AlmostPure, std::move(monoid), 0, {}};
}
ActClass absolutely_pure_bounded(MonoidPtr monoid, int bound) {
  if (bound < 1) throw Error(ErrorKind::Validation, "abs-pure bound must be at least 1");
  return ActClass{ClassKind::AbsolutelyPureBounded, std::move(monoid), bound, {}};
}

ActClass extensional_class(std::vector<ActPtr> members) {
  if (members.empty())
    throw Error(ErrorKind::Validation, "extensional class: member list is empty");
  MonoidPtr monoid = members.front()->monoid;
  std::vector<ActPtr> kept;
  for (ActPtr& a : members) {
    if (!same_monoid(*a->monoid, *monoid))
      throw Error(ErrorKind::MixedMonoids, "extensional class: members over different monoids");
    bool dup = false;
    for (const ActPtr& b : kept)
      if (is_isomorphic(*a, *b)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(std::move(a));
  }
  return ActClass{ClassKind::Extensional, std::move(monoid), 0, std::move(kept)};
}

int default_abs_pure_bound(const Act& act) { return act.size + act.monoid->order; }

ActPtr regular_act(const MonoidPtr& monoid) {
  const int n = monoid->order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = monoid->at(i, j);
  return validate_act(monoid->name + "_reg", monoid, table, monoid->labels);
}

std::vector<SubactHandle> right_ideal_acts(const MonoidPtr& monoid, bool principal_only) {
  ActPtr reg = regular_act(monoid);
  if (!principal_only) return enumerate_subacts(reg);
  std::vector<SubactHandle> out;
  for (int a = 0; a < reg->size; ++a) {
    SubactHandle ideal = generated_subact(reg, {a});
    bool dup = false;
    for (const SubactHandle& seen : out)
      if (seen.members == ideal.members) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const SubactHandle& x, const SubactHandle& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

namespace {

// Restricted growth strings enumerate set partitions in canonical order.
void partitions(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int c = 0; c <= max_used + 1 && c <= i; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  rec(0, -1);
}

bool right_compatible(const Monoid& s, const std::vector<int>& class_of) {
  const int n = s.order;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (class_of[x] != class_of[y]) continue;
      for (int t = 0; t < n; ++t)
        if (class_of[s.at(x, t)] != class_of[s.at(y, t)]) return false;
    }
  return true;
}

} // namespace

std::vector<std::pair<RightCongruence, ActPtr>> cyclic_acts(const MonoidPtr& monoid) {
  const int n = monoid->order;
  std::vector<std::vector<int>> rgs_list;
  partitions(n, rgs_list);

  std::vector<std::pair<RightCongruence, ActPtr>> out;
  for (const std::vector<int>& class_of : rgs_list) {
    if (!right_compatible(*monoid, class_of)) continue;
    int classes = *std::max_element(class_of.begin(), class_of.end()) + 1;
    std::vector<std::vector<int>> table(classes, std::vector<int>(n));
    std::vector<std::string> labels(classes);
    for (int x = 0; x < n; ++x)
      if (labels[class_of[x]].empty()) labels[class_of[x]] = "[" + monoid->labels[x] + "]";
    for (int x = 0; x < n; ++x)
      for (int t = 0; t < n; ++t) table[class_of[x]][t] = class_of[monoid->at(x, t)];
    ActPtr quotient = validate_act(monoid->name + "_mod" + std::to_string(out.size()), monoid,
                                   table, labels);
    out.emplace_back(RightCongruence{class_of, classes}, std::move(quotient));
  }
  return out;
}

RelInjResult is_relatively_injective(const ActPtr& act,
                                     const std::vector<InclusionInstance>& instances) {
  for (const InclusionInstance& inst : instances) {
    if (!same_monoid(*inst.ambient->monoid, *act->monoid))
      throw Error(ErrorKind::MixedMonoids,
                  "is_relatively_injective: instance over a different monoid");
    if (inst.inner.is_whole_act()) continue; // extensions are the homs themselves

    ActPtr inner = subact_as_act(inst.inner);

    // When the complement of K in L is itself action-closed, an extension of
    // any hom K -> A is a hom on the complement chosen independently, so the
    // instance reduces to two existence checks.
    bool complement_closed = true;
    const int n = act->monoid->order;
    for (int b = 0; b < inst.ambient->size && complement_closed; ++b) {
      if (inst.inner.contains(b)) continue;
      for (int s = 0; s < n; ++s)
        if (inst.inner.contains(inst.ambient->at(b, s))) {
          complement_closed = false;
          break;
        }
    }
    if (complement_closed) {
      std::optional<ActHom> any_hom = first_hom(inner, act);
      if (!any_hom) continue;
      std::vector<int> rest;
      for (int b = 0; b < inst.ambient->size; ++b)
        if (!inst.inner.contains(b)) rest.push_back(b);
      ActPtr rest_act = subact_as_act(SubactHandle{inst.ambient, rest});
      if (first_hom(rest_act, act)) continue;
      return RelInjResult{false, std::make_pair(inst, *any_hom)};
    }

    RelInjResult result{true, std::nullopt};
    for_each_hom(inner, act, {}, [&](const ActHom& h) {
      PinnedMap pins;
      for (int k = 0; k < inner->size; ++k) pins[inst.inner.members[k]] = h.map[k];
      if (!first_hom(inst.ambient, act, pins)) {
        result = RelInjResult{false, std::make_pair(inst, h)};
        return false;
      }
      return true;
    });
    if (!result.injective) return result;
  }
  return RelInjResult{true, std::nullopt};
}

namespace {

std::string monoid_cache_key(const Monoid& m) {
  std::string key = std::to_string(m.order) + ";" + std::to_string(m.identity) + ";";
  for (int v : m.mul) key += std::to_string(v) + ",";
  for (const std::string& l : m.labels) key += l + "|";
  return key;
}

} // namespace

std::vector<InclusionInstance> class_instances(const ActClass& cls) {
  // Membership sweeps rebuild the same defining family over and over; the
  // family depends only on the monoid, the kind, and the bound.
  static std::map<std::string, std::vector<InclusionInstance>> cache;
  std::string key;
  if (cls.kind != ClassKind::AllActs && cls.kind != ClassKind::Extensional) {
    key = monoid_cache_key(*cls.monoid) + "#" + std::to_string(static_cast<int>(cls.kind)) + "#" +
          std::to_string(cls.bound);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<InclusionInstance> instances;
  switch (cls.kind) {
  case ClassKind::AllActs:
  case ClassKind::Extensional: break;
  case ClassKind::WeaklyPInjective:
  case ClassKind::WeaklyFInjective: {
    ActPtr reg = regular_act(cls.monoid);
    for (SubactHandle& ideal :
         right_ideal_acts(cls.monoid, cls.kind == ClassKind::WeaklyPInjective))
      instances.push_back(InclusionInstance{reg, std::move(ideal)});
    break;
  }
  case ClassKind::AlmostPure: {
    for (auto& [rho, quotient] : cyclic_acts(cls.monoid))
      for (SubactHandle& k : enumerate_subacts(quotient))
        instances.push_back(InclusionInstance{quotient, std::move(k)});
    break;
  }
  case ClassKind::AbsolutelyPureBounded: {
    for (int m = 1; m <= cls.bound; ++m)
      for (const ActPtr& l : enumerate_acts(cls.monoid, m, cls.bound))
        for (SubactHandle& k : enumerate_subacts(l))
          instances.push_back(InclusionInstance{l, std::move(k)});
    break;
  }
  }
  if (!key.empty()) cache[key] = instances;
  return instances;
}

RelInjResult class_membership(const ActClass& cls, const ActPtr& act) {
  if (!same_monoid(*cls.monoid, *act->monoid))
    throw Error(ErrorKind::MixedMonoids, "class membership: act over a different monoid");
  switch (cls.kind) {
  case ClassKind::AllActs: return RelInjResult{true, std::nullopt};
  case ClassKind::Extensional: {
    for (const ActPtr& member : cls.members)
      if (is_isomorphic(*member, *act)) return RelInjResult{true, std::nullopt};
    return RelInjResult{false, std::nullopt};
  }
  default: return is_relatively_injective(act, class_instances(cls));
  }
}

bool class_contains(const ActClass& cls, const ActPtr& act) {
  return class_membership(cls, act).injective;
}

std::string instance_text(const InclusionInstance& inst) {
  std::string k = "{";
  for (size_t i = 0; i < inst.inner.members.size(); ++i) {
    if (i) k += ",";
    k += inst.ambient->labels[inst.inner.members[i]];
  }
  k += "}";
  return k + " <= " + inst.ambient->name;
}

ClosureReport check_class_closure(const ActClass& cls, const std::vector<ActPtr>& scope,
                                  std::int64_t cap) {
  ClosureReport report;
  std::vector<ActPtr> members;
  for (const ActPtr& a : scope)
    if (class_contains(cls, a)) members.push_back(a);

  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i; j < members.size(); ++j) {
      ActPtr prod = product_act({members[i], members[j]}, cap);
      if (!class_contains(cls, prod)) {
        report.product_closed = false;
        report.counterexamples.push_back("product " + members[i]->name + " x " +
                                         members[j]->name + " is not in " + cls.describe());
      }
    }

  for (const ActPtr& a : members)
    for (const SubactHandle& sub : enumerate_subacts(a)) {
      if (!is_pure(sub).pure) continue;
      ActPtr inner = subact_as_act(sub);
      if (!class_contains(cls, inner)) {
        report.pure_subact_closed = false;
        report.counterexamples.push_back("pure subact " + inner->name + " of " + a->name +
                                         " is not in " + cls.describe());
      }
    }
  return report;
}

} // namespace acts
