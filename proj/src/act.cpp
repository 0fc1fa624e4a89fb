#include "acts/act.hpp"

#include <algorithm>
#include <set>

#include "acts/error.hpp"

namespace acts {

int Act::label_index(const std::string& label) const {
  for (int i = 0; i < size; ++i)
    if (labels[i] == label) return i;
  return -1;
}

bool SubactHandle::contains(int elem) const {
  return std::binary_search(members.begin(), members.end(), elem);
}

int SubactHandle::position_of(int elem) const {
  auto it = std::lower_bound(members.begin(), members.end(), elem);
  if (it == members.end() || *it != elem) return -1;
  return static_cast<int>(it - members.begin());
}

ActPtr validate_act(std::string name, MonoidPtr monoid, const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels) {
  if (!monoid) throw Error(ErrorKind::Validation, "act '" + name + "': missing monoid");
  const int m = static_cast<int>(table.size());
  const int n = monoid->order;
  if (m <= 0) throw Error(ErrorKind::Validation, "act '" + name + "': acts must be nonempty");
  if (labels.empty()) {
    labels.reserve(m);
    for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != m)
    throw Error(ErrorKind::Validation, "act '" + name + "': expected " + std::to_string(m) +
                                           " labels, got " + std::to_string(labels.size()));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != m)
    throw Error(ErrorKind::Validation, "act '" + name + "': duplicate element labels");

  auto act = std::make_shared<Act>();
  act->name = std::move(name);
  act->monoid = std::move(monoid);
  act->size = m;
  act->labels = std::move(labels);
  act->action.assign(static_cast<size_t>(m) * n, 0);
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::Validation,
                  "act '" + act->name + "': row " + std::to_string(a) + " has wrong length");
    for (int s = 0; s < n; ++s) {
      int v = table[a][s];
      if (v < 0 || v >= m)
        throw Error(ErrorKind::Validation, "act '" + act->name + "': entry out of range at (" +
                                               std::to_string(a) + "," + std::to_string(s) + ")");
      act->action[static_cast<size_t>(a) * n + s] = v;
    }
  }

  const int e = act->monoid->identity;
  for (int a = 0; a < m; ++a)
    if (act->at(a, e) != a)
      throw Error(ErrorKind::IdentityAxiom,
                  "act '" + act->name + "': unit axiom fails at element " + std::to_string(a) +
                      " ('" + act->labels[a] + "')",
                  {a});
  for (int a = 0; a < m; ++a)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (act->at(act->at(a, s), t) != act->at(a, act->monoid->at(s, t)))
          throw Error(ErrorKind::AssociativityAxiom,
                      "act '" + act->name + "': associativity axiom fails at (" +
                          std::to_string(a) + "," + std::to_string(s) + "," + std::to_string(t) +
                          ")",
                      {a, s, t});
  return act;
}

SubactHandle make_subact(ActPtr act, std::vector<int> members) {
  if (!act) throw Error(ErrorKind::Validation, "subact: missing ambient act");
  if (members.empty()) throw Error(ErrorKind::Validation, "subact: member list is empty");
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] >= members[i + 1])
      throw Error(ErrorKind::Validation, "subact: members must be strictly increasing");
  const int n = act->monoid->order;
  for (int a : members) {
    if (a < 0 || a >= act->size)
      throw Error(ErrorKind::Validation, "subact: member index out of range");
    for (int s = 0; s < n; ++s) {
      int b = act->at(a, s);
      if (!std::binary_search(members.begin(), members.end(), b))
        throw Error(ErrorKind::Validation,
                    "subact of '" + act->name + "': not closed under the action ('" +
                        act->labels[a] + "' * '" + act->monoid->labels[s] + "' = '" +
                        act->labels[b] + "' is missing)");
    }
  }
  return SubactHandle{std::move(act), std::move(members)};
}

SubactHandle generated_subact(ActPtr act, const std::vector<int>& seed) {
  if (!act) throw Error(ErrorKind::Validation, "generated_subact: missing act");
  if (seed.empty()) throw Error(ErrorKind::EmptySeed, "generated_subact: seed is empty");
  std::vector<char> in(act->size, 0);
  std::vector<int> stack;
  for (int a : seed) {
    if (a < 0 || a >= act->size)
      throw Error(ErrorKind::Validation, "generated_subact: seed index out of range");
    if (!in[a]) {
      in[a] = 1;
      stack.push_back(a);
    }
  }
  const int n = act->monoid->order;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int s = 0; s < n; ++s) {
      int b = act->at(a, s);
      if (!in[b]) {
        in[b] = 1;
        stack.push_back(b);
      }
    }
  }
  std::vector<int> members;
  for (int a = 0; a < act->size; ++a)
    if (in[a]) members.push_back(a);
  return SubactHandle{std::move(act), std::move(members)};
}

ActPtr subact_as_act(const SubactHandle& sub, std::string name) {
  const Act& b = *sub.act;
  const int n = b.monoid->order;
  if (name.empty()) {
    name = b.name + "_sub";
    for (int a : sub.members) name += "_" + b.labels[a];
  }
  auto act = std::make_shared<Act>();
  act->name = std::move(name);
  act->monoid = b.monoid;
  act->size = static_cast<int>(sub.members.size());
  for (int a : sub.members) act->labels.push_back(b.labels[a]);
  act->action.assign(static_cast<size_t>(act->size) * n, 0);
  for (int k = 0; k < act->size; ++k)
    for (int s = 0; s < n; ++s) {
      int pos = sub.position_of(b.at(sub.members[k], s));
      act->action[static_cast<size_t>(k) * n + s] = pos;
    }
  return act;
}

ActHom inclusion_hom(const SubactHandle& sub) {
  ActHom h;
  h.source = subact_as_act(sub);
  h.target = sub.act;
  h.map = sub.members;
  return h;
}

ActPtr product_act(const std::vector<ActPtr>& factors, std::int64_t cap) {
  if (factors.empty())
    throw Error(ErrorKind::Validation, "product_act: factor list is empty");
  const MonoidPtr& monoid = factors.front()->monoid;
  std::int64_t total = 1;
  for (const ActPtr& f : factors) {
    if (!same_monoid(*f->monoid, *monoid))
      throw Error(ErrorKind::MixedMonoids, "product_act: factors live over different monoids");
    total *= f->size;
    if (total > cap)
      throw Error(ErrorKind::TooLarge,
                  "product_act: product size " + std::to_string(total) + "+ exceeds cap " +
                      std::to_string(cap),
                  {static_cast<long>(total)});
  }

  const int k = static_cast<int>(factors.size());
  const int n = monoid->order;
  auto act = std::make_shared<Act>();
  act->monoid = monoid;
  act->size = static_cast<int>(total);
  {
    std::string nm = factors[0]->name;
    for (int i = 1; i < k; ++i) nm += "x" + factors[i]->name;
    act->name = std::move(nm);
  }

  // Strides for tuple <-> index, first factor most significant.
  std::vector<std::int64_t> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1]->size;

  std::vector<int> tuple(k, 0);
  act->labels.reserve(act->size);
  act->action.assign(static_cast<size_t>(act->size) * n, 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::string label = factors[0]->labels[tuple[0]];
    for (int i = 1; i < k; ++i) label += "*" + factors[i]->labels[tuple[i]];
    act->labels.push_back(std::move(label));
    for (int s = 0; s < n; ++s) {
      std::int64_t target = 0;
      for (int i = 0; i < k; ++i) target += stride[i] * factors[i]->at(tuple[i], s);
      act->action[static_cast<size_t>(idx) * n + s] = static_cast<int>(target);
    }
    for (int i = k - 1; i >= 0; --i) {
      if (++tuple[i] < factors[i]->size) break;
      tuple[i] = 0;
    }
  }
  return act;
}

bool is_fixed_point(const Act& a, int elem) {
  for (int s = 0; s < a.monoid->order; ++s)
    if (a.at(elem, s) != elem) return false;
  return true;
}

std::vector<int> fixed_points(const Act& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size; ++x)
    if (is_fixed_point(a, x)) out.push_back(x);
  return out;
}

bool is_hom_map(const Act& source, const Act& target, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size) return false;
  const int n = source.monoid->order;
  for (int a = 0; a < source.size; ++a) {
    if (map[a] < 0 || map[a] >= target.size) return false;
    for (int s = 0; s < n; ++s)
      if (map[source.at(a, s)] != target.at(map[a], s)) return false;
  }
  return true;
}

ActHom make_hom(ActPtr source, ActPtr target, std::vector<int> map) {
  if (!source || !target) throw Error(ErrorKind::Validation, "make_hom: missing act");
  if (!same_monoid(*source->monoid, *target->monoid))
    throw Error(ErrorKind::MixedMonoids, "make_hom: acts live over different monoids");
  if (!is_hom_map(*source, *target, map))
    throw Error(ErrorKind::BadEmbedding, "make_hom: map from '" + source->name + "' to '" +
                                             target->name + "' is not a homomorphism");
  return ActHom{std::move(source), std::move(target), std::move(map)};
}

} // namespace acts
