#include "acts/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "acts/error.hpp"
#include "acts/hom.hpp"

namespace acts {

namespace {

std::vector<std::string> default_monoid_labels(int n) {
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  return labels;
}

// All associativity instances whose inputs are determined must hold.
bool monoid_consistent(const std::vector<int>& mul, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = mul[a * n + b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = mul[b * n + c];
        if (bc < 0) continue;
        int lhs = mul[ab * n + c];
        int rhs = mul[a * n + bc];
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
      }
    }
  return true;
}

bool monoid_table_canonical(const std::vector<int>& mul, int n) {
  std::vector<int> others(n - 1);
  std::iota(others.begin(), others.end(), 1);
  std::vector<int> sigma(n);
  do {
    sigma[0] = 0;
    for (int i = 0; i < n - 1; ++i) sigma[others[i]] = i + 1;
    std::vector<int> cand(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cand[sigma[i] * n + sigma[j]] = sigma[mul[i * n + j]];
    if (cand < mul) return false;
  } while (std::next_permutation(others.begin(), others.end()));
  return true;
}

void monoid_dfs(std::vector<int>& mul, int n, size_t cell, const std::vector<size_t>& free_cells,
                std::vector<MonoidPtr>& out) {
  if (cell == free_cells.size()) {
    if (!monoid_table_canonical(mul, n)) return;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = mul[i * n + j];
    out.push_back(validate_monoid("M" + std::to_string(n) + "_" + std::to_string(out.size()),
                                  table, 0, default_monoid_labels(n)));
    return;
  }
  for (int v = 0; v < n; ++v) {
    mul[free_cells[cell]] = v;
    if (monoid_consistent(mul, n)) monoid_dfs(mul, n, cell + 1, free_cells, out);
  }
  mul[free_cells[cell]] = -1;
}

} // namespace

std::vector<MonoidPtr> enumerate_monoids(int order, int cap) {
  if (order < 1) throw Error(ErrorKind::Validation, "enumerate_monoids: order must be positive");
  if (order > cap)
    throw Error(ErrorKind::CapExceeded, "enumerate_monoids: order " + std::to_string(order) +
                                            " exceeds cap " + std::to_string(cap));
  const int n = order;
  std::vector<int> mul(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    mul[0 * n + i] = i; // identity at index 0
    mul[i * n + 0] = i;
  }
  std::vector<size_t> free_cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) free_cells.push_back(static_cast<size_t>(i) * n + j);
  std::vector<MonoidPtr> out;
  monoid_dfs(mul, n, 0, free_cells, out);
  return out;
}

namespace {

bool act_consistent(const std::vector<int>& action, int m, const Monoid& mon) {
  const int n = mon.order;
  for (int a = 0; a < m; ++a)
    for (int s = 0; s < n; ++s) {
      int as = action[a * n + s];
      if (as < 0) continue;
      for (int t = 0; t < n; ++t) {
        int lhs = action[as * n + t];
        int rhs = action[a * n + mon.at(s, t)];
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
      }
    }
  return true;
}

// Minimality under relabelings of elements first..m-1 (identity on the rest);
// compares whole tables.
bool act_table_canonical(const std::vector<int>& action, int m, int n, int first) {
  std::vector<int> movable(m - first);
  std::iota(movable.begin(), movable.end(), first);
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> perm = movable;
  do {
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) sigma[movable[i]] = perm[i];
    std::vector<int> cand(static_cast<size_t>(m) * n);
    for (int a = 0; a < m; ++a)
      for (int s = 0; s < n; ++s) cand[sigma[a] * n + s] = sigma[action[a * n + s]];
    if (cand < action) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

void act_dfs(std::vector<int>& action, int m, const MonoidPtr& mon, size_t cell,
             const std::vector<size_t>& free_cells, int canon_first,
             const std::function<void(const std::vector<int>&)>& emit) {
  if (cell == free_cells.size()) {
    if (act_table_canonical(action, m, mon->order, canon_first)) emit(action);
    return;
  }
  for (int v = 0; v < m; ++v) {
    action[free_cells[cell]] = v;
    if (act_consistent(action, m, *mon)) act_dfs(action, m, mon, cell + 1, free_cells, canon_first, emit);
  }
  action[free_cells[cell]] = -1;
}

std::vector<std::vector<int>> enumerate_act_tables(const MonoidPtr& mon, int m, int canon_first,
                                                   const std::vector<int>& prefix) {
  const int n = mon->order;
  std::vector<int> action(static_cast<size_t>(m) * n, -1);
  std::copy(prefix.begin(), prefix.end(), action.begin());
  for (int a = 0; a < m; ++a) action[a * n + mon->identity] = a;
  std::vector<size_t> free_cells;
  for (int a = canon_first; a < m; ++a)
    for (int s = 0; s < n; ++s)
      if (s != mon->identity) free_cells.push_back(static_cast<size_t>(a) * n + s);
  std::vector<std::vector<int>> tables;
  act_dfs(action, m, mon, 0, free_cells, canon_first,
          [&](const std::vector<int>& t) { tables.push_back(t); });
  return tables;
}

std::vector<std::string> fresh_labels(const std::vector<std::string>& taken, int count) {
  std::vector<std::string> labels;
  int next = 0;
  while (static_cast<int>(labels.size()) < count) {
    std::string cand = "n" + std::to_string(next++);
    if (std::find(taken.begin(), taken.end(), cand) == taken.end()) labels.push_back(cand);
  }
  return labels;
}

} // namespace

std::vector<ActPtr> enumerate_acts(const MonoidPtr& monoid, int size, int cap) {
  if (size < 1) throw Error(ErrorKind::Validation, "enumerate_acts: size must be positive");
  if (size > cap)
    throw Error(ErrorKind::CapExceeded, "enumerate_acts: size " + std::to_string(size) +
                                            " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<int>> tables = enumerate_act_tables(monoid, size, 0, {});
  std::vector<ActPtr> out;
  const int n = monoid->order;
  for (const std::vector<int>& flat : tables) {
    std::vector<std::vector<int>> table(size, std::vector<int>(n));
    for (int a = 0; a < size; ++a)
      for (int s = 0; s < n; ++s) table[a][s] = flat[a * n + s];
    std::vector<std::string> labels;
    for (int a = 0; a < size; ++a) labels.push_back("t" + std::to_string(a));
    out.push_back(validate_act(monoid->name + "_a" + std::to_string(size) + "_" +
                                   std::to_string(out.size()),
                               monoid, table, std::move(labels)));
  }
  return out;
}

std::vector<SubactHandle> enumerate_extensions(const ActPtr& base, int extra, int cap) {
  if (extra < 1)
    throw Error(ErrorKind::Validation, "enumerate_extensions: extra must be at least 1");
  const int m = base->size + extra;
  if (m > cap)
    throw Error(ErrorKind::CapExceeded, "enumerate_extensions: extension size " +
                                            std::to_string(m) + " exceeds cap " +
                                            std::to_string(cap));
  const int n = base->monoid->order;
  std::vector<int> prefix(static_cast<size_t>(base->size) * n);
  for (int a = 0; a < base->size; ++a)
    for (int s = 0; s < n; ++s) prefix[a * n + s] = base->at(a, s);

  std::vector<std::vector<int>> tables = enumerate_act_tables(base->monoid, m, base->size, prefix);
  std::vector<std::string> extra_labels = fresh_labels(base->labels, extra);
  std::vector<int> base_members(base->size);
  std::iota(base_members.begin(), base_members.end(), 0);

  std::vector<SubactHandle> out;
  for (const std::vector<int>& flat : tables) {
    std::vector<std::vector<int>> table(m, std::vector<int>(n));
    for (int a = 0; a < m; ++a)
      for (int s = 0; s < n; ++s) table[a][s] = flat[a * n + s];
    std::vector<std::string> labels = base->labels;
    labels.insert(labels.end(), extra_labels.begin(), extra_labels.end());
    ActPtr ext = validate_act(base->name + "_ext" + std::to_string(out.size()), base->monoid,
                              table, std::move(labels));
    out.push_back(make_subact(ext, base_members));
  }
  return out;
}

std::vector<SubactHandle> enumerate_subacts(const ActPtr& act, int cap) {
  const int m = act->size;
  if (m > cap)
    throw Error(ErrorKind::CapExceeded, "enumerate_subacts: act size " + std::to_string(m) +
                                            " exceeds cap " + std::to_string(cap));
  const int n = act->monoid->order;
  std::vector<std::uint32_t> step(m, 0);
  for (int a = 0; a < m; ++a)
    for (int s = 0; s < n; ++s) step[a] |= 1u << act->at(a, s);

  std::vector<SubactHandle> out;
  const std::uint32_t total = m >= 32 ? 0 : (1u << m);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    bool closed = true;
    for (int a = 0; a < m && closed; ++a)
      if (mask & (1u << a)) closed = (step[a] & ~mask) == 0;
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < m; ++a)
      if (mask & (1u << a)) members.push_back(a);
    out.push_back(SubactHandle{act, std::move(members)});
  }
  std::sort(out.begin(), out.end(), [](const SubactHandle& x, const SubactHandle& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

Catalog build_catalog(int max_order, int max_act_size) {
  Catalog cat;
  cat.max_order = max_order;
  cat.max_act_size = max_act_size;
  for (int k = 1; k <= max_order; ++k) {
    std::vector<MonoidPtr> monoids = enumerate_monoids(k);
    for (const MonoidPtr& s : monoids) {
      std::vector<ActPtr> acts;
      for (int m = 1; m <= max_act_size; ++m) {
        std::vector<ActPtr> batch = enumerate_acts(s, m);
        acts.insert(acts.end(), batch.begin(), batch.end());
      }
      cat.acts_by_monoid[s->name] = std::move(acts);
      cat.monoids.push_back(s);
    }
  }
  return cat;
}

} // namespace acts
