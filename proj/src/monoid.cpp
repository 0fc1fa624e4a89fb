#include "acts/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "acts/error.hpp"

namespace acts {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
  case ErrorKind::NotIdentity: return "NotIdentity";
  case ErrorKind::NotAssociative: return "NotAssociative";
  case ErrorKind::IdentityAxiom: return "IdentityAxiom";
  case ErrorKind::AssociativityAxiom: return "AssociativityAxiom";
  case ErrorKind::EmptySeed: return "EmptySeed";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::MixedMonoids: return "MixedMonoids";
  case ErrorKind::BadEmbedding: return "BadEmbedding";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::TargetNotInClass: return "TargetNotInClass";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::UnknownReference: return "UnknownReference";
  case ErrorKind::Validation: return "Validation";
  case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

int Monoid::label_index(const std::string& label) const {
  for (int i = 0; i < order; ++i)
    if (labels[i] == label) return i;
  return -1;
}

MonoidPtr validate_monoid(std::string name, const std::vector<std::vector<int>>& table,
                          int identity, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n <= 0)
    throw Error(ErrorKind::Validation, "monoid '" + name + "': empty multiplication table");
  if (identity < 0 || identity >= n)
    throw Error(ErrorKind::Validation, "monoid '" + name + "': identity index out of range");
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::Validation, "monoid '" + name + "': expected " + std::to_string(n) +
                                           " labels, got " + std::to_string(labels.size()));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n)
    throw Error(ErrorKind::Validation, "monoid '" + name + "': duplicate element labels");

  auto m = std::make_shared<Monoid>();
  m->name = std::move(name);
  m->order = n;
  m->labels = std::move(labels);
  m->identity = identity;
  m->mul.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::Validation, "monoid '" + m->name + "': row " + std::to_string(i) +
                                             " has wrong length");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::Validation,
                    "monoid '" + m->name + "': table entry out of range at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      m->mul[static_cast<size_t>(i) * n + j] = v;
    }
  }

  for (int i = 0; i < n; ++i) {
    if (m->at(identity, i) != i || m->at(i, identity) != i)
      throw Error(ErrorKind::NotIdentity,
                  "monoid '" + m->name + "': identity law fails at element " + std::to_string(i) +
                      " ('" + m->labels[i] + "')",
                  {i});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m->at(m->at(i, j), k) != m->at(i, m->at(j, k)))
          throw Error(ErrorKind::NotAssociative,
                      "monoid '" + m->name + "': associativity fails at (" + std::to_string(i) +
                          "," + std::to_string(j) + "," + std::to_string(k) + ")",
                      {i, j, k});
  return m;
}

bool same_monoid(const Monoid& a, const Monoid& b) {
  return a.order == b.order && a.identity == b.identity && a.mul == b.mul;
}

std::vector<int> canonical_monoid_form(const Monoid& m) {
  const int n = m.order;
  // Permutations of elements that fix the identity; the identity slot itself
  // still participates in the relabeled table.
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != m.identity) others.push_back(i);

  std::vector<int> best;
  std::vector<int> sigma(n); // old index -> new index
  std::sort(others.begin(), others.end());
  do {
    // Identity goes to slot 0, the rest follow the chosen order.
    sigma[m.identity] = 0;
    for (int i = 0; i < static_cast<int>(others.size()); ++i) sigma[others[i]] = i + 1;
    std::vector<int> cand(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cand[static_cast<size_t>(sigma[i]) * n + sigma[j]] = sigma[m.at(i, j)];
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(others.begin(), others.end()));
  return best;
}

} // namespace acts
