// Finite monoids as validated multiplication tables.
#ifndef ACTS_MONOID_HPP
#define ACTS_MONOID_HPP

#include <memory>
#include <string>
#include <vector>

namespace acts {

struct Monoid {
  std::string name;
  int order = 0;                   // n
  std::vector<std::string> labels; // n distinct element labels
  int identity = 0;                // index of the identity element
  std::vector<int> mul;            // row-major n*n: mul[i*n+j] = index of e_i * e_j

  int at(int i, int j) const { return mul[static_cast<size_t>(i) * order + j]; }
  int label_index(const std::string& label) const; // -1 when absent
};

using MonoidPtr = std::shared_ptr<const Monoid>;

// Checks the identity and associativity laws and returns the monoid.
// Throws Error{NotIdentity} with the first failing element, or
// Error{NotAssociative} with the first failing triple in lexicographic order.
MonoidPtr validate_monoid(std::string name, const std::vector<std::vector<int>>& table,
                          int identity, std::vector<std::string> labels);

// Structural equality: same order, identity index and table. Labels and names
// are presentation only.
bool same_monoid(const Monoid& a, const Monoid& b);

// Lexicographically minimal table over relabelings that fix the identity.
std::vector<int> canonical_monoid_form(const Monoid& m);

} // namespace acts

#endif
