// Error type shared by the whole library: one exception class tagged with a
// kind, so callers (CLI, tests) can map failures to exit codes / assertions.
#ifndef ACTS_ERROR_HPP
#define ACTS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace acts {

enum class ErrorKind {
  NotIdentity,        // monoid identity law fails
  NotAssociative,     // monoid associativity fails
  IdentityAxiom,      // act unit axiom fails
  AssociativityAxiom, // act associativity axiom fails
  EmptySeed,
  TooLarge,     // materialization cap exceeded
  MixedMonoids, // operands live over different monoids
  BadEmbedding, // supplied map is not a homomorphism
  CapExceeded,  // enumeration / search budget exceeded
  TargetNotInClass,
  SyntaxError,      // catalog text is malformed
  UnknownReference, // catalog references an undeclared name
  Validation,       // precondition or invariant violated
  Internal,         // should-not-happen; indicates a library bug
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::vector<long> where = {})
      : std::runtime_error(message), kind_(kind), where_(std::move(where)) {}

  ErrorKind kind() const { return kind_; }

  // Indices involved in the failure (element / line numbers), when meaningful.
  const std::vector<long>& where() const { return where_; }

private:
  ErrorKind kind_;
  std::vector<long> where_;
};

} // namespace acts

#endif
