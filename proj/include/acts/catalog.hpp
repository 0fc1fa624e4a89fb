// The plain-text catalog format: monoid / act / system / hom blocks.
// parse and serialize are mutually inverse on documents.
#ifndef ACTS_CATALOG_HPP
#define ACTS_CATALOG_HPP

#include <string>
#include <variant>
#include <vector>

#include "acts/equations.hpp"

namespace acts {

struct CommentLine {
  std::string text; // including the leading '#'
};

struct SystemDecl {
  std::string name;
  std::string act_name;
  EquationSystem system; // world = the named act, constants = the whole act
};

struct HomDecl {
  std::string name;
  std::string source_name;
  std::string target_name;
  ActHom hom;
};

struct CatalogDocument {
  using Block = std::variant<CommentLine, MonoidPtr, ActPtr, SystemDecl, HomDecl>;
  std::vector<Block> blocks;

  MonoidPtr find_monoid(const std::string& name) const;
  ActPtr find_act(const std::string& name) const;
  const SystemDecl* find_system(const std::string& name) const;
  const HomDecl* find_hom(const std::string& name) const;
};

// Line-oriented parser. '#' starts a comment to end of line; full-line
// comments between blocks are kept as document blocks. Throws
// Error{SyntaxError} with the line number, Error{UnknownReference} for
// undeclared names, and forwards validation failures tagged with the block.
CatalogDocument parse_catalog(const std::string& text);

// Canonical text: blocks in declaration order, single spaces, one blank line
// between blocks. parse(serialize(doc)) == doc.
std::string serialize_catalog(const CatalogDocument& doc);

std::string serialize_monoid(const Monoid& monoid);
std::string serialize_act(const Act& act);
std::string serialize_system(const std::string& name, const EquationSystem& system);
std::string serialize_hom(const std::string& name, const ActHom& hom);

bool documents_equal(const CatalogDocument& a, const CatalogDocument& b);

} // namespace acts

#endif
