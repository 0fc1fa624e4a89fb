#include "acts/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "acts/error.hpp"

namespace acts {

namespace {

bool label_ok(const std::string& token) {
  if (token.empty() || token[0] == '@') return false;
  for (char c : token)
    if (c == '.' || c == ',' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

void require_label(const std::string& token, int line) {
  if (!label_ok(token))
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ": bad label or name '" + token + "'", {line});
}

struct Cursor {
  std::vector<std::pair<int, std::string>> lines; // (line number, content sans comments)
  size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  const std::pair<int, std::string>& peek() const { return lines[pos]; }
  std::pair<int, std::string> take() { return lines[pos++]; }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

std::pair<int, std::vector<std::string>> expect_line(Cursor& cur, const std::string& what) {
  if (cur.done())
    throw Error(ErrorKind::SyntaxError, "unexpected end of input, expected " + what,
                {cur.lines.empty() ? 1 : cur.lines.back().first});
  auto [line, text] = cur.take();
  return {line, tokens_of(text)};
}

void expect_end(Cursor& cur, const std::string& block) {
  auto [line, toks] = expect_line(cur, "'end' of " + block);
  if (toks.size() != 1 || toks[0] != "end")
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": expected 'end'",
                {line});
}

int resolve(const std::vector<std::string>& labels, const std::string& token, int line,
            const std::string& what) {
  auto it = std::find(labels.begin(), labels.end(), token);
  if (it == labels.end())
    throw Error(ErrorKind::UnknownReference,
                "line " + std::to_string(line) + ": unknown " + what + " '" + token + "'", {line});
  return static_cast<int>(it - labels.begin());
}

MonoidPtr parse_monoid_block(Cursor& cur, const std::string& name, int header_line) {
  auto [eline, etoks] = expect_line(cur, "'elements' line");
  if (etoks.empty() || etoks[0] != "elements" || etoks.size() < 2)
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(eline) + ": expected 'elements L0 L1 ...'", {eline});
  std::vector<std::string> labels(etoks.begin() + 1, etoks.end());
  for (const std::string& l : labels) require_label(l, eline);

  auto [iline, itoks] = expect_line(cur, "'identity' line");
  if (itoks.size() != 2 || itoks[0] != "identity")
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(iline) + ": expected 'identity LABEL'", {iline});
  int identity = resolve(labels, itoks[1], iline, "element");

  auto [mline, mtoks] = expect_line(cur, "'mul' line");
  if (mtoks.size() != 1 || mtoks[0] != "mul")
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(mline) + ": expected 'mul'",
                {mline});

  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    auto [rline, rtoks] = expect_line(cur, "multiplication row");
    if (static_cast<int>(rtoks.size()) != n)
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(rline) + ": expected " + std::to_string(n) + " labels",
                  {rline});
    for (int j = 0; j < n; ++j) table[i][j] = resolve(labels, rtoks[j], rline, "element");
  }
  expect_end(cur, "monoid block");
  try {
    return validate_monoid(name, table, identity, labels);
  } catch (const Error& e) {
    throw Error(e.kind(), "in monoid '" + name + "' (line " + std::to_string(header_line) +
                              "): " + e.what());
  }
}

ActPtr parse_act_block(Cursor& cur, const std::string& name, const MonoidPtr& monoid,
                       int header_line) {
  auto [eline, etoks] = expect_line(cur, "'elements' line");
  if (etoks.empty() || etoks[0] != "elements" || etoks.size() < 2)
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(eline) + ": expected 'elements A0 A1 ...'", {eline});
  std::vector<std::string> labels(etoks.begin() + 1, etoks.end());
  for (const std::string& l : labels) require_label(l, eline);

  auto [aline, atoks] = expect_line(cur, "'action' line");
  if (atoks.size() != 1 || atoks[0] != "action")
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(aline) + ": expected 'action'",
                {aline});

  const int m = static_cast<int>(labels.size());
  const int n = monoid->order;
  std::vector<std::vector<int>> table(m, std::vector<int>(n));
  for (int a = 0; a < m; ++a) {
    auto [rline, rtoks] = expect_line(cur, "action row");
    if (static_cast<int>(rtoks.size()) != n)
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(rline) + ": expected " + std::to_string(n) + " labels",
                  {rline});
    for (int s = 0; s < n; ++s) table[a][s] = resolve(labels, rtoks[s], rline, "element");
  }
  expect_end(cur, "act block");
  try {
    return validate_act(name, monoid, table, labels);
  } catch (const Error& e) {
    throw Error(e.kind(),
                "in act '" + name + "' (line " + std::to_string(header_line) + "): " + e.what());
  }
}

Term parse_term(const std::string& token, const std::vector<std::string>& vars, const Act& act,
                int line) {
  if (token.size() > 1 && token[0] == '@') {
    std::string label = token.substr(1);
    int elem = act.label_index(label);
    if (elem < 0)
      throw Error(ErrorKind::UnknownReference,
                  "line " + std::to_string(line) + ": unknown constant '" + label + "'", {line});
    return ConstTerm{elem};
  }
  size_t dot = token.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == token.size())
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ": bad term '" + token +
                    "' (expected VAR.SCALAR or @CONST)",
                {line});
  std::string var = token.substr(0, dot);
  std::string scalar = token.substr(dot + 1);
  auto vit = std::find(vars.begin(), vars.end(), var);
  if (vit == vars.end())
    throw Error(ErrorKind::UnknownReference,
                "line " + std::to_string(line) + ": unknown variable '" + var + "'", {line});
  int s = act.monoid->label_index(scalar);
  if (s < 0)
    throw Error(ErrorKind::UnknownReference,
                "line " + std::to_string(line) + ": unknown scalar '" + scalar + "'", {line});
  return VarTerm{static_cast<int>(vit - vars.begin()), s};
}

SystemDecl parse_system_block(Cursor& cur, const std::string& name, const ActPtr& act,
                              const std::string& act_name, int header_line) {
  auto [vline, vtoks] = expect_line(cur, "'vars' line");
  if (vtoks.empty() || vtoks[0] != "vars")
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(vline) + ": expected 'vars [V1 V2 ...]'", {vline});
  std::vector<std::string> vars(vtoks.begin() + 1, vtoks.end());
  for (const std::string& v : vars) require_label(v, vline);

  std::vector<Equation> equations;
  while (true) {
    if (cur.done())
      throw Error(ErrorKind::SyntaxError, "unexpected end of input inside system '" + name + "'",
                  {header_line});
    auto [line, toks] = expect_line(cur, "'eq' or 'end'");
    if (toks.size() == 1 && toks[0] == "end") break;
    if (toks.size() != 4 || toks[0] != "eq" || toks[2] != "=")
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(line) + ": expected 'eq TERM = TERM'", {line});
    equations.push_back(
        Equation{parse_term(toks[1], vars, *act, line), parse_term(toks[3], vars, *act, line)});
  }

  std::vector<int> all(act->size);
  for (int i = 0; i < act->size; ++i) all[i] = i;
  SubactHandle constants = make_subact(act, all);
  try {
    return SystemDecl{name, act_name,
                      make_system(std::move(constants), static_cast<int>(vars.size()),
                                  std::move(equations), vars)};
  } catch (const Error& e) {
    throw Error(e.kind(), "in system '" + name + "' (line " + std::to_string(header_line) +
                              "): " + e.what());
  }
}

HomDecl parse_hom_block(Cursor& cur, const std::string& name, const ActPtr& source,
                        const ActPtr& target, const std::string& source_name,
                        const std::string& target_name, int header_line) {
  std::vector<int> map(source->size, -1);
  while (true) {
    if (cur.done())
      throw Error(ErrorKind::SyntaxError, "unexpected end of input inside hom '" + name + "'",
                  {header_line});
    auto [line, toks] = expect_line(cur, "'map' or 'end'");
    if (toks.size() == 1 && toks[0] == "end") break;
    if (toks.size() != 4 || toks[0] != "map" || toks[2] != "->")
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(line) + ": expected 'map A -> B'", {line});
    int a = source->label_index(toks[1]);
    if (a < 0)
      throw Error(ErrorKind::UnknownReference,
                  "line " + std::to_string(line) + ": unknown element '" + toks[1] + "'", {line});
    int b = target->label_index(toks[3]);
    if (b < 0)
      throw Error(ErrorKind::UnknownReference,
                  "line " + std::to_string(line) + ": unknown element '" + toks[3] + "'", {line});
    if (map[a] != -1)
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(line) + ": element '" + toks[1] + "' mapped twice",
                  {line});
    map[a] = b;
  }
  for (int a = 0; a < source->size; ++a)
    if (map[a] == -1)
      throw Error(ErrorKind::Validation, "in hom '" + name + "' (line " +
                                             std::to_string(header_line) +
                                             "): no map line for element '" + source->labels[a] +
                                             "'");
  try {
    return HomDecl{name, source_name, target_name, make_hom(source, target, std::move(map))};
  } catch (const Error& e) {
    throw Error(e.kind(),
                "in hom '" + name + "' (line " + std::to_string(header_line) + "): " + e.what());
  }
}

} // namespace

MonoidPtr CatalogDocument::find_monoid(const std::string& name) const {
  for (const Block& b : blocks)
    if (const auto* m = std::get_if<MonoidPtr>(&b))
      if ((*m)->name == name) return *m;
  return nullptr;
}

ActPtr CatalogDocument::find_act(const std::string& name) const {
  for (const Block& b : blocks)
    if (const auto* a = std::get_if<ActPtr>(&b))
      if ((*a)->name == name) return *a;
  return nullptr;
}

const SystemDecl* CatalogDocument::find_system(const std::string& name) const {
  for (const Block& b : blocks)
    if (const auto* s = std::get_if<SystemDecl>(&b))
      if (s->name == name) return s;
  return nullptr;
}

const HomDecl* CatalogDocument::find_hom(const std::string& name) const {
  for (const Block& b : blocks)
    if (const auto* h = std::get_if<HomDecl>(&b))
      if (h->name == name) return h;
  return nullptr;
}

CatalogDocument parse_catalog(const std::string& text) {
  CatalogDocument doc;
  Cursor cur;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    bool inside_block = false;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      size_t b = raw.find_first_not_of(" \t");
      if (b == std::string::npos) continue; // blank
      if (raw[b] == '#') {
        // Full-line comments between blocks are part of the document;
        // comments inside a block are trivia.
        if (!inside_block) cur.lines.emplace_back(number, raw.substr(b));
        continue;
      }
      size_t hash = raw.find('#');
      std::string content = hash == std::string::npos ? raw : raw.substr(0, hash);
      std::vector<std::string> toks = tokens_of(content);
      if (toks.empty()) continue;
      if (!inside_block && (toks[0] == "monoid" || toks[0] == "act" || toks[0] == "system" ||
                            toks[0] == "hom"))
        inside_block = true;
      else if (inside_block && toks.size() == 1 && toks[0] == "end")
        inside_block = false;
      cur.lines.emplace_back(number, content);
    }
  }

  auto is_comment = [](const std::string& s) { return !s.empty() && s[0] == '#'; };

  while (!cur.done()) {
    if (is_comment(cur.peek().second)) {
      doc.blocks.push_back(CommentLine{cur.take().second});
      continue;
    }
    auto [line, toks] = expect_line(cur, "block header");
    const std::string& kind = toks[0];

    if (kind == "monoid") {
      if (toks.size() != 2)
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": expected 'monoid NAME'", {line});
      require_label(toks[1], line);
      if (doc.find_monoid(toks[1]))
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": duplicate monoid '" + toks[1] + "'",
                    {line});
      doc.blocks.push_back(parse_monoid_block(cur, toks[1], line));
    } else if (kind == "act") {
      if (toks.size() != 4 || toks[2] != "over")
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": expected 'act NAME over MONOID'", {line});
      require_label(toks[1], line);
      MonoidPtr monoid = doc.find_monoid(toks[3]);
      if (!monoid)
        throw Error(ErrorKind::UnknownReference,
                    "line " + std::to_string(line) + ": unknown monoid '" + toks[3] + "'", {line});
      if (doc.find_act(toks[1]))
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": duplicate act '" + toks[1] + "'", {line});
      doc.blocks.push_back(parse_act_block(cur, toks[1], monoid, line));
    } else if (kind == "system") {
      if (toks.size() != 4 || toks[2] != "in")
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": expected 'system NAME in ACT'", {line});
      require_label(toks[1], line);
      ActPtr act = doc.find_act(toks[3]);
      if (!act)
        throw Error(ErrorKind::UnknownReference,
                    "line " + std::to_string(line) + ": unknown act '" + toks[3] + "'", {line});
      if (doc.find_system(toks[1]))
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": duplicate system '" + toks[1] + "'",
                    {line});
      doc.blocks.push_back(parse_system_block(cur, toks[1], act, toks[3], line));
    } else if (kind == "hom") {
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": expected 'hom NAME : SRC -> TGT'", {line});
      require_label(toks[1], line);
      ActPtr src = doc.find_act(toks[3]);
      if (!src)
        throw Error(ErrorKind::UnknownReference,
                    "line " + std::to_string(line) + ": unknown act '" + toks[3] + "'", {line});
      ActPtr tgt = doc.find_act(toks[5]);
      if (!tgt)
        throw Error(ErrorKind::UnknownReference,
                    "line " + std::to_string(line) + ": unknown act '" + toks[5] + "'", {line});
      if (doc.find_hom(toks[1]))
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line) + ": duplicate hom '" + toks[1] + "'", {line});
      doc.blocks.push_back(parse_hom_block(cur, toks[1], src, tgt, toks[3], toks[5], line));
    } else {
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(line) + ": unknown block kind '" + kind + "'", {line});
    }
  }
  return doc;
}

std::string serialize_monoid(const Monoid& monoid) {
  std::string out = "monoid " + monoid.name + "\nelements";
  for (const std::string& l : monoid.labels) out += " " + l;
  out += "\nidentity " + monoid.labels[monoid.identity] + "\nmul\n";
  for (int i = 0; i < monoid.order; ++i) {
    for (int j = 0; j < monoid.order; ++j) {
      if (j) out += " ";
      out += monoid.labels[monoid.at(i, j)];
    }
    out += "\n";
  }
  return out + "end\n";
}

std::string serialize_act(const Act& act) {
  std::string out = "act " + act.name + " over " + act.monoid->name + "\nelements";
  for (const std::string& l : act.labels) out += " " + l;
  out += "\naction\n";
  for (int a = 0; a < act.size; ++a) {
    for (int s = 0; s < act.monoid->order; ++s) {
      if (s) out += " ";
      out += act.labels[act.at(a, s)];
    }
    out += "\n";
  }
  return out + "end\n";
}

std::string serialize_system(const std::string& name, const EquationSystem& system) {
  std::string out = "system " + name + " in " + system.world()->name + "\nvars";
  for (const std::string& v : system.var_names) out += " " + v;
  out += "\n";
  for (const Equation& eq : system.equations) out += "eq " + equation_text(system, eq) + "\n";
  return out + "end\n";
}

std::string serialize_hom(const std::string& name, const ActHom& hom) {
  std::string out =
      "hom " + name + " : " + hom.source->name + " -> " + hom.target->name + "\n";
  for (int a = 0; a < hom.source->size; ++a)
    out += "map " + hom.source->labels[a] + " -> " + hom.target->labels[hom.map[a]] + "\n";
  return out + "end\n";
}

std::string serialize_catalog(const CatalogDocument& doc) {
  std::string out;
  bool first = true;
  for (const CatalogDocument::Block& block : doc.blocks) {
    if (!first) out += "\n";
    first = false;
    if (const auto* c = std::get_if<CommentLine>(&block)) {
      out += c->text + "\n";
    } else if (const auto* m = std::get_if<MonoidPtr>(&block)) {
      out += serialize_monoid(**m);
    } else if (const auto* a = std::get_if<ActPtr>(&block)) {
      out += serialize_act(**a);
    } else if (const auto* s = std::get_if<SystemDecl>(&block)) {
      out += serialize_system(s->name, s->system);
    } else if (const auto* h = std::get_if<HomDecl>(&block)) {
      out += serialize_hom(h->name, h->hom);
    }
  }
  return out;
}

namespace {

bool monoids_equal(const Monoid& a, const Monoid& b) {
  return a.name == b.name && a.labels == b.labels && a.identity == b.identity && a.mul == b.mul;
}

bool acts_equal(const Act& a, const Act& b) {
  return a.name == b.name && a.monoid->name == b.monoid->name && a.labels == b.labels &&
         a.action == b.action;
}

} // namespace

bool documents_equal(const CatalogDocument& a, const CatalogDocument& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  for (size_t i = 0; i < a.blocks.size(); ++i) {
    const auto& x = a.blocks[i];
    const auto& y = b.blocks[i];
    if (x.index() != y.index()) return false;
    if (const auto* c = std::get_if<CommentLine>(&x)) {
      if (c->text != std::get<CommentLine>(y).text) return false;
    } else if (const auto* m = std::get_if<MonoidPtr>(&x)) {
      if (!monoids_equal(**m, *std::get<MonoidPtr>(y))) return false;
    } else if (const auto* act = std::get_if<ActPtr>(&x)) {
      if (!acts_equal(**act, *std::get<ActPtr>(y))) return false;
    } else if (const auto* s = std::get_if<SystemDecl>(&x)) {
      const auto& t = std::get<SystemDecl>(y);
      if (s->name != t.name || s->act_name != t.act_name ||
          s->system.var_names != t.system.var_names ||
          !(s->system.equations == t.system.equations) ||
          s->system.constants.members != t.system.constants.members)
        return false;
    } else if (const auto* h = std::get_if<HomDecl>(&x)) {
      const auto& t = std::get<HomDecl>(y);
      if (h->name != t.name || h->source_name != t.source_name ||
          h->target_name != t.target_name || h->hom.map != t.hom.map)
        return false;
    }
  }
  return true;
}

} // namespace acts
