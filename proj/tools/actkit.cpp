// actkit: command-line workbench for finite monoid acts. Catalog files in,
// purity / injectivity-class / preenvelope answers out.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acts/catalog.hpp"
#include "acts/classes.hpp"
#include "acts/enumeration.hpp"
#include "acts/error.hpp"
#include "acts/preenvelope.hpp"
#include "acts/purity.hpp"

using json = nlohmann::json;
using namespace acts;

namespace {

struct Options {
  bool json_output = false;
  std::int64_t cap = kDefaultMaterializationCap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Validation, "cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CatalogDocument load(const std::string& path) { return parse_catalog(read_file(path)); }

ActPtr need_act(const CatalogDocument& doc, const std::string& name) {
  ActPtr act = doc.find_act(name);
  if (!act) throw Error(ErrorKind::UnknownReference, "unknown act '" + name + "'");
  return act;
}

MonoidPtr need_monoid(const CatalogDocument& doc, const std::string& name) {
  MonoidPtr m = doc.find_monoid(name);
  if (!m) throw Error(ErrorKind::UnknownReference, "unknown monoid '" + name + "'");
  return m;
}

std::vector<int> parse_elements(const Act& act, const std::string& csv) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    int idx = act.label_index(token);
    if (idx < 0)
      throw Error(ErrorKind::UnknownReference,
                  "act '" + act.name + "' has no element '" + token + "'");
    out.push_back(idx);
  }
  if (out.empty()) throw Error(ErrorKind::Validation, "empty element list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string label_list(const Act& act, const std::vector<int>& elems) {
  std::string out;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += act.labels[elems[i]];
  }
  return out;
}

json hom_json(const ActHom& h) {
  json map = json::object();
  for (int a = 0; a < h.source->size; ++a)
    map[h.source->labels[a]] = h.target->labels[h.map[a]];
  return json{{"source", h.source->name}, {"target", h.target->name}, {"map", map}};
}

std::string hom_text(const ActHom& h) {
  std::string out;
  for (int a = 0; a < h.source->size; ++a) {
    if (a) out += ", ";
    out += h.source->labels[a] + " -> " + h.target->labels[h.map[a]];
  }
  return out;
}

// The witness as a self-contained catalog fragment: its world act plus the
// system block.
std::string witness_catalog(const EquationSystem& witness) {
  return serialize_act(*witness.world()) + "\n" + serialize_system("witness", witness);
}

void print_witness(const EquationSystem& witness) {
  std::cout << "witness system over act '" << witness.world()->name << "' (solvable in the"
            << " ambient act, unsolvable in the subact):\n";
  for (const Equation& eq : witness.equations)
    std::cout << "  " << equation_text(witness, eq) << "\n";
}

ActClass parse_class(const std::string& spec, const MonoidPtr& monoid, const ActPtr& subject) {
  if (spec == "all") return all_acts(monoid);
  if (spec == "weakly-p-injective") return weakly_p_injective(monoid);
  if (spec == "weakly-f-injective") return weakly_f_injective(monoid);
  if (spec == "almost-pure") return almost_pure(monoid);
  if (spec.rfind("abs-pure", 0) == 0) {
    int bound = subject ? default_abs_pure_bound(*subject) : 4;
    if (spec.size() > 8) {
      if (spec[8] != ':')
        throw Error(ErrorKind::Validation, "bad class spec '" + spec + "'");
      bound = std::stoi(spec.substr(9));
    }
    return absolutely_pure_bounded(monoid, bound);
  }
  if (spec.rfind("extensional:", 0) == 0) {
    CatalogDocument doc = load(spec.substr(12));
    std::vector<ActPtr> members;
    for (const auto& block : doc.blocks)
      if (const auto* a = std::get_if<ActPtr>(&block)) members.push_back(*a);
    if (members.empty())
      throw Error(ErrorKind::Validation, "extensional class file declares no acts");
    return extensional_class(std::move(members));
  }
  throw Error(ErrorKind::Validation,
              "unknown class '" + spec +
                  "' (expected all, weakly-p-injective, weakly-f-injective, almost-pure, "
                  "abs-pure:N, extensional:FILE)");
}

json factoring_json(const FactoringReport& r) {
  json j{{"verified", r.verified},
         {"class", r.cls.describe()},
         {"verify_bound", r.verify_bound},
         {"certificates", r.certificates.size()}};
  if (r.counterexample) {
    j["counterexample"] = {{"obstacle", serialize_act(*r.counterexample->first)},
                           {"f", hom_json(r.counterexample->second)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

void print_factoring(const FactoringReport& r) {
  std::cout << "preenvelope into " << r.cls.describe() << " (verify bound " << r.verify_bound
            << "): " << (r.verified ? "verified" : "NOT verified") << "\n";
  std::cout << "  factored maps: " << r.certificates.size() << "\n";
  if (r.counterexample) {
    std::cout << "  counterexample target:\n" << serialize_act(*r.counterexample->first);
    std::cout << "  unfactorable map: " << hom_text(r.counterexample->second) << "\n";
  }
}

int cmd_validate(const Options& opt, const std::vector<std::string>& files) {
  json out = json::array();
  for (const std::string& path : files) {
    CatalogDocument doc = load(path);
    int monoids = 0, acts = 0, systems = 0, homs = 0;
    for (const auto& block : doc.blocks) {
      if (std::holds_alternative<MonoidPtr>(block)) ++monoids;
      if (std::holds_alternative<ActPtr>(block)) ++acts;
      if (std::holds_alternative<SystemDecl>(block)) ++systems;
      if (std::holds_alternative<HomDecl>(block)) ++homs;
    }
    if (opt.json_output)
      out.push_back({{"file", path},
                     {"ok", true},
                     {"monoids", monoids},
                     {"acts", acts},
                     {"systems", systems},
                     {"homs", homs}});
    else
      std::cout << path << ": ok (" << monoids << " monoids, " << acts << " acts, " << systems
                << " systems, " << homs << " homs)\n";
  }
  if (opt.json_output) std::cout << json{{"command", "validate"}, {"files", out}}.dump() << "\n";
  return 0;
}

int cmd_solve(const Options& opt, const std::string& file, const std::string& system_name) {
  CatalogDocument doc = load(file);
  const SystemDecl* decl = doc.find_system(system_name);
  if (!decl)
    throw Error(ErrorKind::UnknownReference, "unknown system '" + system_name + "'");
  const EquationSystem& sys = decl->system;
  auto solution = solve_system(sys, sys.world(), identity_embed(sys));
  if (opt.json_output) {
    json j{{"command", "solve"}, {"system", system_name}, {"act", decl->act_name},
           {"solvable", solution.has_value()}};
    if (solution) {
      json assignment = json::object();
      for (int v = 0; v < sys.var_count; ++v)
        assignment[sys.var_names[v]] = sys.world()->labels[solution->values[v]];
      j["assignment"] = assignment;
    } else {
      j["assignment"] = nullptr;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (!solution) {
    std::cout << "system '" << system_name << "' has no solution in act '" << decl->act_name
              << "'\n";
    return 0;
  }
  std::cout << "system '" << system_name << "' is solvable in act '" << decl->act_name << "':\n";
  for (int v = 0; v < sys.var_count; ++v)
    std::cout << "  " << sys.var_names[v] << " = " << sys.world()->labels[solution->values[v]]
              << "\n";
  return 0;
}

int cmd_check_pure(const Options& opt, const std::string& file, const std::string& act_name,
                   const std::string& subact_csv, const std::string& method, int vars, int eqs) {
  CatalogDocument doc = load(file);
  ActPtr act = need_act(doc, act_name);
  SubactHandle sub = make_subact(act, parse_elements(*act, subact_csv));

  PurityVerdict verdict;
  if (method == "retraction") {
    verdict = is_pure(sub);
  } else if (method == "diagram") {
    verdict = is_pure_via_diagram(sub);
  } else if (method == "bounded") {
    verdict.method = PurityMethod::Bounded;
    verdict.pure = is_pure_bounded(sub, vars, eqs);
  } else {
    throw Error(ErrorKind::Validation, "unknown method '" + method + "'");
  }

  std::optional<EquationSystem> display_witness = verdict.witness;
  if (!verdict.pure && method != "bounded") display_witness = purity_witness(sub);

  if (opt.json_output) {
    json subact = json::array();
    for (int m : sub.members) subact.push_back(act->labels[m]);
    json j{{"command", "check-pure"},
           {"act", act_name},
           {"subact", subact},
           {"method", purity_method_name(verdict.method)},
           {"pure", verdict.pure}};
    if (method == "bounded") j["bounds"] = {{"vars", vars}, {"eqs", eqs}};
    j["witness"] = display_witness ? json(witness_catalog(*display_witness)) : json(nullptr);
    j["retraction"] = verdict.retraction ? hom_json(*verdict.retraction) : json(nullptr);
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "subact {" << label_list(*act, sub.members) << "} of act '" << act_name
            << "', method " << purity_method_name(verdict.method);
  if (method == "bounded") std::cout << " (vars<=" << vars << ", eqs<=" << eqs << ")";
  std::cout << ": " << (verdict.pure ? "pure" : "not pure") << "\n";
  if (verdict.retraction) std::cout << "retraction: " << hom_text(*verdict.retraction) << "\n";
  if (display_witness) print_witness(*display_witness);
  return 0;
}

int cmd_pure_closure(const Options& opt, const std::string& file, const std::string& act_name,
                     const std::string& seed_csv) {
  CatalogDocument doc = load(file);
  ActPtr act = need_act(doc, act_name);
  std::vector<int> seed = parse_elements(*act, seed_csv);
  PureClosureResult result = pure_closure_detailed(act, seed);
  if (opt.json_output) {
    json members = json::array();
    for (int m : result.closure.members) members.push_back(act->labels[m]);
    std::cout << json{{"command", "pure-closure"},
                      {"act", act_name},
                      {"seed", label_list(*act, seed)},
                      {"members", members},
                      {"size", result.closure.members.size()},
                      {"iterations", result.iterations}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "pure closure of {" << label_list(*act, seed) << "} in act '" << act_name
            << "': {" << label_list(*act, result.closure.members) << "} (" << result.iterations
            << " witness rounds)\n";
  return 0;
}

int cmd_classify(const Options& opt, const std::string& file, const std::string& act_name,
                 int bound) {
  CatalogDocument doc = load(file);
  ActPtr act = need_act(doc, act_name);
  MonoidPtr monoid = act->monoid;
  if (bound <= 0) bound = default_abs_pure_bound(*act);

  std::vector<std::pair<std::string, ActClass>> kinds;
  kinds.emplace_back("all", all_acts(monoid));
  kinds.emplace_back("weakly-p-injective", weakly_p_injective(monoid));
  kinds.emplace_back("weakly-f-injective", weakly_f_injective(monoid));
  kinds.emplace_back("almost-pure", almost_pure(monoid));
  kinds.emplace_back("abs-pure:" + std::to_string(bound),
                     absolutely_pure_bounded(monoid, bound));

  json memberships = json::object();
  json counterexamples = json::object();
  for (const auto& [name, cls] : kinds) {
    RelInjResult r = class_membership(cls, act);
    memberships[name] = r.injective;
    if (!opt.json_output)
      std::cout << name << ": " << (r.injective ? "yes" : "no");
    if (r.counterexample) {
      const auto& [inst, h] = *r.counterexample;
      if (opt.json_output)
        counterexamples[name] = {{"instance", instance_text(inst)}, {"hom", hom_json(h)}};
      else
        std::cout << "  (no extension of " << hom_text(h) << " along " << instance_text(inst)
                  << ")";
    }
    if (!opt.json_output) std::cout << "\n";
  }
  if (opt.json_output)
    std::cout << json{{"command", "classify"},
                      {"act", act_name},
                      {"bound", bound},
                      {"memberships", memberships},
                      {"counterexamples", counterexamples}}
                     .dump()
              << "\n";
  return 0;
}

int cmd_ideals(const Options& opt, const std::string& file, const std::string& monoid_name,
               bool principal) {
  CatalogDocument doc = load(file);
  MonoidPtr monoid = need_monoid(doc, monoid_name);
  std::vector<SubactHandle> ideals = right_ideal_acts(monoid, principal);
  if (opt.json_output) {
    json list = json::array();
    for (const SubactHandle& i : ideals) {
      json members = json::array();
      for (int m : i.members) members.push_back(monoid->labels[m]);
      list.push_back(members);
    }
    std::cout << json{{"command", "ideals"},
                      {"monoid", monoid_name},
                      {"principal", principal},
                      {"ideals", list}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << (principal ? "principal right ideals" : "right ideals") << " of '" << monoid_name
            << "': " << ideals.size() << "\n";
  for (const SubactHandle& i : ideals) {
    std::cout << "  {";
    for (size_t k = 0; k < i.members.size(); ++k)
      std::cout << (k ? "," : "") << monoid->labels[i.members[k]];
    std::cout << "}\n";
  }
  return 0;
}

int cmd_cyclic(const Options& opt, const std::string& file, const std::string& monoid_name) {
  CatalogDocument doc = load(file);
  MonoidPtr monoid = need_monoid(doc, monoid_name);
  auto quotients = cyclic_acts(monoid);
  if (opt.json_output) {
    json list = json::array();
    for (const auto& [rho, act] : quotients) {
      json classes = json::array();
      for (int c = 0; c < rho.class_count; ++c) {
        json cls = json::array();
        for (int x = 0; x < monoid->order; ++x)
          if (rho.class_of[x] == c) cls.push_back(monoid->labels[x]);
        classes.push_back(cls);
      }
      list.push_back({{"classes", classes}, {"act", serialize_act(*act)}});
    }
    std::cout << json{{"command", "cyclic"}, {"monoid", monoid_name}, {"congruences", list}}.dump()
              << "\n";
    return 0;
  }
  std::cout << "right congruences of '" << monoid_name << "': " << quotients.size() << "\n";
  for (const auto& [rho, act] : quotients) {
    std::cout << "classes:";
    for (int c = 0; c < rho.class_count; ++c) {
      std::cout << " {";
      bool first = true;
      for (int x = 0; x < monoid->order; ++x)
        if (rho.class_of[x] == c) {
          std::cout << (first ? "" : ",") << monoid->labels[x];
          first = false;
        }
      std::cout << "}";
    }
    std::cout << "\n" << serialize_act(*act) << "\n";
  }
  return 0;
}

int cmd_preenvelope(const Options& opt, const std::string& file, const std::string& act_name,
                    const std::string& class_spec, int target_bound, int verify_bound,
                    bool product, bool minimize) {
  if (product && minimize)
    throw Error(ErrorKind::Validation, "--product and --minimize are mutually exclusive");
  CatalogDocument doc = load(file);
  ActPtr act = need_act(doc, act_name);
  ActClass cls = parse_class(class_spec, act->monoid, act);

  if (minimize) {
    auto found = find_min_preenvelope(act, cls, target_bound, verify_bound);
    if (opt.json_output) {
      json j{{"command", "preenvelope"}, {"mode", "minimize"}, {"act", act_name},
             {"found", found.has_value()}};
      if (found) {
        j["target"] = serialize_act(*found->first.target);
        j["phi"] = hom_json(found->first);
        j["report"] = factoring_json(found->second);
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (!found) {
      std::cout << "no verified preenvelope with target size <= " << target_bound << "\n";
      return 0;
    }
    std::cout << "smallest verified target (size " << found->first.target->size << "):\n"
              << serialize_act(*found->first.target) << "phi: " << hom_text(found->first) << "\n";
    print_factoring(found->second);
    return 0;
  }

  LazyProductAct lazy = product_preenvelope(act, cls, target_bound);
  bool certs = check_projection_certificates(lazy);
  ProductReduction red = reduce_via_pure_closure(lazy, opt.cap);
  FactoringReport report = verify_preenvelope(red.map, cls, verify_bound);

  if (opt.json_output) {
    json j{{"command", "preenvelope"},
           {"mode", "product"},
           {"act", act_name},
           {"coordinates", lazy.coordinates.size()},
           {"product_size", lazy.full_size()},
           {"projection_certificates", certs},
           {"closure_iterations", red.closure_iterations},
           {"reduced", serialize_act(*red.reduced)},
           {"phi", hom_json(red.map)},
           {"report", factoring_json(report)}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "product preenvelope of '" << act_name << "' into " << cls.describe() << ":\n"
            << "  coordinates (pairs C', f): " << lazy.coordinates.size() << "\n"
            << "  full product size: " << lazy.full_size() << "\n"
            << "  projection certificates: " << (certs ? "ok" : "FAILED") << "\n"
            << "  pure closure rounds: " << red.closure_iterations << "\n"
            << "reduced target (size " << red.reduced->size << "):\n"
            << serialize_act(*red.reduced) << "phi: " << hom_text(red.map) << "\n";
  print_factoring(report);
  return 0;
}

int cmd_verify_preenvelope(const Options& opt, const std::string& file,
                           const std::string& hom_name, const std::string& class_spec, int bound,
                           bool envelope) {
  CatalogDocument doc = load(file);
  const HomDecl* decl = doc.find_hom(hom_name);
  if (!decl) throw Error(ErrorKind::UnknownReference, "unknown hom '" + hom_name + "'");
  ActClass cls = parse_class(class_spec, decl->hom.source->monoid, decl->hom.source);

  if (envelope) {
    EnvelopeReport r = verify_envelope(decl->hom, cls, bound);
    if (opt.json_output) {
      json j{{"command", "verify-preenvelope"},
             {"hom", hom_name},
             {"envelope_checked", true},
             {"report", factoring_json(r.preenvelope)},
             {"envelope", r.envelope}};
      j["failing_endo"] = r.failing_endo ? hom_json(*r.failing_endo) : json(nullptr);
      std::cout << j.dump() << "\n";
      return 0;
    }
    print_factoring(r.preenvelope);
    std::cout << "envelope: " << (r.envelope ? "yes" : "no") << "\n";
    if (r.failing_endo)
      std::cout << "  non-bijective self-factoring: " << hom_text(*r.failing_endo) << "\n";
    return 0;
  }

  FactoringReport r = verify_preenvelope(decl->hom, cls, bound);
  if (opt.json_output) {
    std::cout << json{{"command", "verify-preenvelope"},
                      {"hom", hom_name},
                      {"envelope_checked", false},
                      {"report", factoring_json(r)}}
                     .dump()
              << "\n";
    return 0;
  }
  print_factoring(r);
  return 0;
}

int cmd_enumerate(const Options& opt, const std::string& mode, const std::string& file, int order,
                  const std::string& monoid_name, int size, const std::string& act_name,
                  const std::string& subact_csv, int extra) {
  CatalogDocument out;
  size_t count = 0;

  if (mode == "monoids") {
    std::vector<MonoidPtr> monoids = enumerate_monoids(order);
    count = monoids.size();
    out.blocks.push_back(CommentLine{"# monoids of order " + std::to_string(order) +
                                     " up to isomorphism: " + std::to_string(count)});
    for (const MonoidPtr& m : monoids) out.blocks.push_back(m);
  } else if (mode == "acts") {
    if (file.empty()) throw Error(ErrorKind::Validation, "enumerate acts needs a catalog FILE");
    CatalogDocument doc = load(file);
    MonoidPtr monoid = need_monoid(doc, monoid_name);
    std::vector<ActPtr> acts = enumerate_acts(monoid, size);
    count = acts.size();
    out.blocks.push_back(CommentLine{"# acts of size " + std::to_string(size) + " over " +
                                     monoid_name + " up to isomorphism: " +
                                     std::to_string(count)});
    out.blocks.push_back(monoid);
    for (const ActPtr& a : acts) out.blocks.push_back(a);
  } else if (mode == "extensions") {
    if (file.empty())
      throw Error(ErrorKind::Validation, "enumerate extensions needs a catalog FILE");
    CatalogDocument doc = load(file);
    ActPtr act = need_act(doc, act_name);
    SubactHandle sub = make_subact(act, parse_elements(*act, subact_csv));
    ActPtr designated = subact_as_act(sub, act_name + "_part");
    std::vector<SubactHandle> exts = enumerate_extensions(designated, extra);
    count = exts.size();
    out.blocks.push_back(CommentLine{"# extensions of the designated subact by " +
                                     std::to_string(extra) +
                                     " elements, up to isomorphisms fixing it: " +
                                     std::to_string(count)});
    out.blocks.push_back(act->monoid);
    for (const SubactHandle& e : exts) out.blocks.push_back(e.act);
  } else {
    throw Error(ErrorKind::Validation,
                "unknown enumeration mode '" + mode + "' (monoids, acts, extensions)");
  }

  std::string text = serialize_catalog(out);
  if (opt.json_output) {
    std::cout << json{{"command", "enumerate"}, {"mode", mode}, {"count", count},
                      {"catalog", text}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << text;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"actkit: finite monoid acts, purity, injectivity classes, preenvelopes"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "emit one machine-readable JSON object");
  app.add_option("--cap", opt.cap, "materialization cap for product acts");

  std::vector<std::string> validate_files;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate catalog files");
  validate->add_option("files", validate_files, "catalog files")->required();

  std::string solve_file, solve_system_name;
  CLI::App* solve = app.add_subcommand("solve", "solve a declared system in its own act");
  solve->add_option("file", solve_file)->required();
  solve->add_option("--system", solve_system_name)->required();

  std::string cp_file, cp_act, cp_subact, cp_method = "retraction";
  int cp_vars = 2, cp_eqs = 4;
  CLI::App* check_pure = app.add_subcommand("check-pure", "decide purity of a subact");
  check_pure->add_option("file", cp_file)->required();
  check_pure->add_option("--act", cp_act)->required();
  check_pure->add_option("--subact", cp_subact, "comma-separated element labels")->required();
  check_pure->add_option("--method", cp_method, "retraction | diagram | bounded");
  check_pure->add_option("--vars", cp_vars, "bounded method: max variables");
  check_pure->add_option("--eqs", cp_eqs, "bounded method: max equations");

  std::string pc_file, pc_act, pc_seed;
  CLI::App* pclosure = app.add_subcommand("pure-closure", "grow a seed to a pure subact");
  pclosure->add_option("file", pc_file)->required();
  pclosure->add_option("--act", pc_act)->required();
  pclosure->add_option("--seed", pc_seed, "comma-separated element labels")->required();

  std::string cl_file, cl_act;
  int cl_bound = 0;
  CLI::App* classify = app.add_subcommand("classify", "membership in the built-in act classes");
  classify->add_option("file", cl_file)->required();
  classify->add_option("--act", cl_act)->required();
  classify->add_option("--bound", cl_bound, "bound for the absolute-purity surrogate");

  std::string id_file, id_monoid;
  bool id_principal = false;
  CLI::App* ideals = app.add_subcommand("ideals", "right ideals of a monoid");
  ideals->add_option("file", id_file)->required();
  ideals->add_option("--monoid", id_monoid)->required();
  ideals->add_flag("--principal", id_principal, "only the ideals aS");

  std::string cy_file, cy_monoid;
  CLI::App* cyclic = app.add_subcommand("cyclic", "right congruences and their quotient acts");
  cyclic->add_option("file", cy_file)->required();
  cyclic->add_option("--monoid", cy_monoid)->required();

  std::string pe_file, pe_act, pe_class;
  int pe_target_bound = 0, pe_verify_bound = 0;
  bool pe_product = false, pe_minimize = false;
  CLI::App* preenv = app.add_subcommand("preenvelope", "construct a preenvelope into a class");
  preenv->add_option("file", pe_file)->required();
  preenv->add_option("--act", pe_act)->required();
  preenv->add_option("--class", pe_class)->required();
  preenv->add_option("--target-bound", pe_target_bound, "representative / target size bound")
      ->required();
  preenv->add_option("--verify-bound", pe_verify_bound, "verification sweep size bound")
      ->required();
  preenv->add_flag("--product", pe_product, "product construction + pure-closure reduction");
  preenv->add_flag("--minimize", pe_minimize, "smallest verified target instead");

  std::string vp_file, vp_hom, vp_class;
  int vp_bound = 0;
  bool vp_envelope = false;
  CLI::App* verify = app.add_subcommand("verify-preenvelope", "verify a declared hom");
  verify->add_option("file", vp_file)->required();
  verify->add_option("--hom", vp_hom)->required();
  verify->add_option("--class", vp_class)->required();
  verify->add_option("--bound", vp_bound)->required();
  verify->add_flag("--envelope", vp_envelope, "also test the envelope condition");

  std::string en_mode, en_file, en_monoid, en_act, en_subact;
  int en_order = 1, en_size = 1, en_extra = 1;
  CLI::App* enumerate = app.add_subcommand("enumerate", "emit catalogs of small objects");
  enumerate->add_option("mode", en_mode, "monoids | acts | extensions")->required();
  enumerate->add_option("file", en_file, "catalog file (acts and extensions modes)");
  enumerate->add_option("--order", en_order, "monoid order (monoids mode)");
  enumerate->add_option("--monoid", en_monoid, "monoid name (acts mode)");
  enumerate->add_option("--size", en_size, "act size (acts mode)");
  enumerate->add_option("--act", en_act, "act name (extensions mode)");
  enumerate->add_option("--subact", en_subact, "designated subact (extensions mode)");
  enumerate->add_option("--extra", en_extra, "number of new elements (extensions mode)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(opt, validate_files);
    if (*solve) return cmd_solve(opt, solve_file, solve_system_name);
    if (*check_pure)
      return cmd_check_pure(opt, cp_file, cp_act, cp_subact, cp_method, cp_vars, cp_eqs);
    if (*pclosure) return cmd_pure_closure(opt, pc_file, pc_act, pc_seed);
    if (*classify) return cmd_classify(opt, cl_file, cl_act, cl_bound);
    if (*ideals) return cmd_ideals(opt, id_file, id_monoid, id_principal);
    if (*cyclic) return cmd_cyclic(opt, cy_file, cy_monoid);
    if (*preenv)
      return cmd_preenvelope(opt, pe_file, pe_act, pe_class, pe_target_bound, pe_verify_bound,
                             pe_product, pe_minimize);
    if (*verify)
      return cmd_verify_preenvelope(opt, vp_file, vp_hom, vp_class, vp_bound, vp_envelope);
    if (*enumerate)
      return cmd_enumerate(opt, en_mode, en_file, en_order, en_monoid, en_size, en_act, en_subact,
                           en_extra);
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return (e.kind() == ErrorKind::TooLarge || e.kind() == ErrorKind::CapExceeded) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
