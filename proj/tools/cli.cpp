// Copyright 2026 The hat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "hat/abstraction.hpp"
#include "hat/charform.hpp"
#include "hat/error.hpp"
#include "hat/fixtures.hpp"
#include "hat/parser.hpp"
#include "hat/random_formula.hpp"
#include "hat/semantics.hpp"
#include "hat/structure_io.hpp"
#include "hat/supervaluation.hpp"
#include "json.hpp"

namespace hat::cli {

namespace {

using nlohmann::json;

struct Config {
  std::vector<std::string> files;
  std::size_t bound = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string mode = "fo";
  std::string integrity;
  std::string nodeformulas;
  std::string out;
  std::string format = "text";
  std::string query;
  std::string query_text;
  std::string witness_dir;
  bool no_prune = false;
  bool omit_unary = false;
  std::string name;
  std::size_t size = 0;
  std::string pvar = "x,y,t,e";
  bool reduced = false;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
};

// Structure files that load but break an invariant.
class ValidationFailure : public Error {
 public:
  ValidationFailure(std::string message, std::vector<Violation> violations)
      : Error(std::move(message)), violations(std::move(violations)) {}
  std::vector<Violation> violations;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StructureFile load(const std::string& path) {
  auto file = read_structure_file(path);
  if (!file.violations.empty()) {
    throw ValidationFailure(path + ": invalid structure", file.violations);
  }
  return file;
}

std::vector<ThreeValuedStructure> load_abstract(
    const std::vector<std::string>& paths) {
  std::vector<ThreeValuedStructure> out;
  for (const auto& p : paths) {
    out.push_back(load(p).as_three_valued());
    if (!(out.back().vocabulary() == out.front().vocabulary())) {
      throw StructureError(p + ": vocabulary differs from " + paths.front());
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Formula load_integrity(const Config& cfg, const Vocabulary& voc) {
  if (cfg.integrity.empty()) return Formula::verum();
  Formula f = parse_formula(read_file(cfg.integrity), voc);
  if (!is_closed(f)) throw FormulaError("integrity formula must be closed");
  return f;
}

Formula load_query(const Config& cfg, const Vocabulary& voc) {
  ParseOptions po{true};
  if (!cfg.query_text.empty()) return parse_formula(cfg.query_text, voc, po);
  if (!cfg.query.empty()) return parse_formula(read_file(cfg.query), voc, po);
  throw FormulaError("a query is required (--query FILE or --query-text)");
}

CharacterizationMode load_mode(const Config& cfg) {
  auto m = parse_mode(cfg.mode);
  if (!m) throw FormulaError("unknown mode '" + cfg.mode + "'");
  return *m;
}

// Override lines apply to every structure that declares the node.
std::vector<std::optional<NodeFormulaMap>> load_overrides(
    const Config& cfg, const std::vector<ThreeValuedStructure>& xs) {
  std::vector<std::optional<NodeFormulaMap>> out(xs.size());
  if (cfg.nodeformulas.empty()) return out;
  auto lines = split(read_file(cfg.nodeformulas), '\n');
  std::vector<bool> used(lines.size(), false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::string mine;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      std::istringstream ls(lines[l].substr(0, lines[l].find('#')));
      std::string keyword, node;
      if (!(ls >> keyword)) continue;
      ls >> node;
      if (keyword == "nodeformula" && !xs[i].find_node(node)) continue;
      mine += lines[l] + "\n";
      used[l] = true;
    }
    if (!mine.empty()) out[i] = parse_node_formulas(mine, xs[i]);
  }
  for (std::size_t l = 0; l < lines.size(); ++l) {
    auto t = lines[l].substr(0, lines[l].find('#'));
    if (!used[l] && t.find_first_not_of(" \t\r") != std::string::npos) {
      throw StructureError(cfg.nodeformulas + ": no structure has the node in '" +
                           lines[l] + "'");
    }
  }
  return out;
}

// Writes to --out when given, else to `out`.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw StructureError("cannot write '" + cfg.out + "'");
  f << text;
}

std::string describe_map(const StructureBase& c, const StructureBase& a,
                         const std::vector<std::size_t>& image) {
  std::string s;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) s += ", ";
    s += c.node_name(i) + " -> " + a.node_name(image[i]);
  }
  return s;
}

int cmd_gamma_hat(const Config& cfg, std::ostream& out) {
  auto xs = load_abstract(cfg.files);
  Vocabulary voc = xs.empty() ? Vocabulary() : xs[0].vocabulary();
  Formula F = load_integrity(cfg, voc);
  CharFormulaOptions opts{cfg.omit_unary};
  Formula g = characterize(xs, F, load_mode(cfg), load_overrides(cfg, xs), opts);
  emit(cfg, out, print_formula(g) + "\n");
  return kOk;
}

json verdict_json(const BoundedVerdict& v) {
  json j;
  j["value"] = std::string(to_string(v.value));
  j["bound"] = v.bound;
  j["examined"] = v.examined;
  j["empty"] = v.empty;
  if (v.satisfying) j["satisfying"] = write_structure(*v.satisfying);
  if (v.refuting) j["refuting"] = write_structure(*v.refuting);
  if (v.value == TruthValue::Half) j["witnesses_in_gamma"] = v.witnesses_in_gamma;
  return j;
}

int cmd_supervaluate(const Config& cfg, std::ostream& out, bool invariant) {
  auto xs = load_abstract(cfg.files);
  Vocabulary voc = xs.empty() ? Vocabulary() : xs[0].vocabulary();
  Formula F = load_integrity(cfg, voc);
  Formula q = load_query(cfg, voc);
  SupervaluationOptions opts;
  opts.mode = load_mode(cfg);
  opts.node_formulas = load_overrides(cfg, xs);
  opts.budget = cfg.budget;
  opts.prune = !cfg.no_prune;
  auto v = invariant ? check_invariant(xs, q, F, cfg.bound, opts)
                     : supervaluate(q, xs, F, cfg.bound, opts);
  if (!cfg.witness_dir.empty() && v.value == TruthValue::Half) {
    std::filesystem::create_directories(cfg.witness_dir);
    std::ofstream(cfg.witness_dir + "/satisfying.struct")
        << write_structure(*v.satisfying);
    std::ofstream(cfg.witness_dir + "/refuting.struct")
        << write_structure(*v.refuting);
  }
  if (cfg.format == "json-report") {
    auto j = verdict_json(v);
    j["command"] = invariant ? "invariant" : "supervaluate";
    out << j.dump(2) << "\n";
  } else {
    if (invariant) {
      out << (v.value == TruthValue::True    ? "invariant holds"
              : v.value == TruthValue::False ? "invariant fails in every store"
                                             : "invariant varies")
          << "\n";
    }
    out << "value: " << v.value << "\n";
    out << "bound: " << v.bound << "\n";
    out << "examined: " << v.examined << "\n";
    if (v.empty) out << "gamma: empty up to bound " << v.bound << "\n";
    if (v.value == TruthValue::Half) {
      out << "witnesses in gamma: " << (v.witnesses_in_gamma ? "yes" : "no")
          << "\n";
      if (cfg.witness_dir.empty()) {
        out << "# satisfying witness\n" << write_structure(*v.satisfying);
        out << "# refuting witness\n" << write_structure(*v.refuting);
      } else {
        out << "witnesses written to " << cfg.witness_dir << "\n";
      }
    }
  }
  return v.value == TruthValue::Half ? kIndefinite : kOk;
}

int cmd_embed(const Config& cfg, std::ostream& out) {
  if (cfg.files.size() != 2) {
    throw StructureError("embed takes CONCRETE and ABSTRACT");
  }
  auto concrete = load(cfg.files[0]).as_two_valued();
  auto abstract = load(cfg.files[1]).as_three_valued();
  auto w = find_embedding(concrete, abstract, {cfg.budget});
  if (cfg.format == "json-report") {
    json j;
    if (w) {
      json m = json::object();
      for (std::size_t i = 0; i < w->image.size(); ++i) {
        m[concrete.node_name(i)] = abstract.node_name(w->image[i]);
      }
      j["embedding"] = m;
    } else {
      j["embedding"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << (w ? describe_map(concrete, abstract, w->image) : "none") << "\n";
  }
  return kOk;
}

int cmd_abstract(const Config& cfg, std::ostream& out) {
  if (cfg.files.size() != 1) throw StructureError("abstract takes one file");
  auto concrete = load(cfg.files[0]).as_two_valued();
  auto beta = canonical_abstraction(concrete);
  std::string text = write_structure(beta.structure);
  text += "# canonical names\n";
  for (std::size_t a = 0; a < beta.names.size(); ++a) {
    text += "# " + beta.structure.node_name(a) + " " +
            beta.names[a].to_string() + "\n";
  }
  text += "# map: " + describe_map(concrete, beta.structure, beta.map) + "\n";
  emit(cfg, out, text);
  return kOk;
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  if (cfg.files.size() != 1) throw StructureError("enumerate takes one file");
  auto abstract = load(cfg.files[0]).as_three_valued();
  Formula F = load_integrity(cfg, abstract.vocabulary());
  CompiledFormula cf(F, abstract.vocabulary());
  std::size_t bound = cfg.bound != 0
                          ? cfg.bound
                          : default_bound(std::span(&abstract, 1));
  std::ostringstream text;
  std::size_t members = 0;
  for_each_embedded_structure(
      abstract, bound,
      [&](const TwoValuedStructure& s, const EmbeddingWitness& w) {
        if (cf.evaluate(s) != TruthValue::True) return true;
        ++members;
        text << "# member " << members << ": "
             << describe_map(s, abstract, w.image) << "\n"
             << write_structure(s);
        return true;
      },
      cfg.budget);
  text << "# members: " << members << " (bound " << bound << ")\n";
  emit(cfg, out, text.str());
  return kOk;
}

int cmd_eval(const Config& cfg, std::ostream& out) {
  if (cfg.files.size() != 1) throw StructureError("eval takes one file");
  auto file = load(cfg.files[0]);
  const StructureBase& s =
      file.is_three_valued()
          ? static_cast<const StructureBase&>(
                std::get<ThreeValuedStructure>(file.structure))
          : std::get<TwoValuedStructure>(file.structure);
  Formula q = load_query(cfg, s.vocabulary());
  if (!is_closed(q)) throw FormulaError("query must be closed");
  TruthValue v = CompiledFormula(q, s.vocabulary()).evaluate(s);
  if (cfg.format == "json-report") {
    out << json{{"value", std::string(to_string(v))}}.dump(2) << "\n";
  } else {
    out << v << "\n";
  }
  return kOk;
}

int cmd_validate(const Config& cfg, std::ostream& out) {
  bool bad = false;
  json report = json::object();
  for (const auto& path : cfg.files) {
    auto file = read_structure_file(path);
    json list = json::array();
    for (const auto& v : file.violations) list.push_back(v.to_string());
    report[path] = list;
    if (cfg.format != "json-report") {
      if (file.violations.empty()) out << path << ": ok\n";
      for (const auto& v : file.violations) out << path << ": " << v << "\n";
    }
    bad = bad || !file.violations.empty();
  }
  if (cfg.format == "json-report") out << report.dump(2) << "\n";
  return bad ? kInvalid : kOk;
}

int cmd_fixture(const Config& cfg, std::ostream& out) {
  if (cfg.name == "list") {
    std::string text;
    for (const auto& n : fixtures::fixture_names()) text += n + "\n";
    emit(cfg, out, text);
    return kOk;
  }
  auto f = fixtures::build(cfg.name, cfg.size);
  std::visit([&](const auto& s) { emit(cfg, out, write_structure(s)); }, f);
  return kOk;
}

int cmd_formula(const Config& cfg, std::ostream& out) {
  auto pvar = split(cfg.pvar, ',');
  Vocabulary voc = cfg.reduced ? fixtures::reduced_list_vocabulary()
                               : fixtures::list_vocabulary(pvar);
  if (cfg.reduced) pvar = {"x"};
  const std::string q = pvar.empty() ? "x" : pvar.front();
  std::optional<Formula> f;
  if (cfg.name == "flist") f = build_F_list(voc, pvar);
  if (cfg.name == "acyclic") f = build_listx_queries(voc, q).acyclic;
  if (cfg.name == "unshared") f = build_listx_queries(voc, q).unshared;
  if (cfg.name == "listx") f = build_listx_queries(voc, q).list;
  if (cfg.name == "next") f = query_next_not_null(voc, q);
  if (cfg.name == "last") f = query_has_last(voc);
  if (!f) {
    throw FormulaError("unknown formula '" + cfg.name +
                       "' (flist, acyclic, unshared, listx, next, last)");
  }
  emit(cfg, out, print_formula(*f) + "\n");
  return kOk;
}

int cmd_selfcheck(const Config& cfg, std::ostream& out) {
  auto voc = fixtures::list_vocabulary({"x", "y"});
  RandomFormulaOptions opts;
  opts.allow_sets = true;
  RandomFormulaGenerator gen(voc, cfg.seed, opts);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Formula f = gen.next();
    std::string text = print_formula(f);
    Formula back = parse_formula(text, voc, {true});
    if (!(back == f)) {
      out << "round-trip failed: " << text << "\n";
      return kInvalid;
    }
  }
  out << "round-trip: " << cfg.count << " formulas ok (seed " << cfg.seed
      << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Characteristic formulas and supervaluation for 3-valued heap "
               "abstractions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hat 0.1.0");

  auto files = [&](CLI::App* sub, const char* what) {
    sub->add_option("files", cfg.files, what)->required();
  };
  auto bound = [&](CLI::App* sub) {
    sub->add_option("--bound", cfg.bound, "Maximum universe size")
        ->envname("HAT_BOUND")
        ->check(CLI::PositiveNumber);
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Maximum structures examined")
        ->envname("HAT_BUDGET");
  };
  auto mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "fo | canonical | np")
        ->envname("HAT_MODE")
        ->check(CLI::IsMember({"fo", "canonical", "np"}));
  };
  auto integrity = [&](CLI::App* sub) {
    sub->add_option("--integrity", cfg.integrity, "Integrity formula file")
        ->envname("HAT_INTEGRITY");
  };
  auto nodeformulas = [&](CLI::App* sub) {
    sub->add_option("--nodeformulas", cfg.nodeformulas,
                    "Node formula override file")
        ->envname("HAT_NODEFORMULAS");
  };
  auto outfile = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file")->envname("HAT_OUT");
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text | json-report")
        ->envname("HAT_FORMAT")
        ->check(CLI::IsMember({"text", "json-report"}));
  };
  auto query = [&](CLI::App* sub) {
    sub->add_option("--query", cfg.query, "Query formula file")
        ->envname("HAT_QUERY");
    sub->add_option("--query-text", cfg.query_text, "Query formula");
  };

  std::function<int()> action;

  auto* gh = app.add_subcommand("gamma-hat", "Print the characteristic formula");
  files(gh, "3-valued structure files");
  integrity(gh);
  mode(gh);
  nodeformulas(gh);
  outfile(gh);
  gh->add_flag("--omit-unary", cfg.omit_unary,
               "Drop the unary predicate blocks");
  gh->callback([&] { action = [&] { return cmd_gamma_hat(cfg, out); }; });

  for (bool inv : {false, true}) {
    auto* sv = app.add_subcommand(
        inv ? "invariant" : "supervaluate",
        inv ? "Check a loop invariant over the loop-head structures"
            : "Supervaluational value of a query");
    files(sv, "3-valued structure files");
    integrity(sv);
    query(sv);
    bound(sv);
    budget(sv);
    mode(sv);
    nodeformulas(sv);
    format(sv);
    sv->add_option("--witness-dir", cfg.witness_dir,
                   "Write 1/2 witnesses here");
    sv->add_flag("--no-prune", cfg.no_prune, "Scan the full space");
    sv->callback([&, inv] {
      action = [&, inv] { return cmd_supervaluate(cfg, out, inv); };
    });
  }

  auto* em = app.add_subcommand("embed", "Find an embedding");
  files(em, "CONCRETE ABSTRACT");
  budget(em);
  format(em);
  em->callback([&] { action = [&] { return cmd_embed(cfg, out); }; });

  auto* ab = app.add_subcommand("abstract", "Canonical abstraction");
  files(ab, "2-valued structure file");
  outfile(ab);
  ab->callback([&] { action = [&] { return cmd_abstract(cfg, out); }; });

  auto* en = app.add_subcommand("enumerate", "List members of the concretization");
  files(en, "3-valued structure file");
  integrity(en);
  bound(en);
  budget(en);
  outfile(en);
  en->callback([&] { action = [&] { return cmd_enumerate(cfg, out); }; });

  auto* ev = app.add_subcommand("eval", "Evaluate a closed formula");
  files(ev, "structure file");
  query(ev);
  format(ev);
  ev->callback([&] { action = [&] { return cmd_eval(cfg, out); }; });

  auto* va = app.add_subcommand("validate", "Check structure files");
  files(va, "structure files");
  format(va);
  va->callback([&] { action = [&] { return cmd_validate(cfg, out); }; });

  auto* fx = app.add_subcommand("fixture", "Write a built-in structure");
  fx->add_option("name", cfg.name, "Fixture id, or 'list'")->required();
  fx->add_option("--size", cfg.size, "Size for chains, cycles, cliques");
  outfile(fx);
  fx->callback([&] { action = [&] { return cmd_fixture(cfg, out); }; });

  auto* fo = app.add_subcommand("formula", "Print a built-in list formula");
  fo->add_option("name", cfg.name, "flist | acyclic | unshared | listx | next | last")
      ->required();
  fo->add_option("--pvar", cfg.pvar, "Comma-separated program variables");
  fo->add_flag("--reduced", cfg.reduced, "Use the {eq, x, r_x, n} vocabulary");
  outfile(fo);
  fo->callback([&] { action = [&] { return cmd_formula(cfg, out); }; });

  auto* sc = app.add_subcommand("selfcheck", "Parse/print round-trip check");
  sc->add_option("--seed", cfg.seed, "Random seed")->envname("HAT_SEED");
  sc->add_option("--count", cfg.count, "Number of formulas");
  sc->callback([&] { action = [&] { return cmd_selfcheck(cfg, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return action();
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& v : e.violations) err << "  " << v << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (predicted " << e.predicted()
        << ", examined " << e.examined() << ", budget " << e.budget() << ")\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace hat::cli
