#include "plaus/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "plaus/serialize.hpp"

namespace plaus {

namespace {

struct Options {
  std::string format = "human";
  bool unsafe = false;

  bool jsonl() const { return format == "jsonl"; }
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "jsonl"}))
      ->capture_default_str();
  cmd->add_flag("--unsafe-size", opt.unsafe,
                "override size guards (prints the cost estimate first)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> atom_labels(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(std::string(1, 'a' + i));
  return out;
}

void emit(std::ostream& out, const Options& opt, const Json& line,
          const std::string& human) {
  if (opt.jsonl()) {
    out << line.dump() << "\n";
  } else {
    out << human << "\n";
  }
}

Json line_for(const std::string& command) {
  return Json{{"v", 1}, {"command", command}};
}

// ---- check ---------------------------------------------------------------

int cmd_check(const std::string& formula_arg, bool from_file, int max_domain,
              const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.unsafe) {
    FormulaPtr f = parse_formula(from_file ? read_file(formula_arg)
                                           : formula_arg);
    err << "cost estimate: ~"
        << estimate_structure_count(infer_signature(f), max_domain)
        << " structures\n";
  }
  FormulaPtr formula =
      parse_formula(from_file ? read_file(formula_arg) : formula_arg);
  Verdict verdict = check_validity(formula, max_domain, opt.unsafe);

  Json line = line_for("check");
  line.update(verdict_to_json(verdict));
  if (verdict.valid) {
    emit(out, opt, line,
         "formula: " + print_formula(formula) + "\nvalid up to bound " +
             std::to_string(max_domain));
    return 0;
  }
  emit(out, opt, line,
       "formula: " + print_formula(formula) +
           "\ninvalid: countermodel found\ncountermodel: " +
           structure_to_json(*verdict.countermodel).dump());
  return 1;
}

// ---- model ---------------------------------------------------------------

int cmd_model(const std::string& structure_path, const std::string& formula_arg,
              bool from_file, const Options& opt, std::ostream& out,
              std::ostream&) {
  Json j = Json::parse(read_file(structure_path));
  PTStructure structure = structure_from_json(j);
  FormulaPtr formula =
      parse_formula(from_file ? read_file(formula_arg) : formula_arg);
  const bool value = satisfies(structure, formula);

  Json line = line_for("model");
  line["formula"] = print_formula(formula);
  line["structure"] = structure_path;
  line["value"] = value;
  emit(out, opt, line, value ? "true" : "false");
  return value ? 0 : 1;
}

// ---- enumerate -----------------------------------------------------------

int cmd_enumerate(const std::string& kind, int size,
                  const std::string& quantifier, bool list, const Options& opt,
                  std::ostream& out, std::ostream& err) {
  if (opt.unsafe && kind == "spaces") {
    err << "cost estimate: ~" << space_enumeration_cost(size)
        << " candidate families\n";
  }
  std::size_t count = 0;
  if (kind == "spaces") {
    auto spaces = enumerate_spaces(atom_labels(size), opt.unsafe);
    count = spaces.size();
    if (list) {
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        Json line = line_for("enumerate");
        line["kind"] = kind;
        line["index"] = i;
        line["item"] = space_to_json(spaces[i]);
        emit(out, opt, line, line["item"].dump());
      }
    }
  } else {
    auto algebra = BoolAlgebra::powerset(atom_labels(size));
    if (kind == "quantifiers") {
      auto quantifiers = enumerate_quantifiers(algebra, opt.unsafe);
      count = quantifiers.size();
      if (list) {
        for (std::size_t i = 0; i < quantifiers.size(); ++i) {
          Json line = line_for("enumerate");
          line["kind"] = kind;
          line["index"] = i;
          line["item"] = quantifier_to_json(quantifiers[i]);
          emit(out, opt, line, line["item"].dump());
        }
      }
    } else {  // upsilons
      MonadicAlgebra base{quantifier == "identity"
                              ? Quantifier::identity(algebra)
                              : Quantifier::simple(algebra)};
      auto upsilons = enumerate_upsilons(base, opt.unsafe);
      count = upsilons.size();
      if (list) {
        for (std::size_t i = 0; i < upsilons.size(); ++i) {
          Json line = line_for("enumerate");
          line["kind"] = kind;
          line["index"] = i;
          line["item"] = upsilon_table_to_json(upsilons[i]);
          emit(out, opt, line, line["item"].dump());
        }
      }
    }
  }
  Json line = line_for("enumerate");
  line["kind"] = kind;
  line["size"] = size;
  if (kind == "upsilons") line["quantifier"] = quantifier;
  line["count"] = count;
  emit(out, opt, line,
       kind + " at size " + std::to_string(size) + ": " +
           std::to_string(count));
  return 0;
}

// ---- laws ----------------------------------------------------------------

int emit_funcalg_laws(int size, int domain_size, const Options& opt,
                      std::ostream& out) {
  auto algebra = BoolAlgebra::powerset(atom_labels(size));
  std::vector<std::string> domain;
  for (int i = 1; i <= domain_size; ++i) domain.push_back("x" + std::to_string(i));
  QPropertyReport report = check_q_properties(algebra, domain, opt.unsafe);

  for (const auto& law : report.laws) {
    Json line = line_for("laws");
    line["suite"] = "funcalg";
    line["law"] = law.law;
    line["holds"] = law.holds;
    line["expected"] = law.expect_hold;
    if (law.witness_p) line["witness_p"] = prop_function_to_json(*law.witness_p);
    if (law.witness_q) line["witness_q"] = prop_function_to_json(*law.witness_q);
    std::string human = law.law + ": " + (law.holds ? "holds" : "fails") +
                        (law.as_expected() ? " (expected)" : " (UNEXPECTED)");
    if (law.witness_p) human += "  witness p = " + law.witness_p->to_string();
    if (law.witness_q) human += ", q = " + law.witness_q->to_string();
    emit(out, opt, line, human);
  }
  Json summary = line_for("laws");
  summary["suite"] = "funcalg";
  summary["algebra"] = algebra_to_json(algebra);
  summary["domain"] = domain;
  summary["all_as_expected"] = report.all_as_expected();
  emit(out, opt, summary,
       report.all_as_expected() ? "all laws behaved as expected"
                                : "some laws deviated from expectation");
  return report.all_as_expected() ? 0 : 1;
}

int emit_monadic_laws(int size, const Options& opt, std::ostream& out) {
  auto algebra = BoolAlgebra::powerset(atom_labels(size));
  auto quantifiers = enumerate_quantifiers(algebra, opt.unsafe);
  bool all_ok = true;
  for (std::size_t i = 0; i < quantifiers.size(); ++i) {
    MonadicAlgebra m{quantifiers[i]};
    for (const auto& law : quantifier_law_suite(m)) {
      Json line = line_for("laws");
      line["suite"] = "monadic";
      line["quantifier"] = i;
      line["law"] = law.law;
      line["holds"] = law.holds;
      line["expected"] = true;
      if (law.witness_p) line["witness_p"] = elem_to_json(*law.witness_p);
      if (law.witness_q) line["witness_q"] = elem_to_json(*law.witness_q);
      all_ok = all_ok && law.holds;
      if (opt.jsonl() || !law.holds) {
        std::string human = "quantifier #" + std::to_string(i) + " " +
                            law.law + ": " +
                            (law.holds ? "holds" : "FAILS");
        emit(out, opt, line, human);
      }
    }
  }
  Json summary = line_for("laws");
  summary["suite"] = "monadic";
  summary["algebra"] = algebra_to_json(algebra);
  summary["quantifiers"] = quantifiers.size();
  summary["all_as_expected"] = all_ok;
  emit(out, opt, summary,
       "checked " + std::to_string(quantifiers.size()) + " quantifiers: " +
           (all_ok ? "all laws hold" : "violations found"));
  return all_ok ? 0 : 1;
}

int emit_ubiq_laws(int size, const Options& opt, std::ostream& out) {
  auto algebra = BoolAlgebra::powerset(atom_labels(size));
  auto quantifiers = enumerate_quantifiers(algebra, opt.unsafe);
  bool all_ok = true;
  std::size_t swept = 0;
  for (std::size_t i = 0; i < quantifiers.size(); ++i) {
    MonadicAlgebra base{quantifiers[i]};
    auto upsilons = enumerate_upsilons(base, opt.unsafe);
    swept += upsilons.size();
    for (std::size_t j = 0; j < upsilons.size(); ++j) {
      for (const auto& law : ubiq_law_suite(upsilons[j])) {
        all_ok = all_ok && law.holds;
        if (opt.jsonl() || !law.holds) {
          Json line = line_for("laws");
          line["suite"] = "ubiq";
          line["quantifier"] = i;
          line["upsilon"] = j;
          line["law"] = law.law;
          line["holds"] = law.holds;
          line["expected"] = true;
          if (law.witness_p) line["witness_p"] = elem_to_json(*law.witness_p);
          if (law.witness_q) line["witness_q"] = elem_to_json(*law.witness_q);
          emit(out, opt, line,
               "quantifier #" + std::to_string(i) + " upsilon #" +
                   std::to_string(j) + " " + law.law + ": " +
                   (law.holds ? "holds" : "FAILS"));
        }
      }
    }
  }
  Json summary = line_for("laws");
  summary["suite"] = "ubiq";
  summary["algebra"] = algebra_to_json(algebra);
  summary["algebras_swept"] = swept;
  summary["all_as_expected"] = all_ok;
  emit(out, opt, summary,
       "checked " + std::to_string(swept) + " ubiquity algebras: " +
           (all_ok ? "all laws hold" : "violations found"));
  return all_ok ? 0 : 1;
}

// ---- quotient-check --------------------------------------------------------

int cmd_quotient_check(int size, const Options& opt, std::ostream& out) {
  std::size_t pairs = 0, descended = 0;
  bool disjunction_ok = true;
  for (int atoms = 1; atoms <= size; ++atoms) {
    auto algebra = BoolAlgebra::powerset(atom_labels(atoms));
    auto quantifiers = enumerate_quantifiers(algebra, opt.unsafe);
    for (std::size_t qi = 0; qi < quantifiers.size(); ++qi) {
      MonadicAlgebra base{quantifiers[qi]};
      auto upsilons = enumerate_upsilons(base, opt.unsafe);
      for (std::size_t ui = 0; ui < upsilons.size(); ++ui) {
        const auto& u = upsilons[ui];
        const Mask full = algebra->full_mask();
        for (Mask p = 0; p <= full && disjunction_ok; ++p) {
          for (Mask q = 0; q <= full; ++q) {
            Mask lhs = u.upsilon_mask(p) | u.upsilon_mask(q);
            if ((lhs & u.upsilon_mask(p | q)) != lhs) {
              disjunction_ok = false;
              break;
            }
          }
        }
        for (const auto& ideal : enumerate_ubiquity_ideals(u, opt.unsafe)) {
          if (!ideal.is_proper()) continue;
          ++pairs;
          DescentVerdict verdict = quotient_descent_check(u, ideal);
          if (verdict.descends) ++descended;
          Json line = line_for("quotient-check");
          line["atoms"] = atoms;
          line["quantifier"] = qi;
          line["upsilon"] = ui;
          line["ideal"] = ideal_to_json(ideal);
          line["descends"] = verdict.descends;
          if (verdict.counterexample) {
            line["witness_p"] = elem_to_json(verdict.counterexample->first);
            line["witness_q"] = elem_to_json(verdict.counterexample->second);
          }
          if (opt.jsonl() || !verdict.descends) {
            emit(out, opt, line,
                 "atoms=" + std::to_string(atoms) +
                     " quantifier=" + std::to_string(qi) +
                     " upsilon=" + std::to_string(ui) + " ideal=" +
                     ideal_to_json(ideal).dump() + " -> " +
                     (verdict.descends ? "descends" : "DOES NOT DESCEND"));
          }
        }
      }
    }
  }
  Json summary = line_for("quotient-check");
  summary["pairs"] = pairs;
  summary["descended"] = descended;
  summary["disjunction_law_holds"] = disjunction_ok;
  emit(out, opt, summary,
       "audited " + std::to_string(pairs) + " (algebra, ideal) pairs: " +
           std::to_string(descended) + " descend; disjunction law " +
           (disjunction_ok ? "holds" : "FAILS"));
  return disjunction_ok ? 0 : 1;
}

// ---- axioms -----------------------------------------------------------------

int cmd_axioms(int max_domain, const Options& opt, std::ostream& out,
               std::ostream& err) {
  if (opt.unsafe) {
    err << "cost estimate: ~"
        << estimate_structure_count({{"P", 1}, {"Q", 1}}, max_domain)
        << " structures\n";
  }
  bool all_valid = true;
  for (const auto& result : axiom_suite(max_domain, opt.unsafe)) {
    Json line = line_for("axioms");
    line["name"] = result.name;
    line.update(verdict_to_json(result.verdict));
    all_valid = all_valid && result.verdict.valid;
    emit(out, opt, line,
         result.name + ": " +
             (result.verdict.valid
                  ? "valid up to bound " + std::to_string(max_domain)
                  : "INVALID, countermodel " +
                        structure_to_json(*result.verdict.countermodel)
                            .dump()));
  }
  Json summary = line_for("axioms");
  summary["max_domain"] = max_domain;
  summary["all_valid"] = all_valid;
  emit(out, opt, summary,
       all_valid ? "all axiom schemas valid up to bound " +
                       std::to_string(max_domain)
                 : "some axiom schema failed");
  return all_valid ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite-model checker and algebraic toolkit for the logic of "
               "the plausible (first-order logic with the ubiquity "
               "quantifier U)",
               "plaus"};
  app.require_subcommand(1);

  // check
  Options check_opt;
  std::string check_formula;
  bool check_file = false;
  int check_domain = 3;
  auto* check = app.add_subcommand("check", "bounded validity search");
  check->add_option("formula", check_formula, "formula text")->required();
  check->add_flag("--file", check_file, "treat the argument as a file path");
  check->add_option("--max-domain", check_domain, "largest domain size")
      ->capture_default_str();
  add_common(check, check_opt);

  // model
  Options model_opt;
  std::string model_structure, model_formula;
  bool model_file = false;
  auto* model = app.add_subcommand("model", "evaluate a formula in a structure");
  model->add_option("structure", model_structure, "structure json file")
      ->required();
  model->add_option("formula", model_formula, "formula text")->required();
  model->add_flag("--file", model_file, "treat the formula as a file path");
  add_common(model, model_opt);

  // enumerate
  Options enum_opt;
  std::string enum_kind, enum_quantifier = "simple";
  int enum_size = 2;
  bool enum_list = false;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumerations");
  enumerate->add_option("kind", enum_kind, "what to enumerate")
      ->required()
      ->check(CLI::IsMember({"spaces", "quantifiers", "upsilons"}));
  enumerate->add_option("--size", enum_size,
                        "carrier points (spaces) or atoms (algebras)")
      ->capture_default_str();
  enumerate->add_option("--quantifier", enum_quantifier,
                        "base quantifier for upsilons")
      ->check(CLI::IsMember({"simple", "identity"}))
      ->capture_default_str();
  enumerate->add_flag("--list", enum_list, "print every item");
  add_common(enumerate, enum_opt);

  // laws
  Options laws_opt;
  std::string laws_suite;
  int laws_size = 2, laws_domain = 2;
  auto* laws = app.add_subcommand("laws", "algebraic law suites");
  laws->add_option("--suite", laws_suite, "which suite")
      ->required()
      ->check(CLI::IsMember({"funcalg", "monadic", "ubiq"}));
  laws->add_option("--size", laws_size, "atom count of the algebra")
      ->capture_default_str();
  laws->add_option("--domain-size", laws_domain,
                   "domain size |X| for the funcalg suite")
      ->capture_default_str();
  add_common(laws, laws_opt);

  // quotient-check
  Options quot_opt;
  int quot_size = 3;
  auto* quot = app.add_subcommand(
      "quotient-check", "audit quotient descent of the ubiquity operator");
  quot->add_option("--size", quot_size, "largest atom count")
      ->capture_default_str();
  add_common(quot, quot_opt);

  // axioms
  Options ax_opt;
  int ax_domain = 3;
  auto* axioms = app.add_subcommand("axioms", "validity of the axiom schemas");
  axioms->add_option("--max-domain", ax_domain, "largest domain size")
      ->capture_default_str();
  add_common(axioms, ax_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      return cmd_check(check_formula, check_file, check_domain, check_opt, out,
                       err);
    }
    if (model->parsed()) {
      return cmd_model(model_structure, model_formula, model_file, model_opt,
                       out, err);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_kind, enum_size, enum_quantifier, enum_list,
                           enum_opt, out, err);
    }
    if (laws->parsed()) {
      if (laws_suite == "funcalg") {
        return emit_funcalg_laws(laws_size, laws_domain, laws_opt, out);
      }
      if (laws_suite == "monadic") {
        return emit_monadic_laws(laws_size, laws_opt, out);
      }
      return emit_ubiq_laws(laws_size, laws_opt, out);
    }
    if (quot->parsed()) return cmd_quotient_check(quot_size, quot_opt, out);
    if (axioms->parsed()) return cmd_axioms(ax_domain, ax_opt, out, err);
  } catch (const GuardError& e) {
    err << "size guard: " << e.what()
        << " (rerun with --unsafe-size to override)\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace plaus
