// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values are either hand-derived or frozen from
// the independent oracles exercised in the unit tests.
#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "plaus/cli.hpp"
#include "plaus/serialize.hpp"

using namespace plaus;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, 'a' + i));
  return out;
}

// --- 1. axiom validity over all structures of domain size <= 3 -------------

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  auto results = axiom_suite(3);
  ok = results.size() == 9;
  for (const auto& r : results) {
    if (!r.verdict.valid) {
      ok = false;
      detail = r.name + " has a countermodel";
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (elapsed >= 120) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + "s exceeds 2 minutes";
  }
  report(1, "axiom schemas valid up to domain size 3", ok, detail);
}

// --- 2. control countermodels, byte-identical across runs ------------------

void criterion_2() {
  bool ok = true;
  std::string detail;
  for (const char* text :
       {"U x P(x) -> forall x P(x)", "U x P(x) -> U x Q(x)"}) {
    std::string first, second;
    for (std::string* slot : {&first, &second}) {
      Verdict v = check_validity(parse_formula(text), 2);
      if (v.valid || !v.countermodel ||
          v.countermodel->domain_size() > 2 ||
          satisfies(*v.countermodel, v.formula, v.assignment)) {
        ok = false;
        detail = std::string("bad verdict for ") + text;
        break;
      }
      *slot = verdict_to_json(v).dump();
    }
    if (first != second || first.empty()) {
      ok = false;
      detail = std::string("non-reproducible countermodel for ") + text;
    }
  }
  report(2, "control non-theorems yield reproducible countermodels", ok,
         detail);
}

// --- 3. pseudo-topology counts ----------------------------------------------

void criterion_3() {
  const std::size_t expected[] = {1, 3, 16, 145};  // |E| = 1..4; the first
  // two are hand-derived, the last two recorded from the brute-force oracle
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4; ++n) {
    const std::size_t count = enumerate_spaces(letters(n)).size();
    const std::size_t again = enumerate_spaces(letters(n)).size();
    if (count != expected[n - 1] || again != count) {
      ok = false;
      detail = "|E|=" + std::to_string(n) + " gave " + std::to_string(count);
    }
  }
  report(3, "space counts are 1, 3, 16, 145 and stable", ok, detail);
}

// --- 4. interior laws --------------------------------------------------------

void criterion_4() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4 && ok; ++n) {
    for (const auto& space : enumerate_spaces(letters(n))) {
      const Mask full = space.full_mask();
      for (Mask A = 0; A <= full && ok; ++A) {
        const Mask iA = space.interior(A);
        for (Mask B = 0; B <= full; ++B) {
          const Mask iB = space.interior(B);
          const bool monotone = (A & B) != A || (iA & iB) == iA;
          const bool union_form = (iA & space.interior(A | B)) == iA;
          const bool meet_law =
              ((iA & iB) & space.interior(A & B)) == (iA & iB);
          if (!monotone || !union_form || !meet_law) {
            ok = false;
            detail = "violation at |E|=" + std::to_string(n);
            break;
          }
        }
      }
    }
  }
  report(4, "interior monotonicity, union form and meet law (|E| <= 4)", ok,
         detail);
}

// --- 5. functional-algebra laws ----------------------------------------------

void criterion_5() {
  auto algebra = BoolAlgebra::powerset({"a", "b"});
  auto rep = check_q_properties(algebra, {"x1", "x2"});
  bool ok = rep.all_as_expected();
  std::string detail;
  for (const char* name : {"P1", "P2", "P3", "P4", "P5", "P7", "P6|A0",
                           "P8|A0"}) {
    if (!rep.law(name).holds) {
      ok = false;
      detail = std::string(name) + " does not hold";
    }
  }
  for (const char* name : {"P6", "P8"}) {
    const auto& law = rep.law(name);
    if (law.holds || !law.witness_p.has_value()) {
      ok = false;
      detail = std::string(name) + " missing its counterexample";
    }
  }
  // the recorded counterexamples refute the unrestricted laws
  if (ok) {
    const PropFunction& p6 = *rep.law("P6").witness_p;
    ok = ok && q_operator(pointwise_complement(p6)) !=
                   pointwise_complement(q_operator(p6));
    const PropFunction& p8p = *rep.law("P8").witness_p;
    const PropFunction& p8q = *rep.law("P8").witness_q;
    ok = ok && q_operator(pointwise_meet(p8p, p8q)) !=
                   pointwise_meet(q_operator(p8p), p8q);
    if (!ok) detail = "a recorded counterexample fails to refute";
  }
  report(5, "Q-operator laws on P({a,b})^X with |X| = 2", ok, detail);
}

// --- 6. quantifier laws -------------------------------------------------------

void criterion_6() {
  bool ok = true;
  std::string detail;
  std::size_t tables = 0;
  for (int atoms = 1; atoms <= 4; ++atoms) {
    auto algebra = BoolAlgebra::powerset(letters(atoms));
    for (const auto& q : enumerate_quantifiers(algebra)) {
      if (check_quantifier_table(algebra, q.table())) {
        ok = false;
        detail = "enumerated table rejected by the law checker";
      }
      ++tables;
      MonadicAlgebra m{q};
      for (const auto& law : quantifier_law_suite(m)) {
        if (!law.holds) {
          ok = false;
          detail = law.law + " fails on " + std::to_string(atoms) + " atoms";
        }
      }
    }
  }
  if (tables != 1 + 2 + 5 + 15) {
    ok = false;
    detail = "unexpected quantifier count " + std::to_string(tables);
  }
  report(6, "derived quantifier laws on every algebra with <= 16 elements",
         ok, detail);
}

// --- 7. monadic semisimplicity -----------------------------------------------

void criterion_7() {
  bool ok = true;
  std::string detail;
  for (int atoms = 1; atoms <= 4; ++atoms) {
    auto algebra = BoolAlgebra::powerset(letters(atoms));
    for (const auto& q : enumerate_quantifiers(algebra)) {
      MonadicAlgebra m{q};
      auto cert = is_semisimple(m);
      if (!cert.semisimple ||
          cert.witnesses.size() != algebra->size() - 1) {
        ok = false;
        detail = "not semisimple on " + std::to_string(atoms) + " atoms";
        continue;
      }
      // the certificate revalidates
      for (const auto& [element, ideal] : cert.witnesses) {
        if (ideal.contains(element.mask()) ||
            !is_monadic_ideal(m, ideal) ||
            !is_maximal_monadic_ideal(m, ideal)) {
          ok = false;
          detail = "certificate fails to revalidate";
        }
      }
    }
  }
  report(7, "every monadic algebra with <= 16 elements is semisimple", ok,
         detail);
}

// --- 8. ubiquity operator laws -------------------------------------------------

void criterion_8() {
  bool ok = true;
  std::string detail;
  std::size_t accepted = 0;
  for (int atoms = 2; atoms <= 3; ++atoms) {
    auto algebra = BoolAlgebra::powerset(letters(atoms));
    for (const bool simple : {true, false}) {
      MonadicAlgebra base{simple ? Quantifier::simple(algebra)
                                 : Quantifier::identity(algebra)};
      for (const auto& u : enumerate_upsilons(base)) {
        ++accepted;
        for (const auto& law : ubiq_law_suite(u)) {
          if (!law.holds) {
            ok = false;
            detail = law.law + " fails";
          }
        }
      }
    }
  }
  if (accepted != 9 + 1 + 343 + 1) {
    ok = false;
    detail = "unexpected operator count " + std::to_string(accepted);
  }
  report(8,
         "upsilon law suite on P({a,b}) and P({a,b,c}), simple and identity",
         ok, detail);
}

// --- 9. the topological bridge --------------------------------------------------

void criterion_9() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4 && ok; ++n) {
    for (const auto& space : enumerate_spaces(letters(n))) {
      UbiquityAlgebra u = upsilon_from_space(space);  // validate runs inside
      if (check_upsilon_table(u.base(), u.upsilon_table())) {
        ok = false;
        detail = "interior table rejected";
        break;
      }
      const Mask full = u.algebra()->full_mask();
      for (Mask p = 0; p <= full; ++p) {
        const Mask up = u.upsilon_mask(p);
        if ((up & p) != up || u.upsilon_mask(up) != up) {
          ok = false;
          detail = "contraction or idempotence fails at |E|=" +
                   std::to_string(n);
          break;
        }
      }
    }
  }
  report(9, "interior operators validate and are contractive idempotent", ok,
         detail);
}

// --- 10. upsilon count on P({a,b}) ----------------------------------------------

void criterion_10() {
  auto algebra = BoolAlgebra::powerset({"a", "b"});
  MonadicAlgebra simple{Quantifier::simple(algebra)};
  const auto enumerated = enumerate_upsilons(simple);

  // independent brute-force oracle over all 4^4 tables
  std::size_t oracle = 0;
  for (Mask t0 = 0; t0 < 4; ++t0) {
    for (Mask t1 = 0; t1 < 4; ++t1) {
      for (Mask t2 = 0; t2 < 4; ++t2) {
        for (Mask t3 = 0; t3 < 4; ++t3) {
          if (!check_upsilon_table(simple, {t0, t1, t2, t3})) ++oracle;
        }
      }
    }
  }
  // hand analysis: endpoints forced, (Υ{a}, Υ{b}) any pair with meet 0
  std::size_t hand = 0;
  for (Mask u1 = 0; u1 < 4; ++u1) {
    for (Mask u2 = 0; u2 < 4; ++u2) {
      if ((u1 & u2) == 0) ++hand;
    }
  }
  const bool ok = enumerated.size() == 9 && oracle == 9 && hand == 9;
  report(10, "9 ubiquity operators on P({a,b}) with the simple quantifier",
         ok,
         "enumerated " + std::to_string(enumerated.size()) + ", oracle " +
             std::to_string(oracle));
}

// --- 11. quotient audit ------------------------------------------------------------

void criterion_11() {
  bool ok = true;
  std::string detail;
  std::size_t pairs = 0, verdicts = 0;
  for (int atoms = 1; atoms <= 3; ++atoms) {
    auto algebra = BoolAlgebra::powerset(letters(atoms));
    const Mask full = algebra->full_mask();
    for (const auto& q : enumerate_quantifiers(algebra)) {
      MonadicAlgebra base{q};
      for (const auto& u : enumerate_upsilons(base)) {
        for (Mask p = 0; p <= full && ok; ++p) {
          for (Mask qq = 0; qq <= full; ++qq) {
            const Mask lhs = u.upsilon_mask(p) | u.upsilon_mask(qq);
            if ((lhs & u.upsilon_mask(p | qq)) != lhs) {
              ok = false;
              detail = "disjunction law fails";
              break;
            }
          }
        }
        for (const auto& ideal : enumerate_ubiquity_ideals(u)) {
          if (!ideal.is_proper()) continue;
          ++pairs;
          DescentVerdict verdict = quotient_descent_check(u, ideal);
          ++verdicts;
          if (verdict.descends == verdict.counterexample.has_value()) {
            ok = false;
            detail = "verdict without evidence";
          }
        }
      }
    }
  }
  if (pairs != 444 || verdicts != pairs) {
    ok = false;
    detail = "audited " + std::to_string(verdicts) + "/" +
             std::to_string(pairs) + " pairs";
  }
  report(11, "quotient audit terminates with a verdict on all 444 pairs", ok,
         detail.empty() ? std::to_string(verdicts) + " verdicts" : detail);
}

// --- 12. parser round trip -----------------------------------------------------------

void criterion_12() {
  bool ok = true;
  std::string detail;

  std::vector<std::string> corpus;
  for (const auto& [name, text] : axiom_schemas()) corpus.push_back(text);
  const std::vector<std::string> extra = {
      "P(x)", "R(x,y)", "S(x,y,z)", "x = y", "x = x",
      "~P(x)", "~~P(x)", "~(P(x) & Q(x))", "~ U x P(x)", "U x ~P(x)",
      "U x P(x) & Q(y)", "forall x P(x) | exists y Q(y)",
      "exists x (P(x) & Q(x))", "forall x (P(x) -> Q(x))",
      "U x (P(x) -> Q(x))", "forall x exists y R(x,y)",
      "exists y forall x R(x,y)", "U x U y R(x,y)",
      "forall x forall y (R(x,y) -> R(y,x))",
      "U x exists y (R(x,y) & ~ x = y)",
      "P(x) & Q(x) & R(x,y)", "P(x) | Q(x) | R(x,y)",
      "P(x) & Q(x) | R(x,y)", "P(x) | Q(x) & R(x,y)",
      "P(x) -> Q(x) -> R(x,y)", "(P(x) -> Q(x)) -> R(x,y)",
      "P(x) <-> Q(x) <-> R(x,y)", "(P(x) <-> Q(x)) <-> R(x,y)",
      "P(x) & (Q(x) | R(x,y))", "(P(x) | Q(x)) & R(x,y)",
      "P(x) -> Q(x) & R(x,y)", "(P(x) -> Q(x)) & R(x,y)",
      "~P(x) & ~Q(x)", "~(P(x) -> Q(x))",
      "P(x) & Q(x) -> P(x) | Q(x)", "P(x) <-> Q(x) -> R(x,y)",
      "forall x forall y (x = y -> (P(x) <-> P(y)))",
      "exists x exists y ~ x = y", "U x x = y",
      "forall x (x = y | ~ x = y)",
      "U x (P(x) & Q(x)) -> (U x P(x) & U x Q(x))",
      "(forall x P(x) & forall x Q(x)) <-> forall x (P(x) & Q(x))",
      "exists x (P(x) -> forall y P(y))",
      "U x P(x) | U x ~P(x) | ~ U x (P(x) | ~P(x))",
      "forall x (P(x) -> exists y (R(x,y) & Q(y)))",
      "~ U x ~ U y R(x,y)"};
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  if (corpus.size() < 50) {
    ok = false;
    detail = "corpus has only " + std::to_string(corpus.size());
  }
  for (const auto& text : corpus) {
    try {
      FormulaPtr f = parse_formula(text);
      if (!equal_ast(f, parse_formula(print_formula(f)))) {
        ok = false;
        detail = "round trip differs for: " + text;
      }
    } catch (const Error& e) {
      ok = false;
      detail = "parse failed for: " + text;
    }
  }

  const std::vector<std::string> malformed = {
      "U x P(x", "P(x))", "P()", "U P(x)", "P(x) &", "-> P(x)",
      "P(x) <- Q(x)", "x == y", "forall (P(x))", "P(x) & Q(x) R(x,y)"};
  for (const auto& text : malformed) {
    try {
      parse_formula(text);
      ok = false;
      detail = "malformed input accepted: " + text;
    } catch (const ParseError& e) {
      if (e.line() < 1 || e.column() < 1) {
        ok = false;
        detail = "unpositioned error for: " + text;
      }
    } catch (const Error&) {
      ok = false;
      detail = "wrong error type for: " + text;
    }
  }
  report(12,
         "print-parse round trip on " + std::to_string(corpus.size()) +
             " formulas, 10 positioned rejections",
         ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::cout << "all 12 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
