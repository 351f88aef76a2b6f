#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "plaus/formula.hpp"

using namespace plaus;

namespace {

// 56 formulas covering the axiom schemas, every connective and binder,
// precedence corners, equality and multi-arity predicates
const std::vector<std::string> kCorpus = {
    // axiom and theorem schemas
    "(U x P(x) & U x Q(x)) -> U x (P(x) & Q(x))",
    "(U x P(x) & U x Q(x)) -> U x (P(x) | Q(x))",
    "forall x P(x) -> U x P(x)",
    "U x P(x) -> exists x P(x)",
    "(forall x (P(x) <-> Q(x))) -> (U x P(x) <-> U x Q(x))",
    "U x P(x) -> U y P(y)",
    "U x (P(x) | ~P(x))",
    "(U x P(x) & U x Q(x)) -> exists x (P(x) & Q(x))",
    "U x P(x) -> ~ U x ~P(x)",
    // plain atoms and equality
    "P(x)",
    "R(x,y)",
    "S(x,y,z)",
    "x = y",
    "x = x",
    // unary nesting
    "~P(x)",
    "~~P(x)",
    "~(P(x) & Q(x))",
    "~ U x P(x)",
    "U x ~P(x)",
    "forall x ~(P(x) | Q(x))",
    // binder scope is the tightest prefix
    "U x P(x) & Q(y)",
    "forall x P(x) | exists y Q(y)",
    "exists x (P(x) & Q(x))",
    "forall x (P(x) -> Q(x))",
    "U x (P(x) -> Q(x))",
    "forall x exists y R(x,y)",
    "exists y forall x R(x,y)",
    "U x U y R(x,y)",
    "forall x forall y (R(x,y) -> R(y,x))",
    "U x exists y (R(x,y) & ~ x = y)",
    // precedence and associativity
    "P(x) & Q(x) & R(x,y)",
    "P(x) | Q(x) | R(x,y)",
    "P(x) & Q(x) | R(x,y)",
    "P(x) | Q(x) & R(x,y)",
    "P(x) -> Q(x) -> R(x,y)",
    "(P(x) -> Q(x)) -> R(x,y)",
    "P(x) <-> Q(x) <-> R(x,y)",
    "(P(x) <-> Q(x)) <-> R(x,y)",
    "P(x) & (Q(x) | R(x,y))",
    "(P(x) | Q(x)) & R(x,y)",
    "P(x) -> Q(x) & R(x,y)",
    "(P(x) -> Q(x)) & R(x,y)",
    "~P(x) & ~Q(x)",
    "~(P(x) -> Q(x))",
    "P(x) & Q(x) -> P(x) | Q(x)",
    "P(x) <-> Q(x) -> R(x,y)",
    // equality mixed with connectives and binders
    "forall x forall y (x = y -> (P(x) <-> P(y)))",
    "exists x exists y ~ x = y",
    "U x x = y",
    "forall x (x = y | ~ x = y)",
    // longer combinations
    "U x (P(x) & Q(x)) -> (U x P(x) & U x Q(x))",
    "(forall x P(x) & forall x Q(x)) <-> forall x (P(x) & Q(x))",
    "exists x (P(x) -> forall y P(y))",
    "U x P(x) | U x ~P(x) | ~ U x (P(x) | ~P(x))",
    "forall x (P(x) -> exists y (R(x,y) & Q(y)))",
    "~ U x ~ U y R(x,y)",
};

const std::vector<std::string> kMalformed = {
    "U x P(x",                 // unbalanced paren
    "P(x))",                   // trailing paren
    "P()",                     // empty argument list
    "U P(x)",                  // missing bound variable
    "P(x) &",                  // dangling connective
    "-> P(x)",                 // leading connective
    "P(x) <- Q(x)",            // bad arrow
    "x == y",                  // bad equality
    "forall (P(x))",           // missing variable
    "P(x) & Q(x) R(x,y)",      // missing operator
};

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
  std::uniform_int_distribution<int> var_pick(0, 2);
  const std::vector<std::string> vars{"x", "y", "z"};
  const std::string v = vars[var_pick(rng)];
  const std::string w = vars[var_pick(rng)];
  switch (pick(rng)) {
    case 0: return Formula::pred("P", {v});
    case 1: return Formula::equal(v, w);
    case 2: return Formula::negation(random_formula(rng, depth - 1));
    case 3:
      return Formula::conjunction(random_formula(rng, depth - 1),
                                  random_formula(rng, depth - 1));
    case 4:
      return Formula::disjunction(random_formula(rng, depth - 1),
                                  random_formula(rng, depth - 1));
    case 5:
      return Formula::implies(random_formula(rng, depth - 1),
                              random_formula(rng, depth - 1));
    case 6:
      return Formula::iff(random_formula(rng, depth - 1),
                          random_formula(rng, depth - 1));
    case 7: return Formula::forall(v, random_formula(rng, depth - 1));
    case 8: return Formula::exists(v, random_formula(rng, depth - 1));
    default: return Formula::ubiquity(v, random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("grammar-forced shapes") {
  FormulaPtr f = parse_formula("U x P(x)");
  CHECK(f->kind() == FormulaKind::Ubiq);
  CHECK(f->name() == "x");
  CHECK(f->lhs()->kind() == FormulaKind::Pred);
  CHECK(f->lhs()->name() == "P");
  CHECK(f->lhs()->args() == std::vector<std::string>{"x"});

  FormulaPtr g = parse_formula("forall x (P(x) -> exists y Q(y))");
  CHECK(g->kind() == FormulaKind::Forall);
  CHECK(g->lhs()->kind() == FormulaKind::Implies);
  CHECK(g->lhs()->rhs()->kind() == FormulaKind::Exists);
  CHECK(g->lhs()->rhs()->name() == "y");

  // binders bind as tightly as negation
  FormulaPtr h = parse_formula("U x P(x) & Q(y)");
  CHECK(h->kind() == FormulaKind::And);
  CHECK(h->lhs()->kind() == FormulaKind::Ubiq);

  // -> is right-associative, & and | group to the left
  FormulaPtr i = parse_formula("P(x) -> Q(x) -> R(x,y)");
  CHECK(i->rhs()->kind() == FormulaKind::Implies);
  FormulaPtr j = parse_formula("P(x) & Q(x) & R(x,y)");
  CHECK(j->lhs()->kind() == FormulaKind::And);
}

TEST_CASE("free variables and sentences") {
  CHECK(parse_formula("U x P(x)")->is_sentence());
  CHECK(parse_formula("U x P(x) & Q(y)")->free_variables() ==
        std::set<std::string>{"y"});
  CHECK(parse_formula("forall x R(x,y)")->free_variables() ==
        std::set<std::string>{"y"});
  CHECK(parse_formula("forall x exists y R(x,y)")->is_sentence());
  CHECK(parse_formula("x = y")->free_variables() ==
        std::set<std::string>{"x", "y"});
  // rebinding the same variable
  CHECK(parse_formula("forall x (P(x) & exists x Q(x))")->is_sentence());
}

TEST_CASE("signature inference and arity conflicts") {
  Signature sig = infer_signature(parse_formula("P(x) & R(x,y)"));
  CHECK(sig == Signature{{"P", 1}, {"R", 2}});
  CHECK_THROWS_AS(parse_formula("P(x) & P(x,y)"), ParseError);
  CHECK_THROWS_AS(
      infer_signature(Formula::conjunction(Formula::pred("P", {"x"}),
                                           Formula::pred("P", {"x", "y"}))),
      ValidationError);
}

TEST_CASE("corpus round trip: print then parse is the identity") {
  CHECK(kCorpus.size() >= 50);
  for (const auto& text : kCorpus) {
    CAPTURE(text);
    FormulaPtr once = parse_formula(text);
    std::string printed = print_formula(once);
    FormulaPtr twice = parse_formula(printed);
    CHECK(equal_ast(once, twice));
    // printing is a fixed point after one round
    CHECK(print_formula(twice) == printed);
  }
}

TEST_CASE("random ast round trip") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = random_formula(rng, 4);
    FormulaPtr reparsed = parse_formula(print_formula(f));
    CHECK(equal_ast(f, reparsed));
  }
}

TEST_CASE("malformed inputs produce positioned syntax errors") {
  CHECK(kMalformed.size() >= 10);
  for (const auto& text : kMalformed) {
    CAPTURE(text);
    try {
      parse_formula(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
      CHECK(std::string(e.what()).find(":") != std::string::npos);
    }
  }
}

TEST_CASE("error positions point at the offending token") {
  try {
    parse_formula("U x P(x");
    FAIL_CHECK("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);  // end of input
    CHECK(std::string(e.what()).find("expected ')'") != std::string::npos);
  }
  try {
    parse_formula("P(x) &\n& Q(x)");
    FAIL_CHECK("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("keywords cannot name predicates or variables") {
  CHECK_THROWS_AS(parse_formula("forall forall P(x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("U(x)"), ParseError);
}

TEST_CASE("print uses minimal parentheses") {
  CHECK(print_formula(parse_formula("(P(x) & Q(x)) | R(x,y)")) ==
        "P(x) & Q(x) | R(x,y)");
  CHECK(print_formula(parse_formula("P(x) & (Q(x) | R(x,y))")) ==
        "P(x) & (Q(x) | R(x,y))");
  CHECK(print_formula(parse_formula("U x (P(x))")) == "U x P(x)");
  CHECK(print_formula(parse_formula("~(~P(x))")) == "~~P(x)");
}
