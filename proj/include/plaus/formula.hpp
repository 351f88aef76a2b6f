#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plaus/errors.hpp"

namespace plaus {

enum class FormulaKind {
  Pred,     // P(x1,...,xk)
  Equal,    // x = y
  Not,      // ~A
  And,      // A & B
  Or,       // A | B
  Implies,  // A -> B   (right-associative)
  Iff,      // A <-> B  (right-associative)
  Forall,   // forall x A
  Exists,   // exists x A
  Ubiq      // U x A
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST node of the first-order language with equality and the
/// ubiquity binder U. Terms are variables only; there are no function
/// symbols or constants.
class Formula {
 public:
  static FormulaPtr pred(std::string name, std::vector<std::string> args);
  static FormulaPtr equal(std::string lhs, std::string rhs);
  static FormulaPtr negation(FormulaPtr sub);
  static FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);
  static FormulaPtr ubiquity(std::string var, FormulaPtr body);

  FormulaKind kind() const { return kind_; }

  /// Predicate name (Pred) or bound variable (binders).
  const std::string& name() const { return name_; }
  /// Argument variables (Pred) or the two operands (Equal).
  const std::vector<std::string>& args() const { return args_; }

  const FormulaPtr& lhs() const { return lhs_; }  // unary/binder body too
  const FormulaPtr& rhs() const { return rhs_; }

  bool is_binder() const {
    return kind_ == FormulaKind::Forall || kind_ == FormulaKind::Exists ||
           kind_ == FormulaKind::Ubiq;
  }

  std::set<std::string> free_variables() const;
  bool is_sentence() const { return free_variables().empty(); }

 private:
  Formula(FormulaKind kind, std::string name, std::vector<std::string> args,
          FormulaPtr lhs, FormulaPtr rhs)
      : kind_(kind),
        name_(std::move(name)),
        args_(std::move(args)),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  FormulaKind kind_;
  std::string name_;
  std::vector<std::string> args_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
};

/// Structural equality of ASTs.
bool equal_ast(const FormulaPtr& a, const FormulaPtr& b);

/// Predicate name -> arity. Throws ValidationError when a predicate occurs
/// with two different arities.
using Signature = std::map<std::string, int>;
Signature infer_signature(const FormulaPtr& formula);

/// Parses the ASCII grammar
///   binders   `forall x`, `exists x`, `U x` (prefix, binding as tightly
///             as negation over the formula that follows)
///   operators `~`  >  `&`  >  `|`  >  `->` (right-assoc) > `<->` (right-assoc)
///   atoms     `P(x,y)`, `x = y`; parentheses for grouping
/// Throws ParseError with 1-based line/column and the expected-token set;
/// arity conflicts are also reported as positioned errors.
FormulaPtr parse_formula(std::string_view text);

/// Canonical printing; parse(print(f)) is structurally equal to f.
std::string print_formula(const FormulaPtr& formula);

}  // namespace plaus
