#include "plaus/formula.hpp"

#include <algorithm>

namespace plaus {

namespace {

void check_var(const std::string& var) {
  if (var.empty()) throw ValidationError("variable name must be nonempty");
}

}  // namespace

FormulaPtr Formula::pred(std::string name, std::vector<std::string> args) {
  if (name.empty()) throw ValidationError("predicate name must be nonempty");
  if (args.empty()) {
    throw ValidationError("predicate '" + name + "' needs at least one argument");
  }
  for (const auto& a : args) check_var(a);
  return FormulaPtr(new Formula(FormulaKind::Pred, std::move(name),
                                std::move(args), nullptr, nullptr));
}

FormulaPtr Formula::equal(std::string lhs, std::string rhs) {
  check_var(lhs);
  check_var(rhs);
  return FormulaPtr(new Formula(FormulaKind::Equal, "",
                                {std::move(lhs), std::move(rhs)}, nullptr,
                                nullptr));
}

FormulaPtr Formula::negation(FormulaPtr sub) {
  if (!sub) throw ValidationError("negation of a null formula");
  return FormulaPtr(
      new Formula(FormulaKind::Not, "", {}, std::move(sub), nullptr));
}

namespace {
void check_binary(const FormulaPtr& lhs, const FormulaPtr& rhs) {
  if (!lhs || !rhs) throw ValidationError("binary connective on null formula");
}
void check_binder(const std::string& var, const FormulaPtr& body) {
  check_var(var);
  if (!body) throw ValidationError("binder over a null formula");
}
}  // namespace

FormulaPtr Formula::conjunction(FormulaPtr lhs, FormulaPtr rhs) {
  check_binary(lhs, rhs);
  return FormulaPtr(
      new Formula(FormulaKind::And, "", {}, std::move(lhs), std::move(rhs)));
}
FormulaPtr Formula::disjunction(FormulaPtr lhs, FormulaPtr rhs) {
  check_binary(lhs, rhs);
  return FormulaPtr(
      new Formula(FormulaKind::Or, "", {}, std::move(lhs), std::move(rhs)));
}
FormulaPtr Formula::implies(FormulaPtr lhs, FormulaPtr rhs) {
  check_binary(lhs, rhs);
  return FormulaPtr(new Formula(FormulaKind::Implies, "", {}, std::move(lhs),
                                std::move(rhs)));
}
FormulaPtr Formula::iff(FormulaPtr lhs, FormulaPtr rhs) {
  check_binary(lhs, rhs);
  return FormulaPtr(
      new Formula(FormulaKind::Iff, "", {}, std::move(lhs), std::move(rhs)));
}
FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  check_binder(var, body);
  return FormulaPtr(new Formula(FormulaKind::Forall, std::move(var), {},
                                std::move(body), nullptr));
}
FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  check_binder(var, body);
  return FormulaPtr(new Formula(FormulaKind::Exists, std::move(var), {},
                                std::move(body), nullptr));
}
FormulaPtr Formula::ubiquity(std::string var, FormulaPtr body) {
  check_binder(var, body);
  return FormulaPtr(new Formula(FormulaKind::Ubiq, std::move(var), {},
                                std::move(body), nullptr));
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Pred:
    case FormulaKind::Equal:
      for (const auto& v : f.args()) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    case FormulaKind::Not:
      collect_free(*f.lhs(), bound, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_free(*f.lhs(), bound, out);
      collect_free(*f.rhs(), bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
    case FormulaKind::Ubiq: {
      const bool was_bound = bound.count(f.name()) > 0;
      bound.insert(f.name());
      collect_free(*f.lhs(), bound, out);
      if (!was_bound) bound.erase(f.name());
      return;
    }
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

bool equal_ast(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind() || a->name() != b->name() ||
      a->args() != b->args()) {
    return false;
  }
  return equal_ast(a->lhs(), b->lhs()) && equal_ast(a->rhs(), b->rhs());
}

namespace {

void collect_signature(const Formula& f, Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::Pred: {
      const int arity = static_cast<int>(f.args().size());
      auto [it, inserted] = sig.emplace(f.name(), arity);
      if (!inserted && it->second != arity) {
        throw ValidationError("predicate '" + f.name() +
                              "' used with arity " + std::to_string(arity) +
                              " but previously with arity " +
                              std::to_string(it->second));
      }
      return;
    }
    case FormulaKind::Equal:
      return;
    default:
      if (f.lhs()) collect_signature(*f.lhs(), sig);
      if (f.rhs()) collect_signature(*f.rhs(), sig);
  }
}

}  // namespace

Signature infer_signature(const FormulaPtr& formula) {
  if (!formula) throw ValidationError("null formula");
  Signature sig;
  collect_signature(*formula, sig);
  return sig;
}

// ---------------------------------------------------------------------------
// printer

namespace {

// precedence: <-> 1, -> 2, | 3, & 4, unary/binders 5, atoms 6
int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
    case FormulaKind::Ubiq: return 5;
    case FormulaKind::Pred:
    case FormulaKind::Equal: return 6;
  }
  return 6;
}

void print_node(const Formula& f, std::string& out);

void print_child(const Formula& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += "(";
    print_node(child, out);
    out += ")";
  } else {
    print_node(child, out);
  }
}

void print_binary(const Formula& f, const char* op, int prec, bool right_assoc,
                  std::string& out) {
  // the associative side admits equal precedence unparenthesized
  print_child(*f.lhs(), right_assoc ? prec + 1 : prec, out);
  out += op;
  print_child(*f.rhs(), right_assoc ? prec : prec + 1, out);
}

void print_node(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Pred: {
      out += f.name() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ",";
        out += f.args()[i];
      }
      out += ")";
      return;
    }
    case FormulaKind::Equal:
      out += f.args()[0] + " = " + f.args()[1];
      return;
    case FormulaKind::Not:
      out += "~";
      print_child(*f.lhs(), 5, out);
      return;
    case FormulaKind::Forall:
      out += "forall " + f.name() + " ";
      print_child(*f.lhs(), 5, out);
      return;
    case FormulaKind::Exists:
      out += "exists " + f.name() + " ";
      print_child(*f.lhs(), 5, out);
      return;
    case FormulaKind::Ubiq:
      out += "U " + f.name() + " ";
      print_child(*f.lhs(), 5, out);
      return;
    case FormulaKind::And:
      print_binary(f, " & ", 4, false, out);
      return;
    case FormulaKind::Or:
      print_binary(f, " | ", 3, false, out);
      return;
    case FormulaKind::Implies:
      print_binary(f, " -> ", 2, true, out);
      return;
    case FormulaKind::Iff:
      print_binary(f, " <-> ", 1, true, out);
      return;
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& formula) {
  if (!formula) throw ValidationError("null formula");
  std::string out;
  print_node(*formula, out);
  return out;
}

}  // namespace plaus
