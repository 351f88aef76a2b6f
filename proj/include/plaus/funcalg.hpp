#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plaus/boolalg.hpp"

namespace plaus {

inline constexpr double kMaxFunctionSpace = 1e6;  // sweep guard on |B|^|X|

/// A propositional function: a total map from a finite domain X into a
/// Boolean algebra B. The set B^X of all such maps carries the pointwise
/// Boolean structure. In this finite setting every function is finitely
/// valued, so the "finitely valued" subalgebra is all of B^X and the
/// constant subalgebra survives as the is_constant predicate.
class PropFunction {
 public:
  PropFunction(std::vector<std::string> domain, BoolAlgebraPtr codomain,
               std::vector<Mask> values);

  static PropFunction constant(std::vector<std::string> domain,
                               const Elem& value);

  const std::vector<std::string>& domain() const { return domain_; }
  const BoolAlgebraPtr& codomain() const { return codomain_; }
  std::size_t domain_size() const { return domain_.size(); }

  Elem value(std::size_t i) const;             // value at the i-th point
  Elem value_at(const std::string& x) const;   // value at a named point
  const std::vector<Mask>& value_masks() const { return values_; }

  bool is_constant() const;
  std::string to_string() const;  // e.g. "[x1->{a}, x2->{b}]"

  friend bool operator==(const PropFunction& p, const PropFunction& q);
  friend bool operator!=(const PropFunction& p, const PropFunction& q) {
    return !(p == q);
  }

 private:
  std::vector<std::string> domain_;
  BoolAlgebraPtr codomain_;
  std::vector<Mask> values_;
};

enum class PointwiseOp { Meet, Join, Complement };

PropFunction pointwise_meet(const PropFunction& p, const PropFunction& q);
PropFunction pointwise_join(const PropFunction& p, const PropFunction& q);
PropFunction pointwise_complement(const PropFunction& p);
PropFunction pointwise(PointwiseOp op, const PropFunction& p,
                       const std::optional<PropFunction>& q);

bool pointwise_leq(const PropFunction& p, const PropFunction& q);

/// R(p): the distinct values the function attains, in mask order.
std::vector<Elem> range_of(const PropFunction& p);

Elem sup_range(const PropFunction& p);  // ∨R(p)
Elem inf_range(const PropFunction& p);  // ∧R(p)

/// Q: the constant function whose value is ∨R(p); always is_constant.
PropFunction q_operator(const PropFunction& p);

enum class QuantKind { Exists, Forall };

/// ∃p = constant ∨R(p); ∀p = constant ∧R(p).
PropFunction functional_quantifier(QuantKind kind, const PropFunction& p);

/// |B|^|X| as a double (guard arithmetic).
double function_space_size(const BoolAlgebraPtr& algebra,
                           std::size_t domain_size);

/// The k-th function of B^X in the sweep order: the table is read as a
/// |X|-digit number base |B|, the first domain point being the least
/// significant digit.
PropFunction function_at(const std::vector<std::string>& domain,
                         const BoolAlgebraPtr& algebra, std::uint64_t index);

struct FuncLawResult {
  std::string law;     // "P1" .. "P8", with "|A0" suffix for the
                       // constant-restricted readings of P6 and P8
  bool holds;
  bool expect_hold;    // the unrestricted P6/P8 are expected to fail
  std::optional<PropFunction> witness_p;
  std::optional<PropFunction> witness_q;

  bool as_expected() const { return holds == expect_hold; }
};

struct QPropertyReport {
  std::vector<std::string> domain;
  BoolAlgebraPtr algebra;
  std::vector<FuncLawResult> laws;

  bool all_as_expected() const;
  const FuncLawResult& law(const std::string& name) const;
};

/// Exhaustive sweep of the Q-operator laws over all of B^X:
///   P1 Q0 = 0; P2 p ≤ Qp; P3 Q(p∨q) = Qp ∨ Qq; P4 QQp = Qp;
///   P5 Q(Qp)′ = (Qp)′; P6 Q(p′) = (Qp)′; P7 Q(p ∧ Qq) = Qp ∧ Qq;
///   P8 Q(p∧q) = Qp ∧ q.
/// P6 and P8 are checked both unrestricted and restricted to constant
/// arguments; the unrestricted readings fail and the report carries the
/// first counterexample in sweep order. Guard: |B|^|X| ≤ 10^6.
QPropertyReport check_q_properties(const BoolAlgebraPtr& algebra,
                                   const std::vector<std::string>& domain,
                                   bool unsafe = false);

}  // namespace plaus
