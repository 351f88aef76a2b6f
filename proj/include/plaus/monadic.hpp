#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plaus/boolalg.hpp"

namespace plaus {

inline constexpr std::size_t kMaxQuantifierCarrier = 16;  // 2^4

/// First violated quantifier law, for diagnostics.
struct QuantifierViolation {
  std::string law;  // "E1", "E2", "E3"
  Mask p = 0;
  Mask q = 0;  // meaningful for E3 only
  std::string describe(const BoolAlgebraPtr& algebra) const;
};

/// Returns the first violation of
///   E1  ∃0 = 0
///   E2  p ≤ ∃p
///   E3  ∃(p ∧ ∃q) = ∃p ∧ ∃q
/// or nothing when the table is a quantifier. Throws ValidationError on a
/// partial or out-of-range table.
std::optional<QuantifierViolation> check_quantifier_table(
    const BoolAlgebraPtr& algebra, const std::vector<Mask>& table);

/// An existential quantifier operator on a finite Boolean algebra: a
/// normalized, increasing, quasi-multiplicative self-map (E1–E3). Stored as
/// an explicit table indexed by element mask.
class Quantifier {
 public:
  /// Validates E1–E3; throws ValidationError describing the first violation.
  static Quantifier create(BoolAlgebraPtr algebra, std::vector<Mask> table);

  static Quantifier identity(BoolAlgebraPtr algebra);
  /// ∃0 = 0 and ∃p = 1 for p ≠ 0.
  static Quantifier simple(BoolAlgebraPtr algebra);

  const BoolAlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Mask>& table() const { return table_; }

  Mask apply_mask(Mask p) const { return table_[p]; }
  Elem apply(const Elem& p) const;

  bool is_simple() const;

  /// Image of the operator as a sorted mask list; always a Boolean
  /// subalgebra, and p is in it iff ∃p = p.
  std::vector<Mask> image() const;

  friend bool operator==(const Quantifier& a, const Quantifier& b) {
    return same_algebra(a.algebra_, b.algebra_) && a.table_ == b.table_;
  }
  friend bool operator!=(const Quantifier& a, const Quantifier& b) {
    return !(a == b);
  }

 private:
  Quantifier(BoolAlgebraPtr algebra, std::vector<Mask> table)
      : algebra_(std::move(algebra)), table_(std::move(table)) {}

  BoolAlgebraPtr algebra_;
  std::vector<Mask> table_;
};

/// All quantifiers on the algebra, by depth-first search over tables with
/// incremental E1–E3 checking; output is in lexicographic table order.
/// Guard: carrier ≤ 16 elements unless `unsafe`.
std::vector<Quantifier> enumerate_quantifiers(const BoolAlgebraPtr& algebra,
                                              bool unsafe = false);

/// True when the sorted mask set is a Boolean subalgebra (contains 0 and 1,
/// closed under meet, join and complement).
bool is_subalgebra(const BoolAlgebraPtr& algebra,
                   const std::vector<Mask>& members);

/// All Boolean subalgebras, as sorted mask lists in deterministic order.
/// In a finite algebra every subalgebra is relatively complete, so these are
/// exactly the images of quantifiers. Guard: carrier ≤ 16 unless `unsafe`.
std::vector<std::vector<Mask>> enumerate_subalgebras(
    const BoolAlgebraPtr& algebra, bool unsafe = false);

/// The unique quantifier whose image is the given relatively complete
/// subalgebra: ∃p = ∧{q in the subalgebra : p ≤ q}. Throws
/// PreconditionError when the set is not a subalgebra or some bound set
/// lacks a least element (naming the offending p).
Quantifier quantifier_from_subalgebra(const BoolAlgebraPtr& algebra,
                                      const std::vector<Mask>& members);

/// A monadic algebra: a finite Boolean algebra with a quantifier ∃.
/// The universal quantifier is derived, not stored: ∀p = (∃p′)′.
class MonadicAlgebra {
 public:
  explicit MonadicAlgebra(Quantifier exists) : exists_(std::move(exists)) {}

  const BoolAlgebraPtr& algebra() const { return exists_.algebra(); }
  const Quantifier& quantifier() const { return exists_; }

  Mask exists_mask(Mask p) const { return exists_.apply_mask(p); }
  Mask forall_mask(Mask p) const;
  Elem exists(const Elem& p) const;
  Elem forall(const Elem& p) const;

  friend bool operator==(const MonadicAlgebra& a, const MonadicAlgebra& b) {
    return a.exists_ == b.exists_;
  }
  friend bool operator!=(const MonadicAlgebra& a, const MonadicAlgebra& b) {
    return !(a == b);
  }

 private:
  Quantifier exists_;
};

/// A Boolean ideal: a set of elements containing 0, downward closed and
/// closed under join. Monadic/ubiquity closure are separate predicates.
class Ideal {
 public:
  /// Validates the Boolean ideal laws; throws PreconditionError otherwise.
  static Ideal boolean(BoolAlgebraPtr algebra, std::vector<Mask> members);

  /// The principal ideal of all elements below `top`.
  static Ideal principal(const Elem& top);

  const BoolAlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Mask>& members() const { return members_; }  // sorted
  bool contains(Mask m) const;
  bool is_proper() const;  // misses 1

  /// Join of all members; an ideal of a finite algebra is exactly the set
  /// of elements below its generator.
  Elem generator() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_algebra(a.algebra_, b.algebra_) && a.members_ == b.members_;
  }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

 private:
  Ideal(BoolAlgebraPtr algebra, std::vector<Mask> members)
      : algebra_(std::move(algebra)), members_(std::move(members)) {}

  BoolAlgebraPtr algebra_;
  std::vector<Mask> members_;
};

/// p ∈ I ⇒ ∃p ∈ I.
bool is_monadic_ideal(const MonadicAlgebra& m, const Ideal& ideal);

/// All Boolean ideals, by sweeping every subset of the carrier.
/// Guard: carrier ≤ 16 unless `unsafe`.
std::vector<Ideal> enumerate_boolean_ideals(const BoolAlgebraPtr& algebra,
                                            bool unsafe = false);
std::vector<Ideal> enumerate_monadic_ideals(const MonadicAlgebra& m,
                                            bool unsafe = false);

/// Maximality among proper ideals of the same kind, decided by exhaustive
/// superset search.
bool is_maximal_boolean_ideal(const Ideal& ideal);
bool is_maximal_monadic_ideal(const MonadicAlgebra& m, const Ideal& ideal);
std::vector<Ideal> maximal_monadic_ideals(const MonadicAlgebra& m,
                                          bool unsafe = false);

/// I* = {p : ∃p ∈ I} for a Boolean ideal I; always a monadic ideal contained
/// in I, and maximal monadic when I is maximal Boolean.
Ideal istar(const MonadicAlgebra& m, const Ideal& boolean_ideal);

/// Quotient of a monadic algebra by a proper monadic ideal, under the
/// congruence p ≡ q iff p + q ∈ I. The carrier of the quotient is the
/// powerset algebra over the atoms outside the ideal's generator, the
/// canonical map sends each element to its class representative, and the
/// quotient quantifier satisfies ∃[p] = [∃p].
struct QuotientResult {
  MonadicAlgebra algebra;
  std::vector<Mask> canonical_map;  // source mask -> quotient mask
};
QuotientResult quotient(const MonadicAlgebra& m, const Ideal& monadic_ideal);

/// True iff {0} is the only proper monadic ideal.
bool is_simple(const MonadicAlgebra& m);

/// Semisimplicity: the intersection of all maximal monadic ideals is {0}.
/// The certificate lists, for each p ≠ 0, a maximal monadic ideal excluding
/// p. Guard: carrier ≤ 16 unless `unsafe`.
struct SemisimplicityCertificate {
  bool semisimple = false;
  std::vector<std::pair<Elem, Ideal>> witnesses;
};
SemisimplicityCertificate is_semisimple(const MonadicAlgebra& m,
                                        bool unsafe = false);

/// f preserves 0, 1, ∧, ∨, ′ and commutes with ∃. The map is a table from
/// source masks to target masks; throws ValidationError when partial.
bool is_monadic_homomorphism(const std::vector<Mask>& f,
                             const MonadicAlgebra& source,
                             const MonadicAlgebra& target);

/// Derived quantifier laws, all consequences of E1–E3; every entry must
/// hold for every quantifier.
struct QuantLawResult {
  std::string law;
  bool holds;
  std::optional<Elem> witness_p;
  std::optional<Elem> witness_q;
};
std::vector<QuantLawResult> quantifier_law_suite(const MonadicAlgebra& m);

}  // namespace plaus
