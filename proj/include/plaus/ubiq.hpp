#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plaus/monadic.hpp"
#include "plaus/pseudotop.hpp"

namespace plaus {

inline constexpr std::size_t kMaxUpsilonCarrier = 8;  // 2^3

/// First violated ubiquity clause, for diagnostics.
struct UpsilonViolation {
  std::string clause;  // "(i)", "(ii)", "(iii)"
  Mask p = 0;
  Mask q = 0;  // meaningful for (i) and (ii)
  std::string describe(const BoolAlgebraPtr& algebra) const;
};

/// Returns the first violation of
///   (i)   Υp ∧ Υq ≤ Υ(p ∧ q)
///   (ii)  Υp ≤ Υ(p ∨ q)
///   (iii) ∀p ≤ Υp ≤ ∃p
/// or nothing when the table is a ubiquity operator on the base.
std::optional<UpsilonViolation> check_upsilon_table(
    const MonadicAlgebra& base, const std::vector<Mask>& table);

/// A monadic algebra extended with a ubiquity operator Υ satisfying clauses
/// (i)–(iii). Υ is stored as an explicit table, not derived from a space:
/// operators that are not interiors are first-class, since the axioms are
/// strictly weaker than the topological model.
class UbiquityAlgebra {
 public:
  /// Validates (i)–(iii); throws ValidationError naming the clause and a
  /// witness pair on rejection.
  static UbiquityAlgebra validate(MonadicAlgebra base, std::vector<Mask> table);

  /// Υ = identity, valid on any monadic algebra.
  static UbiquityAlgebra identity(MonadicAlgebra base);

  const MonadicAlgebra& base() const { return base_; }
  const BoolAlgebraPtr& algebra() const { return base_.algebra(); }
  const std::vector<Mask>& upsilon_table() const { return table_; }

  Mask upsilon_mask(Mask p) const { return table_[p]; }
  Elem upsilon(const Elem& p) const;

  friend bool operator==(const UbiquityAlgebra& a, const UbiquityAlgebra& b) {
    return a.base_ == b.base_ && a.table_ == b.table_;
  }
  friend bool operator!=(const UbiquityAlgebra& a, const UbiquityAlgebra& b) {
    return !(a == b);
  }

 private:
  UbiquityAlgebra(MonadicAlgebra base, std::vector<Mask> table)
      : base_(std::move(base)), table_(std::move(table)) {}

  MonadicAlgebra base_;
  std::vector<Mask> table_;
};

/// The topological model: the powerset algebra over the carrier with the
/// simple quantifier and Υ = interior. Beyond clauses (i)–(iii) this Υ also
/// satisfies Υp ≤ p and ΥΥp = Υp, which the axioms alone do not imply.
UbiquityAlgebra upsilon_from_space(const PseudoTopology& space);

/// All ubiquity operators on the base, by depth-first search over tables
/// inside the sandwich [∀p, ∃p] with incremental clause checking; output in
/// lexicographic table order. Guard: carrier ≤ 8 elements unless `unsafe`.
std::vector<UbiquityAlgebra> enumerate_upsilons(const MonadicAlgebra& base,
                                                bool unsafe = false);

/// Derived Υ laws; every entry must hold for any table accepted by
/// validate — the suite is the executable check of those consequences.
struct UbiqLawResult {
  std::string law;
  bool holds;
  std::optional<Elem> witness_p;
  std::optional<Elem> witness_q;
};
std::vector<UbiqLawResult> ubiq_law_suite(const UbiquityAlgebra& u);

/// A ubiquity ideal is a monadic ideal that is Υ-closed. Since Υp ≤ ∃p,
/// every monadic ideal qualifies.
bool is_ubiquity_ideal(const UbiquityAlgebra& u, const Ideal& ideal);

std::vector<Ideal> enumerate_ubiquity_ideals(const UbiquityAlgebra& u,
                                             bool unsafe = false);

/// True iff {0} is the only proper ubiquity ideal.
bool is_simple(const UbiquityAlgebra& u);

/// f is a monadic homomorphism that also commutes with Υ.
bool is_ubiquity_homomorphism(const std::vector<Mask>& f,
                              const UbiquityAlgebra& source,
                              const UbiquityAlgebra& target);

/// Audits whether Υ descends to the quotient by a proper ubiquity ideal
/// under the symmetric-difference congruence: p + q ∈ I must force
/// Υp + Υq ∈ I. On success builds the quotient ubiquity algebra (which is
/// re-validated) and the canonical map; on failure reports the witness pair.
struct DescentVerdict {
  bool descends = false;
  std::optional<std::pair<Elem, Elem>> counterexample;
  std::optional<UbiquityAlgebra> quotient_algebra;
  std::vector<Mask> canonical_map;
};
DescentVerdict quotient_descent_check(const UbiquityAlgebra& u,
                                      const Ideal& ubiquity_ideal);

/// Simplicity and semisimplicity checks:
///   (a) the algebra is simple iff its quantifier ∃ is simple;
///   (b) semisimplicity via the I* construction from maximal Boolean ideals;
///   (c) for every p0 ≠ 0 a homomorphism onto a simple ubiquity algebra
///       with f(p0) ≠ 0, obtained by quotienting by a maximal ubiquity
///       ideal across which Υ descends.
struct UbiqSimplicityReport {
  bool simple = false;
  bool exists_simple = false;
  bool simplicity_law_holds = false;  // (a)
  bool semisimple = false;            // (b)

  struct Witness {
    Elem element;        // p0
    Ideal ideal;         // maximal ubiquity ideal excluding p0, via I*
    bool ideal_checks;   // ubiquity ideal, maximal, p0 outside
    bool hom_found;      // (c): descent succeeded for some such ideal
    bool target_simple;  // quotient is simple
    bool image_nonzero;  // f(p0) != 0
  };
  std::vector<Witness> witnesses;

  bool all_ok() const;
};
UbiqSimplicityReport ubiq_simplicity_suite(const UbiquityAlgebra& u,
                                           bool unsafe = false);

}  // namespace plaus
