#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plaus/formula.hpp"
#include "plaus/pseudotop.hpp"

namespace plaus {

inline constexpr double kMaxStructureSweep = 1e7;
inline constexpr int kMaxStructureDomain = 4;

/// Interpretation of one predicate: a set of tuples of domain indices.
struct PredInterp {
  int arity = 0;
  std::set<std::vector<int>> tuples;

  friend bool operator==(const PredInterp& a, const PredInterp& b) {
    return a.arity == b.arity && a.tuples == b.tuples;
  }
};

/// A finite pseudo-topological structure: a first-order structure over a
/// finite domain together with a pseudo-topology on that domain.
class PTStructure {
 public:
  PTStructure(std::vector<std::string> domain,
              std::map<std::string, PredInterp> predicates,
              PseudoTopology opens);

  const std::vector<std::string>& domain() const { return domain_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }
  const std::map<std::string, PredInterp>& predicates() const {
    return predicates_;
  }
  const PseudoTopology& opens() const { return opens_; }

  /// Empty interpretation when the predicate is absent.
  bool holds(const std::string& predicate, const std::vector<int>& tuple) const;

  int element_index(const std::string& label) const;  // -1 when unknown

  friend bool operator==(const PTStructure& a, const PTStructure& b) {
    return a.domain_ == b.domain_ && a.predicates_ == b.predicates_ &&
           a.opens_ == b.opens_;
  }
  friend bool operator!=(const PTStructure& a, const PTStructure& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> domain_;
  std::map<std::string, PredInterp> predicates_;
  PseudoTopology opens_;
};

/// Variable name -> domain index.
using Assignment = std::map<std::string, int>;

/// Tarskian satisfaction extended with the ubiquity clause: U x A holds
/// exactly when {b : A holds with x := b} belongs to Ω. Throws
/// PreconditionError naming the first free variable the assignment misses.
bool satisfies(const PTStructure& structure, const FormulaPtr& formula,
               const Assignment& assignment = {});

/// Estimated number of structures the sweep will visit.
double estimate_structure_count(const Signature& signature, int max_domain);

/// Visits every structure with domain size 1..max_domain: all predicate
/// interpretations crossed with all pseudo-topologies, in deterministic
/// order (domain size ascending; interpretations as binary counters with
/// the lexicographically first predicate most significant; spaces in
/// enumerate_spaces order). The visitor returns false to stop. Guards:
/// max_domain ≤ 4 and estimated sweep ≤ 10^7 unless `unsafe`.
void for_each_structure(const Signature& signature, int max_domain,
                        const std::function<bool(const PTStructure&)>& visit,
                        bool unsafe = false);

std::vector<PTStructure> enumerate_structures(const Signature& signature,
                                              int max_domain,
                                              bool unsafe = false);

/// Result of a bounded validity search. Finite validity is evidence, not
/// proof: a "valid" verdict means valid up to the bound only.
struct Verdict {
  bool valid = false;
  int max_domain = 0;
  FormulaPtr formula;
  std::optional<PTStructure> countermodel;  // first in deterministic order
  Assignment assignment;                    // empty for sentences
};

/// Validity of a sentence over every enumerated structure; the signature is
/// inferred from the formula. Throws PreconditionError on free variables.
Verdict check_validity(const FormulaPtr& formula, int max_domain,
                       bool unsafe = false);

/// Same, over an explicitly given signature (superset of the inferred one).
Verdict check_validity_in(const FormulaPtr& formula, const Signature& signature,
                          int max_domain, bool unsafe = false);

/// The specific axiom schemas of the ubiquity quantifier, instantiated with
/// unary predicate atoms, plus the three derived theorem schemas; all are
/// checked over signature {P:1, Q:1}.
struct AxiomResult {
  std::string name;
  std::string text;
  Verdict verdict;
};
std::vector<AxiomResult> axiom_suite(int max_domain, bool unsafe = false);

/// name -> concrete formula text of the schema instances used by the suite.
const std::vector<std::pair<std::string, std::string>>& axiom_schemas();

}  // namespace plaus
