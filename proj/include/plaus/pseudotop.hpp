#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plaus/errors.hpp"

namespace plaus {

using Mask = std::uint32_t;

inline constexpr int kMaxSpaceCarrier = 4;  // enumeration guard on |E|

/// A pseudo-topological space (E, Ω): Ω is a family of subsets of E closed
/// under binary intersection and binary union, containing E and excluding ∅.
/// Unlike a topology, ∅ is never open, so any two opens meet nontrivially.
/// Subsets are masks over the carrier order.
class PseudoTopology {
 public:
  /// Validates clauses (i) A,B ∈ Ω ⇒ A∩B ∈ Ω, (ii) A,B ∈ Ω ⇒ A∪B ∈ Ω,
  /// (iii) E ∈ Ω, (iv) ∅ ∉ Ω. Throws ValidationError naming the first
  /// violated clause together with a witness pair.
  static PseudoTopology validate(std::vector<std::string> carrier,
                                 std::vector<Mask> opens);

  /// Same, with opens given as label lists.
  static PseudoTopology validate_labels(
      std::vector<std::string> carrier,
      const std::vector<std::vector<std::string>>& opens);

  const std::vector<std::string>& carrier() const { return carrier_; }
  int carrier_size() const { return static_cast<int>(carrier_.size()); }
  Mask full_mask() const { return (Mask{1} << carrier_.size()) - 1; }

  /// Ω as sorted masks (ascending).
  const std::vector<Mask>& opens() const { return opens_; }
  bool is_open_member(Mask subset) const;  // subset ∈ Ω

  /// Interior: the union of all opens contained in the subset, which by
  /// clause (ii) is the greatest such open; ∅ when no open fits.
  /// Always interior(A) ⊆ A.
  Mask interior(Mask subset) const;

  /// The raw openness test A ⊆ interior(A). Note that ∅ passes it vacuously
  /// even though ∅ ∉ Ω; the quirk is reported as-is, not special-cased.
  bool reports_open(Mask subset) const;

  /// F is closed when its complement is open, i.e. E∖F ∈ Ω.
  bool is_closed(Mask subset) const;

  Mask subset_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> subset_labels(Mask subset) const;  // sorted

  void require_subset(Mask subset) const;  // PreconditionError when ⊄ E

  friend bool operator==(const PseudoTopology& a, const PseudoTopology& b) {
    return a.carrier_ == b.carrier_ && a.opens_ == b.opens_;
  }
  friend bool operator!=(const PseudoTopology& a, const PseudoTopology& b) {
    return !(a == b);
  }

 private:
  PseudoTopology(std::vector<std::string> carrier, std::vector<Mask> opens)
      : carrier_(std::move(carrier)), opens_(std::move(opens)) {}

  std::vector<std::string> carrier_;
  std::vector<Mask> opens_;  // sorted ascending
};

/// All pseudo-topologies on the carrier, in a deterministic order: candidate
/// families are subsets of the nonempty proper subsets (ordered by mask) plus
/// E, swept as a binary counter. Guard |E| ≤ 4 unless `unsafe`.
std::vector<PseudoTopology> enumerate_spaces(
    const std::vector<std::string>& carrier, bool unsafe = false);

/// Number of candidate families the enumeration sweeps (the guard estimate).
double space_enumeration_cost(int carrier_size);

}  // namespace plaus
