#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plaus/errors.hpp"

namespace plaus {

/// Subset-of-atoms bit mask; bit i stands for atom i of the owning algebra.
using Mask = std::uint32_t;

class BoolAlgebra;
class Elem;
using BoolAlgebraPtr = std::shared_ptr<const BoolAlgebra>;

/// A finite Boolean algebra presented by its atoms. The carrier is the set of
/// all subsets of the atom set. Every finite Boolean algebra is isomorphic to
/// such a powerset algebra, so the representation is canonical and loses no
/// generality. Instances are immutable and shared.
class BoolAlgebra : public std::enable_shared_from_this<BoolAlgebra> {
  struct Private {};

 public:
  BoolAlgebra(Private, std::vector<std::string> labels)
      : labels_(std::move(labels)) {}

  /// The algebra of all subsets of the given atom set.
  /// Throws ValidationError if the list is empty or the labels are not
  /// distinct nonempty strings.
  static BoolAlgebraPtr powerset(std::vector<std::string> atom_labels);

  int atom_count() const { return static_cast<int>(labels_.size()); }
  std::size_t size() const { return std::size_t{1} << labels_.size(); }
  Mask full_mask() const { return static_cast<Mask>(size() - 1); }
  const std::vector<std::string>& atom_labels() const { return labels_; }

  Elem element(Mask mask) const;  // throws ValidationError if mask out of range
  Elem zero() const;
  Elem one() const;
  Elem atom(int index) const;
  Elem element_from_labels(const std::vector<std::string>& labels) const;
  std::vector<Elem> elements() const;  // in mask order 0 .. 2^n-1

  friend bool operator==(const BoolAlgebra& a, const BoolAlgebra& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const BoolAlgebra& a, const BoolAlgebra& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> labels_;
};

/// True when both handles denote the same algebra (pointer or structural).
bool same_algebra(const BoolAlgebraPtr& a, const BoolAlgebraPtr& b);

/// An element of a finite Boolean algebra, i.e. a subset of its atom set.
/// Value-like and immutable; equality compares the owning algebra and mask.
class Elem {
 public:
  Elem(BoolAlgebraPtr algebra, Mask mask)
      : algebra_(std::move(algebra)), mask_(mask) {}

  Mask mask() const { return mask_; }
  const BoolAlgebraPtr& algebra() const { return algebra_; }

  bool is_zero() const { return mask_ == 0; }
  bool is_one() const { return mask_ == algebra_->full_mask(); }

  /// Atom labels of this subset, sorted lexicographically (the
  /// serialization order; the empty list is 0).
  std::vector<std::string> labels() const;

  /// Compact text form, e.g. "{a,c}"; "{}" is 0.
  std::string to_string() const;

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.mask_ == b.mask_ && same_algebra(a.algebra_, b.algebra_);
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

 private:
  BoolAlgebraPtr algebra_;
  Mask mask_;
};

// Lattice operations with subset semantics. Binary operations throw
// DomainMismatchError when the operands live in different algebras.
Elem meet(const Elem& a, const Elem& b);
Elem join(const Elem& a, const Elem& b);
Elem complement(const Elem& a);
Elem minus(const Elem& a, const Elem& b);    // a ∧ b′
Elem symdiff(const Elem& a, const Elem& b);  // (a − b) ∨ (b − a)
bool leq(const Elem& a, const Elem& b);      // inclusion

inline Elem operator&(const Elem& a, const Elem& b) { return meet(a, b); }
inline Elem operator|(const Elem& a, const Elem& b) { return join(a, b); }
inline Elem operator~(const Elem& a) { return complement(a); }
inline Elem operator-(const Elem& a, const Elem& b) { return minus(a, b); }
inline Elem operator^(const Elem& a, const Elem& b) { return symdiff(a, b); }

enum class BoolOp { Meet, Join, Complement, Minus, Symdiff, Leq };

/// Single-entry dispatcher over the lattice operations. Complement takes no
/// second operand; Leq yields a truth value, everything else an element.
std::variant<Elem, bool> apply_boolean(BoolOp op, const Elem& a,
                                       const std::optional<Elem>& b);

}  // namespace plaus
