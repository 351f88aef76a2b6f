#include "plaus/boolalg.hpp"

#include <algorithm>
#include <set>

namespace plaus {

BoolAlgebraPtr BoolAlgebra::powerset(std::vector<std::string> atom_labels) {
  if (atom_labels.empty()) {
    throw ValidationError("powerset algebra needs a nonempty atom list");
  }
  if (atom_labels.size() > 20) {
    throw ValidationError("powerset algebra limited to 20 atoms, got " +
                          std::to_string(atom_labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& label : atom_labels) {
    if (label.empty()) {
      throw ValidationError("atom labels must be nonempty strings");
    }
    if (!seen.insert(label).second) {
      throw ValidationError("duplicate atom label '" + label + "'");
    }
  }
  return std::make_shared<BoolAlgebra>(Private{}, std::move(atom_labels));
}

Elem BoolAlgebra::element(Mask mask) const {
  if (mask > full_mask()) {
    throw ValidationError("mask " + std::to_string(mask) +
                          " out of range for algebra with " +
                          std::to_string(atom_count()) + " atoms");
  }
  return Elem(shared_from_this(), mask);
}

Elem BoolAlgebra::zero() const { return element(0); }

Elem BoolAlgebra::one() const { return element(full_mask()); }

Elem BoolAlgebra::atom(int index) const {
  if (index < 0 || index >= atom_count()) {
    throw ValidationError("atom index " + std::to_string(index) +
                          " out of range");
  }
  return element(Mask{1} << index);
}

Elem BoolAlgebra::element_from_labels(
    const std::vector<std::string>& labels) const {
  Mask mask = 0;
  for (const auto& label : labels) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      throw ValidationError("unknown atom label '" + label + "'");
    }
    Mask bit = Mask{1} << (it - labels_.begin());
    if (mask & bit) {
      throw ValidationError("repeated atom label '" + label + "'");
    }
    mask |= bit;
  }
  return element(mask);
}

std::vector<Elem> BoolAlgebra::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (Mask m = 0; m <= full_mask(); ++m) out.push_back(element(m));
  return out;
}

bool same_algebra(const BoolAlgebraPtr& a, const BoolAlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::vector<std::string> Elem::labels() const {
  std::vector<std::string> out;
  const auto& atoms = algebra_->atom_labels();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (mask_ >> i & 1) out.push_back(atoms[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Elem::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels()) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

namespace {

void require_same_algebra(const Elem& a, const Elem& b) {
  if (!same_algebra(a.algebra(), b.algebra())) {
    throw DomainMismatchError("operands belong to different algebras");
  }
}

}  // namespace

Elem meet(const Elem& a, const Elem& b) {
  require_same_algebra(a, b);
  return Elem(a.algebra(), a.mask() & b.mask());
}

Elem join(const Elem& a, const Elem& b) {
  require_same_algebra(a, b);
  return Elem(a.algebra(), a.mask() | b.mask());
}

Elem complement(const Elem& a) {
  return Elem(a.algebra(), a.algebra()->full_mask() & ~a.mask());
}

Elem minus(const Elem& a, const Elem& b) {
  require_same_algebra(a, b);
  return Elem(a.algebra(), a.mask() & ~b.mask());
}

Elem symdiff(const Elem& a, const Elem& b) {
  require_same_algebra(a, b);
  return Elem(a.algebra(), a.mask() ^ b.mask());
}

bool leq(const Elem& a, const Elem& b) {
  require_same_algebra(a, b);
  return (a.mask() & b.mask()) == a.mask();
}

std::variant<Elem, bool> apply_boolean(BoolOp op, const Elem& a,
                                       const std::optional<Elem>& b) {
  if (op == BoolOp::Complement) {
    if (b.has_value()) {
      throw ValidationError("complement takes a single operand");
    }
    return complement(a);
  }
  if (!b.has_value()) {
    throw ValidationError("binary operation needs a second operand");
  }
  switch (op) {
    case BoolOp::Meet: return meet(a, *b);
    case BoolOp::Join: return join(a, *b);
    case BoolOp::Minus: return minus(a, *b);
    case BoolOp::Symdiff: return symdiff(a, *b);
    case BoolOp::Leq: return leq(a, *b);
    case BoolOp::Complement: break;
  }
  throw ValidationError("unknown boolean operation");
}

}  // namespace plaus
