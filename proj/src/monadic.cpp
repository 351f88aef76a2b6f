#include "plaus/monadic.hpp"

#include <algorithm>
#include <functional>

namespace plaus {

namespace {

void check_table(const BoolAlgebraPtr& algebra, const std::vector<Mask>& table,
                 const char* what) {
  if (!algebra) throw ValidationError("algebra is null");
  if (table.size() != algebra->size()) {
    throw ValidationError(std::string(what) + " table must be total: expected " +
                          std::to_string(algebra->size()) + " entries, got " +
                          std::to_string(table.size()));
  }
  for (Mask v : table) {
    if (v > algebra->full_mask()) {
      throw ValidationError(std::string(what) + " table value out of range");
    }
  }
}

void check_carrier_guard(const BoolAlgebraPtr& algebra, bool unsafe,
                         const char* what) {
  if (!unsafe && algebra->size() > kMaxQuantifierCarrier) {
    throw GuardError(std::string(what) + " guard: carrier has " +
                         std::to_string(algebra->size()) + " > " +
                         std::to_string(kMaxQuantifierCarrier) + " elements",
                     static_cast<double>(algebra->size()));
  }
  if (algebra->size() >= 63) {  // subset sweeps shift by the carrier size
    throw GuardError(std::string(what) + " cannot sweep 2^" +
                         std::to_string(algebra->size()) + " subsets",
                     static_cast<double>(algebra->size()));
  }
}

// ascending submasks of `space`, including 0 and space itself
template <typename Fn>
void for_each_submask(Mask space, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == space) break;
    s = (s - space) & space;
  }
}

}  // namespace

std::string QuantifierViolation::describe(const BoolAlgebraPtr& algebra) const {
  const Elem ep = algebra->element(p);
  if (law == "E1") return "E1 fails: table(0) != 0";
  if (law == "E2") return "E2 fails at p = " + ep.to_string();
  return "E3 fails at p = " + ep.to_string() +
         ", q = " + algebra->element(q).to_string();
}

std::optional<QuantifierViolation> check_quantifier_table(
    const BoolAlgebraPtr& algebra, const std::vector<Mask>& table) {
  check_table(algebra, table, "quantifier");
  if (table[0] != 0) return QuantifierViolation{"E1", 0, 0};
  const Mask full = algebra->full_mask();
  for (Mask p = 0; p <= full; ++p) {
    if ((p & table[p]) != p) return QuantifierViolation{"E2", p, 0};
  }
  for (Mask p = 0; p <= full; ++p) {
    for (Mask q = 0; q <= full; ++q) {
      if (table[p & table[q]] != (table[p] & table[q])) {
        return QuantifierViolation{"E3", p, q};
      }
    }
  }
  return std::nullopt;
}

Quantifier Quantifier::create(BoolAlgebraPtr algebra, std::vector<Mask> table) {
  if (auto violation = check_quantifier_table(algebra, table)) {
    throw ValidationError("not a quantifier: " + violation->describe(algebra));
  }
  return Quantifier(std::move(algebra), std::move(table));
}

Quantifier Quantifier::identity(BoolAlgebraPtr algebra) {
  std::vector<Mask> table(algebra->size());
  for (Mask p = 0; p < table.size(); ++p) table[p] = p;
  return Quantifier(std::move(algebra), std::move(table));
}

Quantifier Quantifier::simple(BoolAlgebraPtr algebra) {
  const Mask full = algebra->full_mask();
  std::vector<Mask> table(algebra->size(), full);
  table[0] = 0;
  return Quantifier(std::move(algebra), std::move(table));
}

Elem Quantifier::apply(const Elem& p) const {
  if (!same_algebra(p.algebra(), algebra_)) {
    throw DomainMismatchError("element belongs to a different algebra");
  }
  return algebra_->element(table_[p.mask()]);
}

bool Quantifier::is_simple() const {
  const Mask full = algebra_->full_mask();
  for (Mask p = 1; p <= full; ++p) {
    if (table_[p] != full) return false;
  }
  return table_[0] == 0;
}

std::vector<Mask> Quantifier::image() const {
  std::vector<Mask> out(table_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Quantifier> enumerate_quantifiers(const BoolAlgebraPtr& algebra,
                                              bool unsafe) {
  check_carrier_guard(algebra, unsafe, "quantifier enumeration");
  const std::size_t size = algebra->size();
  const Mask full = algebra->full_mask();
  std::vector<Mask> table(size, 0);
  std::vector<Quantifier> out;

  // Assign table entries in mask order; an E3 instance (p, q) only refers to
  // entries at masks <= max(p, q), so after assigning entry m every instance
  // with max(p, q) == m can be checked.
  std::function<void(Mask)> rec = [&](Mask m) {
    if (m == size) {
      out.push_back(Quantifier::create(algebra, table));
      return;
    }
    auto ready_ok = [&]() {
      for (Mask q = 0; q <= m; ++q) {
        if (table[m & table[q]] != (table[m] & table[q])) return false;
        if (table[q & table[m]] != (table[q] & table[m])) return false;
      }
      return true;
    };
    if (m == 0) {
      table[0] = 0;  // E1
      rec(1);
      return;
    }
    for_each_submask(full & ~m, [&](Mask s) {
      table[m] = m | s;  // E2: candidates are the supersets of m
      if (ready_ok()) rec(m + 1);
    });
  };
  rec(0);
  return out;
}

bool is_subalgebra(const BoolAlgebraPtr& algebra,
                   const std::vector<Mask>& members) {
  if (members.empty()) return false;
  std::vector<Mask> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  const Mask full = algebra->full_mask();
  auto has = [&](Mask m) {
    return std::binary_search(sorted.begin(), sorted.end(), m);
  };
  if (!has(0) || !has(full)) return false;
  for (Mask a : sorted) {
    if (a > full) return false;
    if (!has(full & ~a)) return false;
    for (Mask b : sorted) {
      if (!has(a & b) || !has(a | b)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Mask>> enumerate_subalgebras(
    const BoolAlgebraPtr& algebra, bool unsafe) {
  check_carrier_guard(algebra, unsafe, "subalgebra enumeration");
  const std::size_t size = algebra->size();
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
    std::vector<Mask> members;
    for (std::size_t e = 0; e < size; ++e) {
      if (bits >> e & 1) members.push_back(static_cast<Mask>(e));
    }
    if (!members.empty() && is_subalgebra(algebra, members)) {
      out.push_back(std::move(members));
    }
  }
  return out;
}

Quantifier quantifier_from_subalgebra(const BoolAlgebraPtr& algebra,
                                      const std::vector<Mask>& members) {
  if (!is_subalgebra(algebra, members)) {
    throw PreconditionError("the given set is not a Boolean subalgebra");
  }
  std::vector<Mask> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  const Mask full = algebra->full_mask();
  std::vector<Mask> table(algebra->size());
  for (Mask p = 0; p <= full; ++p) {
    // B(p) = {q in the subalgebra : p <= q}; its meet must be its least
    // element for the subalgebra to be relatively complete at p.
    Mask bound = full;
    bool seen = false;
    for (Mask q : sorted) {
      if ((p & q) == p) {
        bound &= q;
        seen = true;
      }
    }
    if (!seen || !std::binary_search(sorted.begin(), sorted.end(), bound) ||
        (p & bound) != p) {
      throw PreconditionError(
          "subalgebra is not relatively complete: no least upper bound for " +
          algebra->element(p).to_string());
    }
    table[p] = bound;
  }
  return Quantifier::create(algebra, std::move(table));
}

Mask MonadicAlgebra::forall_mask(Mask p) const {
  const Mask full = algebra()->full_mask();
  return full & ~exists_.apply_mask(full & ~p);
}

Elem MonadicAlgebra::exists(const Elem& p) const { return exists_.apply(p); }

Elem MonadicAlgebra::forall(const Elem& p) const {
  if (!same_algebra(p.algebra(), algebra())) {
    throw DomainMismatchError("element belongs to a different algebra");
  }
  return algebra()->element(forall_mask(p.mask()));
}

Ideal Ideal::boolean(BoolAlgebraPtr algebra, std::vector<Mask> members) {
  if (!algebra) throw ValidationError("algebra is null");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const Mask full = algebra->full_mask();
  auto has = [&](Mask m) {
    return std::binary_search(members.begin(), members.end(), m);
  };
  for (Mask m : members) {
    if (m > full) throw PreconditionError("ideal member out of range");
  }
  if (!has(0)) throw PreconditionError("an ideal must contain 0");
  for (Mask p : members) {
    bool down = true;
    for_each_submask(p, [&](Mask s) { down = down && has(s); });
    if (!down) {
      throw PreconditionError("ideal is not downward closed at " +
                              algebra->element(p).to_string());
    }
    for (Mask q : members) {
      if (!has(p | q)) {
        throw PreconditionError("ideal is not closed under join at " +
                                algebra->element(p).to_string() + ", " +
                                algebra->element(q).to_string());
      }
    }
  }
  return Ideal(std::move(algebra), std::move(members));
}

Ideal Ideal::principal(const Elem& top) {
  std::vector<Mask> members;
  for_each_submask(top.mask(), [&](Mask s) { members.push_back(s); });
  std::sort(members.begin(), members.end());
  return Ideal(top.algebra(), std::move(members));
}

bool Ideal::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

bool Ideal::is_proper() const { return !contains(algebra_->full_mask()); }

Elem Ideal::generator() const {
  Mask g = 0;
  for (Mask m : members_) g |= m;
  return algebra_->element(g);
}

bool is_monadic_ideal(const MonadicAlgebra& m, const Ideal& ideal) {
  if (!same_algebra(m.algebra(), ideal.algebra())) {
    throw DomainMismatchError("ideal lives in a different algebra");
  }
  for (Mask p : ideal.members()) {
    if (!ideal.contains(m.exists_mask(p))) return false;
  }
  return true;
}

std::vector<Ideal> enumerate_boolean_ideals(const BoolAlgebraPtr& algebra,
                                            bool unsafe) {
  check_carrier_guard(algebra, unsafe, "ideal enumeration");
  const std::size_t size = algebra->size();
  // precompute the downward-closure requirement of each element
  std::vector<std::uint64_t> below(size, 0);
  for (std::size_t e = 0; e < size; ++e) {
    for_each_submask(static_cast<Mask>(e),
                     [&](Mask s) { below[e] |= std::uint64_t{1} << s; });
  }
  std::vector<Ideal> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << size); bits += 2) {
    // every ideal contains 0, hence the low bit is always set
    bool ok = true;
    std::vector<Mask> members;
    for (std::size_t e = 0; e < size && ok; ++e) {
      if (!(bits >> e & 1)) continue;
      if ((bits & below[e]) != below[e]) ok = false;
      members.push_back(static_cast<Mask>(e));
    }
    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
        if (!(bits >> (members[i] | members[j]) & 1)) ok = false;
      }
    }
    if (ok) out.push_back(Ideal::boolean(algebra, std::move(members)));
  }
  return out;
}

std::vector<Ideal> enumerate_monadic_ideals(const MonadicAlgebra& m,
                                            bool unsafe) {
  std::vector<Ideal> out;
  for (auto& ideal : enumerate_boolean_ideals(m.algebra(), unsafe)) {
    if (is_monadic_ideal(m, ideal)) out.push_back(std::move(ideal));
  }
  return out;
}

bool is_maximal_boolean_ideal(const Ideal& ideal) {
  if (!ideal.is_proper()) return false;
  for (const auto& other : enumerate_boolean_ideals(ideal.algebra())) {
    if (!other.is_proper() || other == ideal) continue;
    if (std::includes(other.members().begin(), other.members().end(),
                      ideal.members().begin(), ideal.members().end())) {
      return false;
    }
  }
  return true;
}

bool is_maximal_monadic_ideal(const MonadicAlgebra& m, const Ideal& ideal) {
  if (!ideal.is_proper() || !is_monadic_ideal(m, ideal)) return false;
  for (const auto& other : enumerate_monadic_ideals(m)) {
    if (!other.is_proper() || other == ideal) continue;
    if (std::includes(other.members().begin(), other.members().end(),
                      ideal.members().begin(), ideal.members().end())) {
      return false;
    }
  }
  return true;
}

std::vector<Ideal> maximal_monadic_ideals(const MonadicAlgebra& m,
                                          bool unsafe) {
  std::vector<Ideal> proper;
  for (auto& ideal : enumerate_monadic_ideals(m, unsafe)) {
    if (ideal.is_proper()) proper.push_back(std::move(ideal));
  }
  std::vector<Ideal> out;
  for (const auto& ideal : proper) {
    bool maximal = true;
    for (const auto& other : proper) {
      if (other == ideal) continue;
      if (std::includes(other.members().begin(), other.members().end(),
                        ideal.members().begin(), ideal.members().end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(ideal);
  }
  return out;
}

Ideal istar(const MonadicAlgebra& m, const Ideal& boolean_ideal) {
  if (!same_algebra(m.algebra(), boolean_ideal.algebra())) {
    throw DomainMismatchError("ideal lives in a different algebra");
  }
  std::vector<Mask> members;
  const Mask full = m.algebra()->full_mask();
  for (Mask p = 0; p <= full; ++p) {
    if (boolean_ideal.contains(m.exists_mask(p))) members.push_back(p);
  }
  // the construction always yields an ideal; Ideal::boolean re-validates
  return Ideal::boolean(m.algebra(), std::move(members));
}

QuotientResult quotient(const MonadicAlgebra& m, const Ideal& ideal) {
  if (!is_monadic_ideal(m, ideal)) {
    throw PreconditionError("quotient needs a monadic ideal");
  }
  if (!ideal.is_proper()) {
    throw PreconditionError("quotient needs a proper ideal");
  }
  const auto& source = m.algebra();
  const Mask g = ideal.generator().mask();
  const Mask keep = source->full_mask() & ~g;

  // Classes of p ≡ q iff p + q ∈ I are the XOR-cosets of the submasks of the
  // generator, so the atoms outside it present the quotient.
  std::vector<std::string> labels;
  std::vector<int> positions;
  for (int i = 0; i < source->atom_count(); ++i) {
    if (keep >> i & 1) {
      labels.push_back(source->atom_labels()[i]);
      positions.push_back(i);
    }
  }
  auto target = BoolAlgebra::powerset(labels);

  auto project = [&](Mask p) {
    Mask out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (p >> positions[j] & 1) out |= Mask{1} << j;
    }
    return out;
  };
  auto lift = [&](Mask r) {
    Mask out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (r >> j & 1) out |= Mask{1} << positions[j];
    }
    return out;
  };

  std::vector<Mask> canonical(source->size());
  for (Mask p = 0; p <= source->full_mask(); ++p) canonical[p] = project(p);

  std::vector<Mask> table(target->size());
  for (Mask r = 0; r <= target->full_mask(); ++r) {
    table[r] = project(m.exists_mask(lift(r)));
  }
  MonadicAlgebra quotient_algebra{Quantifier::create(target, std::move(table))};
  return QuotientResult{std::move(quotient_algebra), std::move(canonical)};
}

bool is_simple(const MonadicAlgebra& m) {
  for (const auto& ideal : enumerate_monadic_ideals(m)) {
    if (ideal.is_proper() && ideal.members().size() > 1) return false;
  }
  return true;
}

SemisimplicityCertificate is_semisimple(const MonadicAlgebra& m, bool unsafe) {
  SemisimplicityCertificate cert;
  const auto maximal = maximal_monadic_ideals(m, unsafe);
  const Mask full = m.algebra()->full_mask();
  cert.semisimple = true;
  for (Mask p = 1; p <= full; ++p) {
    const Ideal* found = nullptr;
    for (const auto& ideal : maximal) {
      if (!ideal.contains(p)) {
        found = &ideal;
        break;
      }
    }
    if (!found) {
      cert.semisimple = false;
      continue;
    }
    cert.witnesses.emplace_back(m.algebra()->element(p), *found);
  }
  return cert;
}

bool is_monadic_homomorphism(const std::vector<Mask>& f,
                             const MonadicAlgebra& source,
                             const MonadicAlgebra& target) {
  check_table(source.algebra(), f, "homomorphism");
  for (Mask v : f) {
    if (v > target.algebra()->full_mask()) {
      throw ValidationError("homomorphism value outside the target algebra");
    }
  }
  const Mask sfull = source.algebra()->full_mask();
  const Mask tfull = target.algebra()->full_mask();
  if (f[0] != 0 || f[sfull] != tfull) return false;
  for (Mask p = 0; p <= sfull; ++p) {
    if (f[sfull & ~p] != (tfull & ~f[p])) return false;
    if (f[source.exists_mask(p)] != target.exists_mask(f[p])) return false;
    for (Mask q = 0; q <= sfull; ++q) {
      if (f[p & q] != (f[p] & f[q])) return false;
      if (f[p | q] != (f[p] | f[q])) return false;
    }
  }
  return true;
}

std::vector<QuantLawResult> quantifier_law_suite(const MonadicAlgebra& m) {
  const auto& algebra = m.algebra();
  const Mask full = algebra->full_mask();
  std::vector<QuantLawResult> out;

  auto elem = [&](Mask p) { return algebra->element(p); };
  auto check1 = [&](const std::string& law, auto&& pred) {
    for (Mask p = 0; p <= full; ++p) {
      if (!pred(p)) {
        out.push_back({law, false, elem(p), std::nullopt});
        return;
      }
    }
    out.push_back({law, true, std::nullopt, std::nullopt});
  };
  auto check2 = [&](const std::string& law, auto&& pred) {
    for (Mask p = 0; p <= full; ++p) {
      for (Mask q = 0; q <= full; ++q) {
        if (!pred(p, q)) {
          out.push_back({law, false, elem(p), elem(q)});
          return;
        }
      }
    }
    out.push_back({law, true, std::nullopt, std::nullopt});
  };

  auto E = [&](Mask p) { return m.exists_mask(p); };
  auto le = [](Mask a, Mask b) { return (a & b) == a; };

  out.push_back({"exists(1) = 1", E(full) == full, std::nullopt, std::nullopt});
  check1("idempotent", [&](Mask p) { return E(E(p)) == E(p); });
  check2("monotone", [&](Mask p, Mask q) {
    return !le(p, q) || le(E(p), E(q));
  });
  check2("below-image bound", [&](Mask p, Mask q) {
    return !le(p, E(q)) || le(E(p), E(q));
  });
  check2("disjunctive", [&](Mask p, Mask q) {
    return E(p | q) == (E(p) | E(q));
  });
  check1("exists(exists(p)')=(exists(p))'", [&](Mask p) {
    return E(full & ~E(p)) == (full & ~E(p));
  });
  check2("difference law", [&](Mask p, Mask q) {
    return le(E(p) & ~E(q), E(p & ~q));
  });
  check2("symmetric-difference law", [&](Mask p, Mask q) {
    return le(E(p) ^ E(q), E(p ^ q));
  });
  const auto image = m.quantifier().image();
  out.push_back({"image is a subalgebra", is_subalgebra(algebra, image),
                 std::nullopt, std::nullopt});
  check1("fixed points are the image", [&](Mask p) {
    const bool in_image = std::binary_search(image.begin(), image.end(), p);
    return in_image == (E(p) == p);
  });
  return out;
}

}  // namespace plaus
