#include "plaus/ubiq.hpp"

#include <algorithm>
#include <functional>

namespace plaus {

namespace {

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

std::string UpsilonViolation::describe(const BoolAlgebraPtr& algebra) const {
  const std::string ps = algebra->element(p).to_string();
  if (clause == "(iii)") {
    return "clause (iii) fails at p = " + ps;
  }
  return "clause " + clause + " fails at p = " + ps +
         ", q = " + algebra->element(q).to_string();
}

std::optional<UpsilonViolation> check_upsilon_table(
    const MonadicAlgebra& base, const std::vector<Mask>& table) {
  const auto& algebra = base.algebra();
  if (table.size() != algebra->size()) {
    throw ValidationError("upsilon table must be total: expected " +
                          std::to_string(algebra->size()) + " entries, got " +
                          std::to_string(table.size()));
  }
  const Mask full = algebra->full_mask();
  for (Mask v : table) {
    if (v > full) throw ValidationError("upsilon table value out of range");
  }
  auto le = [](Mask a, Mask b) { return (a & b) == a; };
  for (Mask p = 0; p <= full; ++p) {
    if (!le(base.forall_mask(p), table[p]) ||
        !le(table[p], base.exists_mask(p))) {
      return UpsilonViolation{"(iii)", p, 0};
    }
  }
  for (Mask p = 0; p <= full; ++p) {
    for (Mask q = 0; q <= full; ++q) {
      if (!le(table[p] & table[q], table[p & q])) {
        return UpsilonViolation{"(i)", p, q};
      }
      if (!le(table[p], table[p | q])) {
        return UpsilonViolation{"(ii)", p, q};
      }
    }
  }
  return std::nullopt;
}

UbiquityAlgebra UbiquityAlgebra::validate(MonadicAlgebra base,
                                          std::vector<Mask> table) {
  if (auto violation = check_upsilon_table(base, table)) {
    throw ValidationError("not a ubiquity operator: " +
                          violation->describe(base.algebra()));
  }
  return UbiquityAlgebra(std::move(base), std::move(table));
}

UbiquityAlgebra UbiquityAlgebra::identity(MonadicAlgebra base) {
  std::vector<Mask> table(base.algebra()->size());
  for (Mask p = 0; p < table.size(); ++p) table[p] = p;
  return validate(std::move(base), std::move(table));
}

Elem UbiquityAlgebra::upsilon(const Elem& p) const {
  if (!same_algebra(p.algebra(), algebra())) {
    throw DomainMismatchError("element belongs to a different algebra");
  }
  return algebra()->element(table_[p.mask()]);
}

UbiquityAlgebra upsilon_from_space(const PseudoTopology& space) {
  auto algebra = BoolAlgebra::powerset(space.carrier());
  MonadicAlgebra base{Quantifier::simple(algebra)};
  std::vector<Mask> table(algebra->size());
  for (Mask p = 0; p <= algebra->full_mask(); ++p) {
    table[p] = space.interior(p);
  }
  return UbiquityAlgebra::validate(std::move(base), std::move(table));
}

std::vector<UbiquityAlgebra> enumerate_upsilons(const MonadicAlgebra& base,
                                                bool unsafe) {
  const auto& algebra = base.algebra();
  if (!unsafe && algebra->size() > kMaxUpsilonCarrier) {
    throw GuardError("upsilon enumeration guard: carrier has " +
                         std::to_string(algebra->size()) + " > " +
                         std::to_string(kMaxUpsilonCarrier) + " elements",
                     static_cast<double>(algebra->size()));
  }
  const std::size_t size = algebra->size();
  std::vector<Mask> table(size, 0);
  std::vector<UbiquityAlgebra> out;
  auto le = [](Mask a, Mask b) { return (a & b) == a; };

  // Assign entries in mask order inside the sandwich [∀p, ∃p]. Clause (i)
  // instances with max(p, q) == m refer only to assigned entries; clause
  // (ii) amounts to monotonicity on submask chains, checked against the
  // submasks of m.
  std::function<void(Mask)> rec = [&](Mask m) {
    if (m == size) {
      out.push_back(UbiquityAlgebra::validate(base, table));
      return;
    }
    auto ready_ok = [&]() {
      for (Mask q = 0; q <= m; ++q) {
        if (!le(table[m] & table[q], table[m & q])) return false;
      }
      bool mono = true;
      for_each_submask(m, [&](Mask p) {
        mono = mono && le(table[p], table[m]);
      });
      return mono;
    };
    const Mask lo = base.forall_mask(m);
    const Mask hi = base.exists_mask(m);
    for_each_submask(hi & ~lo, [&](Mask s) {
      table[m] = lo | s;
      if (ready_ok()) rec(m + 1);
    });
  };
  rec(0);
  return out;
}

std::vector<UbiqLawResult> ubiq_law_suite(const UbiquityAlgebra& u) {
  const auto& algebra = u.algebra();
  const Mask full = algebra->full_mask();
  std::vector<UbiqLawResult> out;

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

  auto U = [&](Mask p) { return u.upsilon_mask(p); };
  auto E = [&](Mask p) { return u.base().exists_mask(p); };
  auto le = [](Mask a, Mask b) { return (a & b) == a; };
  auto co = [&](Mask p) { return full & ~p; };

  out.push_back({"upsilon(1) = 1", U(full) == full, std::nullopt, std::nullopt});
  out.push_back({"upsilon(0) = 0", U(0) == 0, std::nullopt, std::nullopt});
  check2("upsilon(p) & upsilon(q) <= exists(p & q)",
         [&](Mask p, Mask q) { return le(U(p) & U(q), E(p & q)); });
  check1("upsilon(p) & upsilon(p') = 0",
         [&](Mask p) { return (U(p) & U(co(p))) == 0; });
  check1("upsilon(p) <= upsilon(p')'",
         [&](Mask p) { return le(U(p), co(U(co(p)))); });
  check1("upsilon(p | p') = 1", [&](Mask p) { return U(p | co(p)) == full; });
  check2("monotone",
         [&](Mask p, Mask q) { return !le(p, q) || le(U(p), U(q)); });
  check2("meet <= join <= upsilon of join", [&](Mask p, Mask q) {
    return le(U(p) & U(q), U(p) | U(q)) && le(U(p) | U(q), U(p | q));
  });
  check2("upsilon(p & q) <= upsilon(p)",
         [&](Mask p, Mask q) { return le(U(p & q), U(p)); });
  check2("upsilon(p & q) = upsilon(p) & upsilon(q)",
         [&](Mask p, Mask q) { return U(p & q) == (U(p) & U(q)); });
  return out;
}

bool is_ubiquity_ideal(const UbiquityAlgebra& u, const Ideal& ideal) {
  if (!is_monadic_ideal(u.base(), ideal)) return false;
  for (Mask p : ideal.members()) {
    if (!ideal.contains(u.upsilon_mask(p))) return false;
  }
  return true;
}

std::vector<Ideal> enumerate_ubiquity_ideals(const UbiquityAlgebra& u,
                                             bool unsafe) {
  std::vector<Ideal> out;
  for (auto& ideal : enumerate_monadic_ideals(u.base(), unsafe)) {
    if (is_ubiquity_ideal(u, ideal)) out.push_back(std::move(ideal));
  }
  return out;
}

bool is_simple(const UbiquityAlgebra& u) {
  for (const auto& ideal : enumerate_ubiquity_ideals(u)) {
    if (ideal.is_proper() && ideal.members().size() > 1) return false;
  }
  return true;
}

bool is_ubiquity_homomorphism(const std::vector<Mask>& f,
                              const UbiquityAlgebra& source,
                              const UbiquityAlgebra& target) {
  if (!is_monadic_homomorphism(f, source.base(), target.base())) return false;
  const Mask full = source.algebra()->full_mask();
  for (Mask p = 0; p <= full; ++p) {
    if (f[source.upsilon_mask(p)] != target.upsilon_mask(f[p])) return false;
  }
  return true;
}

DescentVerdict quotient_descent_check(const UbiquityAlgebra& u,
                                      const Ideal& ideal) {
  if (!is_ubiquity_ideal(u, ideal)) {
    throw PreconditionError("descent check needs a ubiquity ideal");
  }
  if (!ideal.is_proper()) {
    throw PreconditionError("descent check needs a proper ideal");
  }
  DescentVerdict verdict;
  const auto& algebra = u.algebra();
  const Mask full = algebra->full_mask();
  const Mask g = ideal.generator().mask();

  // p ≡ q (mod I) iff the symmetric difference lies under the generator.
  for (Mask p = 0; p <= full; ++p) {
    for (Mask q = 0; q <= full; ++q) {
      if (((p ^ q) & ~g) == 0 &&
          ((u.upsilon_mask(p) ^ u.upsilon_mask(q)) & ~g) != 0) {
        verdict.descends = false;
        verdict.counterexample = {algebra->element(p), algebra->element(q)};
        return verdict;
      }
    }
  }
  verdict.descends = true;

  QuotientResult base_quotient = quotient(u.base(), ideal);
  const auto& map = base_quotient.canonical_map;
  const auto& target = base_quotient.algebra.algebra();
  std::vector<Mask> table(target->size(), 0);
  for (Mask p = 0; p <= full; ++p) {
    table[map[p]] = map[u.upsilon_mask(p)];
  }
  verdict.quotient_algebra =
      UbiquityAlgebra::validate(base_quotient.algebra, std::move(table));
  verdict.canonical_map = map;
  return verdict;
}

bool UbiqSimplicityReport::all_ok() const {
  if (!simplicity_law_holds || !semisimple) return false;
  return std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) {
    return w.ideal_checks && w.hom_found && w.target_simple && w.image_nonzero;
  });
}

UbiqSimplicityReport ubiq_simplicity_suite(const UbiquityAlgebra& u,
                                           bool unsafe) {
  const auto& algebra = u.algebra();
  if (!unsafe && algebra->size() > kMaxQuantifierCarrier) {
    throw GuardError("simplicity suite guard: carrier has " +
                         std::to_string(algebra->size()) + " > " +
                         std::to_string(kMaxQuantifierCarrier) + " elements",
                     static_cast<double>(algebra->size()));
  }
  UbiqSimplicityReport report;
  report.simple = is_simple(u);
  report.exists_simple = u.base().quantifier().is_simple();
  report.simplicity_law_holds = report.simple == report.exists_simple;

  const Mask full = algebra->full_mask();
  report.semisimple = true;
  for (Mask p0 = 1; p0 <= full; ++p0) {
    // some atom sits under ∃p0, so the Boolean ideal of sets avoiding it is
    // maximal and misses ∃p0; its I* is then a maximal ubiquity ideal
    // excluding p0
    const Mask ep0 = u.base().exists_mask(p0);
    int atom = -1;
    for (int i = 0; i < algebra->atom_count(); ++i) {
      if (ep0 >> i & 1) {
        atom = i;
        break;
      }
    }
    if (atom < 0) {
      report.semisimple = false;
      continue;
    }
    const Mask coatom = full & ~(Mask{1} << atom);
    Ideal boolean_max = Ideal::principal(algebra->element(coatom));
    Ideal ustar = istar(u.base(), boolean_max);

    UbiqSimplicityReport::Witness w{algebra->element(p0), ustar, false, false,
                                    false, false};
    w.ideal_checks = is_ubiquity_ideal(u, ustar) && !ustar.contains(p0) &&
                     is_maximal_monadic_ideal(u.base(), ustar);
    if (!w.ideal_checks) report.semisimple = false;

    // (c): a homomorphism onto a simple ubiquity algebra with f(p0) != 0
    // exists iff Υ descends across some maximal ubiquity ideal missing p0
    for (const auto& ideal : maximal_monadic_ideals(u.base())) {
      if (ideal.contains(p0) || !is_ubiquity_ideal(u, ideal)) continue;
      DescentVerdict verdict = quotient_descent_check(u, ideal);
      if (!verdict.descends) continue;
      w.hom_found = true;
      w.target_simple = is_simple(*verdict.quotient_algebra);
      w.image_nonzero = verdict.canonical_map[p0] != 0;
      break;
    }
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

}  // namespace plaus
