#include "plaus/funcalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace plaus {

namespace {

void check_domain(const std::vector<std::string>& domain) {
  if (domain.empty()) {
    throw ValidationError("function domain must be nonempty");
  }
  std::set<std::string> seen;
  for (const auto& x : domain) {
    if (x.empty() || !seen.insert(x).second) {
      throw ValidationError("domain labels must be distinct nonempty strings");
    }
  }
}

void require_compatible(const PropFunction& p, const PropFunction& q) {
  if (p.domain() != q.domain()) {
    throw DomainMismatchError("functions have different domains");
  }
  if (!same_algebra(p.codomain(), q.codomain())) {
    throw DomainMismatchError("functions have different codomains");
  }
}

}  // namespace

PropFunction::PropFunction(std::vector<std::string> domain,
                           BoolAlgebraPtr codomain, std::vector<Mask> values)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(std::move(values)) {
  check_domain(domain_);
  if (!codomain_) throw ValidationError("codomain algebra is null");
  if (values_.size() != domain_.size()) {
    throw ValidationError("table must assign a value to every domain point");
  }
  for (Mask v : values_) {
    if (v > codomain_->full_mask()) {
      throw ValidationError("table value outside the codomain");
    }
  }
}

PropFunction PropFunction::constant(std::vector<std::string> domain,
                                    const Elem& value) {
  std::vector<Mask> values(domain.size(), value.mask());
  return PropFunction(std::move(domain), value.algebra(), std::move(values));
}

Elem PropFunction::value(std::size_t i) const {
  if (i >= values_.size()) throw ValidationError("domain index out of range");
  return codomain_->element(values_[i]);
}

Elem PropFunction::value_at(const std::string& x) const {
  auto it = std::find(domain_.begin(), domain_.end(), x);
  if (it == domain_.end()) {
    throw ValidationError("'" + x + "' is not a domain point");
  }
  return value(it - domain_.begin());
}

bool PropFunction::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](Mask v) { return v == values_[0]; });
}

std::string PropFunction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) out += ", ";
    out += domain_[i] + "->" + codomain_->element(values_[i]).to_string();
  }
  return out + "]";
}

bool operator==(const PropFunction& p, const PropFunction& q) {
  return p.domain_ == q.domain_ && same_algebra(p.codomain_, q.codomain_) &&
         p.values_ == q.values_;
}

PropFunction pointwise_meet(const PropFunction& p, const PropFunction& q) {
  require_compatible(p, q);
  std::vector<Mask> values(p.domain_size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = p.value_masks()[i] & q.value_masks()[i];
  }
  return PropFunction(p.domain(), p.codomain(), std::move(values));
}

PropFunction pointwise_join(const PropFunction& p, const PropFunction& q) {
  require_compatible(p, q);
  std::vector<Mask> values(p.domain_size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = p.value_masks()[i] | q.value_masks()[i];
  }
  return PropFunction(p.domain(), p.codomain(), std::move(values));
}

PropFunction pointwise_complement(const PropFunction& p) {
  const Mask full = p.codomain()->full_mask();
  std::vector<Mask> values(p.domain_size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = full & ~p.value_masks()[i];
  }
  return PropFunction(p.domain(), p.codomain(), std::move(values));
}

PropFunction pointwise(PointwiseOp op, const PropFunction& p,
                       const std::optional<PropFunction>& q) {
  switch (op) {
    case PointwiseOp::Complement:
      if (q.has_value()) {
        throw ValidationError("complement takes a single operand");
      }
      return pointwise_complement(p);
    case PointwiseOp::Meet:
      if (!q) throw ValidationError("meet needs a second operand");
      return pointwise_meet(p, *q);
    case PointwiseOp::Join:
      if (!q) throw ValidationError("join needs a second operand");
      return pointwise_join(p, *q);
  }
  throw ValidationError("unknown pointwise operation");
}

bool pointwise_leq(const PropFunction& p, const PropFunction& q) {
  require_compatible(p, q);
  for (std::size_t i = 0; i < p.domain_size(); ++i) {
    Mask a = p.value_masks()[i], b = q.value_masks()[i];
    if ((a & b) != a) return false;
  }
  return true;
}

std::vector<Elem> range_of(const PropFunction& p) {
  std::vector<Mask> masks = p.value_masks();
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Elem> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(p.codomain()->element(m));
  return out;
}

Elem sup_range(const PropFunction& p) {
  Mask acc = 0;
  for (Mask v : p.value_masks()) acc |= v;
  return p.codomain()->element(acc);
}

Elem inf_range(const PropFunction& p) {
  Mask acc = p.codomain()->full_mask();
  for (Mask v : p.value_masks()) acc &= v;
  return p.codomain()->element(acc);
}

PropFunction q_operator(const PropFunction& p) {
  return PropFunction::constant(p.domain(), sup_range(p));
}

PropFunction functional_quantifier(QuantKind kind, const PropFunction& p) {
  switch (kind) {
    case QuantKind::Exists: return q_operator(p);
    case QuantKind::Forall: return PropFunction::constant(p.domain(), inf_range(p));
  }
  throw ValidationError("unknown quantifier kind");
}

double function_space_size(const BoolAlgebraPtr& algebra,
                           std::size_t domain_size) {
  return std::pow(static_cast<double>(algebra->size()),
                  static_cast<double>(domain_size));
}

PropFunction function_at(const std::vector<std::string>& domain,
                         const BoolAlgebraPtr& algebra, std::uint64_t index) {
  const std::uint64_t base = algebra->size();
  std::vector<Mask> values(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    values[i] = static_cast<Mask>(index % base);
    index /= base;
  }
  return PropFunction(domain, algebra, std::move(values));
}

bool QPropertyReport::all_as_expected() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const FuncLawResult& r) { return r.as_expected(); });
}

const FuncLawResult& QPropertyReport::law(const std::string& name) const {
  for (const auto& r : laws) {
    if (r.law == name) return r;
  }
  throw ValidationError("no law named '" + name + "' in the report");
}

QPropertyReport check_q_properties(const BoolAlgebraPtr& algebra,
                                   const std::vector<std::string>& domain,
                                   bool unsafe) {
  check_domain(domain);
  const double space = function_space_size(algebra, domain.size());
  if (space > kMaxFunctionSpace && !unsafe) {
    throw GuardError(
        "function-space guard: |B|^|X| = " + std::to_string(space) + " > " +
            std::to_string(kMaxFunctionSpace),
        space);
  }
  if (space >= 9e15) {  // past exact integer range, the sweep is unreachable
    throw GuardError("function space too large to sweep at all", space);
  }

  const auto count = static_cast<std::uint64_t>(space);
  auto fn = [&](std::uint64_t k) { return function_at(domain, algebra, k); };

  QPropertyReport report{domain, algebra, {}};

  // unary sweep: first function violating pred(p), if any
  auto check1 = [&](const std::string& law, bool expect,
                    auto&& pred) {
    for (std::uint64_t k = 0; k < count; ++k) {
      PropFunction p = fn(k);
      if (!pred(p)) {
        report.laws.push_back({law, false, expect, p, std::nullopt});
        return;
      }
    }
    report.laws.push_back({law, true, expect, std::nullopt, std::nullopt});
  };
  // binary sweep
  auto check2 = [&](const std::string& law, bool expect, auto&& pred) {
    for (std::uint64_t i = 0; i < count; ++i) {
      PropFunction p = fn(i);
      for (std::uint64_t j = 0; j < count; ++j) {
        PropFunction q = fn(j);
        if (!pred(p, q)) {
          report.laws.push_back({law, false, expect, p, q});
          return;
        }
      }
    }
    report.laws.push_back({law, true, expect, std::nullopt, std::nullopt});
  };

  const PropFunction zero =
      PropFunction::constant(domain, algebra->zero());

  // P1: Q is normalized
  report.laws.push_back(
      {"P1", q_operator(zero) == zero, true, std::nullopt, std::nullopt});
  // P2: Q is increasing
  check1("P2", true,
         [](const PropFunction& p) { return pointwise_leq(p, q_operator(p)); });
  // P3: Q distributes over ∨
  check2("P3", true, [](const PropFunction& p, const PropFunction& q) {
    return q_operator(pointwise_join(p, q)) ==
           pointwise_join(q_operator(p), q_operator(q));
  });
  // P4: Q is idempotent
  check1("P4", true, [](const PropFunction& p) {
    return q_operator(q_operator(p)) == q_operator(p);
  });
  // P5: Q(Qp)' = (Qp)'
  check1("P5", true, [](const PropFunction& p) {
    PropFunction qpc = pointwise_complement(q_operator(p));
    return q_operator(qpc) == qpc;
  });
  // P6: Q(p') = (Qp)' — fails unrestricted, holds for constant p
  auto p6 = [](const PropFunction& p) {
    return q_operator(pointwise_complement(p)) ==
           pointwise_complement(q_operator(p));
  };
  check1("P6", false, p6);
  check1("P6|A0", true, [&](const PropFunction& p) {
    return !p.is_constant() || p6(p);
  });
  // P7: Q is quasi-multiplicative over ∧
  check2("P7", true, [](const PropFunction& p, const PropFunction& q) {
    return q_operator(pointwise_meet(p, q_operator(q))) ==
           pointwise_meet(q_operator(p), q_operator(q));
  });
  // P8: Q(p ∧ q) = Qp ∧ q — fails unrestricted, holds for constant q
  auto p8 = [](const PropFunction& p, const PropFunction& q) {
    return q_operator(pointwise_meet(p, q)) ==
           pointwise_meet(q_operator(p), q);
  };
  check2("P8", false, p8);
  check2("P8|A0", true, [&](const PropFunction& p, const PropFunction& q) {
    return !q.is_constant() || p8(p, q);
  });

  return report;
}

}  // namespace plaus
