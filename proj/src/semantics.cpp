#include "plaus/semantics.hpp"

#include <algorithm>
#include <cmath>

namespace plaus {

PTStructure::PTStructure(std::vector<std::string> domain,
                         std::map<std::string, PredInterp> predicates,
                         PseudoTopology opens)
    : domain_(std::move(domain)),
      predicates_(std::move(predicates)),
      opens_(std::move(opens)) {
  if (domain_.empty()) throw ValidationError("structure domain must be nonempty");
  if (opens_.carrier() != domain_) {
    throw ValidationError("pseudo-topology carrier must equal the domain");
  }
  const int n = static_cast<int>(domain_.size());
  for (const auto& [name, interp] : predicates_) {
    if (interp.arity <= 0) {
      throw ValidationError("predicate '" + name + "' needs positive arity");
    }
    for (const auto& tuple : interp.tuples) {
      if (static_cast<int>(tuple.size()) != interp.arity) {
        throw ValidationError("tuple arity mismatch for predicate '" + name +
                              "'");
      }
      for (int idx : tuple) {
        if (idx < 0 || idx >= n) {
          throw ValidationError("tuple of predicate '" + name +
                                "' leaves the domain");
        }
      }
    }
  }
}

bool PTStructure::holds(const std::string& predicate,
                        const std::vector<int>& tuple) const {
  auto it = predicates_.find(predicate);
  if (it == predicates_.end()) return false;
  if (static_cast<int>(tuple.size()) != it->second.arity) {
    throw ValidationError("predicate '" + predicate + "' has arity " +
                          std::to_string(it->second.arity) + ", applied to " +
                          std::to_string(tuple.size()) + " arguments");
  }
  return it->second.tuples.count(tuple) > 0;
}

int PTStructure::element_index(const std::string& label) const {
  auto it = std::find(domain_.begin(), domain_.end(), label);
  return it == domain_.end() ? -1 : static_cast<int>(it - domain_.begin());
}

namespace {

int lookup(const Assignment& sigma, const std::string& var) {
  auto it = sigma.find(var);
  if (it == sigma.end()) {
    throw PreconditionError("assignment misses free variable '" + var + "'");
  }
  return it->second;
}

bool eval(const PTStructure& k, const Formula& f, Assignment& sigma) {
  switch (f.kind()) {
    case FormulaKind::Pred: {
      std::vector<int> tuple;
      tuple.reserve(f.args().size());
      for (const auto& v : f.args()) tuple.push_back(lookup(sigma, v));
      return k.holds(f.name(), tuple);
    }
    case FormulaKind::Equal:
      return lookup(sigma, f.args()[0]) == lookup(sigma, f.args()[1]);
    case FormulaKind::Not:
      return !eval(k, *f.lhs(), sigma);
    case FormulaKind::And:
      return eval(k, *f.lhs(), sigma) && eval(k, *f.rhs(), sigma);
    case FormulaKind::Or:
      return eval(k, *f.lhs(), sigma) || eval(k, *f.rhs(), sigma);
    case FormulaKind::Implies:
      return !eval(k, *f.lhs(), sigma) || eval(k, *f.rhs(), sigma);
    case FormulaKind::Iff:
      return eval(k, *f.lhs(), sigma) == eval(k, *f.rhs(), sigma);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
    case FormulaKind::Ubiq: {
      const std::string& x = f.name();
      auto saved = sigma.find(x) != sigma.end()
                       ? std::optional<int>(sigma[x])
                       : std::nullopt;
      Mask sat = 0;
      for (int b = 0; b < k.domain_size(); ++b) {
        sigma[x] = b;
        if (eval(k, *f.lhs(), sigma)) sat |= Mask{1} << b;
      }
      if (saved) sigma[x] = *saved; else sigma.erase(x);
      const Mask all = (Mask{1} << k.domain_size()) - 1;
      switch (f.kind()) {
        case FormulaKind::Forall: return sat == all;
        case FormulaKind::Exists: return sat != 0;
        default: return k.opens().is_open_member(sat);
      }
    }
  }
  throw ValidationError("unknown formula node");
}

}  // namespace

bool satisfies(const PTStructure& structure, const FormulaPtr& formula,
               const Assignment& assignment) {
  if (!formula) throw ValidationError("null formula");
  for (const auto& v : formula->free_variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw PreconditionError("assignment misses free variable '" + v + "'");
    }
    if (it->second < 0 || it->second >= structure.domain_size()) {
      throw PreconditionError("assignment sends '" + v +
                              "' outside the domain");
    }
  }
  infer_signature(formula);  // arity consistency
  Assignment sigma = assignment;
  return eval(structure, *formula, sigma);
}

namespace {

std::vector<std::string> default_domain(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, 'a' + i));
  return out;
}

}  // namespace

double estimate_structure_count(const Signature& signature, int max_domain) {
  double total = 0;
  for (int n = 1; n <= max_domain; ++n) {
    double bits = 0;
    for (const auto& [name, arity] : signature) {
      (void)name;
      bits += std::pow(static_cast<double>(n), arity);
    }
    double spaces =
        n <= kMaxSpaceCarrier
            ? static_cast<double>(enumerate_spaces(default_domain(n)).size())
            : space_enumeration_cost(n);
    total += std::pow(2.0, bits) * spaces;
  }
  return total;
}

namespace {

// all arity-tuples over [0, n), leftmost position most significant
std::vector<std::vector<int>> tuple_space(int n, int arity) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(arity, 0);
  while (true) {
    out.push_back(tuple);
    int i = arity - 1;
    while (i >= 0 && ++tuple[i] == n) tuple[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace

void for_each_structure(const Signature& signature, int max_domain,
                        const std::function<bool(const PTStructure&)>& visit,
                        bool unsafe) {
  if (max_domain < 1) {
    throw PreconditionError("max_domain must be at least 1");
  }
  for (const auto& [name, arity] : signature) {
    if (arity <= 0) {
      throw ValidationError("predicate '" + name + "' needs positive arity");
    }
  }
  const double estimate = estimate_structure_count(signature, max_domain);
  if (!unsafe && (max_domain > kMaxStructureDomain ||
                  estimate > kMaxStructureSweep)) {
    throw GuardError("structure sweep guard: ~" + std::to_string(estimate) +
                         " structures up to domain size " +
                         std::to_string(max_domain),
                     estimate);
  }

  for (int n = 1; n <= max_domain; ++n) {
    const auto domain = default_domain(n);
    const auto spaces = enumerate_spaces(domain, unsafe);

    // predicate blocks in lexicographic name order; the interpretation
    // odometer increments the last block fastest, so the first predicate is
    // the most significant digit
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<int>>> tuples;
    for (const auto& [name, arity] : signature) {
      names.push_back(name);
      tuples.push_back(tuple_space(n, arity));
      if (tuples.back().size() >= 63) {
        throw GuardError("interpretation table of '" + name +
                             "' cannot be swept at domain size " +
                             std::to_string(n),
                         estimate);
      }
    }
    std::vector<std::uint64_t> counters(names.size(), 0);

    while (true) {
      std::map<std::string, PredInterp> interp;
      for (std::size_t i = 0; i < names.size(); ++i) {
        PredInterp pi;
        pi.arity = static_cast<int>(tuples[i].empty() ? 0 : tuples[i][0].size());
        for (std::size_t t = 0; t < tuples[i].size(); ++t) {
          if (counters[i] >> t & 1) pi.tuples.insert(tuples[i][t]);
        }
        interp.emplace(names[i], std::move(pi));
      }
      for (const auto& space : spaces) {
        PTStructure structure(domain, interp, space);
        if (!visit(structure)) return;
      }
      // advance the odometer
      int i = static_cast<int>(names.size()) - 1;
      while (i >= 0) {
        counters[i] += 1;
        if (counters[i] < (std::uint64_t{1} << tuples[i].size())) break;
        counters[i--] = 0;
      }
      if (i < 0) break;
    }
  }
}

std::vector<PTStructure> enumerate_structures(const Signature& signature,
                                              int max_domain, bool unsafe) {
  std::vector<PTStructure> out;
  for_each_structure(
      signature, max_domain,
      [&](const PTStructure& k) {
        out.push_back(k);
        return true;
      },
      unsafe);
  return out;
}

Verdict check_validity_in(const FormulaPtr& formula, const Signature& signature,
                          int max_domain, bool unsafe) {
  if (!formula) throw ValidationError("null formula");
  if (!formula->is_sentence()) {
    std::string vars;
    for (const auto& v : formula->free_variables()) {
      if (!vars.empty()) vars += ", ";
      vars += v;
    }
    throw PreconditionError("validity needs a sentence; free variables: " +
                            vars);
  }
  Signature sig = signature;
  for (const auto& [name, arity] : infer_signature(formula)) {
    auto [it, inserted] = sig.emplace(name, arity);
    if (!inserted && it->second != arity) {
      throw ValidationError("signature conflicts with the formula on '" +
                            name + "'");
    }
  }
  Verdict verdict;
  verdict.valid = true;
  verdict.max_domain = max_domain;
  verdict.formula = formula;
  for_each_structure(
      sig, max_domain,
      [&](const PTStructure& k) {
        if (!satisfies(k, formula)) {
          verdict.valid = false;
          verdict.countermodel = k;
          return false;
        }
        return true;
      },
      unsafe);
  return verdict;
}

Verdict check_validity(const FormulaPtr& formula, int max_domain, bool unsafe) {
  if (!formula) throw ValidationError("null formula");
  return check_validity_in(formula, infer_signature(formula), max_domain,
                           unsafe);
}

const std::vector<std::pair<std::string, std::string>>& axiom_schemas() {
  static const std::vector<std::pair<std::string, std::string>> schemas = {
      {"Ax1", "(U x P(x) & U x Q(x)) -> U x (P(x) & Q(x))"},
      {"Ax2", "(U x P(x) & U x Q(x)) -> U x (P(x) | Q(x))"},
      {"Ax3", "forall x P(x) -> U x P(x)"},
      {"Ax4", "U x P(x) -> exists x P(x)"},
      {"Ax5", "(forall x (P(x) <-> Q(x))) -> (U x P(x) <-> U x Q(x))"},
      {"Ax6", "U x P(x) -> U y P(y)"},
      {"T1.i", "U x (P(x) | ~P(x))"},
      {"T1.ii", "(U x P(x) & U x Q(x)) -> exists x (P(x) & Q(x))"},
      {"T1.iii", "U x P(x) -> ~ U x ~P(x)"},
  };
  return schemas;
}

std::vector<AxiomResult> axiom_suite(int max_domain, bool unsafe) {
  const Signature signature{{"P", 1}, {"Q", 1}};
  std::vector<AxiomResult> out;
  for (const auto& [name, text] : axiom_schemas()) {
    FormulaPtr formula = parse_formula(text);
    out.push_back(
        {name, text, check_validity_in(formula, signature, max_domain, unsafe)});
  }
  return out;
}

}  // namespace plaus
