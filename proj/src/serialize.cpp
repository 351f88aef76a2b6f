#include "plaus/serialize.hpp"

#include <algorithm>

namespace plaus {

Json elem_to_json(const Elem& e) { return Json(e.labels()); }

Json algebra_to_json(const BoolAlgebraPtr& algebra) {
  return Json{{"atoms", algebra->atom_labels()}};
}

Json prop_function_to_json(const PropFunction& p) {
  Json out = Json::object();
  for (std::size_t i = 0; i < p.domain_size(); ++i) {
    out[p.domain()[i]] = elem_to_json(p.value(i));
  }
  return out;
}

namespace {

Json table_to_json(const BoolAlgebraPtr& algebra,
                   const std::vector<Mask>& table) {
  Json out = Json::array();
  for (Mask p = 0; p < table.size(); ++p) {
    out.push_back(Json::array({elem_to_json(algebra->element(p)),
                               elem_to_json(algebra->element(table[p]))}));
  }
  return out;
}

}  // namespace

Json quantifier_to_json(const Quantifier& q) {
  return table_to_json(q.algebra(), q.table());
}

Json upsilon_table_to_json(const UbiquityAlgebra& u) {
  return table_to_json(u.algebra(), u.upsilon_table());
}

Json ideal_to_json(const Ideal& ideal) {
  Json out = Json::array();
  for (Mask m : ideal.members()) {
    out.push_back(elem_to_json(ideal.algebra()->element(m)));
  }
  return out;
}

Json ubiquity_to_json(const UbiquityAlgebra& u) {
  return Json{{"algebra", algebra_to_json(u.algebra())},
              {"exists", quantifier_to_json(u.base().quantifier())},
              {"upsilon", upsilon_table_to_json(u)}};
}

Json space_to_json(const PseudoTopology& space) {
  std::vector<std::vector<std::string>> opens;
  opens.reserve(space.opens().size());
  for (Mask open : space.opens()) {
    opens.push_back(space.subset_labels(open));
  }
  std::sort(opens.begin(), opens.end());
  return Json{{"domain", space.carrier()}, {"opens", opens}};
}

PseudoTopology space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("opens")) {
    throw ValidationError("space json needs 'domain' and 'opens'");
  }
  return PseudoTopology::validate_labels(
      j.at("domain").get<std::vector<std::string>>(),
      j.at("opens").get<std::vector<std::vector<std::string>>>());
}

Json structure_to_json(const PTStructure& k) {
  Json predicates = Json::object();
  for (const auto& [name, interp] : k.predicates()) {
    Json tuples = Json::array();
    for (const auto& tuple : interp.tuples) {
      Json labels = Json::array();
      for (int idx : tuple) labels.push_back(k.domain()[idx]);
      tuples.push_back(labels);
    }
    predicates[name] = tuples;
  }
  Json out = space_to_json(k.opens());
  out["predicates"] = predicates;
  return out;
}

PTStructure structure_from_json(const Json& j) {
  PseudoTopology space = space_from_json(j);
  const std::vector<std::string> domain = space.carrier();
  std::map<std::string, PredInterp> predicates;
  if (j.contains("predicates")) {
    if (!j.at("predicates").is_object()) {
      throw ValidationError("'predicates' must be an object");
    }
    for (const auto& [name, tuples] : j.at("predicates").items()) {
      PredInterp interp;
      interp.arity = -1;
      for (const auto& tuple : tuples) {
        std::vector<int> indices;
        for (const auto& label : tuple) {
          auto it = std::find(domain.begin(), domain.end(),
                              label.get<std::string>());
          if (it == domain.end()) {
            throw ValidationError("predicate '" + name +
                                  "' mentions unknown element '" +
                                  label.get<std::string>() + "'");
          }
          indices.push_back(static_cast<int>(it - domain.begin()));
        }
        if (interp.arity < 0) {
          interp.arity = static_cast<int>(indices.size());
        } else if (interp.arity != static_cast<int>(indices.size())) {
          throw ValidationError("predicate '" + name +
                                "' has tuples of mixed arity");
        }
        interp.tuples.insert(std::move(indices));
      }
      if (interp.arity > 0) predicates.emplace(name, std::move(interp));
    }
  }
  return PTStructure(domain, std::move(predicates), std::move(space));
}

Json verdict_to_json(const Verdict& verdict) {
  Json out{{"formula", print_formula(verdict.formula)},
           {"max_domain", verdict.max_domain},
           {"status", verdict.valid ? "valid" : "invalid"}};
  if (!verdict.valid && verdict.countermodel) {
    out["countermodel"] = structure_to_json(*verdict.countermodel);
    Json sigma = Json::object();
    for (const auto& [var, idx] : verdict.assignment) {
      sigma[var] = verdict.countermodel->domain()[idx];
    }
    out["assignment"] = sigma;
  }
  return out;
}

}  // namespace plaus
