#include "plaus/pseudotop.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace plaus {

namespace {

std::string mask_text(const std::vector<std::string>& carrier, Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (m >> i & 1) {
      if (!first) out += ",";
      out += carrier[i];
      first = false;
    }
  }
  return out + "}";
}

void check_carrier(const std::vector<std::string>& carrier) {
  if (carrier.empty()) {
    throw ValidationError("carrier must be nonempty");
  }
  if (carrier.size() > 20) {
    throw ValidationError("carrier limited to 20 points");
  }
  std::set<std::string> seen;
  for (const auto& label : carrier) {
    if (label.empty() || !seen.insert(label).second) {
      throw ValidationError("carrier labels must be distinct nonempty strings");
    }
  }
}

}  // namespace

PseudoTopology PseudoTopology::validate(std::vector<std::string> carrier,
                                        std::vector<Mask> opens) {
  check_carrier(carrier);
  const Mask full = (Mask{1} << carrier.size()) - 1;

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  for (Mask open : opens) {
    if (open > full) {
      throw ValidationError("open set is not a subset of the carrier");
    }
  }
  for (Mask open : opens) {
    if (open == 0) {
      throw ValidationError(
          "clause (iv) violated: the empty set is listed as open");
    }
  }
  if (!std::binary_search(opens.begin(), opens.end(), full)) {
    throw ValidationError("clause (iii) violated: the carrier " +
                          mask_text(carrier, full) + " is not open");
  }
  for (Mask a : opens) {
    for (Mask b : opens) {
      Mask inter = a & b;
      if (!std::binary_search(opens.begin(), opens.end(), inter)) {
        throw ValidationError("clause (i) violated: " +
                              mask_text(carrier, a) + " ∩ " +
                              mask_text(carrier, b) + " = " +
                              mask_text(carrier, inter) + " is not open");
      }
      Mask uni = a | b;
      if (!std::binary_search(opens.begin(), opens.end(), uni)) {
        throw ValidationError("clause (ii) violated: " +
                              mask_text(carrier, a) + " ∪ " +
                              mask_text(carrier, b) + " = " +
                              mask_text(carrier, uni) + " is not open");
      }
    }
  }
  return PseudoTopology(std::move(carrier), std::move(opens));
}

PseudoTopology PseudoTopology::validate_labels(
    std::vector<std::string> carrier,
    const std::vector<std::vector<std::string>>& opens) {
  check_carrier(carrier);
  std::vector<Mask> masks;
  masks.reserve(opens.size());
  for (const auto& labels : opens) {
    Mask m = 0;
    for (const auto& label : labels) {
      auto it = std::find(carrier.begin(), carrier.end(), label);
      if (it == carrier.end()) {
        throw ValidationError("open set mentions unknown point '" + label +
                              "'");
      }
      m |= Mask{1} << (it - carrier.begin());
    }
    masks.push_back(m);
  }
  return validate(std::move(carrier), std::move(masks));
}

bool PseudoTopology::is_open_member(Mask subset) const {
  return std::binary_search(opens_.begin(), opens_.end(), subset);
}

Mask PseudoTopology::interior(Mask subset) const {
  require_subset(subset);
  Mask out = 0;
  for (Mask open : opens_) {
    if ((open & subset) == open) out |= open;
  }
  return out;
}

bool PseudoTopology::reports_open(Mask subset) const {
  Mask inner = interior(subset);
  return (subset & inner) == subset;
}

bool PseudoTopology::is_closed(Mask subset) const {
  require_subset(subset);
  return is_open_member(full_mask() & ~subset);
}

Mask PseudoTopology::subset_from_labels(
    const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& label : labels) {
    auto it = std::find(carrier_.begin(), carrier_.end(), label);
    if (it == carrier_.end()) {
      throw PreconditionError("'" + label + "' is not a carrier point");
    }
    m |= Mask{1} << (it - carrier_.begin());
  }
  return m;
}

std::vector<std::string> PseudoTopology::subset_labels(Mask subset) const {
  require_subset(subset);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (subset >> i & 1) out.push_back(carrier_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void PseudoTopology::require_subset(Mask subset) const {
  if (subset > full_mask()) {
    throw PreconditionError("subset is not contained in the carrier");
  }
}

double space_enumeration_cost(int carrier_size) {
  // candidate families: all subsets of the nonempty proper subsets
  return std::pow(2.0, std::pow(2.0, carrier_size) - 2.0);
}

std::vector<PseudoTopology> enumerate_spaces(
    const std::vector<std::string>& carrier, bool unsafe) {
  check_carrier(carrier);
  const int n = static_cast<int>(carrier.size());
  if (n > kMaxSpaceCarrier && !unsafe) {
    throw GuardError("space enumeration guard: |E| = " + std::to_string(n) +
                         " > " + std::to_string(kMaxSpaceCarrier) +
                         " would sweep ~" +
                         std::to_string(space_enumeration_cost(n)) +
                         " candidate families",
                     space_enumeration_cost(n));
  }

  const Mask full = (Mask{1} << n) - 1;
  // proper nonempty subsets are the masks 1 .. full-1
  const std::uint64_t proper = full >= 1 ? full - 1 : 0;
  if (proper >= 63) {
    throw GuardError("space enumeration cannot sweep 2^" +
                         std::to_string(proper) + " candidate families",
                     space_enumeration_cost(n));
  }
  std::vector<PseudoTopology> out;

  for (std::uint64_t family = 0; family < (std::uint64_t{1} << proper);
       ++family) {
    std::vector<Mask> opens;
    for (std::uint64_t i = 0; i < proper; ++i) {
      if (family >> i & 1) opens.push_back(static_cast<Mask>(i + 1));
    }
    opens.push_back(full);

    bool ok = true;
    for (std::size_t i = 0; i < opens.size() && ok; ++i) {
      for (std::size_t j = i; j < opens.size() && ok; ++j) {
        Mask inter = opens[i] & opens[j];
        Mask uni = opens[i] | opens[j];
        if (inter == 0 ||
            !std::binary_search(opens.begin(), opens.end(), inter) ||
            !std::binary_search(opens.begin(), opens.end(), uni)) {
          ok = false;
        }
      }
    }
    if (ok) {
      out.push_back(PseudoTopology::validate(carrier, std::move(opens)));
    }
  }
  return out;
}

}  // namespace plaus
