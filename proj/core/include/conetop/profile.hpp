#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <conetop/cone_space.hpp>
#include <conetop/witness.hpp>

namespace conetop {

// Properties recorded by a profile, strongest compactness notions first.
enum class PropertyName {
  t0,
  t1,
  hausdorff,
  compact,
  omega_bounded,
  totally_countably_compact,
  sequentially_compact,
  countably_compact,
  two_pseudocompact,
  countably_pracompact,
  pseudocompact,
  precompact,
  finally_compact,
  left_omega_precompact,
  p_space,
  topologically_periodic,
  baire_conditional,
};

const char* property_str(PropertyName p);
std::optional<PropertyName> parse_property(const std::string& s);
const std::vector<PropertyName>& all_properties();

struct Verdict {
  bool holds = false;
  std::string basis;  // the characterization the verdict was decided by
  std::optional<Certificate> certificate;
  bool operator==(const Verdict&) const = default;
};

struct PropertyProfile {
  Variant variant = Variant::cone;
  // insertion-ordered; cone profiles omit p_space, and baire_conditional
  // appears only on cone_star profiles that are countably pracompact
  std::vector<std::pair<PropertyName, Verdict>> verdicts;
  std::vector<std::string> annotations;

  const Verdict* find(PropertyName p) const;
  // nullopt when the property is not recorded for this variant
  std::optional<bool> holds(PropertyName p) const;
  bool operator==(const PropertyProfile&) const = default;
};

// Decides every recorded property from the monoid invariants and attaches
// witness certificates where the makers provide them.
PropertyProfile evaluate(const ConeSpace& sp);

// Violations of the fixed implication chain between recorded verdicts.
std::vector<std::string> check_implications(const PropertyProfile& p);

// Monotone-transfer and equivalence checks between the two variants of the
// same instance; both profiles must describe the same monoid.
std::vector<std::string> cross_variant_check(const PropertyProfile& p_cone,
                                             const PropertyProfile& p_star);

}  // namespace conetop
