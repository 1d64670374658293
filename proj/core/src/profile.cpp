#include <conetop/profile.hpp>

#include <algorithm>

namespace conetop {

const char* property_str(PropertyName p) {
  switch (p) {
    case PropertyName::t0: return "T0";
    case PropertyName::t1: return "T1";
    case PropertyName::hausdorff: return "HAUSDORFF";
    case PropertyName::compact: return "COMPACT";
    case PropertyName::omega_bounded: return "OMEGA_BOUNDED";
    case PropertyName::totally_countably_compact: return "TOTALLY_COUNTABLY_COMPACT";
    case PropertyName::sequentially_compact: return "SEQUENTIALLY_COMPACT";
    case PropertyName::countably_compact: return "COUNTABLY_COMPACT";
    case PropertyName::two_pseudocompact: return "TWO_PSEUDOCOMPACT";
    case PropertyName::countably_pracompact: return "COUNTABLY_PRACOMPACT";
    case PropertyName::pseudocompact: return "PSEUDOCOMPACT";
    case PropertyName::precompact: return "PRECOMPACT";
    case PropertyName::finally_compact: return "FINALLY_COMPACT";
    case PropertyName::left_omega_precompact: return "LEFT_OMEGA_PRECOMPACT";
    case PropertyName::p_space: return "P_SPACE";
    case PropertyName::topologically_periodic: return "TOPOLOGICALLY_PERIODIC";
    case PropertyName::baire_conditional: return "BAIRE_CONDITIONAL";
  }
  throw internal_error("unknown property name");
}

const std::vector<PropertyName>& all_properties() {
  static const std::vector<PropertyName> names = {
      PropertyName::t0,
      PropertyName::t1,
      PropertyName::hausdorff,
      PropertyName::compact,
      PropertyName::omega_bounded,
      PropertyName::totally_countably_compact,
      PropertyName::sequentially_compact,
      PropertyName::countably_compact,
      PropertyName::two_pseudocompact,
      PropertyName::countably_pracompact,
      PropertyName::pseudocompact,
      PropertyName::precompact,
      PropertyName::finally_compact,
      PropertyName::left_omega_precompact,
      PropertyName::p_space,
      PropertyName::topologically_periodic,
      PropertyName::baire_conditional,
  };
  return names;
}

std::optional<PropertyName> parse_property(const std::string& s) {
  for (PropertyName p : all_properties())
    if (s == property_str(p)) return p;
  return std::nullopt;
}

const Verdict* PropertyProfile::find(PropertyName p) const {
  for (const auto& [name, v] : verdicts)
    if (name == p) return &v;
  return nullptr;
}

std::optional<bool> PropertyProfile::holds(PropertyName p) const {
  const Verdict* v = find(p);
  if (!v) return std::nullopt;
  return v->holds;
}

namespace {

struct Facts {
  bool trivial;        // S = {0}
  bool group;          // S = -S
  bool finite_index;   // |G : span(S)| finite
  bool group_finite;   // group and finite index
  bool major;          // every countable subset of S is majorized
  bool cofinal;        // S has a countable cofinal subset
  bool periodic_quot;  // S a subgroup with periodic G/S
};

Facts gather(const Monoid& m) {
  Facts f;
  f.trivial = m.is_trivial();
  f.group = m.is_group();
  f.finite_index = bool(m.span().index());
  f.group_finite = f.group && f.finite_index;
  f.major = m.majorization().holds;
  f.cofinal = m.countable_cofinal_exists();
  f.periodic_quot = f.group && m.span().quotient_is_periodic();
  return f;
}

void push(PropertyProfile& pr, PropertyName name, bool holds, std::string basis,
          std::optional<Certificate> cert = std::nullopt) {
  Verdict v;
  v.holds = holds;
  v.basis = std::move(basis);
  v.certificate = std::move(cert);
  pr.verdicts.emplace_back(name, std::move(v));
}

const std::string group_finite_basis = "holds iff S is a subgroup of finite index";
const std::string finite_index_basis = "holds iff the index of span(S) in G is finite";
const std::string major_basis =
    "holds iff the index of span(S) in G is finite and every countable subset of S is "
    "majorized by one member";
const std::string countable_carrier_basis =
    "a finitely generated group is countable, so countably many translates of any nonempty "
    "open set cover it";
const std::string periodic_basis = "holds iff S is a subgroup and G/S is periodic";

void evaluate_cone(PropertyProfile& pr, const ConeSpace& sp, const Facts& f) {
  const Monoid& m = *sp.monoid;
  push(pr, PropertyName::t0, m.units().is_trivial(),
       "holds iff the unit subgroup S and -S share only zero",
       m.units().is_trivial() ? std::nullopt : make_non_t0(m));
  push(pr, PropertyName::t1, f.trivial, "holds iff S is the zero monoid");
  push(pr, PropertyName::hausdorff, f.trivial, "holds iff S is the zero monoid");
  push(pr, PropertyName::compact, f.group_finite, group_finite_basis,
       f.group_finite ? make_transversal(sp) : std::nullopt);
  push(pr, PropertyName::omega_bounded, f.group_finite, group_finite_basis);
  push(pr, PropertyName::totally_countably_compact, f.group_finite, group_finite_basis);
  bool seq = f.finite_index && f.major;
  push(pr, PropertyName::sequentially_compact, seq, major_basis,
       seq ? std::nullopt : make_major_fail(m));
  push(pr, PropertyName::countably_compact, seq, major_basis);
  push(pr, PropertyName::two_pseudocompact, seq, major_basis,
       seq ? std::nullopt : make_2pc_failing_chain(sp));
  push(pr, PropertyName::countably_pracompact, f.finite_index, finite_index_basis);
  push(pr, PropertyName::pseudocompact, f.finite_index, finite_index_basis,
       f.finite_index ? std::nullopt : make_nonpseudocompact_family(sp));
  push(pr, PropertyName::precompact, f.group_finite, group_finite_basis);
  push(pr, PropertyName::finally_compact, true,
       "equivalent to left omega-precompactness here; " + countable_carrier_basis);
  push(pr, PropertyName::left_omega_precompact, true, countable_carrier_basis);
  push(pr, PropertyName::topologically_periodic, f.periodic_quot, periodic_basis);
  if (seq) pr.annotations.push_back("each power of the space is countably compact");
  if (f.finite_index)
    pr.annotations.push_back("each power of the space is countably pracompact");
}

void evaluate_star(PropertyProfile& pr, const ConeSpace& sp, const Facts& f) {
  const Monoid& m = *sp.monoid;
  bool t0 = f.trivial || !f.group;
  push(pr, PropertyName::t0, t0,
       "holds iff S is the zero monoid or S is not a group",
       t0 ? std::nullopt : make_non_t0(m));
  push(pr, PropertyName::t1, t0, "holds iff S is the zero monoid or S is not a group");
  push(pr, PropertyName::hausdorff, f.trivial, "holds iff S is the zero monoid");
  push(pr, PropertyName::compact, f.group_finite, group_finite_basis,
       f.group_finite ? make_transversal(sp) : std::nullopt);
  push(pr, PropertyName::omega_bounded, f.group_finite, group_finite_basis);
  push(pr, PropertyName::totally_countably_compact, f.group_finite, group_finite_basis);
  push(pr, PropertyName::sequentially_compact, f.group_finite, group_finite_basis);
  push(pr, PropertyName::countably_compact, f.group_finite, group_finite_basis);
  bool tpc = f.finite_index && f.major;
  push(pr, PropertyName::two_pseudocompact, tpc, major_basis,
       tpc ? std::nullopt : make_2pc_failing_chain(sp));
  bool cp = f.finite_index && f.cofinal;
  push(pr, PropertyName::countably_pracompact, cp,
       "holds iff the index of span(S) in G is finite and S has a countable cofinal "
       "subset; " + Monoid::countable_cofinal_justification());
  push(pr, PropertyName::pseudocompact, f.finite_index, finite_index_basis,
       f.finite_index ? std::nullopt : make_nonpseudocompact_family(sp));
  push(pr, PropertyName::precompact, f.group_finite, group_finite_basis);
  push(pr, PropertyName::finally_compact, true,
       "equivalent to left omega-precompactness here; " + countable_carrier_basis);
  push(pr, PropertyName::left_omega_precompact, true, countable_carrier_basis);
  push(pr, PropertyName::p_space, f.major,
       "holds iff every countable subset of S is majorized by one member",
       f.major ? std::nullopt : make_p_space_refuter(sp));
  push(pr, PropertyName::topologically_periodic, f.periodic_quot, periodic_basis);
  if (cp) {
    push(pr, PropertyName::baire_conditional, f.group,
         "under countable pracompactness, Baire holds iff S is a group");
    pr.annotations.push_back("each power of the space is countably pracompact");
  }
  if (tpc)
    pr.annotations.push_back(
        "each finite power of the space is 2-pseudocompact, and so is each power of span(S)");
}

}  // namespace

PropertyProfile evaluate(const ConeSpace& sp) {
  PropertyProfile pr;
  pr.variant = sp.variant;
  Facts f = gather(*sp.monoid);
  if (sp.variant == Variant::cone)
    evaluate_cone(pr, sp, f);
  else
    evaluate_star(pr, sp, f);
  return pr;
}

namespace {

void check_arrow(const PropertyProfile& p, PropertyName from, PropertyName to,
                 std::vector<std::string>& out) {
  std::optional<bool> a = p.holds(from);
  std::optional<bool> b = p.holds(to);
  if (a && b && *a && !*b)
    out.push_back(std::string(property_str(from)) + " holds but " + property_str(to) +
                  " fails");
}

}  // namespace

std::vector<std::string> check_implications(const PropertyProfile& p) {
  std::vector<std::string> out;
  using P = PropertyName;
  check_arrow(p, P::compact, P::omega_bounded, out);
  check_arrow(p, P::omega_bounded, P::totally_countably_compact, out);
  check_arrow(p, P::totally_countably_compact, P::countably_compact, out);
  check_arrow(p, P::countably_compact, P::countably_pracompact, out);
  check_arrow(p, P::countably_pracompact, P::pseudocompact, out);
  check_arrow(p, P::sequentially_compact, P::countably_compact, out);
  check_arrow(p, P::countably_compact, P::two_pseudocompact, out);
  std::optional<bool> c = p.holds(P::compact);
  std::optional<bool> cc = p.holds(P::countably_compact);
  std::optional<bool> fc = p.holds(P::finally_compact);
  if (c && cc && fc && *c != (*cc && *fc))
    out.push_back("COMPACT must agree with COUNTABLY_COMPACT and FINALLY_COMPACT together");
  return out;
}

std::vector<std::string> cross_variant_check(const PropertyProfile& p_cone,
                                             const PropertyProfile& p_star) {
  std::vector<std::string> out;
  if (p_cone.variant != Variant::cone || p_star.variant != Variant::cone_star) {
    out.push_back("profiles passed in the wrong variant order");
    return out;
  }
  using P = PropertyName;
  for (P p : {P::compact, P::countably_compact, P::sequentially_compact, P::two_pseudocompact,
              P::pseudocompact, P::countably_pracompact, P::precompact}) {
    std::optional<bool> s = p_star.holds(p);
    std::optional<bool> c = p_cone.holds(p);
    if (s && c && *s && !*c)
      out.push_back(std::string(property_str(p)) +
                    " holds in the finer variant but fails in the coarser one");
  }
  std::optional<bool> s2pc = p_star.holds(P::two_pseudocompact);
  std::optional<bool> scomp = p_star.holds(P::compact);
  if (s2pc && scomp && *s2pc != *scomp)
    out.push_back("star 2-pseudocompactness must coincide with star compactness on a "
                  "countable carrier");
  std::optional<bool> scp = p_star.holds(P::countably_pracompact);
  if (scomp && scp && s2pc && *scomp != (*scp && *s2pc))
    out.push_back("star compactness must agree with star countable pracompactness and star "
                  "2-pseudocompactness together");
  std::optional<bool> spc = p_star.holds(P::pseudocompact);
  std::optional<bool> sps = p_star.holds(P::p_space);
  if (s2pc && spc && sps && *s2pc != (*spc && *sps))
    out.push_back("star 2-pseudocompactness must agree with star pseudocompactness on a "
                  "P-space");
  return out;
}

}  // namespace conetop
