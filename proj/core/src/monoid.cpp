#include <conetop/monoid.hpp>

#include <functional>
#include <map>

namespace conetop {

namespace {

IntVec free_part(const GroupSpec& g, const GroupElement& x) {
  return IntVec(x.coords.begin(), x.coords.begin() + g.rank);
}

constexpr long k_multiple_search_limit = 100000;

}  // namespace

Monoid::Monoid(MonoidSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == MonoidKind::lex)
    analyze_lex();
  else
    analyze_generated();
}

void Monoid::analyze_lex() {
  const GroupSpec& g = spec_.group;
  if (spec_.lex_rank < 1) throw input_error("lex monoid needs lex_rank >= 1");
  if (g.rank != spec_.lex_rank || !g.torsion.empty())
    throw input_error("lex monoid requires a free group of rank lex_rank");
  if (!spec_.generators.empty()) throw input_error("lex monoid takes no generator list");
  units_ = std::make_shared<SubgroupBasis>(SubgroupBasis::generated_by(g, {}));
  span_ = std::make_shared<SubgroupBasis>(SubgroupBasis::full(g));
  phi_.weights.assign(g.dims(), Int(0));
  phi_.weights[g.dims() - 1] = 1;
  is_group_ = false;
  trivial_ = false;
}

void Monoid::analyze_generated() {
  const GroupSpec& g = spec_.group;
  for (const auto& e : spec_.generators) check_element(g, e);

  // A generator is invertible in S exactly when its negated free image lies in
  // the rational cone of all generator free images: any rational relation
  // scales to an integral one, and the leftover torsion element is killed by a
  // further multiple, all of which stays inside the monoid.
  std::vector<IntVec> free_images;
  for (const auto& e : spec_.generators) free_images.push_back(free_part(g, e));
  gen_is_unit_.assign(spec_.generators.size(), false);
  std::vector<GroupElement> unit_gens;
  for (size_t i = 0; i < spec_.generators.size(); ++i) {
    IntVec neg_v(free_images[i].size());
    for (size_t j = 0; j < neg_v.size(); ++j) neg_v[j] = -free_images[i][j];
    gen_is_unit_[i] = in_rational_cone(free_images, neg_v);
    if (gen_is_unit_[i]) unit_gens.push_back(spec_.generators[i]);
  }
  units_ = std::make_shared<SubgroupBasis>(SubgroupBasis::generated_by(g, unit_gens));
  span_ = std::make_shared<SubgroupBasis>(SubgroupBasis::generated_by(g, spec_.generators));
  is_group_ = unit_gens.size() == spec_.generators.size();
  trivial_ = true;
  for (const auto& e : spec_.generators)
    if (!is_zero(e)) { trivial_ = false; break; }

  const GroupSpec& w = units_->quotient_spec();
  for (size_t i = 0; i < spec_.generators.size(); ++i) {
    if (gen_is_unit_[i]) continue;
    GroupElement img = units_->quotient_map(spec_.generators[i]);
    reduced_free_parts_.push_back(free_part(w, img));
    reduced_gens_.push_back(std::move(img));
  }

  auto phi_w = strictly_positive_functional(reduced_free_parts_, w.rank);
  if (!phi_w)
    throw internal_error("no positive functional on the unit-free generator images");
  phi_reduced_ = *phi_w;

  // Pull back along x ↦ free part of the class of x in G/U(S); the pullback
  // must vanish on torsion slots.
  phi_.weights.assign(g.dims(), Int(0));
  for (int j = 0; j < g.dims(); ++j) {
    IntVec basis_vec(g.dims(), Int(0));
    basis_vec[j] = 1;
    GroupElement img = units_->quotient_map(element(g, basis_vec));
    Int val = 0;
    for (int i = 0; i < w.rank; ++i) val += phi_reduced_[i] * img.coords[i];
    phi_.weights[j] = val;
  }
  for (size_t i = 0; i < g.torsion.size(); ++i)
    if (phi_.weights[g.rank + i] != 0)
      throw internal_error("positivity functional does not vanish on torsion");
}

// Membership of a class w in the monoid generated by the reduced generators.
// Any representation satisfies sum(c_i * phi_i) == phi(w) with phi_i >= 1, so
// the search space is finite.
bool Monoid::member_reduced(const GroupElement& target) const {
  const GroupSpec& w = units_->quotient_spec();
  if (is_zero(target)) return true;
  if (reduced_gens_.empty()) return false;

  std::map<std::pair<size_t, IntVec>, bool> memo;
  auto phi_of = [&](const IntVec& coords) {
    Int s = 0;
    for (int i = 0; i < w.rank; ++i) s += phi_reduced_[i] * coords[i];
    return s;
  };
  auto phi_gen = [&](size_t i) { return phi_of(reduced_gens_[i].coords); };

  std::function<bool(size_t, GroupElement)> rec = [&](size_t idx, GroupElement rem) -> bool {
    if (is_zero(rem)) return true;
    if (idx == reduced_gens_.size()) return false;
    Int budget = phi_of(rem.coords);
    if (budget < 0) return false;
    auto key = std::make_pair(idx, rem.coords);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    Int cap = budget / phi_gen(idx);
    GroupElement cur = rem;
    for (Int c = 0; c <= cap; c += 1) {
      if (rec(idx + 1, cur)) { ok = true; break; }
      cur = sub(w, cur, reduced_gens_[idx]);
    }
    memo[key] = ok;
    return ok;
  };
  return rec(0, target);
}

bool Monoid::member(const GroupElement& x) const {
  const GroupSpec& g = spec_.group;
  check_element(g, x);
  if (spec_.kind == MonoidKind::lex) {
    for (int i = g.dims() - 1; i >= 0; --i)
      if (x.coords[i] != 0) return x.coords[i] > 0;
    return true;  // zero
  }
  return member_reduced(units_->quotient_map(x));
}

std::optional<Monoid::MemberWitness> Monoid::member_witness(const GroupElement& x) const {
  if (spec_.kind != MonoidKind::generated)
    throw contract_error("member witness only available for generated monoids");
  const GroupSpec& g = spec_.group;
  check_element(g, x);
  const GroupSpec& w = units_->quotient_spec();
  GroupElement target = units_->quotient_map(x);

  // Same bounded search as member_reduced, retaining coefficients.
  std::vector<Int> coeffs(reduced_gens_.size(), Int(0));
  auto phi_of = [&](const IntVec& coords) {
    Int s = 0;
    for (int i = 0; i < w.rank; ++i) s += phi_reduced_[i] * coords[i];
    return s;
  };
  std::function<bool(size_t, GroupElement)> rec = [&](size_t idx, GroupElement rem) -> bool {
    if (is_zero(rem)) {
      for (size_t j = idx; j < coeffs.size(); ++j) coeffs[j] = 0;
      return true;
    }
    if (idx == reduced_gens_.size()) return false;
    Int budget = phi_of(rem.coords);
    if (budget < 0) return false;
    Int cap = budget / phi_of(reduced_gens_[idx].coords);
    GroupElement cur = rem;
    for (Int c = 0; c <= cap; c += 1) {
      coeffs[idx] = c;
      if (rec(idx + 1, cur)) return true;
      cur = sub(w, cur, reduced_gens_[idx]);
    }
    return false;
  };
  if (!rec(0, target)) return std::nullopt;

  MemberWitness wit;
  wit.coefficients.assign(spec_.generators.size(), Int(0));
  GroupElement acc = zero(g);
  size_t k = 0;
  for (size_t i = 0; i < spec_.generators.size(); ++i) {
    if (gen_is_unit_[i]) continue;
    wit.coefficients[i] = coeffs[k];
    acc = add(g, acc, scale(g, coeffs[k], spec_.generators[i]));
    ++k;
  }
  wit.unit_part = sub(g, x, acc);
  if (!units_->contains(wit.unit_part))
    throw internal_error("membership remainder escaped the unit subgroup");
  return wit;
}

MajorizationVerdict Monoid::majorization() const {
  MajorizationVerdict v;
  if (spec_.kind == MonoidKind::lex) {
    v.holds = false;
    v.note = "top coordinate functional is nonnegative on the monoid but unbounded on the chain";
    IntVec top(spec_.group.dims(), Int(0));
    top[spec_.group.dims() - 1] = 1;
    v.witness_generator = element(spec_.group, top);
    v.functional = phi_;
    return v;
  }
  if (is_group_) {
    v.holds = true;
    v.note = "monoid is a group; zero majorizes every subset";
    return v;
  }
  v.holds = false;
  v.note = "functional is nonnegative on the monoid but unbounded on the witness chain";
  for (size_t i = 0; i < spec_.generators.size(); ++i)
    if (!gen_is_unit_[i]) { v.witness_generator = spec_.generators[i]; break; }
  v.functional = phi_;
  if (phi_.eval(*v.witness_generator) < 1)
    throw internal_error("majorization witness has non-positive functional value");
  return v;
}

std::string Monoid::countable_cofinal_justification() {
  return "carrier monoid is countable; C = S is cofinal in itself via s = s - 0";
}

std::optional<Int> Monoid::positive_multiple_in(const GroupElement& d) const {
  const GroupSpec& g = spec_.group;
  check_element(g, d);
  if (spec_.kind == MonoidKind::lex) {
    // Lex positivity is invariant under positive scaling.
    return member(d) ? std::optional<Int>(1) : std::nullopt;
  }
  GroupElement img = units_->quotient_map(d);
  IntVec ud = free_part(units_->quotient_spec(), img);
  if (!in_rational_cone(reduced_free_parts_, ud)) return std::nullopt;
  GroupElement acc = d;
  for (long k = 1; k <= k_multiple_search_limit; ++k) {
    if (member(acc)) return Int(k);
    acc = add(g, acc, d);
  }
  throw internal_error("positive multiple guaranteed by cone test not found within limit");
}

bool Monoid::eventually_member(const GroupElement& y, const GroupElement& d) const {
  const GroupSpec& g = spec_.group;
  check_element(g, y);
  check_element(g, d);
  if (spec_.kind == MonoidKind::lex) {
    int t = -1;
    for (int i = g.dims() - 1; i >= 0; --i)
      if (d.coords[i] != 0) { t = i; break; }
    if (t < 0) return member(y);
    for (int i = g.dims() - 1; i > t; --i)
      if (y.coords[i] != 0) return y.coords[i] > 0;
    return d.coords[t] > 0;
  }
  auto k0 = positive_multiple_in(d);
  if (!k0) return false;
  // y + n*d in S eventually iff every residue class j < k0 satisfies
  // y + j*d in S - N*(k0*d), the monoid with -k0*d adjoined.
  std::vector<GroupElement> gens = spec_.generators;
  gens.push_back(neg(g, scale(g, *k0, d)));
  Monoid relaxed(MonoidSpec{g, MonoidKind::generated, std::move(gens), 0});
  GroupElement cur = y;
  for (Int j = 0; j < *k0; j += 1) {
    if (!relaxed.member(cur)) return false;
    cur = add(g, cur, d);
  }
  return true;
}

MonoidPtr make_monoid(MonoidSpec spec) { return std::make_shared<const Monoid>(std::move(spec)); }

MonoidSpec generated_monoid(const GroupSpec& g, std::vector<GroupElement> gens) {
  return MonoidSpec{g, MonoidKind::generated, std::move(gens), 0};
}

MonoidSpec lex_monoid(int lex_rank) {
  GroupSpec g{lex_rank, {}};
  return MonoidSpec{g, MonoidKind::lex, {}, lex_rank};
}

}  // namespace conetop
