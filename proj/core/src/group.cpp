#include <conetop/group.hpp>

#include <algorithm>

namespace conetop {

std::optional<Int> GroupSpec::order() const {
  if (rank > 0) return std::nullopt;
  Int p = 1;
  for (const Int& d : torsion) p *= d;
  return p;
}

std::string GroupSpec::str() const {
  std::string s = "Z^" + std::to_string(rank);
  for (const Int& d : torsion) s += " + Z/" + d.get_str();
  return s;
}

GroupElement element(const GroupSpec& g, IntVec raw) {
  if (int(raw.size()) != g.dims())
    throw input_error("element has " + std::to_string(raw.size()) + " coordinates, group needs " +
                      std::to_string(g.dims()));
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    Int& c = raw[g.rank + i];
    c = floor_mod(c, g.torsion[i]);
  }
  return GroupElement{std::move(raw)};
}

GroupElement zero(const GroupSpec& g) { return GroupElement{IntVec(g.dims(), Int(0))}; }

bool is_zero(const GroupElement& a) {
  return std::all_of(a.coords.begin(), a.coords.end(), [](const Int& c) { return c == 0; });
}

void check_element(const GroupSpec& g, const GroupElement& a) {
  if (int(a.coords.size()) != g.dims())
    throw input_error("element has " + std::to_string(a.coords.size()) +
                      " coordinates, group needs " + std::to_string(g.dims()));
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    const Int& c = a.coords[g.rank + i];
    if (c < 0 || c >= g.torsion[i])
      throw input_error("torsion coordinate " + c.get_str() + " out of range [0," +
                        g.torsion[i].get_str() + ")");
  }
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  check_element(g, a);
  check_element(g, b);
  IntVec r(g.dims());
  for (int i = 0; i < g.dims(); ++i) r[i] = a.coords[i] + b.coords[i];
  return element(g, std::move(r));
}

GroupElement neg(const GroupSpec& g, const GroupElement& a) {
  check_element(g, a);
  IntVec r(g.dims());
  for (int i = 0; i < g.dims(); ++i) r[i] = -a.coords[i];
  return element(g, std::move(r));
}

GroupElement sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  return add(g, a, neg(g, b));
}

GroupElement scale(const GroupSpec& g, const Int& k, const GroupElement& a) {
  check_element(g, a);
  IntVec r(g.dims());
  for (int i = 0; i < g.dims(); ++i) r[i] = k * a.coords[i];
  return element(g, std::move(r));
}

Presentation canonical_presentation(int n_raw, const std::vector<IntVec>& relations) {
  Mat a(n_raw, int(relations.size()));
  for (size_t j = 0; j < relations.size(); ++j) {
    if (int(relations[j].size()) != n_raw) throw internal_error("relation dimension mismatch");
    for (int i = 0; i < n_raw; ++i) a.at(i, j) = relations[j][i];
  }
  SmithResult s = smith_normal_form(a);
  Mat uinv = inverse_unimodular(s.u);

  // Quotient coordinate i of U x is free when row i has no pivot, torsion of
  // order delta_i when delta_i >= 2, and vanishes when delta_i == 1.
  std::vector<int> free_rows, torsion_rows;
  IntVec torsion;
  for (int i = 0; i < n_raw; ++i) {
    Int delta = (i < std::min(a.rows(), a.cols())) ? s.d.at(i, i) : Int(0);
    if (delta == 0)
      free_rows.push_back(i);
    else if (delta >= 2) {
      torsion_rows.push_back(i);
      torsion.push_back(delta);
    }
  }

  Presentation p;
  p.spec.rank = int(free_rows.size());
  p.spec.torsion = torsion;
  int nd = p.spec.dims();
  p.proj = Mat(nd, n_raw);
  p.section = Mat(n_raw, nd);
  std::vector<int> order = free_rows;
  order.insert(order.end(), torsion_rows.begin(), torsion_rows.end());
  for (int k = 0; k < nd; ++k) {
    int row = order[k];
    for (int j = 0; j < n_raw; ++j) p.proj.at(k, j) = s.u.at(row, j);
    for (int i = 0; i < n_raw; ++i) p.section.at(i, k) = uinv.at(i, row);
  }
  return p;
}

Presentation make_group_spec(int rank, const IntVec& torsion) {
  if (rank < 0) throw input_error("rank must be nonnegative");
  for (const Int& d : torsion)
    if (d < 2) throw input_error("torsion entries must be >= 2");

  bool chain = true;
  for (size_t i = 0; i + 1 < torsion.size(); ++i)
    if (!divides(torsion[i], torsion[i + 1])) { chain = false; break; }
  int n = rank + int(torsion.size());
  if (chain) {
    Presentation p;
    p.spec = GroupSpec{rank, torsion};
    p.proj = Mat::identity(n);
    p.section = Mat::identity(n);
    return p;
  }
  std::vector<IntVec> relations;
  for (size_t i = 0; i < torsion.size(); ++i) {
    IntVec r(n, Int(0));
    r[rank + i] = torsion[i];
    relations.push_back(std::move(r));
  }
  return canonical_presentation(n, relations);
}

namespace {

std::vector<IntVec> lift_lattice_columns(const GroupSpec& g,
                                         const std::vector<GroupElement>& gens) {
  std::vector<IntVec> cols;
  for (const auto& e : gens) cols.push_back(e.coords);
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    IntVec r(g.dims(), Int(0));
    r[g.rank + i] = g.torsion[i];
    cols.push_back(std::move(r));
  }
  return cols;
}

}  // namespace

SubgroupBasis SubgroupBasis::generated_by(const GroupSpec& g, std::vector<GroupElement> gens) {
  for (const auto& e : gens) check_element(g, e);
  SubgroupBasis h;
  h.ambient_ = g;
  h.gens_ = std::move(gens);
  auto cols = lift_lattice_columns(g, h.gens_);
  Mat a(g.dims(), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < g.dims(); ++i) a.at(i, j) = cols[j][i];
  h.hnf_ = hermite_col(a);
  h.quot_ = canonical_presentation(g.dims(), cols);
  return h;
}

SubgroupBasis SubgroupBasis::full(const GroupSpec& g) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < g.dims(); ++i) {
    IntVec v(g.dims(), Int(0));
    v[i] = 1;
    gens.push_back(element(g, std::move(v)));
  }
  return generated_by(g, std::move(gens));
}

bool SubgroupBasis::contains(const GroupElement& x) const {
  check_element(ambient_, x);
  return lattice_contains(hnf_, x.coords);
}

// G/H isomorphic to G forces H = 0 for finitely generated abelian G.
bool SubgroupBasis::is_trivial() const { return quot_.spec == ambient_; }

bool SubgroupBasis::is_full() const { return quot_.spec.is_trivial(); }

std::optional<Int> SubgroupBasis::index() const { return quot_.spec.order(); }

GroupElement SubgroupBasis::quotient_map(const GroupElement& x) const {
  check_element(ambient_, x);
  return element(quot_.spec, quot_.proj.mul_vec(x.coords));
}

GroupElement SubgroupBasis::coset_rep(const GroupElement& cls) const {
  check_element(quot_.spec, cls);
  return element(ambient_, quot_.section.mul_vec(cls.coords));
}

std::vector<GroupElement> SubgroupBasis::coset_transversal() const {
  auto idx = index();
  if (!idx) throw contract_error("coset transversal requires finite index");
  std::vector<GroupElement> reps;
  IntVec cls(quot_.spec.dims(), Int(0));
  while (true) {
    reps.push_back(coset_rep(GroupElement{cls}));
    int i = 0;
    for (; i < int(cls.size()); ++i) {
      cls[i] += 1;
      if (cls[i] < quot_.spec.torsion[i]) break;
      cls[i] = 0;
    }
    if (i == int(cls.size())) break;
  }
  if (Int(reps.size()) != *idx) throw internal_error("transversal size disagrees with index");
  return reps;
}

GroupElement SubgroupBasis::free_direction() const {
  if (quot_.spec.rank == 0) throw contract_error("free direction requires infinite index");
  IntVec cls(quot_.spec.dims(), Int(0));
  cls[0] = 1;
  return coset_rep(GroupElement{cls});
}

SubgroupBasis subgroup_generated(const GroupSpec& g, std::vector<GroupElement> gens) {
  return SubgroupBasis::generated_by(g, std::move(gens));
}

bool quotient_is_periodic(const SubgroupBasis& h) { return h.quotient_is_periodic(); }

}  // namespace conetop
