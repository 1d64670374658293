#pragma once

#include <conetop/matrix.hpp>

namespace conetop {

// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_m in canonical
// form: torsion orders form an ascending divisibility chain, every d_i >= 2.
struct GroupSpec {
  int rank = 0;
  IntVec torsion;

  int dims() const { return rank + int(torsion.size()); }
  bool is_trivial() const { return dims() == 0; }
  // Group order when finite (rank 0), nullopt otherwise.
  std::optional<Int> order() const;
  bool operator==(const GroupSpec&) const = default;
  std::string str() const;
};

// Coordinates: free entries first, then torsion entries reduced into [0, d_i).
struct GroupElement {
  IntVec coords;
  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

// Conversion data from a raw presentation Z^n / <relation columns> to the
// canonical spec: proj maps raw lift coordinates to canonical coordinates
// (reduce afterwards); section is a right inverse picking representatives.
struct Presentation {
  GroupSpec spec;
  Mat proj;
  Mat section;
};

Presentation canonical_presentation(int n_raw, const std::vector<IntVec>& relations);

// Canonicalizes arbitrary torsion input (entries >= 2, any order, no chain
// requirement); proj/section convert element coordinates between the two.
Presentation make_group_spec(int rank, const IntVec& torsion);

GroupElement element(const GroupSpec& g, IntVec raw);
GroupElement zero(const GroupSpec& g);
bool is_zero(const GroupElement& a);
void check_element(const GroupSpec& g, const GroupElement& a);

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& g, const GroupElement& a);
GroupElement sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement scale(const GroupSpec& g, const Int& k, const GroupElement& a);

class SubgroupBasis {
 public:
  static SubgroupBasis generated_by(const GroupSpec& g, std::vector<GroupElement> gens);
  // The full group as a subgroup of itself.
  static SubgroupBasis full(const GroupSpec& g);

  const GroupSpec& ambient() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  // Canonical triangular basis of the lift lattice (torsion relations folded in).
  const Mat& normal_form() const { return hnf_; }

  bool contains(const GroupElement& x) const;
  bool is_trivial() const;
  bool is_full() const;

  // |G : H|; nullopt when infinite (quotient has free rank > 0).
  std::optional<Int> index() const;
  const GroupSpec& quotient_spec() const { return quot_.spec; }
  bool quotient_is_periodic() const { return quot_.spec.rank == 0; }
  GroupElement quotient_map(const GroupElement& x) const;
  GroupElement coset_rep(const GroupElement& cls) const;
  // All coset representatives; contract: index() finite.
  std::vector<GroupElement> coset_transversal() const;
  // Element generating a free direction of G/H; contract: index() infinite.
  GroupElement free_direction() const;

  bool operator==(const SubgroupBasis& o) const {
    return ambient_ == o.ambient_ && hnf_ == o.hnf_;
  }

 private:
  GroupSpec ambient_;
  std::vector<GroupElement> gens_;
  Mat hnf_;
  Presentation quot_;
};

SubgroupBasis subgroup_generated(const GroupSpec& g, std::vector<GroupElement> gens);
bool quotient_is_periodic(const SubgroupBasis& h);

}  // namespace conetop
