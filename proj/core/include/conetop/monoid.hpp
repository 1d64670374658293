#pragma once

#include <conetop/group.hpp>
#include <conetop/lp.hpp>

#include <memory>

namespace conetop {

enum class MonoidKind { generated, lex };

// Submonoid of a finitely generated abelian group: either generated by a
// finite list, or the lexicographic-positive monoid {0} ∪ {x : highest-index
// nonzero coordinate of x is positive} on Z^lex_rank.
struct MonoidSpec {
  GroupSpec group;
  MonoidKind kind = MonoidKind::generated;
  std::vector<GroupElement> generators;
  int lex_rank = 0;
  bool operator==(const MonoidSpec&) const = default;
};

// Integer functional on the ambient group that vanishes on units and torsion,
// is >= 0 on every generator and >= 1 on every non-invertible generator.
struct PositivityFunctional {
  IntVec weights;  // per ambient coordinate; torsion slots are zero
  Int eval(const GroupElement& x) const {
    Int s = 0;
    for (size_t i = 0; i < weights.size(); ++i) s += weights[i] * x.coords[i];
    return s;
  }
  bool operator==(const PositivityFunctional&) const = default;
};

struct MajorizationVerdict {
  bool holds = false;
  std::string note;
  // When holds is false: generator g with phi(g) >= 1 and -g outside S; the
  // chain {n*g} then has no majorant a with chain ⊆ a - S.
  std::optional<GroupElement> witness_generator;
  std::optional<PositivityFunctional> functional;
};

class Monoid {
 public:
  explicit Monoid(MonoidSpec spec);

  const MonoidSpec& spec() const { return spec_; }
  const GroupSpec& group() const { return spec_.group; }
  MonoidKind kind() const { return spec_.kind; }

  bool member(const GroupElement& x) const;

  struct MemberWitness {
    std::vector<Int> coefficients;  // per generator, zero on unit generators
    GroupElement unit_part;         // remainder inside U(S)
  };
  // Generated monoids only; nullopt when x is not a member.
  std::optional<MemberWitness> member_witness(const GroupElement& x) const;

  const SubgroupBasis& units() const { return *units_; }  // U(S) = S ∩ -S
  const SubgroupBasis& span() const { return *span_; }    // <S> = S - S
  const std::vector<bool>& generator_is_unit() const { return gen_is_unit_; }

  bool is_group() const { return is_group_; }
  bool is_trivial() const { return trivial_; }  // S == {0}
  MajorizationVerdict majorization() const;
  const PositivityFunctional& positivity() const { return phi_; }
  Int phi(const GroupElement& x) const { return phi_.eval(x); }

  // Countable cofinal subsets always exist here (S itself is countable and
  // s ∈ s - S via the witness 0); the justification is recorded on reports.
  bool countable_cofinal_exists() const { return true; }
  static std::string countable_cofinal_justification();

  // Does y + n*d lie in S for all sufficiently large n? Exact for both kinds.
  bool eventually_member(const GroupElement& y, const GroupElement& d) const;

  // Smallest k >= 1 with k*d in S, when one exists.
  std::optional<Int> positive_multiple_in(const GroupElement& d) const;

 private:
  void analyze_generated();
  void analyze_lex();
  bool member_reduced(const GroupElement& w) const;

  MonoidSpec spec_;
  std::shared_ptr<SubgroupBasis> units_, span_;
  std::vector<bool> gen_is_unit_;
  std::vector<GroupElement> reduced_gens_;       // images of non-unit generators in G/U
  std::vector<IntVec> reduced_free_parts_;       // their free parts
  IntVec phi_reduced_;                           // functional on free part of G/U
  PositivityFunctional phi_;                     // pullback to the ambient group
  bool is_group_ = false;
  bool trivial_ = false;
};

using MonoidPtr = std::shared_ptr<const Monoid>;

MonoidPtr make_monoid(MonoidSpec spec);
MonoidSpec generated_monoid(const GroupSpec& g, std::vector<GroupElement> gens);
MonoidSpec lex_monoid(int lex_rank);

}  // namespace conetop
