#include <doctest.h>

#include <random>

#include <conetop/cone_space.hpp>
#include <conetop/fintop.hpp>

#include "helpers.hpp"

using namespace conetop;
using testutil::cone2;
using testutil::nat;
using testutil::zn;

namespace {

ConeSpace cone_of(MonoidPtr m) { return ConeSpace{std::move(m), Variant::cone}; }
ConeSpace star_of(MonoidPtr m) { return ConeSpace{std::move(m), Variant::cone_star}; }

// Pointwise closure test straight from the neighborhood definition:
// w ∈ cl(A) iff (w + S) meets A. Per atom this needs one membership or one
// span query, so it is exact on every window point.
bool meets_some_atom(const ConeSpace& sp, const DescribedSet& a, const GroupElement& w) {
  const Monoid& m = *sp.monoid;
  for (const Atom& at : a.atoms) {
    GroupElement d = sub(m.group(), at.base, w);
    bool hit = (at.kind == AtomKind::point || at.kind == AtomKind::minus_monoid)
                   ? m.member(d)
                   : m.span().contains(d);
    if (hit) return true;
  }
  return false;
}

DescribedSet random_set(std::mt19937& rng, const GroupSpec& g) {
  std::uniform_int_distribution<int> n_atoms(1, 3), kind(0, 3), coord(-2, 2);
  DescribedSet s;
  for (int i = n_atoms(rng); i > 0; --i) {
    IntVec v;
    for (int d = 0; d < g.rank; ++d) v.push_back(coord(rng));
    for (const Int& t : g.torsion) {
      std::uniform_int_distribution<long> td(0, long(t.get_si()) - 1);
      v.push_back(td(rng));
    }
    s.atoms.push_back(Atom{AtomKind(kind(rng)), element(g, v)});
  }
  return s;
}

}  // namespace

TEST_SUITE("conetop") {

TEST_CASE("closure flips the cone atom-wise") {
  ConeSpace sp = cone_of(nat());
  DescribedSet a = make_translate(AtomKind::plus_monoid, element(zn(1), {3}));
  DescribedSet c = closure(sp, a);
  REQUIRE(c.atoms.size() == 1);
  CHECK(c.atoms[0].kind == AtomKind::plus_span);
  CHECK(c.atoms[0].base == element(zn(1), {3}));

  DescribedSet p = make_point_set(element(zn(1), {0}));
  DescribedSet cp = closure(sp, p);
  REQUIRE(cp.atoms.size() == 1);
  CHECK(cp.atoms[0].kind == AtomKind::minus_monoid);
  CHECK(set_contains(sp, cp, element(zn(1), {-4})));
  CHECK_FALSE(set_contains(sp, cp, element(zn(1), {1})));
}

TEST_CASE("closure is extensive, monotone in membership, idempotent") {
  std::mt19937 rng(17);
  for (const MonoidPtr& m : {nat(), cone2(), testutil::torsion_part()}) {
    ConeSpace sp = cone_of(m);
    WindowPoints w(sp.group(), 5);
    for (int t = 0; t < 12; ++t) {
      DescribedSet a = random_set(rng, sp.group());
      DescribedSet c = closure(sp, a);
      CHECK(closure(sp, c) == c);
      for (const GroupElement& x : w.points()) {
        if (set_contains(sp, a, x)) CHECK(set_contains(sp, c, x));
        // closure membership is exactly "some neighborhood trace meets a"
        CHECK(set_contains(sp, c, x) == meets_some_atom(sp, a, x));
      }
    }
  }
}

TEST_CASE("window trace closure implies the pointwise oracle") {
  std::mt19937 rng(19);
  for (const MonoidPtr& m : {nat(), cone2()}) {
    ConeSpace sp = cone_of(m);
    WindowPoints w(sp.group(), 6);
    for (int t = 0; t < 8; ++t) {
      DescribedSet a = random_set(rng, sp.group());
      std::vector<char> flags(w.size(), 0);
      for (size_t i = 0; i < w.size(); ++i)
        flags[i] = set_contains(sp, a, w.points()[i]) ? 1 : 0;
      std::vector<char> traced = window_trace_closure(sp, w, flags);
      for (size_t i = 0; i < w.size(); ++i) {
        if (flags[i]) CHECK(traced[i]);
        // the trace only sees witnesses inside the window
        if (traced[i]) CHECK(meets_some_atom(sp, a, w.points()[i]));
      }
    }
  }
}

TEST_CASE("trace closure matches a literal finite-space computation") {
  // Rank-one windows with at most 16 points fit the bitmask topology engine;
  // build the inherited topology from the minimal-open traces and compare
  // its closure operator against the window trace.
  std::mt19937 rng(23);
  for (const MonoidPtr& m : {nat(), testutil::even_group(),
                             testutil::gen_monoid(zn(1), {{2}, {5}})}) {
    ConeSpace sp = cone_of(m);
    WindowPoints w(sp.group(), 7);
    REQUIRE(w.size() <= 16);
    int n = int(w.size());
    std::vector<Bits> base;
    for (int i = 0; i < n; ++i) {
      Bits u = 0;
      for (int j = 0; j < n; ++j)
        if (m->member(sub(sp.group(), w.points()[j], w.points()[i]))) u |= Bits(1) << j;
      base.push_back(u);
    }
    FinTopology tau = FinTopology::generate(n, base);
    for (int t = 0; t < 20; ++t) {
      Bits a = std::uniform_int_distribution<Bits>(0, (Bits(1) << n) - 1)(rng);
      std::vector<char> flags(n, 0);
      for (int j = 0; j < n; ++j) flags[j] = (a >> j) & 1;
      std::vector<char> traced = window_trace_closure(sp, w, flags);
      Bits cl = tau.closure(a);
      for (int j = 0; j < n; ++j) CHECK(bool(traced[j]) == bool((cl >> j) & 1));
    }
  }
}

TEST_CASE("star closures have no symbolic form") {
  ConeSpace sp = star_of(nat());
  CHECK_THROWS_AS(closure(sp, make_point_set(zero(zn(1)))), contract_error);
}

TEST_CASE("compactness criterion") {
  ConeSpace sp = cone_of(nat());
  CompactnessResult up = is_compact(sp, make_translate(AtomKind::plus_monoid, zero(zn(1))));
  CHECK(up.compact);
  CHECK(up.cover.size() == 1);

  CHECK_THROWS_AS(is_compact(sp, make_translate(AtomKind::minus_monoid, zero(zn(1)))),
                  contract_error);

  ConeSpace ev = cone_of(testutil::even_group());
  CHECK(is_compact(ev, make_translate(AtomKind::minus_monoid, zero(zn(1)))).compact);
  CHECK(is_compact(ev, make_point_set(element(zn(1), {3}))).compact);
}

TEST_CASE("separation depends on units and variant") {
  SeparationRecord nat_cone = separation(cone_of(nat()));
  CHECK(nat_cone.t0);
  CHECK_FALSE(nat_cone.t1);
  CHECK_FALSE(nat_cone.hausdorff);

  SeparationRecord nat_star = separation(star_of(nat()));
  CHECK(nat_star.t0);
  CHECK(nat_star.t1);
  CHECK_FALSE(nat_star.hausdorff);

  SeparationRecord triv = separation(cone_of(testutil::zero_monoid()));
  CHECK(triv.t0);
  CHECK(triv.t1);
  CHECK(triv.hausdorff);

  // nontrivial units kill T0 in both variants
  CHECK_FALSE(separation(cone_of(testutil::even_group())).t0);
  CHECK_FALSE(separation(star_of(testutil::even_group())).t0);
}

TEST_CASE("wide means the span is everything") {
  CHECK(is_wide(cone_of(cone2())));
  CHECK(is_wide(cone_of(nat())));
  CHECK_FALSE(is_wide(cone_of(testutil::lattice6())));
  CHECK_FALSE(is_wide(cone_of(testutil::even_group())));
}

TEST_CASE("window points enumerate the box") {
  WindowPoints w1(zn(1), 8);
  CHECK(w1.size() == 17);
  WindowPoints w2(zn(2), 3);
  CHECK(w2.size() == 49);
  GroupSpec tg{1, {Int(2)}};
  WindowPoints wt(tg, 2);
  CHECK(wt.size() == 10);

  auto idx = w2.index_of(element(zn(2), {-3, 2}));
  REQUIRE(idx);
  CHECK(w2.points()[*idx] == element(zn(2), {-3, 2}));
  CHECK_FALSE(w2.index_of(element(zn(2), {4, 0})));
}

TEST_CASE("limits of affine sequences in the cone") {
  ConeSpace sp = cone_of(nat());
  SequenceRule up;
  up.branches = {AffineBranch{zero(zn(1)), element(zn(1), {1})}};
  LimitReport all = limits(sp, up, {}, 32, 8);
  CHECK(all.kind == LimitKind::all);
  CHECK(all.exact);

  SequenceRule down;
  down.branches = {AffineBranch{zero(zn(1)), element(zn(1), {-1})}};
  LimitReport none = limits(sp, down, {}, 32, 8);
  CHECK(none.kind == LimitKind::empty);
  CHECK(none.exact);

  SequenceRule split;
  split.branches = {AffineBranch{zero(zn(1)), element(zn(1), {2})},
                    AffineBranch{element(zn(1), {-1}), element(zn(1), {-2})}};
  LimitReport both = limits(sp, split, {}, 32, 8);
  CHECK(both.kind == LimitKind::empty);
  CHECK(both.exact);

  SequenceRule constant;
  constant.branches = {AffineBranch{element(zn(1), {5}), zero(zn(1))}};
  LimitReport c = limits(sp, constant, {}, 32, 8);
  CHECK(c.kind == LimitKind::points);
  CHECK(c.exact);
  // limits of the constant 5 are exactly the window slice of 5 - S
  REQUIRE(c.points.size() == 14);
  CHECK(c.points.front() == element(zn(1), {-8}));
  CHECK(c.points.back() == element(zn(1), {5}));
  CHECK_FALSE(c.escapes.empty());
}

TEST_CASE("star limits require probes") {
  ConeSpace sp = star_of(nat());
  SequenceRule up;
  up.branches = {AffineBranch{zero(zn(1)), element(zn(1), {1})}};
  CHECK_THROWS_AS(limits(sp, up, {}, 32, 8), contract_error);
  LimitReport probed = limits(sp, up, {element(zn(1), {0}), element(zn(1), {1})}, 32, 8);
  CHECK_FALSE(probed.exact);
}

TEST_CASE("explicit sequences are only suffix-checked") {
  ConeSpace sp = cone_of(nat());
  SequenceRule list;
  list.is_explicit = true;
  for (int i = 0; i < 6; ++i) list.terms.push_back(element(zn(1), {i}));
  LimitReport r = limits(sp, list, {}, 32, 4);
  CHECK_FALSE(r.exact);
  CHECK(r.checked_prefix == 6);
  // every window point admits the tail: the terms never drop below p
  CHECK(r.kind == LimitKind::points);
  CHECK(r.points.size() == 9);
}

}  // TEST_SUITE
