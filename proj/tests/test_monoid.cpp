#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"

using namespace conetop;
using testutil::cone2;
using testutil::gen_monoid;
using testutil::nat;
using testutil::zn;

namespace {

// Bounded-coefficient search: is x a sum of at most `cap` copies of each
// generator? Exact for pointed monoids once cap dominates the window.
bool brute_member(const GroupSpec& g, const std::vector<GroupElement>& gens,
                  const GroupElement& x, int cap) {
  std::function<bool(size_t, GroupElement)> go = [&](size_t i, GroupElement rest) {
    if (is_zero(rest)) return true;
    if (i == gens.size()) return false;
    GroupElement r = rest;
    for (int c = 0; c <= cap; ++c) {
      if (go(i + 1, r)) return true;
      r = sub(g, r, gens[i]);
    }
    return false;
  };
  return go(0, x);
}

}  // namespace

TEST_SUITE("monoid") {

TEST_CASE("membership examples in the plane cone") {
  MonoidPtr m = cone2();
  CHECK(m->member(element(zn(2), {3, 2})));
  CHECK_FALSE(m->member(element(zn(2), {2, 3})));
  CHECK(m->member(zero(zn(2))));
  CHECK_FALSE(m->member(element(zn(2), {-1, 0})));
}

TEST_CASE("witness recombines to the queried element") {
  std::mt19937 rng(11);
  for (const MonoidPtr& mo : {cone2(), testutil::lattice6()}) {
    const GroupSpec& g = mo->group();
    for (int t = 0; t < 80; ++t) {
      GroupElement x = element(g, testutil::random_vec(rng, 2, -9, 9));
      if (!mo->member(x)) continue;
      auto w = mo->member_witness(x);
      REQUIRE(w);
      GroupElement acc = w->unit_part;
      CHECK(mo->units().contains(acc));
      REQUIRE(w->coefficients.size() == mo->spec().generators.size());
      for (size_t i = 0; i < w->coefficients.size(); ++i) {
        CHECK(w->coefficients[i] >= 0);
        if (mo->generator_is_unit()[i]) CHECK(w->coefficients[i] == 0);
        acc = add(g, acc, scale(g, w->coefficients[i], mo->spec().generators[i]));
      }
      CHECK(acc == x);
    }
  }
}

TEST_CASE("membership matches bounded-coefficient search") {
  std::vector<std::vector<IntVec>> pointed = {
      {{1, 0}, {1, 1}},          // wedge
      {{1, 0}, {0, 1}},          // quadrant
      {{2, 0}, {0, 3}, {1, 1}},  // sparse interior
      {{1, 2}, {2, 1}},          // narrow wedge with gaps
  };
  for (const auto& gv : pointed) {
    MonoidPtr m = gen_monoid(zn(2), gv);
    const std::vector<GroupElement>& ge = m->spec().generators;
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y) {
        GroupElement e = element(zn(2), {x, y});
        CHECK(m->member(e) == brute_member(zn(2), ge, e, 14));
      }
  }
}

TEST_CASE("numerical semigroup keeps its gaps") {
  MonoidPtr m = gen_monoid(zn(1), {{2}, {5}});
  for (int v : {0, 2, 4, 5, 6, 7, 8, 9, 10})
    CHECK(m->member(element(zn(1), {v})));
  for (int v : {1, 3, -1, -2, -5})
    CHECK_FALSE(m->member(element(zn(1), {v})));
}

TEST_CASE("units and span") {
  MonoidPtr half = gen_monoid(zn(2), {{1, 0}, {-1, 0}, {0, 1}});
  CHECK(half->units().contains(element(zn(2), {1, 0})));
  CHECK_FALSE(half->units().contains(element(zn(2), {0, 1})));
  CHECK(half->span().is_full());
  CHECK_FALSE(half->is_group());

  MonoidPtr all = gen_monoid(zn(1), {{2}, {-2}, {3}});
  CHECK(all->is_group());
  CHECK(all->units().is_full());

  MonoidPtr even = testutil::even_group();
  CHECK(even->is_group());
  CHECK(even->span().index() == Int(2));

  CHECK(testutil::zero_monoid()->is_trivial());
  CHECK(testutil::zero_monoid()->is_group());
}

TEST_CASE("closure under addition") {
  std::mt19937 rng(4);
  MonoidPtr m = cone2();
  int hits = 0;
  while (hits < 40) {
    GroupElement a = element(zn(2), testutil::random_vec(rng, 2, 0, 6));
    GroupElement b = element(zn(2), testutil::random_vec(rng, 2, 0, 6));
    if (!m->member(a) || !m->member(b)) continue;
    ++hits;
    CHECK(m->member(add(zn(2), a, b)));
  }
}

TEST_CASE("majorization verdicts") {
  MajorizationVerdict nat_v = nat()->majorization();
  CHECK_FALSE(nat_v.holds);
  REQUIRE(nat_v.witness_generator);
  CHECK(*nat_v.witness_generator == element(zn(1), {1}));
  REQUIRE(nat_v.functional);
  CHECK(nat_v.functional->eval(element(zn(1), {1})) >= 1);

  CHECK(testutil::even_group()->majorization().holds);
  CHECK(testutil::zero_monoid()->majorization().holds);

  MonoidPtr lex2 = make_monoid(lex_monoid(2));
  MajorizationVerdict lv = lex2->majorization();
  CHECK_FALSE(lv.holds);
  REQUIRE(lv.witness_generator);
  CHECK(lv.witness_generator->coords == IntVec{Int(0), Int(1)});
}

TEST_CASE("positivity functional separates units from the rest") {
  for (const MonoidPtr& m :
       {cone2(), nat(), gen_monoid(zn(2), {{1, 0}, {-1, 0}, {0, 1}})}) {
    const auto& gens = m->spec().generators;
    for (size_t i = 0; i < gens.size(); ++i) {
      Int v = m->phi(gens[i]);
      CHECK(v >= 0);
      if (m->generator_is_unit()[i])
        CHECK(v == 0);
      else
        CHECK(v >= 1);
    }
  }

  MonoidPtr t = testutil::torsion_part();
  for (const Int& w : t->positivity().weights) CHECK(w >= 0);
  // the torsion generator is a unit, so it evaluates to zero
  CHECK(t->phi(element(t->group(), {0, 1})) == 0);
}

TEST_CASE("eventually_member follows the ray direction") {
  MonoidPtr n = nat();
  CHECK(n->eventually_member(element(zn(1), {-5}), element(zn(1), {1})));
  CHECK_FALSE(n->eventually_member(element(zn(1), {5}), element(zn(1), {-1})));

  MonoidPtr c = cone2();
  CHECK(c->eventually_member(element(zn(2), {0, -3}), element(zn(2), {1, 1})));
  CHECK_FALSE(c->eventually_member(element(zn(2), {0, -3}), element(zn(2), {0, 1})));
}

TEST_CASE("positive_multiple_in finds the least multiplier") {
  MonoidPtr c = cone2();
  CHECK_FALSE(c->positive_multiple_in(element(zn(2), {1, 2})));
  CHECK(c->positive_multiple_in(element(zn(2), {3, 1})) == Int(1));

  GroupSpec g{1, {Int(2)}};
  MonoidPtr t = gen_monoid(g, {{1, 1}});
  CHECK(t->positive_multiple_in(element(g, {1, 0})) == Int(2));
}

TEST_CASE("lexicographic membership uses the top coordinate first") {
  MonoidPtr m = make_monoid(lex_monoid(2));
  CHECK(m->member(element(zn(2), {5, 0})));
  CHECK(m->member(element(zn(2), {-3, 1})));
  CHECK_FALSE(m->member(element(zn(2), {3, -1})));
  CHECK(m->member(zero(zn(2))));
  CHECK_FALSE(m->member(element(zn(2), {-1, 0})));
  CHECK(m->units().is_trivial());
  CHECK(m->span().is_full());
  CHECK_FALSE(m->is_group());
  CHECK(m->kind() == MonoidKind::lex);

  MonoidPtr m3 = make_monoid(lex_monoid(3));
  CHECK(m3->member(element(zn(3), {-4, -4, 1})));
  CHECK_FALSE(m3->member(element(zn(3), {4, 4, -1})));
  CHECK(m3->member(element(zn(3), {-4, 2, 0})));
}

}  // TEST_SUITE
