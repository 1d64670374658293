#include <doctest.h>

#include <conetop/profile.hpp>
#include <conetop/witness.hpp>

#include "helpers.hpp"

using namespace conetop;
using testutil::gen_monoid;
using testutil::nat;
using testutil::zn;

namespace {

ConeSpace cone_of(MonoidPtr m) { return ConeSpace{std::move(m), Variant::cone}; }
ConeSpace star_of(MonoidPtr m) { return ConeSpace{std::move(m), Variant::cone_star}; }

bool passes(const ConeSpace& sp, const Certificate& c, int radius = 8, long prefix = 16) {
  return verify(sp, c, Window{radius}, prefix).pass;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("non-T0 witnesses require a nonzero unit") {
  ConeSpace even = cone_of(testutil::even_group());
  auto c = make_non_t0(*even.monoid);
  REQUIRE(c);
  CHECK(c->kind == CertKind::non_t0);
  CHECK(passes(even, *c));

  CHECK_FALSE(make_non_t0(*nat()));
  CHECK_FALSE(make_non_t0(*testutil::zero_monoid()));
}

TEST_CASE("majorization failure pair") {
  ConeSpace sp = cone_of(nat());
  auto c = make_major_fail(*sp.monoid);
  REQUIRE(c);
  CHECK(c->point == element(zn(1), {1}));
  REQUIRE(c->functional);
  CHECK(passes(sp, *c));

  CHECK_FALSE(make_major_fail(*testutil::even_group()));
}

TEST_CASE("transversal covers each span coset once") {
  ConeSpace sp = cone_of(testutil::lattice6());
  auto c = make_transversal(sp);
  REQUIRE(c);
  CHECK(c->reps.size() == 6);
  CHECK(passes(sp, *c));

  CHECK_FALSE(make_transversal(cone_of(testutil::axis_ray())));
}

TEST_CASE("locally finite family needs an escaping direction") {
  ConeSpace sp = cone_of(testutil::axis_ray());
  auto c = make_nonpseudocompact_family(sp);
  REQUIRE(c);
  CHECK(passes(sp, *c));

  CHECK_FALSE(make_nonpseudocompact_family(cone_of(testutil::lattice6())));
}

TEST_CASE("open chain tracks the exact escape indices") {
  ConeSpace sp = cone_of(nat());
  auto c = make_2pc_failing_chain(sp);
  REQUIRE(c);
  CHECK(passes(sp, *c));
  // the window point -10 stays in the traced closures through index 10,
  // so a prefix of 10 is too short for a radius-10 window
  CHECK_FALSE(passes(sp, *c, 10, 10));
  CHECK(passes(sp, *c, 10, 11));

  CHECK_FALSE(make_2pc_failing_chain(cone_of(testutil::even_group())));
}

TEST_CASE("p-space refuters are tied to the star variant") {
  ConeSpace star = star_of(nat());
  auto c = make_p_space_refuter(star);
  REQUIRE(c);
  CHECK(passes(star, *c));

  ConeSpace cone = cone_of(nat());
  CHECK_THROWS_AS(make_p_space_refuter(cone), contract_error);
  CHECK_THROWS_AS(verify(cone, *c, Window{8}, 16), contract_error);
}

TEST_CASE("convergent subsequences live in group topologies") {
  SequenceRule seq;
  seq.branches = {AffineBranch{zero(zn(1)), element(zn(1), {1})}};
  CHECK_FALSE(make_convergent_subseq(cone_of(nat()), seq, 8));

  ConeSpace even = cone_of(testutil::even_group());
  auto c = make_convergent_subseq(even, seq, 8);
  REQUIRE(c);
  CHECK(c->limit == element(zn(1), {0}));
  CHECK(c->indices == std::vector<long>{0, 2, 4, 6});
  CHECK(passes(even, *c));
}

TEST_CASE("maker availability mirrors the monoid invariants") {
  for (const MonoidPtr& m :
       {nat(), testutil::even_group(), testutil::cone2(), testutil::axis_ray(),
        testutil::lattice6(), testutil::torsion_part(), testutil::zero_monoid(),
        make_monoid(lex_monoid(2))}) {
    ConeSpace sp = cone_of(m);
    CHECK(make_non_t0(*m).has_value() == !m->units().is_trivial());
    CHECK(make_transversal(sp).has_value() == m->span().index().has_value());
    CHECK(make_nonpseudocompact_family(sp).has_value() == !m->span().index().has_value());
    CHECK(make_major_fail(*m).has_value() == !m->majorization().holds);
    CHECK(make_2pc_failing_chain(sp).has_value() == !m->majorization().holds);
  }
}

TEST_CASE("single field mutations always fail verification") {
  int rejected = 0;
  auto expect_fail = [&](const ConeSpace& sp, Certificate c) {
    VerificationReport r = verify(sp, c, Window{8}, 16);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.failure.empty());
    if (!r.pass) ++rejected;
  };

  ConeSpace even = cone_of(testutil::even_group());
  Certificate nt = *make_non_t0(*even.monoid);
  for (int bad : {0, 1, 3, -5}) {
    Certificate c = nt;
    c.point = element(zn(1), {bad});
    expect_fail(even, c);
  }

  ConeSpace half = cone_of(nat());
  Certificate mf = *make_major_fail(*half.monoid);
  for (int bad : {0, -1, -7}) {
    Certificate c = mf;
    c.point = element(zn(1), {bad});
    expect_fail(half, c);
  }
  for (int w : {0, -1}) {
    Certificate c = mf;
    c.functional = PositivityFunctional{{Int(w)}};
    expect_fail(half, c);
  }
  {
    Certificate c = mf;
    c.functional = PositivityFunctional{{Int(1), Int(1)}};  // wrong arity
    expect_fail(half, c);
  }

  Certificate oc = *make_2pc_failing_chain(half);
  for (int bad : {0, -1}) {
    Certificate c = oc;
    c.point = element(zn(1), {bad});
    expect_fail(half, c);
  }
  {
    Certificate c = oc;
    c.functional = PositivityFunctional{{Int(0)}};
    expect_fail(half, c);
  }

  ConeSpace axis = cone_of(testutil::axis_ray());
  Certificate lf = *make_nonpseudocompact_family(axis);
  {
    Certificate c = lf;
    c.point = element(zn(2), {1, 0});  // direction inside the span
    expect_fail(axis, c);
  }
  {
    Certificate c = lf;
    c.point = zero(zn(2));
    expect_fail(axis, c);
  }

  ConeSpace lat = cone_of(testutil::lattice6());
  Certificate tv = *make_transversal(lat);
  {
    Certificate c = tv;
    c.reps.pop_back();  // a coset goes uncovered
    expect_fail(lat, c);
  }
  {
    Certificate c = tv;
    c.reps.clear();
    expect_fail(lat, c);
  }
  {
    Certificate c = tv;
    c.reps[1] = add(zn(2), c.reps[0], element(zn(2), {2, 0}));  // duplicate coset
    expect_fail(lat, c);
  }
  {
    Certificate c = tv;
    c.reps.push_back(add(zn(2), c.reps[0], element(zn(2), {0, 3})));  // extra rep
    expect_fail(lat, c);
  }

  SequenceRule seq;
  seq.branches = {AffineBranch{zero(zn(1)), element(zn(1), {1})}};
  Certificate cs = *make_convergent_subseq(even, seq, 8);
  {
    Certificate c = cs;
    c.limit = element(zn(1), {1});  // odd limit misses every even term
    expect_fail(even, c);
  }
  {
    Certificate c = cs;
    c.indices = {0, 2, 4, 99};
    VerificationReport r = verify(even, c, Window{8}, 16);
    CHECK_FALSE(r.pass);
    CHECK(r.failure.find("index 99") != std::string::npos);
    if (!r.pass) ++rejected;
  }
  {
    Certificate c = cs;
    c.indices = {4, 2};  // not increasing
    expect_fail(even, c);
  }
  {
    Certificate c = cs;
    c.indices = {0, 1, 2};  // index 1 gives an odd term
    expect_fail(even, c);
  }
  {
    Certificate c = cs;
    c.indices.clear();
    expect_fail(even, c);
  }
  {
    Certificate c = cs;
    c.seq->branches[0].start = element(zn(1), {1});  // terms leave limit + S
    expect_fail(even, c);
  }
  {
    Certificate c = cs;
    c.indices = {0, 2, 4, 7};  // the tail index lands on an odd term
    expect_fail(even, c);
  }

  ConeSpace star = star_of(nat());
  Certificate ps = *make_p_space_refuter(star);
  for (int bad : {0, -1}) {
    Certificate c = ps;
    c.point = element(zn(1), {bad});
    expect_fail(star, c);
  }
  {
    Certificate c = ps;
    c.functional = PositivityFunctional{{Int(0)}};
    expect_fail(star, c);
  }

  ConeSpace plane = cone_of(testutil::cone2());
  Certificate mf2 = *make_major_fail(*plane.monoid);
  {
    Certificate c = mf2;
    c.point = neg(zn(2), c.point);
    expect_fail(plane, c);
  }
  {
    Certificate c = mf2;
    c.functional = PositivityFunctional{{Int(1), Int(-2)}};
    expect_fail(plane, c);
  }

  CHECK(rejected >= 30);
}

TEST_CASE("verification reports echo their inputs") {
  ConeSpace sp = cone_of(nat());
  Certificate c = *make_major_fail(*sp.monoid);
  VerificationReport r = verify(sp, c, Window{6}, 12);
  CHECK(r.pass);
  CHECK(r.kind == CertKind::major_fail);
  CHECK(r.window_radius == 6);
  CHECK(r.prefix == 12);
  CHECK_FALSE(r.checks.empty());
  CHECK(r.failure.empty());
}

TEST_CASE("verification validates the window parameters") {
  ConeSpace sp = cone_of(nat());
  Certificate c = *make_major_fail(*sp.monoid);
  CHECK_THROWS_AS(verify(sp, c, Window{-1}, 16), input_error);
  CHECK_THROWS_AS(verify(sp, c, Window{8}, 0), input_error);
}

TEST_CASE("certificate kind names round trip") {
  for (CertKind k : {CertKind::non_t0, CertKind::open_chain, CertKind::loc_finite_family,
                     CertKind::transversal, CertKind::convergent_subseq, CertKind::major_fail,
                     CertKind::p_space_fail})
    CHECK(parse_cert_kind(cert_kind_str(k)) == k);
  CHECK_FALSE(parse_cert_kind("no_such_kind"));
}

}  // TEST_SUITE
