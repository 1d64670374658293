#include <doctest.h>

#include <conetop/report.hpp>

#include "helpers.hpp"

using namespace conetop;
using testutil::zn;

namespace {

std::string wedge_text() {
  return "group.rank = 2\n"
         "monoid.kind = generated\n"
         "monoid.generators = [[1,0],[1,1]]\n";
}

std::string error_of(const std::string& text) {
  try {
    parse_instance_text(text, "t");
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("instance") {

TEST_CASE("parse and serialize round trip") {
  Instance inst = parse_instance_text(wedge_text(), "wedge");
  CHECK(inst.name == "wedge");
  CHECK(inst.monoid.group == zn(2));
  CHECK(inst.monoid.kind == MonoidKind::generated);
  REQUIRE(inst.monoid.generators.size() == 2);
  CHECK(inst.options.window == default_window_radius);
  CHECK(inst.options.prefix == default_prefix);

  Instance back = parse_instance_text(instance_text(inst), "wedge");
  CHECK(back == inst);

  Instance lex = parse_instance_text(
      "group.rank = 3\nmonoid.kind = lex\nmonoid.lex_rank = 3\n"
      "options.window = 5\noptions.prefix = 20\n",
      "lex3");
  CHECK(lex.monoid.kind == MonoidKind::lex);
  CHECK(lex.options.window == 5);
  CHECK(lex.options.prefix == 20);
  CHECK(parse_instance_text(instance_text(lex), "lex3") == lex);
}

TEST_CASE("empty generator list is the trivial monoid") {
  Instance inst = parse_instance_text(
      "group.rank = 1\nmonoid.kind = generated\nmonoid.generators = []\n");
  CHECK(inst.monoid.generators.empty());
  CHECK(make_monoid(inst.monoid)->is_trivial());
  CHECK(parse_instance_text(instance_text(inst)) == inst);
}

TEST_CASE("torsion is canonicalized and generators follow") {
  Instance inst = parse_instance_text(
      "group.rank = 0\ngroup.torsion = [2,3]\n"
      "monoid.kind = generated\nmonoid.generators = [[1,1]]\n");
  CHECK(inst.monoid.group.rank == 0);
  CHECK(inst.monoid.group.torsion == IntVec{Int(6)});
  REQUIRE(inst.monoid.generators.size() == 1);
  CHECK(inst.monoid.generators[0].coords == IntVec{Int(5)});
  MonoidPtr m = make_monoid(inst.monoid);
  CHECK(m->span().is_full());
  CHECK(m->is_group());
}

TEST_CASE("parse errors carry the line number and key") {
  CHECK(error_of("group.rank = 1\n").find("monoid.kind") != std::string::npos);
  CHECK(error_of("group.rank = 1\nmonoid.kind = generated\n")
            .find("monoid.generators") != std::string::npos);
  CHECK(error_of("group.rank = 1\nbogus.key = 2\nmonoid.generators = []\n")
            .find("2") != std::string::npos);
  CHECK(error_of("group.rank = 1\ngroup.rank = 2\nmonoid.kind = generated\nmonoid.generators = []\n")
            .find("duplicate") != std::string::npos);
  CHECK_FALSE(error_of("group.rank = 1\ngroup.torsion = [1]\nmonoid.kind = generated\nmonoid.generators = []\n").empty());
  CHECK_FALSE(error_of("group.rank = 1\nmonoid.kind = lex\n"
                       "monoid.generators = [[1]]\nmonoid.lex_rank = 1\n")
                  .empty());
  CHECK_FALSE(error_of("group.rank = 1\nmonoid.kind = generated\nmonoid.generators = []\noptions.window = 65\n").empty());
  CHECK_FALSE(error_of("group.rank = 1\nmonoid.kind = generated\nmonoid.generators = []\noptions.prefix = 0\n").empty());
  CHECK_FALSE(error_of("group.rank = 1\nmonoid.kind = generated\nmonoid.generators = [[1,2]]\n").empty());
  CHECK_FALSE(error_of("group.rank = -1\nmonoid.kind = generated\nmonoid.generators = []\n").empty());
}

TEST_CASE("vector literals") {
  CHECK(parse_vector_literal("[1,-2,3]") == IntVec{Int(1), Int(-2), Int(3)});
  CHECK(parse_vector_literal("[]").empty());
  CHECK(parse_vector_list_literal("[[1,0],[2,3]]").size() == 2);
  CHECK(parse_vector_list_literal("[]").empty());
  CHECK_THROWS_AS(parse_vector_literal("1,2"), input_error);
  CHECK_THROWS_AS(parse_vector_list_literal("[[1,0],"), input_error);
}

TEST_CASE("coordinates beyond machine words survive the round trip") {
  Int big("1208925819614629174706176");  // 2^80
  std::string text =
      "group.rank = 1\nmonoid.kind = generated\nmonoid.generators = [[" +
      big.get_str() + "]]\n";
  Instance inst = parse_instance_text(text);
  REQUIRE(inst.monoid.generators.size() == 1);
  CHECK(inst.monoid.generators[0].coords[0] == big);
  Instance back = parse_instance_text(instance_text(inst));
  CHECK(back == inst);
  MonoidPtr m = make_monoid(inst.monoid);
  CHECK(m->member(element(zn(1), {big * 3})));
  CHECK_FALSE(m->member(element(zn(1), {big + 1})));
}

TEST_CASE("report JSON round trip") {
  Instance inst = parse_instance_text(wedge_text(), "wedge");
  ConeSpace sp{make_monoid(inst.monoid), Variant::cone};
  Report r;
  r.command = "profile";
  r.instance = InstanceEcho{inst.name, instance_text(inst)};
  SpaceReport sr;
  sr.profile = evaluate(sp);
  for (const auto& [name, v] : sr.profile.verdicts)
    if (v.certificate)
      sr.verifications.push_back(verify(sp, *v.certificate, Window{8}, 16));
  r.spaces.push_back(std::move(sr));
  r.results.emplace_back("checked", "yes");
  r.notes.push_back("round trip probe");

  Report back = parse_report_json(emit_json(r));
  CHECK(back == r);
  CHECK_FALSE(render_text(r).empty());
}

TEST_CASE("certificate file round trip") {
  Instance inst = parse_instance_text(wedge_text(), "wedge");
  ConeSpace sp{make_monoid(inst.monoid), Variant::cone};
  auto cert = make_major_fail(*sp.monoid);
  REQUIRE(cert);

  CertificateFile cf;
  cf.instance_text = instance_text(inst);
  cf.variant = Variant::cone;
  cf.certificate = *cert;
  CertificateFile back = parse_certificate_json(emit_json(cf));
  CHECK(back == cf);

  Instance again = parse_instance_text(back.instance_text);
  ConeSpace sp2{make_monoid(again.monoid), back.variant};
  CHECK(verify(sp2, back.certificate, Window{8}, 16).pass);
}

TEST_CASE("malformed JSON is an input error") {
  CHECK_THROWS_AS(parse_report_json("not json"), input_error);
  CHECK_THROWS_AS(parse_report_json("{\"schema\":\"wrong/9\"}"), input_error);
  CHECK_THROWS_AS(parse_certificate_json("[]"), input_error);
  CHECK_THROWS_AS(parse_certificate_json("{\"schema\":\"conetop.report/1\"}"), input_error);
}

}  // TEST_SUITE
