#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "happy/io.hpp"
#include "happy/verify.hpp"

using namespace happy;

TEST_CASE("parse_happy reads the p3 fixture") {
  ColoredGraph g = parse_happy("p happy 3 2 2\ne 1 2\ne 2 3\nc 1 1\nc 3 2\n");
  CHECK(g == happy::testing::p3_fixture());
}

TEST_CASE("parse_happy accepts comments and loose whitespace") {
  ColoredGraph g =
      parse_happy("# a fixture\np happy 3 2 2\n\n  e 2   1\ne 2 3\nc 1 1\nc 3 2");
  CHECK(g == happy::testing::p3_fixture());
}

TEST_CASE("parse_happy single vertex") {
  ColoredGraph g = parse_happy("p happy 1 0 1\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.precoloring().empty());
}

TEST_CASE("parse_happy error cases carry line numbers") {
  CHECK_THROWS_AS(parse_happy("p happy 2 1 1\ne 1 1\n"), ParseError);
  try {
    parse_happy("p happy 2 1 1\ne 1 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_happy("p happy 2 2 1\ne 1 2\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_happy("p happy 2 1 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_happy("p happy 2 0 1\nc 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_happy("p happy 2 0 1\nc 1 1\nc 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_happy("p happy 2 2 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_happy("p wrong 1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_happy("x happy\n"), ParseError);
  CHECK_THROWS_AS(parse_happy(""), ParseError);
  CHECK_THROWS_AS(parse_happy("p happy 2 0 1\nz 1 1\n"), ParseError);
}

TEST_CASE("parse_gmc reads groups") {
  GmcInstance inst = parse_gmc("p gmc 3 2 2\ne 1 2\ne 2 3\nt 1 1\nt 2 3\n");
  CHECK(inst.graph.vertex_count() == 3);
  CHECK(inst.groups.size() == 2);
  CHECK(inst.groups[0] == std::set<Vertex>{1});
  CHECK(inst.groups[1] == std::set<Vertex>{3});
}

TEST_CASE("gmc groups must be disjoint") {
  CHECK_THROWS_AS(parse_gmc("p gmc 2 0 2\nt 1 1\nt 2 1\n"), ParseError);
}

TEST_CASE("gmc single terminal instance") {
  GmcInstance inst = parse_gmc("p gmc 1 0 1\nt 1 1\n");
  CHECK(inst.groups.size() == 1);
}

TEST_CASE("parse_wexpr basics") {
  WExpression single = parse_wexpr("(v 1 1)");
  CHECK(single.vertex_ids() == std::vector<Vertex>{1});

  WExpression edge = parse_wexpr("(n 1 2 (u (v 1 1) (v 2 2)))");
  LabeledGraph lg = eval_wexpr(edge);
  CHECK(lg.edges == std::set<Edge>{{1, 2}});

  CHECK_THROWS_AS(parse_wexpr("(u (v 1 1) (v 1 2))"), ParseError);
  CHECK_THROWS_AS(parse_wexpr("(n 1 1 (v 1 1))"), ParseError);
  CHECK_THROWS_AS(parse_wexpr("(v 1 1"), ParseError);
  CHECK_THROWS_AS(parse_wexpr("(v 1 1) junk"), ParseError);
  CHECK_THROWS_AS(parse_wexpr("(q 1 1)"), ParseError);
}

TEST_CASE("wexpr errors carry line and column") {
  try {
    parse_wexpr("(u (v 1 1)\n   (v 1 2))");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("rmis and crbds parse and serialize") {
  RmisInstance rmis = happy::testing::c4_rmis();
  CHECK(parse_rmis(serialize_rmis(rmis)) == rmis);
  CHECK_THROWS_AS(parse_rmis("p rmis 2 1 1 2\ne 1 2\nq 1 1\nq 1 2\n"),
                  InvalidInstance);  // not 2-regular

  CrbdsInstance crbds = happy::testing::small_crbds();
  CHECK(parse_crbds(serialize_crbds(crbds)) == crbds);
  CHECK_THROWS_AS(parse_crbds("p crbds 2 1 1 1\ne 1 1\nc 1 1\n"), ParseError);
}

TEST_CASE("parse_instance dispatches on the header") {
  CHECK(parse_instance("p happy 1 0 1\n").kind == InstanceFile::Kind::kHappy);
  CHECK(parse_instance("p gmc 1 0 0\n").kind == InstanceFile::Kind::kGmc);
  CHECK(parse_instance("  (v 3 1) ").kind == InstanceFile::Kind::kWexpr);
  CHECK_THROWS_AS(parse_instance("p nope 1\n"), ParseError);
}

TEST_CASE("round-trip identity on fuzzed instances") {
  auto result = verify_io_roundtrip(60, 1);
  for (const auto& f : result.failures) MESSAGE(f);
  CHECK(result.pass);
}
