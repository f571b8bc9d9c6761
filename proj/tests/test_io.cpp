#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace skewbrace;
using testkit::error_of;

TEST_CASE("brace specs parse into the right families") {
  const SkewBrace pq = build_brace(parse_brace_spec_text(R"({"kind":"pq","p":3,"q":2,"k":2,"variant":"i"})"));
  CHECK(circ_key(pq) == circ_key(make_pq_brace(3, 2, 2, PqVariant::i)));

  const SkewBrace t = build_brace(parse_brace_spec_text(R"({"kind":"trivial","group":"S3"})"));
  CHECK(t.order() == 6);
  const SkewBrace at = build_brace(parse_brace_spec_text(R"({"kind":"almost_trivial","group":[[0,1],[1,0]]})"));
  CHECK(at.order() == 2);

  const SkewBrace r = build_brace(parse_brace_spec_text(
      R"({"kind":"radical_ring","add":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
          "mult":[[0,0,0,0],[0,2,0,2],[0,0,0,0],[0,2,0,2]]})"));
  CHECK(r.star(1, 1) == 2);

  const SkewBrace bc = build_brace(parse_brace_spec_text(
      R"({"kind":"bc","p":3,"d_B":1,"d_C":1,"phi":[[[1]]],"psi":[[[1]]]})"));
  CHECK(bc.order() == 9);
  CHECK_FALSE(bc.is_table_backed());

  const auto ce = parse_brace_spec_text(R"({"kind":"counterexample_F","p":5})");
  CHECK(std::get<CounterexampleSpec>(ce).p == 5);
}

TEST_CASE("malformed documents are parse errors") {
  for (const char* doc : {"not json", "[]", R"({"kind":"pq"})", R"({"kind":"mystery"})",
                          R"({"kind":"pq","p":3,"q":2,"k":2,"variant":"iii"})",
                          R"({"kind":"tables","dot":[[0,1],[1,0]],"circ":"x"})",
                          R"({"kind":"tables","dot":[[0,-1],[1,0]],"circ":[[0,1],[1,0]]})",
                          R"({"kind":"trivial","group":"Z99x"})",
                          R"({"kind":"bc","p":3,"d_B":1,"d_C":1,"phi":[],"psi":[[[1]]]})"}) {
    INFO(doc);
    CHECK(error_of([&] { parse_brace_spec_text(doc); }) == ErrorCode::ParseError);
  }
  CHECK(error_of([] { read_brace_file("/nonexistent/brace.json"); }) == ErrorCode::ParseError);
  CHECK(exit_code_for(ErrorCode::ParseError) == 1);
  CHECK(exit_code_for(ErrorCode::MalformedTable) == 1);
  CHECK(exit_code_for(ErrorCode::BraceRelationFails) == 2);
  CHECK(exit_code_for(ErrorCode::TooLarge) == 3);
  CHECK(exit_code_for(ErrorCode::QuotientTooLarge) == 3);
}

TEST_CASE("tables form round trips") {
  for (const auto& l : testkit::corpus(12, 6)) {
    const std::string text = tables_json(l.brace).dump();
    const SkewBrace back = build_brace(parse_brace_spec_text(text));
    INFO(l.name);
    CHECK(back.dot_rows() == l.brace.dot_rows());
    CHECK(back.circ_rows() == l.brace.circ_rows());
    CHECK(tables_json(back).dump() == text);
  }
}

TEST_CASE("sets and chains serialize deterministically") {
  const SkewBrace a = make_pq_brace(3, 2, 2, PqVariant::i);
  CHECK(set_json(a, ElementSet::of(6, {2, 0, 1})).dump() == "[0,1,2]");
  const json chain = chain_json(a, right_series(a));
  CHECK(chain["orders"].dump() == "[6,3,1]");
  CHECK(chain["kind"] == "right");
  CHECK(chain["reaches_terminal"] == true);
  CHECK(profile_json(nilpotency_profile(a))["left"].is_null());

  const SkewBrace f = make_counterexample_F(5);
  const FormulaBrace& fb = *f.formula();
  CHECK(element_json(f, fb.basis_c(1)).dump() == "[[0,0,0,0],[1,0,0,0]]");
  const json s = set_json(f, ElementSet::full(f.order()));
  CHECK(s["order"] == 390625);
  CHECK(s["generators"].size() == 8);

  const std::string text = render_text(chain);
  CHECK(text.find("orders: [6,3,1]") != std::string::npos);
}

TEST_CASE("fixture files build") {
  const std::string dir = SKEWBRACE_TEST_DATA;
  CHECK(build_brace(read_brace_file(dir + "/pq_i.json")).order() == 6);
  CHECK(build_brace(read_brace_file(dir + "/radical_z4.json")).order() == 4);
  CHECK(error_of([&] { build_brace(read_brace_file(dir + "/corrupted_tables.json")); }) == ErrorCode::NotAssociative);
  CHECK(error_of([&] { build_brace(read_brace_file(dir + "/c4_klein_mismatch.json")); }) ==
        ErrorCode::BraceRelationFails);
  CHECK(error_of([&] { build_brace(read_brace_file(dir + "/bad_prime.json")); }) == ErrorCode::BadPrime);
  CHECK(error_of([&] { read_brace_file(dir + "/malformed.json"); }) == ErrorCode::ParseError);
}
