#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace skewbrace;
using testkit::error_of;
using testkit::set_of;

namespace {

const SkewBrace& pq_i() {
  static const SkewBrace a = make_pq_brace(3, 2, 2, PqVariant::i);
  return a;
}

}  // namespace

TEST_CASE("ideal predicates on the worked examples") {
  const ElementSet c3 = set_of(6, {0, 1, 2});
  CHECK(is_ideal(pq_i(), c3));
  CHECK(testkit::naive_is_ideal(pq_i(), c3));

  const GroupTable s3 = builtin_group("S3");
  const ElementSet two = set_of(6, {0, 3});
  const SkewBrace t = build_trivial(s3);
  CHECK(is_left_ideal(t, two));
  CHECK(is_subbrace(t, two));
  CHECK_FALSE(is_ideal(t, two));
  const SkewBrace at = build_almost_trivial(s3);
  CHECK_FALSE(is_left_ideal(at, two));
  CHECK(is_subbrace(at, two));
  CHECK(is_left_ideal(at, set_of(6, {0, 1, 2})));
  CHECK_FALSE(is_subbrace(t, set_of(6, {0, 3, 4})));
}

TEST_CASE("left cosets agree") {
  const ElementSet c3 = set_of(6, {0, 1, 2});
  CHECK(coset_agreement(pq_i(), c3, pq_element(3, 1, 1)));
  for (Elem a = 0; a < 6; ++a) {
    CHECK(coset_agreement(pq_i(), ElementSet::trivial(6), a));
    CHECK(coset_agreement(pq_i(), ElementSet::full(6), a));
  }
  const SkewBrace at = build_almost_trivial(builtin_group("S3"));
  CHECK(error_of([&] { coset_agreement(at, set_of(6, {0, 3}), 1); }) == ErrorCode::NotALeftIdeal);
}

TEST_CASE("star products of subsets") {
  const ElementSet all = ElementSet::full(6);
  const ElementSet c3 = set_of(6, {0, 1, 2});
  CHECK(star_subgroup(pq_i(), all, all) == c3);
  CHECK(star_subgroup(pq_i(), c3, all).is_trivial());
  CHECK(star_subgroup(pq_i(), all, c3) == c3);
  const SkewBrace t = build_trivial(builtin_group("S3"));
  CHECK(star_subgroup(t, all, all).is_trivial());
  for (const auto& nb : catalog_braces()) {
    if (nb.brace.order() > 12) continue;
    const ElementSet whole = ElementSet::full(nb.brace.order());
    CHECK(testkit::to_std(star_subgroup(nb.brace, whole, whole)) == testkit::naive_star(nb.brace, whole, whole));
  }
}

TEST_CASE("ideal closure") {
  CHECK(ideal_closure(pq_i(), ElementSet(6)).is_trivial());
  const SkewBrace t = build_trivial(builtin_group("S3"));
  CHECK(ideal_closure(t, set_of(6, {3})).is_full());
  CHECK(ideal_closure(pq_i(), set_of(6, {1})) == set_of(6, {0, 1, 2}));
  // Least ideal containing S, checked against the full ideal lattice.
  for (const auto& nb : catalog_braces()) {
    const SkewBrace& a = nb.brace;
    if (a.order() > 12) continue;
    const auto ideals = all_ideals(a);
    for (Elem x = 0; x < a.order(); ++x) {
      const ElementSet s = set_of(a.order(), {x});
      ElementSet meet = ElementSet::full(a.order());
      for (const auto& i : ideals)
        if (i.contains(x)) meet = meet & i;
      INFO(nb.name << " x=" << x);
      CHECK(ideal_closure(a, s) == meet);
    }
  }
}

TEST_CASE("Huq commutator") {
  const ElementSet all = ElementSet::full(6);
  const auto rep = huq_commutator_report(pq_i(), all, all);
  CHECK(rep.commutator == set_of(6, {0, 1, 2}));
  CHECK(rep.presentations_agree);
  CHECK(rep.symmetric);
  CHECK(huq_commutator(pq_i(), ElementSet::trivial(6), all).is_trivial());
  const SkewBrace ab = build_trivial(builtin_group("C6"));
  CHECK(huq_commutator(ab, all, all).is_trivial());
  const SkewBrace t = build_trivial(builtin_group("S3"));
  CHECK(error_of([&] { huq_commutator(t, set_of(6, {0, 3}), all); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("Huq presentations agree on every ideal pair") {
  for (const auto& l : testkit::corpus(12, 8)) {
    const auto ideals = all_ideals(l.brace);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        const auto rep = huq_commutator_report(l.brace, i, j);
        INFO(l.name);
        REQUIRE(rep.presentations_agree);
        REQUIRE(rep.symmetric);
        REQUIRE(is_ideal(l.brace, rep.commutator));
      }
  }
}

TEST_CASE("quotient braces") {
  const auto q = quotient_brace(pq_i(), set_of(6, {0, 1, 2}));
  CHECK(q.brace.order() == 2);
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) CHECK(q.brace.star(x, y) == 0);

  const auto same = quotient_brace(pq_i(), ElementSet::trivial(6));
  CHECK(same.brace.dot_rows() == pq_i().dot_rows());
  CHECK(same.brace.circ_rows() == pq_i().circ_rows());
  CHECK(quotient_brace(pq_i(), ElementSet::full(6)).brace.order() == 1);

  const SkewBrace t = build_trivial(builtin_group("S3"));
  CHECK(error_of([&] { quotient_brace(t, set_of(6, {0, 3})); }) == ErrorCode::NotAnIdeal);
  const SkewBrace big = make_counterexample_F(5);
  CHECK(error_of([&] { quotient_brace(big, ElementSet::trivial(big.order())); }) == ErrorCode::QuotientTooLarge);
}

TEST_CASE("subgroup and ideal enumeration") {
  CHECK(all_dot_subgroups(build_trivial(builtin_group("S3"))).size() == 6);
  CHECK(all_dot_subgroups(build_trivial(builtin_group("C2^3"))).size() == 16);
  CHECK(all_ideals(pq_i()).size() == 3);
  const SkewBrace big = build_trivial(builtin_group("C2^7"));
  CHECK(error_of([&] { all_ideals(big); }) == ErrorCode::TooLargeForIdealEnumeration);
}

TEST_CASE("generator form of star subgroups matches the full product") {
  // Ideal pairs of table braces.
  for (const auto& l : testkit::corpus(12, 6)) {
    const auto ideals = all_ideals(l.brace);
    for (const auto& x : ideals)
      for (const auto& y : ideals) {
        INFO(l.name);
        REQUIRE(star_subgroup_generated(l.brace, x, y) == star_subgroup(l.brace, x, y));
      }
  }
  // Formula braces against their materialized tables, along the series the
  // generator form is used for.
  for (const SkewBrace& f : {testkit::small_bc_81(), testkit::small_bc_729()}) {
    const SkewBrace t = to_table_brace(f);
    const ElementSet whole = ElementSet::full(f.order());
    const SeriesChain left = left_series(t), right = right_series(t);
    for (const auto& term : left.terms) CHECK(star_subgroup_generated(f, whole, term) == star_subgroup(t, whole, term));
    for (const auto& term : right.terms) CHECK(star_subgroup_generated(f, term, whole) == star_subgroup(t, term, whole));
    const auto ann = annihilator_series(t);
    for (const auto& term : ann.terms) CHECK(star_subgroup_generated(f, term, whole) == star_subgroup(t, term, whole));
  }
}
