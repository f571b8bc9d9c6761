#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace skewbrace;
using testkit::error_of;

namespace {

Table mod_table(std::size_t n, auto f) {
  Table t(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<Elem>(f(x, y) % n);
  return t;
}

Table klein_rows() { return mod_table(4, [](std::size_t x, std::size_t y) { return x ^ y; }); }

}  // namespace

TEST_CASE("pq braces have the advertised group structures") {
  const SkewBrace a = make_pq_brace(3, 2, 2, PqVariant::i);
  CHECK(a.order() == 6);
  CHECK(a.dot_table()->is_abelian());
  CHECK_FALSE(a.circ_table()->is_abelian());
  CHECK(center(CircGroup(a)).is_trivial());

  const SkewBrace b = make_pq_brace(3, 2, 2, PqVariant::ii);
  CHECK_FALSE(b.dot_table()->is_abelian());
  CHECK(b.circ_table()->is_abelian());

  CHECK(error_of([] { make_pq_brace(5, 3, 2, PqVariant::i); }) == ErrorCode::BadParameters);
  CHECK(error_of([] { make_pq_brace(7, 3, 1, PqVariant::i); }) == ErrorCode::BadParameters);
  CHECK(error_of([] { make_pq_brace(7, 3, 3, PqVariant::i); }) == ErrorCode::BadParameters);
  CHECK(error_of([] { make_pq_brace(9, 2, 8, PqVariant::i); }) == ErrorCode::BadParameters);
}

TEST_CASE("pq (i) star product follows the closed form") {
  const SkewBrace a = make_pq_brace(3, 2, 2, PqVariant::i);
  CHECK(a.star(pq_element(3, 0, 1), pq_element(3, 1, 0)) == pq_element(3, 1, 0));
  // (i,j)*(s,t) = ((k^j - 1) s, 0) with k = 2.
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) {
      const std::uint32_t j = x / 3, s = y % 3;
      const std::uint32_t kj = j == 0 ? 1 : 2;
      CHECK(a.star(x, y) == pq_element(3, (kj + 2) * s % 3, 0));
    }
  // lambda_(0,1) acts on the first coordinate by k.
  CHECK(a.lambda(pq_element(3, 0, 1), pq_element(3, 1, 0)) == pq_element(3, 2, 0));
}

TEST_CASE("trivial and almost trivial braces") {
  const GroupTable s3 = builtin_group("S3");
  const SkewBrace t = build_trivial(s3);
  const SkewBrace at = build_almost_trivial(s3);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      CHECK(t.lambda(a, b) == b);
      CHECK(t.star(a, b) == 0);
      CHECK(at.lambda(a, b) == s3.mul(s3.mul(s3.inv(a), b), a));
      CHECK(at.circ(a, b) == s3.mul(b, a));
    }
  for (Elem a = 0; a < 6; ++a) CHECK(t.bar(a) == s3.inv(a));
  CHECK(build_trivial(builtin_group("C2")).order() == 2);
}

TEST_CASE("circ inverse") {
  const SkewBrace a = make_pq_brace(3, 2, 2, PqVariant::i);
  CHECK(a.bar(0) == 0);
  const Elem x = pq_element(3, 1, 1);
  CHECK(a.circ(x, a.bar(x)) == 0);
  CHECK(a.circ(a.bar(x), x) == 0);
}

TEST_CASE("radical rings") {
  // Zero multiplication on C3 gives the trivial brace.
  const Table add3 = mod_table(3, [](auto x, auto y) { return x + y; });
  const Table zero3 = mod_table(3, [](auto, auto) { return 0; });
  const SkewBrace z = build_from_radical_ring(add3, zero3);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) CHECK(z.circ(x, y) == z.dot(x, y));

  // {0, x} with x x = 0.
  const SkewBrace sq = build_from_radical_ring({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
  CHECK(sq.order() == 2);
  CHECK(sq.circ(1, 1) == 0);

  // Z/4 with a*b = 2ab: the circle group is Klein.
  const Table add4 = mod_table(4, [](auto x, auto y) { return x + y; });
  const Table mult4 = mod_table(4, [](auto x, auto y) { return 2 * x * y; });
  const SkewBrace r = build_from_radical_ring(add4, mult4);
  CHECK(r.star(1, 1) == 2);
  for (Elem x = 0; x < 4; ++x) {
    CHECK(r.circ(x, x) == 0);
    for (Elem y = 0; y < 4; ++y) CHECK(r.star(x, y) == mult4[x][y]);
  }

  // Z/2 with the usual product: 1 o x = 1 for every x.
  const Table add2 = mod_table(2, [](auto x, auto y) { return x + y; });
  const Table mult2 = mod_table(2, [](auto x, auto y) { return x * y; });
  CHECK(error_of([&] { build_from_radical_ring(add2, mult2); }) == ErrorCode::NotRadical);
  // 1 * 1 = 1 with 0 * 1 = 1 breaks distributivity.
  CHECK(error_of([&] { build_from_radical_ring(add2, {{0, 1}, {0, 1}}); }) == ErrorCode::NotARing);
  // S3 is not an additive group.
  CHECK(error_of([&] { build_from_radical_ring(builtin_group("S3").rows(), mod_table(6, [](auto, auto) { return 0; })); }) ==
        ErrorCode::NotARing);
}

TEST_CASE("validate_brace") {
  const Table c4 = mod_table(4, [](auto x, auto y) { return x + y; });
  // C4 with the Z/4 radical-ring circle (a Klein group) is a brace.
  CHECK_NOTHROW(validate_brace(c4, klein_rows()));
  // A Klein table whose identity sits at label 1 cannot match.
  Table shifted(4, std::vector<Elem>(4));
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) shifted[x][y] = ((x ^ 1) ^ (y ^ 1)) ^ 1;
  try {
    validate_brace(c4, shifted);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BraceRelationFails);
    CHECK(e.witness().size() == 3);
  }
  // Corrupt one entry of pq (i).
  const SkewBrace pq = make_pq_brace(3, 2, 2, PqVariant::i);
  Table circ = pq.circ_rows();
  std::swap(circ[4][1], circ[4][2]);
  CHECK(error_of([&] { validate_brace(pq.dot_rows(), circ); }).has_value());
  CHECK(error_of([&] { validate_brace(pq.dot_rows(), Table{{0, 1}, {1, 0}}); }) == ErrorCode::MalformedTable);
}

TEST_CASE("identity suite on pq braces") {
  for (auto v : {PqVariant::i, PqVariant::ii}) {
    const auto rep = check_identities(make_pq_brace(3, 2, 2, v));
    CHECK(rep.passed);
    CHECK(rep.triples_checked == 216);
  }
  CHECK(check_identities(build_trivial(builtin_group("A4"))).passed);
}

TEST_CASE("lambda properties over the catalog") {
  for (const auto& nb : catalog_braces()) {
    INFO(nb.name);
    CHECK(check_lambda_properties(nb.brace).passed);
    CHECK(check_identities(nb.brace).passed);
  }
}

TEST_CASE("materializing a brace preserves every operation") {
  const SkewBrace f = testkit::small_bc_81();
  const SkewBrace t = to_table_brace(f);
  REQUIRE(t.is_table_backed());
  for (Elem x = 0; x < f.order(); ++x) {
    CHECK(t.bar(x) == f.bar(x));
    CHECK(t.inv(x) == f.inv(x));
    for (Elem y = 0; y < f.order(); y += 7) {
      CHECK(t.dot(x, y) == f.dot(x, y));
      CHECK(t.circ(x, y) == f.circ(x, y));
    }
  }
  CHECK(check_identities(t).passed);
}
