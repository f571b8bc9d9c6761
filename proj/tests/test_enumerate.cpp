#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "support.hpp"

using namespace skewbrace;
using testkit::error_of;

namespace {

// Every permutation fixing 0 that respects the table.
std::set<Permutation> brute_automorphisms(const GroupTable& g) {
  const std::size_t n = g.order();
  std::set<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) ok = p[g.mul(x, y)] == g.mul(p[x], p[y]);
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::set<std::vector<Elem>> keys(const std::vector<SkewBrace>& bs) {
  std::set<std::vector<Elem>> out;
  for (const auto& b : bs) out.insert(circ_key(b));
  return out;
}

// Labeled brace counts per additive group, first recorded from the oracle
// (orders up to 6) and from the enumerator beyond that.
const std::map<std::string, std::size_t> kFrozenCounts{
    {"C1", 1},  {"C2", 1},   {"C3", 1},   {"C4", 2},    {"C2xC2", 4}, {"C5", 1},   {"C6", 2},
    {"S3", 8},  {"C7", 1},   {"C8", 6},   {"C4xC2", 28}, {"C2^3", 232}, {"D8", 20}, {"Q8", 28},
    {"C9", 3},  {"C3xC3", 9}, {"C10", 2}, {"D10", 12},  {"C11", 1},   {"C12", 6},  {"C6xC2", 12},
    {"D12", 28}, {"Q12", 28}, {"A4", 42}};

}  // namespace

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(builtin_group("C6")).size() == 2);
  CHECK(automorphism_group(builtin_group("S3")).size() == 6);
  CHECK(automorphism_group(builtin_group("C2")).size() == 1);
  for (const auto& g : small_groups(8)) {
    INFO(g.name);
    const auto auts = automorphism_group(g.group);
    CHECK(std::set<Permutation>(auts.begin(), auts.end()) == brute_automorphisms(g.group));
    Permutation id(g.group.order());
    std::iota(id.begin(), id.end(), 0);
    CHECK(auts.front() == id);
  }
  CHECK(automorphism_group(builtin_group("C2^3")).size() == 168);
  CHECK(error_of([] { automorphism_group(builtin_group("C2^7")); }) == ErrorCode::TooLarge);
}

TEST_CASE("group laws with a fixed identity") {
  // (n-1)! / |Aut| summed over the isomorphism types of order n.
  CHECK(all_group_laws(1).size() == 1);
  CHECK(all_group_laws(2).size() == 1);
  CHECK(all_group_laws(3).size() == 1);
  CHECK(all_group_laws(4).size() == 3 + 1);
  CHECK(all_group_laws(5).size() == 6);
  CHECK(all_group_laws(6).size() == 60 + 20);
  CHECK(error_of([] { all_group_laws(7); }) == ErrorCode::TooLarge);
}

TEST_CASE("enumerator agrees with the brute-force oracle") {
  for (const auto& g : small_groups(6)) {
    INFO(g.name);
    const auto fast = enumerate_braces(g.group);
    const auto slow = brute_force_oracle(g.group);
    CHECK(keys(fast) == keys(slow));
    CHECK(fast.size() == slow.size());
    CHECK(fast.size() == kFrozenCounts.at(g.name));
  }
  CHECK(brute_force_oracle(builtin_group("C1")).size() == 1);
  for (const auto& b : brute_force_oracle(builtin_group("C3"))) CHECK(b.circ_table()->is_abelian());
  CHECK(error_of([] { brute_force_oracle(builtin_group("C7")); }) == ErrorCode::TooLarge);
}

TEST_CASE("frozen counts up to order 12") {
  for (const auto& g : small_groups(12)) {
    INFO(g.name);
    CHECK(enumerate_braces(g.group).size() == kFrozenCounts.at(g.name));
  }
  CHECK(error_of([] { enumerate_braces(builtin_group("C13")); }) == ErrorCode::TooLarge);
  CHECK(enumerate_braces(builtin_group("C13"), 13).size() == 1);
}

TEST_CASE("enumerated braces contain the known examples") {
  const auto c2 = enumerate_braces(builtin_group("C2"));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].circ_rows() == c2[0].dot_rows());

  const SkewBrace pq_i = make_pq_brace(3, 2, 2, PqVariant::i);
  const GroupTable c3xc2 = validate_group(pq_i.dot_rows());
  CHECK(keys(enumerate_braces(c3xc2)).count(circ_key(pq_i)) == 1);
  CHECK(keys(enumerate_braces(c3xc2)).count(circ_key(build_trivial(c3xc2))) == 1);

  const GroupTable s3 = builtin_group("S3");
  const SkewBrace pq_ii = make_pq_brace(3, 2, 2, PqVariant::ii);
  const auto s3_keys = keys(enumerate_braces(s3));
  CHECK(s3_keys.count(circ_key(build_trivial(s3))) == 1);
  CHECK(s3_keys.count(circ_key(build_almost_trivial(s3))) == 1);
  // The catalog encodes pq (ii) on the same dihedral labels.
  REQUIRE(pq_ii.dot_rows() == s3.rows());
  CHECK(s3_keys.count(circ_key(pq_ii)) == 1);
}

TEST_CASE("every enumerated brace passes the identity and theorem suites") {
  for (const auto& g : small_groups(8)) {
    for (const auto& b : enumerate_braces(g.group)) {
      INFO(g.name);
      REQUIRE(check_identities(b).passed);
      REQUIRE(check_lambda_properties(b).passed);
      REQUIRE(check_equivalence_theorems(b).all_agree());
    }
  }
}
