#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace skewbrace;
using testkit::orders_of;
using testkit::set_of;

namespace {

using Orders = std::vector<std::size_t>;

const SkewBrace& pq(PqVariant v) {
  static const SkewBrace i = make_pq_brace(3, 2, 2, PqVariant::i);
  static const SkewBrace ii = make_pq_brace(3, 2, 2, PqVariant::ii);
  return v == PqVariant::i ? i : ii;
}

const ElementSet kC3 = set_of(6, {0, 1, 2});

}  // namespace

TEST_CASE("left and right series of the pq braces") {
  const SeriesChain li = left_series(pq(PqVariant::i));
  CHECK(li.terms == std::vector<ElementSet>{ElementSet::full(6), kC3});
  CHECK_FALSE(li.reaches_terminal);
  CHECK(li.term(9) == kC3);
  const SeriesChain ri = right_series(pq(PqVariant::i));
  CHECK(ri.terms == std::vector<ElementSet>{ElementSet::full(6), kC3, ElementSet::trivial(6)});
  CHECK(terminal_index(ri) == 3u);

  const SeriesChain lii = left_series(pq(PqVariant::ii));
  CHECK(lii.terms == std::vector<ElementSet>{ElementSet::full(6), kC3, ElementSet::trivial(6)});
  const SeriesChain rii = right_series(pq(PqVariant::ii));
  CHECK(rii.terms == std::vector<ElementSet>{ElementSet::full(6), kC3});
  CHECK_FALSE(rii.reaches_terminal);

  const SkewBrace t = build_trivial(builtin_group("S3"));
  CHECK(orders_of(left_series(t)) == Orders{6, 1});
  CHECK(orders_of(right_series(t)) == Orders{6, 1});
}

TEST_CASE("Smoktunowicz series") {
  const SkewBrace t = build_trivial(builtin_group("C6"));
  CHECK(orders_of(smoktunowicz_series(t)) == Orders{6, 1});
  const SeriesChain si = smoktunowicz_series(pq(PqVariant::i));
  CHECK(si.term(2) == kC3);
  CHECK_FALSE(si.reaches_terminal);
  CHECK_FALSE(smoktunowicz_series(pq(PqVariant::ii)).reaches_terminal);
  // Z/8 with 2ab: a nilpotent radical ring, so the chain ends.
  for (const auto& nb : catalog_braces())
    if (nb.name == "radical_ring(Z/8,2ab)") CHECK(smoktunowicz_series(nb.brace).reaches_terminal);
}

TEST_CASE("socle and annihilator") {
  CHECK(socle(pq(PqVariant::i)) == kC3);
  CHECK(annihilator(pq(PqVariant::i)).is_trivial());
  for (const char* g : {"S3", "D8", "Q8", "C6"}) {
    const GroupTable grp = builtin_group(g);
    const SkewBrace t = build_trivial(grp);
    CHECK(socle(t) == center(grp));
    CHECK(annihilator(t) == center(grp));
  }
  const SkewBrace one = build_trivial(builtin_group("C1"));
  CHECK(socle(one).is_full());
  CHECK(annihilator(one).is_full());
}

TEST_CASE("socle and annihilator series") {
  const SeriesChain s = socle_series(pq(PqVariant::i));
  CHECK(s.first_index == 0);
  CHECK(s.terms == std::vector<ElementSet>{ElementSet::trivial(6), kC3, ElementSet::full(6)});
  const SeriesChain an = annihilator_series(pq(PqVariant::i));
  CHECK(an.terms.size() == 1);
  for (std::size_t n = 0; n < 6; ++n) CHECK(an.term(n).is_trivial());

  // Trivial braces on nilpotent groups: both equal the upper central series.
  for (const char* g : {"D8", "Q8", "C4xC2", "Q16", "D16"}) {
    const GroupTable grp = builtin_group(g);
    const SkewBrace t = build_trivial(grp);
    const SeriesChain up = upper_central_series(grp);
    CHECK(socle_series(t).terms == up.terms);
    CHECK(annihilator_series(t).terms == up.terms);
    CHECK(socle_series(t).stabilized_at == nilpotency_class(up));
  }
}

TEST_CASE("socle quotient chain") {
  CHECK(socle_series_sv(pq(PqVariant::i)).orders == Orders{6, 2, 1});
  CHECK(socle_series_sv(build_trivial(builtin_group("C6"))).orders == Orders{6, 1});
  CHECK(socle_series_sv(build_trivial(builtin_group("C1"))).orders == Orders{1});
  // |A_n| = |A| / |Soc_{n-1}(A)| along the whole chain.
  for (const auto& l : testkit::corpus(12, 8)) {
    const auto sv = socle_series_sv(l.brace);
    const SeriesChain soc = socle_series(l.brace);
    INFO(l.name);
    for (std::size_t n = 1; n <= sv.orders.size(); ++n)
      CHECK(sv.orders[n - 1] * soc.term(n - 1).size() == l.brace.order());
    CHECK(sv.orders.size() == soc.terms.size());
  }
}

TEST_CASE("Gamma series") {
  const SeriesChain g = gamma_series(pq(PqVariant::i));
  CHECK(g.terms == std::vector<ElementSet>{ElementSet::full(6), kC3});
  CHECK_FALSE(g.reaches_terminal);
  for (const char* name : {"S3", "D8", "A4", "Q8"}) {
    const GroupTable grp = builtin_group(name);
    CHECK(gamma_series(build_trivial(grp)).terms == lower_central_series(grp).terms);
  }
  CHECK(gamma_series(build_trivial(builtin_group("C1"))).last().is_trivial());
}

TEST_CASE("relative lower central series") {
  const SkewBrace& a = pq(PqVariant::i);
  CHECK(relative_gamma_series(a, ElementSet::trivial(6)).terms.size() == 1);
  CHECK(relative_gamma_series(a, ElementSet::full(6)).terms == gamma_prime_series(a).terms);
  // [C3, C3]^A: additive and circle commutators vanish on C3, and so does
  // C3 * C3, so the chain drops to 1 at once.
  const SeriesChain rel = relative_gamma_series(a, kC3);
  CHECK(rel.terms == std::vector<ElementSet>{kC3, ElementSet::trivial(6)});
  const SkewBrace t = build_trivial(builtin_group("S3"));
  CHECK_THROWS_AS(relative_gamma_series(t, set_of(6, {0, 3})), Error);
}

TEST_CASE("almost trivial braces: left and right series are the lower central series") {
  for (const char* name : {"S3", "D8", "Q8", "A4", "D12", "C2^3"}) {
    const GroupTable grp = builtin_group(name);
    const SkewBrace at = build_almost_trivial(grp);
    const SeriesChain low = lower_central_series(grp);
    INFO(name);
    CHECK(left_series(at).terms == low.terms);
    CHECK(right_series(at).terms == low.terms);
    CHECK(gamma_series(at).terms == low.terms);
    CHECK(socle_series(at).terms == upper_central_series(grp).terms);
    CHECK(annihilator_series(at).terms == upper_central_series(grp).terms);
  }
}

TEST_CASE("socle series and the circle group center are not comparable") {
  const SkewBrace& a = pq(PqVariant::i);
  const SeriesChain circ_up = upper_central_series(CircGroup(a));
  CHECK(socle_series(a).term(2).is_full());
  CHECK(circ_up.term(2).is_trivial());
  const SkewBrace& b = pq(PqVariant::ii);
  const SeriesChain circ_up_b = upper_central_series(CircGroup(b));
  for (std::size_t n = 0; n < 5; ++n) CHECK(socle_series(b).term(n).is_trivial());
  for (std::size_t n = 1; n < 5; ++n) CHECK(circ_up_b.term(n).is_full());
}

TEST_CASE("chains are monotone and the terms have the right shape") {
  for (const auto& l : testkit::corpus(12, 8)) {
    const SkewBrace& a = l.brace;
    SeriesCache c(a);
    INFO(l.name);
    for (const SeriesChain* ch : {&c.left(), &c.right(), &c.smoktunowicz(), &c.gamma()}) {
      CHECK_FALSE(ch->truncated);
      for (std::size_t i = 1; i < ch->terms.size(); ++i) REQUIRE(ch->terms[i].is_subset_of(ch->terms[i - 1]));
    }
    for (const SeriesChain* ch : {&c.socle(), &c.annihilator()})
      for (std::size_t i = 1; i < ch->terms.size(); ++i) REQUIRE(ch->terms[i - 1].is_subset_of(ch->terms[i]));
    for (const auto& t : c.smoktunowicz().terms) REQUIRE(testkit::naive_is_left_ideal(a, t));
    REQUIRE(gamma_prime_series(a).terms == c.gamma().terms);
    REQUIRE(check_series_inclusions(c));
  }
}

TEST_CASE("formula braces agree with their tables on every series") {
  for (const SkewBrace& f : {testkit::small_bc_81(), testkit::small_bc_729()}) {
    const SkewBrace t = to_table_brace(f);
    CHECK(left_series(f).terms == left_series(t).terms);
    CHECK(right_series(f).terms == right_series(t).terms);
    CHECK(smoktunowicz_series(f).terms == smoktunowicz_series(t).terms);
    CHECK(socle_series(f).terms == socle_series(t).terms);
    CHECK(annihilator_series(f).terms == annihilator_series(t).terms);
    CHECK(gamma_series(f).terms == gamma_series(t).terms);
    CHECK(lower_central_series(DotGroup(f)).terms == lower_central_series(DotGroup(t)).terms);
    CHECK(upper_central_series(CircGroup(f)).terms == upper_central_series(CircGroup(t)).terms);
  }
}

TEST_CASE("series options cap the chain") {
  const SeriesChain c = right_series(pq(PqVariant::i), SeriesOptions{2});
  CHECK(c.terms.size() == 2);
  CHECK(c.truncated);
  CHECK_THROWS_AS(c.term(0), Error);
}
