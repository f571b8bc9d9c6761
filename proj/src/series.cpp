#include "skewbrace/series.hpp"

namespace skewbrace {

namespace {

std::size_t cap_for(const SkewBrace& a, SeriesOptions opt) {
  return opt.max_terms != 0 ? opt.max_terms : a.order() + 2;
}

// Descending chain with next = step(current); stops on the first repeat.
template <class Step>
SeriesChain descending(const SkewBrace& a, SeriesKind kind, ElementSet first, std::size_t cap,
                       Step&& step) {
  SeriesChain chain{kind, 1, {std::move(first)}};
  for (;;) {
    if (chain.terms.size() >= cap) {
      chain.truncated = true;
      break;
    }
    ElementSet next = step(chain.terms.back());
    if (next == chain.terms.back()) break;
    chain.terms.push_back(std::move(next));
  }
  (void)a;
  chain.stabilized_at = chain.last_index();
  chain.reaches_terminal = chain.last().is_trivial();
  return chain;
}

template <class Lift>
SeriesChain ascending(const SkewBrace& a, SeriesKind kind, std::size_t cap, Lift&& lift) {
  SeriesChain chain{kind, 0, {ElementSet::trivial(a.order())}};
  for (;;) {
    if (chain.terms.size() >= cap) {
      chain.truncated = true;
      break;
    }
    ElementSet next = lift(chain.terms.back());
    if (next == chain.terms.back()) break;
    chain.terms.push_back(std::move(next));
  }
  chain.stabilized_at = chain.last_index();
  chain.reaches_terminal = chain.last().is_full();
  return chain;
}

}  // namespace

SeriesChain left_series(const SkewBrace& a, SeriesOptions opt) {
  const ElementSet whole = ElementSet::full(a.order());
  return descending(a, SeriesKind::left, whole, cap_for(a, opt),
                    [&](const ElementSet& cur) { return star_of_substructures(a, whole, cur); });
}

SeriesChain right_series(const SkewBrace& a, SeriesOptions opt) {
  const ElementSet whole = ElementSet::full(a.order());
  return descending(a, SeriesKind::right, whole, cap_for(a, opt),
                    [&](const ElementSet& cur) { return star_of_substructures(a, cur, whole); });
}

SeriesChain smoktunowicz_series(const SkewBrace& a, SeriesOptions opt) {
  const std::size_t cap = opt.max_terms != 0 ? opt.max_terms : 4 * a.order() + 4;
  SeriesChain chain{SeriesKind::smoktunowicz, 1, {ElementSet::full(a.order())}};
  std::size_t run_start = 1;  // first index of the current constant run
  for (;;) {
    const std::size_t m = chain.last_index();
    if (m >= 2 * run_start) break;
    if (chain.terms.size() >= cap) {
      chain.truncated = true;
      break;
    }
    // A^[m+1] from the pairs (i, m+1-i), i = 1..m; terms are 1-based.
    const DotGroup dot(a);
    SubgroupBuilder<DotGroup> b(dot);
    for (std::size_t i = 1; i <= m; ++i)
      b.add_all(star_of_substructures(a, chain.terms[i - 1], chain.terms[m - i]));
    ElementSet next = std::move(b).take();
    if (!(next == chain.terms.back())) run_start = m + 1;
    chain.terms.push_back(std::move(next));
  }
  if (!chain.truncated) chain.terms.resize(run_start);
  chain.stabilized_at = chain.last_index();
  chain.reaches_terminal = chain.last().is_trivial();
  return chain;
}

ElementSet lift_socle(const SkewBrace& a, const ElementSet& below) {
  const auto range = a.quantifier_range();
  ElementSet next(a.order());
  for (Elem x = 0; x < a.order(); ++x) {
    bool ok = true;
    for (Elem y : range)
      if (!below.contains(a.star(x, y)) || !below.contains(a.dot_commutator(x, y))) {
        ok = false;
        break;
      }
    if (ok) next.insert(x);
  }
  return next;
}

ElementSet lift_annihilator(const SkewBrace& a, const ElementSet& below) {
  const auto range = a.quantifier_range();
  ElementSet next(a.order());
  for (Elem x = 0; x < a.order(); ++x) {
    bool ok = true;
    for (Elem y : range)
      if (!below.contains(a.star(x, y)) || !below.contains(a.dot_commutator(x, y)) ||
          !below.contains(a.circ_commutator(x, y))) {
        ok = false;
        break;
      }
    if (ok) next.insert(x);
  }
  return next;
}

ElementSet socle(const SkewBrace& a) { return lift_socle(a, ElementSet::trivial(a.order())); }

ElementSet annihilator(const SkewBrace& a) {
  return lift_annihilator(a, ElementSet::trivial(a.order()));
}

SeriesChain socle_series(const SkewBrace& a, SeriesOptions opt) {
  return ascending(a, SeriesKind::socle, cap_for(a, opt),
                   [&](const ElementSet& cur) { return lift_socle(a, cur); });
}

SeriesChain annihilator_series(const SkewBrace& a, SeriesOptions opt) {
  return ascending(a, SeriesKind::annihilator, cap_for(a, opt),
                   [&](const ElementSet& cur) { return lift_annihilator(a, cur); });
}

SocleQuotients socle_series_sv(const SkewBrace& a) {
  SocleQuotients out;
  SkewBrace cur = a;
  for (;;) {
    out.braces.push_back(cur);
    out.orders.push_back(cur.order());
    const ElementSet soc = socle(cur);
    if (soc.is_trivial()) break;
    cur = quotient_brace(cur, soc).brace;
  }
  return out;
}

ElementSet dot_commutator_with_all(const SkewBrace& a, const ElementSet& n) {
  const DotGroup dot(a);
  if (a.is_table_backed()) return commutator_set(dot, ElementSet::full(a.order()), n);
  // For normal N, [A, N] is the normal closure of commutators of generators.
  ElementSet seeds = ElementSet::trivial(a.order());
  const auto ngens = dot_generators_of(a, n);
  for (Elem g : a.dot_generators())
    for (Elem h : ngens) seeds.insert(commutator(dot, g, h));
  return normal_closure(dot, seeds, a.dot_generators());
}

SeriesChain gamma_series(const SkewBrace& a, SeriesOptions opt) {
  const ElementSet whole = ElementSet::full(a.order());
  return descending(a, SeriesKind::gamma, whole, cap_for(a, opt), [&](const ElementSet& cur) {
    const DotGroup dot(a);
    SubgroupBuilder<DotGroup> b(dot);
    b.add_all(star_of_substructures(a, cur, whole));
    b.add_all(star_of_substructures(a, whole, cur));
    b.add_all(dot_commutator_with_all(a, cur));
    return std::move(b).take();
  });
}

SeriesChain gamma_prime_series(const SkewBrace& a, SeriesOptions opt) {
  if (!a.is_table_backed())
    throw Error(ErrorCode::TooLarge, "the Huq-commutator series needs a table-backed brace");
  const ElementSet whole = ElementSet::full(a.order());
  return descending(a, SeriesKind::gamma_prime, whole, cap_for(a, opt),
                    [&](const ElementSet& cur) { return huq_commutator(a, whole, cur); });
}

SeriesChain relative_gamma_series(const SkewBrace& a, const ElementSet& ideal, SeriesOptions opt) {
  if (!a.is_table_backed())
    throw Error(ErrorCode::TooLarge, "the relative series needs a table-backed brace");
  if (!is_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "relative series of a non-ideal");
  return descending(a, SeriesKind::relative_gamma, ideal, cap_for(a, opt),
                    [&](const ElementSet& cur) { return huq_commutator(a, ideal, cur); });
}

std::optional<std::size_t> terminal_index(const SeriesChain& c) {
  if (!c.reaches_terminal) return std::nullopt;
  return c.stabilized_at;
}

const SeriesChain& SeriesCache::left() {
  if (!left_) left_ = left_series(a_, opt_);
  return *left_;
}
const SeriesChain& SeriesCache::right() {
  if (!right_) right_ = right_series(a_, opt_);
  return *right_;
}
const SeriesChain& SeriesCache::smoktunowicz() {
  if (!smok_) smok_ = smoktunowicz_series(a_, opt_);
  return *smok_;
}
const SeriesChain& SeriesCache::socle() {
  if (!soc_) soc_ = socle_series(a_, opt_);
  return *soc_;
}
const SeriesChain& SeriesCache::annihilator() {
  if (!ann_) ann_ = annihilator_series(a_, opt_);
  return *ann_;
}
const SeriesChain& SeriesCache::gamma() {
  if (!gamma_) gamma_ = gamma_series(a_, opt_);
  return *gamma_;
}
const SeriesChain& SeriesCache::dot_lower() {
  if (!dot_lower_) dot_lower_ = lower_central_series(DotGroup(a_));
  return *dot_lower_;
}
const SeriesChain& SeriesCache::dot_upper() {
  if (!dot_upper_) dot_upper_ = upper_central_series(DotGroup(a_));
  return *dot_upper_;
}
const SeriesChain& SeriesCache::circ_lower() {
  if (!circ_lower_) circ_lower_ = lower_central_series(CircGroup(a_));
  return *circ_lower_;
}
const SeriesChain& SeriesCache::circ_upper() {
  if (!circ_upper_) circ_upper_ = upper_central_series(CircGroup(a_));
  return *circ_upper_;
}

}  // namespace skewbrace
