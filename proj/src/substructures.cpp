#include "skewbrace/substructures.hpp"

#include <algorithm>
#include <set>

namespace skewbrace {

namespace {

// True if f(h, a) lands in S for every h in S and every quantifier element a.
template <class F>
bool stable_under(const SkewBrace& a, const ElementSet& s, F&& f) {
  const auto range = a.quantifier_range();
  bool ok = true;
  s.for_each([&](Elem h) {
    if (!ok) return;
    for (Elem x : range)
      if (!s.contains(f(x, h))) {
        ok = false;
        return;
      }
  });
  return ok;
}

}  // namespace

bool is_subbrace(const SkewBrace& a, const ElementSet& s) {
  return is_subgroup(DotGroup(a), s) && is_subgroup(CircGroup(a), s);
}

bool is_left_ideal(const SkewBrace& a, const ElementSet& s) {
  if (!is_subgroup(DotGroup(a), s)) return false;
  return stable_under(a, s, [&](Elem x, Elem h) { return a.lambda(x, h); });
}

bool is_ideal(const SkewBrace& a, const ElementSet& s) {
  if (!is_left_ideal(a, s)) return false;
  if (!stable_under(a, s, [&](Elem x, Elem h) { return conjugate(DotGroup(a), x, h); })) return false;
  return stable_under(a, s, [&](Elem x, Elem h) { return conjugate(CircGroup(a), x, h); });
}

bool coset_agreement(const SkewBrace& a, const ElementSet& left_ideal, Elem x) {
  if (!is_left_ideal(a, left_ideal))
    throw Error(ErrorCode::NotALeftIdeal, "coset_agreement needs a left ideal");
  ElementSet by_dot(a.order()), by_circ(a.order());
  left_ideal.for_each([&](Elem h) {
    by_dot.insert(a.dot(x, h));
    by_circ.insert(a.circ(x, h));
  });
  return by_dot == by_circ;
}

ElementSet star_subgroup(const SkewBrace& a, const ElementSet& x, const ElementSet& y) {
  ElementSet seeds(a.order());
  const auto ys = y.members();
  x.for_each([&](Elem u) {
    for (Elem v : ys) seeds.insert(a.star(u, v));
  });
  return subgroup_closure(DotGroup(a), seeds);
}

std::vector<Elem> dot_generators_of(const SkewBrace& a, const ElementSet& s) {
  if (s.is_full()) {
    auto g = a.dot_generators();
    return {g.begin(), g.end()};
  }
  return subgroup_generators(DotGroup(a), s);
}

std::vector<Elem> circ_generators_of(const SkewBrace& a, const ElementSet& s) {
  if (s.is_full()) {
    auto g = a.circ_generators();
    return {g.begin(), g.end()};
  }
  return subgroup_generators(CircGroup(a), s);
}

std::vector<StarSeed> star_seeds(const SkewBrace& a, const ElementSet& x, const ElementSet& y) {
  std::vector<StarSeed> seeds;
  const auto ygens = dot_generators_of(a, y);
  for (Elem u : circ_generators_of(a, x))
    for (Elem v : ygens) seeds.push_back({u, v, a.star(u, v)});
  return seeds;
}

ElementSet star_subgroup_generated(const SkewBrace& a, const ElementSet& x, const ElementSet& y) {
  ElementSet seeds = ElementSet::trivial(a.order());
  for (const auto& s : star_seeds(a, x, y)) seeds.insert(s.value);
  const auto ygens = dot_generators_of(a, y);
  return normal_closure(DotGroup(a), seeds, ygens);
}

ElementSet star_of_substructures(const SkewBrace& a, const ElementSet& x, const ElementSet& y) {
  if (a.is_table_backed()) return star_subgroup(a, x, y);
  return star_subgroup_generated(a, x, y);
}

ElementSet ideal_closure(const SkewBrace& a, const ElementSet& s) {
  const DotGroup dot(a);
  const CircGroup circ(a);
  const auto range = a.quantifier_range();
  SubgroupBuilder<DotGroup> b(dot);
  b.add_all(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem h : b.span().members())
      for (Elem x : range) {
        changed |= b.add(a.lambda(x, h));
        changed |= b.add(conjugate(dot, x, h));
        changed |= b.add(conjugate(circ, x, h));
      }
  }
  return std::move(b).take();
}

namespace {

ElementSet huq_first(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  ElementSet seeds = ElementSet::trivial(a.order());
  const auto js = j.members();
  i.for_each([&](Elem x) {
    for (Elem y : js) {
      seeds.insert(a.dot_commutator(x, y));
      seeds.insert(a.circ_commutator(x, y));
      seeds.insert(a.star(x, y));
    }
  });
  return ideal_closure(a, seeds);
}

ElementSet huq_second(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  ElementSet seeds = ElementSet::trivial(a.order());
  const auto js = j.members();
  i.for_each([&](Elem x) {
    for (Elem y : js) {
      seeds.insert(a.dot_commutator(x, y));
      seeds.insert(a.star(x, y));
      seeds.insert(a.star(y, x));
    }
  });
  return ideal_closure(a, seeds);
}

}  // namespace

HuqReport huq_commutator_report(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  if (!is_ideal(a, i) || !is_ideal(a, j))
    throw Error(ErrorCode::NotAnIdeal, "the commutator of ideals needs two ideals");
  HuqReport r;
  r.commutator = huq_first(a, i, j);
  r.alternative = huq_second(a, i, j);
  r.swapped = huq_first(a, j, i);
  r.presentations_agree = r.commutator == r.alternative;
  r.symmetric = r.commutator == r.swapped;
  return r;
}

ElementSet huq_commutator(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  if (!is_ideal(a, i) || !is_ideal(a, j))
    throw Error(ErrorCode::NotAnIdeal, "the commutator of ideals needs two ideals");
  return huq_first(a, i, j);
}

QuotientBrace quotient_brace(const SkewBrace& a, const ElementSet& ideal) {
  if (!is_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient by a set that is not an ideal");
  const std::size_t m = a.order() / ideal.size();
  if (m > kQuotientLimit)
    throw Error(ErrorCode::QuotientTooLarge,
                "quotient of order " + std::to_string(m) + " exceeds " + std::to_string(kQuotientLimit));
  auto [proj, reps] = coset_partition(DotGroup(a), ideal);
  std::vector<Elem> dot(m * m), circ(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      dot[x * m + y] = proj[a.dot(reps[x], reps[y])];
      circ[x * m + y] = proj[a.circ(reps[x], reps[y])];
    }
  SkewBrace q(std::make_shared<TableBacking>(group_from_trusted_table(m, std::move(dot)),
                                             group_from_trusted_table(m, std::move(circ))));
  return {std::move(q), std::move(proj), std::move(reps)};
}

std::vector<ElementSet> all_dot_subgroups(const SkewBrace& a) {
  if (a.order() > 64)
    throw Error(ErrorCode::TooLargeForIdealEnumeration,
                "subgroup enumeration is limited to order 64, got " + std::to_string(a.order()));
  const DotGroup dot(a);
  auto key = [](const ElementSet& s) { return s.members(); };
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> out{ElementSet::trivial(a.order())};
  seen.insert(key(out[0]));
  // Every subgroup is reached by adjoining one element at a time.
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Elem x = 0; x < a.order(); ++x) {
      if (out[head].contains(x)) continue;
      ElementSet seeds = out[head];
      seeds.insert(x);
      ElementSet h = subgroup_closure(dot, seeds);
      if (seen.insert(key(h)).second) out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end(), [&](const ElementSet& l, const ElementSet& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return key(l) < key(r);
  });
  return out;
}

std::vector<ElementSet> all_ideals(const SkewBrace& a) {
  std::vector<ElementSet> out;
  for (auto& h : all_dot_subgroups(a))
    if (is_ideal(a, h)) out.push_back(std::move(h));
  return out;
}

}  // namespace skewbrace
