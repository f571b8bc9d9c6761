#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skewbrace/chain.hpp"
#include "skewbrace/element_set.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {

using Table = std::vector<std::vector<Elem>>;

// A finite group as a Cayley table. The identity is always index 0.
class GroupTable {
 public:
  GroupTable() = default;

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  static constexpr Elem identity() noexcept { return 0; }
  std::span<const Elem> generators() const noexcept { return gens_; }
  static constexpr bool exhaustive() noexcept { return true; }

  bool is_abelian() const noexcept;
  Table rows() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mul_ == b.mul_; }

 private:
  friend GroupTable validate_group(const Table& table);
  friend GroupTable group_from_trusted_table(std::size_t n, std::vector<Elem> mul);

  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
};

struct GroupAxioms {
  Elem identity;
  std::vector<Elem> inverse;
};

// Checks the group axioms on a raw square table without relabeling.
// Throws MalformedTable, NoIdentity, NoInverse(x) or NotAssociative(x, y, z).
GroupAxioms check_group_axioms(const Table& table);

// Validates a Cayley table and relabels the identity to index 0 (by swapping
// it with whatever element carried label 0).
GroupTable validate_group(const Table& table);

// For tables produced internally from an already-valid structure (quotients,
// products). Skips the O(n^3) associativity check; identity must be 0.
GroupTable group_from_trusted_table(std::size_t n, std::vector<Elem> mul);

// Anything with a multiplication, inverses and a generating set over the
// indices 0..order-1 with identity 0. `exhaustive()` says whether universal
// quantifiers should range over every element (small tables) or only over
// the generating set (formula-backed groups, where that is exact because
// the quantified condition is preserved by products).
template <class G>
concept FiniteGroup = requires(const G& g, Elem a) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.mul(a, a) } -> std::same_as<Elem>;
  { g.inv(a) } -> std::same_as<Elem>;
  { g.generators() } -> std::convertible_to<std::span<const Elem>>;
  { g.exhaustive() } -> std::convertible_to<bool>;
};

template <FiniteGroup G>
Elem commutator(const G& g, Elem a, Elem b) {
  return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

template <FiniteGroup G>
Elem conjugate(const G& g, Elem by, Elem x) {
  return g.mul(g.mul(by, x), g.inv(by));
}

// Elements over which "for all g" conditions are evaluated.
template <FiniteGroup G>
std::vector<Elem> quantifier_range(const G& g) {
  if (g.exhaustive()) {
    std::vector<Elem> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
    return all;
  }
  auto gens = g.generators();
  return {gens.begin(), gens.end()};
}

// Grows a subgroup one element at a time. Adding x closes the current span
// under right multiplication by x and then closes the new elements under all
// generators, so each call costs roughly the number of new elements.
template <FiniteGroup G>
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const G& g) : g_(&g), span_(ElementSet::trivial(g.order())) {}
  // Keeps a pointer to the group.
  explicit SubgroupBuilder(const G&&) = delete;

  // Returns true if the span grew.
  bool add(Elem x) {
    if (span_.contains(x)) return false;
    gens_.push_back(x);
    std::vector<Elem> queue;
    for (Elem m : span_.members()) {
      const Elem y = g_->mul(m, x);
      if (span_.insert(y)) queue.push_back(y);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem q = queue[head];
      for (Elem s : gens_) {
        const Elem y = g_->mul(q, s);
        if (span_.insert(y)) queue.push_back(y);
      }
    }
    return true;
  }
  void add_all(const ElementSet& s) {
    s.for_each([&](Elem x) { add(x); });
  }

  const ElementSet& span() const noexcept { return span_; }
  ElementSet take() && { return std::move(span_); }
  const std::vector<Elem>& generators() const noexcept { return gens_; }

 private:
  const G* g_;
  ElementSet span_;
  std::vector<Elem> gens_;
};

// Smallest subgroup containing `seeds`.
template <FiniteGroup G>
ElementSet subgroup_closure(const G& g, std::span<const Elem> seeds) {
  SubgroupBuilder<G> b(g);
  for (Elem s : seeds) b.add(s);
  return std::move(b).take();
}

template <FiniteGroup G>
ElementSet subgroup_closure(const G& g, const ElementSet& seeds) {
  SubgroupBuilder<G> b(g);
  b.add_all(seeds);
  return std::move(b).take();
}

// Greedy generating set for a subgroup H: scan H in index order and keep every
// element not already generated by the ones kept so far.
template <FiniteGroup G>
std::vector<Elem> subgroup_generators(const G& g, const ElementSet& h) {
  SubgroupBuilder<G> b(g);
  b.add_all(h);
  return b.generators();
}

template <FiniteGroup G>
bool is_subgroup(const G& g, const ElementSet& h) {
  if (!h.contains(0)) return false;
  if (g.exhaustive()) {
    const auto members = h.members();
    for (Elem x : members) {
      if (!h.contains(g.inv(x))) return false;
      for (Elem y : members)
        if (!h.contains(g.mul(x, y))) return false;
    }
    return true;
  }
  // Large carriers: compare with the generated subgroup instead of testing
  // every product.
  return subgroup_closure(g, h) == h;
}

// Smallest subgroup containing `seeds` that is stable under conjugation by
// every element of `conjugators`.
template <FiniteGroup G>
ElementSet normal_closure(const G& g, const ElementSet& seeds,
                          std::span<const Elem> conjugators) {
  SubgroupBuilder<G> b(g);
  b.add_all(seeds);
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x : b.span().members())
      for (Elem c : conjugators)
        if (b.add(conjugate(g, c, x))) changed = true;
  }
  return std::move(b).take();
}

template <FiniteGroup G>
bool is_normal(const G& g, const ElementSet& h) {
  if (!is_subgroup(g, h))
    throw Error(ErrorCode::NotASubgroup, "is_normal: argument is not a subgroup");
  const auto range = quantifier_range(g);
  bool normal = true;
  h.for_each([&](Elem x) {
    if (!normal) return;
    for (Elem c : range)
      if (!h.contains(conjugate(g, c, x))) {
        normal = false;
        return;
      }
  });
  return normal;
}

template <FiniteGroup G>
ElementSet center(const G& g) {
  const auto range = quantifier_range(g);
  ElementSet z(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Elem x = static_cast<Elem>(i);
    bool central = true;
    for (Elem a : range)
      if (g.mul(x, a) != g.mul(a, x)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return z;
}

// [X, Y]: subgroup generated by all commutators [x, y] = x y x^-1 y^-1.
template <FiniteGroup G>
ElementSet commutator_set(const G& g, const ElementSet& x, const ElementSet& y) {
  ElementSet seeds(g.order());
  const auto ys = y.members();
  x.for_each([&](Elem a) {
    for (Elem b : ys) seeds.insert(commutator(g, a, b));
  });
  return subgroup_closure(g, seeds);
}

template <FiniteGroup G>
SeriesChain lower_central_series(const G& g) {
  SeriesChain chain{SeriesKind::group_lower, 1, {ElementSet::full(g.order())}};
  const ElementSet whole = ElementSet::full(g.order());
  for (std::size_t step = 0; step <= g.order(); ++step) {
    const ElementSet& cur = chain.terms.back();
    ElementSet next;
    if (g.exhaustive()) {
      next = commutator_set(g, whole, cur);
    } else {
      // [G, N] for normal N is the normal closure of commutators of generators.
      ElementSet seeds(g.order());
      const auto cur_gens = subgroup_generators(g, cur);
      for (Elem a : g.generators())
        for (Elem b : cur_gens) seeds.insert(commutator(g, a, b));
      next = normal_closure(g, seeds, g.generators());
    }
    if (next == cur) break;
    chain.terms.push_back(std::move(next));
  }
  chain.stabilized_at = chain.last_index();
  chain.reaches_terminal = chain.last().is_trivial();
  return chain;
}

// x lies in zeta_{n+1} iff [x, a] lies in zeta_n for all a.
template <FiniteGroup G>
ElementSet lift_center(const G& g, const ElementSet& below) {
  const auto range = quantifier_range(g);
  ElementSet next(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Elem x = static_cast<Elem>(i);
    bool ok = true;
    for (Elem a : range)
      if (!below.contains(commutator(g, x, a))) {
        ok = false;
        break;
      }
    if (ok) next.insert(x);
  }
  return next;
}

template <FiniteGroup G>
SeriesChain upper_central_series(const G& g) {
  SeriesChain chain{SeriesKind::group_upper, 0, {ElementSet::trivial(g.order())}};
  for (std::size_t step = 0; step <= g.order(); ++step) {
    ElementSet next = lift_center(g, chain.terms.back());
    if (next == chain.terms.back()) break;
    chain.terms.push_back(std::move(next));
  }
  chain.stabilized_at = chain.last_index();
  chain.reaches_terminal = chain.last().is_full();
  return chain;
}

// Least c with zeta_c(G) = G, if G is nilpotent.
inline std::optional<std::size_t> nilpotency_class(const SeriesChain& upper) {
  if (!upper.reaches_terminal) return std::nullopt;
  return upper.stabilized_at;
}

struct CentralInclusion {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;  // (x, y) with [x, y] outside zeta_k
};

// [zeta_n(G), gamma_{n-k}(G)] <= zeta_k(G), checked on every pair.
template <FiniteGroup G>
CentralInclusion check_group_central_inclusion(const G& g, std::size_t n, std::size_t k) {
  if (n < 1 || k >= n)
    throw Error(ErrorCode::BadIndices, "need n >= 1 and 0 <= k <= n-1");
  const SeriesChain upper = upper_central_series(g);
  const SeriesChain lower = lower_central_series(g);
  const ElementSet& zn = upper.term(n);
  const ElementSet& zk = upper.term(k);
  const auto ys = lower.term(n - k).members();
  CentralInclusion out;
  zn.for_each([&](Elem x) {
    if (!out.holds) return;
    for (Elem y : ys)
      if (!zk.contains(commutator(g, x, y))) {
        out.holds = false;
        out.witness = std::make_pair(x, y);
        return;
      }
  });
  return out;
}

struct QuotientGroup {
  GroupTable group;
  std::vector<Elem> projection;       // carrier -> quotient index
  std::vector<Elem> representatives;  // quotient index -> minimal carrier index
};

// Coset partition by left cosets x*N, numbered in order of their minimal
// element, so the identity coset is 0.
template <FiniteGroup G>
std::pair<std::vector<Elem>, std::vector<Elem>> coset_partition(const G& g,
                                                               const ElementSet& n) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> proj(g.order(), unset);
  std::vector<Elem> reps;
  const auto members = n.members();
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (proj[i] != unset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(i));
    for (Elem m : members) proj[g.mul(static_cast<Elem>(i), m)] = id;
  }
  return {std::move(proj), std::move(reps)};
}

QuotientGroup quotient_group(const GroupTable& g, const ElementSet& n);

}  // namespace skewbrace
