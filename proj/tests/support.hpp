#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skewbrace/catalog.hpp"
#include "skewbrace/classify.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/io.hpp"

namespace testkit {

using namespace skewbrace;

struct Labeled {
  std::string name;
  SkewBrace brace;
};

// Catalog braces with order <= max_order plus every labeled brace on every
// small group of order <= enum_order.
inline std::vector<Labeled> corpus(std::size_t max_order, std::size_t enum_order) {
  std::vector<Labeled> out;
  for (auto& nb : catalog_braces())
    if (nb.brace.order() <= max_order) out.push_back({nb.name, nb.brace});
  for (const auto& g : small_groups(enum_order)) {
    std::size_t i = 0;
    for (auto& b : enumerate_braces(g.group)) out.push_back({g.name + "#" + std::to_string(i++), b});
  }
  return out;
}

// Naive closure in (A, .): keep multiplying until nothing new appears.
inline std::set<Elem> naive_dot_closure(const SkewBrace& a, std::set<Elem> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem x : cur)
      for (Elem y : cur)
        if (s.insert(a.dot(x, y)).second) grew = true;
  }
  return s;
}

inline std::set<Elem> to_std(const ElementSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

inline std::set<Elem> naive_star(const SkewBrace& a, const ElementSet& x, const ElementSet& y) {
  std::set<Elem> seeds;
  for (Elem u : x.members())
    for (Elem v : y.members()) seeds.insert(a.star(u, v));
  return naive_dot_closure(a, seeds);
}

// Definition-level ideal test written out directly from the axioms.
inline bool naive_is_ideal(const SkewBrace& a, const ElementSet& s) {
  const std::size_t n = a.order();
  for (Elem x : s.members()) {
    if (!s.contains(a.inv(x))) return false;
    for (Elem y : s.members())
      if (!s.contains(a.dot(x, y))) return false;
    for (Elem g = 0; g < n; ++g) {
      if (!s.contains(a.lambda(g, x))) return false;
      if (!s.contains(a.dot(a.dot(g, x), a.inv(g)))) return false;
      if (!s.contains(a.circ(a.circ(g, x), a.bar(g)))) return false;
    }
  }
  return s.contains(0);
}

inline bool naive_is_left_ideal(const SkewBrace& a, const ElementSet& s) {
  for (Elem x : s.members()) {
    if (!s.contains(a.inv(x))) return false;
    for (Elem y : s.members())
      if (!s.contains(a.dot(x, y))) return false;
    for (Elem g = 0; g < a.order(); ++g)
      if (!s.contains(a.lambda(g, x))) return false;
  }
  return s.contains(0);
}

// Error code raised by f, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline ElementSet set_of(std::size_t n, std::initializer_list<Elem> xs) { return ElementSet::of(n, xs); }

inline std::vector<std::size_t> orders_of(const SeriesChain& c) {
  std::vector<std::size_t> out;
  for (const auto& t : c.terms) out.push_back(t.size());
  return out;
}

// Random subset of the carrier that always contains the identity.
inline ElementSet random_subset(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  ElementSet s = ElementSet::trivial(n);
  for (Elem x = 1; x < n; ++x)
    if (coin(rng)) s.insert(x);
  return s;
}

// The order-81 brace on F_3^2 x F_3^2 with one unipotent block on each side.
inline SkewBrace small_bc_81() {
  const std::vector<std::vector<std::int64_t>> j2{{1, 1}, {0, 1}};
  const FpMatrix id = FpMatrix::identity(2, 3);
  return make_bc_brace(3, 2, 2, {id, FpMatrix::from_rows(j2, 3)}, {id, FpMatrix::from_rows(j2, 3)});
}

// The order-729 brace on F_3^3 x F_3^3 with a full Jordan block for phi_e3
// and the same block for psi_e3.
inline SkewBrace small_bc_729() {
  const std::vector<std::vector<std::int64_t>> j3{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  const FpMatrix id = FpMatrix::identity(3, 3);
  return make_bc_brace(3, 3, 3, {id, id, FpMatrix::from_rows(j3, 3)},
                       {id, id, FpMatrix::from_rows(j3, 3)});
}

}  // namespace testkit
