#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skewbrace/series.hpp"

namespace skewbrace {

struct NilpotencyProfile {
  std::optional<std::size_t> left;         // least n with A^{n+1} = 1
  std::optional<std::size_t> right;        // least n with A^(n+1) = 1
  std::optional<std::size_t> socle;        // least n with Soc_n = A
  std::optional<std::size_t> annihilator;  // least n with Ann_n = A
  std::optional<std::size_t> add_group;    // class of (A, .)
  std::optional<std::size_t> mult_group;   // class of (A, o)
  std::optional<std::size_t> smoktunowicz; // least n with A^[n+1] = 1
};

NilpotencyProfile nilpotency_profile(SeriesCache& cache);
NilpotencyProfile nilpotency_profile(const SkewBrace& a);

// One biconditional evaluated from both sides.
struct TheoremCheck {
  std::string name;
  bool lhs = false;
  bool rhs = false;
  bool agree = true;
  bool skipped = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_agree() const;
};

// Socle nilpotency vs right nilpotency with nilpotent (A, .); the
// three-way annihilator characterization; the Smoktunowicz criterion;
// Ann_{n-1} = A iff Gamma_n = 1 for every n together with the least
// indices; Gamma = Gamma' (table braces).
TheoremReport check_equivalence_theorems(SeriesCache& cache);
TheoremReport check_equivalence_theorems(const SkewBrace& a);

// Left nilpotent with nilpotent (A, .) and A^3 = 1 forces right nilpotency.
struct BkpReport {
  bool hypothesis = false;
  bool right_nilpotent = false;
  bool holds = true;
};
BkpReport check_bkp(SeriesCache& cache);

enum class InclusionLabel { A, B, C, D, E, F, G, H };
char to_char(InclusionLabel l);
std::optional<InclusionLabel> inclusion_from_char(char c);
std::string inclusion_formula(InclusionLabel l);

struct InclusionWitness {
  Elem x, y, value;
};

struct InclusionResult {
  InclusionLabel label;
  std::size_t n = 0, k = 0;
  bool holds = true;
  std::optional<InclusionWitness> witness;
  ElementSet star_set;  // the left-hand side X*Y
  ElementSet bound;     // Soc_k or Ann_k
};

// (A) Soc_n * A^{n-k} <= Soc_k    (E) Ann_n * A^{n-k} <= Ann_k
// (B) Soc_n * A^(n-k) <= Soc_k    (F) Ann_n * A^(n-k) <= Ann_k
// (C) A^{n-k} * Soc_n <= Soc_k    (G) A^{n-k} * Ann_n <= Ann_k
// (D) A^(n-k) * Soc_n <= Soc_k    (H) A^(n-k) * Ann_n <= Ann_k
// Needs n >= 1 and k <= n-1 (BadIndices).
InclusionResult check_inclusion(SeriesCache& cache, InclusionLabel label, std::size_t n,
                                std::size_t k);
InclusionResult check_inclusion(const SkewBrace& a, InclusionLabel label, std::size_t n,
                                std::size_t k);

struct CounterexampleReport {
  std::uint32_t p = 0;
  std::size_t order = 0;
  bool validated = false;
  ElementSet right2, right3;
  ElementSet expected_right2, expected_right3;
  bool right2_matches = false;
  bool right3_matches = false;
  bool ann3_contains_expected = false;  // <e1,e2,e3> x <e1,e2,e3> <= Ann_3
  std::vector<std::size_t> ann_orders;  // |Ann_0|, |Ann_1|, ...
  Elem star_value = 0;                  // (e3,0)*(0,e2)
  Elem expected_star = 0;               // (0,e1)
  bool star_matches = false;
  InclusionResult inclusion_f;          // (F) at (3, 0)
  InclusionResult inclusion_e;          // (E) at (3, 0)
  bool passed() const;
};

// Throws BadPrime.
CounterexampleReport verify_counterexample_F(std::uint32_t p, std::uint64_t seed = kDefaultSeed);

// Least n with Gamma_n(I)^A = 1. Throws NotAnIdeal.
std::optional<std::size_t> rel_ann_nilpotency_class(const SkewBrace& a, const ElementSet& ideal);
bool is_rel_ann_nilpotent(const SkewBrace& a, const ElementSet& ideal);

// Ideal generated by every ideal that is annihilator nilpotent relative to A.
// Throws TooLargeForIdealEnumeration.
ElementSet fitting_ideal(const SkewBrace& a);

struct FittingReport {
  bool hypothesis_met = false;
  std::size_t m = 0, n = 0;
  ElementSet product;  // IJ
  bool bound_holds = true;
};

FittingReport check_fitting_theorem(const SkewBrace& a, const ElementSet& i, const ElementSet& j);

// Ann_n <= Soc_n <= zeta_n(A, .) and Ann_n <= zeta_n(A, o) for every n.
bool check_series_inclusions(SeriesCache& cache);

}  // namespace skewbrace
