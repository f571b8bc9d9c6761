#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/substructures.hpp"

namespace skewbrace {

// Caps on the number of terms computed. Zero means the built-in bound,
// which is large enough that every chain stabilizes first.
struct SeriesOptions {
  std::size_t max_terms = 0;
};

// A^1 = A, A^{n+1} = A * A^n
SeriesChain left_series(const SkewBrace& a, SeriesOptions opt = {});
// A^(1) = A, A^(n+1) = A^(n) * A
SeriesChain right_series(const SkewBrace& a, SeriesOptions opt = {});
// A^[1] = A, A^[n+1] = < A^[i] * A^[n+1-i] : 1 <= i <= n >. Stops once the
// chain has been constant on an index window [s, 2s], which forces it to stay
// constant without assuming it is monotone.
SeriesChain smoktunowicz_series(const SkewBrace& a, SeriesOptions opt = {});

ElementSet socle(const SkewBrace& a);
ElementSet annihilator(const SkewBrace& a);

// x in Soc_{n+1} iff x*a and [x,a] lie in Soc_n for every a.
ElementSet lift_socle(const SkewBrace& a, const ElementSet& below);
// Additionally [x,a]_o in Ann_n.
ElementSet lift_annihilator(const SkewBrace& a, const ElementSet& below);

SeriesChain socle_series(const SkewBrace& a, SeriesOptions opt = {});
SeriesChain annihilator_series(const SkewBrace& a, SeriesOptions opt = {});

// A_1 = A, A_{n+1} = A_n / Soc(A_n), until the socle is trivial.
struct SocleQuotients {
  std::vector<SkewBrace> braces;
  std::vector<std::size_t> orders;
};
SocleQuotients socle_series_sv(const SkewBrace& a);

// Gamma_1 = A, Gamma_{n+1} = < Gamma_n * A, A * Gamma_n, [A, Gamma_n] >
SeriesChain gamma_series(const SkewBrace& a, SeriesOptions opt = {});
// Gamma'_1 = A, Gamma'_{n+1} = [A, Gamma'_n]^A. Table backing only.
SeriesChain gamma_prime_series(const SkewBrace& a, SeriesOptions opt = {});
// Gamma_1(I) = I, Gamma_{n+1}(I) = [I, Gamma_n(I)]^A. Throws NotAnIdeal.
SeriesChain relative_gamma_series(const SkewBrace& a, const ElementSet& ideal,
                                  SeriesOptions opt = {});

// [A, N] in (A, .) for a normal subgroup N.
ElementSet dot_commutator_with_all(const SkewBrace& a, const ElementSet& n);

// Least n with the chain's term equal to its terminal value, when reached.
// For descending chains starting at 1 this is the first trivial index; for
// ascending chains starting at 0 the first full index.
std::optional<std::size_t> terminal_index(const SeriesChain& c);

// Lazily computed chains for one brace, so that checkers share work.
class SeriesCache {
 public:
  explicit SeriesCache(SkewBrace a, SeriesOptions opt = {}) : a_(std::move(a)), opt_(opt) {}

  const SkewBrace& brace() const { return a_; }
  const SeriesChain& left();
  const SeriesChain& right();
  const SeriesChain& smoktunowicz();
  const SeriesChain& socle();
  const SeriesChain& annihilator();
  const SeriesChain& gamma();
  const SeriesChain& dot_lower();
  const SeriesChain& dot_upper();
  const SeriesChain& circ_lower();
  const SeriesChain& circ_upper();

 private:
  SkewBrace a_;
  SeriesOptions opt_;
  std::optional<SeriesChain> left_, right_, smok_, soc_, ann_, gamma_;
  std::optional<SeriesChain> dot_lower_, dot_upper_, circ_lower_, circ_upper_;
};

}  // namespace skewbrace
