#include "skewbrace/classify.hpp"

#include <algorithm>

#include "skewbrace/catalog.hpp"

namespace skewbrace {

namespace {

std::optional<std::size_t> minus_one(std::optional<std::size_t> v) {
  if (!v) return std::nullopt;
  return *v == 0 ? 0 : *v - 1;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

TheoremCheck biconditional(std::string name, bool lhs, bool rhs) {
  TheoremCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.agree = lhs == rhs;
  c.detail = "lhs=" + yes_no(lhs) + " rhs=" + yes_no(rhs);
  return c;
}

}  // namespace

NilpotencyProfile nilpotency_profile(SeriesCache& cache) {
  NilpotencyProfile p;
  p.left = minus_one(terminal_index(cache.left()));
  p.right = minus_one(terminal_index(cache.right()));
  p.socle = terminal_index(cache.socle());
  p.annihilator = terminal_index(cache.annihilator());
  p.add_group = nilpotency_class(cache.dot_upper());
  p.mult_group = nilpotency_class(cache.circ_upper());
  p.smoktunowicz = minus_one(terminal_index(cache.smoktunowicz()));
  return p;
}

NilpotencyProfile nilpotency_profile(const SkewBrace& a) {
  SeriesCache cache(a);
  return nilpotency_profile(cache);
}

bool TheoremReport::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.agree; });
}

TheoremReport check_equivalence_theorems(SeriesCache& cache) {
  const SkewBrace& a = cache.brace();
  const NilpotencyProfile p = nilpotency_profile(cache);
  const bool left = p.left.has_value(), right = p.right.has_value();
  const bool soc = p.socle.has_value(), ann = p.annihilator.has_value();
  const bool add = p.add_group.has_value(), mult = p.mult_group.has_value();

  TheoremReport r;
  r.checks.push_back(biconditional("socle_iff_right_and_additive", right && add, soc));
  const bool ca = left && right && add, cb = right && add && mult;
  r.checks.push_back(biconditional("annihilator_a_iff_c", ca, ann));
  r.checks.push_back(biconditional("annihilator_b_iff_c", cb, ann));
  r.checks.push_back(
      biconditional("smoktunowicz_iff_left_and_right", cache.smoktunowicz().reaches_terminal, left && right));

  // Ann_{n-1} = A iff Gamma_n = 1, index by index.
  const SeriesChain& gam = cache.gamma();
  const SeriesChain& an = cache.annihilator();
  {
    TheoremCheck c;
    c.name = "annihilator_index_iff_gamma_index";
    const std::size_t top = std::max(gam.last_index(), an.last_index() + 1) + 1;
    c.lhs = c.rhs = true;
    for (std::size_t n = 1; n <= top; ++n) {
      const bool ann_full = an.term(n - 1).is_full();
      const bool gam_trivial = gam.term(n).is_trivial();
      if (ann_full != gam_trivial) {
        c.agree = false;
        c.lhs = ann_full;
        c.rhs = gam_trivial;
        c.detail = "disagreement at n=" + std::to_string(n);
        break;
      }
    }
    const auto gi = terminal_index(gam);
    const auto ai = terminal_index(an);
    if (c.agree) {
      if (gi.has_value() != ai.has_value() || (gi && *gi != *ai + 1)) {
        c.agree = false;
        c.detail = "least indices do not match";
      } else {
        c.lhs = ai.has_value();
        c.rhs = gi.has_value();
        c.detail = gi ? "least Gamma index " + std::to_string(*gi) + " = least Ann index " +
                            std::to_string(*ai) + " + 1"
                      : "neither chain terminates";
      }
    }
    r.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.name = "gamma_equals_gamma_prime";
    if (!a.is_table_backed()) {
      c.skipped = true;
      c.detail = "needs a table-backed brace";
    } else {
      const SeriesChain gp = gamma_prime_series(a);
      const std::size_t top = std::max(gam.last_index(), gp.last_index());
      c.lhs = c.rhs = true;
      for (std::size_t n = 1; n <= top; ++n)
        if (!(gam.term(n) == gp.term(n))) {
          c.agree = false;
          c.lhs = false;
          c.detail = "terms differ at n=" + std::to_string(n);
          break;
        }
      if (c.agree) c.detail = "equal through n=" + std::to_string(top);
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

TheoremReport check_equivalence_theorems(const SkewBrace& a) {
  SeriesCache cache(a);
  return check_equivalence_theorems(cache);
}

BkpReport check_bkp(SeriesCache& cache) {
  const NilpotencyProfile p = nilpotency_profile(cache);
  BkpReport r;
  r.hypothesis = p.left.has_value() && p.add_group.has_value() && cache.left().term(3).is_trivial();
  r.right_nilpotent = p.right.has_value();
  r.holds = !r.hypothesis || r.right_nilpotent;
  return r;
}

char to_char(InclusionLabel l) { return static_cast<char>('A' + static_cast<int>(l)); }

std::optional<InclusionLabel> inclusion_from_char(char c) {
  if (c >= 'a' && c <= 'h') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'H') return std::nullopt;
  return static_cast<InclusionLabel>(c - 'A');
}

std::string inclusion_formula(InclusionLabel l) {
  switch (l) {
    case InclusionLabel::A: return "Soc_n * A^{n-k} <= Soc_k";
    case InclusionLabel::B: return "Soc_n * A^(n-k) <= Soc_k";
    case InclusionLabel::C: return "A^{n-k} * Soc_n <= Soc_k";
    case InclusionLabel::D: return "A^(n-k) * Soc_n <= Soc_k";
    case InclusionLabel::E: return "Ann_n * A^{n-k} <= Ann_k";
    case InclusionLabel::F: return "Ann_n * A^(n-k) <= Ann_k";
    case InclusionLabel::G: return "A^{n-k} * Ann_n <= Ann_k";
    case InclusionLabel::H: return "A^(n-k) * Ann_n <= Ann_k";
  }
  return "";
}

InclusionResult check_inclusion(SeriesCache& cache, InclusionLabel label, std::size_t n,
                                std::size_t k) {
  if (n < 1 || k >= n) throw Error(ErrorCode::BadIndices, "need n >= 1 and 0 <= k <= n-1");
  const SkewBrace& a = cache.brace();
  const int l = static_cast<int>(label);
  const SeriesChain& ascending = l < 4 ? cache.socle() : cache.annihilator();
  const bool left_kind = (l % 2) == 0;  // A, C, E, G use the left series
  const SeriesChain& descending = left_kind ? cache.left() : cache.right();
  const bool ascending_first = (l % 4) < 2;  // A, B, E, F

  const ElementSet& top = ascending.term(n);
  const ElementSet& power = descending.term(n - k);
  const ElementSet& x = ascending_first ? top : power;
  const ElementSet& y = ascending_first ? power : top;

  InclusionResult r;
  r.label = label;
  r.n = n;
  r.k = k;
  r.bound = ascending.term(k);
  if (a.is_table_backed()) {
    const auto ys = y.members();
    x.for_each([&](Elem u) {
      if (!r.holds) return;
      for (Elem v : ys) {
        const Elem s = a.star(u, v);
        if (!r.bound.contains(s)) {
          r.holds = false;
          r.witness = InclusionWitness{u, v, s};
          return;
        }
      }
    });
    r.star_set = star_subgroup(a, x, y);
  } else {
    // The bound is an ideal, so the generated star subgroup lies inside it
    // exactly when every seed does.
    for (const auto& s : star_seeds(a, x, y))
      if (!r.bound.contains(s.value)) {
        r.holds = false;
        r.witness = InclusionWitness{s.x, s.y, s.value};
        break;
      }
    r.star_set = star_subgroup_generated(a, x, y);
  }
  return r;
}

InclusionResult check_inclusion(const SkewBrace& a, InclusionLabel label, std::size_t n,
                                std::size_t k) {
  SeriesCache cache(a);
  return check_inclusion(cache, label, n, k);
}

bool CounterexampleReport::passed() const {
  return validated && right2_matches && right3_matches && ann3_contains_expected && star_matches &&
         !inclusion_f.holds && inclusion_e.holds;
}

CounterexampleReport verify_counterexample_F(std::uint32_t p, std::uint64_t seed) {
  CounterexampleReport r;
  r.p = p;
  const SkewBrace a = make_counterexample_F(p, seed);
  r.validated = true;
  r.order = a.order();
  const FormulaBrace& f = *a.formula();
  const DotGroup dot(a);
  const Elem e1 = f.basis_b(1), e2 = f.basis_b(2), e3 = f.basis_b(3);
  const Elem c1 = f.basis_c(1), c2 = f.basis_c(2), c3 = f.basis_c(3);

  SeriesCache cache(a);
  const SeriesChain& right = cache.right();
  r.right2 = right.term(2);
  r.right3 = right.term(3);
  r.expected_right2 = subgroup_closure(dot, ElementSet::of(a.order(), {e1, e2, e3, c1, c2}));
  r.expected_right3 = subgroup_closure(dot, ElementSet::of(a.order(), {c1, c2}));
  r.right2_matches = r.right2 == r.expected_right2;
  r.right3_matches = r.right3 == r.expected_right3;

  const SeriesChain& ann = cache.annihilator();
  for (std::size_t i = 0; i <= ann.last_index(); ++i) r.ann_orders.push_back(ann.term(i).size());
  const ElementSet& ann3 = ann.term(3);
  r.ann3_contains_expected = true;
  for (Elem g : {e1, e2, e3, c1, c2, c3})
    if (!ann3.contains(g)) r.ann3_contains_expected = false;

  r.star_value = a.star(e3, c2);
  r.expected_star = c1;
  r.star_matches = r.star_value == r.expected_star;

  r.inclusion_f = check_inclusion(cache, InclusionLabel::F, 3, 0);
  r.inclusion_e = check_inclusion(cache, InclusionLabel::E, 3, 0);
  return r;
}

std::optional<std::size_t> rel_ann_nilpotency_class(const SkewBrace& a, const ElementSet& ideal) {
  return terminal_index(relative_gamma_series(a, ideal));
}

bool is_rel_ann_nilpotent(const SkewBrace& a, const ElementSet& ideal) {
  return rel_ann_nilpotency_class(a, ideal).has_value();
}

ElementSet fitting_ideal(const SkewBrace& a) {
  ElementSet seeds = ElementSet::trivial(a.order());
  for (const auto& i : all_ideals(a))
    if (is_rel_ann_nilpotent(a, i)) seeds |= i;
  return ideal_closure(a, seeds);
}

FittingReport check_fitting_theorem(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  FittingReport r;
  const auto m = rel_ann_nilpotency_class(a, i);
  const auto n = rel_ann_nilpotency_class(a, j);
  if (!m || !n) return r;
  r.hypothesis_met = true;
  r.m = *m;
  r.n = *n;
  r.product = subgroup_closure(DotGroup(a), i | j);
  const SeriesChain chain = relative_gamma_series(a, r.product);
  r.bound_holds = chain.term(r.m + r.n - 1).is_trivial();
  return r;
}

bool check_series_inclusions(SeriesCache& cache) {
  const SeriesChain& soc = cache.socle();
  const SeriesChain& ann = cache.annihilator();
  const SeriesChain& zd = cache.dot_upper();
  const SeriesChain& zc = cache.circ_upper();
  const std::size_t top =
      std::max({soc.last_index(), ann.last_index(), zd.last_index(), zc.last_index()}) + 1;
  for (std::size_t n = 0; n <= top; ++n) {
    if (!ann.term(n).is_subset_of(soc.term(n))) return false;
    if (!soc.term(n).is_subset_of(zd.term(n))) return false;
    if (!ann.term(n).is_subset_of(zc.term(n))) return false;
  }
  return true;
}

}  // namespace skewbrace
