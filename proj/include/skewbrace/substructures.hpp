#pragma once

#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

enum class IdealKind { subbrace, left_ideal, ideal };

struct IdealTag {
  IdealKind kind;
  ElementSet set;
};

bool is_subbrace(const SkewBrace& a, const ElementSet& s);
bool is_left_ideal(const SkewBrace& a, const ElementSet& s);
bool is_ideal(const SkewBrace& a, const ElementSet& s);

// a.I == a o I as sets. Throws NotALeftIdeal.
bool coset_agreement(const SkewBrace& a, const ElementSet& left_ideal, Elem x);

// Subgroup of (A, .) generated by every x*y with x in X, y in Y.
ElementSet star_subgroup(const SkewBrace& a, const ElementSet& x, const ElementSet& y);

// Same subgroup from far fewer products, valid when X is a subgroup of
// (A, o), Y a subgroup of (A, .) and X*Y lies in Y: the (A, .)-subgroup
// generated by x*g (x among o-generators of X, g among .-generators of Y),
// closed under conjugation by the .-generators of Y.
ElementSet star_subgroup_generated(const SkewBrace& a, const ElementSet& x, const ElementSet& y);

// The products x*g used as seeds above, paired with their operands.
struct StarSeed {
  Elem x, y, value;
};
std::vector<StarSeed> star_seeds(const SkewBrace& a, const ElementSet& x, const ElementSet& y);

// Full enumeration on table braces, the generator form otherwise.
ElementSet star_of_substructures(const SkewBrace& a, const ElementSet& x, const ElementSet& y);

// Generating sets for a subgroup of either law; the stored generators are
// returned when the subgroup is everything.
std::vector<Elem> dot_generators_of(const SkewBrace& a, const ElementSet& s);
std::vector<Elem> circ_generators_of(const SkewBrace& a, const ElementSet& s);

// Least ideal containing S.
ElementSet ideal_closure(const SkewBrace& a, const ElementSet& s);

struct HuqReport {
  ElementSet commutator;   // <[I,J], [I,J]_o, I*J>^A
  ElementSet alternative;  // <[I,J], I*J, J*I>^A
  ElementSet swapped;      // the first presentation for (J, I)
  bool presentations_agree = false;
  bool symmetric = false;
};

// Throws NotAnIdeal.
HuqReport huq_commutator_report(const SkewBrace& a, const ElementSet& i, const ElementSet& j);
ElementSet huq_commutator(const SkewBrace& a, const ElementSet& i, const ElementSet& j);

struct QuotientBrace {
  SkewBrace brace;
  std::vector<Elem> projection;
  std::vector<Elem> representatives;
};

inline constexpr std::size_t kQuotientLimit = 4096;

// Throws NotAnIdeal, QuotientTooLarge.
QuotientBrace quotient_brace(const SkewBrace& a, const ElementSet& ideal);

// Every subgroup of (A, .) and every ideal, for |A| <= 64 (else
// TooLargeForIdealEnumeration). Sorted by size, then members.
std::vector<ElementSet> all_dot_subgroups(const SkewBrace& a);
std::vector<ElementSet> all_ideals(const SkewBrace& a);

}  // namespace skewbrace
