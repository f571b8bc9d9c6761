#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/fp_matrix.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

// Storage behind a skew brace: two group laws on 0..order-1 sharing the
// identity 0.
class BraceBacking {
 public:
  virtual ~BraceBacking() = default;
  virtual std::size_t order() const = 0;
  virtual Elem dot(Elem a, Elem b) const = 0;
  virtual Elem circ(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  virtual Elem bar(Elem a) const = 0;
  virtual std::span<const Elem> dot_generators() const = 0;
  virtual std::span<const Elem> circ_generators() const = 0;
};

class TableBacking;
class FormulaBrace;

// A finite skew brace (A, ., o). Cheap to copy; the backing is shared and
// immutable.
class SkewBrace {
 public:
  explicit SkewBrace(std::shared_ptr<const BraceBacking> backing);

  std::size_t order() const { return impl_->order(); }
  Elem dot(Elem a, Elem b) const { return impl_->dot(a, b); }
  Elem circ(Elem a, Elem b) const { return impl_->circ(a, b); }
  Elem inv(Elem a) const { return impl_->inv(a); }
  Elem bar(Elem a) const { return impl_->bar(a); }

  // lambda_a(b) = a^-1 . (a o b)
  Elem lambda(Elem a, Elem b) const { return dot(inv(a), circ(a, b)); }
  // a * b = lambda_a(b) . b^-1
  Elem star(Elem a, Elem b) const { return dot(lambda(a, b), inv(b)); }
  // [a, b] = a b a^-1 b^-1 in (A, .)
  Elem dot_commutator(Elem a, Elem b) const {
    return dot(dot(a, b), dot(inv(a), inv(b)));
  }
  // [a, b]_o = a o b o abar o bbar
  Elem circ_commutator(Elem a, Elem b) const {
    return circ(circ(a, b), circ(bar(a), bar(b)));
  }

  std::span<const Elem> dot_generators() const { return impl_->dot_generators(); }
  std::span<const Elem> circ_generators() const { return impl_->circ_generators(); }
  // Union of both generating sets, sorted.
  std::span<const Elem> generators() const { return *gens_; }

  bool is_table_backed() const;
  const GroupTable* dot_table() const;
  const GroupTable* circ_table() const;
  const FormulaBrace* formula() const;

  // Range for "for all a in A" quantifiers: every element for table-backed
  // braces, the generating set otherwise.
  std::vector<Elem> quantifier_range() const;

  Table dot_rows() const;
  Table circ_rows() const;

 private:
  std::shared_ptr<const BraceBacking> impl_;
  std::shared_ptr<const std::vector<Elem>> gens_;
};

class TableBacking final : public BraceBacking {
 public:
  TableBacking(GroupTable dot, GroupTable circ);

  std::size_t order() const override { return dot_.order(); }
  Elem dot(Elem a, Elem b) const override { return dot_.mul(a, b); }
  Elem circ(Elem a, Elem b) const override { return circ_.mul(a, b); }
  Elem inv(Elem a) const override { return dot_.inv(a); }
  Elem bar(Elem a) const override { return circ_.inv(a); }
  std::span<const Elem> dot_generators() const override { return dot_.generators(); }
  std::span<const Elem> circ_generators() const override { return circ_.generators(); }

  const GroupTable& dot_table() const { return dot_; }
  const GroupTable& circ_table() const { return circ_; }

 private:
  GroupTable dot_;
  GroupTable circ_;
};

// The brace on B x C built from commuting families phi: C -> Aut(B) and
// psi: B -> Aut(C) with B = F_p^dB, C = F_p^dC:
//   (b,c).(x,y) = (b + phi_c(x), c + y)
//   (b,c)o(x,y) = (b + x, c + psi_b(y))
// phi_c for general c is the product of basis-matrix powers. Elements are
// mixed-radix indices: b_0 + p b_1 + ... + p^dB (c_0 + p c_1 + ...).
class FormulaBrace final : public BraceBacking {
 public:
  // phi[j] is the image of the j-th basis vector of C (dB x dB); psi[i] the
  // image of the i-th basis vector of B (dC x dC). Throws BadParameters,
  // NotInvertible, NonCommutingFamily, NotAHomomorphism, ConditionViolated,
  // TooLarge.
  FormulaBrace(std::uint32_t p, std::size_t dim_b, std::size_t dim_c, std::vector<FpMatrix> phi,
               std::vector<FpMatrix> psi);

  std::size_t order() const override { return nb_ * nc_; }
  Elem dot(Elem a, Elem b) const override;
  Elem circ(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  Elem bar(Elem a) const override;
  std::span<const Elem> dot_generators() const override { return gens_; }
  std::span<const Elem> circ_generators() const override { return gens_; }

  std::uint32_t prime() const { return p_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim_c() const { return dim_c_; }
  const std::vector<FpMatrix>& phi_basis() const { return phi_; }
  const std::vector<FpMatrix>& psi_basis() const { return psi_; }

  Elem encode(std::span<const std::uint32_t> b, std::span<const std::uint32_t> c) const;
  std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> decode(Elem a) const;
  // (e_i, 0) and (0, e_j) with 1-based basis indices as in the usual notation.
  Elem basis_b(std::size_t i) const;
  Elem basis_c(std::size_t j) const;

  // (b,c)*(x,y) = ((phi_{-c} - id)(x), (psi_b - id)(y))
  Elem star_closed_form(Elem a, Elem b) const;
  // [(b,c),(x,y)] = ((id - phi_y)(b) + (phi_c - id)(x), 0)
  Elem commutator_closed_form(Elem a, Elem b) const;

 private:
  std::uint32_t p_;
  std::size_t dim_b_, dim_c_;
  std::size_t nb_ = 1, nc_ = 1;
  std::vector<FpMatrix> phi_, psi_;
  std::vector<std::uint16_t> add_b_, neg_b_, add_c_, neg_c_;
  std::vector<std::uint16_t> phi_tab_;  // [c * nb + x] = phi_c(x)
  std::vector<std::uint16_t> psi_tab_;  // [b * nc + y] = psi_b(y)
  std::vector<Elem> gens_;

  std::size_t bpart(Elem a) const { return a % nb_; }
  std::size_t cpart(Elem a) const { return a / nb_; }
  Elem pack(std::size_t b, std::size_t c) const { return static_cast<Elem>(b + nb_ * c); }
};

// (A, .) and (A, o) of a brace as FiniteGroup views.
class DotGroup {
 public:
  explicit DotGroup(const SkewBrace& a) : a_(&a) {}
  std::size_t order() const { return a_->order(); }
  Elem mul(Elem x, Elem y) const { return a_->dot(x, y); }
  Elem inv(Elem x) const { return a_->inv(x); }
  std::span<const Elem> generators() const { return a_->dot_generators(); }
  bool exhaustive() const { return a_->is_table_backed(); }

 private:
  const SkewBrace* a_;
};

class CircGroup {
 public:
  explicit CircGroup(const SkewBrace& a) : a_(&a) {}
  std::size_t order() const { return a_->order(); }
  Elem mul(Elem x, Elem y) const { return a_->circ(x, y); }
  Elem inv(Elem x) const { return a_->bar(x); }
  std::span<const Elem> generators() const { return a_->circ_generators(); }
  bool exhaustive() const { return a_->is_table_backed(); }

 private:
  const SkewBrace* a_;
};

// Checks the brace relation a o (b . c) = (a o b) . a^-1 . (a o c) on all
// triples of two raw tables, then that the identities agree. The identity
// is relabeled to 0 in both tables.
SkewBrace validate_brace(const Table& dot, const Table& circ);
SkewBrace validate_brace(const GroupTable& dot, const GroupTable& circ);

// Regression guard for formula-backed braces: every triple drawn from the
// generators and their pairwise products, plus `samples` seeded random
// triples. Checks the brace relation and lambda_{a o b} = lambda_a lambda_b.
void validate_sampled(const SkewBrace& a, std::uint64_t seed, std::size_t samples);

inline constexpr std::uint64_t kDefaultSeed = 20250304;
inline constexpr std::size_t kDefaultSamples = 100000;

std::vector<Elem> lambda_of(const SkewBrace& a, Elem x);

SkewBrace build_trivial(const GroupTable& g);
SkewBrace build_almost_trivial(const GroupTable& g);
// a o b = a + b + a*b for a radical ring (A, +, *).
SkewBrace build_from_radical_ring(const Table& add, const Table& mult);

struct IdentityReport {
  bool passed = true;
  int failed_identity = 0;  // 1..4 when failed
  std::vector<Elem> witness;
  std::size_t triples_checked = 0;
};

// The four star-product identities
//   (1) a*(x.y) = (a*x) . x . (a*y) . x^-1
//   (2) (x o y)*a = (x*(y*a)) . (y*a) . (x*a)
//   (3) lambda_a(x*y) = (a o x o abar) * lambda_a(y)
//   (4) a o x o abar = a . lambda_a(x . (x*abar)) . a^-1
// over every triple (table backing) or sampled triples otherwise.
IdentityReport check_identities(const SkewBrace& a, std::uint64_t seed = kDefaultSeed,
                                std::size_t samples = kDefaultSamples);

// Structural invariants: lambda is a homomorphism into Aut(A, .),
// a o b = a . lambda_a(b), a . b = a o lambda_abar(b), star(1,b) = star(a,1) = 1.
IdentityReport check_lambda_properties(const SkewBrace& a, std::uint64_t seed = kDefaultSeed,
                                       std::size_t samples = kDefaultSamples);

// Materializes a (small) brace as tables.
SkewBrace to_table_brace(const SkewBrace& a);

}  // namespace skewbrace
