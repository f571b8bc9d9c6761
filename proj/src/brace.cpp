#include "skewbrace/brace.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace skewbrace {

namespace {

std::string triple_text(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Triples for sampled checks: all triples over generators and their pairwise
// products (under both laws), then uniformly random ones.
template <class F>
void for_sampled_triples(const SkewBrace& a, std::uint64_t seed, std::size_t samples, F&& f) {
  std::vector<Elem> pool{0};
  const auto gens = a.generators();
  pool.insert(pool.end(), gens.begin(), gens.end());
  for (Elem x : gens)
    for (Elem y : gens) {
      pool.push_back(a.dot(x, y));
      pool.push_back(a.circ(x, y));
    }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (Elem x : pool)
    for (Elem y : pool)
      for (Elem z : pool)
        if (!f(x, y, z)) return;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(a.order() - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (!f(x, y, z)) return;
  }
}

template <class F>
void for_all_triples(std::size_t n, F&& f) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!f(x, y, z)) return;
}

}  // namespace

SkewBrace::SkewBrace(std::shared_ptr<const BraceBacking> backing) : impl_(std::move(backing)) {
  std::vector<Elem> g(impl_->dot_generators().begin(), impl_->dot_generators().end());
  g.insert(g.end(), impl_->circ_generators().begin(), impl_->circ_generators().end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  gens_ = std::make_shared<const std::vector<Elem>>(std::move(g));
}

bool SkewBrace::is_table_backed() const {
  return dynamic_cast<const TableBacking*>(impl_.get()) != nullptr;
}

const GroupTable* SkewBrace::dot_table() const {
  auto* t = dynamic_cast<const TableBacking*>(impl_.get());
  return t ? &t->dot_table() : nullptr;
}

const GroupTable* SkewBrace::circ_table() const {
  auto* t = dynamic_cast<const TableBacking*>(impl_.get());
  return t ? &t->circ_table() : nullptr;
}

const FormulaBrace* SkewBrace::formula() const {
  return dynamic_cast<const FormulaBrace*>(impl_.get());
}

std::vector<Elem> SkewBrace::quantifier_range() const {
  if (!is_table_backed()) return *gens_;
  std::vector<Elem> all(order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return all;
}

Table SkewBrace::dot_rows() const {
  const std::size_t n = order();
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = dot(a, b);
  return t;
}

Table SkewBrace::circ_rows() const {
  const std::size_t n = order();
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = circ(a, b);
  return t;
}

TableBacking::TableBacking(GroupTable dot, GroupTable circ)
    : dot_(std::move(dot)), circ_(std::move(circ)) {}

// ---- FormulaBrace ----

FormulaBrace::FormulaBrace(std::uint32_t p, std::size_t dim_b, std::size_t dim_c,
                           std::vector<FpMatrix> phi, std::vector<FpMatrix> psi)
    : p_(p), dim_b_(dim_b), dim_c_(dim_c), phi_(std::move(phi)), psi_(std::move(psi)) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, "p = " + std::to_string(p) + " is not prime");
  if (dim_b == 0 || dim_c == 0)
    throw Error(ErrorCode::BadParameters, "both vector spaces need positive dimension");
  if (phi_.size() != dim_c || psi_.size() != dim_b)
    throw Error(ErrorCode::BadParameters, "need one phi matrix per basis vector of C and one psi matrix per basis vector of B");
  for (const auto& m : phi_)
    if (m.dim() != dim_b || m.prime() != p)
      throw Error(ErrorCode::BadParameters, "phi matrices must be dB x dB over F_p");
  for (const auto& m : psi_)
    if (m.dim() != dim_c || m.prime() != p)
      throw Error(ErrorCode::BadParameters, "psi matrices must be dC x dC over F_p");

  for (std::size_t i = 0; i < dim_b; ++i) nb_ *= p;
  for (std::size_t i = 0; i < dim_c; ++i) nc_ *= p;
  if (nb_ > 4096 || nc_ > 4096 || nb_ * nc_ > (std::size_t{1} << 24))
    throw Error(ErrorCode::TooLarge, "formula brace of order " + std::to_string(nb_) + " * " +
                                         std::to_string(nc_) + " exceeds the supported size");

  auto check_family = [&](const std::vector<FpMatrix>& fam, const char* name) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (!fam[i].is_invertible())
        throw Error(ErrorCode::NotInvertible, std::string(name) + " matrix " + std::to_string(i + 1) + " is singular",
                    {static_cast<Elem>(i + 1)});
      if (!fam[i].pow(p).is_identity())
        throw Error(ErrorCode::NotAHomomorphism,
                    std::string(name) + " matrix " + std::to_string(i + 1) + " does not have order dividing p",
                    {static_cast<Elem>(i + 1)});
      for (std::size_t j = 0; j < i; ++j)
        if (!(fam[i] * fam[j] == fam[j] * fam[i]))
          throw Error(ErrorCode::NonCommutingFamily,
                      std::string(name) + " matrices " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " do not commute",
                      {static_cast<Elem>(j + 1), static_cast<Elem>(i + 1)});
    }
  };
  check_family(phi_, "phi");
  check_family(psi_, "psi");

  auto digits = [p](std::size_t idx, std::size_t dim) {
    std::vector<std::uint32_t> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return v;
  };
  auto undigits = [p](const std::vector<std::uint32_t>& v) {
    std::size_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
    return idx;
  };
  auto build_group = [&](std::size_t n, std::size_t dim, std::vector<std::uint16_t>& add,
                         std::vector<std::uint16_t>& neg) {
    add.resize(n * n);
    neg.resize(n);
    std::vector<std::vector<std::uint32_t>> dig(n);
    for (std::size_t i = 0; i < n; ++i) dig[i] = digits(i, dim);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> w(dim);
      for (std::size_t d = 0; d < dim; ++d) w[d] = (p - dig[i][d]) % p;
      neg[i] = static_cast<std::uint16_t>(undigits(w));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t d = 0; d < dim; ++d) w[d] = (dig[i][d] + dig[j][d]) % p;
        add[i * n + j] = static_cast<std::uint16_t>(undigits(w));
      }
    }
  };
  build_group(nb_, dim_b, add_b_, neg_b_);
  build_group(nc_, dim_c, add_c_, neg_c_);

  // Action tables: row for exponent vector e is the product of basis powers.
  auto build_action = [&](std::size_t n_src, std::size_t dim_src, std::size_t n_tgt,
                          std::size_t dim_tgt, const std::vector<FpMatrix>& fam,
                          std::vector<std::uint16_t>& tab) {
    tab.resize(n_src * n_tgt);
    for (std::size_t e = 0; e < n_src; ++e) {
      const auto ex = digits(e, dim_src);
      FpMatrix m = FpMatrix::identity(dim_tgt, p);
      for (std::size_t i = 0; i < dim_src; ++i)
        if (ex[i] != 0) m = m * fam[i].pow(ex[i]);
      for (std::size_t x = 0; x < n_tgt; ++x) {
        const auto v = digits(x, dim_tgt);
        tab[e * n_tgt + x] = static_cast<std::uint16_t>(undigits(m.apply(v)));
      }
    }
  };
  build_action(nc_, dim_c, nb_, dim_b, phi_, phi_tab_);
  build_action(nb_, dim_b, nc_, dim_c, psi_, psi_tab_);

  // Im(psi_b - id) inside ker(phi). Basis columns first for a readable
  // witness, then every b since the image of a product is not spanned by the
  // basis images in general.
  std::vector<bool> in_kernel(nc_, true);
  for (std::size_t c = 0; c < nc_; ++c)
    for (std::size_t x = 0; x < nb_ && in_kernel[c]; ++x)
      if (phi_tab_[c * nb_ + x] != x) in_kernel[c] = false;
  for (std::size_t i = 0; i < dim_b; ++i) {
    const FpMatrix diff = psi_[i] - FpMatrix::identity(dim_c, p);
    for (std::size_t col = 0; col < dim_c; ++col) {
      std::vector<std::uint32_t> v(dim_c);
      for (std::size_t r = 0; r < dim_c; ++r) v[r] = diff.at(r, col);
      if (!in_kernel[undigits(v)])
        throw Error(ErrorCode::ConditionViolated,
                    "(psi_e" + std::to_string(i + 1) + " - id)(e" + std::to_string(col + 1) +
                        ") is not in the kernel of phi",
                    {static_cast<Elem>(i + 1), static_cast<Elem>(col + 1)});
    }
  }
  for (std::size_t b = 0; b < nb_; ++b)
    for (std::size_t y = 0; y < nc_; ++y) {
      const std::size_t d = add_c_[psi_tab_[b * nc_ + y] * nc_ + neg_c_[y]];
      if (!in_kernel[d])
        throw Error(ErrorCode::ConditionViolated,
                    "(psi_b - id)(y) is not in the kernel of phi for b index " + std::to_string(b) +
                        ", y index " + std::to_string(y),
                    {static_cast<Elem>(b), static_cast<Elem>(y)});
    }

  for (std::size_t i = 1; i <= dim_b; ++i) gens_.push_back(basis_b(i));
  for (std::size_t j = 1; j <= dim_c; ++j) gens_.push_back(basis_c(j));
}

Elem FormulaBrace::dot(Elem a, Elem x) const {
  const std::size_t b = bpart(a), c = cpart(a), xb = bpart(x), y = cpart(x);
  return pack(add_b_[b * nb_ + phi_tab_[c * nb_ + xb]], add_c_[c * nc_ + y]);
}

Elem FormulaBrace::circ(Elem a, Elem x) const {
  const std::size_t b = bpart(a), c = cpart(a), xb = bpart(x), y = cpart(x);
  return pack(add_b_[b * nb_ + xb], add_c_[c * nc_ + psi_tab_[b * nc_ + y]]);
}

Elem FormulaBrace::inv(Elem a) const {
  const std::size_t nc = neg_c_[cpart(a)];
  return pack(phi_tab_[nc * nb_ + neg_b_[bpart(a)]], nc);
}

Elem FormulaBrace::bar(Elem a) const {
  const std::size_t nb = neg_b_[bpart(a)];
  return pack(nb, psi_tab_[nb * nc_ + neg_c_[cpart(a)]]);
}

Elem FormulaBrace::encode(std::span<const std::uint32_t> b, std::span<const std::uint32_t> c) const {
  if (b.size() != dim_b_ || c.size() != dim_c_)
    throw Error(ErrorCode::BadParameters, "vector length does not match the dimension");
  std::size_t bi = 0, ci = 0;
  for (std::size_t i = b.size(); i-- > 0;) bi = bi * p_ + b[i] % p_;
  for (std::size_t i = c.size(); i-- > 0;) ci = ci * p_ + c[i] % p_;
  return pack(bi, ci);
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> FormulaBrace::decode(Elem a) const {
  std::vector<std::uint32_t> b(dim_b_), c(dim_c_);
  std::size_t bi = bpart(a), ci = cpart(a);
  for (auto& d : b) {
    d = static_cast<std::uint32_t>(bi % p_);
    bi /= p_;
  }
  for (auto& d : c) {
    d = static_cast<std::uint32_t>(ci % p_);
    ci /= p_;
  }
  return {std::move(b), std::move(c)};
}

Elem FormulaBrace::basis_b(std::size_t i) const {
  std::size_t idx = 1;
  for (std::size_t k = 1; k < i; ++k) idx *= p_;
  return pack(idx, 0);
}

Elem FormulaBrace::basis_c(std::size_t j) const {
  std::size_t idx = 1;
  for (std::size_t k = 1; k < j; ++k) idx *= p_;
  return pack(0, idx);
}

Elem FormulaBrace::star_closed_form(Elem a, Elem x) const {
  const std::size_t b = bpart(a), c = cpart(a), xb = bpart(x), y = cpart(x);
  const std::size_t first = add_b_[phi_tab_[neg_c_[c] * nb_ + xb] * nb_ + neg_b_[xb]];
  const std::size_t second = add_c_[psi_tab_[b * nc_ + y] * nc_ + neg_c_[y]];
  return pack(first, second);
}

Elem FormulaBrace::commutator_closed_form(Elem a, Elem x) const {
  const std::size_t b = bpart(a), c = cpart(a), xb = bpart(x), y = cpart(x);
  const std::size_t u = add_b_[b * nb_ + neg_b_[phi_tab_[y * nb_ + b]]];
  const std::size_t v = add_b_[phi_tab_[c * nb_ + xb] * nb_ + neg_b_[xb]];
  return pack(add_b_[u * nb_ + v], 0);
}

// ---- validation and constructors ----

SkewBrace validate_brace(const Table& dot, const Table& circ) {
  const GroupAxioms dax = check_group_axioms(dot);
  const GroupAxioms cax = check_group_axioms(circ);
  if (dot.size() != circ.size())
    throw Error(ErrorCode::MalformedTable, "dot and circ tables have different orders");
  const std::size_t n = dot.size();
  for (Elem a = 0; a < n; ++a) {
    const Elem ainv = dax.inverse[a];
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = circ[a][dot[b][c]];
        const Elem rhs = dot[dot[circ[a][b]][ainv]][circ[a][c]];
        if (lhs != rhs)
          throw Error(ErrorCode::BraceRelationFails,
                      "a o (b . c) != (a o b) . a^-1 . (a o c) at " + triple_text(a, b, c), {a, b, c});
      }
  }
  if (dax.identity != cax.identity)
    throw Error(ErrorCode::IdentityMismatch, "the two group laws have different identities",
                {dax.identity, cax.identity});
  return SkewBrace(std::make_shared<TableBacking>(validate_group(dot), validate_group(circ)));
}

SkewBrace validate_brace(const GroupTable& dot, const GroupTable& circ) {
  return validate_brace(dot.rows(), circ.rows());
}

void validate_sampled(const SkewBrace& a, std::uint64_t seed, std::size_t samples) {
  for_sampled_triples(a, seed, samples, [&](Elem x, Elem y, Elem z) {
    if (a.circ(x, a.dot(y, z)) != a.dot(a.dot(a.circ(x, y), a.inv(x)), a.circ(x, z)))
      throw Error(ErrorCode::BraceRelationFails,
                  "a o (b . c) != (a o b) . a^-1 . (a o c) at " + triple_text(x, y, z), {x, y, z});
    if (a.lambda(a.circ(x, y), z) != a.lambda(x, a.lambda(y, z)))
      throw Error(ErrorCode::BraceRelationFails,
                  "lambda is not a homomorphism at " + triple_text(x, y, z), {x, y, z});
    return true;
  });
}

std::vector<Elem> lambda_of(const SkewBrace& a, Elem x) {
  std::vector<Elem> perm(a.order());
  for (Elem b = 0; b < a.order(); ++b) perm[b] = a.lambda(x, b);
  return perm;
}

SkewBrace build_trivial(const GroupTable& g) {
  return SkewBrace(std::make_shared<TableBacking>(g, g));
}

SkewBrace build_almost_trivial(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Elem> op(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) op[a * n + b] = g.mul(b, a);
  return SkewBrace(std::make_shared<TableBacking>(g, group_from_trusted_table(n, std::move(op))));
}

SkewBrace build_from_radical_ring(const Table& add, const Table& mult) {
  const GroupAxioms ax = check_group_axioms(add);
  const std::size_t n = add.size();
  if (mult.size() != n)
    throw Error(ErrorCode::MalformedTable, "multiplication table has the wrong order");
  for (const auto& row : mult) {
    if (row.size() != n) throw Error(ErrorCode::MalformedTable, "multiplication table is not square");
    for (Elem v : row)
      if (v >= n) throw Error(ErrorCode::MalformedTable, "multiplication entry out of range");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add[a][b] != add[b][a])
        throw Error(ErrorCode::NotARing, "addition is not commutative at (" + std::to_string(a) + ", " +
                                             std::to_string(b) + ")",
                    {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw Error(ErrorCode::NotARing, "multiplication is not associative at " + triple_text(a, b, c),
                      {a, b, c});
        if (mult[a][add[b][c]] != add[mult[a][b]][mult[a][c]] ||
            mult[add[a][b]][c] != add[mult[a][c]][mult[b][c]])
          throw Error(ErrorCode::NotARing, "distributivity fails at " + triple_text(a, b, c), {a, b, c});
      }
  (void)ax;
  Table circ(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) circ[a][b] = add[add[a][b]][mult[a][b]];
  try {
    check_group_axioms(circ);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotRadical, std::string("the circle operation is not a group: ") + e.what(),
                e.witness());
  }
  return validate_brace(add, circ);
}

IdentityReport check_identities(const SkewBrace& a, std::uint64_t seed, std::size_t samples) {
  IdentityReport rep;
  auto check = [&](Elem s, Elem x, Elem y) {
    ++rep.triples_checked;
    // (1)
    if (a.star(s, a.dot(x, y)) != a.dot(a.dot(a.dot(a.star(s, x), x), a.star(s, y)), a.inv(x))) {
      rep = {false, 1, {s, x, y}, rep.triples_checked};
      return false;
    }
    // (2) with (x, y, s) in the roles of (x, y, a)
    const Elem ys = a.star(y, s);
    if (a.star(a.circ(x, y), s) != a.dot(a.dot(a.star(x, ys), ys), a.star(x, s))) {
      rep = {false, 2, {x, y, s}, rep.triples_checked};
      return false;
    }
    // (3)
    const Elem conj = a.circ(a.circ(s, x), a.bar(s));
    if (a.lambda(s, a.star(x, y)) != a.star(conj, a.lambda(s, y))) {
      rep = {false, 3, {s, x, y}, rep.triples_checked};
      return false;
    }
    // (4)
    const Elem inner = a.dot(x, a.star(x, a.bar(s)));
    if (conj != a.dot(a.dot(s, a.lambda(s, inner)), a.inv(s))) {
      rep = {false, 4, {s, x}, rep.triples_checked};
      return false;
    }
    return true;
  };
  if (a.is_table_backed())
    for_all_triples(a.order(), check);
  else
    for_sampled_triples(a, seed, samples, check);
  return rep;
}

IdentityReport check_lambda_properties(const SkewBrace& a, std::uint64_t seed, std::size_t samples) {
  IdentityReport rep;
  auto check = [&](Elem x, Elem y, Elem z) {
    ++rep.triples_checked;
    auto fail = [&](int which, std::vector<Elem> w) {
      rep = {false, which, std::move(w), rep.triples_checked};
      return false;
    };
    if (a.lambda(a.circ(x, y), z) != a.lambda(x, a.lambda(y, z))) return fail(1, {x, y, z});
    if (a.lambda(x, a.dot(y, z)) != a.dot(a.lambda(x, y), a.lambda(x, z))) return fail(2, {x, y, z});
    if (a.circ(x, y) != a.dot(x, a.lambda(x, y))) return fail(3, {x, y});
    if (a.dot(x, y) != a.circ(x, a.lambda(a.bar(x), y))) return fail(4, {x, y});
    if (a.star(0, y) != 0 || a.star(x, 0) != 0) return fail(5, {x, y});
    return true;
  };
  if (a.is_table_backed())
    for_all_triples(a.order(), check);
  else
    for_sampled_triples(a, seed, samples, check);
  return rep;
}

SkewBrace to_table_brace(const SkewBrace& a) {
  if (a.is_table_backed()) return a;
  if (a.order() > 4096) throw Error(ErrorCode::TooLarge, "brace too large to tabulate");
  const std::size_t n = a.order();
  std::vector<Elem> d(n * n), c(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      d[x * n + y] = a.dot(x, y);
      c[x * n + y] = a.circ(x, y);
    }
  return SkewBrace(std::make_shared<TableBacking>(group_from_trusted_table(n, std::move(d)),
                                                  group_from_trusted_table(n, std::move(c))));
}

}  // namespace skewbrace
