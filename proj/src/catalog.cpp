#include "skewbrace/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <tuple>

namespace skewbrace {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

template <class F>
GroupTable table_from(std::size_t n, F&& f) {
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = f(a, b);
  return group_from_trusted_table(n, std::move(mul));
}

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw Error(ErrorCode::BadParameters, "unknown group name '" + std::string(whole) + "'");
  return v;
}

GroupTable builtin_factor(std::string_view name, std::string_view whole) {
  if (name.empty()) throw Error(ErrorCode::BadParameters, "empty group name");
  if (auto hat = name.find('^'); hat != std::string_view::npos) {
    const GroupTable base = builtin_factor(name.substr(0, hat), whole);
    const std::size_t e = parse_size(name.substr(hat + 1), whole);
    GroupTable out = cyclic_group(1);
    for (std::size_t i = 0; i < e; ++i) out = direct_product(out, base);
    return out;
  }
  if (name == "S3") return dihedral_group(6);
  if (name == "A4") return alternating_group_4();
  if (name == "Q8") return dicyclic_group(8);
  const std::size_t n = parse_size(name.substr(1), whole);
  switch (name[0]) {
    case 'C': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    case 'Q': return dicyclic_group(n);
    default: break;
  }
  throw Error(ErrorCode::BadParameters, "unknown group name '" + std::string(whole) + "'");
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameters, "cyclic group of order 0");
  return table_from(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); });
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = g.order();
  return table_from(m * h.order(), [&](Elem a, Elem b) {
    return static_cast<Elem>(g.mul(a % m, b % m) + m * h.mul(a / m, b / m));
  });
}

GroupTable dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorCode::BadParameters, "dihedral groups have even order >= 2");
  const std::size_t m = order / 2;
  // r^i s^j r^k s^l = r^{i + (-1)^j k} s^{j+l}
  return table_from(order, [m](Elem a, Elem b) {
    const std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
    const std::size_t r = (j == 0 ? i + k : i + m - k) % m;
    return static_cast<Elem>(r + m * ((j + l) % 2));
  });
}

GroupTable dicyclic_group(std::size_t order) {
  if (order < 8 || order % 4 != 0)
    throw Error(ErrorCode::BadParameters, "dicyclic groups have order 4m with m >= 2");
  const std::size_t n = order / 2;  // order of x
  const std::size_t m = n / 2;
  // x^i y^j x^k y^l: y x^k = x^{-k} y, and y^2 = x^m.
  return table_from(order, [n, m](Elem a, Elem b) {
    const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
    std::size_t e = (j == 0 ? i + k : i + n - k) % n;
    std::size_t y = j + l;
    if (y == 2) {
      e = (e + m) % n;
      y = 0;
    }
    return static_cast<Elem>(e + n * y);
  });
}

GroupTable alternating_group_4() {
  // Even permutations of {0,1,2,3}, identity first.
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<Elem>(i);
    return Elem{0};
  };
  return table_from(perms.size(), [&](Elem a, Elem b) {
    std::vector<int> c(4);
    for (int x = 0; x < 4; ++x) c[x] = perms[a][perms[b][x]];
    return index(c);
  });
}

GroupTable builtin_group(std::string_view name) {
  GroupTable out;
  bool first = true;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= name.size(); ++pos) {
    if (pos < name.size() && name[pos] != 'x') continue;
    const GroupTable f = builtin_factor(name.substr(start, pos - start), name);
    out = first ? f : direct_product(out, f);
    first = false;
    start = pos + 1;
  }
  return out;
}

std::vector<NamedGroup> small_groups(std::size_t max_order) {
  static const char* const names[] = {
      "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2^3", "D8", "Q8",
      "C9", "C3xC3", "C10", "D10", "C11", "C12", "C6xC2", "D12", "Q12", "A4"};
  if (max_order > 12) throw Error(ErrorCode::TooLarge, "small_groups covers orders up to 12");
  std::vector<NamedGroup> out;
  for (const char* n : names) {
    GroupTable g = builtin_group(n);
    if (g.order() <= max_order) out.push_back({n, std::move(g)});
  }
  return out;
}

SkewBrace make_pq_brace(std::uint32_t p, std::uint32_t q, std::uint32_t k, PqVariant variant) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, "p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw Error(ErrorCode::BadParameters, "q = " + std::to_string(q) + " is not prime");
  if (p % q != 1) throw Error(ErrorCode::BadParameters, "p is not 1 mod q");
  if (k % p == 1) throw Error(ErrorCode::BadParameters, "k is 1 mod p");
  if (pow_mod(k, q, p) != 1) throw Error(ErrorCode::BadParameters, "k^q is not 1 mod p");
  std::vector<std::uint64_t> kpow(q);
  for (std::uint32_t j = 0; j < q; ++j) kpow[j] = pow_mod(k, j, p);
  const std::size_t n = static_cast<std::size_t>(p) * q;
  Table dot(n, std::vector<Elem>(n)), circ(n, std::vector<Elem>(n));
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < q; ++j)
      for (std::uint32_t s = 0; s < p; ++s)
        for (std::uint32_t t = 0; t < q; ++t) {
          const Elem a = pq_element(p, i, j), b = pq_element(p, s, t);
          const std::uint32_t jt = (j + t) % q;
          const auto twisted = static_cast<std::uint32_t>((i + kpow[j] * s) % p);
          if (variant == PqVariant::i) {
            dot[a][b] = pq_element(p, (i + s) % p, jt);
            circ[a][b] = pq_element(p, twisted, jt);
          } else {
            dot[a][b] = pq_element(p, twisted, jt);
            circ[a][b] = pq_element(p, static_cast<std::uint32_t>((kpow[t] * i + kpow[j] * s) % p), jt);
          }
        }
  return validate_brace(dot, circ);
}

SkewBrace make_bc_brace(std::uint32_t p, std::size_t dim_b, std::size_t dim_c,
                        std::vector<FpMatrix> phi, std::vector<FpMatrix> psi, std::uint64_t seed,
                        std::size_t samples) {
  SkewBrace a(std::make_shared<FormulaBrace>(p, dim_b, dim_c, std::move(phi), std::move(psi)));
  validate_sampled(a, seed, samples);
  return a;
}

std::vector<std::vector<std::int64_t>> counterexample_phi_e4() {
  return {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
}

std::vector<std::vector<std::int64_t>> counterexample_psi_e3() {
  return {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

SkewBrace make_counterexample_F(std::uint32_t p, std::uint64_t seed, std::size_t samples) {
  if (p < 5 || !is_prime(p))
    throw Error(ErrorCode::BadPrime, "the construction needs a prime p >= 5, got " + std::to_string(p));
  const FpMatrix id = FpMatrix::identity(4, p);
  std::vector<FpMatrix> phi{id, id, id, FpMatrix::from_rows(counterexample_phi_e4(), p)};
  std::vector<FpMatrix> psi{id, id, FpMatrix::from_rows(counterexample_psi_e3(), p), id};
  return make_bc_brace(p, 4, 4, std::move(phi), std::move(psi), seed, samples);
}

SkewBrace build_brace(const BraceSpec& spec, std::uint64_t seed) {
  struct Visitor {
    std::uint64_t seed;
    SkewBrace operator()(const TablesSpec& s) const { return validate_brace(s.dot, s.circ); }
    SkewBrace operator()(const TrivialSpec& s) const { return build_trivial(validate_group(s.group)); }
    SkewBrace operator()(const AlmostTrivialSpec& s) const {
      return build_almost_trivial(validate_group(s.group));
    }
    SkewBrace operator()(const RadicalRingSpec& s) const { return build_from_radical_ring(s.add, s.mult); }
    SkewBrace operator()(const PqSpec& s) const { return make_pq_brace(s.p, s.q, s.k, s.variant); }
    SkewBrace operator()(const BcSpec& s) const {
      std::vector<FpMatrix> phi, psi;
      for (const auto& m : s.phi) phi.push_back(FpMatrix::from_rows(m, s.p));
      for (const auto& m : s.psi) psi.push_back(FpMatrix::from_rows(m, s.p));
      for (const auto& m : phi)
        if (m.dim() != s.dim_b) throw Error(ErrorCode::BadParameters, "phi matrices must be dB x dB");
      for (const auto& m : psi)
        if (m.dim() != s.dim_c) throw Error(ErrorCode::BadParameters, "psi matrices must be dC x dC");
      return make_bc_brace(s.p, s.dim_b, s.dim_c, std::move(phi), std::move(psi), seed);
    }
    SkewBrace operator()(const CounterexampleSpec& s) const { return make_counterexample_F(s.p, seed); }
  };
  return std::visit(Visitor{seed}, spec);
}

std::vector<NamedBrace> catalog_braces() {
  std::vector<NamedBrace> out;
  const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> pq_params[] = {
      {3, 2, 2}, {5, 2, 4}, {7, 2, 6}, {7, 3, 2}, {7, 3, 4}};
  for (auto [p, q, k] : pq_params) {
    const std::string tag = std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k);
    out.push_back({"pq(" + tag + ",i)", make_pq_brace(p, q, k, PqVariant::i)});
    out.push_back({"pq(" + tag + ",ii)", make_pq_brace(p, q, k, PqVariant::ii)});
  }
  for (const char* g : {"C1", "C2", "C6", "S3", "D8", "Q8", "C2^3", "A4", "D12"}) {
    out.push_back({std::string("trivial(") + g + ")", build_trivial(builtin_group(g))});
    out.push_back({std::string("almost_trivial(") + g + ")", build_almost_trivial(builtin_group(g))});
  }
  // Z/4 with a*b = 2ab, and Z/8 with a*b = 2ab, both radical.
  for (std::size_t n : {4u, 8u}) {
    Table add(n, std::vector<Elem>(n)), mult(n, std::vector<Elem>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        add[x][y] = static_cast<Elem>((x + y) % n);
        mult[x][y] = static_cast<Elem>(2 * x * y % n);
      }
    out.push_back({"radical_ring(Z/" + std::to_string(n) + ",2ab)", build_from_radical_ring(add, mult)});
  }
  return out;
}

}  // namespace skewbrace
