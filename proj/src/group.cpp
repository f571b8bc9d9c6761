#include "skewbrace/group.hpp"

#include <string>

namespace skewbrace {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::left: return "left";
    case SeriesKind::right: return "right";
    case SeriesKind::smoktunowicz: return "smoktunowicz";
    case SeriesKind::socle: return "socle";
    case SeriesKind::annihilator: return "annihilator";
    case SeriesKind::gamma: return "gamma";
    case SeriesKind::gamma_prime: return "gamma_prime";
    case SeriesKind::relative_gamma: return "relative_gamma";
    case SeriesKind::group_lower: return "group_lower";
    case SeriesKind::group_upper: return "group_upper";
    case SeriesKind::socle_sv: return "socle_sv";
  }
  return "unknown";
}

bool is_ascending(SeriesKind kind) {
  return kind == SeriesKind::socle || kind == SeriesKind::annihilator ||
         kind == SeriesKind::group_upper;
}

const ElementSet& SeriesChain::term(std::size_t n) const {
  if (n < first_index)
    throw Error(ErrorCode::BadIndices, "series index " + std::to_string(n) +
                                           " below first index " + std::to_string(first_index));
  const std::size_t i = n - first_index;
  return i < terms.size() ? terms[i] : terms.back();
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul_[a * n_ + b] != mul_[b * n_ + a]) return false;
  return true;
}

Table GroupTable::rows() const {
  Table t(n_, std::vector<Elem>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul_[a * n_ + b];
  return t;
}

GroupAxioms check_group_axioms(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::MalformedTable, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::MalformedTable, "table is not square");
    for (Elem v : row)
      if (v >= n) throw Error(ErrorCode::MalformedTable, "entry out of range");
  }

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity");
  const Elem e = *identity;

  std::vector<Elem> inverse(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      if (table[x][y] == e && table[y][x] == e) {
        inverse[x] = static_cast<Elem>(y);
        found = true;
      }
    if (!found)
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no inverse",
                  {static_cast<Elem>(x)});
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = table[x][y];
      for (std::size_t z = 0; z < n; ++z)
        if (table[xy][z] != table[x][table[y][z]])
          throw Error(ErrorCode::NotAssociative,
                      "(xy)z != x(yz) at (" + std::to_string(x) + ", " + std::to_string(y) +
                          ", " + std::to_string(z) + ")",
                      {static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)});
    }
  return {e, std::move(inverse)};
}

GroupTable group_from_trusted_table(std::size_t n, std::vector<Elem> mul) {
  GroupTable g;
  g.n_ = n;
  g.mul_ = std::move(mul);
  g.inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.mul_[x * n + y] == 0) {
        g.inv_[x] = static_cast<Elem>(y);
        break;
      }
  g.gens_ = subgroup_generators(g, ElementSet::full(n));
  return g;
}

GroupTable validate_group(const Table& table) {
  const GroupAxioms axioms = check_group_axioms(table);
  const std::size_t n = table.size();
  const Elem e = axioms.identity;
  auto relabel = [e](Elem x) -> Elem { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[relabel(static_cast<Elem>(a)) * n + relabel(static_cast<Elem>(b))] =
          relabel(table[a][b]);
  return group_from_trusted_table(n, std::move(mul));
}

QuotientGroup quotient_group(const GroupTable& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  auto [proj, reps] = coset_partition(g, n);
  const std::size_t m = reps.size();
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = proj[g.mul(reps[i], reps[j])];
  return {group_from_trusted_table(m, std::move(mul)), std::move(proj), std::move(reps)};
}

}  // namespace skewbrace
