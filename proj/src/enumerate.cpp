#include "skewbrace/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skewbrace {

namespace {

std::vector<std::size_t> element_orders(const GroupTable& g) {
  std::vector<std::size_t> ord(g.order(), 1);
  for (Elem x = 1; x < g.order(); ++x) {
    Elem y = x;
    std::size_t k = 1;
    while (y != 0) {
      y = g.mul(y, x);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

// Extends gens[i] -> images[i] to the subgroup generated by the first
// `count` generators. Returns false if that is not a well-defined injective
// homomorphism; otherwise fills `map` on that subgroup.
bool extend_partial(const GroupTable& g, std::span<const Elem> gens, std::span<const Elem> images,
                    std::size_t count, std::vector<Elem>& map) {
  constexpr Elem unset = ~Elem{0};
  const std::size_t n = g.order();
  map.assign(n, unset);
  std::vector<bool> used(n, false);
  map[0] = 0;
  used[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t s = 0; s < count; ++s) {
      const Elem y = g.mul(x, gens[s]);
      const Elem v = g.mul(map[x], images[s]);
      if (map[y] == unset) {
        if (used[v]) return false;
        map[y] = v;
        used[v] = true;
        queue.push_back(y);
      } else if (map[y] != v) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Permutation> automorphism_group(const GroupTable& g) {
  if (g.order() > 64)
    throw Error(ErrorCode::TooLarge, "automorphism search is limited to order 64");
  const auto gens = g.generators();
  const auto ord = element_orders(g);
  std::vector<Permutation> out;
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map;

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (extend_partial(g, gens, images, gens.size(), map)) out.push_back(map);
      return;
    }
    for (Elem v = 1; v < g.order(); ++v) {
      if (ord[v] != ord[gens[i]]) continue;
      images[i] = v;
      if (extend_partial(g, gens, images, i + 1, map)) self(self, i + 1);
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  // The identity permutation is the lexicographically least one.
  return out;
}

std::vector<Elem> circ_key(const SkewBrace& a) {
  const std::size_t n = a.order();
  std::vector<Elem> key(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) key[x * n + y] = a.circ(x, y);
  return key;
}

std::vector<SkewBrace> enumerate_braces(const GroupTable& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order)
    throw Error(ErrorCode::TooLarge,
                "enumeration limited to order " + std::to_string(max_order) + ", got " + std::to_string(n));
  const auto auts = automorphism_group(g);
  const std::size_t m = auts.size();
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < m; ++i) index[auts[i]] = static_cast<int>(i);
  std::vector<int> compose(m * m);  // compose[i*m+j] = auts[i] after auts[j]
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Permutation c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = auts[i][auts[j][x]];
      compose[i * m + j] = index.at(c);
    }

  // Elements in breadth-first order from the generators.
  std::vector<Elem> order{0};
  {
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (Elem s : g.generators()) {
        const Elem y = g.mul(order[head], s);
        if (!seen[y]) {
          seen[y] = true;
          order.push_back(y);
        }
      }
  }

  std::vector<int> lam(n, -1);
  std::vector<Elem> assigned;  // doubles as the undo trail
  std::set<std::vector<Elem>> seen;
  std::vector<SkewBrace> out;

  // Assigns lam[a] = v and propagates lam[a o b] = lam[a] lam[b] with
  // a o b = a . lam_a(b). Returns false on conflict; the trail is left for
  // the caller to unwind.
  auto assign = [&](Elem a0, int v0) {
    std::vector<std::pair<Elem, int>> work{{a0, v0}};
    while (!work.empty()) {
      auto [a, v] = work.back();
      work.pop_back();
      if (lam[a] != -1) {
        if (lam[a] != v) return false;
        continue;
      }
      lam[a] = v;
      assigned.push_back(a);
      for (Elem b : assigned) {
        const int lb = lam[b];
        work.push_back({g.mul(a, auts[v][b]), compose[v * m + lb]});
        work.push_back({g.mul(b, auts[lb][a]), compose[lb * m + v]});
      }
    }
    return true;
  };
  auto unwind = [&](std::size_t mark) {
    while (assigned.size() > mark) {
      lam[assigned.back()] = -1;
      assigned.pop_back();
    }
  };

  const Table dot_rows = g.rows();
  auto search = [&](auto&& self) -> void {
    auto next = std::find_if(order.begin(), order.end(), [&](Elem x) { return lam[x] == -1; });
    if (next == order.end()) {
      Table circ(n, std::vector<Elem>(n));
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) circ[x][y] = g.mul(x, auts[lam[x]][y]);
      SkewBrace b = validate_brace(dot_rows, circ);
      if (seen.insert(circ_key(b)).second) out.push_back(std::move(b));
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      const std::size_t mark = assigned.size();
      if (assign(*next, static_cast<int>(v))) self(self);
      unwind(mark);
    }
  };
  if (assign(0, index.at(auts[0]))) search(search);

  std::sort(out.begin(), out.end(),
            [](const SkewBrace& l, const SkewBrace& r) { return circ_key(l) < circ_key(r); });
  return out;
}

std::vector<GroupTable> all_group_laws(std::size_t n) {
  if (n == 0 || n > 6) throw Error(ErrorCode::TooLarge, "group-law enumeration is limited to order 6");
  std::vector<Elem> t(n * n, 0);
  for (Elem i = 0; i < n; ++i) t[i] = t[i * n] = i;
  std::vector<std::vector<bool>> row_used(n, std::vector<bool>(n, false)),
      col_used(n, std::vector<bool>(n, false));
  for (Elem i = 0; i < n; ++i) {
    row_used[i][i] = col_used[i][i] = true;
  }
  std::vector<GroupTable> out;
  auto associative = [&]() {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
    return true;
  };
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    const std::size_t inner = n - 1;
    if (cell == inner * inner) {
      if (associative()) out.push_back(group_from_trusted_table(n, t));
      return;
    }
    const std::size_t r = 1 + cell / inner, c = 1 + cell % inner;
    for (Elem v = 0; v < n; ++v) {
      if (row_used[r][v] || col_used[c][v]) continue;
      row_used[r][v] = col_used[c][v] = true;
      t[r * n + c] = v;
      self(self, cell + 1);
      row_used[r][v] = col_used[c][v] = false;
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<SkewBrace> brute_force_oracle(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n > 6) throw Error(ErrorCode::TooLarge, "the brute-force oracle is limited to order 6");
  std::set<std::vector<Elem>> candidates;
  std::vector<Elem> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  const auto laws = all_group_laws(n);
  do {
    std::vector<Elem> inv(n);
    for (Elem i = 0; i < n; ++i) inv[sigma[i]] = i;
    for (const auto& law : laws) {
      std::vector<Elem> t(n * n);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[a * n + b] = sigma[law.mul(inv[a], inv[b])];
      candidates.insert(std::move(t));
    }
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));

  std::vector<SkewBrace> out;
  const Table dot = g.rows();
  for (const auto& t : candidates) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          ok = t[a * n + g.mul(b, c)] == g.mul(g.mul(t[a * n + b], g.inv(a)), t[a * n + c]);
    if (!ok) continue;
    Table circ(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) circ[a][b] = t[a * n + b];
    out.push_back(validate_brace(dot, circ));
  }
  return out;  // already ordered by circ table
}

}  // namespace skewbrace
