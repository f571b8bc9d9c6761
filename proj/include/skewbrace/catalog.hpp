#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// ---- groups ----

GroupTable cyclic_group(std::size_t n);
// Pairs (g, h) are indexed g + |G| h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
// Symmetries of the m-gon, order 2m: r^i s^j is index i + m j.
GroupTable dihedral_group(std::size_t order);
// <x, y | x^{2m} = 1, y^2 = x^m, y x y^-1 = x^-1>, order 4m; Q8 at m = 2.
GroupTable dicyclic_group(std::size_t order);
GroupTable alternating_group_4();

// Names such as C6, S3, D8, Q8, A4, C2xC2, C2^3, C4xC2.
GroupTable builtin_group(std::string_view name);

struct NamedGroup {
  std::string name;
  GroupTable group;
};
// One group per isomorphism type, for every order up to `max_order` <= 12.
std::vector<NamedGroup> small_groups(std::size_t max_order);

// ---- brace families ----

enum class PqVariant { i, ii };

// Order pq, element (i, j) at index i + p j.
//   (i):  (i,j).(s,t) = (i+s, j+t),        (i,j)o(s,t) = (i + k^j s, j+t)
//   (ii): (i,j).(s,t) = (i + k^j s, j+t),  (i,j)o(s,t) = (k^t i + k^j s, j+t)
// Needs p, q prime, p = 1 mod q, k^q = 1 mod p and k != 1 mod p
// (BadParameters otherwise).
SkewBrace make_pq_brace(std::uint32_t p, std::uint32_t q, std::uint32_t k, PqVariant variant);
inline Elem pq_element(std::uint32_t p, std::uint32_t i, std::uint32_t j) { return i + p * j; }

// Formula-backed brace on F_p^dB x F_p^dC, checked by sampling.
SkewBrace make_bc_brace(std::uint32_t p, std::size_t dim_b, std::size_t dim_c,
                        std::vector<FpMatrix> phi, std::vector<FpMatrix> psi,
                        std::uint64_t seed = kDefaultSeed, std::size_t samples = kDefaultSamples);

// The order-p^8 brace with phi_{e4} unipotent and psi_{e3} the partial
// shift; every other basis image is the identity. Throws BadPrime unless p
// is a prime >= 5.
SkewBrace make_counterexample_F(std::uint32_t p, std::uint64_t seed = kDefaultSeed,
                                std::size_t samples = kDefaultSamples);
std::vector<std::vector<std::int64_t>> counterexample_phi_e4();
std::vector<std::vector<std::int64_t>> counterexample_psi_e3();

// ---- specs ----

struct TablesSpec {
  Table dot, circ;
};
struct TrivialSpec {
  Table group;
};
struct AlmostTrivialSpec {
  Table group;
};
struct RadicalRingSpec {
  Table add, mult;
};
struct PqSpec {
  std::uint32_t p, q, k;
  PqVariant variant;
};
struct BcSpec {
  std::uint32_t p;
  std::size_t dim_b, dim_c;
  std::vector<std::vector<std::vector<std::int64_t>>> phi, psi;
};
struct CounterexampleSpec {
  std::uint32_t p;
};

using BraceSpec = std::variant<TablesSpec, TrivialSpec, AlmostTrivialSpec, RadicalRingSpec, PqSpec,
                               BcSpec, CounterexampleSpec>;

SkewBrace build_brace(const BraceSpec& spec, std::uint64_t seed = kDefaultSeed);

struct NamedBrace {
  std::string name;
  SkewBrace brace;
};

// Every table-backed brace the catalog knows about, for sweeps.
std::vector<NamedBrace> catalog_braces();

}  // namespace skewbrace
