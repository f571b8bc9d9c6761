#pragma once

#include <cstddef>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

using Permutation = std::vector<Elem>;

// All automorphisms of G (|G| <= 64, else TooLarge), identity first.
std::vector<Permutation> automorphism_group(const GroupTable& g);

// Every skew brace with additive group G on the same labels, one per
// distinct circ table, sorted by circ table. Throws TooLarge above
// `max_order`.
std::vector<SkewBrace> enumerate_braces(const GroupTable& g, std::size_t max_order = 12);

// Independent check for |G| <= 6: every group law on the carrier with
// identity 0, relabeled by every permutation fixing 0, kept when it
// satisfies the brace relation over G.
std::vector<SkewBrace> brute_force_oracle(const GroupTable& g);

// Every group law on {0..n-1} with identity 0 (n <= 6).
std::vector<GroupTable> all_group_laws(std::size_t n);

// Flat circ table, the dedup key for enumerated braces.
std::vector<Elem> circ_key(const SkewBrace& a);

}  // namespace skewbrace
