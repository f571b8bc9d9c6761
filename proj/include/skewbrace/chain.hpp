#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "skewbrace/element_set.hpp"

namespace skewbrace {

enum class SeriesKind {
  left,
  right,
  smoktunowicz,
  socle,
  annihilator,
  gamma,
  gamma_prime,
  relative_gamma,
  group_lower,
  group_upper,
  socle_sv,
};

std::string_view to_string(SeriesKind kind);
bool is_ascending(SeriesKind kind);

// A descending or ascending chain of subsets. Only the terms up to the first
// index after which the chain is constant are stored; term(n) past that point
// returns the stabilized term.
struct SeriesChain {
  SeriesKind kind{};
  std::size_t first_index = 1;  // 0 for ascending chains, 1 for descending
  std::vector<ElementSet> terms;
  std::size_t stabilized_at = 1;
  bool reaches_terminal = false;
  // Set when the step cap was hit before the chain was seen to stabilize.
  bool truncated = false;

  const ElementSet& term(std::size_t n) const;
  const ElementSet& last() const { return terms.back(); }
  std::size_t last_index() const { return first_index + terms.size() - 1; }

  // Least index whose term is terminal, when the chain reaches terminal.
  std::size_t terminal_index() const { return stabilized_at; }
};

}  // namespace skewbrace
