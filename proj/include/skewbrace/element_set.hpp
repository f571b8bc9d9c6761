#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "skewbrace/error.hpp"

namespace skewbrace {

// A subset of the carrier {0, ..., universe-1}, stored as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe);
  // {identity}; the identity is always index 0.
  static ElementSet trivial(std::size_t universe);
  static ElementSet of(std::size_t universe, std::span<const Elem> members);
  static ElementSet of(std::size_t universe, std::initializer_list<Elem> members) {
    return of(universe, std::span<const Elem>(members.begin(), members.size()));
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_trivial() const noexcept { return size() == 1 && contains(0); }
  bool is_full() const noexcept { return size() == universe_; }

  bool contains(Elem x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  // Returns true if x was not already present.
  bool insert(Elem x) noexcept {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }
  void erase(Elem x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> members() const;
  bool is_subset_of(const ElementSet& other) const noexcept;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace skewbrace
