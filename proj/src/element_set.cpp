#include "skewbrace/element_set.hpp"

namespace skewbrace {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) s.insert(static_cast<Elem>(x));
  return s;
}

ElementSet ElementSet::trivial(std::size_t universe) {
  ElementSet s(universe);
  if (universe > 0) s.insert(0);
  return s;
}

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> members) {
  ElementSet s(universe);
  for (Elem x : members) s.insert(x);
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

}  // namespace skewbrace
