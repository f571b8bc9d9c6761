#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace skewbrace {

// Square matrix over F_p acting on column vectors from the left.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p), a_(dim * dim, 0) {}

  static FpMatrix identity(std::size_t dim, std::uint32_t p);
  // Entries are reduced mod p; negative values are allowed.
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p);

  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return a_[r * dim_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  FpMatrix pow(std::uint64_t e) const;
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;
  std::size_t rank() const;
  bool is_invertible() const { return rank() == dim_; }
  bool is_identity() const { return *this == identity(dim_, p_); }

  std::vector<std::vector<std::int64_t>> rows() const;

 private:
  std::size_t dim_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

}  // namespace skewbrace
