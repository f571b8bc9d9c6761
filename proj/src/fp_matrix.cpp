#include "skewbrace/fp_matrix.hpp"

#include <utility>

namespace skewbrace {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t m = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FpMatrix FpMatrix::identity(std::size_t dim, std::uint32_t p) {
  FpMatrix m(dim, p);
  for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
  FpMatrix m(rows.size(), p);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size() && c < rows.size(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { a_[r * dim_ + c] = reduce(v, p_); }

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  FpMatrix out(dim_, p_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::uint64_t aik = a_[i * dim_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        out.a_[i * dim_ + j] =
            static_cast<std::uint32_t>((out.a_[i * dim_ + j] + aik * o.a_[k * dim_ + j]) % p_);
    }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  FpMatrix out(dim_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  FpMatrix result = identity(dim_, p_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FpMatrix::apply(std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < dim_; ++j) acc += static_cast<std::uint64_t>(a_[i * dim_ + j]) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

std::size_t FpMatrix::rank() const {
  std::vector<std::uint32_t> m = a_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim_ && rank < dim_; ++col) {
    std::size_t pivot = rank;
    while (pivot < dim_ && m[pivot * dim_ + col] == 0) ++pivot;
    if (pivot == dim_) continue;
    for (std::size_t j = 0; j < dim_; ++j) std::swap(m[pivot * dim_ + j], m[rank * dim_ + j]);
    const std::uint64_t inv = inverse_mod(m[rank * dim_ + col], p_);
    for (std::size_t j = 0; j < dim_; ++j)
      m[rank * dim_ + j] = static_cast<std::uint32_t>(m[rank * dim_ + j] * inv % p_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == rank || m[i * dim_ + col] == 0) continue;
      const std::uint64_t f = m[i * dim_ + col];
      for (std::size_t j = 0; j < dim_; ++j)
        m[i * dim_ + j] =
            static_cast<std::uint32_t>((m[i * dim_ + j] + (p_ - f) * m[rank * dim_ + j]) % p_);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::int64_t>> FpMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_, std::vector<std::int64_t>(dim_));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out[r][c] = a_[r * dim_ + c];
  return out;
}

}  // namespace skewbrace
