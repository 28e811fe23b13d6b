#ifndef MUTWB_MATRIX_HPP
#define MUTWB_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "integer.hpp"

namespace mutwb {

/// Dense square matrix stored row-major.
template <typename T>
class SquareMatrix {
public:
  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      assert(row.size() == n_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * n_, n_);
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if ((*this)(i, j) != (i == j ? T(1) : T(0)))
          return false;
    return true;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    assert(a.n_ == b.n_);
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < n; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  std::size_t hash() const {
    std::size_t seed = n_;
    for (const auto& x : data_)
      hash_combine(seed, std::hash<T>{}(x));
    return seed;
  }

private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<Integer>;

template <typename T>
SquareMatrix<T> power(const SquareMatrix<T>& m, unsigned exponent) {
  SquareMatrix<T> result = SquareMatrix<T>::identity(m.size());
  for (unsigned t = 0; t < exponent; ++t)
    result = result * m;
  return result;
}

} // namespace mutwb

template <typename T>
struct std::hash<mutwb::SquareMatrix<T>> {
  std::size_t operator()(const mutwb::SquareMatrix<T>& m) const {
    return m.hash();
  }
};

#endif
