#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace exact {

/// Dense matrix over arbitrary-precision integers.
class ZMat {
public:
  ZMat() = default;
  ZMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ZMat identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const ZMat& other) const = default;

  ZMat operator*(const ZMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("ZMat: shape mismatch");
    ZMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpz_class& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out.at(i, j) += v * rhs.at(k, j);
      }
    return out;
  }

  ZMat operator+(const ZMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument("ZMat: shape mismatch");
    ZMat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
  }

  ZMat transposed() const {
    ZMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  ZMat pow(unsigned long e) const {
    if (rows_ != cols_) throw std::invalid_argument("ZMat: pow of non-square");
    ZMat result = identity(rows_);
    ZMat base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      base = base * base;
      e >>= 1UL;
    }
    return result;
  }

  mpz_class trace() const {
    if (rows_ != cols_) throw std::invalid_argument("ZMat: trace of non-square");
    mpz_class t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  /// Fraction-free (Bareiss) determinant.
  mpz_class det() const {
    if (rows_ != cols_) throw std::invalid_argument("ZMat: det of non-square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    ZMat m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m.at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m.at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
          mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
                       prev.get_mpz_t());
        }
      prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
  }

  /// Determinants of the leading principal k-by-k blocks, k = 1..n.
  std::vector<mpz_class> leading_principal_minors() const {
    std::vector<mpz_class> out;
    for (std::size_t k = 1; k <= rows_; ++k) {
      ZMat sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
      out.push_back(sub.det());
    }
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

}  // namespace exact
