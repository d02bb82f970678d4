#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exact {

/// Row-major dense matrix over an arbitrary exact field F.
/// F needs construction from int, ==, and the four field operations.
template <class F>
using FMat = std::vector<std::vector<F>>;

template <class F>
std::size_t rank(FMat<F> m) {
  const F zero(0);
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == zero) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == zero) continue;
      F f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

template <class F>
std::optional<FMat<F>> inverse(const FMat<F>& m) {
  const F zero(0);
  const F one(1);
  const std::size_t n = m.size();
  FMat<F> a = m;
  FMat<F> inv(n, std::vector<F>(n, zero));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: non-square");
    inv[i][i] = one;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == zero) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    F piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] / piv;
      inv[c][j] = inv[c][j] / piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == zero) continue;
      F f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = a[i][j] - f * a[c][j];
        inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Solves A x = b for square invertible A; nullopt when singular.
template <class F>
std::optional<std::vector<F>> solve(FMat<F> a, std::vector<F> b) {
  const F zero(0);
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == zero) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == zero) continue;
      F f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
      b[i] = b[i] - f * b[c];
    }
  }
  std::vector<F> x(n, zero);
  for (std::size_t i = n; i-- > 0;) {
    F acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc = acc - a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

/// Basis of the right null space of an m-by-n matrix.
template <class F>
std::vector<std::vector<F>> nullspace(FMat<F> m, std::size_t ncols) {
  const F zero(0);
  const F one(1);
  std::size_t rows = m.size();
  for (auto& row : m)
    if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == zero) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    F piv = m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] = m[r][j] / piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == zero) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<F>> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(ncols, zero);
    v[c] = one;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = zero - m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace exact
