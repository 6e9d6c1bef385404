#pragma once

#include <stdexcept>
#include <vector>

#include "pnrd/matrix.hpp"

namespace pnrd {

// Determinants over an integral domain R. R must provide +, -, *, unary -,
// is_zero() and an ADL-visible exact_div(R, R).

/// Fraction-free (Bareiss) elimination with row pivoting on nonzero entries.
/// Every division is exact, so intermediate entries stay inside R.
template <class R>
R bareiss_determinant(Matrix<R> m) {
  const size_t n = m.rows();
  if (n == 0 || !m.square()) throw std::invalid_argument("bareiss_determinant: need a nonempty square matrix");
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return m(k, k);  // zero column below the diagonal: singular
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        R v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(v) : exact_div(v, m(k - 1, k - 1));
      }
    }
  }
  R d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Laplace expansion along the first row; intended for n < 6.
template <class R>
R cofactor_determinant(const Matrix<R>& m) {
  const size_t n = m.rows();
  if (n == 0 || !m.square()) throw std::invalid_argument("cofactor_determinant: need a nonempty square matrix");
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  std::vector<R> minor_data;
  minor_data.reserve((n - 1) * (n - 1));
  bool have = false;
  R acc = m(0, 0);
  for (size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    minor_data.clear();
    for (size_t i = 1; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (j != c) minor_data.push_back(m(i, j));
    R term = m(0, c) * cofactor_determinant(Matrix<R>(n - 1, n - 1, minor_data));
    if (c % 2 == 1) term = -term;
    acc = have ? acc + term : term;
    have = true;
  }
  return have ? acc : m(0, 0);  // first row entirely zero
}

inline constexpr size_t kCofactorLimit = 6;

template <class R>
R determinant(const Matrix<R>& m) {
  return m.rows() < kCofactorLimit ? cofactor_determinant(m) : bareiss_determinant(m);
}

}  // namespace pnrd
