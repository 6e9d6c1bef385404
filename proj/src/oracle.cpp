#include "pnrd/oracle.hpp"

#include "pnrd/errors.hpp"

namespace pnrd::oracle {

SymMatrix::SymMatrix(Matrix<Rational> m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw validation_error("ShapeMismatch", "need a nonempty square matrix");
  for (size_t i = 0; i < m_.rows(); ++i)
    for (size_t j = i + 1; j < m_.cols(); ++j)
      if (!(m_(i, j) == m_(j, i))) throw validation_error("NotSymmetric", "matrix is not symmetric");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const size_t n = rows.size();
  std::vector<Rational> data;
  for (const auto& r : rows) {
    if (r.size() != n) throw validation_error("ShapeMismatch", "rows of unequal length");
    data.insert(data.end(), r.begin(), r.end());
  }
  return SymMatrix(Matrix<Rational>(n, n, std::move(data)));
}

SymMatrix SymMatrix::scalar(size_t n, const Rational& c) {
  Matrix<Rational> m(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i) m(i, i) = c;
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::shifted(const Rational& c) const {
  Matrix<Rational> m = m_;
  for (size_t i = 0; i < size(); ++i) m(i, i) += c;
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::congruent(const Matrix<Rational>& a) const {
  const size_t n = size();
  Matrix<Rational> ma(n, n, Rational(0)), out(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) ma(i, j) += m_(i, k) * a(k, j);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) out(i, j) += a(k, i) * ma(k, j);
  return SymMatrix(std::move(out));
}

Rational oracle_chi(const SymMatrix& sm) {
  const size_t n = sm.size();
  mpz_class d = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), sm(i, j).den().get_mpz_t());

  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = sm(i, j).num() * (d / sm(i, j).den());

  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), n);
  return Rational(sign * a[n - 1][n - 1], scale);
}

Inertia oracle_inertia(const SymMatrix& sm) {
  const size_t n = sm.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = sm(i, j);

  auto swap_sym = [&](size_t p, size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  // Row/column l added to row/column j.
  auto add_sym = [&](size_t j, size_t l) {
    for (size_t c = 0; c < n; ++c) a[j][c] += a[l][c];
    for (size_t r = 0; r < n; ++r) a[r][j] += a[r][l];
  };

  Inertia out;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][p].is_zero()) ++p;
    if (p == n) {
      // Zero diagonal: an off-diagonal entry a_jl != 0 makes a_jj + 2a_jl + a_ll nonzero.
      bool found = false;
      for (size_t j = k; j < n && !found; ++j)
        for (size_t l = j + 1; l < n && !found; ++l)
          if (!a[j][l].is_zero()) {
            add_sym(j, l);
            p = j;
            found = true;
          }
      if (!found) {
        out.zero += static_cast<int>(n - k);
        return out;
      }
    }
    if (p != k) swap_sym(k, p);
    const Rational piv = a[k][k];
    (piv.sign() > 0 ? out.plus : out.minus) += 1;
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / piv;
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return out;
}

long oracle_regcont(const SymMatrix& m, long lo, long hi) {
  const int g = static_cast<int>(m.size());
  for (long mm = lo; mm <= hi; ++mm) {
    bool all = true;
    for (int i = 1; i <= g && all; ++i) {
      const SymMatrix shifted = m.shifted(Rational(mm - i));
      all = oracle_chi(shifted).is_zero() || oracle_inertia(shifted).minus != i;
    }
    if (all) return mm;
  }
  throw computation_error("WindowExhausted", "oracle enumeration found no m in [" + std::to_string(lo) + ", " +
                                                 std::to_string(hi) + "]");
}

bool is_split_context(const VarietyContext& ctx) {
  if (ctx.components().size() != 1) return false;
  const auto& c = *ctx.components()[0];
  if (c.center_degree() != 1 || c.algebra()->kind() != AlgebraKind::Field || c.dim_g() != 1) return false;
  if (c.involution().base != BaseInvolution::Identity) return false;
  const auto& h = c.involution().gram;
  for (size_t i = 0; i < h.rows(); ++i)
    for (size_t j = 0; j < h.cols(); ++j) {
      const auto v = h(i, j).coords()[0].as_rational();
      if (!v || !(*v == Rational(i == j ? 1 : 0))) return false;
    }
  return true;
}

SymMatrix to_sym_matrix(const VarietyContext& ctx, const SymmetricClass& cls) {
  if (!is_split_context(ctx)) {
    throw validation_error("NotSplitContext", "oracle needs one Field factor over Q with g = 1, transpose involution and H = I");
  }
  const auto& b = cls.blocks().at(0);
  const size_t n = b.matrix().rows();
  Matrix<Rational> m(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = *b(i, j).coords()[0].as_rational();
  return SymMatrix(std::move(m));
}

SymmetricClass from_sym_matrix(const VarietyContext& ctx, const SymMatrix& m) {
  if (!is_split_context(ctx)) {
    throw validation_error("NotSplitContext", "oracle needs one Field factor over Q with g = 1, transpose involution and H = I");
  }
  const ComponentPtr& comp = ctx.components()[0];
  BlockCoords coords(m.size(), std::vector<AlgebraCoords>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) coords[i][j] = {{m(i, j)}};
  return SymmetricClass::make(ctx, {AlgebraElement::from_coords(comp, coords)});
}

VarietyContext split_context(int g) {
  ComponentDescription d;
  d.name = "E";
  d.dim_g = 1;
  d.mult_r = g;
  ContextDescription c;
  c.components.push_back(d);
  return build_context(c);
}

}  // namespace pnrd::oracle
