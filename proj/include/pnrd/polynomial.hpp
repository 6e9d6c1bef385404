#pragma once

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pnrd/errors.hpp"
#include "pnrd/rational.hpp"

namespace pnrd {

/// Coefficient types for Polynomial: exact fields that can manufacture their
/// own zero and one. FieldElement needs this because its zero depends on the
/// parent number field.
template <class K>
concept ExactField = requires(const K& a, const K& b, const Rational& q) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<K>;
  { a.one_like() } -> std::convertible_to<K>;
  { a.scaled(q) } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
};

/// Dense univariate polynomial in the symbolic variable N over an exact field.
/// Coefficients are stored in ascending degree with no trailing zero; the zero
/// polynomial is the empty sequence.
template <ExactField K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }
  static Polynomial monomial(const K& c, int deg) {
    std::vector<K> v(static_cast<size_t>(deg) + 1, c.zero_like());
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// N + c
  static Polynomial linear(const K& c) { return Polynomial(std::vector<K>{c, c.one_like()}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coefficients() const { return c_; }
  const K& operator[](size_t i) const { return c_.at(i); }
  const K& leading() const { return c_.back(); }
  /// Coefficient of N^i, or zero (shaped like the leading coefficient).
  K coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[static_cast<size_t>(i)];
    return c_.back().zero_like();
  }

  /// Multiplicity of N as a factor.
  int trailing_zeros() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[static_cast<size_t>(k)].is_zero()) ++k;
    return k;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), o.c_.back().zero_like());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.c_.back().zero_like());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial times(const K& s) const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  Polynomial scaled(const Rational& s) const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = x.scaled(s);
    r.trim();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws on a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw computation_error("DivisionByZero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    const K inv_lead = b.leading().inverse();
    std::vector<K> rem = a.c_;
    std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree() + 1), b.leading().zero_like());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const K f = rem[static_cast<size_t>(k + b.degree())] * inv_lead;
      quo[static_cast<size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        auto& slot = rem[static_cast<size_t>(k + j)];
        slot = slot - f * b.c_[static_cast<size_t>(j)];
      }
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Division that must leave no remainder (used by fraction-free elimination).
  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw computation_error("InexactDivision", "polynomial division left a remainder");
    return q;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(Rational(static_cast<long>(i))));
    return Polynomial(std::move(r));
  }

  /// Horner evaluation at x.
  K operator()(const K& x) const {
    if (is_zero()) return x.zero_like();
    K acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return times(leading().inverse());
  }

  /// p(N + t)
  Polynomial shift(const K& t) const {
    if (is_zero()) return {};
    const Polynomial lin = linear(t);
    Polynomial acc = constant(c_.back());
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  /// p(s * N)
  Polynomial rescale(const K& s) const {
    if (is_zero()) return {};
    Polynomial r = *this;
    K power = s.one_like();
    for (auto& x : r.c_) {
      x = x * power;
      power = power * s;
    }
    r.trim();
    return r;
  }

  Polynomial pow(unsigned e) const {
    if (is_zero()) return {};
    Polynomial result = constant(c_.back().one_like());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// The unique q with q^2 = p and a leading coefficient that is the positive
/// rational square root of p's leading coefficient, found by matching
/// coefficients from the top degree down. Returns nullopt when p is not a
/// square (odd degree, non-square leading coefficient, or a nonzero
/// remainder after matching).
template <ExactField K>
std::optional<Polynomial<K>> exact_sqrt(const Polynomial<K>& p) {
  if (p.is_zero()) return Polynomial<K>{};
  if (p.degree() % 2 != 0) return std::nullopt;
  const int d = p.degree() / 2;
  std::optional<K> top = exact_sqrt(p.leading());
  if (!top) return std::nullopt;
  std::vector<K> q(static_cast<size_t>(d) + 1, p.leading().zero_like());
  q[static_cast<size_t>(d)] = *top;
  const K inv_two_top = top->scaled(Rational(2)).inverse();
  for (int k = d - 1; k >= 0; --k) {
    K acc = p.coeff(d + k);
    for (int i = k + 1; i <= d - 1; ++i) {
      const int j = d + k - i;
      if (j <= k || j >= d) continue;
      acc = acc - q[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
    }
    q[static_cast<size_t>(k)] = acc * inv_two_top;
  }
  Polynomial<K> root(std::move(q));
  if (!(root * root == p)) return std::nullopt;
  return root;
}

/// Resultant over a field by the Euclidean recurrence. For monic `f`,
/// res(f, g) is the product of g over the roots of f.
template <ExactField K>
K resultant(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.is_zero() || g.is_zero()) {
    if (!f.is_zero()) return f.leading().zero_like();
    if (!g.is_zero()) return g.leading().zero_like();
    throw computation_error("InvalidArgument", "resultant of two zero polynomials");
  }
  const int m = f.degree();
  const int n = g.degree();
  if (n == 0) {
    K acc = g.leading().one_like();
    for (int i = 0; i < m; ++i) acc = acc * g.leading();
    return acc;
  }
  if (m == 0) {
    K acc = f.leading().one_like();
    for (int i = 0; i < n; ++i) acc = acc * f.leading();
    return acc;
  }
  const Polynomial<K> r = f % g;
  if (r.is_zero()) return f.leading().zero_like();
  // res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r)
  K acc = resultant(g, r);
  for (int i = 0; i < m - r.degree(); ++i) acc = acc * g.leading();
  if ((m * n) % 2 != 0) acc = -acc;
  return acc;
}

template <ExactField K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const K& c = p[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i >= 1) os << "*N";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

using RationalPolynomial = Polynomial<Rational>;

/// Human-readable rendering, e.g. "N^2 - 3/2*N + 1".
std::string to_string(const RationalPolynomial& p, const std::string& var = "N");

/// Builds a rational polynomial from ascending coefficients.
RationalPolynomial rational_poly(std::initializer_list<Rational> ascending);

}  // namespace pnrd
