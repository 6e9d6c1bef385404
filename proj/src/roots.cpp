#include "pnrd/roots.hpp"

#include "pnrd/errors.hpp"

namespace pnrd {

namespace {

RationalPolynomial positive_normalize(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading().abs().inverse());
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  const RationalPolynomial g = gcd(p, p.derivative());
  return g.degree() <= 0 ? p : divmod(p, g).first;
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct roots of squarefree s (given by its chain) in (lo, hi].
int chain_count(const std::vector<RationalPolynomial>& chain, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  const int v_lo = lo ? sign_changes(chain, *lo) : sign_changes_at_infinity(chain, false);
  const int v_hi = hi ? sign_changes(chain, *hi) : sign_changes_at_infinity(chain, true);
  return v_lo - v_hi;
}

}  // namespace

int sign_at(const RationalPolynomial& p, const Rational& x) { return p(x).sign(); }

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(positive_normalize(p));
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(positive_normalize(d));
  while (chain.back().degree() > 0) {
    RationalPolynomial r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(positive_normalize(r));
  }
  return chain;
}

int sign_changes(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at(q, x));
  return count_changes(signs);
}

int sign_changes_at_infinity(const std::vector<RationalPolynomial>& chain, bool positive_side) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = q.leading().sign();
    if (!positive_side && q.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return count_changes(signs);
}

int count_distinct_roots(const RationalPolynomial& p, const std::optional<Rational>& lo,
                         const std::optional<Rational>& hi) {
  if (p.is_zero()) throw computation_error("ZeroPolynomial", "root count of the zero polynomial");
  return chain_count(sturm_sequence(squarefree_part(p)), lo, hi);
}

std::vector<RationalPolynomial> multiplicity_layers(const RationalPolynomial& p) {
  if (p.is_zero()) throw computation_error("ZeroPolynomial", "multiplicity layers of the zero polynomial");
  std::vector<RationalPolynomial> tower{p.monic()};
  while (tower.back().degree() > 0) tower.push_back(gcd(tower.back(), tower.back().derivative()));
  std::vector<RationalPolynomial> layers;
  for (size_t j = 1; j < tower.size(); ++j) layers.push_back(divmod(tower[j - 1], tower[j]).first);
  return layers;
}

RootProfile sturm_root_profile(const RationalPolynomial& p) {
  if (p.is_zero()) throw computation_error("ZeroPolynomial", "root profile of the zero polynomial");
  RootProfile prof;
  prof.poly = p;
  prof.zero = p.trailing_zeros();
  const auto& c = p.coefficients();
  const RationalPolynomial stripped(std::vector<Rational>(c.begin() + prof.zero, c.end()));
  const Rational origin(0);
  for (const auto& layer : multiplicity_layers(stripped)) {
    const auto chain = sturm_sequence(layer);
    prof.positive += chain_count(chain, origin, std::nullopt);
    prof.negative += chain_count(chain, std::nullopt, origin);
  }
  return prof;
}

Rational cauchy_bound(const RationalPolynomial& p) {
  if (p.is_zero()) throw computation_error("ZeroPolynomial", "Cauchy bound of the zero polynomial");
  Rational best(0);
  const Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = (p[static_cast<size_t>(i)] / lead).abs();
    if (r > best) best = r;
  }
  return best + Rational(1);
}

RootCounter::RootCounter(const RationalPolynomial& p) : poly_(p) {
  for (const auto& layer : multiplicity_layers(p)) chains_.push_back(sturm_sequence(layer));
}

int RootCounter::count_above(const Rational& t) const {
  int total = 0;
  for (const auto& chain : chains_) total += chain_count(chain, t, std::nullopt);
  return total;
}

int RootCounter::count_real() const {
  int total = 0;
  for (const auto& chain : chains_) total += chain_count(chain, std::nullopt, std::nullopt);
  return total;
}

std::optional<std::pair<mpz_class, mpz_class>> integer_root_enclosure(const RationalPolynomial& p) {
  if (p.is_zero()) throw computation_error("ZeroPolynomial", "root enclosure of the zero polynomial");
  const RationalPolynomial s = squarefree_part(p);
  const auto chain = sturm_sequence(s);
  if (chain_count(chain, std::nullopt, std::nullopt) == 0) return std::nullopt;
  const mpz_class bound = cauchy_bound(p).ceil();

  // Upper end: smallest U with no root in (U, +inf).
  mpz_class lo = -bound;
  mpz_class hi = bound;
  while (lo < hi) {
    const mpz_class mid = (lo + hi) >= 0 ? mpz_class((lo + hi) / 2) : mpz_class((lo + hi - 1) / 2);
    if (chain_count(chain, Rational(mid), std::nullopt) == 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const mpz_class upper = hi;

  // Lower end: largest L with no root in (-inf, L).
  auto below = [&](const mpz_class& x) {
    const Rational at(x);
    return chain_count(chain, std::nullopt, at) - (sign_at(s, at) == 0 ? 1 : 0);
  };
  lo = -bound;
  hi = bound;
  while (lo < hi) {
    const mpz_class sum = lo + hi + 1;
    const mpz_class mid = sum >= 0 ? mpz_class(sum / 2) : mpz_class((sum - 1) / 2);
    if (below(mid) == 0) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return std::make_pair(lo, upper);
}

}  // namespace pnrd
