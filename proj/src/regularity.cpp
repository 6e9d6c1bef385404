#include "pnrd/regularity.hpp"

#include "pnrd/errors.hpp"

namespace pnrd {

namespace {

long to_long(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw computation_error("ScanWindowOverflow", std::string(what) + " does not fit a machine integer");
  return z.get_si();
}

PredicateCell make_cell(int i, Rational value, int positive) {
  PredicateCell c;
  c.i = i;
  c.degenerate = value.is_zero();
  c.value = std::move(value);
  c.positive = positive;
  c.holds = c.degenerate || positive != i;
  return c;
}

std::optional<std::string> proportional_note(const SymmetricClass& gamma, int g) {
  const auto c = gamma.scalar_value();
  if (!c) return std::nullopt;
  // (m - g + c) id is ample or trivial exactly when m >= g - c.
  const mpz_class threshold = (Rational(g) - *c).ceil();
  return "gamma = " + c->str() + "*id is proportional to the polarization; GV threshold m = ceil(g - c) = " +
         threshold.get_str();
}

}  // namespace

int weak_index(const VarietyContext& ctx, const SymmetricClass& alpha) {
  const RootProfile p = index(ctx, alpha);
  return p.positive + p.zero;
}

Classification classify(const VarietyContext& ctx, const SymmetricClass& alpha) {
  const HilbertData h = pnrd_pencil(ctx, alpha);
  Classification c;
  c.chi = ctx.sqrt_deg_phi() * h.q.coeff(0);
  c.index_i = h.profile.positive;
  c.dim_k = h.profile.zero;
  c.weak_index_j = c.index_i + c.dim_k;
  if (!c.chi.is_zero()) {
    c.label = "IT(" + std::to_string(c.index_i) + ")";
  } else {
    c.label = "WIT(" + std::to_string(c.weak_index_j) + ")-generic";
    c.caveat = "degenerate-all-vanishing-possible";
  }
  if (c.index_i == 0) c.gv_note = "index 0: generic vanishing (GV) behaviour";
  if (c.weak_index_j != c.index_i + c.dim_k) throw std::logic_error("weak index mismatch");
  return c;
}

PredicateRow regcont_row(const RationalPolynomial& q_gamma, long m) {
  const int g = q_gamma.degree();
  PredicateRow row;
  row.m = m;
  row.holds = true;
  for (int i = 1; i <= g; ++i) {
    const RationalPolynomial shifted = q_gamma.shift(Rational(m - i));
    const Rational value = shifted.coeff(0);
    row.cells.push_back(make_cell(i, value, sturm_root_profile(shifted).positive));
    row.holds = row.holds && row.cells.back().holds;
  }
  return row;
}

std::pair<long, long> regcont_window(const RationalPolynomial& q_gamma) {
  const int g = q_gamma.degree();
  const auto enclosure = integer_root_enclosure(q_gamma);
  if (!enclosure) throw computation_error("NonRealRoots", "q has no real roots");
  // Below lo every root of the i = g shift is positive; above hi none are.
  return {to_long(enclosure->first + g - 1, "scan window"), to_long(enclosure->second + g + 1, "scan window")};
}

RegularityResult reg_cont(const VarietyContext& ctx, const SymmetricClass& gamma) {
  const HilbertData h = pnrd_pencil(ctx, gamma);
  const int g = ctx.dimension();
  const RootCounter counter(h.q);

  RegularityResult out;
  out.g = g;
  out.cauchy_bound = cauchy_bound(h.q);
  std::tie(out.window_lo, out.window_hi) = regcont_window(h.q);
  out.gv_note = proportional_note(gamma, g);

  for (long m = out.window_lo; m <= out.window_hi; ++m) {
    PredicateRow row;
    row.m = m;
    row.holds = true;
    for (int i = 1; i <= g; ++i) {
      const Rational t(m - i);
      row.cells.push_back(make_cell(i, h.q(t), counter.count_above(t)));
      row.holds = row.holds && row.cells.back().holds;
    }
    const bool holds = row.holds;
    out.table.push_back(std::move(row));
    if (!holds) continue;
    if (m == out.window_lo) {
      throw computation_error("ScanWindowInvalid", "predicate already holds at the lower end m = " + std::to_string(m));
    }
    out.m = m;
    return out;
  }
  throw computation_error("ScanWindowExhausted", "no m in [" + std::to_string(out.window_lo) + ", " +
                                                     std::to_string(out.window_hi) + "] satisfies the predicate");
}

RegularityResult reg_cont_bundle(const VarietyContext& ctx, const BundleClass& b) { return reg_cont(ctx, b.gamma); }

SweepResult sweep(const VarietyContext& ctx, const SymmetricClass& gamma0, const SymmetricClass& delta,
                  const std::vector<Rational>& grid) {
  SweepResult out;
  for (const auto& s : grid) {
    SweepPoint p;
    p.s = s;
    try {
      p.result = reg_cont(ctx, gamma0 + delta.scaled(s));
    } catch (const Error& e) {
      p.error = e.what();
      p.error_code = e.code();
    }
    out.points.push_back(std::move(p));
  }
  for (const auto& p : out.points) {
    const std::optional<long> m = p.result ? std::optional<long>(p.result->m) : std::nullopt;
    if (!out.segments.empty()) {
      auto& last = out.segments.back();
      if (last.m == m && last.error == p.error_code) {
        last.to = p.s;
        ++last.count;
        continue;
      }
    }
    out.segments.push_back(SweepSegment{p.s, p.s, 1, m, p.error_code});
  }
  return out;
}

}  // namespace pnrd
