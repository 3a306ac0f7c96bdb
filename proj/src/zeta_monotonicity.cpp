// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#include "zetabe/zeta_monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace zetabe {
namespace {

void validate_args(const f_args& args) {
  if (!(args.x >= 1.0) || !std::isfinite(args.x))
    throw domain_error("f: requires x >= 1");
  if (!(args.a > 0.0) || !std::isfinite(args.a))
    throw domain_error("f: requires a > 0");
  if (!(args.b > 0.0) || !std::isfinite(args.b))
    throw domain_error("f: requires b > 0");
}

// One partial-sum pass for h_sign: sums of s_n - r_n and
// s_n ln s_n - r_n ln r_n for n = 1..n_terms, plus rigorous tail bounds.
struct h_partial {
  double sum_diff = 0.0;       // P2 = sum (s_n - r_n)
  double sum_philog = 0.0;     // P1 = sum (s_n ln s_n - r_n ln r_n)
  double tail_diff_lo = 0.0;   // enclosure of the P2 tail
  double tail_diff_hi = 0.0;
  double tail_philog_abs = 0.0;  // |tail| bound for P1
  double round_slack = 0.0;
};

h_partial h_partial_sums(double x, double a, double b, std::int64_t n_terms) {
  const double c = a - 1.0 + b;  // r_n = (b/(n+c))^x; n + c >= a + b > 0
  detail::kahan_accumulator diff_acc;
  detail::kahan_accumulator philog_acc;
  double abs_mass = 0.0;

  for (std::int64_t n = n_terms; n >= 1; --n) {
    const double nb = static_cast<double>(n) + b;
    const double s = std::pow(b / nb, x);
    const double log_ratio = std::log1p((a - 1.0) / nb);  // ln((n+c)/(n+b))
    const double diff = s * (-std::expm1(-x * log_ratio));  // s_n - r_n
    const double r = s - diff;
    // s ln s - r ln r = (s - r) ln s + r * x * log_ratio
    const double philog = diff * (x * std::log(b / nb)) + r * x * log_ratio;
    diff_acc.add(diff);
    philog_acc.add(philog);
    abs_mass += std::abs(diff) + std::abs(philog) + s;
  }

  h_partial p;
  p.sum_diff = diff_acc.value();
  p.sum_philog = philog_acc.value();

  // Tail of sum (s_n - r_n): the summand is b^x [(t+b)^-x - (t+c)^-x],
  // monotone in t with a closed-form integral, so
  //   int_{N+1}^inf <= tail <= int_N^inf   (signs follow a - 1).
  const auto integral_from = [&](double t) {
    const double u = t + b;
    const double ell = std::log1p((a - 1.0) / u);
    const double q = (x == 1.0) ? ell : -std::expm1((1.0 - x) * ell) / (x - 1.0);
    return std::pow(b, x) * std::pow(u, 1.0 - x) * q;
  };
  const double i0 = integral_from(static_cast<double>(n_terms));
  const double i1 = integral_from(static_cast<double>(n_terms) + 1.0);
  p.tail_diff_lo = std::min(i0, i1);
  p.tail_diff_hi = std::max(i0, i1);

  // Tail of sum (s ln s - r ln r): with both sequences below e^-2 past N,
  //   |phi(s) - phi(r)| <= |s - r| * x * ln((n + max(b,c)) / b),
  // and |s_n - r_n| <= x |a-1| b^x (n + m)^{-x-1}, m = min(b,c). Summing by
  // integral comparison gives a closed-form bound.
  const double m_lo = std::min(b, c);
  const double m_hi = std::max(b, c);
  const double big_n = static_cast<double>(n_terms);
  const double u = big_n + m_lo;
  const double log_shift = std::log((big_n + m_hi) / (big_n + m_lo));
  const double tail1 =
      x * x * std::abs(a - 1.0) * std::pow(b, x) *
      (std::pow(u, -x) * (std::log(u / b) / x + 1.0 / (x * x)) +
       log_shift * std::pow(u, -x) / x);
  p.tail_philog_abs = tail1;

  // Round-off slack for the compensated partial sums (few ULP of the
  // accumulated absolute mass).
  p.round_slack = 8.0 * std::numeric_limits<double>::epsilon() * (abs_mass + 1.0);
  return p;
}

// -(w ln w) evaluated with the extremum at w = 1/e taken into account, so we
// can bound -(1+S) ln(1+S) over an interval of S values.
double neg_wlogw(double w) { return -w * std::log(w); }

}  // namespace

double f(const f_args& args, const eval_config& cfg) {
  validate_args(args);
  const series_value d = hurwitz_zeta_diff(args.x, args.a, args.b, cfg);
  return std::pow(d.value, 1.0 / args.x);
}

double log_f(const f_args& args, const eval_config& cfg) {
  if (!(args.x > 1.0)) throw domain_error("log_f: requires x > 1");
  validate_args(args);
  const series_value d = hurwitz_zeta_diff(args.x, args.a, args.b, cfg);
  return std::log(d.value) / args.x;
}

sign_result h_sign(double x, double a, double b, const eval_config& cfg) {
  detail::validate(cfg);
  if (!(x > 1.0) || !std::isfinite(x))
    throw domain_error("h_sign: requires x > 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw domain_error("h_sign: requires a > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw domain_error("h_sign: requires b > 0");

  const double c = a - 1.0 + b;
  // Past this index both sequences are below e^-2 for any x > 1 and the tail
  // summands are decreasing, which the tail bounds require.
  std::int64_t n = std::max<std::int64_t>(
      64, static_cast<std::int64_t>(std::ceil(7.0 * std::max(b, c) + 2.0)));

  while (true) {
    const h_partial p = h_partial_sums(x, a, b, n);

    // H = P1 + T1 - (1 + P2 + T2) ln(1 + P2 + T2); enclose over
    // T1 in [-B1, B1], T2 in [lo, hi]. w -> -w ln w is concave with its
    // maximum at w = 1/e, so extremes sit at interval ends or at 1/e.
    const double w_lo = 1.0 + p.sum_diff + p.tail_diff_lo;
    const double w_hi = 1.0 + p.sum_diff + p.tail_diff_hi;
    if (!(w_lo > 0.0)) throw convergence_error("h_sign: partial sums degenerate");
    double m_min = std::min(neg_wlogw(w_lo), neg_wlogw(w_hi));
    double m_max = std::max(neg_wlogw(w_lo), neg_wlogw(w_hi));
    constexpr double kInvE = 0.36787944117144233;
    if (w_lo < kInvE && kInvE < w_hi) m_max = std::max(m_max, neg_wlogw(kInvE));

    const double slack = p.tail_philog_abs + p.round_slack;
    const double h_lo = p.sum_philog - slack + m_min;
    const double h_hi = p.sum_philog + slack + m_max;

    if (h_lo > 0.0) return sign_result::positive;
    if (h_hi < 0.0) return sign_result::negative;
    if (a == 1.0) return sign_result::zero;

    if (n > cfg.max_terms / 4)
      throw convergence_error(
          "h_sign: sign not resolved within max_terms (|H| below the "
          "truncation bound)");
    n *= 4;
  }
}

std::vector<double> lemma_sequence_u(const sequence_pair& pair) {
  const std::size_t len = pair.s_seq.size();
  if (pair.r_seq.size() != len)
    throw domain_error("lemma_sequence_u: sequences must have equal length");
  for (std::size_t i = 0; i < len; ++i) {
    const double s = pair.s_seq[i];
    const double r = pair.r_seq[i];
    if (!(s > 0.0 && s < 1.0) || !(r > 0.0 && r < 1.0))
      throw domain_error("lemma_sequence_u: entries must lie in (0, 1)");
  }

  std::vector<double> u(len + 1);
  u[0] = 0.0;
  detail::kahan_accumulator diff_sum;    // sum (s_n - r_n)
  detail::kahan_accumulator philog_sum;  // sum (s_n ln s_n - r_n ln r_n)
  for (std::size_t i = 0; i < len; ++i) {
    const double s = pair.s_seq[i];
    const double r = pair.r_seq[i];
    diff_sum.add(s - r);
    philog_sum.add(s * std::log(s) - r * std::log(r));
    const double w = 1.0 + diff_sum.value();
    if (!(w > 0.0))
      throw domain_error("lemma_sequence_u: 1 + sum(s_n - r_n) must stay positive");
    u[i + 1] = w * std::log(w) - philog_sum.value();
  }
  return u;
}

direction classify_direction(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw domain_error("classify_direction: requires a > 0");
  if (a == 1.0) return direction::constant;
  return a < 1.0 ? direction::increasing : direction::decreasing;
}

std::vector<double> polygamma_chain(int n_max, double a, double b) {
  if (n_max < 0 || n_max > 63)
    throw domain_error("polygamma_chain: n_max must be in [0, 63]");
  if (!(a > 0.0) || !std::isfinite(a))
    throw domain_error("polygamma_chain: requires a > 0");
  if (!(b > 0.0) || !std::isfinite(b))
    throw domain_error("polygamma_chain: requires b > 0");

  // Tight tolerance: the polygamma difference cancels for small a, so each
  // side is evaluated near machine accuracy.
  eval_config tight;
  tight.rel_tol = 1e-15;

  std::vector<double> chain(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    double diff;  // (-1)^n (psi^{(n)}(b+a) - psi^{(n)}(b)), positive
    if (n == 0) {
      diff = digamma(b + a) - digamma(b);
    } else {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      diff = sign * (polygamma(n, b + a, tight) - polygamma(n, b, tight));
    }
    const double base = diff / detail::factorial(n);
    if (!(base > 0.0) || !std::isfinite(base))
      throw overflow_error("polygamma_chain: chain element not representable");
    chain[static_cast<std::size_t>(n)] = std::pow(base, 1.0 / (n + 1.0));
  }
  return chain;
}

}  // namespace zetabe
