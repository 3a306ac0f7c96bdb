// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "zetabe/errors.hpp"

namespace zetabe {

/// A computed series sum together with a rigorous truncation-error bound.
///
/// `error_bound` is an absolute bound on |value - exact sum| coming from the
/// truncation analysis (Euler-Maclaurin remainder or integral tail
/// comparison). It does not include double round-off, which is kept at the
/// few-ULP level by compensated summation.
struct series_value {
  double value = 0.0;
  double error_bound = 0.0;
  std::int64_t terms_used = 0;
};

/// Tolerances and budgets for series evaluation.
///
/// rel_tol must lie in (0, 1e-6]; em_bernoulli_terms is the number of
/// Bernoulli correction terms in the Euler-Maclaurin tail (2..30).
struct eval_config {
  double rel_tol = 1e-12;
  std::int64_t max_terms = 10'000'000;
  int em_bernoulli_terms = 12;
};

/// Hurwitz zeta zeta(x,s) = sum_{k>=0} (k+s)^-x for x > 1, s > 0.
///
/// Direct head sum plus Euler-Maclaurin tail; the returned error_bound is the
/// magnitude of the first omitted Bernoulli term, which rigorously bounds the
/// remainder because t -> (t+s)^-x is completely monotone. Guarantees
/// error_bound <= rel_tol * value or throws convergence_error.
series_value hurwitz_zeta(double x, double s, const eval_config& cfg = {});

/// zeta(x,b) - zeta(x,a+b) summed termwise:
///   sum_{k>=0} [(k+b)^-x - (k+a+b)^-x],  x >= 1, a > 0, b > 0.
///
/// Each term is formed with expm1/log1p so the result keeps full relative
/// precision even when the two zeta values would cancel catastrophically
/// (x near 1, or small a). Valid at x = 1, where the individual zetas
/// diverge but the difference converges. The result is strictly positive.
series_value hurwitz_zeta_diff(double x, double a, double b,
                               const eval_config& cfg = {});

/// Digamma psi(s) for s > 0, accurate to a few ULP (recurrence shift into
/// the asymptotic regime, then the Bernoulli expansion).
double digamma(double s);

/// Polygamma psi^{(m)}(s) = (-1)^{m+1} m! zeta(m+1, s) for m in [1, 64],
/// s > 0. Throws overflow_error when m! zeta(m+1,s) is not representable.
double polygamma(int m, double s, const eval_config& cfg = {});

/// ln Gamma(s) for s > 0 (Lanczos approximation, g = 607/128), relative
/// accuracy well below 1e-13.
double log_gamma(double s);

/// The Euler-Mascheroni constant.
double euler_gamma();

namespace detail {

/// Compensated (Kahan) accumulator; keeps round-off of long positive sums at
/// the few-ULP level.
struct kahan_accumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

/// ln(1 - e^{-x}) for x > 0 without cancellation.
double log1mexp(double x);

/// Exact-to-double factorials 0!..64!.
double factorial(int n);

void validate(const eval_config& cfg);

}  // namespace detail
}  // namespace zetabe
