// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "zetabe/special_functions.hpp"

namespace zetabe {

/// Parameters of the beta-exponential law BE(a,b): X = -ln(1-V) with
/// V ~ Beta(a,b). a is the beta shape, b doubles as the exponential rate in
/// the a = 1 special case.
struct be_params {
  double a = 1.0;
  double b = 1.0;

  be_params(double a_, double b_);
};

/// Over/under/equi-dispersion relative to the exponential boundary a = 1.
enum class dispersion { over, under, equi };

/// kappa_1..kappa_n and f_BE(1..n) for one parameter pair.
struct cumulant_table {
  be_params params;
  std::vector<double> kappas;  // kappas[k-1] = kappa_k
  std::vector<double> f_be;    // f_be[k-1]   = (kappa_k / (k-1)!)^(1/k)
};

/// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b).
double log_beta(double a, double b);

/// Density g(x;a,b) = (1-e^-x)^(a-1) e^(-bx) / B(a,b) on (0,inf); 0 for x <= 0.
double pdf(double x, const be_params& p);

/// ln g(x;a,b); -inf for x <= 0. The (1-e^-x) factor goes through a
/// cancellation-safe log, which matters for a < 1 near 0.
double log_pdf(double x, const be_params& p);

/// CDF F(x) = I_{1-e^-x}(a,b) (regularized incomplete beta).
double cdf(double x, const be_params& p);

/// Survival 1 - F(x), computed directly as I_{e^-x}(b,a) so the right tail
/// keeps full relative accuracy (the hazard denominator needs it).
double survival(double x, const be_params& p);

/// Hazard g(x)/(1-F(x)) for x > 0; falls back to log space when the survival
/// underflows the normal double range.
double hazard(double x, const be_params& p);

/// Cumulant generating function
///   K(t) = lnG(a+b) + lnG(b-t) - lnG(b) - lnG(a+b-t),  t < b.
double cgf(double t, const be_params& p);

/// kappa_n = (-1)^n (psi^{(n-1)}(b) - psi^{(n-1)}(b+a)), n in [1, 64];
/// always positive.
double cumulant(int n, const be_params& p);

/// f_BE(n,a,b) = (kappa_n / (n-1)!)^(1/n); equals the zeta-route f(n,a,b).
double f_be(int n, const be_params& p);

/// kappa_1..kappa_n and the derived f_BE values in one table.
cumulant_table compute_cumulant_table(const be_params& p, int n_max);

/// Dispersion class: equi iff a == 1 exactly; otherwise the sign of
/// sqrt(kappa_2) - kappa_1 (which matches the a-vs-1 rule).
dispersion dispersion_class(const be_params& p);

/// Deterministic sampler: V ~ Beta(a,b) drawn as G_a/(G_a+G_b) from two
/// gamma variates (Marsaglia-Tsang), X = -ln(1-V) = log1p(G_a/G_b) > 0.
/// Uniform deviates come from a std::mt19937_64 seeded with `seed`, so
/// identical (seed, count) give bit-identical output on any platform.
std::vector<double> sample(const be_params& p, std::uint64_t seed,
                           std::int64_t count);

/// Second central difference of ln g at x with step h (x - h > 0 required).
/// Positive values certify local log-convexity, negative log-concavity.
double log_pdf_second_difference(double x, double h, const be_params& p);

/// n-th cumulant of the gamma(a,b) law: a b^-n (n-1)!.
double gamma_cumulant(int n, double a, double b);

}  // namespace zetabe
