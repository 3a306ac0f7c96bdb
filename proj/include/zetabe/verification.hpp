// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zetabe/beta_exponential.hpp"
#include "zetabe/zeta_monotonicity.hpp"

namespace zetabe::verify {

/// A rigorous enclosure: the exact mathematical value lies in [lo, hi] by
/// construction (positive terms below, integral tail bound above).
struct interval_value {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
  double width() const { return hi - lo; }
};

/// Verdict of one monotonicity scan.
///
/// For monotone claims min_margin is the smallest directed consecutive
/// difference (positive when the claim direction holds); the scan passes when
/// it exceeds `margin`. For the constant claim min_margin is the largest
/// relative deviation from the constant and the scan passes when it is within
/// `const_rel_tol`.
struct monotonicity_report {
  direction claimed = direction::constant;
  direction observed = direction::constant;
  std::vector<std::pair<double, double>> grid;  // (x, value)
  double min_margin = 0.0;
  bool pass = false;
  std::string detail;
};

/// Flat, JSON-friendly record of one executed check.
struct check_record {
  std::string check;
  std::string params;
  bool pass = false;
  double margin = 0.0;
  std::string detail;
};

/// The fixed parameter grid every full verification run scans.
struct standard_grid {
  static const std::vector<double>& a_values();  // ten values spanning a<1, a=1, a>1
  static const std::vector<double>& b_values();  // {0.5, 1, 2, 10}
  static std::vector<double> x_grid();           // 1.0 .. 20.0 step 0.1
  static constexpr double monotonicity_margin = 1e-10;
  static constexpr double constant_rel_tol = 1e-12;
};

/// Brute-force partial sum of zeta(x,s) over k = 0..n_terms with the integral
/// tail bound (n_terms+s)^{1-x}/(x-1) on top; [lo,hi] encloses the true value
/// because the terms are positive and decreasing.
interval_value brute_force_zeta(double x, double s, std::int64_t n_terms);

/// Scan f(.,a,b) over x_grid and compare against classify_direction(a).
monotonicity_report scan_f_monotonicity(double a, double b,
                                        const std::vector<double>& x_grid,
                                        double margin,
                                        double const_rel_tol =
                                            standard_grid::constant_rel_tol);

/// Check strict ordering of the polygamma chain for n = 0..n_max plus the
/// 1/b end bound (elements below 1/b for a < 1, above for a > 1, equal for
/// a = 1 within const_rel_tol).
monotonicity_report check_chain(double a, double b, int n_max,
                                double const_rel_tol =
                                    standard_grid::constant_rel_tol);

/// Randomized two-sequence lemma check: `trials` case-1 pairs (r_n drawn
/// below s_n) and `trials` case-2 pairs (a decreasing interleaved chain),
/// plus an equal-sequences control that must give u identically zero.
/// Deterministic under `seed`.
std::vector<check_record> check_lemma_cases(int trials, int max_len,
                                            std::uint64_t seed);

/// Draw n_samples from BE(a,b) and compare k-statistics k_1..k_3 against the
/// analytic cumulants within 5 standard errors.
check_record check_moments(const be_params& p, std::int64_t n_samples,
                           std::uint64_t seed);

/// Kolmogorov-Smirnov distance of a BE(1,b) sample against the exponential
/// CDF; passes below the asymptotic 1% critical value.
check_record check_ks_exponential(double b, std::int64_t n_samples,
                                  std::uint64_t seed);

/// Sign checks of the log-density second difference and of hazard
/// differences across x_grid, against the a-vs-1 dichotomy.
check_record check_shape_and_hazard(const be_params& p,
                                    const std::vector<double>& x_grid,
                                    double h);

/// Quadrature normalization of the density: |integral - 1| <= 1e-9.
check_record check_normalization(const be_params& p);

/// Central difference of the CDF (of the survival function past the median,
/// where the CDF saturates) against the density, within 1e-6 relative at
/// x in {0.1, 0.5, 1, 2, 5}.
check_record check_cdf_pdf_consistency(const be_params& p);

/// Central differences of the CGF at 0 against kappa_1..kappa_3 within 1e-4
/// relative. Steps scale with b, the distance to the CGF singularity.
check_record check_cgf_cumulants(const be_params& p);

/// Dispersion class against the a-vs-1 rule.
check_record check_dispersion(const be_params& p);

/// |f_BE(n,a,b) - f(n,a,b)| <= 1e-11 * f(n,a,b) for n = 1..n_max.
check_record check_fbe_cross_identity(const be_params& p, int n_max = 10);

/// f_BE(n) strictly monotone in n in the direction set by a (margin 1e-10),
/// or constant 1/b within 1e-12 relative when a = 1; n = 1..n_max.
check_record check_fbe_monotone_in_n(const be_params& p, int n_max = 10);

/// Adaptive tanh-sinh quadrature over (0,1). The integrand receives both v
/// and 1-v at full precision so endpoint-singular factors can be formed
/// accurately. Doubles the node density until two consecutive levels agree
/// within rel_tol (or max_level is hit, then convergence_error).
double integrate01(const std::function<double(double, double)>& f,
                   double rel_tol, int max_level = 12);

/// Normalization of the BE(a,b) density by quadrature on (0,1) and
/// (1,infinity); returns the integral of pdf over (0,inf).
double pdf_normalization(const be_params& p, double rel_tol = 1e-11);

/// Unbiased k-statistics k_1, k_2, k_3 of a sample.
struct k_statistics {
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
};
k_statistics compute_k_statistics(const std::vector<double>& sample);

}  // namespace zetabe::verify
