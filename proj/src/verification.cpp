// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#include "zetabe/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <random>

namespace zetabe::verify {
namespace {

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

const char* dir_name(direction d) {
  switch (d) {
    case direction::increasing: return "increasing";
    case direction::decreasing: return "decreasing";
    case direction::constant: return "constant";
  }
  return "?";
}

double uniform_open(std::mt19937_64& eng) {
  double u;
  do {
    u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  } while (u == 0.0);
  return u;
}

// Classify a value series by its consecutive differences at the given margin.
direction observe_direction(const std::vector<double>& values, double margin) {
  bool all_up = true;
  bool all_down = true;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double d = values[i + 1] - values[i];
    all_up = all_up && d > margin;
    all_down = all_down && d < -margin;
  }
  if (all_up) return direction::increasing;
  if (all_down) return direction::decreasing;
  return direction::constant;
}

}  // namespace

const std::vector<double>& standard_grid::a_values() {
  static const std::vector<double> v = {0.1, 0.25, 0.5, 0.75, 0.9,
                                        1.0, 1.5,  2.0, 5.0,  10.0};
  return v;
}

const std::vector<double>& standard_grid::b_values() {
  static const std::vector<double> v = {0.5, 1.0, 2.0, 10.0};
  return v;
}

std::vector<double> standard_grid::x_grid() {
  std::vector<double> v;
  v.reserve(191);
  for (int i = 0; i <= 190; ++i) v.push_back(1.0 + 0.1 * i);
  return v;
}

interval_value brute_force_zeta(double x, double s, std::int64_t n_terms) {
  if (!(x > 1.0) || !std::isfinite(x))
    throw domain_error("brute_force_zeta: requires x > 1");
  if (!(s > 0.0) || !std::isfinite(s))
    throw domain_error("brute_force_zeta: requires s > 0");
  if (n_terms < 1) throw domain_error("brute_force_zeta: requires n_terms >= 1");

  detail::kahan_accumulator acc;
  for (std::int64_t k = n_terms; k >= 0; --k)
    acc.add(std::pow(static_cast<double>(k) + s, -x));
  const double lo = acc.value();
  const double tail =
      std::pow(static_cast<double>(n_terms) + s, 1.0 - x) / (x - 1.0);
  return {lo, lo + tail};
}

monotonicity_report scan_f_monotonicity(double a, double b,
                                        const std::vector<double>& x_grid,
                                        double margin, double const_rel_tol) {
  if (x_grid.empty() || !std::is_sorted(x_grid.begin(), x_grid.end()) ||
      x_grid.front() < 1.0)
    throw domain_error("scan_f_monotonicity: x_grid must be ascending, all >= 1");

  monotonicity_report rep;
  rep.claimed = classify_direction(a);
  rep.grid.reserve(x_grid.size());
  std::vector<double> values;
  values.reserve(x_grid.size());
  try {
    for (double x : x_grid) {
      const double v = f({x, a, b});
      values.push_back(v);
      rep.grid.emplace_back(x, v);
    }
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.detail = fmt("evaluation failed: %s", e.what());
    return rep;
  }

  if (rep.claimed == direction::constant) {
    double worst = 0.0;
    double worst_x = x_grid.front();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double dev = std::abs(values[i] * b - 1.0);
      if (dev > worst) {
        worst = dev;
        worst_x = x_grid[i];
      }
    }
    rep.min_margin = worst;
    rep.pass = worst <= const_rel_tol;
    rep.observed = rep.pass ? direction::constant
                            : observe_direction(values, margin);
    if (!rep.pass)
      rep.detail = fmt("max relative deviation from 1/b is %.3e at x=%.2f",
                       worst, worst_x);
    return rep;
  }

  const double sign = rep.claimed == direction::increasing ? 1.0 : -1.0;
  double min_directed = std::numeric_limits<double>::infinity();
  double worst_x = x_grid.front();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double directed = sign * (values[i + 1] - values[i]);
    if (directed < min_directed) {
      min_directed = directed;
      worst_x = x_grid[i];
    }
  }
  rep.min_margin = min_directed;
  rep.observed = observe_direction(values, margin);
  rep.pass = rep.observed == rep.claimed && min_directed > margin;
  if (!rep.pass)
    rep.detail = fmt("claimed %s, observed %s; smallest directed step %.3e at x=%.2f",
                     dir_name(rep.claimed), dir_name(rep.observed),
                     min_directed, worst_x);
  return rep;
}

monotonicity_report check_chain(double a, double b, int n_max,
                                double const_rel_tol) {
  if (n_max < 0 || n_max > 20)
    throw domain_error("check_chain: n_max must be in [0, 20]");

  monotonicity_report rep;
  rep.claimed = classify_direction(a);
  std::vector<double> chain;
  try {
    chain = polygamma_chain(n_max, a, b);
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.detail = fmt("evaluation failed: %s", e.what());
    return rep;
  }
  for (std::size_t i = 0; i < chain.size(); ++i)
    rep.grid.emplace_back(static_cast<double>(i), chain[i]);

  const double inv_b = 1.0 / b;
  if (rep.claimed == direction::constant) {
    double worst = 0.0;
    for (double c : chain) worst = std::max(worst, std::abs(c * b - 1.0));
    rep.min_margin = worst;
    rep.pass = worst <= const_rel_tol;
    rep.observed = rep.pass ? direction::constant : observe_direction(chain, 0.0);
    if (!rep.pass)
      rep.detail = fmt("max relative deviation from 1/b is %.3e", worst);
    return rep;
  }

  // Strict ordering plus the 1/b bound on the far side of the chain.
  const double sign = rep.claimed == direction::increasing ? 1.0 : -1.0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    min_margin = std::min(min_margin, sign * (chain[i + 1] - chain[i]));
  for (double c : chain)
    min_margin = std::min(min_margin, sign * (inv_b - c));
  rep.min_margin = min_margin;
  rep.observed = observe_direction(chain, 0.0);
  rep.pass = min_margin > 0.0 && rep.observed == rep.claimed;
  if (!rep.pass)
    rep.detail = fmt("ordering/bound violated: smallest directed gap %.3e",
                     min_margin);
  return rep;
}

std::vector<check_record> check_lemma_cases(int trials, int max_len,
                                            std::uint64_t seed) {
  if (trials < 1) throw domain_error("check_lemma_cases: trials must be >= 1");
  if (max_len < 1) throw domain_error("check_lemma_cases: max_len must be >= 1");

  std::mt19937_64 eng(seed);
  std::vector<check_record> records;

  // Equal-sequences control: u must vanish identically.
  {
    sequence_pair pair;
    pair.s_seq = {0.5, 0.25, 0.125};
    pair.r_seq = pair.s_seq;
    pair.case_label = lemma_case::case1;
    const auto u = lemma_sequence_u(pair);
    double worst = 0.0;
    for (double v : u) worst = std::max(worst, std::abs(v));
    records.push_back({"lemma.equal_control", "s == r", worst <= 1e-15, worst,
                       worst <= 1e-15 ? "" : "u not identically zero"});
  }

  for (int which = 1; which <= 2; ++which) {
    int violations = 0;
    double worst_sign = 0.0;  // sign excursions beyond round-off slack
    std::string detail;
    for (int t = 0; t < trials; ++t) {
      const int len = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_len));
      sequence_pair pair;
      pair.s_seq.resize(static_cast<std::size_t>(len));
      pair.r_seq.resize(static_cast<std::size_t>(len));
      if (which == 1) {
        pair.case_label = lemma_case::case1;
        for (int i = 0; i < len; ++i) {
          const double s = uniform_open(eng);
          pair.s_seq[static_cast<std::size_t>(i)] = s;
          pair.r_seq[static_cast<std::size_t>(i)] = s * uniform_open(eng);
        }
      } else {
        // Case 2 needs r_1 > s_1 > r_2 > s_2 > ...: draw 2*len uniforms and
        // assign them in decreasing order.
        pair.case_label = lemma_case::case2;
        std::vector<double> draws(static_cast<std::size_t>(2 * len));
        for (double& d : draws) d = uniform_open(eng);
        std::sort(draws.begin(), draws.end(), std::greater<>());
        for (int i = 0; i < len; ++i) {
          pair.r_seq[static_cast<std::size_t>(i)] = draws[static_cast<std::size_t>(2 * i)];
          pair.s_seq[static_cast<std::size_t>(i)] = draws[static_cast<std::size_t>(2 * i + 1)];
        }
      }

      const auto u = lemma_sequence_u(pair);
      const double dir = which == 1 ? 1.0 : -1.0;
      for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        if (dir * (u[k + 1] - u[k]) < 0.0) {
          ++violations;
          if (detail.empty())
            detail = fmt("trial %d: u[%zu]=%.17g -> u[%zu]=%.17g", t, k, u[k],
                         k + 1, u[k + 1]);
        }
      }
      for (double v : u) worst_sign = std::max(worst_sign, -dir * v);
    }
    const bool sign_ok = worst_sign <= 5e-14;
    check_record rec;
    rec.check = which == 1 ? "lemma.case1" : "lemma.case2";
    rec.params = fmt("trials=%d max_len=%d seed=%llu", trials, max_len,
                     static_cast<unsigned long long>(seed));
    rec.pass = violations == 0 && sign_ok;
    rec.margin = static_cast<double>(violations);
    if (!rec.pass && detail.empty())
      detail = fmt("sign excursion %.3e beyond slack", worst_sign);
    rec.detail = rec.pass ? "" : detail;
    records.push_back(rec);
  }
  return records;
}

k_statistics compute_k_statistics(const std::vector<double>& sample) {
  const double n = static_cast<double>(sample.size());
  if (sample.size() < 3)
    throw domain_error("compute_k_statistics: need at least 3 values");

  detail::kahan_accumulator sum;
  for (double v : sample) sum.add(v);
  const double mean = sum.value() / n;

  detail::kahan_accumulator m2_acc;
  detail::kahan_accumulator m3_acc;
  for (double v : sample) {
    const double d = v - mean;
    m2_acc.add(d * d);
    m3_acc.add(d * d * d);
  }
  const double m2 = m2_acc.value() / n;
  const double m3 = m3_acc.value() / n;

  k_statistics k;
  k.k1 = mean;
  k.k2 = n / (n - 1.0) * m2;
  k.k3 = n * n / ((n - 1.0) * (n - 2.0)) * m3;
  return k;
}

check_record check_moments(const be_params& p, std::int64_t n_samples,
                           std::uint64_t seed) {
  if (n_samples < 10'000)
    throw domain_error("check_moments: needs n_samples >= 10^4");

  const auto xs = sample(p, seed, n_samples);
  const k_statistics k = compute_k_statistics(xs);

  const double n = static_cast<double>(n_samples);
  const double kap[7] = {0.0,
                         cumulant(1, p), cumulant(2, p), cumulant(3, p),
                         cumulant(4, p), cumulant(5, p), cumulant(6, p)};
  // Sampling variances of k-statistics in terms of the true cumulants.
  const double se1 = std::sqrt(kap[2] / n);
  const double se2 = std::sqrt(kap[4] / n + 2.0 * kap[2] * kap[2] / (n - 1.0));
  const double se3 =
      std::sqrt(kap[6] / n +
                9.0 * (kap[2] * kap[4] + kap[3] * kap[3]) / (n - 1.0) +
                6.0 * n * kap[2] * kap[2] * kap[2] / ((n - 1.0) * (n - 2.0)));

  const double dev1 = std::abs(k.k1 - kap[1]) / se1;
  const double dev2 = std::abs(k.k2 - kap[2]) / se2;
  const double dev3 = std::abs(k.k3 - kap[3]) / se3;
  const double worst = std::max({dev1, dev2, dev3});

  check_record rec;
  rec.check = "distribution.moments";
  rec.params = fmt("a=%g b=%g n=%lld seed=%llu", p.a, p.b,
                   static_cast<long long>(n_samples),
                   static_cast<unsigned long long>(seed));
  rec.pass = worst <= 5.0;
  rec.margin = 5.0 - worst;  // standard errors to spare
  rec.detail = fmt("k1=%.8g (%.2f se), k2=%.8g (%.2f se), k3=%.8g (%.2f se)",
                   k.k1, dev1, k.k2, dev2, k.k3, dev3);
  return rec;
}

check_record check_ks_exponential(double b, std::int64_t n_samples,
                                  std::uint64_t seed) {
  auto xs = sample(be_params(1.0, b), seed, n_samples);
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(n_samples);
  double d_stat = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double cdf_val = -std::expm1(-b * xs[i]);
    const double up = (static_cast<double>(i) + 1.0) / n - cdf_val;
    const double down = cdf_val - static_cast<double>(i) / n;
    d_stat = std::max({d_stat, up, down});
  }
  // Asymptotic 1% critical value: sqrt(ln(2/0.01)/2)/sqrt(n).
  const double crit = 1.6276236307187293 / std::sqrt(n);

  check_record rec;
  rec.check = "distribution.ks_exponential";
  rec.params = fmt("a=1 b=%g n=%lld seed=%llu", b,
                   static_cast<long long>(n_samples),
                   static_cast<unsigned long long>(seed));
  rec.pass = d_stat < crit;
  rec.margin = crit - d_stat;
  rec.detail = fmt("D=%.6g, 1%% critical=%.6g", d_stat, crit);
  return rec;
}

check_record check_shape_and_hazard(const be_params& p,
                                    const std::vector<double>& x_grid,
                                    double h) {
  if (x_grid.empty() || !(x_grid.front() > h))
    throw domain_error("check_shape_and_hazard: grid must lie inside (h, inf)");

  check_record rec;
  rec.check = "distribution.shape_hazard";
  rec.params = fmt("a=%g b=%g h=%g", p.a, p.b, h);

  const double dir = p.a == 1.0 ? 0.0 : (p.a < 1.0 ? 1.0 : -1.0);
  double min_margin = std::numeric_limits<double>::infinity();
  std::string detail;

  std::vector<double> hz(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    const double snd = log_pdf_second_difference(x, h, p);
    hz[i] = hazard(x, p);
    if (p.a == 1.0) {
      // Exponential boundary: flat log-density curvature and constant hazard.
      if (std::abs(snd) > 1e-9 && detail.empty())
        detail = fmt("|second difference| %.3e > 1e-9 at x=%.3f", std::abs(snd), x);
      min_margin = std::min(min_margin, 1e-9 - std::abs(snd));
      if (std::abs(hz[i] - p.b) > 1e-10 && detail.empty())
        detail = fmt("|hazard - b| %.3e > 1e-10 at x=%.3f", std::abs(hz[i] - p.b), x);
      min_margin = std::min(min_margin, 1e-10 - std::abs(hz[i] - p.b));
    } else {
      // Log-convex (a<1) means positive curvature and decreasing hazard.
      if (dir * snd <= 0.0 && detail.empty())
        detail = fmt("second difference sign wrong at x=%.3f (%.3e)", x, snd);
      min_margin = std::min(min_margin, dir * snd);
    }
  }
  if (p.a != 1.0) {
    for (std::size_t i = 0; i + 1 < hz.size(); ++i) {
      const double d = hz[i + 1] - hz[i];  // decreasing hazard for a < 1
      if (-dir * d < 0.0 && detail.empty())
        detail = fmt("hazard difference sign wrong at x=%.3f (%.3e)",
                     x_grid[i], d);
      min_margin = std::min(min_margin, -dir * d);
    }
  }

  rec.pass = detail.empty();
  rec.margin = min_margin;
  rec.detail = detail;
  return rec;
}

check_record check_normalization(const be_params& p) {
  const double dev = std::abs(pdf_normalization(p) - 1.0);
  check_record rec;
  rec.check = "distribution.pdf_normalization";
  rec.params = fmt("a=%g b=%g", p.a, p.b);
  rec.pass = dev <= 1e-9;
  rec.margin = 1e-9 - dev;
  rec.detail = fmt("|integral - 1| = %.3e", dev);
  return rec;
}

check_record check_cdf_pdf_consistency(const be_params& p) {
  double worst = 0.0;
  double worst_x = 0.0;
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    // The step shrinks with x so the x^(a-1) factor's curvature near 0 stays
    // inside the truncation budget.
    const double h = std::min(1e-4, 1e-5 * x);
    // Past the median the CDF saturates toward 1 and its finite difference
    // loses all precision; differentiate the survival complement instead.
    double deriv;
    if (cdf(x, p) <= 0.5)
      deriv = (cdf(x + h, p) - cdf(x - h, p)) / (2.0 * h);
    else
      deriv = (survival(x - h, p) - survival(x + h, p)) / (2.0 * h);
    const double rel = std::abs(deriv - pdf(x, p)) / pdf(x, p);
    if (rel > worst) {
      worst = rel;
      worst_x = x;
    }
  }
  check_record rec;
  rec.check = "distribution.cdf_pdf_consistency";
  rec.params = fmt("a=%g b=%g", p.a, p.b);
  rec.pass = worst <= 1e-6;
  rec.margin = 1e-6 - worst;
  rec.detail = fmt("max rel deviation %.3e at x=%g", worst, worst_x);
  return rec;
}

check_record check_cgf_cumulants(const be_params& p) {
  const auto K = [&p](double t) { return cgf(t, p); };
  // K's derivatives grow like b^-n toward the t = b singularity; steps
  // proportional to b balance that truncation against the ~1e-15 absolute
  // noise of each log-gamma evaluation.
  const double h1 = 1e-6;
  const double h2 = 4e-3 * p.b;
  const double h3 = 2e-3 * p.b;
  const double fd[3] = {
      (K(h1) - K(-h1)) / (2.0 * h1),
      (K(h2) + K(-h2)) / (h2 * h2),  // K(0) = 0
      (K(2 * h3) - 2.0 * K(h3) + 2.0 * K(-h3) - K(-2 * h3)) /
          (2.0 * h3 * h3 * h3),
  };
  double worst = 0.0;
  int worst_n = 1;
  for (int n = 1; n <= 3; ++n) {
    const double rel = std::abs(fd[n - 1] - cumulant(n, p)) / cumulant(n, p);
    if (rel > worst) {
      worst = rel;
      worst_n = n;
    }
  }
  check_record rec;
  rec.check = "distribution.cgf_cumulants";
  rec.params = fmt("a=%g b=%g", p.a, p.b);
  rec.pass = worst <= 1e-4;
  rec.margin = 1e-4 - worst;
  rec.detail = fmt("max rel deviation %.3e at kappa_%d", worst, worst_n);
  return rec;
}

check_record check_dispersion(const be_params& p) {
  const auto cls = dispersion_class(p);
  const auto expected = p.a < 1.0   ? dispersion::over
                        : p.a > 1.0 ? dispersion::under
                                    : dispersion::equi;
  const double gap = std::sqrt(cumulant(2, p)) - cumulant(1, p);
  check_record rec;
  rec.check = "distribution.dispersion";
  rec.params = fmt("a=%g b=%g", p.a, p.b);
  rec.pass = cls == expected;
  rec.margin = p.a == 1.0 ? -std::abs(gap) : std::abs(gap);
  rec.detail = fmt("sqrt(kappa_2) - kappa_1 = %.3e", gap);
  return rec;
}

check_record check_fbe_cross_identity(const be_params& p, int n_max) {
  double worst = 0.0;
  int worst_n = 1;
  for (int n = 1; n <= n_max; ++n) {
    const double lhs = f_be(n, p);
    const double rhs = f({static_cast<double>(n), p.a, p.b});
    const double rel = std::abs(lhs - rhs) / rhs;
    if (rel > worst) {
      worst = rel;
      worst_n = n;
    }
  }
  check_record rec;
  rec.check = "distribution.fbe_cross_identity";
  rec.params = fmt("a=%g b=%g", p.a, p.b);
  rec.pass = worst <= 1e-11;
  rec.margin = 1e-11 - worst;
  rec.detail = fmt("max rel deviation %.3e at n=%d", worst, worst_n);
  return rec;
}

check_record check_fbe_monotone_in_n(const be_params& p, int n_max) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) values.push_back(f_be(n, p));

  check_record rec;
  rec.check = "distribution.fbe_monotone_in_n";
  rec.params = fmt("a=%g b=%g", p.a, p.b);
  if (p.a == 1.0) {
    double dev = 0.0;
    for (double v : values) dev = std::max(dev, std::abs(v * p.b - 1.0));
    rec.pass = dev <= 1e-12;
    rec.margin = dev;
    rec.detail = fmt("max relative deviation from 1/b is %.3e", dev);
  } else {
    const double sign = p.a < 1.0 ? 1.0 : -1.0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      min_margin = std::min(min_margin, sign * (values[i + 1] - values[i]));
    rec.pass = min_margin > 1e-10;
    rec.margin = min_margin;
    rec.detail = fmt("smallest directed step %.3e", min_margin);
  }
  return rec;
}

double integrate01(const std::function<double(double, double)>& f,
                   double rel_tol, int max_level) {
  // tanh-sinh nodes: v = (1 + tanh(z))/2 with z = (pi/2) sinh(t); both v and
  // 1-v are formed as logistic expressions so endpoint distances stay exact.
  constexpr double kHalfPi = 1.5707963267948966;
  constexpr double kZMax = 250.0;  // beyond this the weights are < 1e-215

  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int level = 3; level <= max_level; ++level) {
    const double step = std::ldexp(1.0, -level);
    detail::kahan_accumulator acc;
    for (std::int64_t j = 0;; ++j) {
      const double t = static_cast<double>(j) * step;
      const double z = kHalfPi * std::sinh(t);
      if (z > kZMax) break;
      const double cosh_z = std::cosh(z);
      const double weight = 0.5 * step * kHalfPi * std::cosh(t) / (cosh_z * cosh_z);
      const double v_hi = 1.0 / (1.0 + std::exp(-2.0 * z));  // node in (1/2, 1)
      const double v_lo = 1.0 / (1.0 + std::exp(2.0 * z));   // mirror in (0, 1/2)
      if (v_lo <= 0.0) break;
      if (j == 0) {
        acc.add(weight * f(0.5, 0.5));
      } else {
        acc.add(weight * f(v_hi, v_lo));
        acc.add(weight * f(v_lo, v_hi));
      }
    }
    const double current = acc.value();
    if (level > 3 && std::isfinite(current) &&
        std::abs(current - previous) <= rel_tol * std::abs(current))
      return current;
    previous = current;
  }
  throw convergence_error("integrate01: tanh-sinh refinement did not settle");
}

double pdf_normalization(const be_params& p, double rel_tol) {
  // (0,1) directly; (1,inf) via x = 1 - ln w, dx = dw/w. The tail integrand
  // is assembled in log space so pdf(x)/w cannot overflow for small b.
  const double head = integrate01(
      [&p](double v, double) { return pdf(v, p); }, rel_tol);
  const double tail = integrate01(
      [&p](double w, double) {
        const double log_w = std::log(w);
        return std::exp(log_pdf(1.0 - log_w, p) - log_w);
      },
      rel_tol);
  return head + tail;
}

}  // namespace zetabe::verify
