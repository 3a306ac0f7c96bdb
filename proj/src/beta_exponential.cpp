// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#include "zetabe/beta_exponential.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace zetabe {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Continued fraction for the incomplete beta (modified Lentz). Converges for
// p < (a+1)/(a+b+2); callers switch to the symmetric form otherwise.
double beta_cont_fraction(double a, double b, double p) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * p / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const int m2 = 2 * i;
    double aa = i * (b - i) * p / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + i) * (qab + i) * p / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw convergence_error("incomplete beta: continued fraction did not converge");
}

// Regularized incomplete beta I_p(a,b) with the arguments of the front
// factor supplied in log form (the CDF knows ln p and ln(1-p) exactly).
double reg_inc_beta(double a, double b, double p, double q, double log_p,
                    double log_q) {
  if (p <= 0.0) return 0.0;
  if (q <= 0.0) return 1.0;
  const double log_front = a * log_p + b * log_q - log_beta(a, b);
  if (p < (a + 1.0) / (a + b + 2.0))
    return std::exp(log_front) * beta_cont_fraction(a, b, p) / a;
  return 1.0 - std::exp(log_front) * beta_cont_fraction(b, a, q) / b;
}

// ln I_p(a,b) for the direct branch only (p small); used when the linear
// value underflows.
double log_reg_inc_beta_lower(double a, double b, double p, double log_p,
                              double log_q) {
  const double log_front = a * log_p + b * log_q - log_beta(a, b);
  return log_front + std::log(beta_cont_fraction(a, b, p) / a);
}

// --- deterministic gamma sampling (Marsaglia-Tsang 2000) ------------------

// 53-bit uniform in [0,1).
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double uniform_open(std::mt19937_64& eng) {
  double u;
  do {
    u = uniform01(eng);
  } while (u == 0.0);
  return u;
}

// Standard normal via Marsaglia's polar method (one variate per call keeps
// the consumption of the engine stream simple and reproducible).
double standard_normal(std::mt19937_64& eng) {
  while (true) {
    const double v1 = 2.0 * uniform01(eng) - 1.0;
    const double v2 = 2.0 * uniform01(eng) - 1.0;
    const double s = v1 * v1 + v2 * v2;
    if (s > 0.0 && s < 1.0) return v1 * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double gamma_variate(std::mt19937_64& eng, double shape) {
  if (shape < 1.0) {
    const double g = gamma_variate(eng, shape + 1.0);
    return g * std::pow(uniform_open(eng), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double z;
    double v;
    do {
      z = standard_normal(eng);
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open(eng);
    if (u < 1.0 - 0.0331 * (z * z) * (z * z)) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

be_params::be_params(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw domain_error("be_params: requires a > 0");
  if (!(b > 0.0) || !std::isfinite(b))
    throw domain_error("be_params: requires b > 0");
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw domain_error("log_beta: requires a > 0 and b > 0");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_pdf(double x, const be_params& p) {
  if (!(x > 0.0)) return kNegInf;
  return (p.a - 1.0) * detail::log1mexp(x) - p.b * x - log_beta(p.a, p.b);
}

double pdf(double x, const be_params& p) {
  if (!(x > 0.0)) return 0.0;
  return std::exp(log_pdf(x, p));
}

double cdf(double x, const be_params& p) {
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double q = std::exp(-x);        // 1 - p, exact in relative terms
  const double v = -std::expm1(-x);     // p = 1 - e^-x
  return reg_inc_beta(p.a, p.b, v, q, detail::log1mexp(x), -x);
}

double survival(double x, const be_params& p) {
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  const double q = std::exp(-x);
  const double v = -std::expm1(-x);
  // 1 - I_p(a,b) = I_q(b,a), evaluated directly for tail accuracy.
  return reg_inc_beta(p.b, p.a, q, v, -x, detail::log1mexp(x));
}

double hazard(double x, const be_params& p) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw domain_error("hazard: requires finite x > 0");
  const double s = survival(x, p);
  if (s >= 1e-300) return pdf(x, p) / s;

  // Deep right tail: both pdf and survival underflow together; work in logs.
  // Here q = e^-x is far inside the direct branch of I_q(b,a).
  const double q = std::exp(-x);
  const double log_surv =
      log_reg_inc_beta_lower(p.b, p.a, q, -x, detail::log1mexp(x));
  const double result = std::exp(log_pdf(x, p) - log_surv);
  if (!std::isfinite(result))
    throw overflow_error("hazard: survival underflow not recoverable");
  return result;
}

double cgf(double t, const be_params& p) {
  if (!(t < p.b)) throw domain_error("cgf: requires t < b");
  if (!std::isfinite(t)) throw domain_error("cgf: requires finite t");
  return log_gamma(p.a + p.b) + log_gamma(p.b - t) - log_gamma(p.b) -
         log_gamma(p.a + p.b - t);
}

double cumulant(int n, const be_params& p) {
  if (n < 1 || n > 64) throw domain_error("cumulant: n must be in [1, 64]");
  double value;
  if (n == 1) {
    value = digamma(p.b + p.a) - digamma(p.b);
  } else {
    // (-1)^n (psi^{(n-1)}(b) - psi^{(n-1)}(b+a)); tight tolerance because the
    // two polygamma values cancel when a is small.
    eval_config tight;
    tight.rel_tol = 1e-15;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    value = sign * (polygamma(n - 1, p.b, tight) - polygamma(n - 1, p.b + p.a, tight));
  }
  if (!std::isfinite(value))
    throw overflow_error("cumulant: value not representable");
  return value;
}

double f_be(int n, const be_params& p) {
  const double kappa = cumulant(n, p);
  if (n == 1) return kappa;
  return std::exp((std::log(kappa) - std::log(detail::factorial(n - 1))) / n);
}

cumulant_table compute_cumulant_table(const be_params& p, int n_max) {
  if (n_max < 1 || n_max > 64)
    throw domain_error("compute_cumulant_table: n_max must be in [1, 64]");
  cumulant_table table{p, {}, {}};
  table.kappas.reserve(static_cast<std::size_t>(n_max));
  table.f_be.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double kappa = cumulant(n, p);
    table.kappas.push_back(kappa);
    table.f_be.push_back(
        n == 1 ? kappa
               : std::exp((std::log(kappa) - std::log(detail::factorial(n - 1))) / n));
  }
  return table;
}

dispersion dispersion_class(const be_params& p) {
  if (p.a == 1.0) return dispersion::equi;
  const double k1 = cumulant(1, p);
  const double k2 = cumulant(2, p);
  return std::sqrt(k2) > k1 ? dispersion::over : dispersion::under;
}

std::vector<double> sample(const be_params& p, std::uint64_t seed,
                           std::int64_t count) {
  if (count < 1) throw domain_error("sample: count must be >= 1");
  std::mt19937_64 eng(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  constexpr int kMaxRejects = 1'000'000;
  for (std::int64_t i = 0; i < count; ++i) {
    int tries = 0;
    while (true) {
      const double ga = gamma_variate(eng, p.a);
      const double gb = gamma_variate(eng, p.b);
      // X = -ln(1 - V) with V = ga/(ga+gb); log1p form keeps X > 0 exactly.
      const double x = std::log1p(ga / gb);
      if (std::isfinite(x) && x > 0.0) {
        out.push_back(x);
        break;
      }
      if (++tries >= kMaxRejects)
        throw convergence_error("sample: variate rejected too many times");
    }
  }
  return out;
}

double log_pdf_second_difference(double x, double h, const be_params& p) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw domain_error("log_pdf_second_difference: requires h > 0");
  if (!(x - h > 0.0))
    throw domain_error("log_pdf_second_difference: requires x - h > 0");
  return log_pdf(x + h, p) - 2.0 * log_pdf(x, p) + log_pdf(x - h, p);
}

double gamma_cumulant(int n, double a, double b) {
  if (n < 1) throw domain_error("gamma_cumulant: n must be >= 1");
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw domain_error("gamma_cumulant: requires a > 0 and b > 0");
  if (n > 65) throw overflow_error("gamma_cumulant: factorial overflow");
  const double value = a * std::pow(b, -static_cast<double>(n)) *
                       detail::factorial(n - 1);
  if (!std::isfinite(value))
    throw overflow_error("gamma_cumulant: value not representable");
  return value;
}

}  // namespace zetabe
