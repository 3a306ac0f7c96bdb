// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#include "zetabe/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace zetabe {
namespace {

// B_{2j}/(2j)! for j = 1..32. The Euler-Maclaurin correction for
// sum f(k) uses B_{2j}/(2j)! * f^{(2j-1)}; storing the ratio keeps every
// coefficient O(1) or smaller, so no intermediate overflow.
constexpr std::array<double, 32> kB2jOver2jFact = {
    0.083333333333333333,    -0.0013888888888888889,  3.3068783068783069e-5,
    -8.2671957671957672e-7,  2.0876756987868099e-8,   -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23, 2.2679524523376831e-24,
    -5.7447906688722024e-26, 1.4551724756148649e-27,  -3.6859949406653102e-29,
    9.3367342570950447e-31,  -2.3650224157006299e-32, 5.9906717624821343e-34,
    -1.5174548844682903e-35, 3.8437581254541882e-37,  -9.7363530726466910e-39,
    2.4662470442006810e-40,  -6.2470767418207437e-42, 1.5824030244644914e-43,
    -4.0082736859489360e-45, 1.0153075855569556e-46,  -2.5718041582418717e-48,
    6.5144560352338149e-50,  -1.6501309906896525e-51,
};

// B_{2j}/(2j) for j = 1..8 (digamma asymptotic series).
constexpr std::array<double, 8> kB2jOver2j = {
    0.083333333333333333,  -0.0083333333333333333, 0.0039682539682539683,
    -0.0041666666666666667, 0.0075757575757575758, -0.021092796092796093,
    0.083333333333333333,  -0.44325980392156863,
};

constexpr std::array<double, 65> kFactorial = {
    1.0000000000000000,      1.0000000000000000,      2.0000000000000000,
    6.0000000000000000,      24.000000000000000,      120.00000000000000,
    720.00000000000000,      5040.0000000000000,      40320.000000000000,
    362880.00000000000,      3628800.0000000000,      39916800.000000000,
    479001600.00000000,      6227020800.0000000,      87178291200.000000,
    1307674368000.0000,      20922789888000.000,      355687428096000.00,
    6402373705728000.0,      1.2164510040883200e+17,  2.4329020081766400e+18,
    5.1090942171709440e+19,  1.1240007277776077e+21,  2.5852016738884977e+22,
    6.2044840173323944e+23,  1.5511210043330986e+25,  4.0329146112660564e+26,
    1.0888869450418352e+28,  3.0488834461171386e+29,  8.8417619937397020e+30,
    2.6525285981219106e+32,  8.2228386541779228e+33,  2.6313083693369353e+35,
    8.6833176188118865e+36,  2.9523279903960414e+38,  1.0333147966386145e+40,
    3.7199332678990122e+41,  1.3763753091226345e+43,  5.2302261746660111e+44,
    2.0397882081197443e+46,  8.1591528324789773e+47,  3.3452526613163807e+49,
    1.4050061177528799e+51,  6.0415263063373836e+52,  2.6582715747884488e+54,
    1.1962222086548019e+56,  5.5026221598120889e+57,  2.5862324151116818e+59,
    1.2413915592536073e+61,  6.0828186403426756e+62,  3.0414093201713378e+64,
    1.5511187532873823e+66,  8.0658175170943879e+67,  4.2748832840600256e+69,
    2.3084369733924138e+71,  1.2696403353658276e+73,  7.1099858780486345e+74,
    4.0526919504877217e+76,  2.3505613312828786e+78,  1.3868311854568984e+80,
    8.3209871127413901e+81,  5.0758021387722480e+83,  3.1469973260387938e+85,
    1.9826083154044401e+87,  1.2688693218588416e+89,
};

constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kLn2 = 0.69314718055994531;
constexpr double kHalfLn2Pi = 0.91893853320467274;

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

// Initial Euler-Maclaurin split point: keep the asymptotic correction in its
// valid regime (k + s >= 10 and N >= 10 + x).
std::int64_t em_start_terms(double x, double s) {
  double n = std::ceil(10.0 + x);
  if (s < 10.0) n = std::max(n, std::ceil(10.0 - s));
  return std::max<std::int64_t>(16, static_cast<std::int64_t>(n));
}

}  // namespace

namespace detail {

double log1mexp(double x) {
  // Branch at ln 2 to avoid cancellation on either side.
  if (x > kLn2) return std::log1p(-std::exp(-x));
  return std::log(-std::expm1(-x));
}

double factorial(int n) { return kFactorial.at(static_cast<std::size_t>(n)); }

void validate(const eval_config& cfg) {
  if (!(cfg.rel_tol > 0.0) || cfg.rel_tol > 1e-6)
    throw domain_error("eval_config.rel_tol must be in (0, 1e-6]");
  if (cfg.max_terms < 1)
    throw domain_error("eval_config.max_terms must be >= 1");
  if (cfg.em_bernoulli_terms < 2 || cfg.em_bernoulli_terms > 30)
    throw domain_error("eval_config.em_bernoulli_terms must be in [2, 30]");
}

}  // namespace detail

series_value hurwitz_zeta(double x, double s, const eval_config& cfg) {
  detail::validate(cfg);
  if (!(x > 1.0) || !std::isfinite(x))
    throw domain_error("hurwitz_zeta: requires x > 1");
  if (!finite_positive(s)) throw domain_error("hurwitz_zeta: requires s > 0");

  const int m = cfg.em_bernoulli_terms;
  std::int64_t n = em_start_terms(x, s);
  while (true) {
    if (n > cfg.max_terms)
      throw convergence_error("hurwitz_zeta: rel_tol not reached within max_terms");

    detail::kahan_accumulator head;
    for (std::int64_t k = n - 1; k >= 0; --k)  // small terms first
      head.add(std::pow(static_cast<double>(k) + s, -x));

    const double u = static_cast<double>(n) + s;
    double tail = std::pow(u, 1.0 - x) / (x - 1.0);  // integral part
    tail += 0.5 * std::pow(u, -x);

    // Bernoulli corrections: B_{2j}/(2j)! * (x)_{2j-1} * u^{-x-2j+1}.
    const double inv_u2 = 1.0 / (u * u);
    double q = std::pow(u, -x - 1.0);
    double rising = x;  // (x)_1
    double bound = 0.0;
    for (int j = 1; j <= m; ++j) {
      tail += kB2jOver2jFact[static_cast<std::size_t>(j - 1)] * rising * q;
      rising *= (x + 2.0 * j - 1.0) * (x + 2.0 * j);
      q *= inv_u2;
      if (j == m)
        bound = std::abs(kB2jOver2jFact[static_cast<std::size_t>(j)] * rising * q);
    }

    const double value = head.value() + tail;
    if (std::isfinite(value) && bound <= cfg.rel_tol * std::abs(value))
      return {value, bound, n};
    if (!std::isfinite(value))
      throw overflow_error("hurwitz_zeta: value not representable");
    n *= 2;
  }
}

series_value hurwitz_zeta_diff(double x, double a, double b,
                               const eval_config& cfg) {
  detail::validate(cfg);
  if (!(x >= 1.0) || !std::isfinite(x))
    throw domain_error("hurwitz_zeta_diff: requires x >= 1");
  if (!finite_positive(a)) throw domain_error("hurwitz_zeta_diff: requires a > 0");
  if (!finite_positive(b)) throw domain_error("hurwitz_zeta_diff: requires b > 0");

  const int m = cfg.em_bernoulli_terms;
  std::int64_t n = em_start_terms(x, b);
  while (true) {
    if (n > cfg.max_terms)
      throw convergence_error(
          "hurwitz_zeta_diff: rel_tol not reached within max_terms");

    // Termwise head: (k+b)^-x * (1 - ((k+b)/(k+a+b))^x), each term formed to
    // full relative precision via expm1/log1p.
    detail::kahan_accumulator head;
    for (std::int64_t k = n - 1; k >= 0; --k) {
      const double base = static_cast<double>(k) + b;
      const double term =
          std::pow(base, -x) * (-std::expm1(-x * std::log1p(a / base)));
      head.add(term);
    }

    const double u = static_cast<double>(n) + b;
    const double ell = std::log1p(a / u);

    // Integral part: [u^{1-x} - (u+a)^{1-x}]/(x-1), written so that x -> 1
    // is a smooth limit (value ell).
    const double one_minus_x = 1.0 - x;
    const double integral_factor =
        (x == 1.0) ? ell : -std::expm1(one_minus_x * ell) / (x - 1.0);
    double tail = std::pow(u, one_minus_x) * integral_factor;
    tail += 0.5 * std::pow(u, -x) * (-std::expm1(-x * ell));

    const double inv_u2 = 1.0 / (u * u);
    double q = std::pow(u, -x - 1.0);
    double rising = x;
    double bound = 0.0;
    for (int j = 1; j <= m; ++j) {
      const double bracket = q * (-std::expm1(-(x + 2.0 * j - 1.0) * ell));
      tail += kB2jOver2jFact[static_cast<std::size_t>(j - 1)] * rising * bracket;
      rising *= (x + 2.0 * j - 1.0) * (x + 2.0 * j);
      q *= inv_u2;
      if (j == m) {
        bound = std::abs(kB2jOver2jFact[static_cast<std::size_t>(j)] * rising *
                         q * (-std::expm1(-(x + 2.0 * j + 1.0) * ell)));
      }
    }

    const double value = head.value() + tail;
    if (std::isfinite(value) && bound <= cfg.rel_tol * std::abs(value))
      return {value, bound, n};
    if (!std::isfinite(value))
      throw overflow_error("hurwitz_zeta_diff: value not representable");
    n *= 2;
  }
}

double digamma(double s) {
  if (!finite_positive(s)) throw domain_error("digamma: requires s > 0");

  // Shift into the asymptotic regime, then
  // psi(s) ~ ln s - 1/(2s) - sum_j B_{2j}/(2j s^{2j}).
  double shift = 0.0;
  while (s < 12.0) {
    shift -= 1.0 / s;
    s += 1.0;
  }
  const double z = 1.0 / (s * s);
  double series = 0.0;
  for (int j = 7; j >= 0; --j)
    series = series * z + kB2jOver2j[static_cast<std::size_t>(j)];
  return shift + std::log(s) - 0.5 / s - z * series;
}

double polygamma(int m, double s, const eval_config& cfg) {
  if (m < 1 || m > 64)
    throw domain_error("polygamma: order m must be in [1, 64]");
  if (!finite_positive(s)) throw domain_error("polygamma: requires s > 0");

  const series_value z = hurwitz_zeta(static_cast<double>(m) + 1.0, s, cfg);
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  const double result = sign * detail::factorial(m) * z.value;
  if (!std::isfinite(result))
    throw overflow_error("polygamma: m! * zeta(m+1, s) overflows");
  return result;
}

double log_gamma(double s) {
  if (!finite_positive(s)) throw domain_error("log_gamma: requires s > 0");

  // Lanczos, g = 607/128, 15 terms (Godfrey's coefficients).
  static constexpr double kG = 4.7421875;
  static constexpr std::array<double, 15> kCoef = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5,
  };

  double shift = 0.0;
  while (s < 0.5) {  // recurrence keeps the Lanczos argument in range
    shift -= std::log(s);
    s += 1.0;
  }
  double sum = kCoef[0];
  for (int k = 1; k < 15; ++k) sum += kCoef[static_cast<std::size_t>(k)] / (s - 1.0 + k);
  const double base = s + kG - 0.5;
  return shift + (s - 0.5) * std::log(base) - base + kHalfLn2Pi + std::log(sum);
}

double euler_gamma() { return kEulerGamma; }

}  // namespace zetabe
