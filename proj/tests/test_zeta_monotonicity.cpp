// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "zetabe/verification.hpp"
#include "zetabe/zeta_monotonicity.hpp"

using namespace zetabe;

namespace {

double rel_err(double got, double expected) {
  return std::abs(got - expected) / std::abs(expected);
}

}  // namespace

TEST_CASE("f values") {
  CHECK(std::abs(f({3.7, 1.0, 4.0}) - 0.25) <= 1e-14);
  CHECK(std::abs(f({1.0, 2.0, 1.0}) - 1.5) <= 1e-13);
  CHECK(std::abs(f({1.0, 0.5, 1.0}) - 0.61370563888010938) <= 1e-13);
  CHECK_THROWS_AS(f({0.5, 1.0, 1.0}), domain_error);
  CHECK_THROWS_AS(f({2.0, -1.0, 1.0}), domain_error);
}

TEST_CASE("log_f values and round trip") {
  CHECK(std::abs(log_f({2.0, 1.0, 1.0})) <= 1e-14);
  CHECK(std::abs(log_f({2.0, 1.0, 2.0}) - std::log(0.5)) <= 1e-13);
  for (double x : {1.5, 2.0, 3.0, 7.0})
    for (double a : {0.3, 2.0})
      CHECK(std::abs(std::exp(log_f({x, a, 1.0})) - f({x, a, 1.0})) <= 1e-12);
  CHECK_THROWS_AS(log_f({1.0, 2.0, 1.0}), domain_error);
}

TEST_CASE("h_sign resolves the three regimes") {
  CHECK(h_sign(2.0, 1.0, 1.0) == sign_result::zero);
  CHECK(h_sign(2.0, 2.0, 1.0) == sign_result::negative);
  CHECK(h_sign(2.0, 0.5, 1.0) == sign_result::positive);
  CHECK_THROWS_AS(h_sign(1.0, 2.0, 1.0), domain_error);
}

TEST_CASE("h_sign agrees with the central difference of log_f") {
  constexpr double h = 1e-5;
  for (double x : {1.5, 2.0, 3.0, 5.0, 10.0}) {
    for (double a : {0.1, 0.5, 0.9, 1.5, 5.0}) {
      for (double b : {0.5, 1.0, 2.0}) {
        const double fd =
            (log_f({x + h, a, b}) - log_f({x - h, a, b})) / (2.0 * h);
        if (std::abs(fd) <= 1e-8) continue;  // below the validation threshold
        const auto sign = h_sign(x, a, b);
        if (fd > 0.0) CHECK(sign == sign_result::positive);
        else CHECK(sign == sign_result::negative);
      }
    }
  }
}

TEST_CASE("lemma_sequence_u on the worked examples") {
  SUBCASE("equal sequences give identically zero u") {
    sequence_pair pair;
    pair.s_seq = {0.5, 0.25, 0.125};
    pair.r_seq = pair.s_seq;
    pair.case_label = lemma_case::case1;
    const auto u = lemma_sequence_u(pair);
    REQUIRE(u.size() == 4);
    for (double v : u) CHECK(std::abs(v) <= 1e-15);
  }

  SUBCASE("case 1: s_n = 1/(n+1), r_n = s_n/2 is strictly increasing") {
    sequence_pair pair;
    pair.case_label = lemma_case::case1;
    for (int n = 1; n <= 20; ++n) {
      pair.s_seq.push_back(1.0 / (n + 1.0));
      pair.r_seq.push_back(0.5 / (n + 1.0));
    }
    const auto u = lemma_sequence_u(pair);
    REQUIRE(u.size() == 21);
    CHECK(u[0] == 0.0);
    for (std::size_t k = 0; k + 1 < u.size(); ++k) CHECK(u[k + 1] > u[k]);
  }

  SUBCASE("case 2: r_n = 2^-(2n-1), s_n = 2^-2n is strictly decreasing") {
    sequence_pair pair;
    pair.case_label = lemma_case::case2;
    for (int n = 1; n <= 20; ++n) {
      pair.r_seq.push_back(std::pow(2.0, -(2.0 * n - 1.0)));
      pair.s_seq.push_back(std::pow(2.0, -2.0 * n));
    }
    // Interleaving sanity: s_{n+1} <= r_{n+1} <= s_n <= r_n.
    for (std::size_t i = 0; i + 1 < pair.s_seq.size(); ++i) {
      CHECK(pair.s_seq[i + 1] <= pair.r_seq[i + 1]);
      CHECK(pair.r_seq[i + 1] <= pair.s_seq[i]);
      CHECK(pair.s_seq[i] <= pair.r_seq[i]);
    }
    const auto u = lemma_sequence_u(pair);
    for (std::size_t k = 0; k + 1 < u.size(); ++k) CHECK(u[k + 1] < u[k]);
  }

  SUBCASE("entries outside (0,1) are rejected") {
    sequence_pair pair;
    pair.s_seq = {0.5, 1.0};
    pair.r_seq = {0.25, 0.5};
    CHECK_THROWS_AS(lemma_sequence_u(pair), domain_error);
    pair.s_seq = {0.5};
    pair.r_seq = {0.0};
    CHECK_THROWS_AS(lemma_sequence_u(pair), domain_error);
    pair.s_seq = {0.5, 0.5};
    pair.r_seq = {0.25};
    CHECK_THROWS_AS(lemma_sequence_u(pair), domain_error);
  }
}

TEST_CASE("lemma_sequence_u randomized monotonicity") {
  std::mt19937_64 eng(101);
  auto uniform = [&eng] {
    double u;
    do {
      u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    } while (u == 0.0);
    return u;
  };

  for (int trial = 0; trial < 30; ++trial) {
    const int len = 1 + static_cast<int>(eng() % 40);
    sequence_pair c1;
    c1.case_label = lemma_case::case1;
    for (int i = 0; i < len; ++i) {
      const double s = uniform();
      c1.s_seq.push_back(s);
      c1.r_seq.push_back(s * uniform());
    }
    const auto u1 = lemma_sequence_u(c1);
    for (std::size_t k = 0; k + 1 < u1.size(); ++k) CHECK(u1[k + 1] >= u1[k]);
    for (double v : u1) CHECK(v >= -5e-14);

    sequence_pair c2;
    c2.case_label = lemma_case::case2;
    std::vector<double> draws(static_cast<std::size_t>(2 * len));
    for (double& d : draws) d = uniform();
    std::sort(draws.begin(), draws.end(), std::greater<>());
    for (int i = 0; i < len; ++i) {
      c2.r_seq.push_back(draws[static_cast<std::size_t>(2 * i)]);
      c2.s_seq.push_back(draws[static_cast<std::size_t>(2 * i + 1)]);
    }
    const auto u2 = lemma_sequence_u(c2);
    for (std::size_t k = 0; k + 1 < u2.size(); ++k) CHECK(u2[k + 1] <= u2[k]);
    for (double v : u2) CHECK(v <= 5e-14);
  }
}

TEST_CASE("classify_direction trichotomy") {
  CHECK(classify_direction(0.5) == direction::increasing);
  CHECK(classify_direction(1.0) == direction::constant);
  CHECK(classify_direction(10.0) == direction::decreasing);
  CHECK(classify_direction(std::nextafter(1.0, 2.0)) == direction::decreasing);
  CHECK(classify_direction(std::nextafter(1.0, 0.0)) == direction::increasing);
  CHECK_THROWS_AS(classify_direction(0.0), domain_error);
}

TEST_CASE("polygamma_chain values") {
  const auto flat = polygamma_chain(5, 1.0, 2.0);
  REQUIRE(flat.size() == 6);
  for (double c : flat) CHECK(std::abs(c - 0.5) <= 1e-13);

  const auto down = polygamma_chain(1, 2.0, 1.0);
  CHECK(std::abs(down[0] - 1.5) <= 1e-13);
  CHECK(std::abs(down[1] - 1.1180339887498948) <= 1e-13);

  const auto up = polygamma_chain(1, 0.5, 1.0);
  CHECK(std::abs(up[0] - 0.61370563888010938) <= 1e-13);
  CHECK(up[1] > up[0]);

  CHECK_THROWS_AS(polygamma_chain(64, 1.0, 1.0), domain_error);
  CHECK_THROWS_AS(polygamma_chain(-1, 1.0, 1.0), domain_error);
}

TEST_CASE("polygamma_chain equals f(n+1,a,b) and respects the 1/b bound") {
  for (double a : verify::standard_grid::a_values()) {
    for (double b : verify::standard_grid::b_values()) {
      const auto chain = polygamma_chain(10, a, b);
      for (int k = 0; k <= 10; ++k) {
        const double fk = f({static_cast<double>(k + 1), a, b});
        CHECK(rel_err(chain[static_cast<std::size_t>(k)], fk) <= 1e-11);
        if (a < 1.0) CHECK(chain[static_cast<std::size_t>(k)] < 1.0 / b);
        if (a > 1.0) CHECK(chain[static_cast<std::size_t>(k)] > 1.0 / b);
      }
    }
  }
}

TEST_CASE("f approaches 1/b as x grows") {
  for (double a : verify::standard_grid::a_values())
    for (double b : verify::standard_grid::b_values())
      CHECK(std::abs(f({200.0, a, b}) - 1.0 / b) <= 1e-6);
}

TEST_CASE("f direction on the standard grid matches the trichotomy") {
  // Margin just above double round-off for f values of order 1/b. The true
  // consecutive steps shrink to ~3.5e-12 at the x = 20, b = 0.5 corner, so
  // the direction check must resolve below that; the coarser reporting
  // margin used by the verification scans is exercised in the acceptance
  // suite.
  const auto x_grid = verify::standard_grid::x_grid();
  for (double a : verify::standard_grid::a_values()) {
    for (double b : verify::standard_grid::b_values()) {
      std::vector<double> vals;
      vals.reserve(x_grid.size());
      for (double x : x_grid) vals.push_back(f({x, a, b}));
      if (a == 1.0) {
        for (double v : vals) CHECK(std::abs(v * b - 1.0) <= 1e-12);
      } else {
        const double sign = a < 1.0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
          CHECK(sign * (vals[i + 1] - vals[i]) > 1e-12);
      }
    }
  }
}
