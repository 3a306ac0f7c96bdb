// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "zetabe/special_functions.hpp"

namespace zetabe {

/// Arguments of f(x,a,b) = (zeta(x,b) - zeta(x,a+b))^(1/x), x >= 1.
struct f_args {
  double x = 1.0;
  double a = 1.0;
  double b = 1.0;
};

/// Monotonicity verdict for a scanned function of one variable.
enum class direction { increasing, decreasing, constant };

/// Sign of the log-derivative driver H(x,a,b).
enum class sign_result { negative, zero, positive };

/// Which case of the two-sequence lemma a pair belongs to.
enum class lemma_case { case1, case2, neither };

/// Two sequences (s_n), (r_n) in (0,1) of equal length.
///
/// case1:  r_n <= s_n for all n.
/// case2:  s_{n+1} <= r_{n+1} <= s_n <= r_n for all n (interleaved,
///         decreasing), which keeps 1 + sum(s_n - r_n) positive.
struct sequence_pair {
  std::vector<double> s_seq;
  std::vector<double> r_seq;
  lemma_case case_label = lemma_case::neither;
};

/// f(x,a,b); strictly positive. At x = 1 the termwise difference series is
/// used directly (the continuity value).
double f(const f_args& args, const eval_config& cfg = {});

/// ln f(x,a,b) = (1/x) ln(zeta(x,b) - zeta(x,a+b)); requires x > 1.
double log_f(const f_args& args, const eval_config& cfg = {});

/// Sign of H(x,a,b), the driver of d/dx ln f, for x > 1.
///
/// H is evaluated from its shifted-series form
///   sum_{n>=1} (s_n ln s_n - r_n ln r_n) - (1+S) ln(1+S),
///   S = sum_{n>=1} (s_n - r_n),
///   s_n = (b/(n+b))^x,  r_n = (b/(n+a-1+b))^x,
/// by direct summation with rigorous tail enclosures; the sign is reported
/// only when the enclosure excludes zero. Returns zero iff the enclosure
/// straddles zero and a == 1; otherwise throws convergence_error rather than
/// guessing.
sign_result h_sign(double x, double a, double b, const eval_config& cfg = {});

/// The lemma sequence u_0..u_N (u_0 = 0 by convention):
///   u_N = (1 + sum_{n<=N}(s_n - r_n)) ln(1 + sum_{n<=N}(s_n - r_n))
///         - sum_{n<=N}(s_n ln s_n - r_n ln r_n),
/// computed with running compensated partial sums.
std::vector<double> lemma_sequence_u(const sequence_pair& pair);

/// The Theorem-1 trichotomy on the exact value of a.
direction classify_direction(double a);

/// Chain elements c_n = ((-1)^n (psi^{(n)}(b+a) - psi^{(n)}(b)) / n!)^{1/(n+1)}
/// for n = 0..n_max (n_max <= 63), evaluated through digamma/polygamma so the
/// route is independent of the termwise zeta-difference path. Element n
/// equals f(n+1, a, b).
std::vector<double> polygamma_chain(int n_max, double a, double b);

}  // namespace zetabe
