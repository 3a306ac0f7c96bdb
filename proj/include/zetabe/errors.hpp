// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace zetabe {

/// Argument outside an operation's documented domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series, continued fraction, or rejection loop failed to reach the
/// requested tolerance within its iteration budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result (or a mandatory intermediate) exceeds the representable range.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace zetabe
