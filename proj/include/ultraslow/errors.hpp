// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <stdexcept>

namespace ultraslow {

/// Raised when a linear or time-stepping solve cannot be completed to the
/// requested accuracy (breakdown, non-convergence, loss of definiteness).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ultraslow
