// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <iosfwd>
#include <string>

#include "ultraslow/convergence.hpp"
#include "ultraslow/solver1d.hpp"
#include "ultraslow/solver2d.hpp"

namespace ultraslow {

/// CSV rendering of a convergence study: header "mesh,error,order", one row
/// per ladder entry, full double precision, empty fields where a row has no
/// value.
std::string to_csv(const ConvergenceStudy& study);

/// Markdown table rendering with three significant digits.
std::string to_markdown(const ConvergenceStudy& study);

/// CSV trajectory dump, one record per (time level, interior node):
/// columns n,j,x,t,U.
void write_trajectory_csv(std::ostream& out, const Solver1dResult& result,
                          const Solver1dConfig& config);

/// CSV trajectory dump, one record per (time level, interior node):
/// columns n,j,k,x,y,t,U.
void write_trajectory_csv(std::ostream& out, const Solver2dResult& result,
                          const Solver2dConfig& config);

/// Binary trajectory dump: a single ASCII header line
///   ultraslow-fde-2d cells=<M> steps=<N> interior=<n> origin=<a>
///   horizon=<T> layout=row-major count=<values>
/// terminated by '\n', followed by count little-endian float64 values (the
/// interior fields of all time levels in order).
void write_trajectory_binary(std::ostream& out, const Solver2dResult& result,
                             const Solver2dConfig& config);

}  // namespace ultraslow
