// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Core>

namespace ultraslow {

/// Radix-2 complex FFT for power-of-two lengths with precomputed
/// bit-reversal tables and twiddle factors.  Plans are immutable after
/// construction and may be shared between threads.
class Fft {
public:
  /// Builds a plan of length \p n.  Throws std::invalid_argument unless
  /// \p n is a power of two and nonzero.
  explicit Fft(std::size_t n);

  /// In-place forward transform, no normalization.
  void forward(std::complex<double>* data) const;

  /// In-place inverse transform, scales by 1/n.
  void inverse(std::complex<double>* data) const;

  std::size_t size() const { return n_; }

  /// Process-wide plan cache keyed by length.
  static const Fft& plan(std::size_t n);

private:
  void transform(std::complex<double>* data) const;

  std::size_t n_;
  std::vector<std::uint32_t> reversal_;
  std::vector<std::complex<double>> twiddle_;
};

/// Smallest power of two that is >= n.
std::size_t next_pow2(std::size_t n);

/// In-place 2D forward FFT of a square power-of-two complex array,
/// transforming first along columns, then along rows.
void fft2(Eigen::Ref<Eigen::MatrixXcd> data);

/// In-place 2D inverse FFT; scales by 1/(rows*cols).
void ifft2(Eigen::Ref<Eigen::MatrixXcd> data);

}  // namespace ultraslow
