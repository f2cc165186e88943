// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/fft.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace ultraslow {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Fft::Fft(std::size_t n) : n_(n) {
  if (!is_pow2(n)) throw std::invalid_argument("Fft: length must be a power of two");
  reversal_.resize(n);
  std::uint32_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::uint32_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    reversal_[i] = static_cast<std::uint32_t>(r);
  }
  twiddle_.resize(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double phase = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle_[j] = {std::cos(phase), std::sin(phase)};
  }
}

void Fft::transform(std::complex<double>* data) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t r = reversal_[i];
    if (i < r) std::swap(data[i], data[r]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t stride = n_ / len;
    const std::size_t half = len / 2;
    for (std::size_t block = 0; block < n_; block += len) {
      for (std::size_t j = 0; j < half; ++j) {
        std::complex<double>& lo = data[block + j];
        std::complex<double>& hi = data[block + j + half];
        const std::complex<double> t = twiddle_[j * stride] * hi;
        hi = lo - t;
        lo += t;
      }
    }
  }
}

void Fft::forward(std::complex<double>* data) const { transform(data); }

void Fft::inverse(std::complex<double>* data) const {
  for (std::size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
  transform(data);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]) * scale;
}

const Fft& Fft::plan(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, std::unique_ptr<Fft>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Fft>(n);
  return *slot;
}

namespace {

void fft2_impl(Eigen::Ref<Eigen::MatrixXcd> data, bool forward) {
  const auto rows = data.rows();
  if (rows != data.cols()) throw std::invalid_argument("fft2: array must be square");
  const Fft& plan = Fft::plan(static_cast<std::size_t>(rows));
  for (Eigen::Index c = 0; c < rows; ++c) {
    std::complex<double>* col = data.col(c).data();
    forward ? plan.forward(col) : plan.inverse(col);
  }
  data.transposeInPlace();
  for (Eigen::Index c = 0; c < rows; ++c) {
    std::complex<double>* col = data.col(c).data();
    forward ? plan.forward(col) : plan.inverse(col);
  }
  data.transposeInPlace();
}

}  // namespace

void fft2(Eigen::Ref<Eigen::MatrixXcd> data) { fft2_impl(data, true); }

void ifft2(Eigen::Ref<Eigen::MatrixXcd> data) { fft2_impl(data, false); }

}  // namespace ultraslow
