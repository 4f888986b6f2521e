#include "slacqm/lattice.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "slacqm/error.hpp"

namespace slacqm {

namespace {

std::atomic<std::uint64_t> g_default_cap{MemoryCap{}.bytes};

void check_cap(std::uint64_t dim, MemoryCap cap) {
  const std::uint64_t bytes = dense_matrix_bytes(dim);
  if (bytes > cap.bytes)
    throw MemoryCapError("dense " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix needs " +
                         std::to_string(bytes) + " bytes, cap is " + std::to_string(cap.bytes));
}

}  // namespace

MemoryCap default_memory_cap() { return MemoryCap{g_default_cap.load()}; }
void set_default_memory_cap(MemoryCap cap) { g_default_cap.store(cap.bytes); }

std::uint64_t dense_matrix_bytes(std::uint64_t dim) {
  // Saturate instead of wrapping for absurd dimensions.
  constexpr std::uint64_t elem = sizeof(std::complex<double>);
  if (dim != 0 && dim > (UINT64_MAX / elem) / dim) return UINT64_MAX;
  return dim * dim * elem;
}

Lattice1D::Lattice1D(double width, int half_count, MemoryCap cap) : m_(half_count), width_(width) {
  if (!(width > 0.0) || !std::isfinite(width))
    throw ConfigError("lattice width must be positive and finite, got " + std::to_string(width), "L");
  if (half_count < 0) throw ConfigError("half count M must be >= 0, got " + std::to_string(half_count), "M");
  if (half_count > (1 << 28)) throw MemoryCapError("half count M=" + std::to_string(half_count) + " is too large");
  const int n = 2 * m_ + 1;
  check_cap(static_cast<std::uint64_t>(n), cap);

  spacing_ = width_ / n;
  const double dp = 2.0 * std::numbers::pi / width_;
  x_.resize(static_cast<std::size_t>(n));
  p_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x_[static_cast<std::size_t>(i)] = spacing_ * (i - m_);
    p_[static_cast<std::size_t>(i)] = dp * (i - m_);
  }
}

Lattice2D::Lattice2D(Lattice1D x_axis, Lattice1D y_axis, MemoryCap cap)
    : lx_(std::move(x_axis)), ly_(std::move(y_axis)) {
  check_cap(static_cast<std::uint64_t>(lx_.size()) * static_cast<std::uint64_t>(ly_.size()), cap);
}

Lattice1D make_lattice(double width, int half_count, MemoryCap cap) { return Lattice1D(width, half_count, cap); }

Lattice2D make_lattice_2d(double width_x, int half_x, double width_y, int half_y, MemoryCap cap) {
  return Lattice2D(Lattice1D(width_x, half_x, cap), Lattice1D(width_y, half_y, cap), cap);
}

int half_count_for(int point_count) {
  if (point_count < 1 || point_count % 2 == 0)
    throw ConfigError("point count must be a positive odd number, got " + std::to_string(point_count), "N");
  return (point_count - 1) / 2;
}

}  // namespace slacqm
