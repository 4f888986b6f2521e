#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace slacqm {

/// Upper bound on the bytes a dense operator matrix may occupy.
struct MemoryCap {
  std::uint64_t bytes = std::uint64_t{4} << 30;  // 4 GiB
};

/// Process-wide default cap used when none is passed explicitly.
MemoryCap default_memory_cap();
void set_default_memory_cap(MemoryCap cap);

/// Symmetric periodic grid of N = 2M+1 points with spacing a = L/N.
///
/// x[i] = a (i - M), p[k] = (2 pi / L)(k - M) for 0-based i, k in [0, N).
/// Odd N is structural: the momentum formulas assume it.
class Lattice1D {
 public:
  Lattice1D(double width, int half_count, MemoryCap cap = default_memory_cap());

  int half_count() const noexcept { return m_; }  // M
  int size() const noexcept { return 2 * m_ + 1; }  // N
  double width() const noexcept { return width_; }  // L
  double spacing() const noexcept { return spacing_; }  // a

  double x(int i) const { return x_[static_cast<std::size_t>(i)]; }
  double p(int k) const { return p_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& positions() const noexcept { return x_; }
  const std::vector<double>& momenta() const noexcept { return p_; }

  /// Index of the mirror point -x[i].
  int mirror(int i) const noexcept { return size() - 1 - i; }

  friend bool operator==(const Lattice1D&, const Lattice1D&) = default;

 private:
  int m_;
  double width_;
  double spacing_;
  std::vector<double> x_;
  std::vector<double> p_;
};

/// Tensor-product grid; compound index I = i1 + i2 * Nx (0-based, x runs fastest).
class Lattice2D {
 public:
  Lattice2D(Lattice1D x_axis, Lattice1D y_axis, MemoryCap cap = default_memory_cap());

  const Lattice1D& x_axis() const noexcept { return lx_; }
  const Lattice1D& y_axis() const noexcept { return ly_; }
  int size() const noexcept { return lx_.size() * ly_.size(); }
  double cell_area() const noexcept { return lx_.spacing() * ly_.spacing(); }

  int index(int i1, int i2) const noexcept { return i1 + i2 * lx_.size(); }
  std::pair<int, int> split(int compound) const noexcept {
    return {compound % lx_.size(), compound / lx_.size()};
  }

  friend bool operator==(const Lattice2D&, const Lattice2D&) = default;

 private:
  Lattice1D lx_;
  Lattice1D ly_;
};

Lattice1D make_lattice(double width, int half_count, MemoryCap cap = default_memory_cap());
Lattice2D make_lattice_2d(double width_x, int half_x, double width_y, int half_y,
                          MemoryCap cap = default_memory_cap());

/// Half-count M for an odd point count N; throws ConfigError for even or non-positive N.
int half_count_for(int point_count);

/// Bytes of a dense complex matrix of the given dimension.
std::uint64_t dense_matrix_bytes(std::uint64_t dim);

}  // namespace slacqm
