#include "slacqm/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "slacqm/error.hpp"

namespace slacqm::kernels {

namespace {

constexpr double pi = std::numbers::pi;

double parity_sign(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

// True when x lies within a few ulps of an integer.
bool near_integer(double x) {
  const double r = x - std::nearbyint(x);
  return std::abs(r) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
}

template <class Entry>
std::vector<double> offset_table(int n, Entry entry) {
  std::vector<double> tab(static_cast<std::size_t>(2 * n - 1));
  for (int j = -(n - 1); j <= n - 1; ++j) tab[static_cast<std::size_t>(j + n - 1)] = entry(j);
  return tab;
}

template <class Entry>
Eigen::MatrixXd fill_serial(int n, Entry entry) {
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out(i, k) = entry(i - k);
  return out;
}

template <class Entry>
Eigen::MatrixXd fill_parallel(int n, Entry entry) {
  const std::vector<double> tab = offset_table(n, entry);
  Eigen::MatrixXd out(n, n);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) out(i, k) = tab[static_cast<std::size_t>(i - k + n - 1)];
  return out;
}

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
void check_embed(const Mat<Scalar>& a, Axis axis, int nx, int ny) {
  const int want = axis == Axis::x ? nx : ny;
  if (a.rows() != want || a.cols() != want)
    throw DimensionError("embedding a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " operator on an axis with " + std::to_string(want) + " points");
}

template <class Scalar>
Mat<Scalar> kron_serial(const Mat<Scalar>& a, Axis axis, int nx, int ny) {
  check_embed(a, axis, nx, ny);
  const int dim = nx * ny;
  Mat<Scalar> out(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int k1 = col % nx, k2 = col / nx;
    for (int row = 0; row < dim; ++row) {
      const int i1 = row % nx, i2 = row / nx;
      if (axis == Axis::x)
        out(row, col) = (i2 == k2) ? a(i1, k1) : Scalar(0);
      else
        out(row, col) = (i1 == k1) ? a(i2, k2) : Scalar(0);
    }
  }
  return out;
}

template <class Scalar>
Mat<Scalar> kron_parallel(const Mat<Scalar>& a, Axis axis, int nx, int ny) {
  check_embed(a, axis, nx, ny);
  const int dim = nx * ny;
  Mat<Scalar> out(dim, dim);
#pragma omp parallel for schedule(static)
  for (int col = 0; col < dim; ++col) {
    const int k1 = col % nx, k2 = col / nx;
    Scalar* c = out.data() + static_cast<std::ptrdiff_t>(col) * dim;
    std::fill(c, c + dim, Scalar(0));
    if (axis == Axis::x) {
      for (int i1 = 0; i1 < nx; ++i1) c[i1 + k2 * nx] = a(i1, k1);
    } else {
      for (int i2 = 0; i2 < ny; ++i2) c[k1 + i2 * nx] = a(i2, k2);
    }
  }
  return out;
}

template <class Scalar>
double column_residual(const Mat<Scalar>& h, const Eigen::MatrixXcd& v, int j, cplx lambda) {
  const int n = static_cast<int>(h.rows());
  Eigen::VectorXcd r = -lambda * v.col(j);
  for (int k = 0; k < n; ++k) {
    const cplx vk = v(k, j);
    for (int i = 0; i < n; ++i) r(i) += h(i, k) * vk;
  }
  return r.norm();
}

template <class Scalar>
void check_residual_shapes(const Mat<Scalar>& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda) {
  if (v.rows() != h.rows() || static_cast<std::size_t>(v.cols()) != lambda.size())
    throw DimensionError("residual: eigenvector block does not match matrix/eigenvalue count");
}

template <class Scalar>
std::vector<double> residuals_serial(const Mat<Scalar>& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda) {
  check_residual_shapes(h, v, lambda);
  std::vector<double> out(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    const int n = static_cast<int>(h.rows());
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += h(i, k) * v(k, static_cast<int>(j));
      acc -= lambda[j] * v(i, static_cast<int>(j));
      sum += std::norm(acc);
    }
    out[j] = std::sqrt(sum);
  }
  return out;
}

template <class Scalar>
std::vector<double> residuals_parallel(const Mat<Scalar>& h, const Eigen::MatrixXcd& v,
                                       std::span<const cplx> lambda) {
  check_residual_shapes(h, v, lambda);
  const int cols = static_cast<int>(lambda.size());
  std::vector<double> out(lambda.size());
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < cols; ++j) out[static_cast<std::size_t>(j)] = column_residual(h, v, j, lambda[static_cast<std::size_t>(j)]);
  return out;
}

void check_kron_sum(const Eigen::MatrixXd& ax, const Eigen::MatrixXd& ay) {
  if (ax.rows() != ax.cols() || ay.rows() != ay.cols()) throw DimensionError("kron_sum: operators must be square");
}

void check_sandwich(const Eigen::MatrixXd& k, std::span<const double> d) {
  if (k.rows() != k.cols() || static_cast<std::size_t>(k.rows()) != d.size())
    throw DimensionError("sandwich: diagonal length does not match matrix");
}

}  // namespace

double sin_pi(double x) {
  if (near_integer(x)) return 0.0;
  const double r = x - 2.0 * std::nearbyint(0.5 * x);  // r in [-1, 1]
  return std::sin(pi * r);
}

double i_momentum_entry(int j, int n, double width) {
  if (j % n == 0) return 0.0;
  return (pi / width) * parity_sign(j) / std::sin(pi * j / n);
}

double momentum_squared_entry(int j, int n, double width) {
  if (j % n == 0) {
    const double a = width / n;
    return pi * pi / (3.0 * a * a) * (1.0 - a * a / (width * width));
  }
  const double s = std::sin(pi * j / n);
  return (2.0 * pi * pi / (width * width)) * parity_sign(j) * std::cos(pi * j / n) / (s * s);
}

double translation_entry(int j, int n, double width, double shift) {
  // Shift in sites, split once into whole sites q and a fraction f.
  const double sites = shift / (width / n);
  const double q = std::nearbyint(sites);
  const double f = sites - q;
  const double k = std::fmod(q + j, 2.0 * n);
  const double c = std::nearbyint(k / n);
  const double kr = k - c * n;  // |kr| <= n / 2
  if (near_integer(sites)) return kr == 0.0 ? 1.0 : 0.0;
  const double num = std::fmod(q, 2.0) == 0.0 ? std::sin(pi * f) : -std::sin(pi * f);
  const double den = std::fmod(c, 2.0) == 0.0 ? std::sin(pi * (kr + f) / n) : -std::sin(pi * (kr + f) / n);
  return parity_sign(j) / n * num / den;
}

namespace serial {

Eigen::MatrixXd i_momentum(int n, double width) {
  return fill_serial(n, [&](int j) { return i_momentum_entry(j, n, width); });
}
Eigen::MatrixXd momentum_squared(int n, double width) {
  return fill_serial(n, [&](int j) { return momentum_squared_entry(j, n, width); });
}
Eigen::MatrixXd translation(int n, double width, double shift) {
  return fill_serial(n, [&](int j) { return translation_entry(j, n, width, shift); });
}
Eigen::MatrixXd kron_embed(const Eigen::MatrixXd& a, Axis axis, int nx, int ny) { return kron_serial(a, axis, nx, ny); }
Eigen::MatrixXcd kron_embed(const Eigen::MatrixXcd& a, Axis axis, int nx, int ny) { return kron_serial(a, axis, nx, ny); }

Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& ax, const Eigen::MatrixXd& ay) {
  check_kron_sum(ax, ay);
  const int nx = static_cast<int>(ax.rows()), ny = static_cast<int>(ay.rows());
  const int dim = nx * ny;
  Eigen::MatrixXd out(dim, dim);
  for (int row = 0; row < dim; ++row)
    for (int col = 0; col < dim; ++col) {
      const int i1 = row % nx, i2 = row / nx, k1 = col % nx, k2 = col / nx;
      double v = 0.0;
      if (i2 == k2) v += ax(i1, k1);
      if (i1 == k1) v += ay(i2, k2);
      out(row, col) = v;
    }
  return out;
}

Eigen::MatrixXd diag_sandwich(const Eigen::MatrixXd& k, std::span<const double> d) {
  check_sandwich(k, d);
  const int n = static_cast<int>(k.rows());
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int m = 0; m < n; ++m) acc += k(i, m) * d[static_cast<std::size_t>(m)] * k(m, j);
      out(i, j) = acc;
    }
  return out;
}

std::vector<double> residual_norms(const Eigen::MatrixXd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda) {
  return residuals_serial(h, v, lambda);
}
std::vector<double> residual_norms(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda) {
  return residuals_serial(h, v, lambda);
}

}  // namespace serial

namespace parallel {

Eigen::MatrixXd i_momentum(int n, double width) {
  return fill_parallel(n, [&](int j) { return i_momentum_entry(j, n, width); });
}
Eigen::MatrixXd momentum_squared(int n, double width) {
  return fill_parallel(n, [&](int j) { return momentum_squared_entry(j, n, width); });
}
Eigen::MatrixXd translation(int n, double width, double shift) {
  return fill_parallel(n, [&](int j) { return translation_entry(j, n, width, shift); });
}
Eigen::MatrixXd kron_embed(const Eigen::MatrixXd& a, Axis axis, int nx, int ny) { return kron_parallel(a, axis, nx, ny); }
Eigen::MatrixXcd kron_embed(const Eigen::MatrixXcd& a, Axis axis, int nx, int ny) {
  return kron_parallel(a, axis, nx, ny);
}

Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& ax, const Eigen::MatrixXd& ay) {
  check_kron_sum(ax, ay);
  const int nx = static_cast<int>(ax.rows()), ny = static_cast<int>(ay.rows());
  const int dim = nx * ny;
  Eigen::MatrixXd out(dim, dim);
#pragma omp parallel for schedule(static)
  for (int col = 0; col < dim; ++col) {
    const int k1 = col % nx, k2 = col / nx;
    double* c = out.data() + static_cast<std::ptrdiff_t>(col) * dim;
    std::fill(c, c + dim, 0.0);
    for (int i1 = 0; i1 < nx; ++i1) c[i1 + k2 * nx] += ax(i1, k1);
    for (int i2 = 0; i2 < ny; ++i2) c[k1 + i2 * nx] += ay(i2, k2);
  }
  return out;
}

Eigen::MatrixXd diag_sandwich(const Eigen::MatrixXd& k, std::span<const double> d) {
  check_sandwich(k, d);
  const int n = static_cast<int>(k.rows());
  Eigen::MatrixXd scaled(n, n);  // diag(d) * k
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m) scaled(m, j) = d[static_cast<std::size_t>(m)] * k(m, j);

  Eigen::MatrixXd out(n, n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    double* c = out.data() + static_cast<std::ptrdiff_t>(j) * n;
    std::fill(c, c + n, 0.0);
    for (int m = 0; m < n; ++m) {
      const double b = scaled(m, j);
      const double* km = k.data() + static_cast<std::ptrdiff_t>(m) * n;
      for (int i = 0; i < n; ++i) c[i] += km[i] * b;
    }
  }
  return out;
}

std::vector<double> residual_norms(const Eigen::MatrixXd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda) {
  return residuals_parallel(h, v, lambda);
}
std::vector<double> residual_norms(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda) {
  return residuals_parallel(h, v, lambda);
}

}  // namespace parallel

}  // namespace slacqm::kernels
