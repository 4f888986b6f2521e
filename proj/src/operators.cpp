#include "slacqm/operators.hpp"

#include <cmath>
#include <sstream>

#include "slacqm/error.hpp"

namespace slacqm {

namespace {

[[noreturn]] void non_finite(std::string_view what, double value, double x, const double* y, int index) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " is not finite (" << value << ") at grid point " << index << " (x=" << x;
  if (y) msg << ", y=" << *y;
  msg << ")";
  throw NumericalError(msg.str());
}

}  // namespace

OperatorMatrix i_momentum_matrix(const Lattice1D& g) {
  return OperatorMatrix(kernels::parallel::i_momentum(g.size(), g.width()), false);
}

OperatorMatrix momentum_matrix(const Lattice1D& g) {
  const Eigen::MatrixXd ip = kernels::parallel::i_momentum(g.size(), g.width());
  Eigen::MatrixXcd p(ip.rows(), ip.cols());
  p.real().setZero();
  p.imag() = -ip;
  return OperatorMatrix(std::move(p), true);
}

OperatorMatrix momentum_squared_matrix(const Lattice1D& g) {
  return OperatorMatrix(kernels::parallel::momentum_squared(g.size(), g.width()), true);
}

OperatorMatrix exp_ialpha_p(const Lattice1D& g, double alpha) {
  if (!std::isfinite(alpha)) throw NumericalError("translation length must be finite");
  return OperatorMatrix(kernels::parallel::translation(g.size(), g.width(), alpha), false);
}

std::vector<double> sample_on_grid(const Lattice1D& g, const Field1D& f, std::string_view what) {
  std::vector<double> out(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const double v = f(g.x(i));
    if (!std::isfinite(v)) non_finite(what, v, g.x(i), nullptr, i);
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

std::vector<double> sample_on_grid(const Lattice2D& g, const Field2D& f, std::string_view what) {
  std::vector<double> out(static_cast<std::size_t>(g.size()));
  for (int idx = 0; idx < g.size(); ++idx) {
    const auto [i1, i2] = g.split(idx);
    const double x = g.x_axis().x(i1);
    const double y = g.y_axis().x(i2);
    const double v = f(x, y);
    if (!std::isfinite(v)) non_finite(what, v, x, &y, idx);
    out[static_cast<std::size_t>(idx)] = v;
  }
  return out;
}

OperatorMatrix diagonal_matrix(std::span<const double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
  return OperatorMatrix(std::move(d), true);
}

OperatorMatrix diagonal_from_function(const Lattice1D& g, const Field1D& f) {
  return diagonal_matrix(sample_on_grid(g, f));
}

OperatorMatrix diagonal_from_function(const Lattice2D& g, const Field2D& f) {
  return diagonal_matrix(sample_on_grid(g, f));
}

OperatorMatrix embed_2d(const OperatorMatrix& a, Axis axis, const Lattice2D& g) {
  const int nx = g.x_axis().size();
  const int ny = g.y_axis().size();
  if (a.is_real()) return OperatorMatrix(kernels::parallel::kron_embed(a.real(), axis, nx, ny), a.hermitian_hint());
  return OperatorMatrix(kernels::parallel::kron_embed(a.complex(), axis, nx, ny), a.hermitian_hint());
}

}  // namespace slacqm
