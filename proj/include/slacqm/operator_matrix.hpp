#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

namespace slacqm {

using cplx = std::complex<double>;

/// Dense square operator on grid-sampled wave functions.
///
/// Real matrices stay real (no complex promotion) so that real Hamiltonians
/// are diagonalized in real arithmetic. `hermitian_hint` is set by the
/// builders, never inferred from the entries.
class OperatorMatrix {
 public:
  using Real = Eigen::MatrixXd;
  using Complex = Eigen::MatrixXcd;

  OperatorMatrix(Real m, bool hermitian_hint);
  OperatorMatrix(Complex m, bool hermitian_hint);

  static OperatorMatrix identity(int dim);

  int dim() const noexcept;
  bool is_real() const noexcept { return std::holds_alternative<Real>(m_); }
  bool hermitian_hint() const noexcept { return hermitian_; }

  /// Throws DimensionError when the matrix is complex.
  const Real& real() const;
  /// Throws DimensionError when the matrix is real; see to_complex().
  const Complex& complex() const;
  Complex to_complex() const;

  cplx operator()(int i, int k) const;

  double max_abs() const;
  double frobenius_norm() const;
  /// max |A - A^dagger| over all entries.
  double hermiticity_defect() const;

  OperatorMatrix adjoint() const;
  OperatorMatrix scaled(cplx factor) const;

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  std::variant<Real, Complex> m_;
  bool hermitian_;
};

/// Frobenius norm of a - b, promoting to complex when needed.
double frobenius_distance(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace slacqm
