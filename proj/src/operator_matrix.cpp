#include "slacqm/operator_matrix.hpp"

#include <string>

#include "slacqm/error.hpp"

namespace slacqm {

namespace {

void require_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols)
    throw DimensionError("operator matrix must be square, got " + std::to_string(rows) + "x" + std::to_string(cols));
}

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("operator dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace

OperatorMatrix::OperatorMatrix(Real m, bool hermitian_hint) : m_(std::move(m)), hermitian_(hermitian_hint) {
  const auto& r = std::get<Real>(m_);
  require_square(r.rows(), r.cols());
}

OperatorMatrix::OperatorMatrix(Complex m, bool hermitian_hint) : m_(std::move(m)), hermitian_(hermitian_hint) {
  const auto& c = std::get<Complex>(m_);
  require_square(c.rows(), c.cols());
}

OperatorMatrix OperatorMatrix::identity(int dim) { return OperatorMatrix(Real(Real::Identity(dim, dim)), true); }

int OperatorMatrix::dim() const noexcept {
  return std::visit([](const auto& m) { return static_cast<int>(m.rows()); }, m_);
}

const OperatorMatrix::Real& OperatorMatrix::real() const {
  if (!is_real()) throw DimensionError("operator matrix is complex");
  return std::get<Real>(m_);
}

const OperatorMatrix::Complex& OperatorMatrix::complex() const {
  if (is_real()) throw DimensionError("operator matrix is real");
  return std::get<Complex>(m_);
}

OperatorMatrix::Complex OperatorMatrix::to_complex() const {
  if (is_real()) return std::get<Real>(m_).cast<cplx>();
  return std::get<Complex>(m_);
}

cplx OperatorMatrix::operator()(int i, int k) const {
  return std::visit([&](const auto& m) { return cplx(m(i, k)); }, m_);
}

double OperatorMatrix::max_abs() const {
  return std::visit([](const auto& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }, m_);
}

double OperatorMatrix::frobenius_norm() const {
  return std::visit([](const auto& m) { return m.norm(); }, m_);
}

double OperatorMatrix::hermiticity_defect() const {
  return std::visit(
      [](const auto& m) {
        return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
      },
      m_);
}

OperatorMatrix OperatorMatrix::adjoint() const {
  if (is_real()) return OperatorMatrix(Real(std::get<Real>(m_).transpose()), hermitian_);
  return OperatorMatrix(Complex(std::get<Complex>(m_).adjoint()), hermitian_);
}

OperatorMatrix OperatorMatrix::scaled(cplx factor) const {
  const bool keep_hint = hermitian_ && factor.imag() == 0.0;
  if (is_real() && factor.imag() == 0.0) return OperatorMatrix(Real(std::get<Real>(m_) * factor.real()), keep_hint);
  return OperatorMatrix(Complex(to_complex() * factor), keep_hint);
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  const bool hint = a.hermitian_hint() && b.hermitian_hint();
  if (a.is_real() && b.is_real()) return OperatorMatrix(OperatorMatrix::Real(a.real() + b.real()), hint);
  return OperatorMatrix(OperatorMatrix::Complex(a.to_complex() + b.to_complex()), hint);
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  const bool hint = a.hermitian_hint() && b.hermitian_hint();
  if (a.is_real() && b.is_real()) return OperatorMatrix(OperatorMatrix::Real(a.real() - b.real()), hint);
  return OperatorMatrix(OperatorMatrix::Complex(a.to_complex() - b.to_complex()), hint);
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  if (a.is_real() && b.is_real()) return OperatorMatrix(OperatorMatrix::Real(a.real() * b.real()), false);
  return OperatorMatrix(OperatorMatrix::Complex(a.to_complex() * b.to_complex()), false);
}

double frobenius_distance(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  if (a.is_real() && b.is_real()) return (a.real() - b.real()).norm();
  return (a.to_complex() - b.to_complex()).norm();
}

}  // namespace slacqm
