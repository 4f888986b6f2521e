#pragma once

// Dense assembly kernels.
//
// Every kernel exists twice: `serial::` is the plain entry-by-entry reference
// kept for testing, `parallel::` is the OpenMP version used by the library.
// Entrywise fills produce bit-identical results in both; the product kernels
// (sandwich, residuals) agree to rounding.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace slacqm::kernels {

using cplx = std::complex<double>;

enum class Axis { x, y };

// Closed-form entries as functions of the offset j = i - k on an n-point
// periodic grid of width L.
double i_momentum_entry(int j, int n, double width);
double momentum_squared_entry(int j, int n, double width);
double translation_entry(int j, int n, double width, double shift);

/// sin(pi * x) with exact zeros at (near-)integer x.
double sin_pi(double x);

namespace serial {

Eigen::MatrixXd i_momentum(int n, double width);
Eigen::MatrixXd momentum_squared(int n, double width);
Eigen::MatrixXd translation(int n, double width, double shift);
Eigen::MatrixXd kron_embed(const Eigen::MatrixXd& a, Axis axis, int nx, int ny);
Eigen::MatrixXcd kron_embed(const Eigen::MatrixXcd& a, Axis axis, int nx, int ny);
/// kron(I_ny, ax) + kron(ay, I_nx) in one pass, without materialising either term.
Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& ax, const Eigen::MatrixXd& ay);
/// k * diag(d) * k
Eigen::MatrixXd diag_sandwich(const Eigen::MatrixXd& k, std::span<const double> d);
/// ||h v_j - lambda_j v_j||_2 for every column j of v.
std::vector<double> residual_norms(const Eigen::MatrixXd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda);
std::vector<double> residual_norms(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda);

}  // namespace serial

namespace parallel {

Eigen::MatrixXd i_momentum(int n, double width);
Eigen::MatrixXd momentum_squared(int n, double width);
Eigen::MatrixXd translation(int n, double width, double shift);
Eigen::MatrixXd kron_embed(const Eigen::MatrixXd& a, Axis axis, int nx, int ny);
Eigen::MatrixXcd kron_embed(const Eigen::MatrixXcd& a, Axis axis, int nx, int ny);
Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& ax, const Eigen::MatrixXd& ay);
Eigen::MatrixXd diag_sandwich(const Eigen::MatrixXd& k, std::span<const double> d);
std::vector<double> residual_norms(const Eigen::MatrixXd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda);
std::vector<double> residual_norms(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& v, std::span<const cplx> lambda);

}  // namespace parallel

}  // namespace slacqm::kernels
