#pragma once

// Independent reference constructions used only by the tests. Nothing here
// calls into the library's operator code.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

/// x_j and p_k of the symmetric N-point grid of width L.
std::vector<double> positions(int n, double width);
std::vector<double> momenta(int n, double width);

/// (1/N) sum_k f(p_k) exp(i p_k (x_j - x_l + shift)), summed term by term.
Eigen::MatrixXcd fourier_operator(int n, double width, const std::function<cplx(double)>& symbol, double shift = 0.0);

/// d/dx, -d^2/dx^2 and psi(x) -> psi(x + alpha) from the plane-wave sums.
Eigen::MatrixXcd i_momentum(int n, double width);
Eigen::MatrixXcd momentum(int n, double width);
Eigen::MatrixXcd momentum_squared(int n, double width);
Eigen::MatrixXcd translation(int n, double width, double alpha);

/// 1/4 (m^a p m^b p m^c + m^c p m^b p m^a), b = -1 - a - c, by explicit products.
Eigen::MatrixXcd von_roos(int n, double width, const std::function<double(double)>& mass, double a, double c);

/// Real roots of det(H - lambda I) for a Hermitian H, located by a sign-change
/// scan of the determinant over the Gershgorin interval and refined by bisection.
std::vector<double> hermitian_char_poly_roots(const Eigen::MatrixXcd& h);

/// Determinant by Gaussian elimination with partial pivoting.
cplx determinant(Eigen::MatrixXcd m);

}  // namespace oracle
