#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slacqm/lattice.hpp"
#include "slacqm/operator_matrix.hpp"

namespace slacqm {

struct HamiltonianSpec;

using Grid = std::variant<Lattice1D, Lattice2D>;

enum class Parity { none, symmetric, antisymmetric };

/// Sorted eigenpairs of one Hamiltonian.
///
/// Eigenvalues ascend by real part, ties by imaginary part. Column j of
/// `eigenvectors` belongs to eigenvalue j and is normalised so that
/// weight * sum |psi_i|^2 = 1, with weight = a (1D) or a_x a_y (2D).
/// `residuals[j]` is ||H v - lambda v||_2 / ||H||_F for the unit 2-norm vector.
struct Spectrum {
  std::vector<cplx> eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  std::vector<double> residuals;
  std::vector<Parity> parity;     // filled by classify_parity
  std::vector<int> parity_index;  // quantum number within its parity class
  bool hermitian_path = false;
  Grid grid;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
  double weight() const noexcept;
  /// "0s", "1a" after classification; the plain sorted index otherwise.
  std::string label(int state) const;
  double max_residual() const noexcept;
};

struct DiagonalizeOptions {
  /// Only the lowest k eigenpairs. Uses a selective solver on the Hermitian
  /// path; the general path computes everything and truncates.
  std::optional<int> lowest;
};

/// Full (or lowest-k) eigendecomposition. The Hermitian path is chosen from
/// H.hermitian_hint() and reports exactly zero imaginary parts.
/// Throws NumericalError on non-finite input or solver non-convergence.
Spectrum diagonalize(const OperatorMatrix& h, const Grid& grid, const DiagonalizeOptions& options = {});

/// Labels each state s / a / none from the overlap a * sum psi(-x_i) psi(x_i)^*
/// (> 0.9, < -0.9, otherwise) and numbers the states within each class.
/// 1D only.
Spectrum classify_parity(Spectrum s);

/// Rotates every eigenvector by a unit phase so that its largest-magnitude
/// component (first one, within 1e-10 relative) is real and positive.
Spectrum phase_fix(Spectrum s);

/// Builds, diagonalizes, phase-fixes and (1D) parity-classifies.
Spectrum solve(const HamiltonianSpec& spec, const DiagonalizeOptions& options = {});

std::string_view parity_name(Parity p);

}  // namespace slacqm
