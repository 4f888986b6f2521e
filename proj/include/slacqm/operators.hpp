#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "slacqm/kernels.hpp"
#include "slacqm/lattice.hpp"
#include "slacqm/operator_matrix.hpp"

namespace slacqm {

using kernels::Axis;

using Field1D = std::function<double(double)>;
using Field2D = std::function<double(double, double)>;

/// Real antisymmetric matrix i*p on the lattice (the SLAC derivative up to a sign).
OperatorMatrix i_momentum_matrix(const Lattice1D& g);

/// Hermitian momentum operator p = -i (i p); zero diagonal.
OperatorMatrix momentum_matrix(const Lattice1D& g);

/// p^2 from its closed form (not by squaring p). Real symmetric, positive semidefinite.
OperatorMatrix momentum_squared_matrix(const Lattice1D& g);

/// Translation operator exp(i alpha p): (psi)(x) -> psi(x + alpha). Real and unitary.
OperatorMatrix exp_ialpha_p(const Lattice1D& g, double alpha);

/// f(x_i) for every grid point; throws NumericalError naming the first non-finite point.
std::vector<double> sample_on_grid(const Lattice1D& g, const Field1D& f, std::string_view what = "function");
std::vector<double> sample_on_grid(const Lattice2D& g, const Field2D& f, std::string_view what = "function");

OperatorMatrix diagonal_matrix(std::span<const double> values);
OperatorMatrix diagonal_from_function(const Lattice1D& g, const Field1D& f);
OperatorMatrix diagonal_from_function(const Lattice2D& g, const Field2D& f);

/// Embeds a one-axis operator into the tensor-product space:
/// (A_x)_{IK} = A_{i1 k1} delta_{i2 k2}, (A_y)_{IK} = delta_{i1 k1} A_{i2 k2}.
OperatorMatrix embed_2d(const OperatorMatrix& a, Axis axis, const Lattice2D& g);

}  // namespace slacqm
