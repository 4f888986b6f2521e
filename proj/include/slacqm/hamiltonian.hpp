#pragma once

#include <optional>
#include <string>
#include <variant>

#include "slacqm/lattice.hpp"
#include "slacqm/operator_matrix.hpp"
#include "slacqm/operators.hpp"

namespace slacqm {

// Kinetic-energy orderings for a position-dependent mass m(x). Atomic units, hbar = 1.

/// 1/4 (m^a p m^b p m^c + m^c p m^b p m^a) with b = -1 - a - c. Hermitian.
struct VonRoos {
  double alpha = 0.0;
  double gamma = 0.0;
  double beta() const noexcept { return -1.0 - alpha - gamma; }
  friend bool operator==(const VonRoos&, const VonRoos&) = default;
};
/// 1/2 p (1/m) p; same as VonRoos{0, 0}.
struct MassSandwich {
  friend bool operator==(const MassSandwich&, const MassSandwich&) = default;
};
/// 1/4 (m^-1 p^2 + p^2 m^-1); same as VonRoos{-1, 0}.
struct InverseMassAnticommutator {
  friend bool operator==(const InverseMassAnticommutator&, const InverseMassAnticommutator&) = default;
};
/// (1/2m) p^2. Not Hermitian.
struct MassLeft {
  friend bool operator==(const MassLeft&, const MassLeft&) = default;
};
/// p^2 (1/2m). Not Hermitian.
struct MassRight {
  friend bool operator==(const MassRight&, const MassRight&) = default;
};
/// p^2 / (2 mu); the mass field is ignored.
struct ConstantMass {
  double mu = 1.0;
  friend bool operator==(const ConstantMass&, const ConstantMass&) = default;
};

using KineticOrdering =
    std::variant<VonRoos, MassSandwich, InverseMassAnticommutator, MassLeft, MassRight, ConstantMass>;

std::string ordering_name(const KineticOrdering& ordering);
bool is_hermitian_ordering(const KineticOrdering& ordering) noexcept;
/// The von Roos exponents behind an ordering, if it belongs to that family.
std::optional<VonRoos> von_roos_form(const KineticOrdering& ordering) noexcept;

/// Wraps a one-variable function as a two-variable field ignoring y.
Field2D field_1d(Field1D f);

struct HamiltonianSpec {
  std::variant<Lattice1D, Lattice2D> grid;
  KineticOrdering ordering = ConstantMass{1.0};
  Field2D mass;  // a.u.; unused for ConstantMass
  Field2D potential_real;
  std::optional<Field2D> potential_imag;

  int dimension() const noexcept { return std::holds_alternative<Lattice1D>(grid) ? 1 : 2; }
  int size() const noexcept;
};

/// Kinetic term only. Throws NumericalError for a non-finite or zero mass on the
/// grid, or a fractional mass power of a negative mass.
OperatorMatrix build_kinetic(const HamiltonianSpec& spec);

/// T + diag(V_real) + i diag(V_imag). Hermitian hint iff the ordering is
/// Hermitian and there is no imaginary potential.
OperatorMatrix build_hamiltonian(const HamiltonianSpec& spec);

/// Reverses the grid index (x -> -x on the symmetric lattice).
OperatorMatrix parity_matrix(const Lattice1D& g);

}  // namespace slacqm
