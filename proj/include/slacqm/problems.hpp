#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slacqm/hamiltonian.hpp"

namespace slacqm {

namespace constants {

inline constexpr double hartree_in_wavenumbers = 219474.63137;  // cm^-1 per Hartree
inline constexpr double bohr_in_angstrom = 0.52917721092;
inline constexpr double amu_in_au = 1822.888;  // electron masses per amu
inline constexpr double mass_hydrogen = 1.007825035;  // amu
inline constexpr double mass_nitrogen = 14.003074;  // amu
inline constexpr double mass_deuterium = 2.013553212712;  // amu
/// N-H distance of the planar configuration, in Angstrom.
inline constexpr double nh_distance_angstrom = 1.00410198;
/// Equilibrium HNH-plane angle, 22 deg 13 arcmin, in degrees.
inline constexpr double beta_e_degrees = 22.0 + 13.0 / 60.0;

double nh_distance_bohr();
double beta_e_radians();

/// Coefficients K_j of V(z) = sum_j K_j z^j, z = (x in Angstrom)^2, V in Hartree.
inline constexpr std::array<double, 11> nh3_coefficients = {
    0.0,
    -1.2760373471398e-01,
    4.7973549262032e-01,
    -4.4967805753691e-01,
    3.4048981035460e+00,
    -2.5268066877745e+01,
    1.1565093681631e+02,
    -3.2323821164423e+02,
    5.4331165379878e+02,
    -5.0630533518111e+02,
    2.0128292638493e+02,
};

}  // namespace constants

/// Double-well inversion potential (Hartree) at x (bohr); even in x.
double nh3_potential(double x);

/// Position-dependent reduced mass in a.u. for |x| < r0. Throws NumericalError
/// at or beyond the pole |x| >= r0.
double nh3_mass(double x, double light_amu, double heavy_amu);

/// Same formula evaluated on both sides of the pole (the mass turns negative
/// for |x| > r0). Throws NumericalError only within machine distance of the pole.
double nh3_mass_extended(double x, double light_amu, double heavy_amu);

/// Constant reduced mass 3mM/(3m+M) (1 + 3m sin^2(beta)/M), in a.u.
double constant_reduced_mass(double light_amu, double heavy_amu, double beta_e);

double morse_potential(double r, double depth, double alpha, double r_eq);
/// Number of bound levels of the Morse oscillator.
int morse_bound_state_count(double depth, double alpha, double mu);
/// Exact Morse level n (hbar = 1). Throws ConfigError if n is not bound.
double morse_exact_level(double depth, double alpha, double mu, int n);

enum class EnergyUnit { hartree, model };

struct ProblemDefinition {
  std::string id;
  std::string description;
  HamiltonianSpec spec;
  EnergyUnit unit = EnergyUnit::model;
  std::vector<std::string> references;  // ids accepted by reference_spectrum()
};

struct ProblemOverrides {
  std::optional<int> points;    // N, or N_x (and N_y unless points_y is set)
  std::optional<double> width;  // L, or L_x (and L_y unless width_y is set)
  std::optional<int> points_y;
  std::optional<double> width_y;
  std::optional<KineticOrdering> ordering;
  std::optional<double> morse_r_eq;
};

std::vector<std::string> builtin_ids();

/// One of the built-in benchmark problems with its default grid and ordering.
/// Throws ConfigError for unknown ids or overrides that do not apply.
ProblemDefinition builtin_problem(std::string_view id, const ProblemOverrides& overrides = {});

/// Ordering for the ammonia isotopologues with the constant reduced mass.
KineticOrdering ammonia_constant_mass_ordering(double light_amu);

inline constexpr double henon_heiles_coupling_default() { return 0.11180339887498948; }  // 1/sqrt(80)
double henon_heiles_potential(double x, double y, double coupling = henon_heiles_coupling_default());

// ---------------------------------------------------------------------------
// Reference spectra

enum class ReferenceSource { analytic, tabulated };

struct ReferenceLevel {
  std::string label;
  std::complex<double> value;
  int decimals = -1;  // digits printed after the decimal point; -1 for exact values
};

struct ReferenceSpectrum {
  std::string id;
  std::string problem;
  ReferenceSource source = ReferenceSource::tabulated;
  std::string unit;      // "cm-1", "hartree" or "model"
  bool shifted = false;  // relative to the ground state
  std::string citation;
  std::vector<ReferenceLevel> levels;

  const ReferenceLevel* find(std::string_view label) const;
};

/// Parses the plain-text reference table format (see data/reference_spectra.txt).
std::vector<ReferenceSpectrum> parse_reference_table(std::string_view text);

/// Tabulated spectra compiled into the library.
const std::vector<ReferenceSpectrum>& tabulated_references();

/// Tabulated or analytic reference by id ("nh3.mass_left", "pt_oscillator.exact", ...).
ReferenceSpectrum reference_spectrum(std::string_view id);

}  // namespace slacqm
