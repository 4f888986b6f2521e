#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "slacqm/eig.hpp"
#include "slacqm/hamiltonian.hpp"
#include "slacqm/problems.hpp"

namespace slacqm {

double to_wavenumbers(double hartree) noexcept;

/// E_n - E_0 for every level (E_0 is the lowest sorted eigenvalue).
std::vector<cplx> shift_to_ground(std::span<const cplx> levels);

struct LabeledLevel {
  std::string label;
  cplx value;
};

/// Eigenvalues tagged with Spectrum::label, multiplied by `scale` and
/// optionally shifted to the ground state first.
std::vector<LabeledLevel> labeled_levels(const Spectrum& s, double scale = 1.0, bool shift = false);

struct LevelComparison {
  std::string label;
  cplx computed;
  cplx reference;
  double abs_dev = 0.0;
  double rel_dev = 0.0;  // abs_dev / |reference|; 0 when both vanish, +inf when only the reference does
};

struct ComparisonReport {
  std::string reference_id;
  std::vector<LevelComparison> rows;
  int worst_abs = -1;  // row index of the largest absolute deviation
  double max_abs_dev = 0.0;
  double max_rel_dev = 0.0;  // over rows with a non-zero reference

  const LevelComparison* row(std::string_view label) const;
};

/// `printed` rounds each computed value to the decimals its reference value
/// was printed with before taking deviations.
enum class Precision { full, printed };

/// Matches computed levels to reference levels. Numeric reference labels are
/// matched by sorted position, others ("0s", "1a") by label. Throws
/// ConfigError if a reference level has no computed counterpart.
ComparisonReport compare_to_reference(std::span<const LabeledLevel> computed, const ReferenceSpectrum& reference,
                                      Precision precision = Precision::full);

// ---------------------------------------------------------------------------
// Convergence

enum class ScanMode { fixed_width, fixed_spacing };

struct ConvergenceScan {
  ScanMode mode = ScanMode::fixed_width;
  double fixed_value = 0.0;  // L or a
  std::vector<int> points;
  std::vector<double> widths;
  std::vector<int> states;
  std::vector<std::vector<double>> energies;         // [grid][state], real parts
  std::vector<double> converged;                     // [state], mean of the 10 largest grids
  std::vector<std::vector<double>> relative_errors;  // [grid][state]

  void write_csv(std::ostream& out) const;
  /// Whitespace-separated "N L err..." table with a comment header for gnuplot.
  void write_gnuplot(std::ostream& out) const;
};

/// Solves `base` on a sequence of odd point counts (ascending, at least 12),
/// either at fixed width L or at fixed spacing a (L = a N), and reports the
/// relative error of each requested state against the converged estimate.
ConvergenceScan convergence_scan(const HamiltonianSpec& base, ScanMode mode, double fixed_value,
                                 std::span<const int> points, std::span<const int> states);

struct ExponentialFit {
  double slope = 0.0;      // d log10(err) / dN
  double intercept = 0.0;  // log10(err) at N = 0
  double correlation = 0.0;
  int first = 0;  // index of the first point in the fit
  int used = 0;   // number of points in the fit
};

/// Least-squares fit of log10(err) against N over the pre-plateau region: the
/// leading points whose error stays at or above `plateau`, trimmed to the
/// monotone non-increasing run that ends where the plateau starts. Needs at
/// least three such points.
ExponentialFit fit_exponential(std::span<const int> points, std::span<const double> errors, double plateau);

// ---------------------------------------------------------------------------
// Completeness

/// eps(n_max) = |<0|x^2|0> - sum_{n <= n_max} <0|x|n><n|x|0>| / <0|x^2|0>
/// for every n_max in [0, N). Needs a full 1D spectrum.
std::vector<double> completeness_curve(const Spectrum& s, int ground = 0);

double completeness_error(const Spectrum& s, int ground, int n_max);

}  // namespace slacqm
