#include "slacqm/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <ostream>

#include "slacqm/error.hpp"

namespace slacqm {

double to_wavenumbers(double hartree) noexcept { return hartree * constants::hartree_in_wavenumbers; }

std::vector<cplx> shift_to_ground(std::span<const cplx> levels) {
  std::vector<cplx> out(levels.begin(), levels.end());
  if (out.empty()) return out;
  const cplx ground = out.front();
  for (auto& v : out) v -= ground;
  return out;
}

std::vector<LabeledLevel> labeled_levels(const Spectrum& s, double scale, bool shift) {
  const std::vector<cplx> values = shift ? shift_to_ground(s.eigenvalues) : s.eigenvalues;
  std::vector<LabeledLevel> out;
  out.reserve(values.size());
  for (int j = 0; j < s.size(); ++j) out.push_back({s.label(j), values[static_cast<std::size_t>(j)] * scale});
  return out;
}

const LevelComparison* ComparisonReport::row(std::string_view label) const {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

namespace {

bool numeric_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

ComparisonReport compare_to_reference(std::span<const LabeledLevel> computed, const ReferenceSpectrum& reference,
                                      Precision precision) {
  ComparisonReport report;
  report.reference_id = reference.id;
  for (const auto& ref : reference.levels) {
    const LabeledLevel* match = nullptr;
    if (numeric_label(ref.label)) {
      const auto idx = static_cast<std::size_t>(std::stoul(ref.label));
      if (idx < computed.size()) match = &computed[idx];
    } else {
      for (const auto& c : computed)
        if (c.label == ref.label) {
          match = &c;
          break;
        }
    }
    if (!match)
      throw ConfigError("no computed level matches reference label '" + ref.label + "' of " + reference.id,
                        "label");
    cplx value = match->value;
    if (precision == Precision::printed && ref.decimals >= 0) {
      const double scale = std::pow(10.0, ref.decimals);
      value = {std::round(value.real() * scale) / scale, std::round(value.imag() * scale) / scale};
    }
    LevelComparison row{.label = ref.label, .computed = value, .reference = ref.value};
    row.abs_dev = std::abs(row.computed - row.reference);
    const double mag = std::abs(row.reference);
    if (mag > 0.0) row.rel_dev = row.abs_dev / mag;
    else row.rel_dev = row.abs_dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    report.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    if (report.worst_abs < 0 || r.abs_dev > report.max_abs_dev) {
      report.max_abs_dev = r.abs_dev;
      report.worst_abs = static_cast<int>(i);
    }
    if (std::abs(r.reference) > 0.0) report.max_rel_dev = std::max(report.max_rel_dev, r.rel_dev);
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kConvergedRuns = 10;

void validate_scan(ScanMode mode, double fixed_value, std::span<const int> points, std::span<const int> states) {
  if (!(fixed_value > 0.0) || !std::isfinite(fixed_value))
    throw ConfigError("fixed width or spacing must be positive", mode == ScanMode::fixed_width ? "L" : "a");
  if (points.size() < 12)
    throw ConfigError("a convergence scan needs at least 12 grids, got " + std::to_string(points.size()), "N");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 1 || points[i] % 2 == 0)
      throw ConfigError("grid point counts must be odd and positive, got " + std::to_string(points[i]), "N");
    if (i > 0 && points[i] <= points[i - 1]) throw ConfigError("grid point counts must ascend", "N");
  }
  if (states.empty()) throw ConfigError("no states requested", "states");
  for (int s : states)
    if (s < 0 || s >= points.front())
      throw ConfigError("state " + std::to_string(s) + " is not available on the smallest grid (N=" +
                            std::to_string(points.front()) + ")",
                        "states");
}

}  // namespace

ConvergenceScan convergence_scan(const HamiltonianSpec& base, ScanMode mode, double fixed_value,
                                 std::span<const int> points, std::span<const int> states) {
  if (base.dimension() != 1) throw DimensionError("convergence scans are one-dimensional");
  validate_scan(mode, fixed_value, points, states);

  ConvergenceScan scan;
  scan.mode = mode;
  scan.fixed_value = fixed_value;
  scan.points.assign(points.begin(), points.end());
  scan.states.assign(states.begin(), states.end());
  for (int n : points) scan.widths.push_back(mode == ScanMode::fixed_width ? fixed_value : fixed_value * n);

  const int grids = static_cast<int>(points.size());
  const int top = *std::max_element(states.begin(), states.end()) + 1;
  scan.energies.assign(points.size(), std::vector<double>(states.size()));
  std::vector<std::exception_ptr> failures(points.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (int g = 0; g < grids; ++g) {
    const auto ug = static_cast<std::size_t>(g);
    try {
      HamiltonianSpec spec = base;
      spec.grid = make_lattice(scan.widths[ug], half_count_for(scan.points[ug]));
      const Spectrum s = diagonalize(build_hamiltonian(spec), spec.grid, {.lowest = top});
      for (std::size_t k = 0; k < states.size(); ++k)
        scan.energies[ug][k] = s.eigenvalues[static_cast<std::size_t>(states[k])].real();
    } catch (...) {
      failures[ug] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  const int tail = std::min(kConvergedRuns, grids);
  scan.converged.assign(states.size(), 0.0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    double sum = 0.0;
    for (int g = grids - tail; g < grids; ++g) sum += scan.energies[static_cast<std::size_t>(g)][k];
    scan.converged[k] = sum / tail;
  }
  scan.relative_errors.assign(points.size(), std::vector<double>(states.size()));
  for (std::size_t g = 0; g < points.size(); ++g)
    for (std::size_t k = 0; k < states.size(); ++k)
      scan.relative_errors[g][k] = std::abs(scan.energies[g][k] - scan.converged[k]) / std::abs(scan.converged[k]);
  return scan;
}

void ConvergenceScan::write_csv(std::ostream& out) const {
  const auto old = out.precision(12);
  out << "N,L,a,state,energy,converged,relative_error\n";
  for (std::size_t g = 0; g < points.size(); ++g)
    for (std::size_t k = 0; k < states.size(); ++k)
      out << points[g] << ',' << widths[g] << ',' << widths[g] / points[g] << ',' << states[k] << ','
          << energies[g][k] << ',' << converged[k] << ',' << relative_errors[g][k] << '\n';
  out.precision(old);
}

void ConvergenceScan::write_gnuplot(std::ostream& out) const {
  const auto old = out.precision(12);
  out << "# " << (mode == ScanMode::fixed_width ? "fixed L = " : "fixed a = ") << fixed_value << "\n# N L";
  for (int s : states) out << " err_state" << s;
  out << '\n';
  for (std::size_t g = 0; g < points.size(); ++g) {
    out << points[g] << ' ' << widths[g];
    for (double e : relative_errors[g]) out << ' ' << e;
    out << '\n';
  }
  out.precision(old);
}

ExponentialFit fit_exponential(std::span<const int> points, std::span<const double> errors, double plateau) {
  if (points.size() != errors.size()) throw DimensionError("points and errors differ in length");
  std::size_t end = 0;
  while (end < errors.size() && errors[end] >= plateau && errors[end] > 0.0) ++end;
  // Keep only the monotone descent into the plateau.
  std::size_t first = end == 0 ? 0 : end - 1;
  while (first > 0 && errors[first - 1] >= errors[first]) --first;
  const std::size_t used = end - first;
  if (used < 3) throw NumericalError("fewer than three descending points above the plateau " + std::to_string(plateau));

  double mx = 0.0, my = 0.0;
  for (std::size_t i = first; i < end; ++i) {
    mx += points[i];
    my += std::log10(errors[i]);
  }
  mx /= static_cast<double>(used);
  my /= static_cast<double>(used);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = first; i < end; ++i) {
    const double dx = points[i] - mx;
    const double dy = std::log10(errors[i]) - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  ExponentialFit fit;
  fit.first = static_cast<int>(first);
  fit.used = static_cast<int>(used);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.correlation = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
  return fit;
}

// ---------------------------------------------------------------------------

std::vector<double> completeness_curve(const Spectrum& s, int ground) {
  const auto* g = std::get_if<Lattice1D>(&s.grid);
  if (!g) throw DimensionError("completeness check needs a one-dimensional grid");
  const int n = g->size();
  if (s.size() != n) throw ConfigError("completeness check needs the full spectrum", "states");
  if (ground < 0 || ground >= n) throw ConfigError("ground index out of range", "ground");

  const double a = g->spacing();
  const Eigen::Map<const Eigen::VectorXd> x(g->positions().data(), n);
  const Eigen::VectorXcd psi0 = s.eigenvectors.col(ground);
  const Eigen::VectorXcd x_psi0 = x.cast<cplx>().cwiseProduct(psi0);
  const double x2 = a * x_psi0.squaredNorm();

  // bra[k] = <0|x|k>, ket[k] = <k|x|0>
  const Eigen::VectorXcd bra = a * (s.eigenvectors.transpose() * x_psi0.conjugate());
  const Eigen::VectorXcd ket = a * (s.eigenvectors.adjoint() * x_psi0);

  std::vector<double> eps(static_cast<std::size_t>(n));
  cplx partial = 0.0;
  for (int k = 0; k < n; ++k) {
    partial += bra(k) * ket(k);
    eps[static_cast<std::size_t>(k)] = std::abs(x2 - partial) / x2;
  }
  return eps;
}

double completeness_error(const Spectrum& s, int ground, int n_max) {
  const int n = s.size();
  if (n_max < 0 || n_max > n - 1)
    throw ConfigError("n_max " + std::to_string(n_max) + " exceeds N-1 = " + std::to_string(n - 1), "n_max");
  return completeness_curve(s, ground)[static_cast<std::size_t>(n_max)];
}

}  // namespace slacqm
