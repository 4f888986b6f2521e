#include "slacqm/eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "slacqm/error.hpp"
#include "slacqm/hamiltonian.hpp"
#include "slacqm/kernels.hpp"

namespace slacqm {

namespace {

struct RawEigen {
  std::vector<cplx> values;
  Eigen::MatrixXcd vectors;  // unit 2-norm columns
};

[[noreturn]] void solver_failed(const char* routine, lapack_int info, int n) {
  if (info < 0) throw NumericalError(std::string(routine) + ": illegal argument " + std::to_string(-info));
  throw NumericalError(std::string(routine) + " did not converge (" + std::to_string(std::max(0, n - info)) + " of " +
                       std::to_string(n) + " eigenvalues converged)");
}

int clamp_count(const DiagonalizeOptions& o, int n) {
  if (!o.lowest) return n;
  if (*o.lowest < 1) throw ConfigError("number of requested states must be >= 1", "states");
  return std::min(*o.lowest, n);
}

RawEigen real_symmetric(const Eigen::MatrixXd& h, int k) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXd a = h;
  RawEigen out;
  std::vector<double> w(static_cast<std::size_t>(n));
  if (k == n) {
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
    if (info != 0) solver_failed("dsyevd", info, n);
    out.vectors = a.cast<cplx>();
  } else {
    Eigen::MatrixXd z(n, k);
    std::vector<lapack_int> support(static_cast<std::size_t>(2 * k));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, k, 0.0,
                                           &found, w.data(), z.data(), n, support.data());
    if (info != 0) solver_failed("dsyevr", info, n);
    out.vectors = z.leftCols(found).cast<cplx>();
    w.resize(static_cast<std::size_t>(found));
  }
  out.values.assign(w.begin(), w.end());
  return out;
}

RawEigen complex_hermitian(const Eigen::MatrixXcd& h, int k) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXcd a = h;
  RawEigen out;
  std::vector<double> w(static_cast<std::size_t>(n));
  if (k == n) {
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
    if (info != 0) solver_failed("zheevd", info, n);
    out.vectors = std::move(a);
  } else {
    Eigen::MatrixXcd z(n, k);
    std::vector<lapack_int> support(static_cast<std::size_t>(2 * k));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, k, 0.0,
                                           &found, w.data(), z.data(), n, support.data());
    if (info != 0) solver_failed("zheevr", info, n);
    out.vectors = z.leftCols(found);
    w.resize(static_cast<std::size_t>(found));
  }
  out.values.assign(w.begin(), w.end());
  return out;
}

RawEigen real_general(const Eigen::MatrixXd& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXd a = h;
  std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
  Eigen::MatrixXd vr(n, n);
  const lapack_int info =
      LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, wr.data(), wi.data(), nullptr, 1, vr.data(), n);
  if (info != 0) solver_failed("dgeev", info, n);

  RawEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (wi[uj] == 0.0) {
      out.values[uj] = cplx(wr[uj], 0.0);
      out.vectors.col(j) = vr.col(j).cast<cplx>();
    } else {
      // Conjugate pair stored as (re, im) columns j, j+1.
      out.values[uj] = cplx(wr[uj], wi[uj]);
      out.values[uj + 1] = cplx(wr[uj + 1], wi[uj + 1]);
      for (int i = 0; i < n; ++i) {
        out.vectors(i, j) = cplx(vr(i, j), vr(i, j + 1));
        out.vectors(i, j + 1) = cplx(vr(i, j), -vr(i, j + 1));
      }
      ++j;
    }
  }
  return out;
}

RawEigen complex_general(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXcd a = h;
  RawEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, out.values.data(), nullptr, 1,
                                        out.vectors.data(), n);
  if (info != 0) solver_failed("zgeev", info, n);
  return out;
}

bool eigen_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

double Spectrum::weight() const noexcept {
  if (const auto* g = std::get_if<Lattice1D>(&grid)) return g->spacing();
  return std::get<Lattice2D>(grid).cell_area();
}

std::string Spectrum::label(int state) const {
  const auto s = static_cast<std::size_t>(state);
  if (s < parity.size() && parity[s] != Parity::none)
    return std::to_string(parity_index[s]) + (parity[s] == Parity::symmetric ? "s" : "a");
  return std::to_string(state);
}

double Spectrum::max_residual() const noexcept {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::symmetric: return "s";
    case Parity::antisymmetric: return "a";
    case Parity::none: break;
  }
  return "none";
}

Spectrum diagonalize(const OperatorMatrix& h, const Grid& grid, const DiagonalizeOptions& options) {
  const int n = h.dim();
  const int grid_size = std::visit([](const auto& g) { return g.size(); }, grid);
  if (grid_size != n)
    throw DimensionError("matrix dimension " + std::to_string(n) + " does not match grid size " +
                         std::to_string(grid_size));
  const bool finite = h.is_real() ? h.real().allFinite() : h.complex().allFinite();
  if (!finite) throw NumericalError("Hamiltonian matrix has non-finite entries");
  const int k = clamp_count(options, n);

  RawEigen raw;
  if (h.hermitian_hint())
    raw = h.is_real() ? real_symmetric(h.real(), k) : complex_hermitian(h.complex(), k);
  else
    raw = h.is_real() ? real_general(h.real()) : complex_general(h.complex());

  const auto count = static_cast<int>(raw.values.size());
  std::vector<int> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return eigen_less(raw.values[static_cast<std::size_t>(a)], raw.values[static_cast<std::size_t>(b)]);
  });
  const int keep = std::min(k, count);
  order.resize(static_cast<std::size_t>(keep));

  Spectrum s{.grid = grid};
  s.hermitian_path = h.hermitian_hint();
  s.eigenvalues.resize(static_cast<std::size_t>(keep));
  s.eigenvectors.resize(n, keep);
  for (int j = 0; j < keep; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    s.eigenvalues[static_cast<std::size_t>(j)] = raw.values[static_cast<std::size_t>(src)];
    s.eigenvectors.col(j) = raw.vectors.col(src);
    s.eigenvectors.col(j) /= s.eigenvectors.col(j).norm();
  }
  raw = RawEigen{};

  const double hnorm = h.frobenius_norm();
  s.residuals = h.is_real() ? kernels::parallel::residual_norms(h.real(), s.eigenvectors, s.eigenvalues)
                            : kernels::parallel::residual_norms(h.complex(), s.eigenvectors, s.eigenvalues);
  if (hnorm > 0.0)
    for (double& r : s.residuals) r /= hnorm;

  s.eigenvectors /= std::sqrt(s.weight());
  return s;
}

Spectrum classify_parity(Spectrum s) {
  const auto* g = std::get_if<Lattice1D>(&s.grid);
  if (!g) throw DimensionError("parity classification needs a one-dimensional grid");
  const int n = g->size();
  s.parity.assign(static_cast<std::size_t>(s.size()), Parity::none);
  s.parity_index.assign(static_cast<std::size_t>(s.size()), 0);
  int count_s = 0, count_a = 0, count_none = 0;
  for (int j = 0; j < s.size(); ++j) {
    cplx overlap = 0.0;
    for (int i = 0; i < n; ++i) overlap += s.eigenvectors(g->mirror(i), j) * std::conj(s.eigenvectors(i, j));
    overlap *= g->spacing();
    const auto uj = static_cast<std::size_t>(j);
    if (overlap.real() > 0.9) {
      s.parity[uj] = Parity::symmetric;
      s.parity_index[uj] = count_s++;
    } else if (overlap.real() < -0.9) {
      s.parity[uj] = Parity::antisymmetric;
      s.parity_index[uj] = count_a++;
    } else {
      s.parity_index[uj] = count_none++;
    }
  }
  return s;
}

Spectrum phase_fix(Spectrum s) {
  const Eigen::Index n = s.eigenvectors.rows();
  for (Eigen::Index j = 0; j < s.eigenvectors.cols(); ++j) {
    auto col = s.eigenvectors.col(j);
    double biggest = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) biggest = std::max(biggest, std::abs(col(i)));
    if (biggest == 0.0) continue;
    Eigen::Index pick = 0;
    while (std::abs(col(pick)) < biggest * (1.0 - 1e-10)) ++pick;
    const double mag = std::abs(col(pick));
    const cplx phase = std::conj(col(pick)) / mag;
    if (phase == cplx(1.0, 0.0)) continue;
    if (phase.imag() == 0.0) {
      col *= phase.real();
    } else {
      col *= phase;
    }
    col(pick) = cplx(mag, 0.0);
  }
  return s;
}

Spectrum solve(const HamiltonianSpec& spec, const DiagonalizeOptions& options) {
  Spectrum s = phase_fix(diagonalize(build_hamiltonian(spec), spec.grid, options));
  if (spec.dimension() == 1) s = classify_parity(std::move(s));
  return s;
}

}  // namespace slacqm
