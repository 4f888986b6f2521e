#include "slacqm/bench_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "slacqm/analysis.hpp"
#include "slacqm/eig.hpp"
#include "slacqm/error.hpp"
#include "slacqm/problems.hpp"

namespace slacqm {

bool BenchOutcome::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const BenchCheck& c) { return c.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

std::vector<LabeledLevel> ammonia_levels(std::string_view id, const KineticOrdering& ordering) {
  const ProblemDefinition p = builtin_problem(id, {.ordering = ordering});
  return labeled_levels(solve(p.spec), constants::hartree_in_wavenumbers, true);
}

// Every reference level within `tol` (cm^-1); `tol_0a` for the 0a doublet.
void check_levels(Verdict& v, std::span<const LabeledLevel> computed, std::string_view ref_id, double tol,
                  double tol_0a) {
  const ComparisonReport r = compare_to_reference(computed, reference_spectrum(ref_id));
  for (const auto& row : r.rows) {
    const double limit = row.label == "0a" ? tol_0a : tol;
    v.require(row.abs_dev <= limit, std::string(ref_id) + " " + row.label + " off by " + fmt(row.abs_dev, 3));
  }
}

const LabeledLevel& level(std::span<const LabeledLevel> levels, std::string_view label) {
  for (const auto& l : levels)
    if (l.label == label) return l;
  throw NumericalError("state " + std::string(label) + " not found");
}

constexpr std::string_view kAmmoniaLabels[] = {"0s", "0a", "1s", "1a", "2s", "2a", "3s", "3a"};

BenchCheck nh3_table() {
  Verdict v;
  const auto start = Clock::now();
  const auto levels = ammonia_levels("nh3", MassLeft{});
  const double elapsed = seconds_since(start);
  check_levels(v, levels, "nh3.mass_left", 0.01, 0.005);
  v.require(elapsed < 5.0, "took " + fmt(elapsed, 3) + " s");
  return {"nh3 levels, (1/2m) p^2 ordering", v.ok, v.detail.str(), 0.0};
}

BenchCheck nh3_orderings() {
  Verdict v;
  const std::pair<KineticOrdering, std::string_view> runs[] = {
      {MassSandwich{}, "nh3.mass_sandwich"},
      {InverseMassAnticommutator{}, "nh3.inverse_mass_anticommutator"},
      {MassLeft{}, "nh3.mass_left"},
      {MassRight{}, "nh3.mass_right"},
  };
  std::vector<std::vector<LabeledLevel>> all;
  for (const auto& [ordering, ref] : runs) {
    all.push_back(ammonia_levels("nh3", ordering));
    check_levels(v, all.back(), ref, 0.01, 0.01);
  }
  for (std::string_view label : kAmmoniaLabels) {
    const double d = std::abs(level(all[2], label).value - level(all[3], label).value);
    v.require(d <= 0.005, "left/right orderings differ by " + fmt(d, 3) + " on " + std::string(label));
  }
  double lo = 1e300, hi = -1e300;
  for (const auto& l : all) {
    lo = std::min(lo, level(l, "0a").value.real());
    hi = std::max(hi, level(l, "0a").value.real());
  }
  v.require(hi - lo <= 0.005, "0a spread across orderings " + fmt(hi - lo, 3));
  return {"nh3 levels, four mass orderings", v.ok, v.detail.str(), 0.0};
}

BenchCheck nd3_table() {
  Verdict v;
  const auto pdm = ammonia_levels("nd3", MassLeft{});
  check_levels(v, pdm, "nd3.mass_left", 0.1, 0.1);
  check_levels(v, ammonia_levels("nd3", ammonia_constant_mass_ordering(constants::mass_deuterium)),
               "nd3.constant_mass", 0.1, 0.1);
  // The experimental doublet splitting is known to two decimals only.
  const ComparisonReport exp = compare_to_reference(pdm, reference_spectrum("nd3.experiment"), Precision::printed);
  v.require(exp.max_rel_dev <= 0.007, "relative deviation from experiment " + fmt(exp.max_rel_dev, 3));
  return {"nd3 levels, position-dependent and constant mass", v.ok, v.detail.str(), 0.0};
}

BenchCheck morse_table() {
  Verdict v;
  const Spectrum coarse = solve(builtin_problem("morse").spec);
  const ReferenceSpectrum table = reference_spectrum("morse.grid_111");
  for (const auto& ref : table.levels) {
    const double e = coarse.eigenvalues[std::stoul(ref.label)].real();
    // Printed to ten decimals: agree within half a unit in the last place.
    const double tol = ref.label == "5" ? 1e-10 : 5e-11;
    v.require(std::abs(e - ref.value.real()) <= tol, "N=111 level " + ref.label + " = " + fmt(e, 12));
  }
  const Spectrum fine = solve(builtin_problem("morse", {.points = 201, .width = 140.0, .morse_r_eq = -60.0}).spec);
  for (const auto& ref : reference_spectrum("morse.exact").levels) {
    const double e = fine.eigenvalues[std::stoul(ref.label)].real();
    v.require(std::abs(e - ref.value.real()) <= 1e-10, "N=201 level " + ref.label + " = " + fmt(e, 12));
  }
  return {"morse levels", v.ok, v.detail.str(), 0.0};
}

BenchCheck morse_completeness() {
  Verdict v;
  const Spectrum s = solve(builtin_problem("morse", {.points = 301, .width = 140.0, .morse_r_eq = -60.0}).spec);
  const std::vector<double> eps = completeness_curve(s, 0);
  v.require(eps[5] >= 1e-7 && eps[5] <= 1e-5, "eps(5) = " + fmt(eps[5], 3));
  for (std::size_t n = 0; n + 1 < eps.size() && eps[n] >= 1e-13; ++n)
    v.require(eps[n + 1] <= eps[n], "eps increases at n_max = " + std::to_string(n + 1));
  for (std::size_t n = 117; n < eps.size(); ++n)
    v.require(eps[n] < 1e-14, "eps(" + std::to_string(n) + ") = " + fmt(eps[n], 3));
  return {"morse completeness", v.ok, v.detail.str(), 0.0};
}

BenchCheck pt_spectra() {
  Verdict v;
  const Spectrum pt = solve(builtin_problem("pt_oscillator").spec);
  const Spectrum npt = solve(builtin_problem("non_pt_oscillator").spec);
  for (int n = 0; n < 45; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const double exact_pt = 2.0 * n + 1.25;
    const double exact_npt = 2.0 * n + 1.0;
    const cplx a = pt.eigenvalues[un];
    const cplx b = npt.eigenvalues[un];
    v.require(std::abs(a.real() - exact_pt) / exact_pt < 1e-12, "pt level " + std::to_string(n));
    v.require(std::abs(b.real() - exact_npt) / exact_npt < 1e-12, "non-pt level " + std::to_string(n));
    v.require(std::abs(a.imag()) <= 1e-9, "pt level " + std::to_string(n) + " Im " + fmt(a.imag(), 3));
    v.require(std::abs(std::abs(b.imag()) - 0.5) <= 1e-10,
              "non-pt level " + std::to_string(n) + " Im " + fmt(b.imag(), 12));
  }
  return {"pt-symmetric and non-pt oscillators", v.ok, v.detail.str(), 0.0};
}

}  // namespace

BenchOutcome run_reference_bench(std::ostream& log) {
  const std::function<BenchCheck()> suite[] = {nh3_table, nh3_orderings, nd3_table,
                                               morse_table, morse_completeness, pt_spectra};
  BenchOutcome out;
  const auto start = Clock::now();
  for (const auto& run : suite) {
    const auto t0 = Clock::now();
    BenchCheck c;
    try {
      c = run();
    } catch (const Error& e) {
      c = {"(aborted)", false, e.what(), 0.0};
    }
    c.seconds = seconds_since(t0);
    log << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << fmt(c.seconds, 3) << " s)";
    if (!c.detail.empty()) log << ": " << c.detail;
    log << '\n' << std::flush;
    out.checks.push_back(std::move(c));
  }
  out.seconds = seconds_since(start);
  return out;
}

}  // namespace slacqm
