#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "slacqm/analysis.hpp"
#include "slacqm/eig.hpp"
#include "slacqm/error.hpp"
#include "slacqm/problems.hpp"

using namespace slacqm;
namespace c = slacqm::constants;

namespace {

double r0_bohr() { return 1.00410198 / 0.52917721092; }

// Minimum of the double well on (0, r0) by scan plus golden-section refinement.
double well_minimum() {
  double best_x = 0.0, best = 0.0;
  for (int i = 1; i < 20000; ++i) {
    const double x = r0_bohr() * i / 20000.0;
    if (const double v = nh3_potential(x); v < best) {
      best = v;
      best_x = x;
    }
  }
  double lo = best_x - r0_bohr() / 20000.0, hi = best_x + r0_bohr() / 20000.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (nh3_potential(a) < nh3_potential(b)) hi = b;
    else lo = a;
  }
  return nh3_potential(0.5 * (lo + hi));
}

}  // namespace

TEST_SUITE("problems") {
  TEST_CASE("golden constants") {
    CHECK(c::hartree_in_wavenumbers == 219474.63137);
    CHECK(c::bohr_in_angstrom == 0.52917721092);
    CHECK(c::amu_in_au == 1822.888);
    CHECK(c::mass_hydrogen == 1.007825035);
    CHECK(c::mass_nitrogen == 14.003074);
    CHECK(c::mass_deuterium == 2.013553212712);
    CHECK(c::nh_distance_angstrom == 1.00410198);
    CHECK(c::nh_distance_bohr() == 1.00410198 / 0.52917721092);
    CHECK(c::beta_e_radians() == (22.0 + 13.0 / 60.0) * std::numbers::pi / 180.0);
    CHECK(c::nh3_coefficients.size() == 11);
    CHECK(c::nh3_coefficients[0] == 0.0);
    CHECK(c::nh3_coefficients[1] == -1.2760373471398e-01);
    CHECK(c::nh3_coefficients[2] == 4.7973549262032e-01);
    CHECK(c::nh3_coefficients[10] == 2.0128292638493e+02);
  }

  TEST_CASE("ammonia potential") {
    CHECK(nh3_potential(0.0) == 0.0);
    for (int i = 0; i <= 400; ++i) {
      const double x = -2.0 + 0.01 * i;
      CHECK(nh3_potential(x) == nh3_potential(-x));
    }
    const double barrier = (nh3_potential(0.0) - well_minimum()) * c::hartree_in_wavenumbers;
    CHECK(std::abs(barrier - 2013.5) <= 0.5);
  }

  TEST_CASE("ammonia potential is the polynomial in z = (x in Angstrom)^2") {
    for (double x : {0.1, 0.5, 1.0, 1.7}) {
      const double z = std::pow(x * 0.52917721092, 2);
      double v = 0.0;
      for (int j = 0; j <= 10; ++j) v += c::nh3_coefficients[static_cast<std::size_t>(j)] * std::pow(z, j);
      CHECK(nh3_potential(x) == doctest::Approx(v).epsilon(1e-13));
    }
  }

  TEST_CASE("position-dependent reduced mass") {
    const double m = c::mass_hydrogen, big = c::mass_nitrogen;
    const double at_origin = 3.0 * m * big / (3.0 * m + big);
    CHECK(std::abs(at_origin - 2.486588) <= 1e-5);
    CHECK(nh3_mass(0.0, m, big) == doctest::Approx(at_origin * 1822.888).epsilon(1e-15));
    double previous = nh3_mass(0.0, m, big);
    for (int i = 1; i < 1000; ++i) {
      const double x = r0_bohr() * i / 1000.0;
      const double mu = nh3_mass(x, m, big);
      CHECK(mu == nh3_mass(-x, m, big));
      CHECK(mu > previous);
      const double expected = (at_origin + 3.0 * m * x * x / (r0_bohr() * r0_bohr() - x * x)) * 1822.888;
      CHECK(mu == doctest::Approx(expected).epsilon(1e-12));
      previous = mu;
    }
    CHECK_THROWS_AS(nh3_mass(r0_bohr(), m, big), NumericalError);
    CHECK_THROWS_AS(nh3_mass(-2.0, m, big), NumericalError);
    CHECK(nh3_mass_extended(2.0, m, big) < 0.0);
    CHECK_THROWS_AS(nh3_mass_extended(r0_bohr(), m, big), NumericalError);
  }

  TEST_CASE("constant reduced mass") {
    const double m = c::mass_hydrogen, big = c::mass_nitrogen;
    const double base = 3.0 * m * big / (3.0 * m + big) * 1822.888;
    CHECK(constant_reduced_mass(m, big, 0.0) == doctest::Approx(base).epsilon(1e-15));
    const double s = std::sin((22.0 + 13.0 / 60.0) * std::numbers::pi / 180.0);
    CHECK(std::abs(s * s - 0.142968) <= 1e-6);
    const double factor = 1.0 + 3.0 * m * s * s / big;
    CHECK(std::abs(factor - 1.030869) <= 1e-6);
    CHECK(constant_reduced_mass(m, big, c::beta_e_radians()) == doctest::Approx(base * factor).epsilon(1e-14));
    const auto o = ammonia_constant_mass_ordering(m);
    REQUIRE(std::holds_alternative<ConstantMass>(o));
    CHECK(std::get<ConstantMass>(o).mu == doctest::Approx(base * factor).epsilon(1e-14));
  }

  TEST_CASE("Morse potential") {
    CHECK(morse_potential(-35.0, 1.0, 0.24, -35.0) == 0.0);
    CHECK(morse_potential(1e4, 1.0, 0.24, -35.0) == 1.0);
    CHECK(morse_potential(-35.0 + std::log(2.0) / 0.24, 1.0, 0.24, -35.0) == doctest::Approx(0.25).epsilon(1e-15));
  }

  TEST_CASE("Morse exact levels") {
    CHECK(morse_bound_state_count(1.0, 0.24, 1.0) == 6);
    CHECK(std::abs(morse_exact_level(1.0, 0.24, 1.0, 0) - 0.1625056275) <= 5e-11);
    CHECK(std::abs(morse_exact_level(1.0, 0.24, 1.0, 3) - 0.8351393924) <= 5e-11);
    CHECK(std::abs(morse_exact_level(1.0, 0.24, 1.0, 5) - 0.9955619023) <= 5e-11);
    CHECK_THROWS_AS(morse_exact_level(1.0, 0.24, 1.0, 6), ConfigError);
    CHECK_THROWS_AS(morse_exact_level(1.0, 0.24, 1.0, -1), ConfigError);
    // E_n = omega (n + 1/2) - omega^2 (n + 1/2)^2 / (4 D) with omega = alpha sqrt(2 D / mu).
    const double w = 0.24 * std::sqrt(2.0);
    for (int n = 0; n < 6; ++n)
      CHECK(morse_exact_level(1.0, 0.24, 1.0, n) ==
            doctest::Approx(w * (n + 0.5) - w * w * (n + 0.5) * (n + 0.5) / 4.0).epsilon(1e-14));
  }

  TEST_CASE("Henon-Heiles potential") {
    CHECK(henon_heiles_coupling_default() == doctest::Approx(1.0 / std::sqrt(80.0)).epsilon(1e-16));
    const double lambda = 1.0 / std::sqrt(80.0);
    CHECK(henon_heiles_potential(1.0, 3.0) ==
          doctest::Approx(0.5 * (1.0 + 9.0) + lambda * (1.0 * 3.0 - 27.0 / 3.0)).epsilon(1e-15));
  }

  TEST_CASE("builtin ids") {
    CHECK(builtin_ids() == std::vector<std::string>{"nh3", "nd3", "morse", "pdm_ho_1", "pdm_ho_2", "pt_oscillator",
                                                    "non_pt_oscillator", "henon_heiles"});
  }

  TEST_CASE("default grids and orderings") {
    auto grid = [](const ProblemDefinition& p) { return std::get<Lattice1D>(p.spec.grid); };
    CHECK(grid(builtin_problem("nh3")).size() == 111);
    CHECK(grid(builtin_problem("nh3")).width() == 4.0);
    CHECK(grid(builtin_problem("nd3")).size() == 111);
    CHECK(grid(builtin_problem("morse")).size() == 111);
    CHECK(grid(builtin_problem("morse")).width() == 90.0);
    CHECK(grid(builtin_problem("pdm_ho_1")).size() == 201);
    CHECK(grid(builtin_problem("pdm_ho_2")).width() == 20.0);
    CHECK(grid(builtin_problem("pt_oscillator")).size() == 101);
    CHECK(grid(builtin_problem("non_pt_oscillator")).width() == 25.0);
    const auto hh = std::get<Lattice2D>(builtin_problem("henon_heiles").spec.grid);
    CHECK(hh.x_axis().size() == 61);
    CHECK(hh.y_axis().size() == 61);
    CHECK(hh.x_axis().width() == 20.0);
    CHECK(hh.y_axis().width() == 20.0);

    CHECK(std::holds_alternative<MassLeft>(builtin_problem("nh3").spec.ordering));
    CHECK(std::holds_alternative<MassLeft>(builtin_problem("nd3").spec.ordering));
    CHECK(std::holds_alternative<MassSandwich>(builtin_problem("pdm_ho_1").spec.ordering));
    CHECK(std::holds_alternative<MassSandwich>(builtin_problem("pdm_ho_2").spec.ordering));
    CHECK(builtin_problem("pt_oscillator").spec.ordering == KineticOrdering{ConstantMass{0.5}});
    CHECK(builtin_problem("nh3").unit == EnergyUnit::hartree);
    CHECK(builtin_problem("morse").unit == EnergyUnit::model);
  }

  TEST_CASE("Henon-Heiles potential on the default problem") {
    const auto p = builtin_problem("henon_heiles");
    CHECK(p.spec.potential_real(1.0, 3.0) == henon_heiles_potential(1.0, 3.0, 1.0 / std::sqrt(80.0)));
  }

  TEST_CASE("PT oscillator is x^2 + i x with T = p^2") {
    const auto p = builtin_problem("pt_oscillator");
    REQUIRE(p.spec.potential_imag.has_value());
    for (double x : {-2.0, 0.0, 1.5}) {
      CHECK(p.spec.potential_real(x, 0.0) == x * x);
      CHECK((*p.spec.potential_imag)(x, 0.0) == x);
    }
    const auto q = builtin_problem("non_pt_oscillator");
    REQUIRE(q.spec.potential_imag.has_value());
    CHECK((*q.spec.potential_imag)(0.3, 0.0) == 0.3);
    CHECK(q.spec.potential_real(0.3, 0.0) == 0.3 * 0.3 - 0.3);
  }

  TEST_CASE("pdm oscillator masses") {
    const auto a = builtin_problem("pdm_ho_1"), b = builtin_problem("pdm_ho_2");
    CHECK(a.spec.mass(0.0, 0.0) == 1.0);
    CHECK(a.spec.mass(2.0, 0.0) == 5.0);
    CHECK(b.spec.mass(0.0, 0.0) == 4.0);
    CHECK(1.0 / b.spec.mass(1.0, 0.0) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  }

  TEST_CASE("nh3 and nd3 share the potential") {
    const auto nh3 = builtin_problem("nh3"), nd3 = builtin_problem("nd3");
    const auto* a = nh3.spec.potential_real.target<double (*)(double, double)>();
    const auto* b = nd3.spec.potential_real.target<double (*)(double, double)>();
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(*a == *b);
    CHECK(nh3.spec.mass(0.5, 0.0) != nd3.spec.mass(0.5, 0.0));
  }

  TEST_CASE("overrides") {
    const auto p = builtin_problem("morse", {.points = 201, .width = 140.0, .morse_r_eq = -60.0});
    CHECK(std::get<Lattice1D>(p.spec.grid).size() == 201);
    CHECK(p.spec.potential_real(-60.0, 0.0) == 0.0);
    const auto hh = builtin_problem("henon_heiles", {.points = 21, .width = 18.0, .points_y = 31});
    CHECK(std::get<Lattice2D>(hh.spec.grid).y_axis().size() == 31);
    CHECK(std::get<Lattice2D>(hh.spec.grid).y_axis().width() == 18.0);

    CHECK_THROWS_AS(builtin_problem("nh4"), ConfigError);
    CHECK_THROWS_AS(builtin_problem("nh3", {.points = 110}), ConfigError);
    CHECK_THROWS_AS(builtin_problem("nh3", {.morse_r_eq = 1.0}), ConfigError);
    CHECK_THROWS_AS(builtin_problem("nh3", {.points_y = 11}), ConfigError);
    CHECK_THROWS_AS(builtin_problem("henon_heiles", {.ordering = MassSandwich{}}), ConfigError);
    CHECK_THROWS_AS(builtin_problem("nh3", {.width = -1.0}), ConfigError);
  }

  TEST_CASE("every builtin solves with small residuals") {
    for (const auto& id : builtin_ids()) {
      INFO(id);
      const bool two_d = id == "henon_heiles";
      const Spectrum s = solve(builtin_problem(id).spec, two_d ? DiagonalizeOptions{.lowest = 40} : DiagonalizeOptions{});
      CHECK(s.max_residual() <= 1e-9);
      for (const auto& r : s.residuals) CHECK(std::isfinite(r));
    }
  }

  TEST_CASE("ND3 with constant reduced mass") {
    const auto p = builtin_problem("nd3", {.ordering = ammonia_constant_mass_ordering(c::mass_deuterium)});
    const auto levels = labeled_levels(solve(p.spec), c::hartree_in_wavenumbers, true);
    const auto it = std::find_if(levels.begin(), levels.end(), [](const LabeledLevel& l) { return l.label == "1s"; });
    REQUIRE(it != levels.end());
    CHECK(std::abs(it->value.real() - 793.8) <= 0.1);
  }

  TEST_CASE("PT spectra are real, non-PT spectra sit at Im = 1/2") {
    const Spectrum pt = solve(builtin_problem("pt_oscillator").spec);
    const Spectrum npt = solve(builtin_problem("non_pt_oscillator").spec);
    for (int n = 0; n < 20; ++n) {
      CHECK(std::abs(pt.eigenvalues[static_cast<std::size_t>(n)].imag()) <= 1e-9);
      CHECK(std::abs(npt.eigenvalues[static_cast<std::size_t>(n)].imag() - 0.5) <= 1e-10);
    }
  }

  TEST_CASE("reference table") {
    const auto& table = tabulated_references();
    CHECK(table.size() == 11);
    const auto nh3 = reference_spectrum("nh3.mass_left");
    CHECK(nh3.unit == "cm-1");
    CHECK(nh3.shifted);
    CHECK(nh3.source == ReferenceSource::tabulated);
    REQUIRE(nh3.find("0a") != nullptr);
    CHECK(nh3.find("0a")->value == cplx(0.837));
    CHECK(nh3.find("0a")->decimals == 3);
    CHECK(nh3.find("3a")->value == cplx(2902.99));
    const auto morse = reference_spectrum("morse.grid_111");
    CHECK(morse.find("5")->value == cplx(0.9955620565));
    const auto exact = reference_spectrum("morse.exact");
    CHECK(exact.source == ReferenceSource::analytic);
    CHECK(exact.levels.size() == 6);
    CHECK(reference_spectrum("non_pt_oscillator.exact").levels[3].value == cplx(7.0, 0.5));
    CHECK(reference_spectrum("pt_oscillator.exact").levels[44].value == cplx(89.25));
    CHECK_THROWS_AS(reference_spectrum("nope"), ConfigError);
  }

  TEST_CASE("reference table parser") {
    const auto parsed = parse_reference_table(
        "# comment\n[a.b]\nproblem = p\nunit = model\nshifted = no\ncitation = c\n0 1.5\n1 2.25,-0.5\n\n[c]\n"
        "problem = q\nunit = hartree\nx 3\n");
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].levels[1].value == cplx(2.25, -0.5));
    CHECK(parsed[0].levels[1].decimals == 2);
    CHECK(parsed[1].levels[0].decimals == 0);
    CHECK_THROWS_AS(parse_reference_table("0 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_reference_table("[a\nproblem = p\nunit = model\n0 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_reference_table("[a]\nproblem = p\nunit = furlong\n0 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_reference_table("[a]\nproblem = p\nunit = model\n"), ConfigError);
    CHECK_THROWS_AS(parse_reference_table("[a]\nproblem = p\nunit = model\n0 x\n"), ConfigError);
    CHECK_THROWS_AS(parse_reference_table("[a]\nproblem = p\ncolour = red\n0 1\n"), ConfigError);
  }
}
