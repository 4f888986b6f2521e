#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "slacqm/config.hpp"
#include "slacqm/eig.hpp"
#include "slacqm/error.hpp"

using namespace slacqm;

namespace {

std::string key_of(std::string_view text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "(accepted)";
}

constexpr std::string_view kOscillator =
    "# harmonic oscillator\n"
    "dimension = 1\n"
    "L = 20\n"
    "N = 101\n"
    "mass = 1\n"
    "potential_real = 0.5*x^2\n";

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("oscillator from text") {
    const ProblemDefinition p = parse_config(kOscillator);
    CHECK(p.spec.dimension() == 1);
    CHECK(std::get<Lattice1D>(p.spec.grid).size() == 101);
    CHECK(p.spec.ordering == KineticOrdering{ConstantMass{1.0}});
    CHECK(p.unit == EnergyUnit::model);
    const Spectrum s = solve(p.spec, {.lowest = 3});
    CHECK(std::abs(s.eigenvalues[0] - 0.5) <= 1e-10);
    CHECK(std::abs(s.eigenvalues[2] - 2.5) <= 1e-10);
  }

  TEST_CASE("config mass reproduces the builtin pdm oscillator") {
    const ProblemDefinition p = parse_config(
        "dimension = 1\nL = 20\nN = 201\nmass = (1+x^2)/1\nordering = mass_sandwich\npotential_real = 0.5*x^2\n");
    const Spectrum a = solve(p.spec, {.lowest = 10});
    const Spectrum b = solve(builtin_problem("pdm_ho_1").spec, {.lowest = 10});
    CHECK(a.eigenvalues == b.eigenvalues);
  }

  TEST_CASE("complex potential and units") {
    const ProblemDefinition p = parse_config(
        "dimension = 1\nL = 25\nN = 101\nmass = 0.5\npotential_real = x^2\npotential_imag = x\nunits = model\n"
        "name = pt\n");
    const Spectrum s = solve(p.spec, {.lowest = 2});
    CHECK(std::abs(s.eigenvalues[0].real() - 1.25) <= 1e-12);
    CHECK(p.id == "pt");
    CHECK(parse_config("dimension = 1\nL = 2\nN = 11\nmass = 1\npotential_real = 0\nunits = hartree\n").unit ==
          EnergyUnit::hartree);
  }

  TEST_CASE("two-dimensional config") {
    const ProblemDefinition p = parse_config(
        "dimension = 2\nLx = 10\nNx = 21\nLy = 12\nNy = 23\nmass = 1\npotential_real = 0.5*(x^2+y^2)\n");
    const auto& g = std::get<Lattice2D>(p.spec.grid);
    CHECK(g.x_axis().size() == 21);
    CHECK(g.y_axis().width() == 12.0);
    const Spectrum s = solve(p.spec, {.lowest = 3});
    CHECK(std::abs(s.eigenvalues[0] - 1.0) <= 1e-8);
    CHECK(std::abs(s.eigenvalues[1] - 2.0) <= 1e-8);
  }

  TEST_CASE("von Roos ordering with exponents") {
    const ProblemDefinition p = parse_config(
        "dimension = 1\nL = 4\nN = 21\nmass = 1+x^2\nordering = von_roos\nalpha = -0.5\ngamma = -0.25\n"
        "potential_real = x^2\n");
    CHECK(p.spec.ordering == KineticOrdering{VonRoos{-0.5, -0.25}});
    CHECK(ordering_from_name("mass_left") == KineticOrdering{MassLeft{}});
    CHECK(ordering_from_name("mass_right") == KineticOrdering{MassRight{}});
    CHECK(ordering_from_name("inverse_mass_anticommutator") == KineticOrdering{InverseMassAnticommutator{}});
    CHECK(ordering_from_name("constant", 2.0) == KineticOrdering{ConstantMass{2.0}});
    CHECK(ordering_from_name("von_roos") == KineticOrdering{VonRoos{0.0, 0.0}});
    CHECK_THROWS_AS(ordering_from_name("constant"), ConfigError);
    CHECK_THROWS_AS(ordering_from_name("sideways"), ConfigError);
  }

  TEST_CASE("schema errors name the key") {
    CHECK(key_of("L = 20\nN = 101\nmass = 1\npotential_real = x\n") == "dimension");
    CHECK(key_of("dimension = 1\nN = 101\nmass = 1\npotential_real = x\n") == "L");
    CHECK(key_of("dimension = 1\nL = 20\nN = 100\nmass = 1\npotential_real = x\n") == "N");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\npotential_real = x\n") == "mass");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1\n") == "potential_real");
    CHECK(key_of(std::string(kOscillator) + "colour = blue\n") == "colour");
    CHECK(key_of(std::string(kOscillator) + "L = 3\n") == "L");
    CHECK(key_of("dimension = 3\nL = 20\nN = 101\nmass = 1\npotential_real = x\n") == "dimension");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1\npotential_real = x^^2\n") == "potential_real");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1\npotential_real = y\n") == "potential_real");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1+x^2\npotential_real = x\n") == "ordering");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1\nalpha = 1\npotential_real = x\n") == "alpha");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1\nunits = furlongs\npotential_real = x\n") == "units");
    CHECK(key_of("dimension = 1\nL = twenty\nN = 101\nmass = 1\npotential_real = x\n") == "L");
    CHECK(key_of("dimension = 1\nL = 20\nN = 101\nmass = 1\npotential_real\n") != "(accepted)");
  }

  TEST_CASE("expression errors report the position") {
    try {
      (void)parse_config("dimension = 1\nL = 20\nN = 101\nmass = 1\npotential_real = 1 + (x\n");
      FAIL("accepted a broken expression");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }

  TEST_CASE("load from file") {
    const auto path = std::filesystem::temp_directory_path() / "slacqm_config_test.conf";
    {
      std::ofstream f(path);
      f << kOscillator;
    }
    const ProblemDefinition p = load_config(path);
    CHECK(std::get<Lattice1D>(p.spec.grid).width() == 20.0);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), ConfigError);
  }
}
