#include "slacqm/problems.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "slacqm/error.hpp"

namespace slacqm {

namespace constants {

double nh_distance_bohr() { return nh_distance_angstrom / bohr_in_angstrom; }
double beta_e_radians() { return beta_e_degrees * std::numbers::pi / 180.0; }

}  // namespace constants

double nh3_potential(double x) {
  const double xa = x * constants::bohr_in_angstrom;
  const double z = xa * xa;
  const auto& k = constants::nh3_coefficients;
  double v = 0.0;
  for (auto it = k.rbegin(); it != k.rend(); ++it) v = v * z + *it;
  return v;
}

namespace {

double nh3_mass_formula(double x, double m, double big_m) {
  const double r0 = constants::nh_distance_bohr();
  const double gap = r0 * r0 - x * x;
  if (std::abs(gap) <= 4.0 * std::numeric_limits<double>::epsilon() * r0 * r0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reduced mass has a pole at |x| = r0 = " << r0 << " (x=" << x << ")";
    throw NumericalError(msg.str());
  }
  return (3.0 * m * big_m / (3.0 * m + big_m) + 3.0 * m * x * x / gap) * constants::amu_in_au;
}

}  // namespace

double nh3_mass(double x, double light_amu, double heavy_amu) {
  const double r0 = constants::nh_distance_bohr();
  if (!(std::abs(x) < r0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reduced mass pole reached: |x| = " << std::abs(x) << " >= r0 = " << r0;
    throw NumericalError(msg.str());
  }
  return nh3_mass_formula(x, light_amu, heavy_amu);
}

double nh3_mass_extended(double x, double light_amu, double heavy_amu) {
  return nh3_mass_formula(x, light_amu, heavy_amu);
}

double constant_reduced_mass(double light_amu, double heavy_amu, double beta_e) {
  const double s = std::sin(beta_e);
  return 3.0 * light_amu * heavy_amu / (3.0 * light_amu + heavy_amu) * (1.0 + 3.0 * light_amu * s * s / heavy_amu) *
         constants::amu_in_au;
}

double morse_potential(double r, double depth, double alpha, double r_eq) {
  const double u = 1.0 - std::exp(-alpha * (r - r_eq));
  return depth * u * u;
}

namespace {

double morse_nu0(double depth, double alpha, double mu) {
  return alpha / (2.0 * std::numbers::pi) * std::sqrt(2.0 * depth / mu);
}

}  // namespace

int morse_bound_state_count(double depth, double alpha, double mu) {
  if (!(depth > 0.0) || !(alpha > 0.0) || !(mu > 0.0))
    throw ConfigError("Morse parameters must be positive", "morse");
  // E_n increases while n + 1/2 < D / (pi nu0).
  const double limit = depth / (std::numbers::pi * morse_nu0(depth, alpha, mu)) - 0.5;
  return static_cast<int>(std::ceil(limit));
}

double morse_exact_level(double depth, double alpha, double mu, int n) {
  const int bound = morse_bound_state_count(depth, alpha, mu);
  if (n < 0 || n >= bound)
    throw ConfigError("Morse level " + std::to_string(n) + " is not bound (" + std::to_string(bound) +
                          " bound states)",
                      "n");
  const double nu = morse_nu0(depth, alpha, mu);
  const double h = n + 0.5;
  const double pi = std::numbers::pi;
  return 2.0 * pi * nu * h - pi * pi * nu * nu / depth * h * h;
}

double henon_heiles_potential(double x, double y, double coupling) {
  return 0.5 * (x * x + y * y) + coupling * (x * x * y - y * y * y / 3.0);
}

KineticOrdering ammonia_constant_mass_ordering(double light_amu) {
  return ConstantMass{constant_reduced_mass(light_amu, constants::mass_nitrogen, constants::beta_e_radians())};
}

namespace {

// Plain function pointers so the isotopologues share one potential object.
double nh3_potential_field(double x, double) { return nh3_potential(x); }

// The grid at L = 4 reaches slightly past the pole; the outer points carry the
// (negative) value of the same formula.
double nh3_mass_field(double x, double) {
  return nh3_mass_extended(x, constants::mass_hydrogen, constants::mass_nitrogen);
}
double nd3_mass_field(double x, double) {
  return nh3_mass_extended(x, constants::mass_deuterium, constants::mass_nitrogen);
}

double pdm_ho_potential(double x, double) { return 0.5 * x * x; }
double pdm_ho_1_mass(double x, double) { return 1.0 + x * x; }
double pdm_ho_2_mass(double x, double) {
  const double r = (2.0 + x * x) / (1.0 + x * x);
  return r * r;
}

double pt_real(double x, double) { return x * x; }
double non_pt_real(double x, double) { return x * x - x; }
double pt_imag(double x, double) { return x; }
double unit_mass(double, double) { return 1.0; }

struct Defaults {
  double width;
  int points;
};

Lattice1D grid_1d(const ProblemOverrides& o, Defaults d) {
  if (o.points_y || o.width_y) throw ConfigError("y-axis overrides apply only to two-dimensional problems", "Ny");
  return make_lattice(o.width.value_or(d.width), half_count_for(o.points.value_or(d.points)));
}

const std::vector<std::string>& ids() {
  static const std::vector<std::string> v = {"nh3",           "nd3",           "morse",
                                             "pdm_ho_1",      "pdm_ho_2",      "pt_oscillator",
                                             "non_pt_oscillator", "henon_heiles"};
  return v;
}

}  // namespace

std::vector<std::string> builtin_ids() { return ids(); }

ProblemDefinition builtin_problem(std::string_view id, const ProblemOverrides& o) {
  if (o.morse_r_eq && id != "morse") throw ConfigError("R_e override applies only to morse", "morse_re");

  if (id == "nh3" || id == "nd3") {
    const bool light = id == "nh3";
    return ProblemDefinition{
        .id = std::string(id),
        .description = light ? "NH3 inversion mode with position-dependent reduced mass (Hartree, bohr)"
                             : "ND3 inversion mode with position-dependent reduced mass (Hartree, bohr)",
        .spec = HamiltonianSpec{.grid = grid_1d(o, {4.0, 111}),
                                .ordering = o.ordering.value_or(MassLeft{}),
                                .mass = light ? Field2D(&nh3_mass_field) : Field2D(&nd3_mass_field),
                                .potential_real = Field2D(&nh3_potential_field),
                                .potential_imag = std::nullopt},
        .unit = EnergyUnit::hartree,
        .references = light ? std::vector<std::string>{"nh3.mass_left", "nh3.mass_sandwich",
                                                       "nh3.inverse_mass_anticommutator", "nh3.mass_right",
                                                       "nh3.constant_mass_literature", "nh3.experiment"}
                            : std::vector<std::string>{"nd3.mass_left", "nd3.constant_mass", "nd3.experiment"},
    };
  }

  if (id == "morse") {
    const double r_eq = o.morse_r_eq.value_or(-35.0);
    if (!std::isfinite(r_eq)) throw ConfigError("R_e must be finite", "morse_re");
    return ProblemDefinition{
        .id = "morse",
        .description = "Morse oscillator D_e=1, alpha=0.24, mu=1 (model units)",
        .spec = HamiltonianSpec{.grid = grid_1d(o, {90.0, 111}),
                                .ordering = o.ordering.value_or(ConstantMass{1.0}),
                                .mass = Field2D(&unit_mass),
                                .potential_real = [r_eq](double x, double) { return morse_potential(x, 1.0, 0.24, r_eq); },
                                .potential_imag = std::nullopt},
        .unit = EnergyUnit::model,
        .references = {"morse.grid_111", "morse.exact_tabulated", "morse.exact"},
    };
  }

  if (id == "pdm_ho_1" || id == "pdm_ho_2") {
    const bool first = id == "pdm_ho_1";
    return ProblemDefinition{
        .id = std::string(id),
        .description = first ? "oscillator x^2/2 with mass 1 + x^2 (model units)"
                             : "oscillator x^2/2 with mass ((2 + x^2)/(1 + x^2))^2 (model units)",
        .spec = HamiltonianSpec{.grid = grid_1d(o, {20.0, 201}),
                                .ordering = o.ordering.value_or(MassSandwich{}),
                                .mass = first ? Field2D(&pdm_ho_1_mass) : Field2D(&pdm_ho_2_mass),
                                .potential_real = Field2D(&pdm_ho_potential),
                                .potential_imag = std::nullopt},
        .unit = EnergyUnit::model,
        .references = {},
    };
  }

  if (id == "pt_oscillator" || id == "non_pt_oscillator") {
    const bool pt = id == "pt_oscillator";
    return ProblemDefinition{
        .id = std::string(id),
        .description = pt ? "H = p^2 + x^2 + i x (model units)" : "H = p^2 + x^2 - x + i x (model units)",
        .spec = HamiltonianSpec{.grid = grid_1d(o, {25.0, 101}),
                                .ordering = o.ordering.value_or(ConstantMass{0.5}),
                                .mass = Field2D(&unit_mass),
                                .potential_real = pt ? Field2D(&pt_real) : Field2D(&non_pt_real),
                                .potential_imag = Field2D(&pt_imag)},
        .unit = EnergyUnit::model,
        .references = {pt ? "pt_oscillator.exact" : "non_pt_oscillator.exact"},
    };
  }

  if (id == "henon_heiles") {
    if (o.ordering && !std::holds_alternative<ConstantMass>(*o.ordering))
      throw ConfigError("henon_heiles supports only a constant mass", "ordering");
    const int nx = o.points.value_or(61);
    const double lx = o.width.value_or(20.0);
    return ProblemDefinition{
        .id = "henon_heiles",
        .description = "Henon-Heiles oscillator, lambda = 1/sqrt(80) (model units)",
        .spec = HamiltonianSpec{.grid = make_lattice_2d(lx, half_count_for(nx), o.width_y.value_or(lx),
                                                        half_count_for(o.points_y.value_or(nx))),
                                .ordering = o.ordering.value_or(ConstantMass{1.0}),
                                .mass = Field2D(&unit_mass),
                                .potential_real = [](double x, double y) { return henon_heiles_potential(x, y); },
                                .potential_imag = std::nullopt},
        .unit = EnergyUnit::model,
        .references = {},
    };
  }

  std::string known;
  for (const auto& k : ids()) known += (known.empty() ? "" : ", ") + k;
  throw ConfigError("unknown problem '" + std::string(id) + "' (known: " + known + ")", "problem");
}

}  // namespace slacqm
