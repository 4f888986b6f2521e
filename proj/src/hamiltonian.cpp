#include "slacqm/hamiltonian.hpp"

#include <cmath>
#include <sstream>

#include "slacqm/error.hpp"
#include "slacqm/kernels.hpp"

namespace slacqm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> sample_mass(const Lattice1D& g, const Field2D& mass) {
  if (!mass) throw ConfigError("position-dependent ordering requires a mass function", "mass");
  std::vector<double> m = sample_on_grid(g, [&](double x) { return mass(x, 0.0); }, "mass");
  for (int i = 0; i < g.size(); ++i) {
    if (m[static_cast<std::size_t>(i)] == 0.0) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "mass vanishes at grid point " << i << " (x=" << g.x(i) << ")";
      throw NumericalError(msg.str());
    }
  }
  return m;
}

// m^e pointwise; the principal real power requires m > 0 unless e is an integer.
std::vector<double> mass_power(const Lattice1D& g, const std::vector<double>& m, double e) {
  const bool integral = e == std::trunc(e);
  std::vector<double> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0.0 && !integral) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "mass " << m[i] << " at x=" << g.x(static_cast<int>(i)) << " is negative; power " << e
          << " is not real";
      throw NumericalError(msg.str());
    }
    out[i] = e == 0.0 ? 1.0 : e == -1.0 ? 1.0 / m[i] : std::pow(m[i], e);
  }
  return out;
}

Eigen::MatrixXd von_roos_kinetic(const Lattice1D& g, const std::vector<double>& m, const VonRoos& vr) {
  const std::vector<double> da = mass_power(g, m, vr.alpha);
  const std::vector<double> db = mass_power(g, m, vr.beta());
  const std::vector<double> dc = mass_power(g, m, vr.gamma);
  const Eigen::MatrixXd ip = kernels::parallel::i_momentum(g.size(), g.width());
  // p m^b p = -(ip) m^b (ip)
  Eigen::MatrixXd a = kernels::parallel::diag_sandwich(ip, db);
  const Eigen::Map<const Eigen::VectorXd> va(da.data(), static_cast<Eigen::Index>(da.size()));
  const Eigen::Map<const Eigen::VectorXd> vc(dc.data(), static_cast<Eigen::Index>(dc.size()));
  a = va.asDiagonal() * a * vc.asDiagonal();
  // The second term is the transpose of the first; summing A + A^T keeps T exactly symmetric.
  Eigen::MatrixXd t = -0.25 * (a + a.transpose());
  return t;
}

Eigen::MatrixXd one_sided_kinetic(const Lattice1D& g, const std::vector<double>& m, bool mass_on_left) {
  Eigen::MatrixXd p2 = kernels::parallel::momentum_squared(g.size(), g.width());
  Eigen::VectorXd inv(g.size());
  for (int i = 0; i < g.size(); ++i) inv(i) = 0.5 / m[static_cast<std::size_t>(i)];
  if (mass_on_left) return inv.asDiagonal() * p2;
  return p2 * inv.asDiagonal();
}

void check_constant_mass(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw ConfigError("constant mass must be positive and finite, got " + std::to_string(mu), "mass");
}

Eigen::MatrixXd kinetic_1d(const Lattice1D& g, const KineticOrdering& ordering, const Field2D& mass) {
  if (const auto* c = std::get_if<ConstantMass>(&ordering)) {
    check_constant_mass(c->mu);
    return kernels::parallel::momentum_squared(g.size(), g.width()) * (0.5 / c->mu);
  }
  const std::vector<double> m = sample_mass(g, mass);
  if (std::holds_alternative<MassLeft>(ordering)) return one_sided_kinetic(g, m, true);
  if (std::holds_alternative<MassRight>(ordering)) return one_sided_kinetic(g, m, false);
  return von_roos_kinetic(g, m, *von_roos_form(ordering));
}

Eigen::MatrixXd kinetic_2d(const Lattice2D& g, const KineticOrdering& ordering) {
  const auto* c = std::get_if<ConstantMass>(&ordering);
  if (!c)
    throw ConfigError("two-dimensional problems support only constant-mass kinetic energy, got " +
                          ordering_name(ordering),
                      "ordering");
  check_constant_mass(c->mu);
  const Lattice1D& gx = g.x_axis();
  const Lattice1D& gy = g.y_axis();
  const double s = 0.5 / c->mu;
  return kernels::parallel::kron_sum(kernels::parallel::momentum_squared(gx.size(), gx.width()) * s,
                                     kernels::parallel::momentum_squared(gy.size(), gy.width()) * s);
}

Eigen::MatrixXd kinetic_matrix(const HamiltonianSpec& spec) {
  return std::visit(overloaded{[&](const Lattice1D& g) { return kinetic_1d(g, spec.ordering, spec.mass); },
                               [&](const Lattice2D& g) { return kinetic_2d(g, spec.ordering); }},
                    spec.grid);
}

std::vector<double> sample_potential(const HamiltonianSpec& spec, const Field2D& f, std::string_view what) {
  return std::visit(overloaded{[&](const Lattice1D& g) {
                                 return sample_on_grid(g, [&](double x) { return f(x, 0.0); }, what);
                               },
                               [&](const Lattice2D& g) { return sample_on_grid(g, f, what); }},
                    spec.grid);
}

}  // namespace

std::string ordering_name(const KineticOrdering& ordering) {
  return std::visit(overloaded{[](const VonRoos& v) {
                                 std::ostringstream s;
                                 s << "von_roos(" << v.alpha << "," << v.gamma << ")";
                                 return s.str();
                               },
                               [](const MassSandwich&) { return std::string("mass_sandwich"); },
                               [](const InverseMassAnticommutator&) {
                                 return std::string("inverse_mass_anticommutator");
                               },
                               [](const MassLeft&) { return std::string("mass_left"); },
                               [](const MassRight&) { return std::string("mass_right"); },
                               [](const ConstantMass& c) {
                                 std::ostringstream s;
                                 s << "constant(" << c.mu << ")";
                                 return s.str();
                               }},
                    ordering);
}

bool is_hermitian_ordering(const KineticOrdering& ordering) noexcept {
  return !std::holds_alternative<MassLeft>(ordering) && !std::holds_alternative<MassRight>(ordering);
}

std::optional<VonRoos> von_roos_form(const KineticOrdering& ordering) noexcept {
  if (const auto* v = std::get_if<VonRoos>(&ordering)) return *v;
  if (std::holds_alternative<MassSandwich>(ordering)) return VonRoos{0.0, 0.0};
  if (std::holds_alternative<InverseMassAnticommutator>(ordering)) return VonRoos{-1.0, 0.0};
  return std::nullopt;
}

Field2D field_1d(Field1D f) {
  return [f = std::move(f)](double x, double) { return f(x); };
}

int HamiltonianSpec::size() const noexcept {
  return std::visit([](const auto& g) { return g.size(); }, grid);
}

OperatorMatrix build_kinetic(const HamiltonianSpec& spec) {
  return OperatorMatrix(kinetic_matrix(spec), is_hermitian_ordering(spec.ordering));
}

OperatorMatrix build_hamiltonian(const HamiltonianSpec& spec) {
  if (!spec.potential_real) throw ConfigError("a real potential is required", "potential_real");
  const std::vector<double> v = sample_potential(spec, spec.potential_real, "potential");
  Eigen::MatrixXd h = kinetic_matrix(spec);
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) += v[static_cast<std::size_t>(i)];

  if (!spec.potential_imag) return OperatorMatrix(std::move(h), is_hermitian_ordering(spec.ordering));

  const std::vector<double> w = sample_potential(spec, *spec.potential_imag, "imaginary potential");
  Eigen::MatrixXcd hc = h.cast<cplx>();
  h.resize(0, 0);
  for (Eigen::Index i = 0; i < hc.rows(); ++i) hc(i, i) += cplx(0.0, w[static_cast<std::size_t>(i)]);
  return OperatorMatrix(std::move(hc), false);
}

OperatorMatrix parity_matrix(const Lattice1D& g) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.size(), g.size());
  for (int i = 0; i < g.size(); ++i) p(i, g.mirror(i)) = 1.0;
  return OperatorMatrix(std::move(p), true);
}

}  // namespace slacqm
