#include "slacqm/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "slacqm/error.hpp"
#include "slacqm/eig.hpp"
#include "slacqm/expr.hpp"

namespace slacqm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const std::vector<std::string_view> kKnownKeys = {"dimension", "L",     "N",     "Lx",   "Nx",
                                                  "Ly",        "Ny",    "mass",  "ordering", "alpha",
                                                  "gamma",     "potential_real", "potential_imag", "units",
                                                  "name"};

class Entries {
 public:
  Entries(std::string_view text, std::string_view origin) : origin_(origin) {
    int line_no = 0;
    while (!text.empty()) {
      const auto nl = text.find('\n');
      const std::string_view line = trim(text.substr(0, nl));
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++line_no;
      if (line.empty() || line.front() == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError(where(line_no) + "expected 'key = value'", std::string(line));
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
        throw ConfigError(where(line_no) + "unknown key '" + key + "'", key);
      if (value.empty()) throw ConfigError(where(line_no) + "empty value for '" + key + "'", key);
      if (!values_.emplace(key, value).second) throw ConfigError(where(line_no) + "duplicate key '" + key + "'", key);
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'", key);
    return it->second;
  }

  std::optional<std::string> optional_text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  double number(const std::string& key) const {
    const std::string& s = text(key);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw ConfigError(origin_ + ": '" + key + "' must be a finite number, got '" + s + "'", key);
    return v;
  }

  std::optional<double> optional_number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  int integer(const std::string& key) const {
    const std::string& s = text(key);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ConfigError(origin_ + ": '" + key + "' must be an integer, got '" + s + "'", key);
    return v;
  }

  Expression expression(const std::string& key, const std::vector<std::string>& vars) const {
    try {
      return Expression::parse(text(key), vars);
    } catch (const ParseError& e) {
      throw ConfigError(origin_ + ": " + key + ": " + e.what(), key);
    }
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string where(int line) const { return origin_ + ":" + std::to_string(line) + ": "; }

  std::string origin_;
  std::map<std::string, std::string, std::less<>> values_;
};

Field2D as_field(Expression e) {
  return [e = std::move(e)](double x, double y) { return e(x, y); };
}

// Odd point counts only; the message names the key.
int half_count(const Entries& c, const std::string& key) {
  const int n = c.integer(key);
  if (n < 1 || n % 2 == 0)
    throw ConfigError(c.origin() + ": '" + key + "' must be an odd positive point count, got " + std::to_string(n),
                      key);
  return (n - 1) / 2;
}

double width(const Entries& c, const std::string& key) {
  const double w = c.number(key);
  if (!(w > 0.0)) throw ConfigError(c.origin() + ": '" + key + "' must be positive", key);
  return w;
}

void forbid(const Entries& c, std::initializer_list<const char*> keys, std::string_view why) {
  for (const char* k : keys)
    if (c.has(k)) throw ConfigError(c.origin() + ": '" + k + "' is not valid " + std::string(why), k);
}

}  // namespace

KineticOrdering ordering_from_name(std::string_view name, std::optional<double> mu, std::optional<double> alpha,
                                   std::optional<double> gamma) {
  if ((alpha || gamma) && name != "von_roos")
    throw ConfigError("alpha/gamma are only valid with ordering von_roos", alpha ? "alpha" : "gamma");
  if (name == "constant") {
    if (!mu) throw ConfigError("ordering 'constant' needs a constant mass", "mass");
    return ConstantMass{*mu};
  }
  if (name == "mass_sandwich") return MassSandwich{};
  if (name == "inverse_mass_anticommutator") return InverseMassAnticommutator{};
  if (name == "mass_left") return MassLeft{};
  if (name == "mass_right") return MassRight{};
  if (name == "von_roos") return VonRoos{alpha.value_or(0.0), gamma.value_or(0.0)};
  throw ConfigError("unknown ordering '" + std::string(name) +
                        "' (constant, mass_sandwich, inverse_mass_anticommutator, mass_left, mass_right, von_roos)",
                    "ordering");
}

ProblemDefinition parse_config(std::string_view text, std::string_view origin) {
  const Entries c(text, origin);

  const int dimension = c.integer("dimension");
  if (dimension != 1 && dimension != 2)
    throw ConfigError(c.origin() + ": 'dimension' must be 1 or 2", "dimension");
  const std::vector<std::string> vars = dimension == 1 ? std::vector<std::string>{"x"}
                                                       : std::vector<std::string>{"x", "y"};

  Grid grid = [&]() -> Grid {
    if (dimension == 1) {
      forbid(c, {"Lx", "Nx", "Ly", "Ny"}, "for dimension = 1 (use L and N)");
      return make_lattice(width(c, "L"), half_count(c, "N"));
    }
    forbid(c, {"L", "N"}, "for dimension = 2 (use Lx, Nx, Ly, Ny)");
    return make_lattice_2d(width(c, "Lx"), half_count(c, "Nx"), width(c, "Ly"), half_count(c, "Ny"));
  }();

  const Expression mass = c.expression("mass", vars);
  std::optional<double> constant_mu;
  if (mass.referenced_variables().empty()) constant_mu = mass(std::span<const double>{});

  KineticOrdering ordering = ConstantMass{1.0};
  if (const auto name = c.optional_text("ordering")) {
    ordering = ordering_from_name(*name, constant_mu, c.optional_number("alpha"), c.optional_number("gamma"));
  } else {
    forbid(c, {"alpha", "gamma"}, "without ordering = von_roos");
    if (!constant_mu)
      throw ConfigError(c.origin() + ": a position-dependent mass needs an explicit 'ordering'", "ordering");
    ordering = ConstantMass{*constant_mu};
  }
  if (const auto* cm = std::get_if<ConstantMass>(&ordering); cm && !(cm->mu > 0.0))
    throw ConfigError(c.origin() + ": constant mass must be positive", "mass");

  EnergyUnit unit = EnergyUnit::model;
  if (const auto u = c.optional_text("units")) {
    if (*u == "hartree") unit = EnergyUnit::hartree;
    else if (*u != "model") throw ConfigError(c.origin() + ": 'units' must be hartree or model", "units");
  }

  std::optional<Field2D> imag;
  if (c.has("potential_imag")) imag = as_field(c.expression("potential_imag", vars));

  return ProblemDefinition{
      .id = c.optional_text("name").value_or(std::string(origin)),
      .description = "user configuration " + std::string(origin),
      .spec = HamiltonianSpec{.grid = std::move(grid),
                              .ordering = ordering,
                              .mass = as_field(mass),
                              .potential_real = as_field(c.expression("potential_real", vars)),
                              .potential_imag = std::move(imag)},
      .unit = unit,
      .references = {},
  };
}

ProblemDefinition load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'", "config");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace slacqm
