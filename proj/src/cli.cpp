#include "slacqm/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>

#include "slacqm/analysis.hpp"
#include "slacqm/bench_suite.hpp"
#include "slacqm/config.hpp"
#include "slacqm/eig.hpp"
#include "slacqm/error.hpp"
#include "slacqm/problems.hpp"

extern "C" void openblas_set_num_threads(int num_threads);

namespace slacqm::cli {

namespace {

constexpr int kPrintDigits = 12;

struct ProblemArgs {
  std::string problem;
  std::string config;
  int points = 0;
  double width = 0.0;
  int points_y = 0;
  double width_y = 0.0;
  std::string ordering;
  double mu = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  double morse_r_eq = 0.0;
  CLI::Option* points_opt = nullptr;
  CLI::Option* width_opt = nullptr;
  CLI::Option* points_y_opt = nullptr;
  CLI::Option* width_y_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* morse_opt = nullptr;
};

void add_problem_options(CLI::App& cmd, ProblemArgs& a) {
  auto* p = cmd.add_option("-p,--problem", a.problem, "built-in problem id (see 'list')");
  auto* c = cmd.add_option("-c,--config", a.config, "problem configuration file")->check(CLI::ExistingFile);
  p->excludes(c);
  c->excludes(p);
  a.points_opt = cmd.add_option("-N,--points", a.points, "grid points (odd); x axis in 2D");
  a.width_opt = cmd.add_option("-L,--width", a.width, "box width; x axis in 2D");
  a.points_y_opt = cmd.add_option("--Ny", a.points_y, "grid points along y (2D)");
  a.width_y_opt = cmd.add_option("--Ly", a.width_y, "box width along y (2D)");
  cmd.add_option("--ordering", a.ordering,
                 "kinetic ordering: constant, mass_sandwich, inverse_mass_anticommutator, mass_left, mass_right, "
                 "von_roos");
  a.mu_opt = cmd.add_option("--mu", a.mu, "mass for --ordering constant");
  a.alpha_opt = cmd.add_option("--alpha", a.alpha, "von Roos alpha");
  a.gamma_opt = cmd.add_option("--gamma", a.gamma, "von Roos gamma");
  a.morse_opt = cmd.add_option("--morse-re", a.morse_r_eq, "Morse equilibrium position (morse only)");
}

template <class T>
std::optional<T> given(const CLI::Option* opt, T value) {
  return opt->count() ? std::optional<T>(value) : std::nullopt;
}

std::optional<KineticOrdering> ordering_override(const ProblemArgs& a) {
  if (a.ordering.empty()) {
    if (a.mu_opt->count() || a.alpha_opt->count() || a.gamma_opt->count())
      throw ConfigError("--mu/--alpha/--gamma need --ordering", "ordering");
    return std::nullopt;
  }
  return ordering_from_name(a.ordering, given(a.mu_opt, a.mu), given(a.alpha_opt, a.alpha),
                            given(a.gamma_opt, a.gamma));
}

// Replaces the grid of a configured problem with the command-line overrides.
void override_grid(HamiltonianSpec& spec, const ProblemArgs& a) {
  if (auto* g = std::get_if<Lattice1D>(&spec.grid)) {
    if (a.points_y_opt->count() || a.width_y_opt->count())
      throw ConfigError("--Ny/--Ly apply only to two-dimensional problems", "Ny");
    const int n = a.points_opt->count() ? a.points : g->size();
    const double w = a.width_opt->count() ? a.width : g->width();
    spec.grid = make_lattice(w, half_count_for(n));
    return;
  }
  const auto& g = std::get<Lattice2D>(spec.grid);
  const int nx = a.points_opt->count() ? a.points : g.x_axis().size();
  const double lx = a.width_opt->count() ? a.width : g.x_axis().width();
  const int ny = a.points_y_opt->count() ? a.points_y : a.points_opt->count() ? a.points : g.y_axis().size();
  const double ly = a.width_y_opt->count() ? a.width_y : a.width_opt->count() ? a.width : g.y_axis().width();
  spec.grid = make_lattice_2d(lx, half_count_for(nx), ly, half_count_for(ny));
}

ProblemDefinition resolve_problem(const ProblemArgs& a) {
  if (a.problem.empty() == a.config.empty())
    throw ConfigError("exactly one of --problem or --config is required", "problem");
  const auto ordering = ordering_override(a);
  if (!a.problem.empty()) {
    ProblemOverrides o;
    o.points = given(a.points_opt, a.points);
    o.width = given(a.width_opt, a.width);
    o.points_y = given(a.points_y_opt, a.points_y);
    o.width_y = given(a.width_y_opt, a.width_y);
    o.ordering = ordering;
    o.morse_r_eq = given(a.morse_opt, a.morse_r_eq);
    return builtin_problem(a.problem, o);
  }
  if (a.morse_opt->count()) throw ConfigError("--morse-re applies only to the built-in morse problem", "morse_re");
  ProblemDefinition p = load_config(a.config);
  override_grid(p.spec, a);
  if (ordering) p.spec.ordering = *ordering;
  return p;
}

// Output goes to a file when a path is given, to `fallback` otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ConfigError("cannot write '" + path + "'", "output");
    stream_ = file_.get();
  }
  std::ostream& operator*() const { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

double unit_scale(const ProblemDefinition& p, const std::string& unit) {
  if (unit.empty()) return 1.0;
  if (p.unit == EnergyUnit::hartree) {
    if (unit == "hartree") return 1.0;
    if (unit == "cm-1") return constants::hartree_in_wavenumbers;
  } else if (unit == "model") {
    return 1.0;
  }
  throw ConfigError("unit '" + unit + "' is not available for " + p.id + " (energies are in " +
                        (p.unit == EnergyUnit::hartree ? "hartree" : "model units") + ")",
                    "unit");
}

std::string native_unit(const ProblemDefinition& p) { return p.unit == EnergyUnit::hartree ? "hartree" : "model"; }

int parse_int(std::string_view item, const char* key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
  if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
    throw ConfigError("bad integer '" + std::string(item) + "' in --" + key, key);
  return v;
}

// Comma-separated integers; an item "a:b:s" expands to a, a+s, ... <= b.
std::vector<int> parse_int_list(const std::string& text, const char* key) {
  std::vector<int> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto c1 = item.find(':');
    if (c1 == std::string_view::npos) {
      out.push_back(parse_int(item, key));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    const int first = parse_int(item.substr(0, c1), key);
    const int last = parse_int(item.substr(c1 + 1, c2 == std::string_view::npos ? std::string_view::npos : c2 - c1 - 1), key);
    const int step = c2 == std::string_view::npos ? 1 : parse_int(item.substr(c2 + 1), key);
    if (step < 1) throw ConfigError(std::string("range step in --") + key + " must be positive", key);
    for (int v = first; v <= last; v += step) out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string("--") + key + " is empty", key);
  return out;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  ProblemArgs problem;
  int states = 10;
  std::string unit;
  bool shift = false;
  std::string format = "csv";
  std::string output;
  std::string wavefunctions;
};

void write_wavefunctions(const Spectrum& s, int count, const std::string& path, std::ostream& fallback) {
  Sink sink(path, fallback);
  std::ostream& out = *sink;
  out << std::setprecision(kPrintDigits);
  const bool two_d = std::holds_alternative<Lattice2D>(s.grid);
  out << (two_d ? "state,x,y,re,im\n" : "state,x,re,im\n");
  for (int j = 0; j < count; ++j) {
    for (Eigen::Index i = 0; i < s.eigenvectors.rows(); ++i) {
      out << j << ',';
      if (two_d) {
        const auto& g = std::get<Lattice2D>(s.grid);
        const auto [i1, i2] = g.split(static_cast<int>(i));
        out << g.x_axis().x(i1) << ',' << g.y_axis().x(i2) << ',';
      } else {
        out << std::get<Lattice1D>(s.grid).x(static_cast<int>(i)) << ',';
      }
      out << s.eigenvectors(i, j).real() << ',' << s.eigenvectors(i, j).imag() << '\n';
    }
  }
}

int run_solve(const SolveArgs& a, std::ostream& out) {
  const ProblemDefinition p = resolve_problem(a.problem);
  if (a.states < 1) throw ConfigError("--states must be >= 1", "states");
  if (a.format != "csv" && a.format != "json") throw ConfigError("--format must be csv or json", "format");
  const double scale = unit_scale(p, a.unit);
  const std::string unit = a.unit.empty() ? native_unit(p) : a.unit;

  // The shift needs the true ground state, which is always among the lowest states.
  const Spectrum s = solve(p.spec, {.lowest = a.states});
  const std::vector<LabeledLevel> levels = labeled_levels(s, scale, a.shift);
  const int count = std::min(a.states, s.size());

  Sink sink(a.output, out);
  std::ostream& o = *sink;
  if (a.format == "csv") {
    o << std::setprecision(kPrintDigits);
    o << "state,label,re,im,residual\n";
    for (int j = 0; j < count; ++j) {
      const auto& l = levels[static_cast<std::size_t>(j)];
      o << j << ',' << l.label << ',' << l.value.real() << ',' << l.value.imag() << ','
        << s.residuals[static_cast<std::size_t>(j)] << '\n';
    }
  } else {
    nlohmann::json doc;
    doc["problem"] = p.id;
    doc["unit"] = unit;
    doc["shifted"] = a.shift;
    doc["ordering"] = ordering_name(p.spec.ordering);
    doc["hermitian"] = s.hermitian_path;
    if (const auto* g = std::get_if<Lattice1D>(&p.spec.grid)) {
      doc["grid"] = {{"N", g->size()}, {"L", g->width()}};
    } else {
      const auto& g2 = std::get<Lattice2D>(p.spec.grid);
      doc["grid"] = {{"Nx", g2.x_axis().size()},
                     {"Lx", g2.x_axis().width()},
                     {"Ny", g2.y_axis().size()},
                     {"Ly", g2.y_axis().width()}};
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int j = 0; j < count; ++j) {
      const auto& l = levels[static_cast<std::size_t>(j)];
      rows.push_back({{"state", j},
                      {"label", l.label},
                      {"re", l.value.real()},
                      {"im", l.value.imag()},
                      {"residual", s.residuals[static_cast<std::size_t>(j)]}});
    }
    doc["states"] = std::move(rows);
    o << doc.dump(2) << '\n';
  }
  if (!a.wavefunctions.empty()) write_wavefunctions(s, count, a.wavefunctions, out);
  return ok;
}

// ---------------------------------------------------------------------------

struct ConvergeArgs {
  ProblemArgs problem;
  std::string mode = "fixed-L";
  double fixed = 0.0;
  CLI::Option* fixed_opt = nullptr;
  std::string points = "21:151:2";
  std::string states = "0,7,19";
  std::string output;
  std::string gnuplot;
};

int run_converge(const ConvergeArgs& a, std::ostream& out) {
  if (a.problem.points_opt->count() || a.problem.width_opt->count())
    throw ConfigError("converge takes its grids from --n-list and --fixed", "N");
  const ProblemDefinition p = resolve_problem(a.problem);
  ScanMode mode;
  double fixed;
  if (a.mode == "fixed-L") {
    mode = ScanMode::fixed_width;
    fixed = a.fixed_opt->count() ? a.fixed : 4.5;
  } else if (a.mode == "fixed-a") {
    mode = ScanMode::fixed_spacing;
    fixed = a.fixed_opt->count() ? a.fixed : 4.5 / 151.0;
  } else {
    throw ConfigError("--mode must be fixed-L or fixed-a", "mode");
  }
  const std::vector<int> points = parse_int_list(a.points, "n-list");
  const std::vector<int> states = parse_int_list(a.states, "states");
  const ConvergenceScan scan = convergence_scan(p.spec, mode, fixed, points, states);
  {
    Sink sink(a.output, out);
    scan.write_csv(*sink);
  }
  if (!a.gnuplot.empty()) {
    Sink sink(a.gnuplot, out);
    scan.write_gnuplot(*sink);
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct CompletenessArgs {
  ProblemArgs problem;
  int ground = 0;
  std::string output;
};

int run_completeness(const CompletenessArgs& a, std::ostream& out) {
  const ProblemDefinition p = resolve_problem(a.problem);
  const Spectrum s = solve(p.spec);
  const std::vector<double> eps = completeness_curve(s, a.ground);
  Sink sink(a.output, out);
  std::ostream& o = *sink;
  o << std::setprecision(kPrintDigits) << "n_max,epsilon\n";
  for (std::size_t n = 0; n < eps.size(); ++n) o << n << ',' << eps[n] << '\n';
  return ok;
}

}  // namespace

void apply_thread_limit_from_env() {
  const char* env = std::getenv("SLACQM_THREADS");
  if (!env) return;
  const std::string_view text(env);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n < 1) return;
  omp_set_num_threads(n);
  openblas_set_num_threads(n);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral (SLAC-derivative) matrix solver for the Schroedinger equation", "slacqm"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "diagonalize one problem and print its lowest levels");
  add_problem_options(*solve_cmd, solve_args.problem);
  solve_cmd->add_option("-k,--states", solve_args.states, "number of states to print")->capture_default_str();
  solve_cmd->add_option("-u,--unit", solve_args.unit, "energy unit: hartree, cm-1 or model (default: native)")
      ->check(CLI::IsMember({"hartree", "cm-1", "model"}));
  solve_cmd->add_flag("--shift", solve_args.shift, "report energies relative to the ground state");
  solve_cmd->add_option("-f,--format", solve_args.format, "csv or json")->capture_default_str();
  solve_cmd->add_option("-o,--output", solve_args.output, "output file (default: stdout)");
  solve_cmd->add_option("--wavefunctions", solve_args.wavefunctions, "write eigenvectors as CSV to this file");

  ConvergeArgs conv_args;
  auto* conv_cmd = app.add_subcommand("converge", "relative error of selected states over a sequence of grids");
  add_problem_options(*conv_cmd, conv_args.problem);
  conv_cmd->add_option("--mode", conv_args.mode, "fixed-L or fixed-a")->capture_default_str();
  conv_args.fixed_opt = conv_cmd->add_option("--fixed", conv_args.fixed, "the fixed L or a (default 4.5 or 4.5/151)");
  conv_cmd->add_option("--n-list", conv_args.points, "odd ascending point counts; a:b:step ranges allowed")->capture_default_str();
  conv_cmd->add_option("--states", conv_args.states, "sorted state indices")->capture_default_str();
  conv_cmd->add_option("-o,--output", conv_args.output, "CSV output file (default: stdout)");
  conv_cmd->add_option("--gnuplot", conv_args.gnuplot, "also write a gnuplot table to this file");

  CompletenessArgs comp_args;
  auto* comp_cmd = app.add_subcommand("completeness", "x^2 sum-rule error against the number of states");
  add_problem_options(*comp_cmd, comp_args.problem);
  comp_cmd->add_option("--ground", comp_args.ground, "index of the reference state")->capture_default_str();
  comp_cmd->add_option("-o,--output", comp_args.output, "output file (default: stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "check the built-in problems against their reference spectra");
  auto* list_cmd = app.add_subcommand("list", "list the built-in problems");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : config_error;
  }

  apply_thread_limit_from_env();
  try {
    if (*solve_cmd) return run_solve(solve_args, out);
    if (*conv_cmd) return run_converge(conv_args, out);
    if (*comp_cmd) return run_completeness(comp_args, out);
    if (*list_cmd) {
      for (const auto& id : builtin_ids()) out << id << '\n';
      return ok;
    }
    if (*bench_cmd) {
      const BenchOutcome r = run_reference_bench(out);
      out << (r.all_passed() ? "bench passed" : "bench FAILED") << " in " << std::setprecision(3) << r.seconds
          << " s\n";
      return r.all_passed() ? ok : bench_failure;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const MemoryCapError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return numerical_error;
  }
  return ok;
}

}  // namespace slacqm::cli
