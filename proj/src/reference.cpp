#include <charconv>
#include <string>

#include "reference_table.hpp"
#include "slacqm/error.hpp"
#include "slacqm/problems.hpp"

namespace slacqm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("reference table line " + std::to_string(line) + ": bad number '" + std::string(s) + "'",
                      "value");
  return v;
}

int printed_decimals(std::string_view s) {
  const std::string_view re = s.substr(0, s.find(','));
  const auto dot = re.find('.');
  if (dot == std::string_view::npos) return 0;
  const auto end = re.find_first_of("eE", dot);
  return static_cast<int>((end == std::string_view::npos ? re.size() : end) - dot - 1);
}

std::complex<double> parse_value(std::string_view s, int line) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return {parse_number(s, line), 0.0};
  return {parse_number(trim(s.substr(0, comma)), line), parse_number(trim(s.substr(comma + 1)), line)};
}

void check_complete(const ReferenceSpectrum& r) {
  if (r.problem.empty()) throw ConfigError("reference '" + r.id + "' has no problem", "problem");
  if (r.unit != "cm-1" && r.unit != "hartree" && r.unit != "model")
    throw ConfigError("reference '" + r.id + "' has unknown unit '" + r.unit + "'", "unit");
  if (r.levels.empty()) throw ConfigError("reference '" + r.id + "' has no levels", "levels");
}

std::vector<ReferenceLevel> indexed(int count, auto&& value) {
  std::vector<ReferenceLevel> out;
  for (int n = 0; n < count; ++n) out.push_back({std::to_string(n), value(n), -1});
  return out;
}

}  // namespace

const ReferenceLevel* ReferenceSpectrum::find(std::string_view label) const {
  for (const auto& l : levels)
    if (l.label == label) return &l;
  return nullptr;
}

std::vector<ReferenceSpectrum> parse_reference_table(std::string_view text) {
  std::vector<ReferenceSpectrum> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("reference table line " + std::to_string(line_no) + ": unterminated header", "id");
      if (!out.empty()) check_complete(out.back());
      ReferenceSpectrum r;
      r.id = std::string(trim(line.substr(1, line.size() - 2)));
      r.source = ReferenceSource::tabulated;
      out.push_back(std::move(r));
      continue;
    }
    if (out.empty())
      throw ConfigError("reference table line " + std::to_string(line_no) + ": entry before first header", "id");
    ReferenceSpectrum& r = out.back();

    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      const std::string_view key = trim(line.substr(0, eq));
      const std::string value(trim(line.substr(eq + 1)));
      if (key == "problem") r.problem = value;
      else if (key == "unit") r.unit = value;
      else if (key == "citation") r.citation = value;
      else if (key == "shifted") {
        if (value != "yes" && value != "no")
          throw ConfigError("reference '" + r.id + "': shifted must be yes or no", "shifted");
        r.shifted = value == "yes";
      } else {
        throw ConfigError("reference '" + r.id + "': unknown key '" + std::string(key) + "'", std::string(key));
      }
      continue;
    }

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos)
      throw ConfigError("reference table line " + std::to_string(line_no) + ": expected 'label value'", "value");
    const std::string_view value = trim(line.substr(space));
    r.levels.push_back({std::string(line.substr(0, space)), parse_value(value, line_no), printed_decimals(value)});
  }
  if (!out.empty()) check_complete(out.back());
  return out;
}

const std::vector<ReferenceSpectrum>& tabulated_references() {
  static const std::vector<ReferenceSpectrum> table = parse_reference_table(detail::kReferenceTable);
  return table;
}

ReferenceSpectrum reference_spectrum(std::string_view id) {
  for (const auto& r : tabulated_references())
    if (r.id == id) return r;

  ReferenceSpectrum r;
  r.id = std::string(id);
  r.source = ReferenceSource::analytic;
  r.unit = "model";
  r.shifted = false;
  if (id == "morse.exact") {
    r.problem = "morse";
    r.citation = "closed-form Morse levels, D=mu=1, alpha=0.24";
    const int count = morse_bound_state_count(1.0, 0.24, 1.0);
    r.levels = indexed(count, [](int n) { return std::complex<double>(morse_exact_level(1.0, 0.24, 1.0, n)); });
  } else if (id == "pt_oscillator.exact") {
    r.problem = "pt_oscillator";
    r.citation = "E_n = 2n + 5/4";
    r.levels = indexed(50, [](int n) { return std::complex<double>(2.0 * n + 1.25, 0.0); });
  } else if (id == "non_pt_oscillator.exact") {
    r.problem = "non_pt_oscillator";
    r.citation = "E_n = 2n + 1 + i/2";
    r.levels = indexed(50, [](int n) { return std::complex<double>(2.0 * n + 1.0, 0.5); });
  } else {
    throw ConfigError("unknown reference spectrum '" + std::string(id) + "'", "reference");
  }
  return r;
}

}  // namespace slacqm
