#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "slacqm/hamiltonian.hpp"
#include "slacqm/problems.hpp"

namespace slacqm {

/// Reads a problem from "key = value" text. Lines starting with '#' are comments.
///
///   dimension      = 1 | 2                                (required)
///   L, N           = width and odd point count           (1D, required)
///   Lx, Nx, Ly, Ny = per-axis width and point count      (2D, required)
///   mass           = constant or expression in x (and y) (required)
///   ordering       = constant | mass_sandwich | inverse_mass_anticommutator
///                    | mass_left | mass_right | von_roos
///   alpha, gamma   = von Roos exponents (ordering = von_roos only)
///   potential_real = expression (required)
///   potential_imag = expression (optional)
///   units          = hartree | model (default model)
///   name           = free text
///
/// Without `ordering` the mass must be a constant. Errors are ConfigError
/// carrying the offending key.
ProblemDefinition parse_config(std::string_view text, std::string_view origin = "<config>");
ProblemDefinition load_config(const std::filesystem::path& path);

/// Ordering from its config/CLI name. `mu` is required for "constant";
/// alpha and gamma default to 0 for "von_roos".
KineticOrdering ordering_from_name(std::string_view name, std::optional<double> mu = std::nullopt,
                                   std::optional<double> alpha = std::nullopt,
                                   std::optional<double> gamma = std::nullopt);

}  // namespace slacqm
