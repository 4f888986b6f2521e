#pragma once

#include <string>

namespace slacqm::platform {

/// Kernel set OpenBLAS selected at load time, lower case ("haswell", ...).
std::string blas_core_name();

/// True when a 256 x 256 DGEMM through BLAS matches a plain triple loop.
bool blas_self_check();

/// Some OpenBLAS releases pick a DGEMM kernel on Cooper Lake CPUs that
/// returns wrong products. When the self-check fails and OPENBLAS_CORETYPE is
/// unset, re-executes the running program with a known-good core type. Returns
/// if nothing needs to be done or the re-exec is impossible (with a warning on
/// stderr).
void ensure_sound_blas(char** argv);

}  // namespace slacqm::platform
