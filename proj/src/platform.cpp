#include "slacqm/platform.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

extern "C" {
char* openblas_get_corename(void);
void dgemm_(const char* transa, const char* transb, const int* m, const int* n, const int* k, const double* alpha,
            const double* a, const int* lda, const double* b, const int* ldb, const double* beta, double* c,
            const int* ldc);
}

namespace slacqm::platform {

std::string blas_core_name() {
  std::string name = openblas_get_corename();
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  return name;
}

bool blas_self_check() {
  const int n = 256;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(n * n), b(n * n), c(n * n, 0.0);
  for (auto& v : a) v = dist(rng);
  for (auto& v : b) v = dist(rng);
  const double one = 1.0, zero = 0.0;
  dgemm_("N", "N", &n, &n, &n, &one, a.data(), &n, b.data(), &n, &zero, c.data(), &n);
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a[i + k * n] * b[k + j * n];
      worst = std::max(worst, std::abs(s - c[i + j * n]));
    }
  return worst < 1e-10;
}

void ensure_sound_blas(char** argv) {
  if (std::getenv("OPENBLAS_CORETYPE")) return;
  if (blas_self_check()) return;

  const std::string core = blas_core_name();
  const char* replacement = "Prescott";
  if (core == "cooperlake" || core == "sapphirerapids") replacement = "SkylakeX";
  else if (__builtin_cpu_supports("avx2")) replacement = "Haswell";

  setenv("OPENBLAS_CORETYPE", replacement, 1);
  execv("/proc/self/exe", argv);
  std::cerr << "warning: BLAS kernel set '" << core << "' failed its self-check and the program could not be "
            << "restarted; set OPENBLAS_CORETYPE=" << replacement << " to avoid wrong results\n";
}

}  // namespace slacqm::platform
