#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "slacqm/operator_matrix.hpp"

namespace testing {

/// Seeded generator; every property test prints its seed on failure via doctest INFO.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  std::uint8_t byte() { return static_cast<std::uint8_t>(integer(0, 255)); }

  template <class T>
  const T& pick(std::initializer_list<T> items) {
    return *(items.begin() + integer(0, static_cast<int>(items.size()) - 1));
  }

  Eigen::MatrixXcd hermitian(int n, double scale = 1.0) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) a(i, k) = {uniform(-scale, scale), uniform(-scale, scale)};
    return 0.5 * (a + a.adjoint());
  }

 private:
  std::mt19937_64 engine_;
};

inline double frobenius(const Eigen::MatrixXcd& a) { return a.norm(); }

inline double rel_frobenius(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-300);
}

inline Eigen::MatrixXcd dense(const slacqm::OperatorMatrix& m) { return m.to_complex(); }

}  // namespace testing
