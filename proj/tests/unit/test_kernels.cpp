#include <cmath>
#include <vector>

#include <omp.h>

#include "doctest.h"
#include "slacqm/kernels.hpp"
#include "support.hpp"

namespace k = slacqm::kernels;
using k::Axis;
using k::cplx;

namespace {

Eigen::MatrixXd random_real(testing::Rng& rng, int n) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
  return a;
}

// Runs the parallel kernels with several threads even on a one-core host.
struct ThreadScope {
  int saved = omp_get_max_threads();
  explicit ThreadScope(int n) { omp_set_num_threads(n); }
  ~ThreadScope() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("entrywise fills are bit-identical") {
    ThreadScope threads(4);
    for (int n : {1, 3, 11, 61, 111, 201}) {
      for (double w : {1.0, 4.0, 90.0}) {
        INFO("N=" << n << " L=" << w);
        CHECK(k::serial::i_momentum(n, w) == k::parallel::i_momentum(n, w));
        CHECK(k::serial::momentum_squared(n, w) == k::parallel::momentum_squared(n, w));
        CHECK(k::serial::translation(n, w, 0.37 * w) == k::parallel::translation(n, w, 0.37 * w));
      }
    }
  }

  TEST_CASE("Kronecker embeddings are bit-identical") {
    ThreadScope threads(3);
    testing::Rng rng(0x6b);
    const Eigen::MatrixXd ax = random_real(rng, 7), ay = random_real(rng, 5);
    CHECK(k::serial::kron_embed(ax, Axis::x, 7, 5) == k::parallel::kron_embed(ax, Axis::x, 7, 5));
    CHECK(k::serial::kron_embed(ay, Axis::y, 7, 5) == k::parallel::kron_embed(ay, Axis::y, 7, 5));
    const Eigen::MatrixXcd cx = ax.cast<cplx>() * cplx(0.3, -1.1);
    CHECK(k::serial::kron_embed(cx, Axis::x, 7, 5) == k::parallel::kron_embed(cx, Axis::x, 7, 5));
    CHECK(k::serial::kron_sum(ax, ay) == k::parallel::kron_sum(ax, ay));
    const Eigen::MatrixXd sum = k::serial::kron_embed(ax, Axis::x, 7, 5) + k::serial::kron_embed(ay, Axis::y, 7, 5);
    CHECK((k::serial::kron_sum(ax, ay) - sum).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("diagonal sandwich agrees to rounding and with explicit products") {
    ThreadScope threads(4);
    testing::Rng rng(0x5a);
    for (int n : {5, 64, 151}) {
      const Eigen::MatrixXd kmat = random_real(rng, n);
      std::vector<double> d(static_cast<std::size_t>(n));
      for (double& v : d) v = rng.uniform(0.1, 3.0);
      const Eigen::MatrixXd s = k::serial::diag_sandwich(kmat, d);
      const Eigen::MatrixXd p = k::parallel::diag_sandwich(kmat, d);
      Eigen::VectorXd dv = Eigen::Map<const Eigen::VectorXd>(d.data(), n);
      Eigen::MatrixXd naive = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) naive(i, j) += kmat(i, l) * dv(l) * kmat(l, j);
      CHECK((s - p).norm() <= 1e-13 * s.norm());
      CHECK((s - naive).norm() <= 1e-13 * naive.norm());
    }
  }

  TEST_CASE("residual norms agree") {
    ThreadScope threads(4);
    testing::Rng rng(0x7e);
    const int n = 40;
    const Eigen::MatrixXd h = random_real(rng, n);
    const Eigen::MatrixXcd hc = h.cast<cplx>() + cplx(0.0, 1.0) * random_real(rng, n).cast<cplx>();
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Random(n, 6);
    std::vector<cplx> lambda = {1.0, {0.5, 2.0}, -3.0, 0.0, {1.0, -1.0}, 4.0};
    const auto rs = k::serial::residual_norms(h, v, lambda);
    const auto rp = k::parallel::residual_norms(h, v, lambda);
    const auto cs = k::serial::residual_norms(hc, v, lambda);
    const auto cp = k::parallel::residual_norms(hc, v, lambda);
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      const Eigen::VectorXcd r = h.cast<cplx>() * v.col(static_cast<Eigen::Index>(j)) - lambda[j] * v.col(static_cast<Eigen::Index>(j));
      const Eigen::VectorXcd rc = hc * v.col(static_cast<Eigen::Index>(j)) - lambda[j] * v.col(static_cast<Eigen::Index>(j));
      CHECK(rs[j] == doctest::Approx(r.norm()).epsilon(1e-12));
      CHECK(rp[j] == doctest::Approx(r.norm()).epsilon(1e-12));
      CHECK(cs[j] == doctest::Approx(rc.norm()).epsilon(1e-12));
      CHECK(cp[j] == doctest::Approx(rc.norm()).epsilon(1e-12));
    }
  }

  TEST_CASE("sin_pi has exact zeros at integers") {
    for (int j = -50; j <= 50; ++j) CHECK(k::sin_pi(static_cast<double>(j)) == 0.0);
    CHECK(k::sin_pi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(k::sin_pi(1.0 / 3.0) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  }

  TEST_CASE("translation entries at whole-site shifts are exactly 0 or 1") {
    const int n = 21;
    const double w = 7.0;
    for (int s = -n; s <= 2 * n; ++s) {
      const double shift = s * w / n;
      for (int j = -(n - 1); j <= n - 1; ++j) {
        const double e = k::translation_entry(j, n, w, shift);
        const bool hit = ((j + s) % n + n) % n == 0;
        CHECK(std::abs(e - (hit ? 1.0 : 0.0)) <= 1e-13);
      }
    }
  }
}
