#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>

#include "ncineq/rng.hpp"
#include "ncineq/spectral.hpp"
#include "oracles.hpp"

using Catch::Approx;
using ncineq::HermitianMatrix;
using Cx = std::complex<double>;

namespace {

HermitianMatrix random_hermitian(int d, ncineq::Stream& rng, double scale = 1.0) {
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Cx(rng.normal(), rng.normal());
  Eigen::MatrixXcd h = 0.5 * scale * (g + g.adjoint());
  return HermitianMatrix(h);
}

}  // namespace

TEST_CASE("construction symmetrizes and records the asymmetry") {
  Eigen::MatrixXcd raw(2, 2);
  raw << Cx(1.0, 0.0), Cx(0.5, 1e-10), Cx(0.5, -1e-10 + 1e-12), Cx(2.0, 0.0);
  HermitianMatrix a(raw);
  CHECK(a.asymmetry() > 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(a.matrix()(i, j) - std::conj(a.matrix()(j, i))) < 1e-12);
}

TEST_CASE("construction rejects bad input") {
  Eigen::MatrixXcd skew(2, 2);
  skew << Cx(0.0, 0.0), Cx(1.0, 0.0), Cx(-1.0, 0.0), Cx(0.0, 0.0);
  CHECK_THROWS_AS(HermitianMatrix(skew), ncineq::error);

  Eigen::MatrixXcd nonfinite = Eigen::MatrixXcd::Zero(2, 2);
  nonfinite(0, 1) = Cx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  nonfinite(1, 0) = Cx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(HermitianMatrix(nonfinite), ncineq::error);

  Eigen::MatrixXcd rect = Eigen::MatrixXcd::Zero(2, 3);
  CHECK_THROWS_AS(HermitianMatrix(rect), ncineq::error);

  CHECK_THROWS_AS(HermitianMatrix(Eigen::MatrixXcd::Zero(0, 0)), ncineq::error);
  CHECK_THROWS_AS(HermitianMatrix(Eigen::MatrixXcd::Zero(300, 300)), ncineq::error);
}

TEST_CASE("eigh returns ascending eigenvalues with small residual") {
  HermitianMatrix a = HermitianMatrix::diagonal({3.0, 1.0, 2.0});
  auto es = ncineq::eigh(a);
  REQUIRE(es.values.size() == 3);
  CHECK(es.values(0) == Approx(1.0).margin(1e-14));
  CHECK(es.values(1) == Approx(2.0).margin(1e-14));
  CHECK(es.values(2) == Approx(3.0).margin(1e-14));

  Eigen::MatrixXcd x(2, 2);
  x << Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0);
  auto es2 = ncineq::eigh(HermitianMatrix(x));
  CHECK(es2.values(0) == Approx(-1.0).margin(1e-12));
  CHECK(es2.values(1) == Approx(1.0).margin(1e-12));

  auto rng = ncineq::Stream::from_seed(11);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 1 + static_cast<int>(rng.next_u64() % 16);
    HermitianMatrix h = random_hermitian(d, rng);
    auto sys = ncineq::eigh(h);
    for (int i = 0; i + 1 < d; ++i) CHECK(sys.values(i) <= sys.values(i + 1));
    Eigen::MatrixXcd rebuilt =
        sys.vectors * sys.values.asDiagonal().toDenseMatrix().cast<Cx>() * sys.vectors.adjoint();
    double scale = std::max(1.0, h.matrix().norm());
    CHECK((rebuilt - h.matrix()).norm() / scale < 1e-12);
    Eigen::MatrixXcd vvt = sys.vectors.adjoint() * sys.vectors;
    CHECK((vvt - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-12);
  }
}

TEST_CASE("tail_trace counts eigenvalue mass at and above the threshold") {
  CHECK(ncineq::tail_trace(HermitianMatrix::identity(4), 1.0) == 1.0);
  CHECK(ncineq::tail_trace(HermitianMatrix::diagonal({0.0, 0.0, 1.0, 1.0}), 0.5) == 0.5);
  CHECK(ncineq::tail_trace(HermitianMatrix::diagonal({-1.0, 0.0, 1.0}), 1.1) == 0.0);
  // ties at the threshold are counted in
  CHECK(ncineq::tail_trace(HermitianMatrix::diagonal({0.0, 0.5, 1.0}), 0.5) ==
        Approx(2.0 / 3.0));

  auto rng = ncineq::Stream::from_seed(3);
  HermitianMatrix h = random_hermitian(8, rng);
  double prev = 1.0;
  for (double t = -6.0; t <= 6.0; t += 0.25) {
    double cur = ncineq::tail_trace(h, t);
    CHECK(cur <= prev);  // monotone nonincreasing in t
    CHECK(cur >= 0.0);
    CHECK(cur <= 1.0);
    prev = cur;
  }
  CHECK(ncineq::tail_trace(h, -1e9) == 1.0);
}

TEST_CASE("schatten_norm matches hand values and the power-mean ordering") {
  HermitianMatrix a = HermitianMatrix::diagonal({3.0, 4.0});
  CHECK(ncineq::schatten_norm(a, 2.0, false) == Approx(5.0).epsilon(1e-13));
  CHECK(ncineq::schatten_norm(a, 2.0, true) == Approx(5.0 / std::sqrt(2.0)).epsilon(1e-13));
  double inf = std::numeric_limits<double>::infinity();
  CHECK(ncineq::schatten_norm(HermitianMatrix::diagonal({1.0, -2.0, 2.0}), inf, true) ==
        Approx(2.0).epsilon(1e-13));
  CHECK_THROWS_AS(ncineq::schatten_norm(a, 0.5, true), ncineq::error);

  // normalized norms are nondecreasing in p
  auto rng = ncineq::Stream::from_seed(17);
  const double ps[] = {1.0, 2.0, 4.0, 16.0, inf};
  for (int rep = 0; rep < 100; ++rep) {
    int d = 1 + static_cast<int>(rng.next_u64() % 6);
    HermitianMatrix h = random_hermitian(d, rng);
    double prev = 0.0;
    for (double p : ps) {
      double v = ncineq::schatten_norm(h, p, true);
      CHECK(v >= prev - 1e-12 * std::max(1.0, v));
      prev = v;
    }
  }

  // general (non-Hermitian) matrices go through singular values
  Eigen::MatrixXcd m(2, 2);
  m << Cx(0, 0), Cx(2, 0), Cx(0, 0), Cx(0, 0);
  CHECK(ncineq::schatten_norm(m, inf, false) == Approx(2.0).epsilon(1e-13));
  CHECK(ncineq::schatten_norm(m, 2.0, false) == Approx(2.0).epsilon(1e-13));
}

TEST_CASE("pnorm_via_tail reproduces the normalized Schatten norm exactly") {
  // hand case: eigenvalues {0, 1}, p = 2 -> integral 2 * int_0^1 t * (1/2) dt = 1/2
  HermitianMatrix a = HermitianMatrix::diagonal({0.0, 1.0});
  CHECK(ncineq::pnorm_via_tail(a, 2.0) == Approx(std::sqrt(0.5)).epsilon(1e-13));

  auto rng = ncineq::Stream::from_seed(23);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 1 + static_cast<int>(rng.next_u64() % 8);
    HermitianMatrix h = random_hermitian(d, rng);
    auto es = ncineq::eigh(h);
    Eigen::MatrixXcd shifted =
        h.matrix() + (1e-3 - es.values(0)) * Eigen::MatrixXcd::Identity(d, d);
    HermitianMatrix pos(shifted);
    for (double p : {1.0, 2.0, 3.5, 7.0}) {
      double via_tail = ncineq::pnorm_via_tail(pos, p);
      double direct = ncineq::schatten_norm(pos, p, true);
      CHECK(via_tail == Approx(direct).epsilon(1e-12));
    }
  }

  // indefinite input is out of domain
  CHECK_THROWS_AS(ncineq::pnorm_via_tail(HermitianMatrix::diagonal({-1.0, 1.0}), 2.0),
                  ncineq::error);
  CHECK_THROWS_AS(ncineq::pnorm_via_tail(a, 0.5), ncineq::error);
}

TEST_CASE("matrix exponential via the spectral decomposition") {
  auto e0 = ncineq::expm(HermitianMatrix::zero(3));
  CHECK((e0 - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-14);
  auto ed = ncineq::expm(HermitianMatrix::diagonal({1.0, -1.0}));
  CHECK(std::abs(ed(0, 0) - Cx(std::exp(1.0), 0)) < 1e-13);
  CHECK(std::abs(ed(1, 1) - Cx(std::exp(-1.0), 0)) < 1e-13);
}

TEST_CASE("trace exponential comparison: commuting pairs are tight") {
  HermitianMatrix a = HermitianMatrix::diagonal({1.0, -0.5});
  HermitianMatrix b = HermitianMatrix::diagonal({0.25, 2.0});
  auto [lhs, rhs] = ncineq::golden_thompson_gap(a, b);
  CHECK(lhs == Approx(rhs).epsilon(1e-12));
  double expect = 0.5 * (std::exp(1.25) + std::exp(1.5));
  CHECK(lhs == Approx(expect).epsilon(1e-12));
}

TEST_CASE("trace exponential comparison: product side dominates") {
  auto rng = ncineq::Stream::from_seed(31);
  for (int rep = 0; rep < 100; ++rep) {
    int d = 2 + static_cast<int>(rng.next_u64() % 5);  // up to 6
    HermitianMatrix a = random_hermitian(d, rng);
    HermitianMatrix b = random_hermitian(d, rng);
    auto [lhs, rhs] = ncineq::golden_thompson_gap(a, b);
    CHECK(lhs <= rhs + 1e-10 * std::abs(rhs));
    CHECK(lhs > 0.0);
  }
  CHECK_THROWS_AS(
      ncineq::golden_thompson_gap(HermitianMatrix::zero(2), HermitianMatrix::zero(3)),
      ncineq::error);
}

TEST_CASE("spectral tails obey the exponential Chebyshev bound") {
  auto rng = ncineq::Stream::from_seed(41);
  for (int rep = 0; rep < 25; ++rep) {
    int d = 1 + static_cast<int>(rng.next_u64() % 8);
    HermitianMatrix h = random_hermitian(d, rng, 2.0);
    double tau_exp = ncineq::normalized_trace(ncineq::expm(h));
    for (double t = -2.0; t <= 4.0; t += 0.5) {
      CHECK(ncineq::tail_trace(h, t) <= std::exp(-t) * tau_exp + 1e-12);
    }
  }
}

TEST_CASE("matrix JSON literals round-trip") {
  auto rng = ncineq::Stream::from_seed(53);
  HermitianMatrix h = random_hermitian(5, rng);
  auto j = h.to_json();
  REQUIRE(j.contains("dim"));
  REQUIRE(j.contains("re"));
  REQUIRE(j.contains("im"));
  HermitianMatrix back = HermitianMatrix::from_json(j);
  CHECK((back.matrix() - h.matrix()).norm() == 0.0);

  // "im" may be omitted for real matrices
  nlohmann::json real_j = {{"dim", 2}, {"re", {{1.0, 0.5}, {0.5, 2.0}}}};
  HermitianMatrix real_m = HermitianMatrix::from_json(real_j);
  CHECK(real_m.matrix()(0, 1) == Cx(0.5, 0.0));

  nlohmann::json bad = {{"dim", 2}, {"re", {{1.0, 0.5}}}};
  CHECK_THROWS_AS(HermitianMatrix::from_json(bad), ncineq::error);
}
