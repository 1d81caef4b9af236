#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ncineq/bounds.hpp"
#include "ncineq/rng.hpp"
#include "oracles.hpp"

using Catch::Approx;
namespace nb = ncineq::bounds;

TEST_CASE("phi: hand values and the small-argument series") {
  CHECK(nb::phi(0.0) == 0.0);
  // (1+x)log(1+x)-x at x = e-1 collapses to 1
  CHECK(nb::phi(std::exp(1.0) - 1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(nb::phi(1.0) == Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-15));
  // below the series threshold the quadratic term dominates
  CHECK(nb::phi(1e-8) == Approx(0.5e-16).epsilon(1e-8));
  CHECK(nb::phi(1e-9) > 0.0);
  // branch agreement across the switch at 1e-4
  double lo = nb::phi(0.99999e-4);
  double hi = nb::phi(1.00001e-4);
  CHECK(hi > lo);
  CHECK((hi - lo) / lo < 1e-4);
  // convex and increasing
  double prev = 0.0;
  for (double x = 0.125; x <= 8.0; x += 0.125) {
    double cur = nb::phi(x);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("scalar tail bounds: frozen reference points") {
  nb::MomentProfile unit(1.0, 1.0, 1);
  CHECK(nb::bennett_tail(unit, 1.0) == Approx(0.6795704571147614).epsilon(1e-14));
  CHECK(nb::bernstein_tail(unit, 1.0) == Approx(0.6872892787909722).epsilon(1e-14));
  CHECK(nb::prohorov_tail(unit, 1.0) == Approx(0.7861513777574233).epsilon(1e-14));

  nb::MomentProfile four(4.0, 1.0, 4);
  CHECK(nb::bennett_tail(four, 2.0) == Approx(0.6486962830336922).epsilon(1e-14));
}

TEST_CASE("scalar tail bounds: shape invariants") {
  auto rng = ncineq::Stream::from_seed(7);
  for (int rep = 0; rep < 10; ++rep) {
    double S = 0.1 + 5.0 * rng.next_double();
    double R = 0.1 + 2.0 * rng.next_double();
    nb::MomentProfile prof(S, R, 8);
    CHECK(nb::bennett_tail(prof, 0.0) == 1.0);
    CHECK(nb::bernstein_tail(prof, 0.0) == 1.0);
    CHECK(nb::prohorov_tail(prof, 0.0) == 1.0);
    double prev_ben = 1.0, prev_bern = 1.0, prev_pro = 1.0;
    for (int i = 1; i <= 40; ++i) {
      double t = i * 0.25 * S / R / 4.0 + i * 0.01;
      double vb = nb::bennett_tail(prof, t);
      double vn = nb::bernstein_tail(prof, t);
      double vp = nb::prohorov_tail(prof, t);
      for (double v : {vb, vn, vp}) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
      }
      CHECK(vb < prev_ben);
      CHECK(vn < prev_bern);
      CHECK(vp < prev_pro);
      prev_ben = vb;
      prev_bern = vn;
      prev_pro = vp;
    }
  }
}

TEST_CASE("bennett never exceeds bernstein or prohorov") {
  auto rng = ncineq::Stream::from_seed(91);
  for (int rep = 0; rep < 20; ++rep) {
    double S = std::exp(rng.uniform_sym() * 2.0);
    double R = std::exp(rng.uniform_sym() * 2.0);
    nb::MomentProfile prof(S, R, 16);
    for (int i = 0; i <= 1000; ++i) {
      double t = (10.0 * S / R) * i / 1000.0;
      double ben = nb::bennett_tail(prof, t);
      CHECK(ben <= nb::bernstein_tail(prof, t) + 1e-12);
      CHECK(ben <= nb::prohorov_tail(prof, t) + 1e-12);
    }
  }
}

TEST_CASE("tail bounds are invariant under the natural rescaling") {
  auto rng = ncineq::Stream::from_seed(13);
  for (int rep = 0; rep < 25; ++rep) {
    double S = std::exp(rng.uniform_sym() * 2.0);
    double R = std::exp(rng.uniform_sym());
    double t = (0.1 + 3.0 * rng.next_double()) * std::sqrt(S);
    double c = std::exp(rng.uniform_sym() * 2.3);
    nb::MomentProfile base(S, R, 4);
    nb::MomentProfile scaled(c * c * S, c * R, 4);
    CHECK(nb::bennett_tail(scaled, c * t) == Approx(nb::bennett_tail(base, t)).epsilon(1e-12));
    CHECK(nb::bernstein_tail(scaled, c * t) ==
          Approx(nb::bernstein_tail(base, t)).epsilon(1e-12));
    CHECK(nb::prohorov_tail(scaled, c * t) == Approx(nb::prohorov_tail(base, t)).epsilon(1e-12));
  }
}

TEST_CASE("optimal exponential tilt recovers the bennett bound") {
  nb::MomentProfile unit(1.0, 1.0, 1);
  CHECK(nb::chernoff_lambda_opt(unit, 1.0) == Approx(std::log(2.0)).epsilon(1e-15));

  auto rng = ncineq::Stream::from_seed(29);
  for (int rep = 0; rep < 10; ++rep) {
    double S = std::exp(rng.uniform_sym() * 2.0);
    double R = std::exp(rng.uniform_sym());
    nb::MomentProfile prof(S, R, 2);
    for (double t : {0.05, 0.3, 1.0, 2.5, 7.0}) {
      double lam = nb::chernoff_lambda_opt(prof, t);
      double via_tilt = nb::chernoff_exponent_bound(prof, lam, t);
      CHECK(via_tilt == Approx(nb::bennett_tail(prof, t)).epsilon(1e-12));
      // the optimizer is a genuine minimizer over nearby tilts
      CHECK(nb::chernoff_exponent_bound(prof, lam * 1.05, t) >= via_tilt - 1e-15);
      CHECK(nb::chernoff_exponent_bound(prof, lam * 0.95, t) >= via_tilt - 1e-15);
    }
  }
}

TEST_CASE("degenerate profiles are rejected where the formula collapses") {
  CHECK_THROWS_AS(nb::MomentProfile(-1.0, 1.0, 1), ncineq::error);
  CHECK_THROWS_AS(nb::MomentProfile(1.0, 0.0, 1), ncineq::error);
  CHECK_THROWS_AS(nb::MomentProfile(1.0, 1.0, 0), ncineq::error);

  nb::MomentProfile flat(0.0, 1.0, 1);
  CHECK(nb::bernstein_tail(flat, 0.0) == 1.0);  // limiting value, no error
  CHECK(nb::bernstein_tail(flat, 1.0) == Approx(std::exp(-1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(nb::bennett_tail(flat, 1.0), ncineq::error);
  CHECK_THROWS_AS(nb::prohorov_tail(flat, 1.0), ncineq::error);
  CHECK_THROWS_AS(nb::chernoff_lambda_opt(flat, 1.0), ncineq::error);

  nb::MomentProfile unit(1.0, 1.0, 1);
  CHECK_THROWS_AS(nb::bennett_tail(unit, -0.5), ncineq::error);
}

TEST_CASE("moment growth bound: frozen values and parameter guards") {
  nb::MomentProfile unit(1.0, 1.0, 1);
  CHECK(nb::rosenthal_bound(unit, 2.0) ==
        Approx(4.0 * (std::sqrt(2.0) + 2.0)).epsilon(1e-14));
  CHECK(nb::rosenthal_bound(unit, 2.0) == Approx(13.65685424949238).epsilon(1e-14));
  nb::MomentProfile flat(0.0, 2.0, 3);
  CHECK(nb::rosenthal_bound(flat, 4.0) == Approx(32.0).epsilon(1e-14));  // 4 * R * p
  CHECK_THROWS_AS(nb::rosenthal_bound(unit, 1.5), ncineq::error);
}

TEST_CASE("upper incomplete gamma comparison against closed forms") {
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (double p = std::max(2.0 * alpha - 2.0, 0.1); p <= 2.0 * alpha + 10.0; p += 0.7) {
      auto chk = nb::incomplete_gamma_upper_check(alpha, p);
      CHECK(chk.integral ==
            Approx(oracles::incgamma_closed(alpha, p)).epsilon(1e-9));
      CHECK(chk.bound == Approx(2.0 * std::exp(-p) * std::pow(p, alpha - 1.0)).epsilon(1e-13));
    }
  }
  // equality-adjacent point: shape 2 at p = 2 gives 3e^-2 <= 4e^-2
  auto edge = nb::incomplete_gamma_upper_check(2.0, 2.0);
  CHECK(edge.integral == Approx(3.0 * std::exp(-2.0)).epsilon(1e-9));
  CHECK(edge.bound == Approx(4.0 * std::exp(-2.0)).epsilon(1e-13));
  CHECK(edge.holds);

  CHECK_THROWS_AS(nb::incomplete_gamma_upper_check(0.5, 3.0), ncineq::error);
  CHECK_THROWS_AS(nb::incomplete_gamma_upper_check(3.0, 3.5), ncineq::error);  // p < 2a-2
  CHECK_THROWS_AS(nb::incomplete_gamma_upper_check(1.0, 0.0), ncineq::error);
}

TEST_CASE("sampling moment bound: branch values and validity") {
  CHECK(nb::cs_moment_bound(2.0, 4.0, 1.0, 4.0) == Approx(32.0).epsilon(1e-14));
  CHECK(nb::cs_moment_bound(1.0, 1.0, 8.0, 4.0) == Approx(1.0).epsilon(1e-14));
  // crossover where sqrt(2pr/k) = pr/k, i.e. pr/k = 2
  double at_cross = nb::cs_moment_bound(1.0, 2.0, 4.0, 4.0);
  CHECK(at_cross == Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(nb::cs_moment_bound(1.0, 1.0, 1.0, 2.4), ncineq::error);
  CHECK_THROWS_AS(nb::cs_moment_bound(0.0, 1.0, 1.0, 3.0), ncineq::error);
}

TEST_CASE("sampling tail bound: frozen values, branch switch, validity region") {
  CHECK(nb::cs_tail_bound(4.0, 0.1, 1.0, 8.0) ==
        Approx(0.42164397267008397).epsilon(1e-14));
  CHECK(nb::cs_tail_bound(20.0, 1.0, 1.0, 1.0) ==
        Approx(0.025253401695663907).epsilon(1e-14));

  // at t*eps = C the two branch exponents coincide
  double t = 3.0, C = 1.0, eps = 1.0 / 3.0;
  double v = nb::cs_tail_bound(t, eps, C, 1.0);
  CHECK(v == Approx(std::exp(-t * t / (2.0 * C * C * std::exp(1.0)))).epsilon(1e-14));
  CHECK(v == Approx(std::exp(-t / (2.0 * C * std::exp(1.0) * eps))).epsilon(1e-14));

  // outside the validity region the hypothesis is named
  CHECK_THROWS_AS(nb::cs_tail_bound(1.0, 0.1, 1.0, 1.0), ncineq::error);  // t^2 < 2.5 C^2 e
  CHECK_THROWS_AS(nb::cs_tail_bound(3.0, 2.0, 1.0, 1.0), ncineq::error);  // t < 2.5 C e eps
  try {
    nb::cs_tail_bound(1.0, 0.1, 1.0, 1.0);
  } catch (const ncineq::error& e) {
    CHECK(e.code() == ncineq::errc::precondition);
    CHECK(std::string(e.what()).find("t^2") != std::string::npos);
  }
}
