#pragma once

// Closed-form tail and moment bounds for sums of independent, mean-zero,
// uniformly bounded Hermitian summands, parameterized by the variance proxy
// S = sum_j sigma_j^2 and the uniform bound R = sup_j M_j.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

#include "ncineq/errors.hpp"

namespace ncineq::bounds {

struct MomentProfile {
  double S;               // total variance proxy
  double R;               // uniform operator-norm bound on the summands
  std::int64_t n_terms;   // number of summands

  MomentProfile(double S_, double R_, std::int64_t n) : S(S_), R(R_), n_terms(n) {
    require(std::isfinite(S) && S >= 0.0, errc::invalid_parameter, "profile needs S >= 0");
    require(std::isfinite(R) && R > 0.0, errc::invalid_parameter, "profile needs R > 0");
    require(n >= 1, errc::invalid_parameter, "profile needs at least one summand");
  }
};

// (1+x)log(1+x) - x. Below 1e-4 the leading terms cancel catastrophically in
// doubles, so a truncated series takes over; the naive branch runs in long
// double so the two agree at the switch.
inline double phi(double x) {
  require(std::isfinite(x) && x >= 0.0, errc::invalid_parameter, "phi needs x >= 0");
  if (x < 1e-4) {
    return x * x * (0.5 + x * (-1.0 / 6.0 + x * (1.0 / 12.0)));
  }
  long double lx = static_cast<long double>(x);
  long double v = (1.0L + lx) * std::log1p(lx) - lx;
  return static_cast<double>(v);
}

namespace detail {
inline void check_t(double t) {
  require(std::isfinite(t) && t >= 0.0, errc::invalid_parameter, "threshold t must be >= 0");
}
}  // namespace detail

// exp(-(S/R^2) phi(tR/S))
inline double bennett_tail(const MomentProfile& prof, double t) {
  detail::check_t(t);
  require(prof.S > 0.0, errc::degenerate_profile, "bennett bound needs S > 0");
  double x = t * prof.R / prof.S;
  return std::exp(-(prof.S / (prof.R * prof.R)) * phi(x));
}

// exp(-t^2 / (2S + (2/3) tR)); tolerates S = 0 (pure range term), and the
// doubly-degenerate S = 0, t = 0 corner is the limit value 1.
inline double bernstein_tail(const MomentProfile& prof, double t) {
  detail::check_t(t);
  if (t == 0.0) return 1.0;
  return std::exp(-t * t / (2.0 * prof.S + (2.0 / 3.0) * t * prof.R));
}

// exp(-(t/(2R)) arcsinh(tR/(2S)))
inline double prohorov_tail(const MomentProfile& prof, double t) {
  detail::check_t(t);
  require(prof.S > 0.0, errc::degenerate_profile, "prohorov bound needs S > 0");
  return std::exp(-(t / (2.0 * prof.R)) * std::asinh(t * prof.R / (2.0 * prof.S)));
}

// Minimizer of the exponential-moment bound; plugging it back into
// chernoff_exponent_bound reproduces bennett_tail identically.
inline double chernoff_lambda_opt(const MomentProfile& prof, double t) {
  detail::check_t(t);
  require(prof.S > 0.0, errc::degenerate_profile, "tilt optimizer needs S > 0");
  return std::log1p(t * prof.R / prof.S) / prof.R;
}

// exp(-lam t + (S/R^2)(e^{lam R} - 1 - lam R)) for any tilt lam >= 0.
inline double chernoff_exponent_bound(const MomentProfile& prof, double lam, double t) {
  detail::check_t(t);
  require(std::isfinite(lam) && lam >= 0.0, errc::invalid_parameter, "tilt must be >= 0");
  double lr = lam * prof.R;
  return std::exp(-lam * t + (prof.S / (prof.R * prof.R)) * (std::expm1(lr) - lr));
}

// p-norm growth bound 4 (sqrt(S p) + R p), p >= 2. S = 0 is fine here.
inline double rosenthal_bound(const MomentProfile& prof, double p) {
  require(std::isfinite(p) && p >= 2.0, errc::invalid_parameter,
          "moment growth bound needs p >= 2");
  return 4.0 * (std::sqrt(prof.S * p) + prof.R * p);
}

struct GammaCheck {
  double integral;  // int_p^inf e^-t t^(alpha-1) dt
  double bound;     // 2 e^-p p^(alpha-1)
  bool holds;
};

// Verifies Gamma(alpha, p) <= 2 e^-p p^(alpha-1) in the regime p >= 2alpha-2.
// The tail integral is evaluated by adaptive Gauss-Kronrod after shifting to
// [0, inf) and factoring out e^-p, to relative accuracy well under 1e-9.
inline GammaCheck incomplete_gamma_upper_check(double alpha, double p) {
  require(std::isfinite(alpha) && alpha >= 1.0, errc::invalid_parameter,
          "shape alpha must be >= 1");
  require(std::isfinite(p) && p > 0.0, errc::invalid_parameter, "p must be > 0");
  require(p >= 2.0 * alpha - 2.0, errc::precondition,
          "hypothesis p >= 2 alpha - 2 fails");
  auto integrand = [alpha, p](double u) {
    return std::exp(-u + (alpha - 1.0) * std::log(p + u));
  };
  double err = 0.0;
  double shifted = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-11, &err);
  double integral = std::exp(-p) * shifted;
  double bound = 2.0 * std::exp(-p) * std::pow(p, alpha - 1.0);
  return {integral, bound, integral <= bound};
}

// C * max(sqrt(2 p r / k), p r / k) for p >= 2.5; the sqrt(2) carries the
// symmetrization cost in the first branch.
inline double cs_moment_bound(double C, double r, double k, double p) {
  require(std::isfinite(C) && C > 0.0, errc::invalid_parameter, "constant C must be > 0");
  require(std::isfinite(r) && r > 0.0, errc::invalid_parameter, "r must be > 0");
  require(std::isfinite(k) && k > 0.0, errc::invalid_parameter, "k must be > 0");
  require(std::isfinite(p) && p >= 2.5, errc::precondition, "hypothesis p >= 2.5 fails");
  double ratio = p * r / k;
  return C * std::max(std::sqrt(2.0 * ratio), ratio);
}

// Two-branch exceedance bound at level t * eps:
//   trace_of_1 * exp(-t^2/(2 C^2 e))   when t eps <= C
//   trace_of_1 * exp(-t/(2 C e eps))    when t eps >= C
// valid only where t^2 >= 2.5 C^2 e and t >= 2.5 C e eps.
inline double cs_tail_bound(double t, double eps, double C, double trace_of_1) {
  require(std::isfinite(t) && t > 0.0, errc::invalid_parameter, "t must be > 0");
  require(std::isfinite(eps) && eps > 0.0, errc::invalid_parameter, "eps must be > 0");
  require(std::isfinite(C) && C > 0.0, errc::invalid_parameter, "constant C must be > 0");
  require(std::isfinite(trace_of_1) && trace_of_1 > 0.0, errc::invalid_parameter,
          "trace_of_1 must be > 0");
  const double e = std::exp(1.0);
  require(t * t >= 2.5 * C * C * e, errc::precondition,
          "validity requires t^2 >= 2.5 C^2 e");
  require(t >= 2.5 * C * e * eps, errc::precondition,
          "validity requires t >= 2.5 C e eps");
  double expo = (t * eps <= C) ? t * t / (2.0 * C * C * e) : t / (2.0 * C * e * eps);
  return trace_of_1 * std::exp(-expo);
}

}  // namespace ncineq::bounds
