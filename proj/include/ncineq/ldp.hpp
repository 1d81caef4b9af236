#pragma once

// Scalar large-deviation calculators: semicircular moments and MGF, the
// gaussian/semicircular mixture log-MGF, a numerical Fenchel-Legendre
// transform, and the resulting upper bound on log tail probabilities.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "ncineq/errors.hpp"

namespace ncineq::ldp {

// Moment of the semicircular density (2/(pi r^2)) sqrt(r^2 - (t-a)^2) on
// [a-r, a+r]. The substitution t = a + r sin(theta) removes the endpoint
// square-root singularity, leaving a smooth integrand.
inline double semicircle_moment(int order, double a, double r) {
  require(order >= 0, errc::invalid_parameter, "moment order must be >= 0");
  require(std::isfinite(a), errc::invalid_parameter, "center must be finite");
  require(std::isfinite(r) && r > 0.0, errc::invalid_parameter, "radius must be > 0");
  const double pi = 3.14159265358979323846;
  auto f = [&](double theta) {
    double c = std::cos(theta);
    return (2.0 / pi) * c * c * std::pow(a + r * std::sin(theta), order);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, -0.5 * pi, 0.5 * pi, 12, 1e-13);
}

// M(lam) = sum_n lam^(2n) / ((n+1)! n!); entire, terms decay superfactorially.
inline double semicircle_mgf(double lam) {
  require(std::isfinite(lam), errc::invalid_parameter, "argument must be finite");
  const double x = lam * lam;
  double term = 1.0;
  double acc = 1.0;
  for (int n = 0; n < 800; ++n) {
    term *= x / (static_cast<double>(n + 2) * static_cast<double>(n + 1));
    acc += term;
    if (term <= acc * 1e-18) break;
  }
  return acc;
}

inline double semicircle_log_mgf(double lam) { return std::log(semicircle_mgf(lam)); }

namespace detail {
inline double log_sum_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}
inline double softplus(double z) {  // log(1 + e^z), stable on both sides
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}
}  // namespace detail

// Log of (1-theta) e^(lam^2/2) + theta M(lam), stabilized so the gaussian
// component can dominate far beyond the overflow range of e^(lam^2/2).
inline double mixture_log_mgf(double theta, double lam) {
  require(std::isfinite(theta) && theta >= 0.0 && theta <= 1.0, errc::invalid_parameter,
          "mixture weight must lie in [0,1]");
  require(std::isfinite(lam), errc::invalid_parameter, "argument must be finite");
  if (theta == 0.0) return 0.5 * lam * lam;
  if (theta == 1.0) return semicircle_log_mgf(lam);
  double a0 = std::log1p(-theta) + 0.5 * lam * lam;
  double a1 = std::log(theta) + semicircle_log_mgf(lam);
  return detail::log_sum_exp(a0, a1);
}

struct MixtureBoundCheck {
  double theta = 0.0;
  double lam = 0.0;
  double lhs = 0.0;  // |Lambda_theta(lam) - lam^2/2 - log(1-theta)|
  double rhs = 0.0;  // (theta/(1-theta)) e^(2|lam| - lam^2/2)
  bool holds = false;
};

// The distance of the mixture log-MGF from its gaussian asymptote, against
// the explicit envelope; |lam| folds the two one-sided branches together.
inline MixtureBoundCheck check_mixture_bound(double theta, double lam) {
  require(std::isfinite(theta) && theta > 0.0 && theta < 1.0, errc::domain,
          "mixture weight must lie strictly inside (0,1)");
  require(std::isfinite(lam), errc::invalid_parameter, "argument must be finite");
  MixtureBoundCheck c;
  c.theta = theta;
  c.lam = lam;
  double z = std::log(theta) - std::log1p(-theta) + semicircle_log_mgf(lam) - 0.5 * lam * lam;
  c.lhs = std::abs(detail::softplus(z));
  c.rhs = (theta / (1.0 - theta)) * std::exp(2.0 * std::abs(lam) - 0.5 * lam * lam);
  c.holds = c.lhs <= c.rhs;
  return c;
}

struct SearchWindow {
  double lam_lo = -50.0;
  double lam_hi = 50.0;
  int grid_n = 2001;
  double refine_tol = 1e-10;
};

struct RateFunctionEval {
  double x = 0.0;
  double value = 0.0;          // Lambda*(x)
  double argmax_lambda = 0.0;  // maximizer of lam*x - Lambda(lam)
  SearchWindow window;         // requested window
  double effective_lo = 0.0;   // window actually scanned after sign restriction
  double effective_hi = 0.0;
};

// Lambda*(x) = sup_lam [lam x - Lambda(lam)]: coarse grid scan followed by
// golden-section refinement of the concave inner function. For centered laws
// the supremum over lam of the matching sign of x is exact, so the scan is
// restricted to that half-line.
template <class F>
RateFunctionEval fenchel_legendre(F&& logmgf, double x, SearchWindow w = {}) {
  require(std::isfinite(x), errc::invalid_parameter, "x must be finite");
  require(std::isfinite(w.lam_lo) && std::isfinite(w.lam_hi) && w.lam_lo < w.lam_hi,
          errc::window, "search window must be a nonempty interval");
  require(w.grid_n >= 3, errc::window, "search grid needs at least 3 points");
  require(w.refine_tol > 0.0, errc::window, "refinement tolerance must be > 0");
  double lo = w.lam_lo, hi = w.lam_hi;
  if (x >= 0.0) lo = std::max(lo, 0.0);
  else hi = std::min(hi, 0.0);
  require(lo < hi, errc::window, "search window empty after sign restriction");

  double best_val = -std::numeric_limits<double>::infinity();
  double best_arg = lo;
  auto eval = [&](double lam) {
    double L = logmgf(lam);
    require(std::isfinite(L), errc::window, "log-MGF is not finite on the search window");
    double g = lam * x - L;
    if (g > best_val) {
      best_val = g;
      best_arg = lam;
    }
    return g;
  };

  const int n = w.grid_n;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    double lam = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    double g = eval(lam);
    if (g == best_val && lam == best_arg) best_i = i;
  }
  double a = lo + (hi - lo) * static_cast<double>(std::max(best_i - 1, 0)) /
                      static_cast<double>(n - 1);
  double b = lo + (hi - lo) * static_cast<double>(std::min(best_i + 1, n - 1)) /
                      static_cast<double>(n - 1);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > w.refine_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = eval(d);
    }
  }

  RateFunctionEval out;
  out.x = x;
  out.value = best_val;
  out.argmax_lambda = best_arg;
  out.window = w;
  out.effective_lo = lo;
  out.effective_hi = hi;
  return out;
}

// log-probability upper bound -inf_{s >= t} Lambda*(s). The rate function of
// a centered law is nonneg and vanishes at 0, so the infimum sits at s = t
// when t > 0; a short grid plus refinement confirms that numerically instead
// of assuming it.
template <class F>
double ldp_upper_bound(F&& logmgf, double t, SearchWindow w = {}) {
  require(std::isfinite(t), errc::invalid_parameter, "threshold must be finite");
  auto rate = [&](double s) { return fenchel_legendre(logmgf, s, w).value; };
  if (t <= 0.0) {
    double m = std::min(rate(t), rate(0.0));
    return -m;
  }
  const int pts = 9;
  const double h = std::max(t, 1.0) / 4.0;
  double m = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < pts; ++i) {
    double v = rate(t + h * static_cast<double>(i));
    if (v < m) {
      m = v;
      best_i = i;
    }
  }
  double a = t + h * static_cast<double>(std::max(best_i - 1, 0));
  double b = t + h * static_cast<double>(std::min(best_i + 1, pts - 1));
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = rate(c);
  double fd = rate(d);
  m = std::min({m, fc, fd});
  while (b - a > 1e-8) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = rate(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = rate(d);
    }
    m = std::min({m, fc, fd});
  }
  return -m;
}

struct ScalarLaw {
  enum class Kind { gaussian_std, semicircle, mixture };
  Kind kind = Kind::gaussian_std;
  double a = 0.0;      // semicircle center
  double r = 2.0;      // semicircle radius
  double theta = 0.0;  // mixture weight

  static ScalarLaw gaussian() { return {}; }
  static ScalarLaw semicircle_law(double a, double r) {
    require(std::isfinite(a), errc::invalid_parameter, "center must be finite");
    require(std::isfinite(r) && r > 0.0, errc::invalid_parameter, "radius must be > 0");
    ScalarLaw law;
    law.kind = Kind::semicircle;
    law.a = a;
    law.r = r;
    return law;
  }
  static ScalarLaw mixture_law(double theta) {
    require(std::isfinite(theta) && theta >= 0.0 && theta <= 1.0, errc::invalid_parameter,
            "mixture weight must lie in [0,1]");
    ScalarLaw law;
    law.kind = Kind::mixture;
    law.theta = theta;
    return law;
  }
};

// Log-MGF of the centered version of the law (the semicircle center a is
// handled by shifting the evaluation point, not the transform).
inline std::function<double(double)> centered_log_mgf(const ScalarLaw& law) {
  switch (law.kind) {
    case ScalarLaw::Kind::gaussian_std:
      return [](double lam) { return 0.5 * lam * lam; };
    case ScalarLaw::Kind::semicircle: {
      double half_r = 0.5 * law.r;
      return [half_r](double lam) { return semicircle_log_mgf(lam * half_r); };
    }
    case ScalarLaw::Kind::mixture: {
      double theta = law.theta;
      return [theta](double lam) { return mixture_log_mgf(theta, lam); };
    }
  }
  fail(errc::invalid_parameter, "unknown scalar law");
}

inline double law_log_mgf(const ScalarLaw& law, double lam) {
  double shift = law.kind == ScalarLaw::Kind::semicircle ? law.a : 0.0;
  return lam * shift + centered_log_mgf(law)(lam);
}

inline RateFunctionEval rate_of(const ScalarLaw& law, double x, SearchWindow w = {}) {
  double shift = law.kind == ScalarLaw::Kind::semicircle ? law.a : 0.0;
  RateFunctionEval out = fenchel_legendre(centered_log_mgf(law), x - shift, w);
  out.x = x;
  return out;
}

inline double law_upper_bound(const ScalarLaw& law, double t, SearchWindow w = {}) {
  double shift = law.kind == ScalarLaw::Kind::semicircle ? law.a : 0.0;
  return ldp_upper_bound(centered_log_mgf(law), t - shift, w);
}

}  // namespace ncineq::ldp
