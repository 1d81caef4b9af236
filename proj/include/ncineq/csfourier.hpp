#pragma once

// Partial-Fourier compressed sensing: DFT row systems, Bernoulli row
// selectors, Gram/deviation operators on small supports, exact and sampled
// restricted-isometry constants, and an alternating-splitting solver for
// equality-constrained complex l1 minimization.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "ncineq/bounds.hpp"
#include "ncineq/errors.hpp"
#include "ncineq/parallel.hpp"
#include "ncineq/rng.hpp"
#include "ncineq/spectral.hpp"

namespace ncineq::cs {

struct DftSystem {
  int n = 0;
  Eigen::MatrixXcd rows;  // rows(w, t) = (1/sqrt n) e^(-i 2 pi w t / n)
};

inline DftSystem build_dft(int n) {
  require(n >= 1, errc::invalid_parameter, "signal dimension must be >= 1");
  DftSystem d;
  d.n = n;
  d.rows.resize(n, n);
  const double twopi = 2.0 * 3.14159265358979323846;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int w = 0; w < n; ++w)
    for (int t = 0; t < n; ++t) {
      double arg = -twopi * static_cast<double>(w) * static_cast<double>(t) /
                   static_cast<double>(n);
      d.rows(w, t) = std::complex<double>(scale * std::cos(arg), scale * std::sin(arg));
    }
  return d;
}

struct SelectorDraw {
  int n = 0;
  double k_expected = 0.0;
  std::vector<int> omega;  // sorted selected row indices
  std::uint64_t seed = 0;
};

inline SelectorDraw draw_selectors(int n, double k, Stream& stream) {
  require(n >= 1, errc::invalid_parameter, "dimension must be >= 1");
  require(std::isfinite(k) && k > 0.0 && k <= static_cast<double>(n), errc::invalid_parameter,
          "expected sample count must lie in (0, n]");
  SelectorDraw d;
  d.n = n;
  d.k_expected = k;
  double p = k / static_cast<double>(n);
  for (int i = 0; i < n; ++i)
    if (stream.bernoulli(p)) d.omega.push_back(i);
  return d;
}

inline SelectorDraw draw_selectors(int n, double k, std::uint64_t seed) {
  auto stream = Stream::from_seed(seed);
  SelectorDraw d = draw_selectors(n, k, stream);
  d.seed = seed;
  return d;
}

inline SelectorDraw fixed_selectors(int n, std::vector<int> omega) {
  require(n >= 1, errc::invalid_parameter, "dimension must be >= 1");
  std::sort(omega.begin(), omega.end());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    require(omega[i] >= 0 && omega[i] < n, errc::invalid_input,
            "selector index out of range");
    require(i == 0 || omega[i] != omega[i - 1], errc::invalid_input,
            "selector indices must be distinct");
  }
  SelectorDraw d;
  d.n = n;
  d.k_expected = static_cast<double>(omega.size());
  d.omega = std::move(omega);
  return d;
}

namespace detail {
inline void check_support(const DftSystem& d, const std::vector<int>& T) {
  require(!T.empty(), errc::invalid_input, "support set must be nonempty");
  for (std::size_t i = 0; i < T.size(); ++i) {
    require(T[i] >= 0 && T[i] < d.n, errc::invalid_input, "support index out of range");
    for (std::size_t j = i + 1; j < T.size(); ++j)
      require(T[i] != T[j], errc::invalid_input, "support indices must be distinct");
  }
}

// Sum of the selected rank-one row projectors restricted to T, accumulated
// triangle-first so the result is exactly Hermitian.
inline Eigen::MatrixXcd gram_matrix(const DftSystem& d, const std::vector<int>& omega,
                                    const std::vector<int>& T) {
  const int s = static_cast<int>(T.size());
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(s, s);
  for (int i : omega) {
    for (int a = 0; a < s; ++a) {
      g(a, a) += std::norm(d.rows(i, T[static_cast<std::size_t>(a)]));
      for (int b = a + 1; b < s; ++b) {
        std::complex<double> z = std::conj(d.rows(i, T[static_cast<std::size_t>(a)])) *
                                 d.rows(i, T[static_cast<std::size_t>(b)]);
        g(a, b) += z;
        g(b, a) += std::conj(z);
      }
    }
  }
  return g;
}

inline double hoeffding_halfwidth(std::int64_t trials, double confidence) {
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(trials)));
}

// s distinct indices in [0, n), uniform, sorted; partial Fisher-Yates.
inline std::vector<int> random_support(int n, int s, Stream& stream) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int j = 0; j < s; ++j) {
    std::uint64_t pick = stream.next_u64() % static_cast<std::uint64_t>(n - j);
    std::swap(idx[static_cast<std::size_t>(j)],
              idx[static_cast<std::size_t>(j) + static_cast<std::size_t>(pick)]);
  }
  std::vector<int> T(idx.begin(), idx.begin() + s);
  std::sort(T.begin(), T.end());
  return T;
}
}  // namespace detail

inline HermitianMatrix gram_on_support(const DftSystem& d, const SelectorDraw& draw,
                                       const std::vector<int>& T) {
  detail::check_support(d, T);
  return HermitianMatrix(detail::gram_matrix(d, draw.omega, T));
}

enum class Normalization { expected_k, realized_k };

// Operator norm of (n/kappa) G_T - I, the deviation of the rescaled sampled
// Gram from the identity on the support.
inline double deviation_norm(const DftSystem& d, const SelectorDraw& draw,
                             const std::vector<int>& T, Normalization norm_kind) {
  detail::check_support(d, T);
  double kappa;
  if (norm_kind == Normalization::expected_k) {
    require(draw.k_expected > 0.0, errc::degenerate_profile,
            "expected sample count must be > 0");
    kappa = draw.k_expected;
  } else {
    require(!draw.omega.empty(), errc::degenerate_profile,
            "realized normalization needs a nonempty selector set");
    kappa = static_cast<double>(draw.omega.size());
  }
  const int s = static_cast<int>(T.size());
  Eigen::MatrixXcd m = (static_cast<double>(d.n) / kappa) * detail::gram_matrix(d, draw.omega, T) -
                       Eigen::MatrixXcd::Identity(s, s);
  return schatten_norm(m, std::numeric_limits<double>::infinity(), true);
}

struct InvertTailRecord {
  double t_eps = 0.0;     // threshold on the deviation norm
  double fraction = 0.0;  // empirical exceedance frequency
  double ci_low = 0.0;
  double ci_high = 0.0;
  double eps = 0.0;       // sqrt(s/k)
  double t_scaled = 0.0;  // t_eps / eps
  double bound = std::numeric_limits<double>::quiet_NaN();
  bool bound_valid = false;
};

// Monte Carlo exceedance frequency of the deviation norm on a fixed support,
// one selector draw per trial shared across the whole threshold grid, with
// the reference tail bound evaluated where its hypotheses hold.
inline std::vector<InvertTailRecord> estimate_invertibility_tail(
    int n, double k, int s, const std::vector<int>& T, const std::vector<double>& t_grid,
    std::int64_t trials, std::uint64_t seed, double c_const = 2.0, double confidence = 0.999) {
  require(static_cast<int>(T.size()) == s, errc::invalid_parameter,
          "support size must equal s");
  require(!t_grid.empty(), errc::invalid_parameter, "threshold grid must be nonempty");
  require(trials >= 1, errc::invalid_parameter, "need at least one trial");
  require(confidence > 0.0 && confidence < 1.0, errc::invalid_parameter,
          "confidence must lie in (0,1)");
  auto d = build_dft(n);
  detail::check_support(d, T);
  std::vector<double> devs(static_cast<std::size_t>(trials));
  auto root = Stream::from_seed(seed);
  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
    auto stream = root.substream(i);
    auto draw = draw_selectors(n, k, stream);
    devs[i] = deviation_norm(d, draw, T, Normalization::expected_k);
  });
  double w = detail::hoeffding_halfwidth(trials, confidence);
  double eps = std::sqrt(static_cast<double>(s) / k);
  std::vector<InvertTailRecord> out;
  out.reserve(t_grid.size());
  for (double te : t_grid) {
    InvertTailRecord r;
    r.t_eps = te;
    double acc = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(trials); ++i)
      acc += devs[i] >= te ? 1.0 : 0.0;
    r.fraction = acc / static_cast<double>(trials);
    r.ci_low = r.fraction - w;
    r.ci_high = r.fraction + w;
    r.eps = eps;
    r.t_scaled = te / eps;
    try {
      r.bound = bounds::cs_tail_bound(r.t_scaled, eps, c_const, static_cast<double>(s));
      r.bound_valid = true;
    } catch (const error&) {
      r.bound_valid = false;
    }
    out.push_back(r);
  }
  return out;
}

struct RipResult {
  int s = 0;
  double lam_max = 0.0;
  double lam_min = 0.0;
  double alpha_star = 0.0;
  double delta = 0.0;
  bool exact = false;
  long supports_checked = 0;
};

namespace detail {
inline double binomial_count(int n, int s) {
  double c = 1.0;
  for (int i = 1; i <= s; ++i) {
    c *= static_cast<double>(n - s + i) / static_cast<double>(i);
    if (c > 1e18) return c;
  }
  return c;
}

// alpha* = 2/(lam_max + lam_min) minimizes max(alpha lam_max - 1,
// 1 - alpha lam_min): the objective is the max of an increasing and a
// decreasing affine function of alpha, so the optimum is at their crossing.
inline RipResult finish_rip(int s, double lam_max, double lam_min, bool exact,
                            long supports_checked) {
  require(lam_max > 0.0 && lam_max + lam_min > 0.0, errc::degenerate_profile,
          "sampled Gram is identically degenerate on all supports");
  RipResult r;
  r.s = s;
  r.lam_max = lam_max;
  r.lam_min = lam_min;
  r.alpha_star = 2.0 / (lam_max + lam_min);
  r.delta = (lam_max - lam_min) / (lam_max + lam_min);
  r.exact = exact;
  r.supports_checked = supports_checked;
  return r;
}

inline void eig_extremes(const Eigen::MatrixXcd& full_gram, const std::vector<int>& T,
                         double& lam_max, double& lam_min) {
  const int s = static_cast<int>(T.size());
  if (s == 1) {
    double v = full_gram(T[0], T[0]).real();
    lam_max = std::max(lam_max, v);
    lam_min = std::min(lam_min, v);
    return;
  }
  Eigen::MatrixXcd sub(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      sub(a, b) = full_gram(T[static_cast<std::size_t>(a)], T[static_cast<std::size_t>(b)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
  es.compute(sub, Eigen::EigenvaluesOnly);
  lam_max = std::max(lam_max, es.eigenvalues().maxCoeff());
  lam_min = std::min(lam_min, es.eigenvalues().minCoeff());
}
}  // namespace detail

// Extremal Gram eigenvalues over every support of size exactly s; supports of
// smaller size are covered automatically because eigenvalues of principal
// submatrices interlace, so the extremes over size-s supports dominate.
inline RipResult rip_constant_exact(const DftSystem& d, const SelectorDraw& draw, int s) {
  require(s >= 1 && s <= d.n, errc::invalid_parameter, "support size must lie in [1, n]");
  require(!draw.omega.empty(), errc::degenerate_profile,
          "selector set is empty; every sampled Gram vanishes");
  double count = detail::binomial_count(d.n, s);
  require(count <= 1e6, errc::budget,
          "support enumeration budget exceeded; use the sampled variant");
  Eigen::MatrixXcd full;
  {
    std::vector<int> all(static_cast<std::size_t>(d.n));
    std::iota(all.begin(), all.end(), 0);
    full = detail::gram_matrix(d, draw.omega, all);
  }
  double lam_max = -std::numeric_limits<double>::infinity();
  double lam_min = std::numeric_limits<double>::infinity();
  std::vector<int> T(static_cast<std::size_t>(s));
  std::iota(T.begin(), T.end(), 0);
  long checked = 0;
  while (true) {
    detail::eig_extremes(full, T, lam_max, lam_min);
    ++checked;
    int i = s - 1;
    while (i >= 0 && T[static_cast<std::size_t>(i)] == d.n - s + i) --i;
    if (i < 0) break;
    ++T[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j)
      T[static_cast<std::size_t>(j)] = T[static_cast<std::size_t>(j - 1)] + 1;
  }
  return detail::finish_rip(s, lam_max, lam_min, true, checked);
}

// Same extremes over uniformly random size-s supports: a lower estimate of
// the enumerated constant, usable beyond the enumeration budget.
inline RipResult rip_constant_sampled(const DftSystem& d, const SelectorDraw& draw, int s,
                                      long num_supports, Stream stream) {
  require(s >= 1 && s <= d.n, errc::invalid_parameter, "support size must lie in [1, n]");
  require(num_supports >= 1, errc::invalid_parameter, "need at least one sampled support");
  require(!draw.omega.empty(), errc::degenerate_profile,
          "selector set is empty; every sampled Gram vanishes");
  Eigen::MatrixXcd full;
  {
    std::vector<int> all(static_cast<std::size_t>(d.n));
    std::iota(all.begin(), all.end(), 0);
    full = detail::gram_matrix(d, draw.omega, all);
  }
  double lam_max = -std::numeric_limits<double>::infinity();
  double lam_min = std::numeric_limits<double>::infinity();
  for (long i = 0; i < num_supports; ++i) {
    auto T = detail::random_support(d.n, s, stream);
    detail::eig_extremes(full, T, lam_max, lam_min);
  }
  return detail::finish_rip(s, lam_max, lam_min, false, num_supports);
}

// Apply the selected-row measurement map: b_r = <row omega_r, f>.
inline Eigen::VectorXcd measure(const DftSystem& d, const SelectorDraw& draw,
                                const Eigen::VectorXcd& f) {
  require(f.size() == d.n, errc::invalid_input, "signal length must equal n");
  Eigen::VectorXcd b(static_cast<Eigen::Index>(draw.omega.size()));
  for (std::size_t r = 0; r < draw.omega.size(); ++r)
    b(static_cast<Eigen::Index>(r)) = (d.rows.row(draw.omega[r]) * f).value();
  return b;
}

struct BasisPursuitParams {
  double rho = 1.0;
  long max_iter = 50000;
  double tol_primal = 1e-9;
  double tol_dual = 1e-9;
};

struct BasisPursuitResult {
  Eigen::VectorXcd f_hat;
  long iterations = 0;
  bool converged = false;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

// Equality-constrained complex l1 minimization min ||x||_1 s.t. Phi x = b by
// alternating splitting: project onto the affine constraint set, then apply
// complex soft-thresholding (magnitude shrink, phase preserved). Distinct
// DFT rows are orthonormal, so the affine projection is v - Phi*(Phi v - b)
// with no linear solve. The returned iterate is the projected (feasible) one.
inline BasisPursuitResult basis_pursuit(const DftSystem& d, const SelectorDraw& draw,
                                        const Eigen::VectorXcd& b,
                                        BasisPursuitParams params) {
  require(!draw.omega.empty(), errc::invalid_input,
          "basis pursuit needs at least one measurement row");
  require(b.size() == static_cast<Eigen::Index>(draw.omega.size()), errc::invalid_input,
          "measurement vector length must equal the selector count");
  require(params.rho > 0.0 && params.max_iter >= 1 && params.tol_primal > 0.0 &&
              params.tol_dual > 0.0,
          errc::invalid_parameter, "solver parameters must be positive");
  const int n = d.n;
  const Eigen::Index m = b.size();
  Eigen::MatrixXcd phi(m, n);
  for (Eigen::Index r = 0; r < m; ++r)
    phi.row(r) = d.rows.row(draw.omega[static_cast<std::size_t>(r)]);
  Eigen::MatrixXcd gram = phi.adjoint() * phi;  // projector complement, n x n
  Eigen::VectorXcd q = phi.adjoint() * b;

  const double scale = 1.0 + b.norm();
  const double kappa = 1.0 / params.rho;
  Eigen::VectorXcd x = q;
  Eigen::VectorXcd z = x;
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
  BasisPursuitResult res;
  for (long it = 1; it <= params.max_iter; ++it) {
    Eigen::VectorXcd v = z - u;
    x = v - gram * v + q;
    Eigen::VectorXcd z_prev = z;
    Eigen::VectorXcd w = x + u;
    for (int i = 0; i < n; ++i) {
      double mag = std::abs(w(i));
      z(i) = mag > kappa ? w(i) * (1.0 - kappa / mag) : std::complex<double>(0.0, 0.0);
    }
    u += x - z;
    res.primal_residual = (x - z).norm();
    res.dual_residual = params.rho * (z - z_prev).norm();
    res.iterations = it;
    if (res.primal_residual <= params.tol_primal * scale &&
        res.dual_residual <= params.tol_dual * scale) {
      res.converged = true;
      break;
    }
  }
  res.f_hat = x;
  return res;
}

struct RecoveryResult {
  Eigen::VectorXcd f_true;
  Eigen::VectorXcd f_hat;
  double residual = 0.0;
  double rel_error = 0.0;
  long iterations = 0;
  bool exact = false;
};

inline RecoveryResult recover_signal(const DftSystem& d, const SelectorDraw& draw,
                                     const Eigen::VectorXcd& f_true,
                                     BasisPursuitParams params) {
  Eigen::VectorXcd b = measure(d, draw, f_true);
  auto sol = basis_pursuit(d, draw, b, params);
  RecoveryResult r;
  r.f_true = f_true;
  r.f_hat = sol.f_hat;
  r.residual = (measure(d, draw, sol.f_hat) - b).norm();
  double denom = f_true.norm();
  r.rel_error = denom > 0.0 ? (sol.f_hat - f_true).norm() / denom : sol.f_hat.norm();
  r.iterations = sol.iterations;
  r.exact = r.rel_error <= 1e-6;
  return r;
}

enum class AmpLaw { unit, complex_gaussian };

struct RecoverySummary {
  int n = 0;
  int s = 0;
  double k = 0.0;
  std::int64_t trials = 0;
  double success_fraction = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

namespace detail {
inline Eigen::VectorXcd random_sparse_signal(int n, int s, AmpLaw amp, Stream& stream) {
  auto T = random_support(n, s, stream);
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n);
  for (int t : T)
    f(t) = amp == AmpLaw::unit ? std::complex<double>(1.0, 0.0) : stream.complex_gaussian();
  return f;
}

inline RecoverySummary summarize(int n, int s, double k, std::int64_t trials,
                                 const std::vector<unsigned char>& ok, double confidence) {
  double acc = 0.0;
  for (std::size_t i = 0; i < ok.size(); ++i) acc += ok[i] ? 1.0 : 0.0;
  RecoverySummary sm;
  sm.n = n;
  sm.s = s;
  sm.k = k;
  sm.trials = trials;
  sm.success_fraction = acc / static_cast<double>(trials);
  double w = hoeffding_halfwidth(trials, confidence);
  sm.ci_low = sm.success_fraction - w;
  sm.ci_high = sm.success_fraction + w;
  return sm;
}
}  // namespace detail

// Per trial: uniform s-sparse signal, fresh Bernoulli selector draw, l1
// recovery; success = exact reconstruction (rel error <= 1e-6). An empty
// selector draw counts as a failure without invoking the solver.
inline RecoverySummary recovery_experiment(int n, int s, double k, std::int64_t trials,
                                           std::uint64_t seed, AmpLaw amp,
                                           BasisPursuitParams params,
                                           double confidence = 0.999) {
  require(s >= 1 && s <= n, errc::invalid_parameter, "sparsity must lie in [1, n]");
  require(trials >= 1, errc::invalid_parameter, "need at least one trial");
  auto d = build_dft(n);
  std::vector<unsigned char> ok(static_cast<std::size_t>(trials), 0);
  auto root = Stream::from_seed(seed);
  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
    auto stream = root.substream(i);
    Eigen::VectorXcd f = detail::random_sparse_signal(n, s, amp, stream);
    auto draw = draw_selectors(n, k, stream);
    if (draw.omega.empty()) return;
    auto rec = recover_signal(d, draw, f, params);
    ok[i] = rec.exact ? 1 : 0;
  });
  return detail::summarize(n, s, k, trials, ok, confidence);
}

// Same experiment against one fixed selector draw (the RIP-gate setting).
inline RecoverySummary recovery_experiment_fixed(const DftSystem& d, const SelectorDraw& draw,
                                                 int s, std::int64_t trials,
                                                 std::uint64_t seed, AmpLaw amp,
                                                 BasisPursuitParams params,
                                                 double confidence = 0.999) {
  require(s >= 1 && s <= d.n, errc::invalid_parameter, "sparsity must lie in [1, n]");
  require(trials >= 1, errc::invalid_parameter, "need at least one trial");
  std::vector<unsigned char> ok(static_cast<std::size_t>(trials), 0);
  auto root = Stream::from_seed(seed);
  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
    auto stream = root.substream(i);
    Eigen::VectorXcd f = detail::random_sparse_signal(d.n, s, amp, stream);
    if (draw.omega.empty()) return;
    auto rec = recover_signal(d, draw, f, params);
    ok[i] = rec.exact ? 1 : 0;
  });
  return detail::summarize(d.n, s, draw.k_expected, trials, ok, confidence);
}

struct SampleSizeResult {
  double k = 0.0;                    // 8 C^2 e (M+1) s^2 log(n/s)
  double failure_probability = 0.0;  // s^2 e^s (n/s)^(-M s)
};

inline SampleSizeResult sample_size_for_rip(int s, int n, double M, double c_const) {
  require(s >= 1, errc::invalid_parameter, "sparsity must be >= 1");
  require(2 * s <= n, errc::precondition, "hypothesis s <= n/2 fails");
  require(std::isfinite(M) && M >= 0.0, errc::invalid_parameter, "M must be >= 0");
  require(std::isfinite(c_const) && c_const > 0.0, errc::invalid_parameter,
          "constant C must be > 0");
  const double e1 = std::exp(1.0);
  double ratio = static_cast<double>(n) / static_cast<double>(s);
  SampleSizeResult r;
  r.k = 8.0 * c_const * c_const * e1 * (M + 1.0) * static_cast<double>(s) *
        static_cast<double>(s) * std::log(ratio);
  r.failure_probability = static_cast<double>(s) * static_cast<double>(s) *
                          std::exp(static_cast<double>(s)) * std::pow(ratio, -M * s);
  return r;
}

}  // namespace ncineq::cs
