#pragma once

// Random ensembles of mean-zero Hermitian sums, their variance/range
// profiles, Monte Carlo estimators with Hoeffding intervals, and the exact
// scalar oracles used to gauge how sharp the closed-form bounds are.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncineq/bounds.hpp"
#include "ncineq/errors.hpp"
#include "ncineq/parallel.hpp"
#include "ncineq/rng.hpp"
#include "ncineq/spectral.hpp"

namespace ncineq::ensembles {

enum class Kind { selector_diagonal, rademacher_fixed, bounded_uniform, fourier_selector };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::selector_diagonal: return "selector-diagonal";
    case Kind::rademacher_fixed:  return "rademacher-fixed";
    case Kind::bounded_uniform:   return "bounded-uniform";
    case Kind::fourier_selector:  return "fourier-selector";
  }
  return "?";
}

struct EnsembleSpec {
  Kind kind = Kind::rademacher_fixed;
  int dim = 1;
  int n_terms = 1;
  double lambda = 0.0;                  // selector rate (selector kinds only)
  std::vector<HermitianMatrix> coeffs;  // fixed coefficients (non-fourier kinds)
  std::vector<double> coeff_norms;      // operator norms of coeffs
  Eigen::MatrixXcd fourier_rows;        // n_terms x dim, unit-modulus entries
  std::string name = "custom";
};

inline EnsembleSpec make_spec(Kind kind, std::vector<HermitianMatrix> coeffs, double lambda,
                              bool enforce_unit_norm = true) {
  require(kind != Kind::fourier_selector, errc::invalid_parameter,
          "fourier family is built by fourier_spec");
  require(!coeffs.empty(), errc::invalid_parameter, "spec needs at least one coefficient");
  EnsembleSpec spec;
  spec.kind = kind;
  spec.dim = coeffs.front().dim();
  spec.n_terms = static_cast<int>(coeffs.size());
  if (kind == Kind::selector_diagonal) {
    require(std::isfinite(lambda) && lambda >= 0.0 && lambda <= 1.0, errc::invalid_parameter,
            "selector rate must lie in [0,1]");
    spec.lambda = lambda;
  }
  for (const auto& a : coeffs) {
    require(a.dim() == spec.dim, errc::invalid_input, "coefficient dimensions must agree");
    double nrm = schatten_norm(a, std::numeric_limits<double>::infinity(), true);
    require(!enforce_unit_norm || nrm <= 1.0 + 1e-9, errc::invalid_parameter,
            "coefficient norm exceeds 1 (pass enforce_unit_norm=false to allow)");
    spec.coeff_norms.push_back(nrm);
  }
  spec.coeffs = std::move(coeffs);
  return spec;
}

// n_terms scaled rank-one row projectors of the unitary DFT, restricted to
// the support {0, ..., support_size-1}, with Bernoulli(lambda) selectors.
inline EnsembleSpec fourier_spec(int n_terms, int support_size, double lambda) {
  require(n_terms >= 1, errc::invalid_parameter, "need at least one row");
  require(support_size >= 1 && support_size <= n_terms, errc::invalid_parameter,
          "support size must lie in [1, n]");
  require(std::isfinite(lambda) && lambda >= 0.0 && lambda <= 1.0, errc::invalid_parameter,
          "selector rate must lie in [0,1]");
  EnsembleSpec spec;
  spec.kind = Kind::fourier_selector;
  spec.dim = support_size;
  spec.n_terms = n_terms;
  spec.lambda = lambda;
  spec.fourier_rows.resize(n_terms, support_size);
  const double twopi = 2.0 * 3.14159265358979323846;
  for (int j = 0; j < n_terms; ++j)
    for (int t = 0; t < support_size; ++t) {
      double arg = -twopi * static_cast<double>(j) * static_cast<double>(t) /
                   static_cast<double>(n_terms);
      spec.fourier_rows(j, t) = std::complex<double>(std::cos(arg), std::sin(arg));
    }
  return spec;
}

// Deterministic unit-norm Hermitian coefficient family keyed by (kind, d, n).
inline EnsembleSpec builtin(Kind kind, int d, int n, double lambda = -1.0) {
  require(d >= 1 && d <= kMaxDim, errc::invalid_parameter, "dimension out of range");
  require(n >= 1, errc::invalid_parameter, "need at least one term");
  EnsembleSpec spec;
  if (kind == Kind::fourier_selector) {
    require(d <= n, errc::invalid_parameter, "fourier support cannot exceed row count");
    spec = fourier_spec(n, d, lambda < 0.0 ? 0.25 : lambda);
  } else {
    std::vector<HermitianMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    if (d == 1) {
      for (int j = 0; j < n; ++j) coeffs.push_back(HermitianMatrix::identity(1));
    } else {
      auto seed_stream = Stream::from_seed(0x6e63u)
                             .substream(static_cast<std::uint64_t>(kind))
                             .substream(static_cast<std::uint64_t>(d))
                             .substream(static_cast<std::uint64_t>(n));
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd g(d, d);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c)
            g(r, c) = std::complex<double>(seed_stream.normal(), seed_stream.normal());
        Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
        double nrm = schatten_norm(h, std::numeric_limits<double>::infinity(), true);
        coeffs.push_back(HermitianMatrix(h / nrm));
      }
    }
    double lam = lambda < 0.0 ? 0.5 : lambda;
    spec = make_spec(kind, std::move(coeffs), kind == Kind::selector_diagonal ? lam : 0.0);
  }
  spec.name = std::string(kind_name(kind)) + "-d" + std::to_string(d) + "-n" + std::to_string(n);
  return spec;
}

// "<kind>-d<D>-n<N>"; kind accepts both the full family names and the short
// tokens selector / rademacher / uniform / fourier.
inline EnsembleSpec parse_spec_name(const std::string& name) {
  auto npos = name.rfind("-n");
  auto dpos = name.rfind("-d", npos == std::string::npos ? std::string::npos : npos - 1);
  require(npos != std::string::npos && dpos != std::string::npos && dpos < npos,
          errc::usage, "spec name must look like <kind>-d<D>-n<N>");
  std::string kind_tok = name.substr(0, dpos);
  int d = 0, n = 0;
  try {
    d = std::stoi(name.substr(dpos + 2, npos - dpos - 2));
    n = std::stoi(name.substr(npos + 2));
  } catch (...) {
    fail(errc::usage, "spec name must encode integer d and n");
  }
  require(d >= 1 && n >= 1, errc::usage, "spec name needs d >= 1 and n >= 1");
  Kind kind;
  if (kind_tok == "selector" || kind_tok == "selector-diagonal") kind = Kind::selector_diagonal;
  else if (kind_tok == "rademacher" || kind_tok == "rademacher-fixed") kind = Kind::rademacher_fixed;
  else if (kind_tok == "uniform" || kind_tok == "bounded-uniform") kind = Kind::bounded_uniform;
  else if (kind_tok == "fourier" || kind_tok == "fourier-selector") kind = Kind::fourier_selector;
  else fail(errc::usage, "unknown ensemble family: " + kind_tok);
  return builtin(kind, d, n);
}

inline nlohmann::json spec_to_json(const EnsembleSpec& spec) {
  nlohmann::json j = {{"kind", kind_name(spec.kind)},
                      {"dim", spec.dim},
                      {"n_terms", spec.n_terms},
                      {"name", spec.name}};
  if (spec.kind == Kind::selector_diagonal || spec.kind == Kind::fourier_selector)
    j["lambda"] = spec.lambda;
  if (spec.kind == Kind::fourier_selector) {
    j["support_size"] = spec.dim;
  } else {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& a : spec.coeffs) mats.push_back(a.to_json());
    j["matrices"] = std::move(mats);
  }
  return j;
}

inline EnsembleSpec spec_from_json(const nlohmann::json& j) {
  require(j.is_object(), errc::invalid_input, "ensemble spec must be a JSON object");
  static const char* allowed[] = {"kind", "dim",          "n_terms", "name",
                                  "lambda", "support_size", "matrices", "enforce_unit_norm"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* key : allowed) ok = ok || it.key() == key;
    require(ok, errc::invalid_input, "unknown ensemble spec key: " + it.key());
  }
  if (j.contains("name") && !j.contains("kind")) {
    EnsembleSpec spec = parse_spec_name(j.at("name").get<std::string>());
    if (j.contains("lambda")) {
      double lam = j.at("lambda").get<double>();
      if (spec.kind == Kind::fourier_selector)
        spec = fourier_spec(spec.n_terms, spec.dim, lam);
      else if (spec.kind == Kind::selector_diagonal)
        spec = make_spec(spec.kind, spec.coeffs, lam);
      spec.name = j.at("name").get<std::string>();
    }
    return spec;
  }
  require(j.contains("kind"), errc::invalid_input, "ensemble spec needs \"kind\" or \"name\"");
  std::string kind_tok = j.at("kind").get<std::string>();
  double lam = j.value("lambda", -1.0);
  if (kind_tok == "fourier-selector") {
    int n = j.at("n_terms").get<int>();
    int s = j.at("support_size").get<int>();
    return fourier_spec(n, s, lam < 0.0 ? 0.25 : lam);
  }
  Kind kind;
  if (kind_tok == "selector-diagonal") kind = Kind::selector_diagonal;
  else if (kind_tok == "rademacher-fixed") kind = Kind::rademacher_fixed;
  else if (kind_tok == "bounded-uniform") kind = Kind::bounded_uniform;
  else { fail(errc::invalid_input, "unknown ensemble kind: " + kind_tok); }
  if (j.contains("matrices")) {
    std::vector<HermitianMatrix> coeffs;
    for (const auto& mj : j.at("matrices")) coeffs.push_back(HermitianMatrix::from_json(mj));
    return make_spec(kind, std::move(coeffs), lam < 0.0 ? 0.5 : lam,
                     j.value("enforce_unit_norm", true));
  }
  int d = j.at("dim").get<int>();
  int n = j.at("n_terms").get<int>();
  return builtin(kind, d, n, lam);
}

// S = sum_j ||E a_j^2|| and R = sup_j (smallest deterministic bound on ||a_j||).
inline bounds::MomentProfile profile_of(const EnsembleSpec& spec) {
  double S = 0.0, R = 0.0;
  switch (spec.kind) {
    case Kind::selector_diagonal: {
      double v = spec.lambda * (1.0 - spec.lambda);
      double m = std::max(spec.lambda, 1.0 - spec.lambda);
      for (double nrm : spec.coeff_norms) {
        S += v * nrm * nrm;
        R = std::max(R, m * nrm);
      }
      break;
    }
    case Kind::rademacher_fixed:
      for (double nrm : spec.coeff_norms) {
        S += nrm * nrm;
        R = std::max(R, nrm);
      }
      break;
    case Kind::bounded_uniform:
      for (double nrm : spec.coeff_norms) {
        S += nrm * nrm / 3.0;
        R = std::max(R, nrm);
      }
      break;
    case Kind::fourier_selector: {
      double s = static_cast<double>(spec.dim);
      S = spec.n_terms * spec.lambda * (1.0 - spec.lambda) * s * s;
      R = std::max(spec.lambda, 1.0 - spec.lambda) * s;
      break;
    }
  }
  return bounds::MomentProfile(S, R, spec.n_terms);
}

// One draw of sum_j a_j; consumes one coefficient draw per term, in term
// order, so a trial is a pure function of its substream.
inline HermitianMatrix sample_sum(const EnsembleSpec& spec, Stream& stream) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(spec.dim, spec.dim);
  switch (spec.kind) {
    case Kind::selector_diagonal:
      for (int jj = 0; jj < spec.n_terms; ++jj) {
        double c = (stream.bernoulli(spec.lambda) ? 1.0 : 0.0) - spec.lambda;
        if (c != 0.0) acc += c * spec.coeffs[static_cast<std::size_t>(jj)].matrix();
      }
      break;
    case Kind::rademacher_fixed:
      for (int jj = 0; jj < spec.n_terms; ++jj)
        acc += static_cast<double>(stream.rademacher()) *
               spec.coeffs[static_cast<std::size_t>(jj)].matrix();
      break;
    case Kind::bounded_uniform:
      for (int jj = 0; jj < spec.n_terms; ++jj)
        acc += stream.uniform_sym() * spec.coeffs[static_cast<std::size_t>(jj)].matrix();
      break;
    case Kind::fourier_selector:
      // Rank-one updates written triangle-first so the accumulator stays
      // exactly Hermitian even when the terms cancel to rounding noise.
      for (int jj = 0; jj < spec.n_terms; ++jj) {
        double c = (stream.bernoulli(spec.lambda) ? 1.0 : 0.0) - spec.lambda;
        if (c != 0.0) {
          for (int t = 0; t < spec.dim; ++t) {
            acc(t, t) += c * std::norm(spec.fourier_rows(jj, t));
            for (int u = t + 1; u < spec.dim; ++u) {
              std::complex<double> z =
                  std::conj(spec.fourier_rows(jj, t)) * spec.fourier_rows(jj, u);
              acc(t, u) += c * z;
              acc(u, t) += c * std::conj(z);
            }
          }
        }
      }
      break;
  }
  return HermitianMatrix(acc);
}

struct TailEstimate {
  double t = 0.0;
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::int64_t trials = 0;
  double confidence = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {
inline void check_mc(std::int64_t trials, double confidence) {
  require(trials >= 1, errc::invalid_parameter, "need at least one trial");
  require(confidence > 0.0 && confidence < 1.0, errc::invalid_parameter,
          "confidence must lie in (0,1)");
}
inline double hoeffding_halfwidth(std::int64_t trials, double confidence) {
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(trials)));
}
}  // namespace detail

inline std::vector<TailEstimate> estimate_tail_grid(const EnsembleSpec& spec,
                                                    const std::vector<double>& t_grid,
                                                    std::int64_t trials, std::uint64_t seed,
                                                    double confidence = 0.999) {
  detail::check_mc(trials, confidence);
  require(!t_grid.empty(), errc::invalid_parameter, "t grid must be nonempty");
  const std::size_t G = t_grid.size();
  std::vector<double> per_trial(static_cast<std::size_t>(trials) * G);
  auto root = Stream::from_seed(seed);
  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
    auto stream = root.substream(i);
    Eigen::VectorXd vals = eigh(sample_sum(spec, stream)).values;
    for (std::size_t g = 0; g < G; ++g) per_trial[i * G + g] = tail_fraction(vals, t_grid[g]);
  });
  double w = detail::hoeffding_halfwidth(trials, confidence);
  std::vector<TailEstimate> out(G);
  for (std::size_t g = 0; g < G; ++g) {
    double acc = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(trials); ++i)
      acc += per_trial[i * G + g];
    double mean = acc / static_cast<double>(trials);
    out[g] = {t_grid[g], mean, mean - w, mean + w, trials, confidence, seed};
  }
  return out;
}

inline TailEstimate estimate_tail(const EnsembleSpec& spec, double t, std::int64_t trials,
                                  std::uint64_t seed, double confidence = 0.999) {
  return estimate_tail_grid(spec, {t}, trials, seed, confidence).front();
}

struct MomentEstimate {
  double p = 0.0;
  double value = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

inline std::vector<MomentEstimate> estimate_pnorm_grid(const EnsembleSpec& spec,
                                                       const std::vector<double>& p_list,
                                                       std::int64_t trials, std::uint64_t seed) {
  detail::check_mc(trials, 0.5);
  require(!p_list.empty(), errc::invalid_parameter, "p list must be nonempty");
  for (double p : p_list)
    require(p >= 1.0, errc::invalid_parameter, "moment index p must be >= 1");
  const std::size_t G = p_list.size();
  std::vector<double> per_trial(static_cast<std::size_t>(trials) * G);
  auto root = Stream::from_seed(seed);
  const double d = static_cast<double>(spec.dim);
  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
    auto stream = root.substream(i);
    Eigen::VectorXd vals = eigh(sample_sum(spec, stream)).values;
    for (std::size_t g = 0; g < G; ++g) {
      double p = p_list[g];
      if (std::isinf(p)) {
        per_trial[i * G + g] = std::max(std::abs(vals(0)), std::abs(vals(vals.size() - 1)));
      } else {
        double acc = 0.0;
        for (int e = 0; e < vals.size(); ++e) acc += std::pow(std::abs(vals(e)), p);
        per_trial[i * G + g] = acc / d;
      }
    }
  });
  std::vector<MomentEstimate> out(G);
  for (std::size_t g = 0; g < G; ++g) {
    double p = p_list[g];
    double value;
    if (std::isinf(p)) {
      value = 0.0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(trials); ++i)
        value = std::max(value, per_trial[i * G + g]);
    } else {
      double acc = 0.0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(trials); ++i)
        acc += per_trial[i * G + g];
      double mean = acc / static_cast<double>(trials);
      value = mean > 0.0 ? std::pow(mean, 1.0 / p) : 0.0;
    }
    out[g] = {p, value, trials, seed};
  }
  return out;
}

inline MomentEstimate estimate_pnorm(const EnsembleSpec& spec, double p, std::int64_t trials,
                                     std::uint64_t seed) {
  return estimate_pnorm_grid(spec, {p}, trials, seed).front();
}

inline std::vector<double> default_t_grid(const bounds::MomentProfile& prof) {
  double tmax = std::min(3.0 * std::sqrt(prof.S) + prof.R,
                         0.999 * prof.R * static_cast<double>(prof.n_terms));
  std::vector<double> grid(8);
  for (int i = 1; i <= 8; ++i) grid[static_cast<std::size_t>(i - 1)] = tmax * i / 8.0;
  return grid;
}

struct DominanceRecord {
  double t = 0.0;
  double empirical = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double bennett = 0.0;
  double bernstein = 0.0;
  double prohorov = 0.0;
  bool pass = false;
};

// Confirms the empirical spectral tail sits below each closed-form bound,
// with the Hoeffding lower end of the interval as the conservative side.
inline std::vector<DominanceRecord> verify_dominance(const EnsembleSpec& spec,
                                                     std::vector<double> t_grid,
                                                     std::int64_t trials, std::uint64_t seed,
                                                     double confidence = 0.999) {
  auto prof = profile_of(spec);
  require(prof.S > 0.0, errc::degenerate_profile,
          "dominance check needs a nondegenerate variance proxy");
  if (t_grid.empty()) t_grid = default_t_grid(prof);
  auto est = estimate_tail_grid(spec, t_grid, trials, seed, confidence);
  std::vector<DominanceRecord> out;
  out.reserve(est.size());
  for (const auto& e : est) {
    DominanceRecord r;
    r.t = e.t;
    r.empirical = e.mean;
    r.ci_low = e.ci_low;
    r.ci_high = e.ci_high;
    r.bennett = bounds::bennett_tail(prof, e.t);
    r.bernstein = bounds::bernstein_tail(prof, e.t);
    r.prohorov = bounds::prohorov_tail(prof, e.t);
    r.pass = e.ci_low <= r.bennett && e.ci_low <= r.bernstein && e.ci_low <= r.prohorov;
    out.push_back(r);
  }
  return out;
}

// (E |B/k - 1|^p)^(1/p) for B ~ Binomial(m, lambda), evaluated in log space
// so large p and tiny rates cannot overflow; the brute-force oracle for the
// sampling bounds.
inline double selector_moment_exact(int m, double lambda, double k, double p) {
  require(m >= 1, errc::invalid_parameter, "m must be >= 1");
  require(std::isfinite(lambda) && lambda >= 0.0 && lambda <= 1.0, errc::invalid_parameter,
          "lambda must lie in [0,1]");
  require(std::isfinite(k) && k > 0.0, errc::invalid_parameter, "k must be > 0");
  require(std::isfinite(p) && p >= 1.0, errc::invalid_parameter, "p must be >= 1");
  double lse = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    if (j > 0 && lambda == 0.0) continue;
    if (j < m && lambda == 1.0) continue;
    double dev = std::abs(static_cast<double>(j) / k - 1.0);
    if (dev == 0.0) continue;
    double lc = std::lgamma(m + 1.0) - std::lgamma(j + 1.0) - std::lgamma(m - j + 1.0);
    double lp = lc + (j > 0 ? j * std::log(lambda) : 0.0) +
                (j < m ? (m - j) * std::log1p(-lambda) : 0.0) + p * std::log(dev);
    logs.push_back(lp);
    lse = std::max(lse, lp);
  }
  if (logs.empty()) return 0.0;
  double acc = 0.0;
  for (double lp : logs) acc += std::exp(lp - lse);
  return std::exp((lse + std::log(acc)) / p);
}

// (E |g|^p)^(1/p) for a standard gaussian: (2^(p/2) Gamma((p+1)/2) / sqrt(pi))^(1/p).
inline double gaussian_pnorm_exact(double p) {
  require(std::isfinite(p) && p >= 1.0, errc::invalid_parameter, "p must be >= 1");
  double lg = 0.5 * p * std::log(2.0) + std::lgamma(0.5 * (p + 1.0)) -
              0.5 * std::log(3.14159265358979323846);
  return std::exp(lg / p);
}

struct LowerBoundWitness {
  std::string variant;
  double C = 0.0;
  double p = 0.0;
  double gamma = 0.0;
  double a = 0.0;            // selector rate, = k/m
  double k = 0.0;
  int m = 0;
  long j = 0;
  double lower = 0.0;        // guaranteed linear-in-p deviation
  double selector_ratio = 0.0;     // j/k
  double ratio_floor = 0.0;        // gamma/a
  double deviation = 0.0;          // |j/k - 1|
  double deviation_floor = 0.0;    // gamma/(2a)
  double single_term = 0.0;        // one binomial term of the exact moment
  double single_term_floor = 0.0;  // (gamma/2) a^(gamma-1+1/m) (1-a)^(1-gamma)
  double reduced_floor = 0.0;      // (gamma/4) a^(gamma-1) (1-a)^(1-gamma)
  double assumed_sqrt_term = 0.0;  // C sqrt(p/k)
  double exact_moment = 0.0;       // selector_moment_exact(m, a, k, m)
  double residual = 0.0;           // (exact_moment - assumed_sqrt_term) * k
  bool chain_ok = false;
  std::vector<std::string> failed_links;
};

// If the moment of the centered selector average were bounded by
// C sqrt(p/k) + f(p)/k, a single binomial term already forces f(p) to grow
// linearly in p. Walks that derivation link by link at rate a and exponent
// p, recording each intermediate inequality.
inline LowerBoundWitness lower_bound_f(double p, double C, const std::string& variant) {
  require(std::isfinite(p) && p >= 4.0, errc::invalid_parameter, "p must be >= 4");
  require(std::isfinite(C) && C > 0.0, errc::invalid_parameter, "constant C must be > 0");
  LowerBoundWitness w;
  w.variant = variant;
  w.C = C;
  w.p = p;
  const double e1 = std::exp(1.0);
  if (variant == "fixed-gamma") {
    w.gamma = 0.25;
    w.a = std::pow(7.0 / 8.0, 3.0) / std::pow(32.0 * C, 4.0);
  } else if (variant == "optimized-gamma") {
    require(C >= 1.5, errc::precondition, "optimized variant needs C >= 1.5");
    w.gamma = 1.0 / (2.0 * std::log(8.0 * e1 * e1 * C));
    w.a = std::pow(w.gamma / (8.0 * e1 * C), 2.0 / (1.0 - 2.0 * w.gamma));
  } else {
    fail(errc::invalid_parameter, "variant must be fixed-gamma or optimized-gamma");
  }
  require(w.a <= 0.125, errc::precondition, "hypothesis a <= 1/8 fails");
  require(w.a > std::exp2(-p), errc::precondition, "hypothesis a > 2^-p fails");

  w.m = static_cast<int>(std::llround(p));
  w.k = w.a * static_cast<double>(w.m);
  w.j = static_cast<long>(std::ceil(w.gamma * static_cast<double>(w.m)));

  w.selector_ratio = static_cast<double>(w.j) / w.k;
  w.ratio_floor = w.gamma / w.a;
  w.deviation = std::abs(w.selector_ratio - 1.0);
  w.deviation_floor = w.gamma / (2.0 * w.a);

  double la = std::log(w.a);
  double l1a = std::log1p(-w.a);
  double lc = std::lgamma(w.m + 1.0) - std::lgamma(static_cast<double>(w.j) + 1.0) -
              std::lgamma(static_cast<double>(w.m - w.j) + 1.0);
  double log_prob_root = (lc + w.j * la + (w.m - w.j) * l1a) / static_cast<double>(w.m);
  w.single_term = w.deviation * std::exp(log_prob_root);
  w.single_term_floor =
      (w.gamma / 2.0) *
      std::exp((w.gamma - 1.0 + 1.0 / static_cast<double>(w.m)) * la + (1.0 - w.gamma) * l1a);
  w.reduced_floor = (w.gamma / 4.0) * std::exp((w.gamma - 1.0) * la + (1.0 - w.gamma) * l1a);
  w.assumed_sqrt_term = C * std::sqrt(p / w.k);
  w.exact_moment = selector_moment_exact(w.m, w.a, w.k, static_cast<double>(w.m));
  w.residual = (w.exact_moment - w.assumed_sqrt_term) * w.k;

  if (variant == "fixed-gamma") {
    w.lower = (std::pow(w.a, 0.25) * std::pow(7.0 / 8.0, 0.75) / 32.0) * p;
  } else {
    w.lower = std::sqrt(w.a) * C * p;
  }

  auto link = [&w](bool ok, const char* name) {
    if (!ok) w.failed_links.push_back(name);
  };
  const double slack = 1e-9;
  link(w.selector_ratio >= w.ratio_floor * (1.0 - slack), "j/k >= gamma/a");
  link(w.ratio_floor >= 2.0, "gamma/a >= 2");
  link(w.deviation >= w.deviation_floor * (1.0 - slack), "|j/k - 1| >= gamma/(2a)");
  link(w.single_term >= w.single_term_floor * (1.0 - slack),
       "single term >= (gamma/2) a^(gamma-1+1/m) (1-a)^(1-gamma)");
  link(2.0 * std::pow(w.a, 1.0 / static_cast<double>(w.m)) >= 1.0, "2 a^(1/m) >= 1");
  link(w.reduced_floor >= 2.0 * w.assumed_sqrt_term * (1.0 - slack),
       "reduced floor >= 2 C sqrt(p/k)");
  link(w.exact_moment >= w.single_term * (1.0 - slack), "exact moment >= single term");
  link(w.exact_moment > w.assumed_sqrt_term, "exact moment > C sqrt(p/k)");
  link(w.residual >= w.lower * (1.0 - slack), "residual >= guaranteed lower bound");
  w.chain_ok = w.failed_links.empty();
  return w;
}

}  // namespace ncineq::ensembles
