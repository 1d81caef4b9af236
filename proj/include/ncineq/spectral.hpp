#pragma once

// d x d Hermitian matrices as the working model of a finite trace algebra:
// the state is the normalized trace tr/d, and "Prob(a >= t)" is the fraction
// of eigenvalues at or above t (ties counted in).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncineq/errors.hpp"

namespace ncineq {

inline constexpr int kMaxDim = 256;

class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Eigen::MatrixXcd& raw) {
    require(raw.rows() == raw.cols(), errc::invalid_input, "matrix must be square");
    require(raw.rows() >= 1, errc::invalid_input, "matrix dimension must be >= 1");
    require(raw.rows() <= kMaxDim, errc::invalid_input, "matrix dimension exceeds 256");
    require(raw.allFinite(), errc::invalid_input, "matrix entries must be finite");
    asymmetry_ = (raw - raw.adjoint()).norm();
    double scale = raw.norm();
    require(asymmetry_ <= 1e-8 * scale || asymmetry_ == 0.0, errc::invalid_input,
            "matrix is not Hermitian within tolerance");
    mat_ = 0.5 * (raw + raw.adjoint());
  }

  static HermitianMatrix identity(int d) {
    return HermitianMatrix(Eigen::MatrixXcd::Identity(d, d));
  }

  static HermitianMatrix zero(int d) { return HermitianMatrix(Eigen::MatrixXcd::Zero(d, d)); }

  static HermitianMatrix diagonal(const std::vector<double>& entries) {
    int d = static_cast<int>(entries.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return HermitianMatrix(m);
  }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  double asymmetry() const { return asymmetry_; }

  nlohmann::json to_json() const {
    int d = dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int i = 0; i < d; ++i) {
      nlohmann::json rrow = nlohmann::json::array();
      nlohmann::json irow = nlohmann::json::array();
      for (int j = 0; j < d; ++j) {
        rrow.push_back(mat_(i, j).real());
        irow.push_back(mat_(i, j).imag());
      }
      re.push_back(std::move(rrow));
      im.push_back(std::move(irow));
    }
    return {{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
  }

  static HermitianMatrix from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("dim") && j.contains("re"), errc::invalid_input,
            "matrix literal needs \"dim\" and \"re\"");
    int d = j.at("dim").get<int>();
    require(d >= 1 && d <= kMaxDim, errc::invalid_input, "matrix literal dim out of range");
    auto read_plane = [d](const nlohmann::json& plane, const char* name) {
      require(plane.is_array() && static_cast<int>(plane.size()) == d, errc::invalid_input,
              std::string("matrix literal \"") + name + "\" must have dim rows");
      Eigen::MatrixXd out(d, d);
      for (int i = 0; i < d; ++i) {
        const auto& row = plane.at(static_cast<std::size_t>(i));
        require(row.is_array() && static_cast<int>(row.size()) == d, errc::invalid_input,
                std::string("matrix literal \"") + name + "\" must have dim columns per row");
        for (int jj = 0; jj < d; ++jj)
          out(i, jj) = row.at(static_cast<std::size_t>(jj)).get<double>();
      }
      return out;
    };
    Eigen::MatrixXd re = read_plane(j.at("re"), "re");
    Eigen::MatrixXd im = j.contains("im") ? read_plane(j.at("im"), "im")
                                          : Eigen::MatrixXd::Zero(d, d).eval();
    Eigen::MatrixXcd m =
        re.cast<std::complex<double>>() + std::complex<double>(0, 1) * im.cast<std::complex<double>>();
    return HermitianMatrix(m);
  }

 private:
  Eigen::MatrixXcd mat_;
  double asymmetry_ = 0.0;
};

struct EigenSystem {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // unitary, column i pairs with values(i)
};

inline EigenSystem eigh(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix());
  require(solver.info() == Eigen::Success, errc::domain, "eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Fraction of eigenvalues >= t, given the ascending spectrum.
inline double tail_fraction(const Eigen::VectorXd& ascending, double t) {
  const double* begin = ascending.data();
  const double* end = begin + ascending.size();
  auto it = std::lower_bound(begin, end, t);
  return static_cast<double>(end - it) / static_cast<double>(ascending.size());
}

inline double tail_trace(const HermitianMatrix& a, double t) {
  return tail_fraction(eigh(a).values, t);
}

namespace detail {

// (sum_i s_i^p / denom)^(1/p) with the largest value factored out so large p
// cannot overflow.
inline double p_mean(const std::vector<double>& s, double p, double denom) {
  double top = 0.0;
  for (double v : s) top = std::max(top, v);
  if (top == 0.0) return 0.0;
  if (std::isinf(p)) return top;
  double acc = 0.0;
  for (double v : s) acc += std::pow(v / top, p);
  return top * std::pow(acc / denom, 1.0 / p);
}

}  // namespace detail

inline double schatten_norm(const Eigen::MatrixXcd& a, double p, bool normalized) {
  require(p >= 1.0, errc::invalid_parameter, "Schatten index p must be >= 1");
  require(a.rows() == a.cols(), errc::invalid_input, "matrix must be square");
  std::vector<double> sv;
  sv.reserve(static_cast<std::size_t>(a.rows()));
  if ((a - a.adjoint()).norm() <= 1e-12 * std::max(1.0, a.norm())) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (a + a.adjoint()),
                                                           Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, errc::domain, "eigendecomposition failed");
    for (int i = 0; i < a.rows(); ++i) sv.push_back(std::abs(solver.eigenvalues()(i)));
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    for (int i = 0; i < a.rows(); ++i) sv.push_back(svd.singularValues()(i));
  }
  double denom = normalized ? static_cast<double>(a.rows()) : 1.0;
  return detail::p_mean(sv, p, denom);
}

inline double schatten_norm(const HermitianMatrix& a, double p, bool normalized) {
  return schatten_norm(a.matrix(), p, normalized);
}

// Normalized p-norm of a positive element evaluated through its tail profile:
// ||a||_p^p = p * int_0^inf t^(p-1) Prob(a > t) dt. The tail is a step
// function of the spectrum, so the integral is a finite sum of exact pieces
// (p/p * (b^p - a^p) per step); no quadrature is involved.
inline double pnorm_via_tail(const HermitianMatrix& a, double p) {
  require(p >= 1.0, errc::invalid_parameter, "p must be >= 1");
  Eigen::VectorXd vals = eigh(a).values;
  double top = std::max(std::abs(vals(0)), std::abs(vals(vals.size() - 1)));
  require(vals(0) >= -1e-12 * std::max(1.0, top), errc::domain,
          "element must be positive semidefinite");
  std::vector<double> v(vals.data(), vals.data() + vals.size());
  for (double& x : v) x = std::max(x, 0.0);
  std::sort(v.begin(), v.end());
  const double d = static_cast<double>(v.size());
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= prev) continue;  // skip ties and zeros
    // on (prev, v[i]) the tail counts everything from index i upward
    double count = static_cast<double>(v.size() - i);
    acc += (count / d) * (std::pow(v[i], p) - std::pow(prev, p));
    prev = v[i];
  }
  return std::pow(acc, 1.0 / p);
}

inline Eigen::MatrixXcd expm(const HermitianMatrix& a) {
  EigenSystem es = eigh(a);
  Eigen::VectorXd ev = es.values.array().exp();
  return es.vectors * ev.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
         es.vectors.adjoint();
}

inline double normalized_trace(const Eigen::MatrixXcd& a) {
  return a.trace().real() / static_cast<double>(a.rows());
}

// Returns {tau(exp(A+B)), tau(exp(A/2) exp(B) exp(A/2))}; the first never
// exceeds the second, and callers report the gap.
inline std::pair<double, double> golden_thompson_gap(const HermitianMatrix& a,
                                                     const HermitianMatrix& b) {
  require(a.dim() == b.dim(), errc::invalid_input, "dimension mismatch");
  HermitianMatrix sum(a.matrix() + b.matrix());
  HermitianMatrix half(0.5 * a.matrix());
  double lhs = normalized_trace(expm(sum));
  Eigen::MatrixXcd ea2 = expm(half);
  Eigen::MatrixXcd rhs_m = ea2 * expm(b) * ea2;
  return {lhs, normalized_trace(rhs_m)};
}

}  // namespace ncineq
