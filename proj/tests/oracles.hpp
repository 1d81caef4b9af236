#pragma once

// Independent reference implementations used only by the test suite. These
// deliberately take different algebraic routes than the library (direct
// summation instead of log-space, series instead of quadrature, recurrences
// instead of closed forms) so agreement is meaningful.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

// Catalan numbers by the convolution recurrence.
inline double catalan(int n) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c[m] = s;
  }
  return c[n];
}

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// E^{1/p} of |B/k - 1|^p, B ~ Binomial(m, lam), by direct summation in
// plain doubles. Only valid where the terms stay in range.
inline double selector_moment_brute(int m, double lam, double k, double p) {
  double acc = 0.0;
  for (int j = 0; j <= m; ++j) {
    double prob = binom(m, j) * std::pow(lam, j) * std::pow(1.0 - lam, m - j);
    acc += prob * std::pow(std::abs(j / k - 1.0), p);
  }
  return std::pow(acc, 1.0 / p);
}

// Unitary DFT entry, row w, column t.
inline std::complex<double> dft_entry(int n, int w, int t) {
  double arg = -2.0 * 3.14159265358979323846 * static_cast<double>(w) *
               static_cast<double>(t) / static_cast<double>(n);
  double s = 1.0 / std::sqrt(static_cast<double>(n));
  return {s * std::cos(arg), s * std::sin(arg)};
}

// Upper incomplete gamma, closed forms for integer shape 1..3.
inline double incgamma_closed(int alpha, double p) {
  double e = std::exp(-p);
  if (alpha == 1) return e;
  if (alpha == 2) return e * (p + 1.0);
  return e * (p * p + 2.0 * p + 2.0);  // alpha == 3
}

// Composite Simpson on [a,b]; panels must be even.
template <class F>
double simpson(F f, double a, double b, int panels) {
  double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

// MGF of the semicircle law of radius 2 at lam, by integrating the density.
// Parameterized t = 2 sin(theta) so the integrand is smooth and composite
// Simpson converges at full order.
inline double semicircle_mgf_quadrature(double lam) {
  const double pi = 3.14159265358979323846;
  auto f = [lam, pi](double theta) {
    double c = std::cos(theta);
    return (2.0 / pi) * c * c * std::exp(2.0 * lam * std::sin(theta));
  };
  return simpson(f, -0.5 * pi, 0.5 * pi, 20000);
}

// Scalar Rademacher sum moments: E (e_1 + ... + e_n)^4 = 3n^2 - 2n.
inline double rademacher_fourth_moment(int n) {
  double nn = n;
  return 3.0 * nn * nn - 2.0 * nn;
}

}  // namespace oracles
