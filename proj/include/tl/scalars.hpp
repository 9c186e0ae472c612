#pragma once
// Arithmetic at the evaluation point q = exp(i*pi/r) on the unit circle, r > N.
// All basis-side quantities are built from real trigonometric closed forms so
// that cup-basis matrices stay exactly real; complex arithmetic is confined to
// the spin-chain module.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace tl {

struct QParam {
  double r;           // deformation parameter, q = exp(i*pi/r)
  int N;              // strand count
  double tol = 1e-9;  // relative tolerance for approximate comparisons

  bool valid() const { return N >= 1 && r > static_cast<double>(N); }

  std::complex<double> q() const {
    const double t = std::numbers::pi / r;
    return {std::cos(t), std::sin(t)};
  }
};

// [m]_q = (q^m - q^{-m})/(q - q^{-1}) = sin(m*pi/r)/sin(pi/r)
inline double quantum_integer(int m, const QParam& p) {
  return std::sin(m * std::numbers::pi / p.r) / std::sin(std::numbers::pi / p.r);
}

// delta = -(q + q^{-1}) = -2 cos(pi/r), the weight of a closed loop
inline double loop_weight(const QParam& p) {
  return -2.0 * std::cos(std::numbers::pi / p.r);
}

// q^k + q^{-k} = 2 cos(k*pi/r); strictly positive for |k| <= N/2 < r/2.
// k may be half-integer (k = N/2 - n or N/2 - x).
inline double half_power_sum(double k, const QParam& p) {
  const double v = 2.0 * std::cos(k * std::numbers::pi / p.r);
  if (std::abs(v) < p.tol)
    throw std::domain_error("half_power_sum: degenerate denominator");
  return v;
}

inline bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace tl
