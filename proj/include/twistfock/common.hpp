#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace twistfock {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct DegenerateGramError : Error {
  using Error::Error;
};
struct IdealError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

/// Residual tolerance for numeric verdicts. Rank and kernel decisions are
/// relative to the largest singular value; residual verdicts compare
/// max-entry norms against eps directly.
struct Tolerance {
  double eps = 1e-9;
  Tolerance() = default;
  Tolerance(double e) : eps(e) {
    if (!(e >= 0.0)) throw Error("tolerance must be nonnegative");
  }
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// z^k for integer k; negative k goes through the reciprocal.
inline Complex int_pow(Complex z, long long k) {
  if (k < 0) {
    if (z == Complex{0.0, 0.0}) throw Error("zero base with negative exponent");
    return Complex{1.0, 0.0} / int_pow(z, -k);
  }
  Complex out{1.0, 0.0};
  for (long long i = 0; i < k; ++i) out *= z;
  return out;
}

}  // namespace twistfock
