#pragma once

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <gmpxx.h>

namespace octa {

using BigInt = mpz_class;
using HighPrecision = boost::multiprecision::cpp_bin_float_50;
using ExactRational = boost::multiprecision::cpp_rational;

/// Coefficients a_0..a_n of a power series in z.
struct SeriesTable {
  std::vector<BigInt> coefficients;

  int size() const { return static_cast<int>(coefficients.size()); }
  const BigInt& operator[](int n) const { return coefficients[n]; }
  friend bool operator==(const SeriesTable& a, const SeriesTable& b) {
    return a.coefficients == b.coefficients;
  }
};

/// A(z) = 1 + 3z A(z)^4 through the quartic convolution
/// a_{n+1} = 3 sum_{k1+k2+k3+k4=n} a_k1 a_k2 a_k3 a_k4.
SeriesTable quartic_series(int n_max);

/// The same series through A = 1/(1 - 3z A^3), i.e. A = 1 + U A with
/// U = 3z A^3.
SeriesTable fixed_point_series(int n_max);

/// Quartic series, cross-checked coefficient by coefficient against the
/// fixed-point route. Throws std::logic_error if they ever differ.
SeriesTable series(int n_max);

/// P(z) = 3z A(z)^4 (dominant graphs with a marked bubble), computed from a
/// fresh fourth power of A and checked against A(z) - 1. Requires n_max >= 1.
SeriesTable marked_bubble_series(int n_max);

/// a_{n+1} / a_n in double precision.
double coefficient_ratio(const SeriesTable& table, int n);

/// Natural log of a positive big integer.
double log_big(const BigInt& x);

struct SingularityResult {
  HighPrecision a_c;
  HighPrecision z_c;
  /// Local exponent of A_c - A(z) in (z_c - z), measured on the branch.
  double exponent_estimate = 0.0;
  /// (A_c - A(z)) / sqrt(z_c - z) at the closest sample point.
  double amplitude = 0.0;
  /// |Phi| and |dPhi/dA| at the returned point.
  HighPrecision phi_residual;
  HighPrecision phi_a_residual;
};

/// Phi(A, z) = 1 - A + 3 z A^4 in exact rational arithmetic.
ExactRational phi_exact(const ExactRational& a, const ExactRational& z);
ExactRational phi_a_exact(const ExactRational& a, const ExactRational& z);

/// Solves Phi = dPhi/dA = 0: z = 1/(12 A^3) is eliminated, the remaining
/// one-variable equation is bracketed and bisected. Throws std::runtime_error
/// if the bracket is lost.
SingularityResult singularity();

/// Least-squares slope of log(a_n z_c^n) against log n over the upper half of
/// the table; approaches -3/2 for a square-root singularity. Zero
/// coefficients (a shifted series) are skipped.
double exponent_check(const SeriesTable& table);

}  // namespace octa
