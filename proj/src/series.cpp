#include "octa/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace octa {

namespace {

// sum_{k=0}^{n} v[k] v[n-k], using the symmetry of the terms.
BigInt self_convolution(const std::vector<BigInt>& v, int n) {
  BigInt acc = 0;
  for (int k = 0; k < n - k; ++k) mpz_addmul(acc.get_mpz_t(), v[k].get_mpz_t(), v[n - k].get_mpz_t());
  acc *= 2;
  if (n % 2 == 0) mpz_addmul(acc.get_mpz_t(), v[n / 2].get_mpz_t(), v[n / 2].get_mpz_t());
  return acc;
}

// sum_{k=0}^{n} u[k] v[n-k].
BigInt convolution(const std::vector<BigInt>& u, const std::vector<BigInt>& v, int n, int from = 0) {
  BigInt acc = 0;
  for (int k = from; k <= n; ++k) mpz_addmul(acc.get_mpz_t(), u[k].get_mpz_t(), v[n - k].get_mpz_t());
  return acc;
}

template <class F>
HighPrecision bisect(F&& f, HighPrecision lo, HighPrecision hi) {
  HighPrecision flo = f(lo), fhi = f(hi);
  if ((flo > 0) == (fhi > 0)) throw std::runtime_error("bisection bracket has no sign change");
  for (int i = 0; i < 400 && hi - lo > 0; ++i) {
    const HighPrecision mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    const HighPrecision fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

SeriesTable quartic_series(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<BigInt> a(n_max + 1), sq(n_max + 1), quartic(n_max + 1);
  a[0] = 1;
  for (int n = 0; n < n_max; ++n) {
    sq[n] = self_convolution(a, n);
    quartic[n] = self_convolution(sq, n);
    a[n + 1] = 3 * quartic[n];
  }
  return SeriesTable{std::move(a)};
}

SeriesTable fixed_point_series(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<BigInt> a(n_max + 1), sq(n_max + 1), cube(n_max + 1), u(n_max + 1);
  a[0] = 1;
  u[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    sq[n - 1] = self_convolution(a, n - 1);
    cube[n - 1] = convolution(sq, a, n - 1);
    u[n] = 3 * cube[n - 1];
    a[n] = convolution(u, a, n, 1);
  }
  return SeriesTable{std::move(a)};
}

SeriesTable series(int n_max) {
  SeriesTable quartic = quartic_series(n_max);
  const SeriesTable fixed = fixed_point_series(n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (quartic[n] != fixed[n])
      throw std::logic_error("series routes disagree at n = " + std::to_string(n));
  }
  return quartic;
}

SeriesTable marked_bubble_series(int n_max) {
  if (n_max < 1) throw std::invalid_argument("marked bubble series needs n_max >= 1");
  const SeriesTable a = quartic_series(n_max);
  std::vector<BigInt> sq(n_max), fourth(n_max), p(n_max + 1);
  for (int n = 0; n < n_max; ++n) sq[n] = convolution(a.coefficients, a.coefficients, n);
  for (int n = 0; n < n_max; ++n) fourth[n] = convolution(sq, sq, n);
  p[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    p[n] = 3 * fourth[n - 1];
    if (p[n] != a[n])
      throw std::logic_error("P(z) differs from A(z) - 1 at n = " + std::to_string(n));
  }
  return SeriesTable{std::move(p)};
}

double log_big(const BigInt& x) {
  if (sgn(x) <= 0) throw std::domain_error("log of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double coefficient_ratio(const SeriesTable& table, int n) {
  if (n < 0 || n + 1 >= table.size()) throw std::out_of_range("ratio index outside the table");
  mpq_class q(table[n + 1], table[n]);
  q.canonicalize();
  return q.get_d();
}

ExactRational phi_exact(const ExactRational& a, const ExactRational& z) {
  return 1 - a + 3 * z * a * a * a * a;
}

ExactRational phi_a_exact(const ExactRational& a, const ExactRational& z) {
  return -1 + 12 * z * a * a * a;
}

SingularityResult singularity() {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  auto z_of = [](const HighPrecision& a) { return 1 / (12 * a * a * a); };
  auto phi = [](const HighPrecision& a, const HighPrecision& z) {
    return 1 - a + 3 * z * pow(a, 4);
  };
  // Phi(A, 1/(12 A^3)) = 1 - 3A/4 once the critical-point condition is used.
  auto eliminated = [&](const HighPrecision& a) { return phi(a, z_of(a)); };

  SingularityResult r;
  r.a_c = bisect(eliminated, HighPrecision(1), HighPrecision(2));
  r.z_c = z_of(r.a_c);
  r.phi_residual = abs(phi(r.a_c, r.z_c));
  r.phi_a_residual = abs(-1 + 12 * r.z_c * pow(r.a_c, 3));

  // The physical branch A(z) < A_c for z slightly below z_c.
  auto branch = [&](const HighPrecision& z) {
    return bisect([&](const HighPrecision& a) { return phi(a, z); }, HighPrecision(1), r.a_c);
  };
  const HighPrecision d1("1e-12"), d2("1e-16");
  const HighPrecision gap1 = r.a_c - branch(r.z_c - d1);
  const HighPrecision gap2 = r.a_c - branch(r.z_c - d2);
  r.exponent_estimate = static_cast<double>(log(gap1 / gap2) / log(d1 / d2));
  r.amplitude = static_cast<double>(gap2 / sqrt(d2));
  return r;
}

double exponent_check(const SeriesTable& table) {
  const int n_max = table.size() - 1;
  if (n_max < 4) throw std::invalid_argument("exponent fit needs a longer table");
  const double log_zc = std::log(9.0 / 256.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = n_max / 2; n <= n_max; ++n) {
    if (n == 0 || sgn(table[n]) <= 0) continue;
    const double x = std::log(static_cast<double>(n));
    const double y = log_big(table[n]) + n * log_zc;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace octa
