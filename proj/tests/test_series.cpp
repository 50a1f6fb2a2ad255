#include <doctest.h>

#include <cmath>

#include "octa/series.hpp"
#include "oracles.hpp"

using namespace octa;

TEST_CASE("first coefficients") {
  CHECK(series(0).coefficients == std::vector<BigInt>{1});
  CHECK(series(3).coefficients == std::vector<BigInt>{1, 3, 36, 594});
  CHECK(series(4)[4] == BigInt(11340));
}

TEST_CASE("both recursions agree with the Fuss-Catalan closed form") {
  const SeriesTable q = quartic_series(300);
  const SeriesTable f = fixed_point_series(300);
  CHECK(q == f);
  for (int n = 0; n <= 300; ++n) REQUIRE(q[n].get_str() == oracle::fuss_catalan(n).str());
}

TEST_CASE("marked bubble series is A - 1") {
  const SeriesTable a = series(60);
  const SeriesTable p = marked_bubble_series(60);
  CHECK(p[0] == 0);
  CHECK(p[1] == 3);
  CHECK(p[2] == a[2]);
  for (int n = 1; n <= 60; ++n) REQUIRE(p[n] == a[n]);
}

TEST_CASE("exact critical point") {
  const ExactRational ac(4, 3), zc(9, 256);
  CHECK(phi_exact(ac, zc) == 0);
  CHECK(phi_a_exact(ac, zc) == 0);
  CHECK(phi_exact(ExactRational(1), ExactRational(0)) == 0);
  CHECK(phi_exact(ExactRational(5, 4), zc) != 0);
}

TEST_CASE("numeric singularity") {
  const SingularityResult r = singularity();
  using boost::multiprecision::abs;
  CHECK(abs(r.a_c - HighPrecision(4) / 3) < HighPrecision("1e-12"));
  CHECK(abs(r.z_c - HighPrecision(9) / 256) < HighPrecision("1e-12"));
  CHECK(r.phi_residual < HighPrecision("1e-30"));
  CHECK(r.phi_a_residual < HighPrecision("1e-30"));
  CHECK(r.exponent_estimate == doctest::Approx(0.5).epsilon(1e-3));
  // A_c - A(z) ~ sqrt(2 Phi_z / Phi_AA) sqrt(z_c - z) = sqrt(2048/243) sqrt(z_c - z).
  CHECK(r.amplitude == doctest::Approx(std::sqrt(2048.0 / 243.0)).epsilon(1e-3));
}

TEST_CASE("ratio and exponent asymptotics") {
  const SeriesTable t = series(1000);
  CHECK(std::abs(coefficient_ratio(t, 500) / (256.0 / 9.0) - 1) < 0.01);
  CHECK(log_big(t[3]) == doctest::Approx(std::log(594.0)));
  const double e500 = exponent_check(series(500));
  const double e1000 = exponent_check(t);
  CHECK(std::abs(e1000 + 1.5) < 0.05);
  CHECK(std::abs(e1000 + 1.5) <= std::abs(e500 + 1.5));
  CHECK(exponent_check(marked_bubble_series(1000)) == doctest::Approx(e1000).epsilon(1e-12));
}
