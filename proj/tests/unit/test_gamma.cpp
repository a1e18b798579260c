#include <cmath>

#include "doctest.h"
#include "fracwave/errors.hpp"
#include "fracwave/gamma.hpp"

using namespace fracwave;

TEST_CASE("gamma at classical points") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(10.0) == doctest::Approx(362880.0).epsilon(1e-13));
  // sqrt(pi) and the half-integer ladder
  CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.88622692545275801365).epsilon(1e-14));
}

TEST_CASE("gamma below 0.5 via reflection") {
  // Gamma(-1/2) = -2 sqrt(pi), confirmed against a high-precision oracle
  CHECK(gamma_fn(-0.5) ==
        doctest::Approx(-3.5449077018110320546).epsilon(1e-13));
  CHECK(gamma_fn(0.75) ==
        doctest::Approx(1.2254167024651776451).epsilon(1e-14));
  CHECK(gamma_fn(-1.5) ==
        doctest::Approx(2.3632718012073547031).epsilon(1e-13));
  // libm's tgamma as an independent cross-check
  for (double x : {-4.3, -2.7, -0.9, 0.1, 0.3, 2.6, 7.9}) {
    CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(5e-13));
  }
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-1.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-6.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-3.0 + 1e-13), PoleError);
  CHECK_NOTHROW(gamma_fn(-3.0 + 1e-9));
  CHECK_THROWS_AS(gamma_fn(std::nan("")), DomainError);
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)") {
  for (double x = -5.5; x <= 10.0; x += 0.0103) {
    bool near_pole = false;
    for (int k = 0; k >= -6; --k) {
      if (std::abs(x - k) < 0.05 || std::abs(x + 1.0 - k) < 0.05) {
        near_pole = true;
      }
    }
    if (near_pole) continue;
    const double lhs = gamma_fn(x + 1.0);
    const double rhs = x * gamma_fn(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("reciprocal gamma") {
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-4.0) == 0.0);
  CHECK(reciprocal_gamma(-2.0 + 5e-13) == 0.0);
  CHECK(reciprocal_gamma(3.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(reciprocal_gamma(200.0) == 0.0);  // Gamma overflows, reciprocal 0
  CHECK(reciprocal_gamma(171.5) ==
        doctest::Approx(std::exp(-std::lgamma(171.5))).epsilon(1e-10));
}

TEST_CASE("log gamma") {
  for (double x : {0.1, 0.5, 1.0, 4.2, 20.0, 150.0}) {
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
}

TEST_CASE("sin_pi range reduction") {
  CHECK(sin_pi(0.0) == 0.0);
  CHECK(sin_pi(1.0) == 0.0);
  CHECK(sin_pi(-7.0) == 0.0);
  CHECK(sin_pi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sin_pi(-2.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(sin_pi(100.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}
