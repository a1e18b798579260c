#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fracwave/errors.hpp"
#include "fracwave/fracops.hpp"
#include "fracwave/gamma.hpp"
#include "fracwave/mittag.hpp"

using namespace fracwave;

TEST_CASE("ml against high-precision references") {
  // Reference values computed with a 300-digit arbitrary-precision sum.
  // Tolerances follow the evaluation zone: near machine precision in the
  // series and deep-asymptotic zones, u*exp(|z|^{1/a}) cancellation noise
  // near the series/asymptotic crossover.
  struct Ref { double a, b, z, value, tol; };
  const Ref refs[] = {
      {1.5, 1.0, -2.0, 0.029430685602826471728, 1e-13},
      {1.5, 1.0, -5.0, -0.3000820504131308808, 1e-13},
      {1.5, 1.0, -29.0, -0.013342009011409273025, 1e-10},
      {0.5, 1.0, -1.0, 0.42758357615580700441, 1e-13},
      {0.5, 1.0, -4.0, 0.13699945762506138989, 2e-8},
      {1.8, 1.0, -50.0, -0.17643515585736695824, 1e-11},
      {1.8, 1.0, -163.0, -0.033788793499322207704, 5e-8},
      {0.7, 1.0, -35.0, 0.0097720879197626564848, 1e-13},
      {0.6, 1.0, -23.64, 0.019363404683917217745, 1e-13},
      {1.5, 2.5, -11.18, 0.095210996227804338916, 1e-13},
      {1.9, 1.0, -100.0, 0.10336021818253253985, 1e-9},
      {0.75, 1.75, -3.0, 0.29138162102938615765, 1e-13},
      {1.2, 2.2, -7.5, 0.13945770662702856523, 1e-13},
      {1.5, 1.0, 2.0, 3.3487008963183954036, 1e-12},
      {0.9, 1.3, 4.0, 74.295067412839304666, 1e-10},
      {1.5, 1.0, -80.0, -0.0036346550867580340765, 1e-8},
      {1.5, 1.0, -120.0, -0.0023528710865389321234, 1e-10},
      {1.5, 2.0, -90.0, 0.0062646848497124707956, 1e-10},
      {1.8, 1.0, -400.0, -0.0065268701049121207482, 1e-11},
      {1.2, 1.0, -60.0, -0.002973041025665919447, 1e-12},
      {1.6, 2.6, -200.0, 0.0050065344541949619856, 1e-12},
      {0.3, 1.0, -2.0, 0.29023222616787535504, 1e-9},
      {0.3, 1.0, -8.0, 0.089493095818620724136, 1e-13},
      {1.0, 2.0, -30.0, 0.033333333333330214126, 1e-13},
      {1.0, 0.5, -40.0, -0.0073349985289032598988, 1e-13},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CAPTURE(r.z);
    CHECK(std::abs(ml(r.a, r.b, r.z) - r.value) <= r.tol);
  }
}

TEST_CASE("ml closed-form reductions") {
  for (double t = 0.0; t <= 10.0; t += 0.01) {
    CHECK(std::abs(ml(2.0, 1.0, -t * t) - std::cos(t)) <= 1e-10);
    CHECK(std::abs(t * ml(2.0, 2.0, -t * t) - std::sin(t)) <= 1e-10);
  }
  for (double z = -50.0; z <= 20.0; z += 0.37) {
    CHECK(std::abs(ml(1.0, 1.0, z) - std::exp(z)) <=
          1e-12 * std::abs(std::exp(z)));
  }
}

TEST_CASE("series branch reproduces the closed forms (not just dispatch)") {
  MLSpec series{2.0, 1.0, MLPolicy::Series};
  CHECK(std::abs(ml(series, -4.0) - std::cos(2.0)) <= 1e-13);
  series.b = 2.0;
  CHECK(std::abs(ml(series, -4.0) - std::sin(2.0) / 2.0) <= 1e-13);
  MLSpec exp_series{1.0, 1.0, MLPolicy::Series};
  CHECK(std::abs(ml(exp_series, 3.0) - std::exp(3.0)) <= 1e-12 * std::exp(3.0));
}

TEST_CASE("ml at z = 0 is 1/Gamma(b)") {
  CHECK(ml(0.7, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ml(1.3, 2.5, 0.0) ==
        doctest::Approx(reciprocal_gamma(2.5)).epsilon(1e-13));
  CHECK(ml(1.0, 0.0, 0.0) == 0.0);  // 1/Gamma(0)
  CHECK(ml(1.0, -2.0, 0.0) == 0.0);
}

TEST_CASE("ml recurrence E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z)") {
  for (double a : {0.4, 0.8, 1.3, 1.9}) {
    for (double b : {0.5, 1.0, 2.2}) {
      for (double z : {-8.0, -2.0, -0.5, 0.0, 0.7, 3.0}) {
        const double lhs = ml(a, b, z);
        const double rhs = reciprocal_gamma(b) + z * ml(a, a + b, z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("complete monotonicity samples: E_{a,1}(-t^a) decays in (0,1]") {
  for (double a : {0.3, 0.6, 1.0}) {
    double prev = 1.0;
    for (double t = 0.05; t <= 20.0; t += 0.05) {
      const double v = ml(a, 1.0, -std::pow(t, a));
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("ml error paths") {
  CHECK_THROWS_AS(ml(-0.5, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ml(MLSpec{0.5, 1.0, MLPolicy::Auto, 1e-12, 5}, 1.0),
                  DomainError);  // kmax too small
  CHECK_THROWS_AS(ml(MLSpec{1.0, 1.0}, std::nan("")), DomainError);
  // forced series beyond its |z| cap
  CHECK_THROWS_AS(ml(MLSpec{1.5, 1.0, MLPolicy::Series}, -31.0), DomainError);
  // forced series where cancellation overflows double range
  CHECK_THROWS_AS(ml(MLSpec{0.2, 1.0, MLPolicy::Series}, -30.0),
                  NonConvergenceError);
  // asymptotic branch is a negative-axis expansion
  CHECK_THROWS_AS(ml(MLSpec{1.5, 1.0, MLPolicy::Asymptotic}, 2.0), DomainError);
  // special-case policies guard their parameter pairs
  CHECK_THROWS_AS(ml(MLSpec{1.5, 1.0, MLPolicy::ExpSpecial}, 1.0), DomainError);
  CHECK_THROWS_AS(ml(MLSpec{2.0, 3.0, MLPolicy::TrigSpecial}, 1.0), DomainError);
}

TEST_CASE("sine-like branch") {
  // alpha = 1 reduces to sin(mubar t)
  CHECK(ml_sin_branch(Order(1.0), 1.0, std::numbers::pi / 2) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ml_sin_branch(Order(1.0), 2.0, 0.7) ==
        doctest::Approx(std::sin(1.4)).epsilon(1e-10));
  CHECK(ml_sin_branch(Order(0.5), 3.0, 0.0) == 0.0);
  CHECK_THROWS_AS(ml_sin_branch(Order(0.5), 1.0, -1.0), DomainError);

  // small-t leading term t^alpha / Gamma(alpha + 1), cross-checked via ml
  const double t = 1e-4;
  const double lead = std::pow(t, 0.5) / gamma_fn(1.5);
  const double full = ml_sin_branch(Order(0.5), 1.0, t);
  CHECK(std::abs(full - lead) <= 1e-4 * lead);
  const double via_ml = std::pow(t, 0.5) * ml(1.0, 1.5, -t);
  CHECK(full == doctest::Approx(via_ml).epsilon(1e-12));
}

TEST_CASE("closed-form Caputo derivatives of the oscillating pair") {
  // alpha = 1, lambda = -1: classical derivatives of cos and sin at t = 1
  const CaputoOfML d = caputo_of_ml(Order(1.0), -1.0, 1.0);
  CHECK(d.d_cos == doctest::Approx(-std::sin(1.0)).epsilon(1e-12));
  CHECK(d.d_sin == doctest::Approx(std::cos(1.0)).epsilon(1e-12));

  // t -> 0+: the sine branch's derivative tends to E(0) = 1
  const CaputoOfML d0 = caputo_of_ml(Order(0.6), -4.0, 0.0);
  CHECK(d0.d_sin == 1.0);
  CHECK(d0.d_cos == 0.0);

  CHECK_THROWS_AS(caputo_of_ml(Order(1.5), -1.0, 1.0), DomainError);
}

TEST_CASE("closed-form derivative agrees with the L1 scheme") {
  // D^a of the cosine branch, alpha = 0.75, on [0.5, 5] at h = 2^-11
  const Order alpha(0.75);
  const double a = alpha.value();
  const double lambda = -1.0;  // mubar = 1
  const TimeGrid grid(0.0, std::pow(2.0, -11), 5 * 2048);
  std::vector<double> g2(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double ta = std::pow(grid.node(j), a);
    g2[j] = ml(2.0 * a, 1.0, lambda * ta * ta);
  }
  const std::vector<double> num = caputo_l1(g2, alpha, grid);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (grid.node(j) < 0.5) continue;
    const double exact = caputo_of_ml(alpha, lambda, grid.node(j)).d_cos;
    worst = std::max(worst, std::abs(num[j] - exact));
  }
  CHECK(worst <= 1e-3);
}
