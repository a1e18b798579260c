#include "fracwave/solutions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracwave/errors.hpp"
#include "fracwave/gamma.hpp"
#include "fracwave/mittag.hpp"

namespace fracwave {

namespace {
constexpr double kConditionTol = 1e-12;
}

SimilaritySolution build_similarity(const Order& alpha) {
  const double a = alpha.value();
  if (alpha.near_half()) {
    throw SingularAlphaError(
        "build_similarity: divergent at alpha = 1/2 (Gamma(1-2alpha) pole)");
  }
  if (std::abs(a - 1.0) < 1e-12) {
    throw IntegerAlphaError(
        "build_similarity: alpha = 1 is the classical equation; the "
        "separated power ansatz does not apply");
  }
  if (a >= 1.0) {
    throw DomainError("build_similarity: alpha must lie in (0,1)");
  }

  const double g1ma = gamma_fn(1.0 - a);
  const double g1m2a = gamma_fn(1.0 - 2.0 * a);
  const double kappa = g1ma / g1m2a;

  SimilaritySolution s{alpha, {}, kappa, 0.0};
  s.coeff[2] = 1.0;
  s.coeff[3] = kappa / 60.0;
  s.coeff[1] = 20.0 / kappa;
  s.coeff[0] = (400.0 / 3.0) / (kappa * kappa);
  const double printed_ratio = g1m2a / (60.0 * g1ma);
  s.printed_c0 = (400.0 / 3.0) * printed_ratio * printed_ratio;
  return s;
}

double eval_similarity(const SimilaritySolution& s, double x, double t) {
  if (!(t > 0.0)) {
    throw DomainError("eval_similarity: requires t > 0");
  }
  const auto& c = s.coeff;
  const double poly = ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
  return poly * std::pow(t, -s.alpha.value());
}

QuinticSolution build_quintic(const Order& alpha, double nu, double beta,
                              double gamma_c, double C) {
  if (alpha.value() > 1.0) {
    throw DomainError("build_quintic: alpha must lie in (0,1]");
  }
  const double condition = quintic_condition_value(nu, beta, gamma_c);
  if (std::abs(condition) > kConditionTol) {
    throw ConditionError("build_quintic: 16nu - 4beta + gamma = " +
                         std::to_string(condition) + ", must vanish");
  }
  const double mu = 2.0 * (nu - beta + gamma_c);
  if (std::abs(mu) < kConditionTol) {
    throw DegenerateError("build_quintic: mu = 2(nu - beta + gamma) is zero");
  }
  if (C == 0.0) {
    throw DegenerateError("build_quintic: C = 0 freezes the profile");
  }
  return QuinticSolution{alpha, nu, beta, gamma_c, C, mu, C * mu};
}

double eval_quintic(const QuinticSolution& q, double x, double t) {
  if (t < 0.0) {
    throw DomainError("eval_quintic: requires t >= 0");
  }
  if (q.alpha.is_integer()) {
    return q.C + std::cos(x + q.mubar * t);
  }
  return eval_quintic_ml(q, x, t);
}

double eval_quintic_ml(const QuinticSolution& q, double x, double t) {
  if (t < 0.0) {
    throw DomainError("eval_quintic_ml: requires t >= 0");
  }
  const double a = q.alpha.value();
  const double ta = std::pow(t, a);
  const double z = -(q.mubar * q.mubar) * ta * ta;
  const double cos_branch = ml(2.0 * a, 1.0, z);
  return q.C + cos_branch * std::cos(x) -
         ml_sin_branch(q.alpha, q.mubar, t) * std::sin(x);
}

OdibatSolution make_odibat(double a, double c, const Order& alpha) {
  if (!(a > 0.0)) {
    throw DomainError("make_odibat: requires a > 0");
  }
  if (alpha.value() > 1.0) {
    throw DomainError("make_odibat: alpha must lie in (0,1]");
  }
  return OdibatSolution{a, c, alpha, std::sqrt(a) / 2.0};
}

double eval_odibat_interior(const OdibatSolution& o, double x, double t) {
  if (t < 0.0) {
    throw DomainError("eval_odibat: requires t >= 0");
  }
  const double root_a = std::sqrt(o.a);
  const double scale = o.c / o.a;
  if (o.alpha.is_integer()) {
    return scale * (1.0 - std::cos(root_a * (x - o.c * t)));
  }
  const double tau = root_a * o.c * std::pow(t, o.alpha.value());
  const double z = -tau * tau;
  const double cos_branch = ml(2.0 * o.alpha.value(), 1.0, z);
  const double sin_branch =
      tau * ml(2.0 * o.alpha.value(), o.alpha.value() + 1.0, z);
  return scale *
         (1.0 - std::cos(root_a * x) * cos_branch -
          std::sin(root_a * x) * sin_branch);
}

bool odibat_in_support(const OdibatSolution& o, double x, double t) {
  const double center = o.c * std::pow(t, o.alpha.value());
  return std::abs(x - center) < std::numbers::pi / o.mu_supp;
}

double eval_odibat(const OdibatSolution& o, double x, double t) {
  if (t < 0.0) {
    throw DomainError("eval_odibat: requires t >= 0");
  }
  const double center = o.c * std::pow(t, o.alpha.value());
  // Boundary points take the interior formula's limit value.
  if (std::abs(x - center) > std::numbers::pi / o.mu_supp) {
    return 0.0;
  }
  return eval_odibat_interior(o, x, t);
}

double quintic_condition_value(double nu, double beta, double gamma_c) {
  return 16.0 * nu - 4.0 * beta + gamma_c;
}

KOperator third_order_operator() {
  KOperator op;
  op.beta = Rational(1, 2);
  op.n = 2;
  return op;
}

KOperator quintic_operator(const Rational& nu, const Rational& beta,
                           const Rational& gamma_c) {
  KOperator op;
  op.nu = nu;
  op.beta = beta;
  op.gamma_c = gamma_c;
  op.p = op.n = op.m = 2;
  return op;
}

KOperator odibat_operator(const Rational& a) {
  if (a.sign() <= 0) {
    throw DomainError("odibat_operator: requires a > 0");
  }
  KOperator op;
  op.gamma_c = -a;
  op.p = op.n = op.m = 2;
  op.uxx_flux = Rational(-1);
  return op;
}

KOperator rosenau_hyman([[maybe_unused]] const Order& alpha) {
  return quintic_operator(Rational(0), Rational(1), Rational(1));
}

}  // namespace fracwave
