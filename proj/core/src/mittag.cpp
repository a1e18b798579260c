#include "fracwave/mittag.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracwave/errors.hpp"
#include "fracwave/gamma.hpp"

namespace fracwave {

namespace {

// The power series loses roughly u * exp(|z|^{1/a}) in absolute terms to
// cancellation on the negative axis (the largest term is ~exp(|z|^{1/a})).
// The asymptotic expansion's optimal-truncation error shrinks like
// exp(-|z|^{1/a}). The two error curves cross near |z|^{1/a} = ln(1/u)/2.
constexpr double kSeriesLogCap = 18.0;

bool is_special_exp(double a, double b) { return a == 1.0 && b == 1.0; }
bool is_special_trig(double a, double b) {
  return a == 2.0 && (b == 1.0 || b == 2.0);
}

double eval_special_exp(double z) { return std::exp(z); }

double eval_special_trig(double b, double z) {
  // E_{2,1}(z) = cos(sqrt(-z)) resp. cosh(sqrt(z));
  // E_{2,2}(z) = sin(sqrt(-z))/sqrt(-z) resp. sinh(sqrt(z))/sqrt(z).
  if (b == 1.0) {
    if (z < 0.0) return std::cos(std::sqrt(-z));
    return std::cosh(std::sqrt(z));
  }
  if (z == 0.0) return 1.0;  // 1/Gamma(2)
  if (z < 0.0) {
    const double s = std::sqrt(-z);
    return std::sin(s) / s;
  }
  const double s = std::sqrt(z);
  return std::sinh(s) / s;
}

double eval_series(const MLSpec& spec, double z) {
  if (z == 0.0) return reciprocal_gamma(spec.b);
  double sum = 0.0;
  double comp = 0.0;  // Neumaier compensation
  double zpow = 1.0;
  int consecutive_small = 0;
  for (int k = 0; k < spec.kmax; ++k) {
    const double term = zpow * reciprocal_gamma(spec.a * k + spec.b);
    if (term == 0.0 && sum == 0.0 && comp == 0.0) {
      // leading Gamma poles (b <= 0): the series has not started yet
      zpow *= z;
      continue;
    }
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    if (!std::isfinite(sum)) {
      throw NonConvergenceError("ml: series overflowed for a=" +
                                std::to_string(spec.a) + " b=" +
                                std::to_string(spec.b) + " z=" +
                                std::to_string(z));
    }
    // Alternating terms can transiently vanish, so require three
    // consecutive small terms before accepting convergence.
    if (std::abs(term) < spec.tol * std::abs(sum + comp) ||
        (sum + comp == 0.0 && term == 0.0)) {
      if (++consecutive_small >= 3) return sum + comp;
    } else {
      consecutive_small = 0;
    }
    zpow *= z;
    if (!std::isfinite(zpow)) {
      throw NonConvergenceError("ml: argument power overflowed, z=" +
                                std::to_string(z));
    }
  }
  throw NonConvergenceError("ml: series did not converge within kmax terms");
}

// Negative-axis expansion: optimally truncated algebraic tail
//   -sum_{k>=1} z^{-k} / Gamma(b - a k)
// plus, for a in (1,2], the exponentially damped oscillating pair
//   (2/a) x^{(1-b)/a} exp(x^{1/a} cos(pi/a)) cos(x^{1/a} sin(pi/a) + pi(1-b)/a)
// (exact at a = 2; below any algebraic power for a < 2 but not below the
// truncation floor at moderate |z|, so it is kept).
double eval_asymptotic_neg(const MLSpec& spec, double z) {
  const double a = spec.a;
  const double b = spec.b;
  const double x = -z;

  double sum = 0.0;
  const double zinv = 1.0 / z;
  double zpow = 1.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= spec.kmax; ++k) {
    zpow *= zinv;
    const double term = -zpow * reciprocal_gamma(b - a * k);
    const double mag = std::abs(term);
    if (mag == 0.0) continue;   // Gamma pole: the term is absent, not small
    if (mag > prev_mag) break;  // past the smallest term: stop
    sum += term;
    prev_mag = mag;
    if (mag < spec.tol * std::abs(sum)) break;
  }

  if (a > 1.0 && a <= 2.0) {
    const double root = std::pow(x, 1.0 / a);
    const double angle = std::numbers::pi / a;
    const double damping = std::exp(root * std::cos(angle));
    if (damping > 0.0) {
      sum += (2.0 / a) * std::pow(x, (1.0 - b) / a) * damping *
             std::cos(root * std::sin(angle) +
                      std::numbers::pi * (1.0 - b) / a);
    }
  }
  return sum;
}

}  // namespace

double ml(const MLSpec& spec, double z) {
  if (!(spec.a > 0.0)) {
    throw DomainError("ml: requires a > 0");
  }
  if (spec.kmax < 10) {
    throw DomainError("ml: kmax must be at least 10");
  }
  if (!std::isfinite(z)) {
    throw DomainError("ml: non-finite argument");
  }

  switch (spec.policy) {
    case MLPolicy::ExpSpecial:
      if (!is_special_exp(spec.a, spec.b)) {
        throw DomainError("ml: ExpSpecial needs (a,b) = (1,1)");
      }
      return eval_special_exp(z);
    case MLPolicy::TrigSpecial:
      if (!is_special_trig(spec.a, spec.b)) {
        throw DomainError("ml: TrigSpecial needs (a,b) = (2,1) or (2,2)");
      }
      return eval_special_trig(spec.b, z);
    case MLPolicy::Series:
      if (std::abs(z) > spec.z_switch) {
        throw DomainError("ml: Series policy accepts |z| <= z_switch");
      }
      return eval_series(spec, z);
    case MLPolicy::Asymptotic:
      if (z >= 0.0) {
        throw DomainError("ml: Asymptotic policy is for z < 0");
      }
      return eval_asymptotic_neg(spec, z);
    case MLPolicy::Auto:
      break;
  }

  if (is_special_exp(spec.a, spec.b)) return eval_special_exp(z);
  if (is_special_trig(spec.a, spec.b)) return eval_special_trig(spec.b, z);
  if (z < 0.0 && std::pow(-z, 1.0 / spec.a) > kSeriesLogCap) {
    return eval_asymptotic_neg(spec, z);
  }
  return eval_series(spec, z);
}

double ml(double a, double b, double z) { return ml(MLSpec{a, b}, z); }

double ml_sin_branch(const Order& alpha, double mubar, double t) {
  if (t < 0.0) {
    throw DomainError("ml_sin_branch: requires t >= 0");
  }
  if (t == 0.0) return 0.0;
  const double a = alpha.value();
  const double ta = std::pow(t, a);
  const double arg = -(mubar * mubar) * ta * ta;
  return mubar * ta * ml(2.0 * a, a + 1.0, arg);
}

CaputoOfML caputo_of_ml(const Order& alpha, double lambda, double t) {
  const double a = alpha.value();
  if (a > 1.0) {
    throw DomainError("caputo_of_ml: order must be in (0,1]");
  }
  if (t < 0.0) {
    throw DomainError("caputo_of_ml: requires t >= 0");
  }
  CaputoOfML out;
  if (t == 0.0) {
    out.d_cos = 0.0;
    out.d_sin = 1.0;  // E_{2a,1}(0)
    return out;
  }
  const double ta = std::pow(t, a);
  const double arg = lambda * ta * ta;
  out.d_cos = lambda * ta * ml(2.0 * a, a + 1.0, arg);
  out.d_sin = ml(2.0 * a, 1.0, arg);
  return out;
}

}  // namespace fracwave
