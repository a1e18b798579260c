#pragma once

#include "fracwave/fracops.hpp"

namespace fracwave {

/// Evaluation strategy for the two-parameter Mittag-Leffler function.
/// Auto picks per argument: closed forms where they exist, the power
/// series while its largest term is small enough for full cancellation
/// control, and the negative-axis asymptotic expansion beyond that.
enum class MLPolicy { Auto, Series, Asymptotic, ExpSpecial, TrigSpecial };

struct MLSpec {
  double a = 1.0;  ///< first parameter, > 0
  double b = 1.0;  ///< second parameter, any real
  MLPolicy policy = MLPolicy::Auto;
  double tol = 1e-12;     ///< series stopping tolerance (relative)
  int kmax = 1000;        ///< series term cap
  double z_switch = 30.0; ///< |z| cap accepted by the forced Series policy
};

/// E_{a,b}(z) = sum_k z^k / Gamma(a k + b), real argument.
double ml(const MLSpec& spec, double z);

/// Convenience overload with the Auto policy and defaults.
double ml(double a, double b, double z);

/// Sine-like branch of the oscillating pair:
///   mubar * t^alpha * E_{2a,a+1}(-mubar^2 t^{2a}),  t >= 0.
/// At alpha = 1 this is sin(mubar t); the sign convention of the caller's
/// solution (g3 = -this) is not applied here.
double ml_sin_branch(const Order& alpha, double mubar, double t);

/// Closed-form Caputo derivatives of the two oscillating branches,
/// obtained by the termwise power rule:
///   d_cos = D^a [E_{2a,1}(l t^{2a})]          = l t^a E_{2a,a+1}(l t^{2a})
///   d_sin = D^a [t^a E_{2a,a+1}(l t^{2a})]    = E_{2a,1}(l t^{2a})
struct CaputoOfML {
  double d_cos = 0.0;
  double d_sin = 0.0;
};

CaputoOfML caputo_of_ml(const Order& alpha, double lambda, double t);

}  // namespace fracwave
