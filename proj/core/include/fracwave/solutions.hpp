#pragma once

#include <array>

#include "fracwave/fracops.hpp"
#include "fracwave/subspace.hpp"

namespace fracwave {

/// Similarity solution of the third-order equation:
///   u(x,t) = (C0 + C1 x + C2 x^2 + C3 x^3) t^{-alpha},
/// valid for alpha in (0,1/2) u (1/2,1).
///
/// The coefficient block is determined by the separated ODE system:
///   C2 = 1, C3 = kappa/60, C1 = 20/kappa, C0 = (400/3)/kappa^2,
/// with kappa = Gamma(1-alpha)/Gamma(1-2alpha). The C0 printed in the
/// source derivation fails its own system by a factor 3600 and is kept
/// only for reference (printed_c0).
struct SimilaritySolution {
  Order alpha;
  std::array<double, 4> coeff;  ///< C0..C3
  double kappa;
  double printed_c0;
};

SimilaritySolution build_similarity(const Order& alpha);

/// (C0 + C1 x + C2 x^2 + C3 x^3) * t^{-alpha}; requires t > 0.
double eval_similarity(const SimilaritySolution& s, double x, double t);

/// Travelling-hump solution of the fifth-order equation
///   u(x,t) = C + E_{2a,1}(-mubar^2 t^{2a}) cos x
///              - mubar t^a E_{2a,a+1}(-mubar^2 t^{2a}) sin x,
/// defined when 16 nu - 4 beta + gamma = 0 with
/// mu = 2(nu - beta + gamma) != 0, mubar = C mu.
struct QuinticSolution {
  Order alpha;
  double nu;
  double beta;
  double gamma_c;
  double C;
  double mu;
  double mubar;
};

QuinticSolution build_quintic(const Order& alpha, double nu, double beta,
                              double gamma_c, double C);

/// At integer order this dispatches to the classical compacton profile
/// C + cos(x + mubar t); otherwise it evaluates the Mittag-Leffler form.
double eval_quintic(const QuinticSolution& q, double x, double t);

/// The Mittag-Leffler evaluation path without the integer-order dispatch
/// (the two agree at alpha = 1; tests rely on this to show the reduction).
double eval_quintic_ml(const QuinticSolution& q, double x, double t);

/// Compactly supported solution of the third-order flux equation
///   D^a u + a_coef d/dx(u^2) + d/dx(u u_xx) = 0:
/// inside |x - c t^alpha| < pi/mu_supp, with mu_supp = sqrt(a)/2,
///   u = (c/a) [1 - cos(sqrt(a) x) cos-branch(tau) -
///              sin(sqrt(a) x) sin-branch(tau)],  tau = sqrt(a) c t^alpha,
/// and 0 outside.
struct OdibatSolution {
  double a;
  double c;
  Order alpha;
  double mu_supp;
};

OdibatSolution make_odibat(double a, double c, const Order& alpha);

/// Support-aware evaluation (support boundary uses the interior formula).
double eval_odibat(const OdibatSolution& o, double x, double t);

/// Interior formula with no support cutoff (verification helper).
double eval_odibat_interior(const OdibatSolution& o, double x, double t);

/// Strict interior test |x - c t^alpha| < pi/mu_supp.
bool odibat_in_support(const OdibatSolution& o, double x, double t);

/// 16 nu - 4 beta + gamma: the trig-closure condition of the fifth-order
/// family at unit frequency.
double quintic_condition_value(double nu, double beta, double gamma_c);

/// Named operators of the dispersive family.
KOperator third_order_operator();  ///< d^3/dx^3 (u^2 / 2)
KOperator quintic_operator(const Rational& nu, const Rational& beta,
                           const Rational& gamma_c);
KOperator odibat_operator(const Rational& a);  ///< -a d/dx(u^2) - d/dx(u u_xx)

/// The time-fractional Rosenau-Hyman operator K_alpha(2,2):
/// nu = 0, beta = gamma = 1, quadratic powers. Its condition value is -3,
/// so it does not close on the unit-frequency trig system. The operator
/// coefficients do not depend on alpha; the argument records intent only.
KOperator rosenau_hyman(const Order& alpha);

}  // namespace fracwave
