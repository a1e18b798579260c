#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracwave/rational.hpp"

namespace fracwave {

enum class BasisKind { Monomial, Trig, Hyperbolic };

/// A finite function system spanning an invariant-subspace candidate:
///   monomial(d):   1, x, ..., x^d
///   trig(w):       1, cos(w x), sin(w x)
///   hyperbolic(w): 1, cosh(w x), sinh(w x)
/// The frequency is kept as an exact rational so closure computations
/// stay exact.
class Basis {
 public:
  static Basis monomial(int degree);
  static Basis trig(const Rational& omega);
  static Basis hyperbolic(const Rational& omega);

  BasisKind kind() const { return kind_; }
  int dimension() const;
  int degree() const { return degree_; }
  const Rational& omega() const { return omega_; }

  double eval_element(int i, double x) const;
  std::string element_name(int i) const;

 private:
  Basis(BasisKind kind, int degree, Rational omega);

  BasisKind kind_;
  int degree_;      // monomial only
  Rational omega_;  // trig/hyperbolic only
};

/// Exponent vector over the symbolic coefficients C_0..C_{n-1}.
using CMonomial = std::vector<int>;

/// Polynomial in the symbolic coefficients with exact rational
/// coefficients. This is the value type for closure maps Phi_i and
/// out-of-span remainders.
class CPoly {
 public:
  CPoly() : nvars_(0) {}
  explicit CPoly(int nvars) : nvars_(nvars) {}

  static CPoly constant(const Rational& value, int nvars);
  static CPoly variable(int index, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<CMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const CMonomial& mono) const;

  void add_term(const CMonomial& mono, const Rational& coeff);

  CPoly operator+(const CPoly& other) const;
  CPoly operator-(const CPoly& other) const;
  CPoly operator*(const CPoly& other) const;
  CPoly operator*(const Rational& scalar) const;

  bool operator==(const CPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  /// Total degree of the highest term (0 for the zero polynomial).
  int total_degree() const;
  bool is_homogeneous(int k) const;

  Rational eval(const std::vector<Rational>& c) const;
  double eval(const std::vector<double>& c) const;

  /// Substitutes C_i -> lambda * C_i (used by homogeneity checks).
  CPoly scaled_variables(const Rational& lambda) const;

  /// Rendering like "6*C0*C3 + 6*C1*C2".
  std::string str(const std::string& var = "C") const;

 private:
  int nvars_;
  std::map<CMonomial, Rational> terms_;
};

/// The operator  nu d^5/dx^5 (u^p) + beta d^3/dx^3 (u^n) + gamma d/dx (u^m),
/// with an optional extra flux term  uxx_flux * d/dx (u d^2u/dx^2)
/// needed only for the third-order dispersive-flux check.
struct KOperator {
  Rational nu = 0;
  Rational beta = 0;
  Rational gamma_c = 0;
  int p = 1;
  int n = 1;
  int m = 1;
  Rational uxx_flux = 0;

  bool has_uxx_flux() const { return !uxx_flux.is_zero(); }
};

/// Affine constraint c_nu*nu + c_beta*beta + c_gamma*gamma + c_const = 0
/// on the operator coefficients, normalized to coprime integers with the
/// first nonzero coefficient positive.
struct LinearCondition {
  std::int64_t c_nu = 0;
  std::int64_t c_beta = 0;
  std::int64_t c_gamma = 0;
  std::int64_t c_const = 0;

  Rational value_at(const KOperator& op) const;
  std::string str() const;
  bool operator==(const LinearCondition&) const = default;
};

/// One out-of-span term of F[g]: which extended element, and its
/// coefficient as a polynomial in C (operator coefficients folded in).
struct ResidualTerm {
  std::string element;
  CPoly poly;
};

struct ClosureReport {
  bool invariant = false;
  /// Closure map, one polynomial per basis element; populated when invariant.
  std::vector<CPoly> phi;
  /// Nonzero out-of-span terms; populated when not invariant.
  std::vector<ResidualTerm> residual_terms;
  /// Constraint on (nu, beta, gamma) that makes every remainder vanish,
  /// when a single such constraint exists.
  std::optional<LinearCondition> condition;
};

/// Symmetric-matrix view of a homogeneous quadratic closure component:
/// Phi(C) = C^T Q C.
struct QuadraticForm {
  std::vector<std::vector<Rational>> q;

  static std::optional<QuadraticForm> from_poly(const CPoly& poly);
  Rational eval(const std::vector<Rational>& c) const;
  double eval(const std::vector<double>& c) const;
};

inline constexpr int kDefaultExtentCap = 64;

/// Exact coefficients of (sum_i C_i f_i)^k in the degree/frequency-extended
/// basis, with symbolic C. Extended indexing: monomial -> power;
/// trig/hyperbolic -> 0 for the constant, 2k-1 for the harmonic-k cosine
/// element, 2k for the harmonic-k sine element.
std::vector<CPoly> expand_power(const Basis& basis, int k,
                                int extent_cap = kDefaultExtentCap);

/// Same expansion evaluated at concrete rational coefficients.
std::vector<Rational> expand_power(const Basis& basis,
                                   const std::vector<Rational>& coeffs, int k,
                                   int extent_cap = kDefaultExtentCap);

/// Exact expansion of F[sum C_i f_i] in the extended basis, symbolic C.
std::vector<CPoly> apply_operator(const KOperator& op, const Basis& basis,
                                  int extent_cap = kDefaultExtentCap);

/// Same evaluated at concrete rational coefficients.
std::vector<Rational> apply_operator(const KOperator& op, const Basis& basis,
                                     const std::vector<Rational>& coeffs,
                                     int extent_cap = kDefaultExtentCap);

/// Projects apply_operator output onto the basis: exact invariance flag,
/// closure map when closed, remainder terms and (when one exists) the
/// vanishing condition otherwise.
ClosureReport check_invariance(const KOperator& op, const Basis& basis);

/// Returns the right-hand-side forms Phi_i of the separated fractional ODE
/// system d^a g_i/dt^a = Phi_i(g). Raises NotInvariantError when the
/// operator does not close on the basis.
std::vector<CPoly> reduce_to_system(const KOperator& op, const Basis& basis);

/// Name of an extended-basis element ("x^4", "cos(2x)", "sinh(3/2x)", ...).
std::string extended_element_name(const Basis& basis, int ext_index);

}  // namespace fracwave
