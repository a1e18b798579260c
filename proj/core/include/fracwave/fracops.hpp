#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracwave {

/// A fractional order. Strictly positive; most operators additionally
/// restrict to (0, 1) or (0, 1] and say so in their preconditions.
class Order {
 public:
  explicit Order(double value);

  double value() const { return value_; }

  /// True iff the order is an integer to within 1e-12.
  bool is_integer() const;

  /// True iff |value - 1/2| < 1e-12 (the divergent case of the
  /// similarity solution).
  bool near_half() const;

 private:
  double value_;
};

/// Uniform time grid t_j = t0 + j*h, j = 0..steps.
class TimeGrid {
 public:
  TimeGrid(double t0, double h, std::size_t steps);

  double t0() const { return t0_; }
  double step() const { return h_; }
  std::size_t steps() const { return steps_; }
  std::size_t size() const { return steps_ + 1; }
  double node(std::size_t j) const { return t0_ + static_cast<double>(j) * h_; }
  std::vector<double> nodes() const;

  /// Grid with the same nodes but h/2 spacing (twice the steps).
  TimeGrid refined() const { return TimeGrid(t0_, h_ / 2.0, steps_ * 2); }

  bool starts_at_origin() const { return t0_ == 0.0; }

 private:
  double t0_;
  double h_;
  std::size_t steps_;
};

/// One power-law term coeff * t^exponent.
struct PowerTerm {
  double coeff = 0.0;
  double exponent = 0.0;
};

/// Riemann-Liouville integral of a power term:
///   J^g [c t^d] = c Gamma(d+1)/Gamma(d+g+1) t^{d+g},  d > -1, g > 0.
PowerTerm rl_integral_power(const PowerTerm& term, const Order& gamma);

/// Caputo derivative of a power term:
///   D^g [c t^d] = c Gamma(d+1)/Gamma(d-g+1) t^{d-g},
/// for d in (-1,0) or (0,inf); a constant (d = 0) differentiates to zero.
/// Where 1/Gamma(d-g+1) sits on a pole the coefficient is the removable
/// value 0.
PowerTerm caputo_power(const PowerTerm& term, const Order& gamma);

/// Riemann-Liouville fractional integral on a uniform grid starting at 0,
/// by product integration: f is taken piecewise linear on each panel and
/// the weakly singular kernel (t - tau)^{g-1} is integrated exactly.
/// Returns J^g f at every node (node 0 is the empty integral, 0).
std::vector<double> rl_integral_num(std::span<const double> f,
                                    const Order& gamma, const TimeGrid& grid);

/// Caputo derivative on a uniform grid starting at 0 via the L1 scheme:
///   D^a f(t_n) = h^{-a}/Gamma(2-a) * sum_j b_j (f(t_{n-j}) - f(t_{n-j-1})),
///   b_j = (j+1)^{1-a} - j^{1-a},
/// accurate to O(h^{2-a}) for twice continuously differentiable f.
/// Requires a in (0,1) strictly and at least 2 steps. Node 0 is 0.
std::vector<double> caputo_l1(std::span<const double> f, const Order& alpha,
                              const TimeGrid& grid);

/// Discrepancies of the two inversion identities on a grid, measured at
/// the interior nodes (t > 0):
///   dj_max = max |D^g J^g f - f|
///   jd_max = max |J^g D^g f - (f - f(0))|
struct InversionReport {
  double dj_max = 0.0;
  double jd_max = 0.0;
};

InversionReport inversion_check(std::span<const double> f, const Order& gamma,
                                const TimeGrid& grid);

}  // namespace fracwave
