#include "fracwave/fracops.hpp"

#include <cmath>
#include <string>

#include "fracwave/errors.hpp"
#include "fracwave/gamma.hpp"

namespace fracwave {

namespace {

constexpr double kIntegerTol = 1e-12;

void require_finite(std::span<const double> f, const char* op) {
  for (double v : f) {
    if (!std::isfinite(v)) {
      throw DomainError(std::string(op) + ": non-finite input sample");
    }
  }
}

void require_matching(std::span<const double> f, const TimeGrid& grid,
                      const char* op) {
  if (f.size() != grid.size()) {
    throw DomainError(std::string(op) + ": sample count " +
                      std::to_string(f.size()) + " does not match grid size " +
                      std::to_string(grid.size()));
  }
}

}  // namespace

Order::Order(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("Order: value must be a positive real");
  }
}

bool Order::is_integer() const {
  return std::abs(value_ - std::round(value_)) < kIntegerTol;
}

bool Order::near_half() const { return std::abs(value_ - 0.5) < kIntegerTol; }

TimeGrid::TimeGrid(double t0, double h, std::size_t steps)
    : t0_(t0), h_(h), steps_(steps) {
  if (!std::isfinite(t0) || t0 < 0.0) {
    throw DomainError("TimeGrid: t0 must be >= 0");
  }
  if (!std::isfinite(h) || h <= 0.0) {
    throw DomainError("TimeGrid: step must be > 0");
  }
  if (steps == 0) {
    throw DomainError("TimeGrid: needs at least one step");
  }
}

std::vector<double> TimeGrid::nodes() const {
  std::vector<double> out(size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = node(j);
  return out;
}

PowerTerm rl_integral_power(const PowerTerm& term, const Order& gamma) {
  if (term.exponent <= -1.0) {
    throw DomainError("rl_integral_power: exponent must be > -1");
  }
  const double d = term.exponent;
  const double g = gamma.value();
  const double factor = gamma_fn(d + 1.0) * reciprocal_gamma(d + g + 1.0);
  return PowerTerm{term.coeff * factor, d + g};
}

PowerTerm caputo_power(const PowerTerm& term, const Order& gamma) {
  const double d = term.exponent;
  if (d <= -1.0) {
    throw DomainError("caputo_power: exponent must be in (-1,0) or (0,inf)");
  }
  if (d == 0.0) {
    // Caputo derivative of a constant vanishes.
    return PowerTerm{0.0, 0.0};
  }
  const double g = gamma.value();
  // reciprocal_gamma is 0 at poles of Gamma, which is the removable value
  // the power-matching in the solution constructors relies on.
  const double factor = gamma_fn(d + 1.0) * reciprocal_gamma(d - g + 1.0);
  return PowerTerm{term.coeff * factor, d - g};
}

std::vector<double> rl_integral_num(std::span<const double> f,
                                    const Order& gamma, const TimeGrid& grid) {
  require_matching(f, grid, "rl_integral_num");
  require_finite(f, "rl_integral_num");
  if (!grid.starts_at_origin()) {
    throw DomainError("rl_integral_num: grid must start at t = 0");
  }

  const double g = gamma.value();
  const double h = grid.step();
  const std::size_t n_nodes = grid.size();
  const double inv_gamma_g = reciprocal_gamma(g);

  // Panel [t_j, t_{j+1}] against target node t_n, with s = t_n - tau:
  //   contribution = (f_j + (n-j)(f_{j+1}-f_j)) * A - (f_{j+1}-f_j)/h * B,
  //   A = (a^g - b^g)/g,  B = (a^{g+1} - b^{g+1})/(g+1),
  //   a = (n-j) h, b = (n-j-1) h.
  // A and B depend only on n-j, so precompute the kernel moments once.
  std::vector<double> pow_g(n_nodes), pow_g1(n_nodes);
  for (std::size_t m = 0; m < n_nodes; ++m) {
    const double tm = static_cast<double>(m) * h;
    pow_g[m] = std::pow(tm, g);
    pow_g1[m] = std::pow(tm, g + 1.0);
  }

  std::vector<double> out(n_nodes, 0.0);
  for (std::size_t n = 1; n < n_nodes; ++n) {
    double acc = 0.0;
    double comp = 0.0;  // Kahan compensation
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t m = n - j;
      const double a_term = (pow_g[m] - pow_g[m - 1]) / g;
      const double b_term = (pow_g1[m] - pow_g1[m - 1]) / (g + 1.0);
      const double df = f[j + 1] - f[j];
      const double contrib =
          (f[j] + static_cast<double>(m) * df) * a_term - df / h * b_term;
      const double y = contrib - comp;
      const double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    out[n] = inv_gamma_g * acc;
  }
  return out;
}

std::vector<double> caputo_l1(std::span<const double> f, const Order& alpha,
                              const TimeGrid& grid) {
  const double a = alpha.value();
  if (a <= 0.0 || a >= 1.0) {
    throw DomainError("caputo_l1: order must be in (0,1) strictly");
  }
  require_matching(f, grid, "caputo_l1");
  require_finite(f, "caputo_l1");
  if (!grid.starts_at_origin()) {
    throw DomainError("caputo_l1: grid must start at t = 0");
  }
  if (grid.steps() < 2) {
    throw DomainError("caputo_l1: needs at least 2 steps");
  }

  const double h = grid.step();
  const std::size_t n_nodes = grid.size();
  const double scale = std::pow(h, -a) * reciprocal_gamma(2.0 - a);

  // b_j = (j+1)^{1-a} - j^{1-a}
  std::vector<double> b(n_nodes);
  std::vector<double> pw(n_nodes + 1);
  for (std::size_t j = 0; j <= n_nodes; ++j) {
    pw[j] = std::pow(static_cast<double>(j), 1.0 - a);
  }
  for (std::size_t j = 0; j < n_nodes; ++j) b[j] = pw[j + 1] - pw[j];

  std::vector<double> out(n_nodes, 0.0);
  for (std::size_t n = 1; n < n_nodes; ++n) {
    double acc = 0.0;
    double comp = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double diff = f[n - j] - f[n - j - 1];
      const double y = b[j] * diff - comp;
      const double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    out[n] = scale * acc;
  }
  return out;
}

InversionReport inversion_check(std::span<const double> f, const Order& gamma,
                                const TimeGrid& grid) {
  const std::vector<double> jf = rl_integral_num(f, gamma, grid);
  const std::vector<double> djf = caputo_l1(jf, gamma, grid);
  const std::vector<double> df = caputo_l1(f, gamma, grid);
  const std::vector<double> jdf = rl_integral_num(df, gamma, grid);

  InversionReport report;
  const double f0 = f[0];
  for (std::size_t j = 1; j < grid.size(); ++j) {
    report.dj_max = std::max(report.dj_max, std::abs(djf[j] - f[j]));
    report.jd_max = std::max(report.jd_max, std::abs(jdf[j] - (f[j] - f0)));
  }
  return report;
}

}  // namespace fracwave
