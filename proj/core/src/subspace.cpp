#include "fracwave/subspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "fracwave/errors.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Basis
// ---------------------------------------------------------------------------

Basis::Basis(BasisKind kind, int degree, Rational omega)
    : kind_(kind), degree_(degree), omega_(std::move(omega)) {}

Basis Basis::monomial(int degree) {
  if (degree < 0) throw DomainError("Basis::monomial: degree must be >= 0");
  return Basis(BasisKind::Monomial, degree, Rational(0));
}

Basis Basis::trig(const Rational& omega) {
  if (omega.sign() <= 0) throw DomainError("Basis::trig: omega must be > 0");
  return Basis(BasisKind::Trig, 0, omega);
}

Basis Basis::hyperbolic(const Rational& omega) {
  if (omega.sign() <= 0) {
    throw DomainError("Basis::hyperbolic: omega must be > 0");
  }
  return Basis(BasisKind::Hyperbolic, 0, omega);
}

int Basis::dimension() const {
  return kind_ == BasisKind::Monomial ? degree_ + 1 : 3;
}

double Basis::eval_element(int i, double x) const {
  if (i < 0 || i >= dimension()) {
    throw DomainError("Basis::eval_element: index out of range");
  }
  switch (kind_) {
    case BasisKind::Monomial:
      return i == 0 ? 1.0 : std::pow(x, i);
    case BasisKind::Trig: {
      const double wx = omega_.to_double() * x;
      return i == 0 ? 1.0 : (i == 1 ? std::cos(wx) : std::sin(wx));
    }
    case BasisKind::Hyperbolic: {
      const double wx = omega_.to_double() * x;
      return i == 0 ? 1.0 : (i == 1 ? std::cosh(wx) : std::sinh(wx));
    }
  }
  return 0.0;
}

std::string Basis::element_name(int i) const {
  if (i < 0 || i >= dimension()) {
    throw DomainError("Basis::element_name: index out of range");
  }
  return extended_element_name(*this, i);
}

// ---------------------------------------------------------------------------
// CPoly
// ---------------------------------------------------------------------------

CPoly CPoly::constant(const Rational& value, int nvars) {
  CPoly p(nvars);
  if (!value.is_zero()) p.terms_.emplace(CMonomial(nvars, 0), value);
  return p;
}

CPoly CPoly::variable(int index, int nvars) {
  if (index < 0 || index >= nvars) {
    throw DomainError("CPoly::variable: index out of range");
  }
  CPoly p(nvars);
  CMonomial mono(nvars, 0);
  mono[index] = 1;
  p.terms_.emplace(std::move(mono), Rational(1));
  return p;
}

Rational CPoly::coefficient(const CMonomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CPoly::add_term(const CMonomial& mono, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CPoly CPoly::operator+(const CPoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (nvars_ != other.nvars_) {
    throw DomainError("CPoly: mixing polynomials over different variables");
  }
  CPoly out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

CPoly CPoly::operator-(const CPoly& other) const {
  return *this + other * Rational(-1);
}

CPoly CPoly::operator*(const CPoly& other) const {
  if (is_zero() || other.is_zero()) {
    return CPoly(std::max(nvars_, other.nvars_));
  }
  if (nvars_ != other.nvars_) {
    throw DomainError("CPoly: mixing polynomials over different variables");
  }
  CPoly out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      CMonomial mono(nvars_);
      for (int i = 0; i < nvars_; ++i) mono[i] = ma[i] + mb[i];
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

CPoly CPoly::operator*(const Rational& scalar) const {
  CPoly out(nvars_);
  if (scalar.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, coeff * scalar);
  }
  return out;
}

int CPoly::total_degree() const {
  int deg = 0;
  for (const auto& [mono, coeff] : terms_) {
    deg = std::max(deg, std::accumulate(mono.begin(), mono.end(), 0));
  }
  return deg;
}

bool CPoly::is_homogeneous(int k) const {
  for (const auto& [mono, coeff] : terms_) {
    if (std::accumulate(mono.begin(), mono.end(), 0) != k) return false;
  }
  return true;
}

Rational CPoly::eval(const std::vector<Rational>& c) const {
  if (static_cast<int>(c.size()) != nvars_ && !is_zero()) {
    throw DomainError("CPoly::eval: wrong coefficient count");
  }
  Rational out(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < nvars_; ++i) {
      if (mono[i] > 0) term *= c[i].pow(mono[i]);
    }
    out += term;
  }
  return out;
}

double CPoly::eval(const std::vector<double>& c) const {
  if (static_cast<int>(c.size()) != nvars_ && !is_zero()) {
    throw DomainError("CPoly::eval: wrong coefficient count");
  }
  double out = 0.0;
  for (const auto& [mono, coeff] : terms_) {
    double term = coeff.to_double();
    for (int i = 0; i < nvars_; ++i) {
      for (int e = 0; e < mono[i]; ++e) term *= c[i];
    }
    out += term;
  }
  return out;
}

CPoly CPoly::scaled_variables(const Rational& lambda) const {
  CPoly out(nvars_);
  for (const auto& [mono, coeff] : terms_) {
    const int deg = std::accumulate(mono.begin(), mono.end(), 0);
    out.add_term(mono, coeff * lambda.pow(deg));
  }
  return out;
}

std::string CPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff.sign() < 0;
    const Rational mag = negative ? -coeff : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    for (int i = 0; i < nvars_; ++i) {
      if (mono[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += var + std::to_string(i);
      if (mono[i] > 1) body += "^" + std::to_string(mono[i]);
    }
    if (body.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += body;
    } else {
      out += mag.str() + "*" + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic elements of the extended function space
// ---------------------------------------------------------------------------

namespace {

// Extended indexing for trig/hyperbolic: 0 -> constant,
// 2k-1 -> cosine-like harmonic k, 2k -> sine-like harmonic k.
int pair_index(int k, bool sine) { return 2 * k - (sine ? 0 : 1); }
int harmonic_of(int idx) { return idx == 0 ? 0 : (idx + 1) / 2; }
bool is_sine(int idx) { return idx != 0 && idx % 2 == 0; }

struct Element {
  BasisKind kind;
  Rational omega;
  int cap;
  int nvars;
  std::vector<CPoly> coords;

  void ensure(int index) {
    while (static_cast<int>(coords.size()) <= index) {
      coords.emplace_back(nvars);
    }
  }

  void add(int k, bool sine, const CPoly& poly) {
    if (poly.is_zero()) return;
    if (kind == BasisKind::Monomial) {
      if (k > cap) {
        throw OverflowError("extended basis degree exceeds cap");
      }
      ensure(k);
      coords[k] = coords[k] + poly;
      return;
    }
    if (k == 0 && sine) return;  // sin(0) / sinh(0)
    if (k > cap) {
      throw OverflowError("extended basis frequency exceeds cap");
    }
    const int idx = k == 0 ? 0 : pair_index(k, sine);
    ensure(idx);
    coords[idx] = coords[idx] + poly;
  }
};

Element zero_element(const Basis& basis, int cap) {
  return Element{basis.kind(), basis.omega(), cap, basis.dimension(), {}};
}

// The generic element sum_i C_i f_i with symbolic coefficients.
Element generic_element(const Basis& basis, int cap) {
  Element e = zero_element(basis, cap);
  const int n = basis.dimension();
  if (basis.kind() == BasisKind::Monomial) {
    for (int i = 0; i < n; ++i) e.add(i, false, CPoly::variable(i, n));
  } else {
    e.add(0, false, CPoly::variable(0, n));
    e.add(1, false, CPoly::variable(1, n));
    e.add(1, true, CPoly::variable(2, n));
  }
  return e;
}

Element multiply(const Element& a, const Element& b) {
  Element out = a;
  out.coords.clear();
  const Rational half(1, 2);
  if (a.kind == BasisKind::Monomial) {
    for (int i = 0; i < static_cast<int>(a.coords.size()); ++i) {
      if (a.coords[i].is_zero()) continue;
      for (int j = 0; j < static_cast<int>(b.coords.size()); ++j) {
        if (b.coords[j].is_zero()) continue;
        out.add(i + j, false, a.coords[i] * b.coords[j]);
      }
    }
    return out;
  }
  // Product-to-sum tables. Hyperbolic differs from trig only in the signs
  // of the sine*sine row.
  const bool hyper = a.kind == BasisKind::Hyperbolic;
  for (int ia = 0; ia < static_cast<int>(a.coords.size()); ++ia) {
    if (a.coords[ia].is_zero()) continue;
    const int k1 = harmonic_of(ia);
    const bool s1 = is_sine(ia);
    for (int ib = 0; ib < static_cast<int>(b.coords.size()); ++ib) {
      if (b.coords[ib].is_zero()) continue;
      const int k2 = harmonic_of(ib);
      const bool s2 = is_sine(ib);
      const CPoly prod = a.coords[ia] * b.coords[ib];
      const int sum = k1 + k2;
      const int diff = std::abs(k1 - k2);
      if (!s1 && !s2) {
        // cos*cos (cosh*cosh): 1/2 cos(sum) + 1/2 cos(diff)
        out.add(sum, false, prod * half);
        out.add(diff, false, prod * half);
      } else if (s1 && s2) {
        if (hyper) {
          // sinh*sinh: 1/2 cosh(sum) - 1/2 cosh(diff)
          out.add(sum, false, prod * half);
          out.add(diff, false, prod * (-half));
        } else {
          // sin*sin: 1/2 cos(diff) - 1/2 cos(sum)
          out.add(diff, false, prod * half);
          out.add(sum, false, prod * (-half));
        }
      } else {
        // sin*cos (sinh*cosh): 1/2 sin(sum) + sgn(k_s - k_c)/2 sin(diff)
        const int k_sin = s1 ? k1 : k2;
        const int k_cos = s1 ? k2 : k1;
        out.add(sum, true, prod * half);
        if (k_sin > k_cos) {
          out.add(diff, true, prod * half);
        } else if (k_sin < k_cos) {
          out.add(diff, true, prod * (-half));
        }
      }
    }
  }
  return out;
}

Element power(const Element& base, int k) {
  if (k < 1) throw DomainError("expand_power: power must be >= 1");
  Element out = base;
  for (int i = 1; i < k; ++i) out = multiply(out, base);
  return out;
}

Element differentiate(const Element& e) {
  Element out = e;
  out.coords.clear();
  if (e.kind == BasisKind::Monomial) {
    for (int i = 1; i < static_cast<int>(e.coords.size()); ++i) {
      if (e.coords[i].is_zero()) continue;
      out.add(i - 1, false, e.coords[i] * Rational(i));
    }
    return out;
  }
  const bool hyper = e.kind == BasisKind::Hyperbolic;
  for (int idx = 1; idx < static_cast<int>(e.coords.size()); ++idx) {
    if (e.coords[idx].is_zero()) continue;
    const int k = harmonic_of(idx);
    const Rational factor = e.omega * Rational(k);
    if (is_sine(idx)) {
      // d/dx sin(k w x) = k w cos(k w x); d/dx sinh = k w cosh
      out.add(k, false, e.coords[idx] * factor);
    } else {
      // d/dx cos(k w x) = -k w sin(k w x); d/dx cosh = +k w sinh
      out.add(k, true, e.coords[idx] * (hyper ? factor : -factor));
    }
  }
  return out;
}

Element differentiate(const Element& e, int times) {
  Element out = e;
  for (int i = 0; i < times; ++i) out = differentiate(out);
  return out;
}

// The four structural slots of F: d^5(u^p), d^3(u^n), d^1(u^m) and the
// optional extra flux d/dx(u u_xx). The operator's numeric coefficients
// are deliberately not folded in here so that the invariance condition
// can be read off with (nu, beta, gamma) symbolic.
struct SlotExpansion {
  std::array<Element, 4> slot;
  int ext_size = 0;
};

void check_powers(const KOperator& op) {
  for (int power : {op.p, op.n, op.m}) {
    if (power < 1 || power > 6) {
      throw DomainError("KOperator: powers must be integers in [1, 6]");
    }
  }
}

SlotExpansion expand_slots(const KOperator& op, const Basis& basis, int cap) {
  const Element g = generic_element(basis, cap);
  SlotExpansion out{{zero_element(basis, cap), zero_element(basis, cap),
                     zero_element(basis, cap), zero_element(basis, cap)},
                    0};
  out.slot[0] = differentiate(power(g, op.p), 5);
  out.slot[1] = differentiate(power(g, op.n), 3);
  out.slot[2] = differentiate(power(g, op.m), 1);
  if (op.has_uxx_flux()) {
    out.slot[3] = differentiate(multiply(g, differentiate(g, 2)), 1);
  }
  for (const Element& e : out.slot) {
    out.ext_size = std::max(out.ext_size, static_cast<int>(e.coords.size()));
  }
  out.ext_size = std::max(out.ext_size, basis.dimension());
  for (Element& e : out.slot) e.ensure(out.ext_size - 1);
  return out;
}

std::vector<CPoly> combine_slots(const SlotExpansion& slots,
                                 const KOperator& op, int nvars) {
  std::vector<CPoly> out(slots.ext_size, CPoly(nvars));
  for (int e = 0; e < slots.ext_size; ++e) {
    out[e] = slots.slot[0].coords[e] * op.nu +
             slots.slot[1].coords[e] * op.beta +
             slots.slot[2].coords[e] * op.gamma_c +
             slots.slot[3].coords[e] * op.uxx_flux;
  }
  return out;
}

// Affine rows (a, b, g | d) meaning a*nu + b*beta + g*gamma + d = 0.
using ConditionRow = std::array<Rational, 4>;

std::optional<LinearCondition> extract_condition(
    std::vector<ConditionRow> rows) {
  // Gaussian elimination over the (nu, beta, gamma) columns.
  std::vector<ConditionRow> reduced;
  for (auto row : rows) {
    for (const auto& pivot_row : reduced) {
      int pc = -1;
      for (int c = 0; c < 3; ++c) {
        if (!pivot_row[c].is_zero()) {
          pc = c;
          break;
        }
      }
      if (pc >= 0 && !row[pc].is_zero()) {
        const Rational factor = row[pc] / pivot_row[pc];
        for (int c = 0; c < 4; ++c) row[c] -= pivot_row[c] * factor;
      }
    }
    const bool lhs_zero =
        row[0].is_zero() && row[1].is_zero() && row[2].is_zero();
    if (lhs_zero) {
      if (!row[3].is_zero()) return std::nullopt;  // unsatisfiable remainder
      continue;
    }
    reduced.push_back(row);
  }
  if (reduced.size() != 1) return std::nullopt;

  // Normalize to coprime integers, first nonzero coefficient positive.
  const ConditionRow& r = reduced.front();
  std::int64_t lcm = 1;
  for (const Rational& v : r) {
    lcm = std::lcm(lcm, v.den());
  }
  std::array<std::int64_t, 4> ints{};
  for (int c = 0; c < 4; ++c) {
    ints[c] = r[c].num() * (lcm / r[c].den());
  }
  std::int64_t g = 0;
  for (std::int64_t v : ints) g = std::gcd(g, v);
  if (g > 1) {
    for (auto& v : ints) v /= g;
  }
  for (std::int64_t v : ints) {
    if (v != 0) {
      if (v < 0) {
        for (auto& w : ints) w = -w;
      }
      break;
    }
  }
  return LinearCondition{ints[0], ints[1], ints[2], ints[3]};
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

std::vector<CPoly> expand_power(const Basis& basis, int k, int extent_cap) {
  const Element result = power(generic_element(basis, extent_cap), k);
  std::vector<CPoly> out = result.coords;
  if (out.empty()) out.emplace_back(basis.dimension());
  return out;
}

std::vector<Rational> expand_power(const Basis& basis,
                                   const std::vector<Rational>& coeffs, int k,
                                   int extent_cap) {
  if (static_cast<int>(coeffs.size()) != basis.dimension()) {
    throw DomainError("expand_power: coefficient count != basis dimension");
  }
  std::vector<Rational> out;
  for (const CPoly& poly : expand_power(basis, k, extent_cap)) {
    out.push_back(poly.eval(coeffs));
  }
  return out;
}

std::vector<CPoly> apply_operator(const KOperator& op, const Basis& basis,
                                  int extent_cap) {
  check_powers(op);
  const SlotExpansion slots = expand_slots(op, basis, extent_cap);
  return combine_slots(slots, op, basis.dimension());
}

std::vector<Rational> apply_operator(const KOperator& op, const Basis& basis,
                                     const std::vector<Rational>& coeffs,
                                     int extent_cap) {
  if (static_cast<int>(coeffs.size()) != basis.dimension()) {
    throw DomainError("apply_operator: coefficient count != basis dimension");
  }
  std::vector<Rational> out;
  for (const CPoly& poly : apply_operator(op, basis, extent_cap)) {
    out.push_back(poly.eval(coeffs));
  }
  return out;
}

ClosureReport check_invariance(const KOperator& op, const Basis& basis) {
  check_powers(op);
  const SlotExpansion slots = expand_slots(op, basis, kDefaultExtentCap);
  const std::vector<CPoly> combined =
      combine_slots(slots, op, basis.dimension());
  const int dim = basis.dimension();

  ClosureReport report;
  report.invariant = true;
  for (int e = dim; e < slots.ext_size; ++e) {
    if (!combined[e].is_zero()) {
      report.invariant = false;
      report.residual_terms.push_back(
          ResidualTerm{extended_element_name(basis, e), combined[e]});
    }
  }

  if (report.invariant) {
    report.phi.assign(combined.begin(), combined.begin() + dim);
  }

  // Vanishing condition with (nu, beta, gamma) symbolic; the extra flux
  // coefficient, when present, is fixed and lands in the affine column.
  std::vector<ConditionRow> rows;
  for (int e = dim; e < slots.ext_size; ++e) {
    std::set<CMonomial> monos;
    for (int s = 0; s < 4; ++s) {
      for (const auto& [mono, coeff] : slots.slot[s].coords[e].terms()) {
        monos.insert(mono);
      }
    }
    for (const CMonomial& mono : monos) {
      ConditionRow row{slots.slot[0].coords[e].coefficient(mono),
                       slots.slot[1].coords[e].coefficient(mono),
                       slots.slot[2].coords[e].coefficient(mono),
                       slots.slot[3].coords[e].coefficient(mono) *
                           op.uxx_flux};
      if (!row[0].is_zero() || !row[1].is_zero() || !row[2].is_zero() ||
          !row[3].is_zero()) {
        rows.push_back(row);
      }
    }
  }
  if (!rows.empty()) {
    report.condition = extract_condition(std::move(rows));
  }
  return report;
}

std::vector<CPoly> reduce_to_system(const KOperator& op, const Basis& basis) {
  ClosureReport report = check_invariance(op, basis);
  if (!report.invariant) {
    std::string what = "reduce_to_system: operator does not close on basis";
    if (report.condition.has_value()) {
      what += " (condition: " + report.condition->str() + ")";
    }
    throw NotInvariantError(what);
  }
  return std::move(report.phi);
}

std::string extended_element_name(const Basis& basis, int ext_index) {
  if (ext_index < 0) throw DomainError("extended_element_name: bad index");
  if (basis.kind() == BasisKind::Monomial) {
    if (ext_index == 0) return "1";
    if (ext_index == 1) return "x";
    return "x^" + std::to_string(ext_index);
  }
  if (ext_index == 0) return "1";
  const int k = harmonic_of(ext_index);
  const Rational freq = basis.omega() * Rational(k);
  const std::string arg = freq == Rational(1) ? "x" : freq.str() + "x";
  if (basis.kind() == BasisKind::Trig) {
    return (is_sine(ext_index) ? "sin(" : "cos(") + arg + ")";
  }
  return (is_sine(ext_index) ? "sinh(" : "cosh(") + arg + ")";
}

Rational LinearCondition::value_at(const KOperator& op) const {
  return op.nu * Rational(c_nu) + op.beta * Rational(c_beta) +
         op.gamma_c * Rational(c_gamma) + Rational(c_const);
}

std::string LinearCondition::str() const {
  std::string out;
  const std::array<std::pair<std::int64_t, const char*>, 3> named{
      {{c_nu, "nu"}, {c_beta, "beta"}, {c_gamma, "gamma"}}};
  for (const auto& [coeff, name] : named) {
    if (coeff == 0) continue;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  }
  if (c_const != 0) {
    if (out.empty()) {
      out += std::to_string(c_const);
    } else {
      out += c_const < 0 ? " - " : " + ";
      out += std::to_string(c_const < 0 ? -c_const : c_const);
    }
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

std::optional<QuadraticForm> QuadraticForm::from_poly(const CPoly& poly) {
  const int n = poly.nvars();
  QuadraticForm form;
  form.q.assign(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [mono, coeff] : poly.terms()) {
    int first = -1, second = -1;
    int degree = 0;
    for (int i = 0; i < n; ++i) {
      degree += mono[i];
      if (mono[i] == 1) {
        (first < 0 ? first : second) = i;
      } else if (mono[i] == 2) {
        first = second = i;
      }
    }
    if (degree != 2) return std::nullopt;
    if (first == second) {
      form.q[first][first] += coeff;
    } else {
      const Rational half = coeff * Rational(1, 2);
      form.q[first][second] += half;
      form.q[second][first] += half;
    }
  }
  return form;
}

Rational QuadraticForm::eval(const std::vector<Rational>& c) const {
  Rational out(0);
  const int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out += q[i][j] * c[i] * c[j];
    }
  }
  return out;
}

double QuadraticForm::eval(const std::vector<double>& c) const {
  double out = 0.0;
  const int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out += q[i][j].to_double() * c[i] * c[j];
    }
  }
  return out;
}

}  // namespace fracwave
