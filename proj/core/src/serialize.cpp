#include "fracwave/serialize.hpp"

#include <cstdio>

namespace fracwave {

namespace {

nlohmann::json rational_json(const Rational& r) {
  if (r.den() == 1) return r.num();
  return r.str();
}

Rational rational_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return Rational::parse(j.get<std::string>());
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

}  // namespace

nlohmann::json to_json(const KOperator& op) {
  nlohmann::json j{{"schema", 1},
                   {"nu", rational_json(op.nu)},
                   {"beta", rational_json(op.beta)},
                   {"gamma", rational_json(op.gamma_c)},
                   {"p", op.p},
                   {"n", op.n},
                   {"m", op.m}};
  if (op.has_uxx_flux()) j["uxx_flux"] = rational_json(op.uxx_flux);
  return j;
}

KOperator koperator_from_json(const nlohmann::json& j) {
  KOperator op;
  op.nu = rational_from(j.at("nu"));
  op.beta = rational_from(j.at("beta"));
  op.gamma_c = rational_from(j.at("gamma"));
  op.p = j.at("p").get<int>();
  op.n = j.at("n").get<int>();
  op.m = j.at("m").get<int>();
  if (j.contains("uxx_flux")) op.uxx_flux = rational_from(j.at("uxx_flux"));
  return op;
}

nlohmann::json to_json(const SimilaritySolution& s) {
  return nlohmann::json{
      {"schema", 1},
      {"alpha", s.alpha.value()},
      {"C", {s.coeff[0], s.coeff[1], s.coeff[2], s.coeff[3]}},
      {"kappa", s.kappa},
      {"printed_c0", s.printed_c0}};
}

SimilaritySolution similarity_from_json(const nlohmann::json& j) {
  SimilaritySolution s{Order(j.at("alpha").get<double>()),
                       {},
                       j.at("kappa").get<double>(),
                       j.at("printed_c0").get<double>()};
  const auto& c = j.at("C");
  for (int i = 0; i < 4; ++i) s.coeff[i] = c.at(i).get<double>();
  return s;
}

nlohmann::json to_json(const QuinticSolution& q) {
  return nlohmann::json{{"schema", 1},     {"alpha", q.alpha.value()},
                        {"nu", q.nu},      {"beta", q.beta},
                        {"gamma", q.gamma_c}, {"C", q.C},
                        {"mu", q.mu},      {"mubar", q.mubar}};
}

QuinticSolution quintic_from_json(const nlohmann::json& j) {
  return QuinticSolution{Order(j.at("alpha").get<double>()),
                         j.at("nu").get<double>(),
                         j.at("beta").get<double>(),
                         j.at("gamma").get<double>(),
                         j.at("C").get<double>(),
                         j.at("mu").get<double>(),
                         j.at("mubar").get<double>()};
}

nlohmann::json to_json(const OdibatSolution& o) {
  return nlohmann::json{{"schema", 1},
                        {"a", o.a},
                        {"c", o.c},
                        {"alpha", o.alpha.value()},
                        {"mu_supp", o.mu_supp}};
}

OdibatSolution odibat_from_json(const nlohmann::json& j) {
  return OdibatSolution{j.at("a").get<double>(), j.at("c").get<double>(),
                        Order(j.at("alpha").get<double>()),
                        j.at("mu_supp").get<double>()};
}

nlohmann::json to_json(const ResidualReport& r) {
  nlohmann::json j{{"schema", 1},
                   {"target", target_name(r.target)},
                   {"max_residual", r.max_residual},
                   {"l2_residual", r.l2_residual},
                   {"notes", r.notes}};
  if (r.est_order.has_value()) j["est_order"] = *r.est_order;
  if (r.grid.has_value()) {
    j["grid"] = {{"t0", r.grid->time.t0()},
                 {"h", r.grid->time.step()},
                 {"steps", r.grid->time.steps()},
                 {"t_assert", r.grid->t_assert},
                 {"x", r.grid->x}};
  }
  return j;
}

nlohmann::json to_json(const ClosureReport& r) {
  nlohmann::json j{{"schema", 1}, {"invariant", r.invariant}};
  if (r.invariant) {
    nlohmann::json phi = nlohmann::json::array();
    for (const CPoly& p : r.phi) phi.push_back(p.str());
    j["phi"] = phi;
  } else {
    nlohmann::json terms = nlohmann::json::array();
    for (const ResidualTerm& term : r.residual_terms) {
      terms.push_back({{"element", term.element}, {"poly", term.poly.str()}});
    }
    j["residual_terms"] = terms;
  }
  if (r.condition.has_value()) j["condition"] = r.condition->str();
  return j;
}

std::string summary_line(const ResidualReport& r) {
  std::string line = target_name(r.target) +
                     ": max_residual=" + fmt(r.max_residual) +
                     " l2=" + fmt(r.l2_residual);
  if (r.est_order.has_value()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", *r.est_order);
    line += std::string(" est_order=") + buf;
  }
  if (!r.notes.empty()) line += " (" + r.notes + ")";
  return line;
}

}  // namespace fracwave
