#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/mittag.hpp"
#include "fracwave/serialize.hpp"
#include "fracwave/solutions.hpp"
#include "fracwave/subspace.hpp"
#include "fracwave/verify.hpp"

namespace fracwave::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
}

/// Output sink: a file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CommonOpts {
  std::string output;  // empty or "-" = stdout
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool json_default = false) {
  if (json_default) opts.format = "json";
  // "-h" stays free: the verify subcommand takes the step as --h.
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("-o,--output", opts.output, "Output file (default stdout)");
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json", "text"}));
}

Basis parse_basis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw DomainError("basis must be kind:parameter, e.g. monomial:3 or "
                      "trig:1 or hyperbolic:1/2");
  }
  if (parts[0] == "monomial") {
    return Basis::monomial(static_cast<int>(parse_double(parts[1])));
  }
  if (parts[0] == "trig") return Basis::trig(Rational::parse(parts[1]));
  if (parts[0] == "hyperbolic") {
    return Basis::hyperbolic(Rational::parse(parts[1]));
  }
  throw DomainError("unknown basis kind '" + parts[0] + "'");
}

double env_or(double fallback) {
  if (const char* env = std::getenv("FRACWAVE_TOL")) {
    return parse_double(env);
  }
  return fallback;
}

// ---------------------------------------------------------------------------
// ml / figure
// ---------------------------------------------------------------------------

struct MlOpts {
  CommonOpts common;
  std::string two_alpha;
  std::string t_range = "0:10:0.05";
  std::optional<double> a, b;
  std::string z_range;
};

int run_ml_family(const MlOpts& opts) {
  const auto tokens = split(opts.two_alpha, ',');
  if (tokens.empty()) throw DomainError("--two-alpha needs at least one value");
  const std::vector<double> ts = parse_values(opts.t_range);
  Sink sink(opts.common.output);
  auto& os = sink.stream();
  os << "t";
  for (const auto& tok : tokens) os << ",E_" << tok;
  os << "\n";
  for (double t : ts) {
    os << format_double(t);
    for (const auto& tok : tokens) {
      const double two_a = parse_double(tok);
      if (two_a <= 0.0) throw DomainError("--two-alpha values must be > 0");
      // The family of Fig.-type data: E_{2a,1}(-t^{2a}), i.e. mubar = 1.
      const double value = ml(two_a, 1.0, -std::pow(t, two_a));
      os << "," << format_double(value);
    }
    os << "\n";
  }
  return kExitOk;
}

int run_ml(const MlOpts& opts) {
  if (!opts.two_alpha.empty()) return run_ml_family(opts);
  if (!opts.a || !opts.b || opts.z_range.empty()) {
    throw DomainError("ml needs either --two-alpha/--t or --a/--b/--z");
  }
  Sink sink(opts.common.output);
  auto& os = sink.stream();
  os << "z,E\n";
  for (double z : parse_values(opts.z_range)) {
    os << format_double(z) << "," << format_double(ml(*opts.a, *opts.b, z))
       << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// invariance
// ---------------------------------------------------------------------------

struct InvarianceOpts {
  CommonOpts common;
  std::string op_name = "custom";
  std::string basis = "trig:1";
  std::string nu = "0", beta = "0", gamma = "0", uxx = "0", a = "1";
  int p = 2, n = 2, m = 2;
};

KOperator build_operator(const InvarianceOpts& opts) {
  if (opts.op_name == "third") return third_order_operator();
  if (opts.op_name == "rosenau-hyman") return rosenau_hyman(Order(0.5));
  if (opts.op_name == "odibat") return odibat_operator(Rational::parse(opts.a));
  if (opts.op_name == "quintic") {
    return quintic_operator(Rational::parse(opts.nu), Rational::parse(opts.beta),
                            Rational::parse(opts.gamma));
  }
  KOperator op;
  op.nu = Rational::parse(opts.nu);
  op.beta = Rational::parse(opts.beta);
  op.gamma_c = Rational::parse(opts.gamma);
  op.p = opts.p;
  op.n = opts.n;
  op.m = opts.m;
  op.uxx_flux = Rational::parse(opts.uxx);
  return op;
}

int run_invariance(const InvarianceOpts& opts) {
  const KOperator op = build_operator(opts);
  const Basis basis = parse_basis(opts.basis);
  const ClosureReport report = check_invariance(op, basis);

  Sink sink(opts.common.output);
  auto& os = sink.stream();
  if (opts.common.format == "json") {
    os << to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  os << "operator: nu=" << op.nu.str() << " beta=" << op.beta.str()
     << " gamma=" << op.gamma_c.str() << " powers=(" << op.p << "," << op.n
     << "," << op.m << ")";
  if (op.has_uxx_flux()) os << " uxx_flux=" << op.uxx_flux.str();
  os << "\nbasis: " << opts.basis << "\n";
  os << "invariant: " << (report.invariant ? "yes" : "no") << "\n";
  if (report.invariant) {
    for (std::size_t i = 0; i < report.phi.size(); ++i) {
      os << "phi[" << i << "] = " << report.phi[i].str() << "\n";
    }
  } else {
    for (const auto& term : report.residual_terms) {
      os << "residual[" << term.element << "] = " << term.poly.str() << "\n";
    }
  }
  if (report.condition.has_value()) {
    os << "condition: " << report.condition->str() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveOpts {
  CommonOpts common;
  std::string family;
  double alpha = 0.75;
  double nu = 1.0, beta = 4.5, gamma = 2.0, C = 1.0;
  double a = 1.0, c = 1.0;
  std::string x_range = "-3.14:3.15:0.1";
  std::string t_range = "0.5:5:0.5";
};

int run_solve(const SolveOpts& opts) {
  const std::vector<double> xs = parse_values(opts.x_range);
  const std::vector<double> ts = parse_values(opts.t_range);

  std::function<double(double, double)> eval;
  nlohmann::json record;
  if (opts.family == "similarity") {
    const SimilaritySolution s = build_similarity(Order(opts.alpha));
    record = to_json(s);
    eval = [s](double x, double t) { return eval_similarity(s, x, t); };
  } else if (opts.family == "quintic") {
    const QuinticSolution q =
        build_quintic(Order(opts.alpha), opts.nu, opts.beta, opts.gamma, opts.C);
    record = to_json(q);
    eval = [q](double x, double t) { return eval_quintic(q, x, t); };
  } else if (opts.family == "odibat") {
    const OdibatSolution o = make_odibat(opts.a, opts.c, Order(opts.alpha));
    record = to_json(o);
    eval = [o](double x, double t) { return eval_odibat(o, x, t); };
  } else {
    throw DomainError("--family must be similarity, quintic or odibat");
  }

  Sink sink(opts.common.output);
  auto& os = sink.stream();
  if (opts.common.format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (double t : ts) {
      for (double x : xs) {
        values.push_back({{"t", t}, {"x", x}, {"u", eval(x, t)}});
      }
    }
    os << nlohmann::json{{"schema", 1}, {"solution", record}, {"values", values}}
              .dump(2)
       << "\n";
    return kExitOk;
  }
  os << "t,x,u\n";
  for (double t : ts) {
    for (double x : xs) {
      os << format_double(t) << "," << format_double(x) << ","
         << format_double(eval(x, t)) << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
  CommonOpts common;
  std::string target;
  double alpha = 0.75;
  double mubar = 1.0;
  std::string nu = "1", beta = "9/2", gamma = "2";
  double C = 1.0;
  double a = 1.0, c = 1.0;
  double t0 = 0.5;
  double T = 5.0;
  double h = 1.0 / 2048.0;
  std::string x_list;
  std::optional<double> tol;
};

std::vector<double> default_x_quintic() {
  std::vector<double> xs;
  for (int i = 0; i < 16; ++i) {
    xs.push_back(static_cast<double>(i) * std::numbers::pi / 8.0);
  }
  return xs;
}

int run_verify(const VerifyOpts& opts) {
  ResidualReport report;
  double gate = -1.0;  // < 0 means report-only

  if (opts.target == "similarity") {
    report = verify_similarity(Order(opts.alpha));
    gate = opts.tol.value_or(env_or(1e-11));
  } else if (opts.target == "quintic-system") {
    QuinticSystemOptions qopt;
    qopt.t_assert = opts.t0;
    qopt.t_end = opts.T;
    qopt.h = opts.h;
    report = verify_quintic_system(Order(opts.alpha), opts.mubar, qopt);
    gate = opts.tol.value_or(env_or(1e-3));
  } else if (opts.target == "quintic-pde") {
    const double nu = Rational::parse(opts.nu).to_double();
    const double beta = Rational::parse(opts.beta).to_double();
    const double gamma = Rational::parse(opts.gamma).to_double();
    const QuinticSolution q =
        build_quintic(Order(opts.alpha), nu, beta, gamma, opts.C);
    const KOperator op =
        quintic_operator(Rational::parse(opts.nu), Rational::parse(opts.beta),
                         Rational::parse(opts.gamma));
    VerifyGrid grid{TimeGrid(0.0, opts.h,
                             static_cast<std::size_t>(
                                 std::llround(opts.T / opts.h))),
                    opts.x_list.empty() ? default_x_quintic()
                                        : parse_values(opts.x_list),
                    opts.t0};
    report = verify_pde(as_separable(q), op, grid);
    gate = opts.tol.value_or(env_or(1e-3));
  } else if (opts.target == "odibat") {
    const OdibatSolution o = make_odibat(opts.a, opts.c, Order(opts.alpha));
    VerifyGrid grid{TimeGrid(0.0, opts.h,
                             static_cast<std::size_t>(
                                 std::llround(opts.T / opts.h))),
                    opts.x_list.empty() ? std::vector<double>{0.5, 1.0, 1.5, 2.0}
                                        : parse_values(opts.x_list),
                    opts.t0};
    report = verify_odibat(o, grid);
    if (opts.tol.has_value()) gate = *opts.tol;  // report-only by default
  } else {
    throw DomainError(
        "--target must be similarity, quintic-system, quintic-pde or odibat");
  }

  Sink sink(opts.common.output);
  auto& os = sink.stream();
  if (opts.common.format == "json") {
    os << to_json(report).dump(2) << "\n";
  } else {
    os << summary_line(report) << "\n";
  }
  if (gate >= 0.0 && report.max_residual > gate) {
    std::cerr << "verification failed: max_residual "
              << format_double(report.max_residual) << " > tolerance "
              << format_double(gate) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------
// range/list parsing and formatting
// ---------------------------------------------------------------------------

std::vector<double> parse_values(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_double(tok));
    if (out.empty()) throw DomainError("empty value list");
    return out;
  }
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw DomainError("range must be start:stop:step, got '" + text + "'");
  }
  const double start = parse_double(parts[0]);
  const double stop = parse_double(parts[1]);
  const double step = parse_double(parts[2]);
  if (!(step > 0.0)) throw DomainError("range step must be > 0");
  if (stop < start) throw DomainError("range stop must be >= start");
  // Start inclusive; stop excluded unless a point lands on it within
  // rounding tolerance.
  const double tol = step * 1e-9;
  std::vector<double> out;
  for (std::size_t k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + tol) break;
    if (v < stop - tol || std::abs(v - stop) <= tol) out.push_back(v);
    if (out.size() > 10'000'000) throw DomainError("range too large");
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

int run(int argc, const char* const* argv) {
  CLI::App app{
      "fracwave: exact solutions and residual verification for "
      "time-fractional dispersive equations"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  MlOpts ml_opts;
  auto* ml_cmd = app.add_subcommand(
      "ml", "Tabulate the Mittag-Leffler function E_{a,b}(z), or the family "
            "E_{2a,1}(-t^{2a}) for a list of 2a values");
  ml_cmd->add_option("--two-alpha", ml_opts.two_alpha,
                     "Comma list of 2a values (family mode)");
  ml_cmd->add_option("--t", ml_opts.t_range,
                     "t range start:stop:step (family mode; start included, "
                     "stop excluded unless a point lands on it)");
  ml_cmd->add_option("--a", ml_opts.a, "First parameter (point mode)");
  ml_cmd->add_option("--b", ml_opts.b, "Second parameter (point mode)");
  ml_cmd->add_option("--z", ml_opts.z_range, "z range or comma list");
  add_common(ml_cmd, ml_opts.common);

  MlOpts fig_opts;
  fig_opts.two_alpha = "1.0,1.5,2.0";
  auto* fig_cmd = app.add_subcommand(
      "figure", "Damped-oscillation family E_{2a,1}(-t^{2a}): CSV with one "
                "column per 2a value (unit rate)");
  fig_cmd->add_option("--two-alpha", fig_opts.two_alpha,
                      "Comma list of 2a values");
  fig_cmd->add_option("--t", fig_opts.t_range, "t range start:stop:step");
  add_common(fig_cmd, fig_opts.common);

  InvarianceOpts inv_opts;
  auto* inv_cmd = app.add_subcommand(
      "invariance", "Closure report for an operator/basis pair");
  inv_cmd->add_option("--op", inv_opts.op_name,
                      "third | quintic | rosenau-hyman | odibat | custom")
      ->check(CLI::IsMember({"third", "quintic", "rosenau-hyman", "odibat",
                             "custom"}));
  inv_cmd->add_option("--basis", inv_opts.basis,
                      "monomial:D | trig:omega | hyperbolic:omega (omega as "
                      "rational, e.g. 1/2)");
  inv_cmd->add_option("--nu", inv_opts.nu, "quintic-slot coefficient");
  inv_cmd->add_option("--beta", inv_opts.beta, "cubic-slot coefficient");
  inv_cmd->add_option("--gamma", inv_opts.gamma, "first-order coefficient");
  inv_cmd->add_option("--uxx", inv_opts.uxx,
                      "coefficient of d/dx(u u_xx) (custom op)");
  inv_cmd->add_option("--a", inv_opts.a, "parameter of the odibat operator");
  inv_cmd->add_option("--p", inv_opts.p, "power under d^5");
  inv_cmd->add_option("--n", inv_opts.n, "power under d^3");
  inv_cmd->add_option("--m", inv_opts.m, "power under d^1");
  add_common(inv_cmd, inv_opts.common);

  SolveOpts solve_opts;
  auto* solve_cmd =
      app.add_subcommand("solve", "Tabulate u(x,t) for a constructed solution");
  solve_cmd->add_option("--family", solve_opts.family,
                        "similarity | quintic | odibat")
      ->required();
  solve_cmd->add_option("--alpha", solve_opts.alpha, "fractional order");
  solve_cmd->add_option("--nu", solve_opts.nu, "quintic nu");
  solve_cmd->add_option("--beta", solve_opts.beta, "quintic beta");
  solve_cmd->add_option("--gamma", solve_opts.gamma, "quintic gamma");
  solve_cmd->add_option("--C", solve_opts.C, "quintic constant branch");
  solve_cmd->add_option("--a", solve_opts.a, "compacton a");
  solve_cmd->add_option("--c", solve_opts.c, "compacton speed c");
  solve_cmd->add_option("--x", solve_opts.x_range, "x range or comma list");
  solve_cmd->add_option("--t", solve_opts.t_range, "t range or comma list");
  add_common(solve_cmd, solve_opts.common);

  VerifyOpts verify_opts;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run a residual verification target and emit the report");
  // free "-h" before the step option --h goes in
  verify_cmd->set_help_flag("--help", "Print this help message and exit");
  verify_cmd
      ->add_option("--target", verify_opts.target,
                   "similarity | quintic-system | quintic-pde | odibat")
      ->required();
  verify_cmd->add_option("--alpha", verify_opts.alpha, "fractional order");
  verify_cmd->add_option("--mubar", verify_opts.mubar,
                         "oscillation rate (quintic-system)");
  verify_cmd->add_option("--nu", verify_opts.nu, "operator nu (rational)");
  verify_cmd->add_option("--beta", verify_opts.beta, "operator beta (rational)");
  verify_cmd->add_option("--gamma", verify_opts.gamma,
                         "operator gamma (rational)");
  verify_cmd->add_option("--C", verify_opts.C, "quintic constant branch");
  verify_cmd->add_option("--a", verify_opts.a, "compacton a");
  verify_cmd->add_option("--c", verify_opts.c, "compacton speed c");
  verify_cmd->add_option("--t0", verify_opts.t0,
                         "assert residuals at nodes >= t0");
  verify_cmd->add_option("--T", verify_opts.T, "end of the time window");
  verify_cmd->add_option("--h", verify_opts.h, "time step");
  verify_cmd->add_option("--x", verify_opts.x_list, "x samples (list/range)");
  verify_cmd->add_option("--tol", verify_opts.tol,
                         "pass/fail tolerance (overrides FRACWAVE_TOL and the "
                         "per-target default)");
  add_common(verify_cmd, verify_opts.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ml_cmd->parsed()) return run_ml(ml_opts);
    if (fig_cmd->parsed()) return run_ml_family(fig_opts);
    if (inv_cmd->parsed()) return run_invariance(inv_opts);
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fracwave");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace fracwave::cli
