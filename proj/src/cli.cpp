#include "ck/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ck/errors.hpp"
#include "ck/parallel.hpp"
#include "ck/report.hpp"
#include "ck/representations.hpp"
#include "ck/validation.hpp"

namespace ck::cli {

namespace {

// Bad flag values are usage errors (exit 2), unlike invalid kernel queries.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw DomainError("not a number: '" + std::string(s) + "'");
  return v;
}

struct EvalArgs {
  std::string space, kind, convention = "paper", format = "csv", output;
  int dim = 0;
  std::string t, y, r;  // value or grid
  std::vector<std::string> reps{"auto"};
  std::optional<double> tol, sigma;
  unsigned jobs = 0;
};

struct ValidateArgs {
  std::string suite = "all", profile = "default", from_file, output, space;
  int dim = 0;
  unsigned jobs = 0;
  std::optional<double> tol;
};

// Flags beat CK_DEFAULT_TOL, which beats the built-in default.
double resolve_tol(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0)) throw UsageError("--tol must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("CK_DEFAULT_TOL")) {
    double v;
    try {
      v = parse_number(env);
    } catch (const DomainError&) {
      throw UsageError(std::string("CK_DEFAULT_TOL is not a number: '") + env + "'");
    }
    if (!(v > 0.0)) throw UsageError("CK_DEFAULT_TOL must be positive");
    return v;
  }
  return kDefaultTol;
}

std::vector<double> grid_arg(const std::string& spec, const char* flag) {
  try {
    return parse_grid(spec);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& out) {
  if (path.empty() || path == "-") return out;
  file.open(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  return file;
}

struct Cell {
  KernelQuery q;
  Rep rep;
};

// Evaluates every cell (concurrently) and writes the records in grid order.
int emit_records(const EvalArgs& a, const std::vector<double>& params, const std::vector<double>& rs,
                 std::ostream& out, std::ostream& err) {
  const Space space = Space::parse(a.space);
  const KernelKind kind = parse_kernel_kind(a.kind);
  EvalOptions opts;
  opts.convention = parse_convention(a.convention);
  opts.tol = resolve_tol(a.tol);
  opts.sigma = a.sigma;
  std::vector<Rep> reps;
  for (const auto& name : a.reps) reps.push_back(parse_rep(name));

  // Reject invalid queries before any output.
  std::vector<Cell> cells;
  for (double p : params)
    for (double r : rs)
      for (Rep rep : reps) {
        const KernelQuery q{space, a.dim, kind, p, r};
        q.validate();
        if (!supports(q, rep))
          throw DomainError("representation '" + std::string(to_string(rep)) + "' is not available for " +
                            std::string(to_string(kind)) + " on " + std::string(space.name()) + " in dimension " +
                            std::to_string(a.dim));
        cells.push_back({q, rep});
      }

  auto records = parallel_map<report::OutputRecord>(
      cells.size(),
      [&](std::size_t i) {
        const Cell& c = cells[i];
        report::OutputRecord rec;
        rec.space = c.q.space;
        rec.n = c.q.n;
        rec.kind = c.q.kind;
        rec.param = c.q.param;
        rec.r = c.q.r;
        rec.rep = c.rep;
        rec.convention = opts.convention;
        try {
          const Evaluation e = evaluate(c.q, c.rep, opts);
          rec.rep = e.rep;
          rec.value = e.result.value;
          rec.err = e.result.err_estimate;
          rec.n_evals = e.result.n_evals;
          rec.warnings = e.warnings;
        } catch (const ConvergenceError& x) {
          rec.value = x.best_estimate();
          rec.err = x.err_estimate();
          rec.warnings.push_back(std::string("convergence failure: ") + x.what());
          return rec;
        }
        if (!std::isfinite(rec.value))
          rec.warnings.push_back("convergence failure: non-finite value");
        else if (rec.err > opts.tol * std::abs(rec.value))
          rec.warnings.push_back("convergence failure: error estimate " + report::format_number(rec.err) +
                                 " exceeds the requested tolerance");
        return rec;
      },
      a.jobs);

  bool converged = true;
  for (const auto& rec : records)
    for (const auto& w : rec.warnings) {
      if (w.rfind("convergence failure", 0) == 0) converged = false;
      if (a.format == "csv")
        err << "warning: " << rec.space.name() << " n=" << rec.n << " " << to_string(rec.kind)
            << " param=" << report::format_number(rec.param) << " r=" << report::format_number(rec.r) << " "
            << to_string(rec.rep) << ": " << w << "\n";
    }

  std::ofstream file;
  std::ostream& os = open_output(a.output, file, out);
  if (a.format == "json") {
    report::Meta meta{opts.convention, opts.tol, opts.sigma};
    os << report::records_document(meta, records).dump(2) << "\n";
  } else {
    report::write_csv(os, records);
  }
  return converged ? kOk : kConvergence;
}

// Re-evaluates stored records; any difference beyond rounding fails.
analysis::ValidationReport replay(const std::vector<report::OutputRecord>& records, double tol) {
  analysis::ValidationReport r;
  r.suite = "replay";
  double worst = 0.0;
  for (const auto& rec : records) {
    EvalOptions o;
    o.convention = rec.convention;
    o.tol = tol;
    try {
      const double v = evaluate({rec.space, rec.n, rec.kind, rec.param, rec.r}, rec.rep, o).result.value;
      const double m = std::max(std::abs(v), std::abs(rec.value));
      worst = std::max(worst, m == 0.0 ? 0.0 : std::abs(v - rec.value) / m);
    } catch (const Error& e) {
      r.cell_errors.push_back(e.what());
    }
  }
  r.add_flag("records reproduced (max relative deviation)", worst, 1e-12,
             std::to_string(records.size()) + " records");
  r.add_flag("evaluation errors", static_cast<double>(r.cell_errors.size()), 0.0);
  return r;
}

int do_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const auto profile = validation::parse_profile(a.profile);
  nlohmann::ordered_json doc;
  doc["meta"]["version"] = report::kVersion;
  doc["meta"]["tol_profile"] = a.profile;
  bool passed = true;
  std::vector<analysis::ValidationReport> reports;
  std::vector<analysis::PairingReport> pairings;
  if (!a.from_file.empty()) {
    std::ifstream in(a.from_file);
    if (!in) throw UsageError("cannot read '" + a.from_file + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("'" + a.from_file + "' is not JSON: " + e.what());
    }
    double tol = resolve_tol(a.tol);
    if (j.contains("meta") && j["meta"].contains("tol") && !a.tol) tol = j["meta"]["tol"].get<double>();
    doc["meta"]["from_file"] = a.from_file;
    doc["meta"]["tol"] = tol;
    reports.push_back(replay(report::records_from_document(j), tol));
  } else {
    validation::SuiteOptions o;
    if (!a.space.empty()) o.space = Space::parse(a.space);
    if (a.dim > 0) o.n = a.dim;
    o.profile = profile;
    o.jobs = a.jobs;
    doc["meta"]["suite"] = a.suite;
    doc["meta"]["tol"] = validation::eval_tol(profile);
    auto res = validation::run(validation::parse_suite(a.suite), o);
    reports = std::move(res.reports);
    pairings = std::move(res.pairings);
  }
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    doc["reports"].push_back(report::to_json(r));
    for (const auto& c : r.flags)
      if (!c.pass)
        err << "FAIL " << r.suite << " " << r.space.name() << " n=" << r.n << " " << to_string(r.kind) << ": "
            << c.name << " = " << report::format_number(c.value) << " (threshold "
            << report::format_number(c.threshold) << ") " << c.detail << "\n";
    for (const auto& e : r.cell_errors) err << "  error: " << e << "\n";
  }
  doc["pairings"] = nlohmann::ordered_json::array();
  for (const auto& p : pairings) doc["pairings"].push_back(report::to_json(p));
  doc["passed"] = passed;

  std::ofstream file;
  std::ostream& os = open_output(a.output, file, out);
  os << doc.dump(2) << "\n";
  return passed ? kOk : kFailed;
}

void add_query_flags(CLI::App* c, EvalArgs& a) {
  c->add_option("--space", a.space, "euclidean, sphere or hyperbolic")
      ->required()
      ->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic"}));
  c->add_option("--dim", a.dim, "dimension n >= 1")->required()->check(CLI::PositiveNumber);
  c->add_option("--kind", a.kind, "heat or poisson")->required()->check(CLI::IsMember({"heat", "poisson"}));
  c->add_option("--rep", a.reps, "representation(s), comma separated")
      ->delimiter(',')
      ->check(CLI::IsMember({"closed", "raise", "descent", "theta", "integral", "gruet", "gruet-classic",
                             "subordinate", "auto"}));
  c->add_option("--convention", a.convention, "heat normalisation: paper or markovian")
      ->check(CLI::IsMember({"paper", "markovian"}));
  c->add_option("--tol", a.tol, "quadrature tolerance (overrides CK_DEFAULT_TOL)");
  c->add_option("--sigma", a.sigma, "contour abscissa for gruet");
  c->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--jobs", a.jobs, "worker threads (0: all cores)");
}

// The parameter flag must match the kernel kind.
std::vector<double> param_grid(const EvalArgs& a, const char* t_flag, const char* y_flag) {
  const bool heat = a.kind == "heat";
  const std::string& want = heat ? a.t : a.y;
  const std::string& other = heat ? a.y : a.t;
  if (!other.empty())
    throw UsageError(std::string(heat ? y_flag : t_flag) + " does not apply to " + a.kind + " kernels");
  if (want.empty()) throw UsageError(std::string(heat ? t_flag : y_flag) + " is required for " + a.kind + " kernels");
  return grid_arg(want, heat ? t_flag : y_flag);
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  if (spec.empty()) throw DomainError("empty grid");
  if (spec.find(':') == std::string_view::npos) return {parse_number(spec)};
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
    throw DomainError("grid must be start:stop:count, got '" + std::string(spec) + "'");
  const double a = parse_number(spec.substr(0, c1));
  const double b = parse_number(spec.substr(c1 + 1, c2 - c1 - 1));
  std::string_view cnt = spec.substr(c2 + 1);
  const bool geometric = !cnt.empty() && cnt.back() == 'g';
  if (geometric) cnt.remove_suffix(1);
  const double kd = parse_number(cnt);
  if (!(kd >= 1.0) || kd != std::floor(kd) || kd > 1e6) throw DomainError("grid count must be a positive integer");
  const int k = static_cast<int>(kd);
  if (geometric && !(a > 0.0 && b > 0.0)) throw DomainError("geometric grid needs positive end points");
  std::vector<double> out;
  for (int i = 0; i < k; ++i) {
    if (k == 1) {
      out.push_back(a);
      break;
    }
    if (i == k - 1) {
      out.push_back(b);  // exact end point
      break;
    }
    const double f = static_cast<double>(i) / (k - 1);
    out.push_back(geometric ? a * std::pow(b / a, f) : a + (b - a) * f);
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat and Poisson kernels on constant-curvature spaces", "ck"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate kernels at points");
  add_query_flags(eval, ev);
  eval->add_option("--t", ev.t, "time (value or start:stop:count[g])");
  eval->add_option("--y", ev.y, "Poisson height (value or grid)");
  eval->add_option("--r", ev.r, "geodesic distance (value or grid)")->required();

  EvalArgs tb;
  tb.format = "csv";
  auto* table = app.add_subcommand("table", "tabulate kernels on a grid");
  add_query_flags(table, tb);
  table->add_option("--t-grid", tb.t, "start:stop:count, suffix g for geometric spacing");
  table->add_option("--y-grid", tb.y, "start:stop:count, suffix g for geometric spacing");
  table->add_option("--r-grid", tb.r, "start:stop:count")->required();
  table->add_option("--output,-o", tb.output, "output file (default stdout)");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "run cross-validation suites");
  validate->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"representations", "pde", "mass", "subordination", "semigroup", "all"}));
  validate->add_option("--tol-profile", va.profile)->check(CLI::IsMember({"strict", "default"}));
  validate->add_option("--space", va.space)->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic"}));
  validate->add_option("--dim", va.dim)->check(CLI::PositiveNumber);
  validate->add_option("--from-file", va.from_file, "replay a JSON table");
  validate->add_option("--tol", va.tol, "tolerance for --from-file replays");
  validate->add_option("--output,-o", va.output, "report file (default stdout)");
  validate->add_option("--jobs", va.jobs, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      const auto params = param_grid(ev, "--t", "--y");
      return emit_records(ev, params, grid_arg(ev.r, "--r"), out, err);
    }
    if (*table) {
      const auto params = param_grid(tb, "--t-grid", "--y-grid");
      return emit_records(tb, params, grid_arg(tb.r, "--r-grid"), out, err);
    }
    return do_validate(va, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << "\n";
    return kConvergence;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ContourError& e) {
    err << "contour error: " << e.what() << "\n";
    return kDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace ck::cli
