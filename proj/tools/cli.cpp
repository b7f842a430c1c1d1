#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "fracineq/hhbounds.hpp"
#include "fracineq/quadrature.hpp"
#include "fracineq/sweep.hpp"

namespace fracineq::cli {
namespace {

IntervalSpec parse_interval_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("interval", "expected a,b");
  SweepConfig probe = parse_config("intervals = [" + text + "]");
  return probe.intervals.front();
}

void apply_quad_tol_env(SweepConfig& config) {
  const char* env = std::getenv("FRACINEQ_QUAD_TOL");
  if (!env || !*env) return;
  const double tol = parse_config(std::string("quad_tol = ") + env).quad_tol;
  if (!(tol >= kMinQuadTol && tol <= kMaxQuadTol)) {
    throw ConfigError("FRACINEQ_QUAD_TOL", "must lie in [1e-14, 1e-2]");
  }
  config.quad_tol = tol;
}

const TestFunction& require_function(const Catalog& catalog, const std::string& name) {
  const TestFunction* f = find_function(catalog, name);
  if (!f) throw ConfigError("function", "unknown function " + name);
  return *f;
}

struct SweepArgs {
  std::string config_path;
  std::string format;
  std::string out_path;
  std::vector<double> alphas;
  std::vector<std::string> intervals;
  std::vector<std::string> functions;
  unsigned threads = 0;
};

int run_sweep_command(const SweepArgs& args, const Catalog& catalog, std::ostream& out,
                      std::ostream& err) {
  SweepConfig config = load_config(args.config_path);
  if (!args.alphas.empty()) config.alphas = args.alphas;
  if (!args.intervals.empty()) {
    config.intervals.clear();
    for (const auto& iv : args.intervals) config.intervals.push_back(parse_interval_flag(iv));
  }
  if (!args.functions.empty()) config.functions = args.functions;
  if (!args.format.empty()) {
    const auto fmt = parse_format(args.format);
    if (!fmt) throw ConfigError("format", "expected csv or json");
    config.output_format = *fmt;
  }
  apply_quad_tol_env(config);
  validate_config(config, catalog);

  const SweepReport report = run_sweep(config, catalog, SweepOptions{args.threads});
  const std::string text = render_report(report, config.output_format);
  if (args.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) throw ConfigError("out", "cannot write " + args.out_path);
    file << text;
  }

  std::size_t failed = 0;
  for (const auto& row : report.rows) failed += row.status == RowStatus::fail;
  err << report.rows.size() << " rows, " << failed << " failed\n";
  return exit_code(report);
}

struct IdentityArgs {
  std::string function;
  std::string interval;
  double alpha = 1.0;
  double slack = 1e-8;
  std::string format = "csv";
};

int run_identity_command(const IdentityArgs& args, const Catalog& catalog, std::ostream& out) {
  const TestFunction& f = require_function(catalog, args.function);
  const IntervalSpec spec = parse_interval_flag(args.interval);
  SweepConfig config;
  apply_quad_tol_env(config);
  const auto fmt = parse_format(args.format);
  if (!fmt) throw ConfigError("format", "expected csv or json");
  if (!(args.alpha > 0.0)) throw ConfigError("alpha", "must be > 0");

  const Interval iv(spec.a, spec.b);
  const FracOrder alpha(args.alpha);
  const DefectResult defect = trapezoid_defect(f, iv, alpha, config.quad_tol);
  const double rhs = trapezoid_identity_rhs(f, iv, alpha, config.quad_tol);

  SweepRow row;
  row.check_id = check_id::identity;
  row.function = f.name;
  row.a = iv.a();
  row.b = iv.b();
  row.alpha = alpha.value();
  row.lhs = defect.lhs;
  row.rhs = rhs;
  row.slack_measured = std::abs(defect.lhs - rhs);
  row.status = row.slack_measured <= args.slack ? RowStatus::pass : RowStatus::fail;
  SweepReport report;
  report.rows.push_back(row);
  out << render_report(report, *fmt);
  return exit_code(report);
}

struct CertifyArgs {
  std::string function;
  double s = 1.0;
  std::string interval;
};

int run_certify_command(const CertifyArgs& args, const Catalog& catalog, std::ostream& out) {
  const TestFunction& f = require_function(catalog, args.function);
  if (!(args.s > 0.0 && args.s <= 1.0)) throw ConfigError("s", "must lie in (0, 1]");
  const SExponent s(args.s);
  Interval domain = f.natural_domain;
  if (!args.interval.empty()) {
    const IntervalSpec spec = parse_interval_flag(args.interval);
    if (spec.a < 0.0) throw ConfigError("interval", "must satisfy a >= 0");
    domain = Interval(spec.a, spec.b);
  }

  const CertifyResult declared = certify_declared(f, domain, s);
  const auto report = [&](const char* what, const CertifyResult& r) {
    out << f.name << " " << what << " s=" << s.value() << " on [" << domain.a() << ","
        << domain.b() << "]: " << (r.passed ? "pass" : "fail");
    if (r.witness) {
      out << " (x=" << r.witness->x << " y=" << r.witness->y << " lambda=" << r.witness->lambda
          << " lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs << ")";
    }
    out << "\n";
  };
  out << f.name << " declared |f''| class: " << to_string(f.declared) << "\n";
  report("declared class of |f''|", declared);
  report("f s-convex", certify_s_convex(f.eval, domain, s));
  report("|f''| s-convex", certify_curvature(f, domain, s, 1.0, false));
  report("|f''| s-concave", certify_curvature(f, domain, s, 1.0, true));
  return declared.passed ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, const Catalog& catalog, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fractional Hermite-Hadamard inequality checks"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run all checks over a configured parameter grid");
  sweep->add_option("--config", sweep_args.config_path, "Config file")->required();
  sweep->add_option("--format", sweep_args.format, "csv or json (overrides config)");
  sweep->add_option("--out", sweep_args.out_path, "Write the report here instead of stdout");
  sweep->add_option("--alpha", sweep_args.alphas, "Replace the alpha list");
  sweep->add_option("--interval", sweep_args.intervals, "Replace the interval list (a,b)");
  sweep->add_option("--function", sweep_args.functions, "Replace the function list");
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

  IdentityArgs id_args;
  auto* identity = app.add_subcommand("check-identity", "Check the trapezoid identity once");
  identity->add_option("--function", id_args.function, "Catalog function")->required();
  identity->add_option("--interval", id_args.interval, "Interval a,b")->required();
  identity->add_option("--alpha", id_args.alpha, "Fractional order")->required();
  identity->add_option("--slack", id_args.slack, "Allowed |lhs - rhs|");
  identity->add_option("--format", id_args.format, "csv or json");

  CertifyArgs cert_args;
  auto* certify = app.add_subcommand("certify", "Grid-certify a catalog function's curvature class");
  certify->add_option("--function", cert_args.function, "Catalog function")->required();
  certify->add_option("--s", cert_args.s, "Exponent s in (0, 1]")->required();
  certify->add_option("--interval", cert_args.interval, "Domain a,b (default: natural domain)");

  app.add_subcommand("list", "List catalog functions");

  std::vector<std::string> storage{"fracineq"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_args, catalog, out, err);
    if (*identity) return run_identity_command(id_args, catalog, out);
    if (*certify) return run_certify_command(cert_args, catalog, out);
    for (const auto& f : catalog) out << f.name << "\t" << to_string(f.declared) << "\n";
    return kExitPass;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace fracineq::cli
