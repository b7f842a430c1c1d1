#include "fracineq/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "fracineq/hhbounds.hpp"
#include "parallel.hpp"

namespace fracineq {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Which class a certification establishes.
enum class CertKind { curvature_convex, curvature_concave, function_convex };

struct CertKey {
  std::size_t fn;
  std::size_t iv;
  std::size_t s;
  double q;
  CertKind kind;
  auto operator<=>(const CertKey&) const = default;
};

struct DefectOutcome {
  bool ok = false;
  double lhs = kNaN;
  double rhs = kNaN;
};

struct SandwichOutcome {
  bool ok = false;
  SandwichBounds bounds;
};

bool certify_key(const TestFunction& f, const Interval& iv, SExponent s, const CertKey& key) {
  switch (key.kind) {
    case CertKind::curvature_convex: return certify_curvature(f, iv, s, key.q, false).passed;
    case CertKind::curvature_concave: return certify_curvature(f, iv, s, key.q, true).passed;
    case CertKind::function_convex: {
      if (!certify_s_convex(f.eval, iv, s)) return false;
      for (std::size_t i = 0; i < kDefaultCertifyGrid; ++i) {
        const double t = iv.a() + iv.width() * static_cast<double>(i) /
                                      static_cast<double>(kDefaultCertifyGrid - 1);
        if (!(f.eval(t) >= 0.0)) return false;
      }
      return true;
    }
  }
  return false;
}

bool row_less(const SweepRow& x, const SweepRow& y) {
  // nullopt orders before any value
  return std::tie(x.check_id, x.function, x.a, x.b, x.alpha, x.s, x.p, x.q) <
         std::tie(y.check_id, y.function, y.a, y.b, y.alpha, y.s, y.p, y.q);
}

SweepRow inequality_row(std::string_view id, double lhs, double rhs, double slack) {
  SweepRow row;
  row.check_id = id;
  row.lhs = lhs;
  row.rhs = rhs;
  row.slack_measured = rhs - lhs;
  row.status = (std::isfinite(row.slack_measured) && row.slack_measured >= -slack)
                   ? RowStatus::pass
                   : RowStatus::fail;
  return row;
}

SweepRow skipped_row(std::string_view id, double lhs) {
  SweepRow row;
  row.check_id = id;
  row.lhs = lhs;
  row.rhs = kNaN;
  row.slack_measured = kNaN;
  row.status = RowStatus::precondition_skipped;
  return row;
}

}  // namespace

bool SweepReport::any_failed() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return r.status == RowStatus::fail; });
}

int exit_code(const SweepReport& report) { return report.any_failed() ? 1 : 0; }

SweepReport run_sweep(const SweepConfig& config, const Catalog& catalog,
                      const SweepOptions& options) {
  validate_config(config, catalog);

  std::vector<const TestFunction*> fns;
  if (config.functions.empty()) {
    for (const auto& f : catalog) fns.push_back(&f);
  } else {
    for (const auto& name : config.functions) fns.push_back(find_function(catalog, name));
  }
  std::vector<Interval> ivs;
  for (const auto& spec : config.intervals) ivs.emplace_back(spec.a, spec.b);
  const std::vector<double> alphas = effective_alphas(config);
  const auto& svals = config.s_values;
  const auto& pvals = config.p_values;
  const auto& qvals = config.q_values;
  std::vector<double> conj(pvals.size());
  for (std::size_t i = 0; i < pvals.size(); ++i) conj[i] = pvals[i] / (pvals[i] - 1.0);

  const std::size_t nf = fns.size(), ni = ivs.size(), na = alphas.size(), ns = svals.size(),
                    np = pvals.size();

  // Certificates, keyed so each distinct one is computed once.
  std::map<CertKey, std::size_t> cert_index;
  std::vector<CertKey> cert_keys;
  const auto want = [&](CertKey key) {
    if (cert_index.emplace(key, cert_keys.size()).second) cert_keys.push_back(key);
  };
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t i = 0; i < ni; ++i) {
      for (std::size_t s = 0; s < ns; ++s) {
        want({f, i, s, 1.0, CertKind::curvature_convex});
        want({f, i, s, 1.0, CertKind::function_convex});
        for (double q : conj) {
          want({f, i, s, q, CertKind::curvature_convex});
          want({f, i, s, q, CertKind::curvature_concave});
        }
        for (double q : qvals) want({f, i, s, q, CertKind::curvature_convex});
      }
    }
  }
  std::vector<char> cert_ok(cert_keys.size(), 0);
  detail::parallel_for(cert_keys.size(), options.threads, [&](std::size_t k) {
    const CertKey& key = cert_keys[k];
    bool ok = false;
    try {
      ok = certify_key(*fns[key.fn], ivs[key.iv], SExponent(svals[key.s]), key);
    } catch (const std::exception&) {
      ok = false;
    }
    cert_ok[k] = ok ? 1 : 0;
  });
  const auto certified = [&](CertKey key) { return cert_ok[cert_index.at(key)] != 0; };

  // Defects and identity right-hand sides per (f, interval, alpha).
  std::vector<DefectOutcome> defects(nf * ni * na);
  detail::parallel_for(defects.size(), options.threads, [&](std::size_t k) {
    const std::size_t f = k / (ni * na), i = (k / na) % ni, a = k % na;
    DefectOutcome out;
    try {
      const FracOrder alpha(alphas[a]);
      out.lhs = trapezoid_defect(*fns[f], ivs[i], alpha, config.quad_tol).lhs;
      out.rhs = trapezoid_identity_rhs(*fns[f], ivs[i], alpha, config.quad_tol);
      out.ok = true;
    } catch (const std::exception&) {
      out.ok = false;
    }
    defects[k] = out;
  });

  // Sandwich bounds per (f, interval, s).
  std::vector<SandwichOutcome> sandwiches(nf * ni * ns);
  detail::parallel_for(sandwiches.size(), options.threads, [&](std::size_t k) {
    const std::size_t f = k / (ni * ns), i = (k / ns) % ni, s = k % ns;
    if (!certified({f, i, s, 1.0, CertKind::function_convex})) return;
    try {
      sandwiches[k].bounds = hh_s_convex_sandwich(*fns[f], ivs[i], SExponent(svals[s]),
                                                  config.quad_tol);
      sandwiches[k].ok = true;
    } catch (const std::exception&) {
      sandwiches[k].ok = false;
    }
  });

  // Integral facts per (alpha, s, p).
  std::vector<ProofIntegralReport> proofs(na * ns * np);
  std::vector<char> proof_ok(proofs.size(), 0);
  detail::parallel_for(proofs.size(), options.threads, [&](std::size_t k) {
    const std::size_t a = k / (ns * np), s = (k / np) % ns, p = k % np;
    try {
      proofs[k] = proof_integral_checks(FracOrder(alphas[a]), SExponent(svals[s]), pvals[p]);
      proof_ok[k] = 1;
    } catch (const std::exception&) {
      proof_ok[k] = 0;
    }
  });

  SweepReport report;
  auto& rows = report.rows;
  const double slack = config.slack;

  for (std::size_t f = 0; f < nf; ++f) {
    const TestFunction& fn = *fns[f];
    for (std::size_t i = 0; i < ni; ++i) {
      const Interval& iv = ivs[i];
      const double w = iv.width();
      const double d2a = fn.d2(iv.a()), d2b = fn.d2(iv.b()), d2m = fn.d2(iv.midpoint());
      const auto stamp = [&](SweepRow row) {
        row.function = fn.name;
        row.a = iv.a();
        row.b = iv.b();
        return row;
      };

      for (std::size_t s = 0; s < ns; ++s) {
        const SandwichOutcome& sw = sandwiches[(f * ni + i) * ns + s];
        const bool eligible = certified({f, i, s, 1.0, CertKind::function_convex});
        std::array<SweepRow, 3> three;
        if (!eligible) {
          three = {skipped_row(check_id::sandwich_lower, kNaN),
                   skipped_row(check_id::sandwich_upper, kNaN),
                   skipped_row(check_id::sandwich_upper_half, kNaN)};
        } else if (!sw.ok) {
          three = {inequality_row(check_id::sandwich_lower, kNaN, kNaN, slack),
                   inequality_row(check_id::sandwich_upper, kNaN, kNaN, slack),
                   inequality_row(check_id::sandwich_upper_half, kNaN, kNaN, slack)};
        } else {
          const auto& bnd = sw.bounds;
          three = {inequality_row(check_id::sandwich_lower, bnd.lower, bnd.mean, slack),
                   inequality_row(check_id::sandwich_upper, bnd.mean, bnd.upper, slack),
                   inequality_row(check_id::sandwich_upper_half, bnd.mean,
                                  bnd.upper_half_reading, slack)};
          if (three[2].status == RowStatus::fail) {
            three[2].status = RowStatus::out_of_validated_range;
          }
        }
        for (auto& row : three) {
          row = stamp(std::move(row));
          row.s = svals[s];
          rows.push_back(std::move(row));
        }
      }

      for (std::size_t a = 0; a < na; ++a) {
        const DefectOutcome& d = defects[(f * ni + i) * na + a];
        const FracOrder alpha(alphas[a]);
        const double lhs = std::abs(d.lhs);

        SweepRow id;
        id.check_id = check_id::identity;
        id.lhs = d.lhs;
        id.rhs = d.rhs;
        id.slack_measured = std::abs(d.lhs - d.rhs);
        id.status = (d.ok && id.slack_measured <= slack) ? RowStatus::pass : RowStatus::fail;
        id = stamp(std::move(id));
        id.alpha = alpha.value();
        rows.push_back(std::move(id));

        for (std::size_t s = 0; s < ns; ++s) {
          const SExponent sexp(svals[s]);
          const auto finish = [&](SweepRow row, std::optional<double> p, std::optional<double> q) {
            row = stamp(std::move(row));
            row.alpha = alpha.value();
            row.s = sexp.value();
            row.p = p;
            row.q = q;
            rows.push_back(std::move(row));
          };

          if (certified({f, i, s, 1.0, CertKind::curvature_convex})) {
            finish(inequality_row(check_id::curvature_bound, lhs,
                                  s_convex_curvature_bound(w, alpha, sexp, d2a, d2b), slack),
                   std::nullopt, std::nullopt);
          } else {
            finish(skipped_row(check_id::curvature_bound, lhs), std::nullopt, std::nullopt);
          }

          for (std::size_t p = 0; p < np; ++p) {
            const auto params = BoundParams::with_holder(alpha, sexp, pvals[p]);
            const double q = conj[p];

            SweepRow holder =
                certified({f, i, s, q, CertKind::curvature_convex})
                    ? inequality_row(check_id::holder_bound, lhs,
                                     holder_bound(w, params, d2a, d2b), slack)
                    : skipped_row(check_id::holder_bound, lhs);
            SweepRow concave =
                certified({f, i, s, q, CertKind::curvature_concave})
                    ? inequality_row(check_id::concave_holder_bound, lhs,
                                     s_concave_holder_bound(w, params, d2m), slack)
                    : skipped_row(check_id::concave_holder_bound, lhs);
            for (SweepRow* row : {&holder, &concave}) {
              if (alpha.value() > 1.0 && row->status != RowStatus::precondition_skipped) {
                row->status = RowStatus::out_of_validated_range;
              }
            }
            finish(std::move(holder), pvals[p], q);
            finish(std::move(concave), pvals[p], q);
          }

          for (double q : qvals) {
            const auto params = BoundParams::with_power_mean(alpha, sexp, q);
            finish(certified({f, i, s, q, CertKind::curvature_convex})
                       ? inequality_row(check_id::power_mean_bound, lhs,
                                        power_mean_bound(w, params, d2a, d2b), slack)
                       : skipped_row(check_id::power_mean_bound, lhs),
                   std::nullopt, q);
          }
        }
      }
    }
  }

  // Integral facts: each row keyed only by the parameters it depends on.
  const auto proof_row = [&](std::size_t a, std::size_t s, std::size_t p, std::size_t which,
                             bool with_alpha, bool with_s, bool with_p) {
    const std::size_t k = (a * ns + s) * np + p;
    const IntegralCheck* c = proof_ok[k] ? &proofs[k].checks[which] : nullptr;
    SweepRow row;
    row.check_id = std::string(check_id::proof_prefix) +
                   (c ? c->name
                      : std::array{"weight_moment", "beta_difference", "power_moment",
                                   "kernel_comparison"}[which]);
    if (with_alpha) row.alpha = alphas[a];
    if (with_s) row.s = svals[s];
    if (with_p) row.p = pvals[p];
    if (!c) {
      row.lhs = row.rhs = row.slack_measured = kNaN;
      row.status = RowStatus::fail;
    } else if (c->inequality) {
      row.lhs = c->quadrature;
      row.rhs = c->reference;
      row.slack_measured = c->reference - c->quadrature;
      row.status = c->passed ? RowStatus::pass : RowStatus::fail;
      if (!c->in_validated_range) row.status = RowStatus::out_of_validated_range;
    } else {
      row.lhs = c->quadrature;
      row.rhs = c->reference;
      row.slack_measured = std::abs(c->quadrature - c->reference);
      row.status = c->passed ? RowStatus::pass : RowStatus::fail;
    }
    rows.push_back(std::move(row));
  };
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t s = 0; s < ns; ++s) {
      proof_row(a, s, 0, 0, true, true, false);
      proof_row(a, s, 0, 1, true, true, false);
    }
    for (std::size_t p = 0; p < np; ++p) proof_row(a, 0, p, 3, true, false, true);
  }
  for (std::size_t s = 0; s < ns; ++s) proof_row(0, s, 0, 2, false, true, false);

  std::stable_sort(rows.begin(), rows.end(), row_less);
  return report;
}

}  // namespace fracineq
