#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracineq/funclib.hpp"

namespace fracineq {

enum class OutputFormat { csv, json };

struct IntervalSpec {
  double a = 0.0;
  double b = 1.0;
  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

struct SweepConfig {
  std::vector<std::string> functions;
  std::vector<IntervalSpec> intervals{{0.0, 1.0}, {0.0, 2.0}, {1.0, 3.0}};
  std::vector<double> alphas{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  std::vector<double> s_values{0.25, 0.5, 0.75, 1.0};
  std::vector<double> p_values{1.5, 2.0, 3.0, 5.0};
  std::vector<double> q_values{1.0, 2.0, 3.0};
  double slack = 1e-8;
  double quad_tol = 1e-10;
  OutputFormat output_format = OutputFormat::csv;
  std::uint64_t seed = 0;
  std::size_t random_alphas = 0;  // extra alphas drawn uniformly from (0, 1]
};

/// Parses the flat `key = v1, v2, ...` config syntax. Lines starting with '#'
/// and blank lines are ignored; intervals are written `[a,b], [c,d]`. Keys not
/// present keep their defaults; an empty functions list means the whole
/// catalog. Throws ConfigError naming the key on any syntax problem.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string& path);

/// Throws ConfigError naming the first invalid field.
void validate_config(const SweepConfig& config, const Catalog& catalog);

std::optional<OutputFormat> parse_format(std::string_view name);

enum class RowStatus { pass, fail, out_of_validated_range, precondition_skipped };

std::string_view to_string(RowStatus status);
std::optional<RowStatus> parse_status(std::string_view name);

struct SweepRow {
  std::string check_id;
  std::string function;  // empty for function-independent checks
  std::optional<double> a, b, alpha, s, p, q;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack_measured = 0.0;
  RowStatus status = RowStatus::pass;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool any_failed() const;
};

/// Report check identifiers.
namespace check_id {
inline constexpr std::string_view identity = "identity";
inline constexpr std::string_view sandwich_lower = "sandwich_lower";
inline constexpr std::string_view sandwich_upper = "sandwich_upper";
inline constexpr std::string_view sandwich_upper_half = "sandwich_upper_half";
inline constexpr std::string_view curvature_bound = "curvature_bound";
inline constexpr std::string_view holder_bound = "holder_bound";
inline constexpr std::string_view power_mean_bound = "power_mean_bound";
inline constexpr std::string_view concave_holder_bound = "concave_holder_bound";
inline constexpr std::string_view proof_prefix = "proof_";
}  // namespace check_id

struct SweepOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Runs every configured check. Work is spread over `threads` workers but rows
/// are assembled single-threaded and sorted by
/// (check_id, function, a, b, alpha, s, p, q), so the report does not depend
/// on the thread count.
SweepReport run_sweep(const SweepConfig& config, const Catalog& catalog,
                      const SweepOptions& options = {});

/// Alphas actually swept: the configured list followed by the seeded extras.
std::vector<double> effective_alphas(const SweepConfig& config);

/// CSV header: check_id,function,a,b,alpha,s,p,q,lhs,rhs,slack_measured,status.
/// Reals use %.17g; absent parameters are empty (CSV) or null (JSON).
std::string render_report(const SweepReport& report, OutputFormat format);

/// Exit status contract: 1 if any row failed, 0 otherwise.
int exit_code(const SweepReport& report);

}  // namespace fracineq
