#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fracineq/quadrature.hpp"
#include "fracineq/sweep.hpp"

namespace fracineq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t pos = 0;
  while (pos < value.size()) {
    const auto end = value.find_first_of(", \t", pos);
    const auto item = value.substr(pos, end == std::string_view::npos ? value.npos : end - pos);
    if (!item.empty()) items.push_back(item);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return items;
}

double parse_real(std::string_view token, const std::string& field) {
  const std::string s(trim(token));
  if (s.empty()) throw ConfigError(field, "expected a number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ConfigError(field, "'" + s + "' is not a number");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view token, const std::string& field) {
  const std::string s(trim(token));
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError(field, "'" + s + "' is not a non-negative integer");
  }
  errno = 0;
  const auto v = std::strtoull(s.c_str(), nullptr, 10);
  if (errno == ERANGE) throw ConfigError(field, "'" + s + "' is out of range");
  return v;
}

std::vector<double> parse_reals(std::string_view value, const std::string& field) {
  std::vector<double> out;
  for (auto item : split_list(value)) out.push_back(parse_real(item, field));
  if (out.empty()) throw ConfigError(field, "list must not be empty");
  return out;
}

std::vector<IntervalSpec> parse_intervals(std::string_view value, const std::string& field) {
  std::vector<IntervalSpec> out;
  std::size_t pos = 0;
  while (true) {
    pos = value.find_first_not_of(", \t", pos);
    if (pos == std::string_view::npos) break;
    if (value[pos] != '[') throw ConfigError(field, "expected '[a,b]'");
    const auto close = value.find(']', pos);
    if (close == std::string_view::npos) throw ConfigError(field, "missing ']'");
    const auto body = value.substr(pos + 1, close - pos - 1);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ConfigError(field, "expected '[a,b]'");
    out.push_back({parse_real(body.substr(0, comma), field),
                   parse_real(body.substr(comma + 1), field)});
    pos = close + 1;
  }
  if (out.empty()) throw ConfigError(field, "list must not be empty");
  return out;
}

void require_all(const std::vector<double>& values, const char* field, bool (*ok)(double),
                 const char* rule) {
  if (values.empty()) throw ConfigError(field, "list must not be empty");
  for (double v : values) {
    if (!std::isfinite(v) || !ok(v)) {
      throw ConfigError(field, "value " + std::to_string(v) + " violates " + rule);
    }
  }
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

SweepConfig parse_config(std::string_view text) {
  SweepConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");

    if (key == "functions") {
      cfg.functions.clear();
      for (auto item : split_list(value)) cfg.functions.emplace_back(item);
      if (cfg.functions.empty()) throw ConfigError(key, "list must not be empty");
    } else if (key == "intervals") {
      cfg.intervals = parse_intervals(value, key);
    } else if (key == "alphas") {
      cfg.alphas = parse_reals(value, key);
    } else if (key == "s_values") {
      cfg.s_values = parse_reals(value, key);
    } else if (key == "p_values") {
      cfg.p_values = parse_reals(value, key);
    } else if (key == "q_values") {
      cfg.q_values = parse_reals(value, key);
    } else if (key == "slack") {
      cfg.slack = parse_real(value, key);
    } else if (key == "quad_tol") {
      cfg.quad_tol = parse_real(value, key);
    } else if (key == "output_format") {
      const auto fmt = parse_format(value);
      if (!fmt) throw ConfigError(key, "expected csv or json");
      cfg.output_format = *fmt;
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(value, key);
    } else if (key == "random_alphas") {
      cfg.random_alphas = parse_unsigned(value, key);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate_config(const SweepConfig& config, const Catalog& catalog) {
  for (const auto& name : config.functions) {
    if (!find_function(catalog, name)) throw ConfigError("functions", "unknown function " + name);
  }
  if (config.intervals.empty()) throw ConfigError("intervals", "list must not be empty");
  for (const auto& iv : config.intervals) {
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b) || !(iv.a < iv.b) || iv.a < 0.0) {
      throw ConfigError("intervals", "[" + std::to_string(iv.a) + "," + std::to_string(iv.b) +
                                         "] must satisfy 0 <= a < b");
    }
  }
  require_all(config.alphas, "alphas", [](double v) { return v > 0.0; }, "alpha > 0");
  require_all(config.s_values, "s_values", [](double v) { return v > 0.0 && v <= 1.0; },
              "0 < s <= 1");
  require_all(config.p_values, "p_values", [](double v) { return v > 1.0; }, "p > 1");
  require_all(config.q_values, "q_values", [](double v) { return v >= 1.0; }, "q >= 1");
  if (!std::isfinite(config.slack) || config.slack < 0.0) {
    throw ConfigError("slack", "must be finite and >= 0");
  }
  if (!(config.quad_tol >= kMinQuadTol && config.quad_tol <= kMaxQuadTol)) {
    throw ConfigError("quad_tol", "must lie in [1e-14, 1e-2]");
  }
}

std::vector<double> effective_alphas(const SweepConfig& config) {
  std::vector<double> alphas = config.alphas;
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.random_alphas; ++i) {
    // 53 random bits mapped onto (0, 1].
    alphas.push_back(static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53);
  }
  return alphas;
}

}  // namespace fracineq
