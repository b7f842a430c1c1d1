#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "fracineq/sweep.hpp"

namespace fracineq {
namespace {

constexpr std::array<std::string_view, 12> kColumns{
    "check_id", "function", "a",   "b",   "alpha",          "s",
    "p",        "q",        "lhs", "rhs", "slack_measured", "status"};

std::string real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

std::string json_real(double v) { return std::isfinite(v) ? real(v) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      std::array<char, 8> buf{};
      std::snprintf(buf.data(), buf.size(), "\\u%04x", c);
      out += buf.data();
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_csv(const SweepReport& report, std::string& out) {
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  out += '\n';
  const auto opt = [](const std::optional<double>& v) { return v ? real(*v) : std::string(); };
  for (const SweepRow& r : report.rows) {
    out += csv_field(r.check_id) + ',' + csv_field(r.function) + ',' + opt(r.a) + ',' + opt(r.b) +
           ',' + opt(r.alpha) + ',' + opt(r.s) + ',' + opt(r.p) + ',' + opt(r.q) + ',' +
           real(r.lhs) + ',' + real(r.rhs) + ',' + real(r.slack_measured) + ',' +
           std::string(to_string(r.status)) + '\n';
  }
}

void render_json(const SweepReport& report, std::string& out) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? json_real(*v) : std::string("null");
  };
  out += "[";
  bool first = true;
  for (const SweepRow& r : report.rows) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"check_id\": " + json_string(r.check_id) +
           ", \"function\": " + json_string(r.function) + ", \"a\": " + opt(r.a) +
           ", \"b\": " + opt(r.b) + ", \"alpha\": " + opt(r.alpha) + ", \"s\": " + opt(r.s) +
           ", \"p\": " + opt(r.p) + ", \"q\": " + opt(r.q) + ", \"lhs\": " + json_real(r.lhs) +
           ", \"rhs\": " + json_real(r.rhs) +
           ", \"slack_measured\": " + json_real(r.slack_measured) +
           ", \"status\": " + json_string(to_string(r.status)) + "}";
  }
  out += report.rows.empty() ? "]\n" : "\n]\n";
}

}  // namespace

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::out_of_validated_range: return "out_of_validated_range";
    case RowStatus::precondition_skipped: return "precondition_skipped";
  }
  return "fail";
}

std::optional<RowStatus> parse_status(std::string_view name) {
  for (auto st : {RowStatus::pass, RowStatus::fail, RowStatus::out_of_validated_range,
                  RowStatus::precondition_skipped}) {
    if (to_string(st) == name) return st;
  }
  return std::nullopt;
}

std::string render_report(const SweepReport& report, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::csv) {
    render_csv(report, out);
  } else {
    render_json(report, out);
  }
  return out;
}

}  // namespace fracineq
