#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "fracineq/errors.hpp"
#include "fracineq/sweep.hpp"

using namespace fracineq;

namespace {

const Catalog& catalog() {
  static const Catalog cat = builtin_catalog();
  return cat;
}

SweepConfig quick() {
  return parse_config(
      "functions = square\n"
      "intervals = [0,1]\n"
      "alphas = 1\n"
      "s_values = 1\n"
      "p_values = 2\n"
      "q_values = 1\n");
}

std::string error_field(const std::string& text) {
  try {
    validate_config(parse_config(text), catalog());
  } catch (const ConfigError& e) {
    return e.field();
  }
  return {};
}

std::size_t expected_rows(const SweepConfig& c, std::size_t nf) {
  const std::size_t ni = c.intervals.size(), na = c.alphas.size() + c.random_alphas,
                    ns = c.s_values.size(), np = c.p_values.size(), nq = c.q_values.size();
  const std::size_t per_pair = 3 * ns + na * (1 + ns * (1 + 2 * np + nq));
  return nf * ni * per_pair + na * ns * 2 + na * np + ns;
}

}  // namespace

TEST_CASE("config parsing") {
  const SweepConfig c = parse_config(
      "# comment\n"
      "functions = square, cube\n"
      "intervals = [0,1], [1, 3]\n"
      "alphas = 0.5 1.5\n"
      "slack = 1e-9\n"
      "output_format = json\n"
      "seed = 42\n"
      "random_alphas = 3\n");
  CHECK(c.functions == std::vector<std::string>{"square", "cube"});
  CHECK(c.intervals == std::vector<IntervalSpec>{{0.0, 1.0}, {1.0, 3.0}});
  CHECK(c.alphas == std::vector<double>{0.5, 1.5});
  CHECK(c.slack == 1e-9);
  CHECK(c.output_format == OutputFormat::json);
  CHECK(c.seed == 42);
  CHECK(c.random_alphas == 3);
  CHECK(c.s_values == SweepConfig{}.s_values);
}

TEST_CASE("config errors name the offending field") {
  CHECK(error_field("alphas =\n") == "alphas");
  CHECK(error_field("alphas = 0.5, -1\n") == "alphas");
  CHECK(error_field("s_values = 1.5\n") == "s_values");
  CHECK(error_field("s_values = 0\n") == "s_values");
  CHECK(error_field("p_values = 1\n") == "p_values");
  CHECK(error_field("q_values = 0.5\n") == "q_values");
  CHECK(error_field("intervals = [1,0]\n") == "intervals");
  CHECK(error_field("intervals = [-1,1]\n") == "intervals");
  CHECK(error_field("intervals = 0,1\n") == "intervals");
  CHECK(error_field("functions = nope\n") == "functions");
  CHECK(error_field("quad_tol = 1e-20\n") == "quad_tol");
  CHECK(error_field("quad_tol = 0.5\n") == "quad_tol");
  CHECK(error_field("slack = -1\n") == "slack");
  CHECK(error_field("alphas = 1\nalphas = 2\n") == "alphas");
  CHECK(error_field("colour = red\n") == "colour");
  CHECK(error_field("output_format = xml\n") == "output_format");
  CHECK(error_field("alphas = 0.5x\n") == "alphas");
  CHECK(error_field("alphas = 1\n") == "");

  CHECK_THROWS_AS(load_config("/nonexistent/fracineq.cfg"), ConfigError);
  CHECK_THROWS_AS(run_sweep(parse_config("alphas = -2\n"), catalog()), ConfigError);
}

TEST_CASE("quick sweep") {
  const SweepReport r = run_sweep(quick(), catalog(), {1});
  CHECK(r.rows.size() == 12);
  CHECK_FALSE(r.any_failed());
  CHECK(exit_code(r) == 0);
  for (const SweepRow& row : r.rows) {
    if (row.check_id == check_id::curvature_bound || row.check_id == check_id::identity) {
      CHECK(std::abs(row.lhs - 1.0 / 6.0) < 1e-10);
      CHECK(std::abs(row.rhs - 1.0 / 6.0) < 1e-10);
    }
  }
}

TEST_CASE("statuses agree with the certifier") {
  SweepConfig c = quick();
  c.functions = {"square", "curv_sqrt"};
  c.s_values = {0.5};
  c.alphas = {0.5, 2.0};
  const SweepReport r = run_sweep(c, catalog());
  CHECK_FALSE(r.any_failed());
  for (const SweepRow& row : r.rows) {
    if (row.check_id != check_id::curvature_bound) continue;
    const TestFunction* f = find_function(catalog(), row.function);
    const bool cert =
        certify_curvature(*f, Interval(*row.a, *row.b), SExponent(*row.s), 1.0, false).passed;
    CAPTURE(row.function);
    CHECK((row.status == RowStatus::precondition_skipped) == !cert);
  }
}

TEST_CASE("every combination produces a row") {
  SweepConfig c;
  c.functions = {"square", "exp", "curv_sqrt"};
  c.alphas = {0.5, 2.0};
  c.random_alphas = 1;
  c.seed = 7;
  const SweepReport r = run_sweep(c, catalog());
  CHECK(r.rows.size() == expected_rows(c, 3));

  SweepConfig all;
  all.alphas = {1.0};
  all.s_values = {1.0};
  all.p_values = {2.0};
  all.q_values = {1.0};
  CHECK(run_sweep(all, catalog()).rows.size() == expected_rows(all, catalog().size()));

  std::set<std::string> ids;
  for (const auto& row : r.rows) ids.insert(row.check_id);
  for (std::string_view id :
       {check_id::identity, check_id::sandwich_lower, check_id::sandwich_upper,
        check_id::sandwich_upper_half, check_id::curvature_bound, check_id::holder_bound,
        check_id::power_mean_bound, check_id::concave_holder_bound}) {
    CHECK(ids.count(std::string(id)) == 1);
  }
}

TEST_CASE("report is independent of thread count and repeatable") {
  SweepConfig c;
  c.functions = {"square", "exp", "curv_pow_0.5", "curv_log1p"};
  c.random_alphas = 2;
  c.seed = 11;
  const std::string one = render_report(run_sweep(c, catalog(), {1}), OutputFormat::csv);
  const std::string three = render_report(run_sweep(c, catalog(), {3}), OutputFormat::csv);
  const std::string again = render_report(run_sweep(c, catalog(), {3}), OutputFormat::csv);
  CHECK(one == three);
  CHECK(three == again);
}

TEST_CASE("rows are sorted") {
  SweepConfig c = quick();
  c.functions = {"square", "cube"};
  c.alphas = {2.0, 0.5};
  const SweepReport r = run_sweep(c, catalog());
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const SweepRow& x = r.rows[i - 1];
    const SweepRow& y = r.rows[i];
    CHECK(std::tie(x.check_id, x.function, x.a, x.b, x.alpha, x.s, x.p, x.q) <=
          std::tie(y.check_id, y.function, y.a, y.b, y.alpha, y.s, y.p, y.q));
  }
}

TEST_CASE("seeded extra alphas") {
  SweepConfig c;
  c.alphas = {1.0};
  c.random_alphas = 4;
  c.seed = 99;
  const auto a = effective_alphas(c);
  REQUIRE(a.size() == 5);
  CHECK(a[0] == 1.0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    CHECK(a[i] > 0.0);
    CHECK(a[i] <= 1.0);
  }
  CHECK(effective_alphas(c) == a);
  c.seed = 100;
  CHECK(effective_alphas(c) != a);
}

TEST_CASE("CSV rendering") {
  SweepReport r;
  SweepRow row;
  row.check_id = "identity";
  row.function = "square";
  row.a = 0.0;
  row.b = 1.0;
  row.alpha = 0.1;
  row.lhs = 1.0 / 3.0;
  row.rhs = 1.0 / 3.0;
  row.slack_measured = 0.0;
  r.rows.push_back(row);
  const std::string csv = render_report(r, OutputFormat::csv);
  CHECK(csv ==
        "check_id,function,a,b,alpha,s,p,q,lhs,rhs,slack_measured,status\n"
        "identity,square,0,1,0.10000000000000001,,,,0.33333333333333331,0.33333333333333331,0,"
        "pass\n");

  r.rows[0].rhs = std::nan("");
  r.rows[0].status = RowStatus::precondition_skipped;
  const std::string skipped = render_report(r, OutputFormat::csv);
  CHECK(skipped.find(",nan,") != std::string::npos);
  CHECK(skipped.find("precondition_skipped") != std::string::npos);
}

TEST_CASE("JSON rendering round-trips") {
  SweepConfig c = quick();
  c.functions = {"square", "curv_sqrt"};
  c.alphas = {0.5, 2.0};
  const SweepReport r = run_sweep(c, catalog());
  const auto j = nlohmann::json::parse(render_report(r, OutputFormat::json));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const SweepRow& row = r.rows[i];
    const auto& o = j[i];
    CHECK(o.size() == 12);
    CHECK(o["check_id"] == row.check_id);
    CHECK(o["function"] == row.function);
    CHECK(parse_status(o["status"].get<std::string>()) == row.status);
    const auto same = [](const nlohmann::json& v, std::optional<double> x) {
      if (!x || !std::isfinite(*x)) return v.is_null();
      return v.get<double>() == *x;
    };
    CHECK(same(o["a"], row.a));
    CHECK(same(o["alpha"], row.alpha));
    CHECK(same(o["p"], row.p));
    CHECK(same(o["q"], row.q));
    CHECK(same(o["lhs"], row.lhs));
    CHECK(same(o["rhs"], row.rhs));
    CHECK(same(o["slack_measured"], row.slack_measured));
  }
}

TEST_CASE("status names") {
  for (RowStatus s : {RowStatus::pass, RowStatus::fail, RowStatus::out_of_validated_range,
                      RowStatus::precondition_skipped}) {
    CHECK(parse_status(to_string(s)) == s);
  }
  CHECK_FALSE(parse_status("maybe"));
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("exit code reflects failing rows") {
  SweepReport r = run_sweep(quick(), catalog());
  CHECK(exit_code(r) == 0);
  r.rows[3].status = RowStatus::out_of_validated_range;
  CHECK(exit_code(r) == 0);
  r.rows[5].status = RowStatus::fail;
  CHECK(exit_code(r) == 1);
}

TEST_CASE("an inconsistent catalog entry fails the identity") {
  Catalog cat;
  TestFunction bad = make_power(2.0);
  bad.name = "bad_square";
  bad.d2 = [](double) { return 3.0; };
  cat.push_back(bad);
  SweepConfig c = quick();
  c.functions = {"bad_square"};
  const SweepReport r = run_sweep(c, cat);
  CHECK(r.any_failed());
  bool identity_failed = false;
  for (const auto& row : r.rows) {
    if (row.check_id == check_id::identity) identity_failed = row.status == RowStatus::fail;
  }
  CHECK(identity_failed);
}
