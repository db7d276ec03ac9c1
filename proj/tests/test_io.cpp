#include <doctest.h>

#include <functional>
#include <string>
#include <utility>

#include "oturan/arclist.hpp"
#include "oturan/constructions.hpp"
#include "oturan/errors.hpp"
#include "oturan/oriented_graph.hpp"
#include "oturan/report.hpp"
#include "oturan/rng.hpp"
#include "oturan/verify.hpp"

using namespace oturan;
using nlohmann::ordered_json;

namespace {

std::pair<Errc, std::string> failure_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("expected an Error");
  return {Errc::domain_error, ""};
}

Errc code_of(const std::function<void()>& f) { return failure_of(f).first; }

}  // namespace

TEST_CASE("arc list matches the two-spoke fixture") {
  OrientedGraph g = parse_arclist("5 4\n3 0\n4 1\n0 2\n1 2\n");
  CHECK(g == fixture_by_name("subdiv:2"));
}

TEST_CASE("serializer writes header then sorted arcs") {
  OrientedGraph g = OrientedGraph::build(3, {{2, 1}, {0, 2}});
  CHECK(serialize_arclist(g) == "3 2\n0 2\n2 1\n");
  CHECK(serialize_arclist(OrientedGraph::build(1, {})) == "1 0\n");
}

TEST_CASE("parser skips comments and blank lines and strips CR") {
  OrientedGraph g = parse_arclist(
      "# in-degree demo\r\n"
      "\n"
      "  3 2 \r\n"
      "0 1\n"
      "\t2 1\r\n"
      "   \n"
      "# done\n");
  CHECK(g.order() == 3);
  CHECK(g.arc_count() == 2);
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(2, 1));
}

TEST_CASE("parser reports syntax errors with line and column") {
  auto [c1, m1] = failure_of([] { parse_arclist("abc\n"); });
  CHECK(c1 == Errc::syntax_error);
  CHECK(m1.find("line 1, column 1") != std::string::npos);

  auto [c2, m2] = failure_of([] { parse_arclist("3 1\n0 x\n"); });
  CHECK(c2 == Errc::syntax_error);
  CHECK(m2.find("line 2, column 3") != std::string::npos);
  CHECK(m2.find("unexpected character 'x'") != std::string::npos);

  auto [c3, m3] = failure_of([] { parse_arclist("3 1\n0 1 9\n"); });
  CHECK(c3 == Errc::syntax_error);
  CHECK(m3.find("trailing characters") != std::string::npos);

  auto [c4, m4] = failure_of([] { parse_arclist("3 1\n0\n"); });
  CHECK(c4 == Errc::syntax_error);
  CHECK(m4.find("expected a number") != std::string::npos);

  CHECK(code_of([] { parse_arclist("99999999999 0\n"); }) ==
        Errc::syntax_error);
  CHECK(code_of([] { parse_arclist("2000000 0\n"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_arclist(""); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_arclist("# nothing here\n\n"); }) ==
        Errc::syntax_error);
}

TEST_CASE("parser checks the declared arc count both ways") {
  auto [c1, m1] = failure_of([] { parse_arclist("3 2\n0 1\n"); });
  CHECK(c1 == Errc::count_mismatch);
  CHECK(m1.find("declares 2 arcs but 1") != std::string::npos);
  CHECK(code_of([] { parse_arclist("3 0\n0 1\n"); }) ==
        Errc::count_mismatch);
}

TEST_CASE("parser enforces the graph invariants") {
  CHECK(code_of([] { parse_arclist("2 2\n0 1\n1 0\n"); }) ==
        Errc::anti_parallel);
  CHECK(code_of([] { parse_arclist("2 1\n1 1\n"); }) == Errc::loop_arc);
  CHECK(code_of([] { parse_arclist("2 2\n0 1\n0 1\n"); }) ==
        Errc::duplicate_arc);
  CHECK(code_of([] { parse_arclist("2 1\n0 5\n"); }) ==
        Errc::vertex_out_of_range);
}

TEST_CASE("arc-list round trip is the identity both ways") {
  for (uint64_t s = 1; s <= 500; ++s) {
    int n = 1 + (int)(s % 9);
    double p = (double)(s % 5) / 4.0;
    OrientedGraph g = random_oriented(n, p, derive_seed(404, s));
    std::string text = serialize_arclist(g);
    OrientedGraph back = parse_arclist(text);
    CHECK(back == g);
    CHECK(serialize_arclist(back) == text);
  }
}

TEST_CASE("report round trip preserves every field") {
  ReportDocument r;
  r.task = "turan";
  r.parameters["n"] = 7;
  r.parameters["k"] = 2;
  r.parameters["mode"] = "exact";
  r.seed = 42;
  r.results["value"] = 16;
  r.results["nested"] = ordered_json{{"a", 1}, {"b", "two"}};

  std::string text = emit_report(r);
  ReportDocument back = parse_report(text);
  CHECK(back == r);
  CHECK(emit_report(back) == text);
}

TEST_CASE("report emission is byte-stable") {
  ReportDocument r;
  r.task = "check";
  r.parameters["k"] = 3;
  r.results["free"] = 1;
  std::string a = emit_report(r);
  std::string b = emit_report(r);
  CHECK(a == b);
  CHECK(a.substr(0, 31) == "{\n  \"schema\": \"oturan-report-v1");
  CHECK(a.back() == '\n');
  CHECK(a.find("\"tool\"") != std::string::npos);
  CHECK(a.find("\"name\": \"oturan\"") != std::string::npos);
  CHECK(a.find("\"version\": \"1.0.0\"") != std::string::npos);
}

TEST_CASE("absent seeds serialize as null and parse back as absent") {
  ReportDocument r;
  r.task = "fixture";
  std::string text = emit_report(r);
  CHECK(text.find("\"seed\": null") != std::string::npos);
  ReportDocument back = parse_report(text);
  CHECK(!back.seed.has_value());

  r.seed = 0;  // zero is a real seed, distinct from absent
  back = parse_report(emit_report(r));
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 0);
}

TEST_CASE("report parser names the offending field") {
  auto expect = [](const std::string& text, const std::string& needle) {
    auto [code, msg] = failure_of([&] { parse_report(text); });
    CAPTURE(text);
    CAPTURE(msg);
    CHECK(code == Errc::schema_error);
    CHECK(msg.find(needle) != std::string::npos);
  };

  expect("this is not json", "not valid JSON");
  expect("[1, 2]", "top level");
  expect(R"({"schema": "other-v9"})", "schema");
  expect(R"({"schema": "oturan-report-v1"})", "task");
  expect(R"({"schema": "oturan-report-v1", "task": "t"})", "parameters");
  expect(R"({"schema": "oturan-report-v1", "task": "t",
             "parameters": [1]})",
         "parameters");
  expect(R"({"schema": "oturan-report-v1", "task": "t",
             "parameters": {}})",
         "seed");
  expect(R"({"schema": "oturan-report-v1", "task": "t",
             "parameters": {}, "seed": "nope"})",
         "seed");
  expect(R"({"schema": "oturan-report-v1", "task": "t",
             "parameters": {}, "seed": -4})",
         "seed");
  expect(R"({"schema": "oturan-report-v1", "task": "t",
             "parameters": {}, "seed": null})",
         "results");
}

TEST_CASE("report emitter rejects malformed payloads") {
  ReportDocument r;
  r.task = "x";
  r.parameters = ordered_json::array();
  CHECK(code_of([&] { emit_report(r); }) == Errc::schema_error);
  r.parameters = ordered_json::object();
  r.results = 17;
  CHECK(code_of([&] { emit_report(r); }) == Errc::schema_error);
}
