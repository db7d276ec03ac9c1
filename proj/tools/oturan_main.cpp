#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oturan/arclist.hpp"
#include "oturan/constructions.hpp"
#include "oturan/errors.hpp"
#include "oturan/report.hpp"
#include "oturan/subdivision.hpp"
#include "oturan/turan_search.hpp"
#include "oturan/verify.hpp"

namespace {

using namespace oturan;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::syntax_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::syntax_error, "cannot write file: " + path);
  out << text;
  if (!out) fail(Errc::syntax_error, "write failed: " + path);
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "elapsed_ms=" << ms << "\n";
  }
};

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    fail(Errc::syntax_error, "--n-range wants A..B, got: " + text);
  try {
    size_t used = 0;
    int a = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    std::string tail = text.substr(dots + 2);
    int b = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    fail(Errc::syntax_error, "--n-range wants A..B, got: " + text);
  }
}

ordered_json witness_stats_json(const TuranResult& r) {
  ordered_json stats = ordered_json::object();
  stats["nodes"] = r.stats.nodes;
  stats["count_prunes"] = r.stats.count_prunes;
  stats["freeness_prunes"] = r.stats.freeness_prunes;
  stats["symmetry_prunes"] = r.stats.symmetry_prunes;
  return stats;
}

int run_construct(int n, int k, std::optional<int> split,
                  const std::string& scheme_text, const std::string& out) {
  ConstructionParams p;
  p.n = n;
  p.k = k;
  p.split = split;
  p.y_scheme = YScheme::parse(scheme_text);
  OrientedGraph g = construct_lower(p);
  spill(out, serialize_arclist(g));
  std::cout << "construct: n=" << n << " k=" << k
            << " scheme=" << p.y_scheme.to_string()
            << " arcs=" << g.arc_count() << " -> " << out << "\n";
  return 0;
}

int run_check(int k, const std::string& path) {
  OrientedGraph g = parse_arclist(slurp(path));
  auto w = find_subdivision(g, k);
  if (!w) {
    std::cout << "FREE n=" << g.order() << " arcs=" << g.arc_count()
              << "\n";
    return 0;
  }
  std::cout << "WITNESS center=" << w->center << " spokes=" << join(w->spokes)
            << " leaves=" << join(w->leaves) << "\n";
  return 1;
}

int run_turan(int n, int k, const std::string& mode,
              std::optional<uint64_t> seed, int restarts,
              std::optional<double> time_limit, int threads,
              const std::string& json_path) {
  Timer timer;
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  cfg.time_limit_seconds = time_limit;
  cfg.threads = threads;

  TuranResult r = mode == "exact" ? exact_turan(n, k, cfg)
                                  : heuristic_turan(n, k, cfg);

  if (!json_path.empty()) {
    ReportDocument doc;
    doc.task = "turan";
    doc.parameters["n"] = n;
    doc.parameters["k"] = k;
    doc.parameters["mode"] = mode;
    if (mode == "heuristic") {
      doc.parameters["restarts"] = restarts;
      doc.parameters["iterations"] = cfg.iterations;
    } else {
      doc.parameters["guard"] = cfg.exact_guard;
    }
    doc.parameters["threads"] = threads;
    if (time_limit)
      doc.parameters["time_limit_ms"] =
          (long long)(*time_limit * 1000.0 + 0.5);
    doc.seed = seed;
    doc.results["n"] = r.n;
    doc.results["k"] = r.k;
    doc.results["value"] = r.value;
    doc.results["kind"] = kind_name(r.kind);
    doc.results["witness"] = serialize_arclist(r.witness);
    doc.results["stats"] = witness_stats_json(r);
    spill(json_path, emit_report(doc));
  }
  std::cout << "n=" << n << " k=" << k << " value=" << r.value
            << " kind=" << kind_name(r.kind) << "\n";
  // A truncated exact run proved nothing: signal the resource guard.
  if (mode == "exact" && r.kind == TuranResult::Kind::lower_bound_evidence)
    return 3;
  return 0;
}

int run_extremal_check(int k, const std::string& path) {
  OrientedGraph g = parse_arclist(slurp(path));
  ExtremalCheck c = check_extremal_family(g, k);
  if (c.accepted) {
    std::cout << "accept\n";
    return 0;
  }
  std::cout << "reject: " << c.diagnosis << "\n";
  return 1;
}

int run_verify(const std::string& target, const std::string& range,
               uint64_t seed, const std::string& json_path) {
  Timer timer;
  auto [lo, hi] = parse_range(range);
  VerifyReport rep = run_verification(target, lo, hi, seed);

  if (!json_path.empty()) {
    ReportDocument doc;
    doc.task = "verify";
    doc.parameters["target"] = target;
    doc.parameters["n_lo"] = lo;
    doc.parameters["n_hi"] = hi;
    doc.seed = seed;
    doc.results["target"] = rep.check_id;
    doc.results["instances"] = rep.instances;
    doc.results["hypothesis_hits"] = rep.hypothesis_hits;
    doc.results["violations"] = rep.violations;
    doc.results["passed"] = rep.passed();
    if (!rep.upper_bound_label.empty())
      doc.results["upper_bound"] = rep.upper_bound_label;
    spill(json_path, emit_report(doc));
  }
  std::cout << "target=" << rep.check_id << " instances=" << rep.instances
            << " hypothesis_hits=" << rep.hypothesis_hits
            << " violations=" << rep.violations.size()
            << (rep.passed() ? " pass" : " FAIL") << "\n";
  return rep.passed() ? 0 : 1;
}

int run_fixture(const std::string& id, const std::string& out) {
  OrientedGraph g = fixture_by_name(id);
  spill(out, serialize_arclist(g));
  std::cout << "fixture " << id << ": n=" << g.order()
            << " arcs=" << g.arc_count() << " -> " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal search and verification for oriented graphs "
               "avoiding a subdivided in-star"};
  app.require_subcommand(1);
  int rc = 0;

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Write the lower-bound construction as an arc list");
  int c_n = 0, c_k = 0;
  std::optional<int> c_split;
  std::string c_scheme = "circulant";
  std::string c_out;
  construct->add_option("--n", c_n, "vertex count")->required();
  construct->add_option("--k", c_k, "spoke count")->required();
  construct->add_option("--split", c_split, "size of the source part X");
  construct->add_option("--y-scheme", c_scheme,
                        "circulant | cycles:<a,b,...>");
  construct->add_option("-o,--output", c_out, "output file")->required();
  construct->callback(
      [&] { rc = run_construct(c_n, c_k, c_split, c_scheme, c_out); });

  // check
  auto* check = app.add_subcommand(
      "check", "Detect a subdivided in-star in an arc-list file");
  int ck_k = 0;
  std::string ck_file;
  check->add_option("--k", ck_k, "spoke count")->required();
  check->add_option("file", ck_file, "arc-list file")->required();
  check->callback([&] { rc = run_check(ck_k, ck_file); });

  // turan
  auto* turan = app.add_subcommand(
      "turan", "Maximum arc count: exact search or seeded heuristic");
  int t_n = 0, t_k = 0, t_restarts = 50, t_threads = 1;
  std::string t_mode;
  std::optional<uint64_t> t_seed;
  std::optional<double> t_time;
  std::string t_json;
  turan->add_option("--n", t_n, "vertex count")->required();
  turan->add_option("--k", t_k, "spoke count")->required();
  turan->add_option("--mode", t_mode, "exact | heuristic")
      ->required()
      ->check(CLI::IsMember({"exact", "heuristic"}));
  turan->add_option("--seed", t_seed, "RNG seed (required for heuristic)");
  turan->add_option("--restarts", t_restarts, "heuristic restarts");
  turan->add_option("--time-limit", t_time, "wall-clock limit in seconds");
  turan->add_option("--threads", t_threads, "worker threads (exact mode)");
  turan->add_option("--json", t_json, "write a JSON report here");
  turan->callback([&] {
    rc = run_turan(t_n, t_k, t_mode, t_seed, t_restarts, t_time, t_threads,
                   t_json);
  });

  // extremal-check
  auto* exch = app.add_subcommand(
      "extremal-check", "Recognize a member of the extremal family");
  int e_k = 0;
  std::string e_file;
  exch->add_option("--k", e_k, "spoke count (2 or 3)")->required();
  exch->add_option("file", e_file, "arc-list file")->required();
  exch->callback([&] { rc = run_extremal_check(e_k, e_file); });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Property-check a lemma or theorem target");
  std::string v_target, v_range, v_json;
  uint64_t v_seed = 0;
  verify->add_option("--target", v_target, "check id")
      ->required()
      ->check(CLI::IsMember({"1.1", "1.2", "1.3-lower", "2.2", "2.3", "2.4",
                             "2.5", "3.3-claim"}));
  verify->add_option("--n-range", v_range, "instance orders, A..B")
      ->required();
  verify->add_option("--seed", v_seed, "RNG seed")->required();
  verify->add_option("--json", v_json, "write a JSON report here");
  verify->callback(
      [&] { rc = run_verify(v_target, v_range, v_seed, v_json); });

  // fixture
  auto* fix = app.add_subcommand(
      "fixture", "Write a named fixture graph as an arc list");
  std::string f_id, f_out;
  fix->add_option("--id", f_id, "H1..H7 | star:K | subdiv:K")->required();
  fix->add_option("-o,--output", f_out, "output file")->required();
  fix->callback([&] { rc = run_fixture(f_id, f_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return e.code() == Errc::guard_exceeded ? 3 : 2;
  }
  return rc;
}
