#include "vlat/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vlat/dsl/evaluator.hpp"
#include "vlat/dsl/parser.hpp"
#include "vlat/falsify.hpp"

namespace vlat {

namespace {

using report::Json;

struct Options {
  bool json = false;
  bool timing = false;
  ToleranceConfig tol;
  std::string file;
  std::uint64_t seed = 7;
  std::size_t points = 4, samples = 500, disk_n = 4, grid = 8;
  std::string suite;
};

int emit(Json& rep, bool passed, const Options& o, std::chrono::steady_clock::time_point t0, std::ostream& out) {
  if (o.timing) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep["timing"] = Json{{"wall_ms", ms}};
  }
  if (o.json)
    out << report::dump(rep) << "\n";
  else
    out << report::render_text(rep);
  return passed ? 0 : 1;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err, std::chrono::steady_clock::time_point t0) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    err << o.file << ": error: cannot open file\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  dsl::ParseResult pr = dsl::parse_program(buf.str());
  for (const auto& d : pr.diagnostics) err << d.format(o.file) << "\n";
  if (!pr.ok()) return 2;
  dsl::EvalOptions eo;
  eo.tol = o.tol;
  eo.seed = o.seed;
  dsl::Evaluation ev = dsl::evaluate(pr.program, eo);
  std::string source = o.file.substr(o.file.find_last_of('/') + 1);
  ev.report["source"] = source;
  return emit(ev.report, ev.all_passed, o, t0, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Order-theoretic series analysis over finite pointwise models", "vlat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Write the JSON report instead of text tables");
  app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");
  app.add_option("--eps-cmp", o.tol.eps_cmp, "Relative comparison tolerance");
  app.add_option("--eps-conv", o.tol.eps_conv, "Convergence-detection tolerance");
  app.add_option("--grid-k", o.tol.grid_K, "Modulus grid size");

  auto* run = app.add_subcommand("run", "Evaluate a .vls program");
  run->add_option("file", o.file, "Program file")->required();
  run->add_option("--seed", o.seed, "Seed for randomized queries");

  auto* ax = app.add_subcommand("axioms", "Randomized Phi-algebra axiom suite");
  ax->add_option("--points", o.points, "Model size")->check(CLI::Range(1, 4096));
  ax->add_option("--samples", o.samples, "Samples per axiom");
  ax->add_option("--seed", o.seed, "Seed");

  auto* demo = app.add_subcommand("demo", "Counterexample demos");
  demo->require_subcommand(1);
  auto* disk = demo->add_subcommand("shrinking-disk", "a_n = indicator of the disk of radius 1/n");
  disk->add_option("--n", o.disk_n, "Number of points 1/k")->check(CLI::Range(1, 4096));
  auto* cb = demo->add_subcommand("cb01", "Geometric series of f(t) = t on a grid of [0,1]");
  cb->add_option("--grid", o.grid, "Grid size N")->check(CLI::Range(1, 1 << 20));

  auto* fal = app.add_subcommand("falsify", "Randomized theorem-identity suite");
  fal->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(falsify_suites()));
  fal->add_option("--samples", o.samples, "Number of random cases");
  fal->add_option("--seed", o.seed, "Seed");

  std::vector<std::string> argv_store = {"vlat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    o.tol.validate();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "vlat: " << e.what() << "\n";
    if (e.get_name() == "RequiredError" || e.get_name() == "RequiresError") err << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "vlat: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(o, out, err, t0);
    if (ax->parsed()) {
      Json rep = report::skeleton("axioms");
      Model m = make_model(o.points);
      rep["model"] = report::model("axioms", m);
      Json v = report::axioms_verdict(m, o.samples, o.seed, o.tol);
      bool ok = v["passed"].get<bool>();
      rep["verdicts"].push_back(v);
      return emit(rep, ok, o, t0, out);
    }
    if (demo->parsed()) {
      Json rep = report::skeleton(disk->parsed() ? "demo shrinking-disk" : "demo cb01");
      Json v = disk->parsed() ? report::shrinking_disk_verdict(o.disk_n, o.tol) : report::cb01_verdict(o.grid, o.tol);
      bool ok = v["passed"].get<bool>();
      report::collect_flags(rep, v);
      rep["verdicts"].push_back(v);
      return emit(rep, ok, o, t0, out);
    }
    Json rep = report::skeleton("falsify");
    SuiteResult r = run_falsify_suite(o.suite, o.samples, o.seed, o.tol);
    Json v{{"query", "falsify"}, {"target", o.suite}, {"args", Json::array()},
           {"status", r.passed() ? "Passed" : "Falsified"}, {"passed", r.passed()}, {"values", Json::object()},
           {"bands", Json::object()}, {"checks", Json::array()}, {"notes", Json::array()}};
    v["checks"].push_back(Json{{"name", o.suite + " identities on " + std::to_string(r.cases) + " cases"},
                               {"passed", r.passed()}, {"witness", r.counterexample}});
    v["details"] = Json{{"cases", r.cases}, {"failures", r.failures}, {"seed", o.seed}};
    rep["verdicts"].push_back(v);
    return emit(rep, r.passed(), o, t0, out);
  } catch (const std::exception& e) {
    err << "vlat: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace vlat
