#include "vlat/dsl/evaluator.hpp"

#include <map>

#include "vlat/axioms.hpp"
#include "vlat/lattice.hpp"
#include "vlat/power_series.hpp"
#include "vlat/series.hpp"

namespace vlat::report {

namespace {

Json check(const std::string& name, bool passed, const std::string& witness = "") {
  Json c{{"name", name}, {"passed", passed}};
  if (!witness.empty()) c["witness"] = witness;
  return c;
}

Json verdict(const std::string& query, const std::string& target) {
  return Json{{"query", query}, {"target", target}, {"args", Json::array()}, {"status", "Error"},
              {"passed", false},  {"values", Json::object()}, {"bands", Json::object()},
              {"checks", Json::array()}, {"notes", Json::array()}};
}

}  // namespace

bool checks_passed(const Json& v) {
  for (const auto& c : v["checks"])
    if (!c["passed"].get<bool>()) return false;
  return true;
}

void collect_flags(Json& report, const Json& v) {
  static const std::vector<std::string> known = {flags::heuristic, flags::support_fragile, flags::scalar_coordinate,
                                                 flags::promoted};
  for (const auto& n : v["notes"]) {
    std::string s = n.get<std::string>();
    bool is_flag = false;
    for (const auto& k : known) is_flag = is_flag || k == s;
    if (!is_flag) continue;
    bool present = false;
    for (const auto& f : report["flags"]) present = present || f.get<std::string>() == s;
    if (!present) report["flags"].push_back(s);
  }
}

Json axioms_verdict(const Model& m, std::size_t samples, std::uint64_t seed, const ToleranceConfig& tol) {
  Json v = verdict("axioms", "model");
  AxiomReport r = check_phi_axioms(m, samples, seed, tol);
  for (const auto& a : r.results) {
    Json c = check(a.axiom + ": " + a.statement, a.passed, a.witness);
    c["samples"] = a.checks;
    v["checks"].push_back(c);
  }
  v["details"] = Json{{"points", m->size()}, {"samples", samples}, {"seed", seed}};
  v["status"] = r.all_passed() ? "AxiomsHold" : "AxiomFailed";
  v["passed"] = r.all_passed();
  return v;
}

Json shrinking_disk_verdict(std::size_t n, const ToleranceConfig& tol) {
  Json v = verdict("demo", "shrinking_disk");
  ShrinkingDiskDemo d = gallery_shrinking_disk(n, tol);
  const Model& M = d.series.model();
  v["status"] = to_string(d.verdict.status);
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < M->size(); ++i) pts.push_back(M->label(i));
  v["details"] = Json{{"points", labels(pts)}, {"N", n}, {"expected_status", to_string(d.expected)},
                      {"limsup_root", element(*d.verdict.limsup_root)}, {"expected_L", element(d.expected_L)}};
  v["bands"]["L_support"] = labels(labels_where(M, [&](std::size_t i) { return !(*d.verdict.limsup_root)[i].is_zero(); }));
  if (d.verdict.boundary_band) v["bands"]["boundary_band"] = labels(d.verdict.boundary_band->support_labels());
  Json table = Json::array();
  for (std::size_t m = 0; m < d.partial_at_zero.size(); ++m)
    table.push_back(Json{{"m", m + 1}, {"partial_sum_at_0", d.partial_at_zero[m].get_str()}});
  v["table"] = table;
  v["checks"].push_back(check("verdict is " + to_string(d.expected), d.verdict.status == d.expected));
  v["checks"].push_back(check("L = indicator{0}", d.L_matches));
  v["checks"].push_back(check("L is not << e", d.L_not_dominated));
  v["checks"].push_back(check("partial sums at 0 equal m for m <= 64", d.partial_sums_equal_m));
  v["checks"].push_back(check("series converges at every 1/k", d.others_converge));
  for (const auto& note : d.verdict.notes) v["notes"].push_back(note);
  v["passed"] = d.passed();
  return v;
}

Json cb01_verdict(std::size_t grid, const ToleranceConfig& tol) {
  Json v = verdict("demo", "cb01");
  Cb01Demo d = gallery_cb01_geometric(grid, 64, 4, tol);
  v["status"] = "Illustration";
  v["details"] = Json{{"label", d.label}, {"grid_N", d.grid_N}, {"m", d.m}};
  Json table = Json::array();
  for (const auto& r : d.rows)
    table.push_back(Json{{"grid_N", r.grid_N}, {"t_max", r.t_max}, {"max_partial_sum", r.max_partial_sum},
                         {"limit_at_t_max", r.limit_at_t_max}});
  v["table"] = table;
  v["checks"].push_back(check("f << 1 on the grid", d.dominated_on_grid));
  v["checks"].push_back(check("geometric series converges at every grid point", d.pointwise_converges));
  bool grows = true;
  for (std::size_t i = 1; i < d.rows.size(); ++i) grows = grows && d.rows[i].max_partial_sum > d.rows[i - 1].max_partial_sum;
  v["checks"].push_back(check("sup of partial sums grows under refinement", grows));
  v["passed"] = checks_passed(v);
  return v;
}

}  // namespace vlat::report

namespace vlat::dsl {

using report::Json;

namespace {

struct Env {
  std::string model_name;
  Model model;
  std::map<std::string, ComplexElement> elems;
  std::map<std::string, bool> elem_complex;
  std::map<std::string, CoeffForm> seqs;
  std::map<std::string, Series> series;
  std::map<std::string, PowerSeries> pseries;
};

ComplexElement build_elem(const Model& m, const ElemDecl& d) {
  if (d.identity) return ComplexElement(identity(m));
  std::vector<Scalar> re, im;
  for (const auto& c : d.values) {
    re.emplace_back(c.re);
    im.emplace_back(c.im);
  }
  return ComplexElement(RealElement(m, re), RealElement(m, im));
}

CoeffForm build_seq(const Model& m, const SeqDecl& d) {
  std::vector<ScalarForm> forms;
  for (const auto& r : d.ratios) {
    if (d.form == SeqDecl::Form::Poly)
      forms.push_back(ScalarForm::polynomial(d.poly, r));
    else
      forms.push_back(ScalarForm::rational_power(Rational(1), d.exponent, d.shift, r));
  }
  return CoeffForm(m, std::move(forms));
}

Json verdict_json(const std::string& verb, const QueryDecl& q) {
  Json v{{"query", verb}, {"target", q.target}, {"args", report::labels(q.args)}, {"status", "Error"},
         {"passed", false}, {"values", Json::object()}, {"bands", Json::object()},
         {"checks", Json::array()}, {"notes", Json::array()}};
  return v;
}

void add_notes(Json& v, const std::vector<std::string>& notes) {
  for (const auto& n : notes) v["notes"].push_back(n);
}

void fill_convergence(Json& v, const ConvergenceVerdict& c) {
  v["status"] = to_string(c.status);
  if (c.sum) v["values"]["sum"] = report::element(*c.sum);
  if (c.sum_error) v["values"]["sum_error"] = report::element(*c.sum_error);
  if (c.limsup_root) v["values"]["limsup_root"] = report::element(*c.limsup_root);
  if (c.boundary_band) v["bands"]["boundary_band"] = report::labels(c.boundary_band->support_labels());
  if (!c.divergent_points.empty()) v["bands"]["divergent"] = report::labels(c.divergent_points);
  if (!c.band_split.empty()) {
    Json split = Json::array();
    for (const auto& b : c.band_split)
      if (!b.fresh.is_empty()) split.push_back(Json{{"m", b.m}, {"fresh", report::labels(b.fresh.support_labels())}});
    v["details"]["band_split"] = split;
    bool fragile = false;
    for (const auto& b : c.band_split) fragile = fragile || !b.fresh.fragile().empty();
    if (fragile) v["notes"].push_back(flags::support_fragile);
  }
  add_notes(v, c.notes);
}

class Evaluator {
public:
  Evaluator(const EvalOptions& o) : opts_(o) {}

  Evaluation run(const Program& p) {
    Evaluation ev;
    ev.report = report::skeleton("run");
    for (const auto& d : p.decls) {
      if (auto* m = std::get_if<ModelDecl>(&d.node)) {
        env_.model_name = m->name;
        env_.model = make_model(m->points);
        ev.report["model"] = report::model(m->name, env_.model);
      } else if (auto* e = std::get_if<ElemDecl>(&d.node)) {
        env_.elems.insert_or_assign(e->name, build_elem(env_.model, *e));
        env_.elem_complex[e->name] = e->is_complex();
      } else if (auto* s = std::get_if<SeqDecl>(&d.node)) {
        env_.seqs.insert_or_assign(s->name, build_seq(env_.model, *s));
      } else if (auto* s = std::get_if<SeriesDecl>(&d.node)) {
        env_.series.insert_or_assign(s->name, Series::closed(env_.seqs.at(s->seq)));
      } else if (auto* s = std::get_if<PSeriesDecl>(&d.node)) {
        env_.pseries.insert_or_assign(s->name, PowerSeries::closed(env_.seqs.at(s->seq), env_.elems.at(s->center)));
      } else if (auto* q = std::get_if<QueryDecl>(&d.node)) {
        Json v = verdict_json(q->verb, *q);
        std::optional<DominatorWitness> w;
        std::string wname;
        try {
          query(*q, v, w, wname);
        } catch (const std::exception& e) {
          v["status"] = "Error";
          v["passed"] = false;
          v["error"] = report::error(e);
        }
        if (w) {
          Json wj = report::witness(*w);
          wj["verdict"] = ev.report["verdicts"].size();
          wj["name"] = wname;
          ev.report["witnesses"].push_back(wj);
          if (w->heuristic) v["notes"].push_back(flags::heuristic);
        }
        report::collect_flags(ev.report, v);
        ev.all_passed = ev.all_passed && v["passed"].get<bool>();
        ev.report["verdicts"].push_back(v);
      }
    }
    return ev;
  }

private:
  void query(const QueryDecl& q, Json& v, std::optional<DominatorWitness>& w, std::string& wname) {
    const ToleranceConfig& tol = opts_.tol;
    const std::string& verb = q.verb;
    if (verb == "nthroot") {
      ConvergenceVerdict c = nth_root_test(env_.series.at(q.target), tol);
      fill_convergence(v, c);
      w = c.witness;
      wname = "remainder";
      v["checks"].push_back(report::Json{{"name", "per-band domination"}, {"passed", !c.has_note("band-domination-failed")}});
      v["passed"] = report::checks_passed(v);
    } else if (verb == "converge") {
      const Series& s = env_.series.at(q.target);
      ConvergenceVerdict c = converges_in_order(s, tol);
      fill_convergence(v, c);
      ConvergenceVerdict a = converges_absolutely(s, tol);
      v["details"]["absolute_status"] = to_string(a.status);
      w = c.witness;
      wname = "remainder";
      v["passed"] = true;
    } else if (verb == "geom") {
      const ComplexElement& a = env_.elems.at(q.target);
      try {
        GeometricResult g = env_.elem_complex.at(q.target) ? geometric_sum(a, tol) : geometric_sum(a.re, tol);
        v["status"] = to_string(VerdictStatus::ConvergesAbsolutely);
        v["values"]["sum"] = report::element(g.sum);
        v["values"]["partial"] = report::element(g.partial);
        v["details"] = Json{{"certified_m", g.certified_m}, {"partial_gap", g.partial_gap}};
        v["checks"].push_back(Json{{"name", "telescoping identity at m = 8"}, {"passed", g.telescoping_ok}});
        v["checks"].push_back(Json{{"name", "partial sum at certified m within eps_conv of the sum"},
                                   {"passed", g.partial_gap <= 2 * tol.eps_conv}});
      } catch (const NotStrictlyDominated& e) {
        v["status"] = to_string(VerdictStatus::Diverges);
        v["bands"]["divergent"] = report::labels(e.points());
        v["notes"].push_back("modulus-not-strictly-dominated");
      }
      v["passed"] = report::checks_passed(v);
    } else if (verb == "radius") {
      RadiusResult r = radius(env_.pseries.at(q.target), tol);
      v["status"] = to_string(r.kind);
      v["values"]["limsup_root"] = report::element(r.limsup_root);
      if (r.rho) v["values"]["rho"] = report::element(*r.rho);
      if (r.rho_on_band) v["values"]["rho_on_band"] = report::element(*r.rho_on_band);
      if (r.bounded_band) v["bands"]["bounded_band"] = report::labels(r.bounded_band->support_labels());
      if (r.unbounded_band) v["bands"]["unbounded_band"] = report::labels(r.unbounded_band->support_labels());
      for (const auto& c : r.checks) v["checks"].push_back(Json{{"name", c.name}, {"passed", c.passed}});
      v["passed"] = r.all_checks_passed();
    } else if (verb == "inomega") {
      const PowerSeries& p = env_.pseries.at(q.target);
      OmegaResult o = in_omega(p, env_.elems.at(q.args.at(0)).re, tol);
      v["status"] = o.member ? "Member" : "NotMember";
      Json reasons = Json::array();
      for (auto r : o.reasons) reasons.push_back(to_string(r));
      v["details"]["reasons"] = reasons;
      if (o.dominator) {
        w = o.dominator;
        wname = "uniform-dominator";
      }
      v["passed"] = true;
    } else if (verb == "abel") {
      abel(env_.pseries.at(q.target), v);
    } else if (verb == "axioms") {
      Json a = report::axioms_verdict(env_.model, opts_.axiom_samples, opts_.seed, tol);
      a["target"] = q.target;
      v = a;
    } else if (verb == "demo") {
      v = q.target == "cb01" ? report::cb01_verdict(opts_.cb01_grid, tol) : report::shrinking_disk_verdict(opts_.disk_n, tol);
    }
  }

  void abel(const PowerSeries& p, Json& v) {
    const ToleranceConfig& tol = opts_.tol;
    RadiusResult r = radius(p, tol);
    AbelVerdict a = [&] {
      if (r.kind == RadiusKind::Bounded && r.rho->identical(identity(p.model())))
        return abel_limit(p, ApproachFamily::radial(identity(p.model())), tol);
      return abel_rescaled(p, ApproachFamily::radial(r.rho ? *r.rho : identity(p.model())), tol);
    }();
    v["status"] = a.converged() ? "AbelLimit" : "Inconclusive";
    v["values"]["limit"] = report::element(a.limit);
    v["values"]["limit_error"] = report::element(a.limit_error);
    v["values"]["ratio_bound"] = report::element(a.ratio_bound);
    v["values"]["envelope_constant"] = report::element(a.envelope_constant);
    if (a.rho) v["values"]["rho"] = report::element(*a.rho);
    Json table = Json::array();
    for (const auto& s : a.samples) {
      double err = 0, env = 0;
      for (std::size_t i = 0; i < s.error.size(); ++i) {
        err = std::max(err, s.error[i].to_double());
        env = std::max(env, s.envelope[i].to_double());
      }
      table.push_back(Json{{"k", s.k}, {"max_error", err}, {"max_envelope", env}});
    }
    v["table"] = table;
    v["details"] = Json{{"sbp_residual", a.sbp_residual}, {"ratio_closed_form", a.ratio_closed_form}};
    v["checks"].push_back(Json{{"name", "errors strictly decreasing in k"}, {"passed", a.strictly_decreasing}});
    v["checks"].push_back(Json{{"name", "errors within the certified envelope"}, {"passed", a.within_envelope}});
    v["checks"].push_back(Json{{"name", "summation by parts at m = 16, k = 3"}, {"passed", a.sbp_ok}});
    add_notes(v, a.notes);
    v["passed"] = a.converged();
  }

  const EvalOptions& opts_;
  Env env_;
};

}  // namespace

Evaluation evaluate(const Program& program, const EvalOptions& opts) { return Evaluator(opts).run(program); }

}  // namespace vlat::dsl
