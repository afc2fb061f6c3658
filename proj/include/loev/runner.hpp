#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loev/principles.hpp"
#include "loev/scenario.hpp"

namespace loev {

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

// Exit codes: 0 = certified result, 1 = malformed input, 2 = hypothesis
// violated (with witness), 3 = budget exhausted before certification.
struct Report {
    json data;
    std::string human;
    int exit_code = 0;
};

struct RunOptions {
    std::optional<std::size_t> budget_steps;
    std::optional<double> budget_length;
    bool trace = false;
};

namespace runner_detail {

struct Lines {
    std::string text;
    void add(const std::string& line) {
        text += line;
        text += '\n';
    }
};

inline json orbit_json(const Orbit& orbit, const std::vector<std::string>& labels,
                       bool trace) {
    json o;
    o["steps"] = orbit.jumps.size();
    o["g_length"] = orbit.length();
    if (trace) {
        json pts = json::array();
        for (PointId p : orbit.points)
            pts.push_back(labels.empty() ? std::to_string(p) : labels[p]);
        o["points"] = std::move(pts);
        o["jumps"] = orbit.jumps;
    }
    return o;
}

inline void orbit_lines(Lines& out, const Orbit& orbit,
                        const std::vector<std::string>& labels, bool trace) {
    out.add("orbit: " + std::to_string(orbit.jumps.size()) + " steps, g-length " +
            format_double(orbit.length()));
    if (trace) {
        std::string path;
        for (std::size_t i = 0; i < orbit.points.size(); ++i) {
            if (i) path += " -> ";
            path += labels.empty() ? std::to_string(orbit.points[i])
                                   : labels[orbit.points[i]];
        }
        out.add("trace: " + path);
    }
}

inline json budget_json(const OrbitBudget& b) {
    return json{{"max_steps", b.max_steps}, {"length_threshold", b.length_threshold}};
}

inline OrbitBudget resolve_budget(const Scenario& sc, const RunOptions& opt,
                                  std::optional<OrbitBudget> suggested) {
    OrbitBudget b;
    if (suggested) b = *suggested;
    if (sc.budget_steps) b.max_steps = *sc.budget_steps;
    if (sc.budget_length) b.length_threshold = *sc.budget_length;
    if (opt.budget_steps) b.max_steps = *opt.budget_steps;
    if (opt.budget_length) b.length_threshold = *opt.budget_length;
    return b;
}

inline json classification_json(const DistanceClass& cls,
                                const std::vector<std::string>& labels) {
    json c;
    c["kind"] = to_string(cls.kind);
    json sym = json::array();
    for (const auto& v : cls.symmetry_violations)
        sym.push_back(json{{"i", labels[v.i]}, {"j", labels[v.j]}});
    c["symmetry_violations"] = std::move(sym);
    json tri = json::array();
    for (const auto& v : cls.triangle_violations)
        tri.push_back(json{{"i", labels[v.i]}, {"k", labels[v.k]}, {"j", labels[v.j]}});
    c["triangle_violations"] = std::move(tri);
    return c;
}

inline json residual_report_json(const ResidualReport& r) {
    json v;
    v["ok"] = r.ok;
    v["strict_mode"] = r.strict_mode;
    v["endpoint_in_domain"] = r.endpoint_in_domain;
    if (r.descent_residual) v["descent_residual"] = *r.descent_residual;
    v["domination_residual"] = scenario_detail::ext_json(r.domination_residual);
    return v;
}

} // namespace runner_detail

// ---------------------------------------------------------------------------
// run dispatch
// ---------------------------------------------------------------------------

inline Report run_scenario(const Scenario& sc, const RunOptions& opt = {}) {
    using namespace runner_detail;
    Report rep;
    Lines out;
    rep.data["scenario"] = sc.to_json();
    out.add("kind: " + std::string(to_string(sc.kind)));

    try {
        switch (sc.kind) {
            case ScenarioKind::CheckSpace: {
                auto space = FiniteSpace::create(sc.labels, sc.dist);
                rep.data["outcome"] = "classified";
                rep.data["classification"] = classification_json(space.cls(), sc.labels);
                out.add("points: " + std::to_string(sc.labels.size()));
                out.add("classification: " + std::string(to_string(space.cls().kind)));
                for (const auto& v : space.cls().symmetry_violations)
                    out.add("  asymmetric pair: (" + sc.labels[v.i] + ", " + sc.labels[v.j] +
                            ")");
                for (const auto& v : space.cls().triangle_violations)
                    out.add("  triangle violation: (" + sc.labels[v.i] + ", " +
                            sc.labels[v.k] + ", " + sc.labels[v.j] + ")");
                break;
            }

            case ScenarioKind::Orbit: {
                auto space = FiniteSpace::create(sc.labels, sc.dist);
                const OrbitBudget budget = resolve_budget(sc, opt, std::nullopt);
                SetValuedMap map = [m = sc.map](PointId x) { return m.at(x); };
                OrbitRun run = sc.idempotent_mode
                                   ? idempotent_orbit(sc.labels.size(), map,
                                                      table_fn(space.dist()), sc.x0, budget)
                                   : greedy_orbit(sc.labels.size(), map,
                                                  table_fn(space.dist()), sc.x0, budget);
                rep.data["budget"] = budget_json(budget);
                rep.data["orbit"] = orbit_json(run.orbit, sc.labels, opt.trace);
                const PointId end = run.orbit.points.back();
                rep.data["endpoint"] = sc.labels[end];
                switch (run.outcome.kind) {
                    case OutcomeKind::EmptyValue:
                        rep.data["outcome"] = "empty-value";
                        out.add("outcome: empty value at " + sc.labels[end]);
                        break;
                    case OutcomeKind::SingletonAbsorbed:
                        rep.data["outcome"] = "singleton-absorbed";
                        out.add("outcome: absorbed at " + sc.labels[end] +
                                " (only itself remains in value)");
                        break;
                    case OutcomeKind::BudgetExceeded:
                        rep.data["outcome"] = "budget-exceeded";
                        rep.data["budget_branch"] =
                            run.outcome.branch == BudgetBranch::Steps ? "steps" : "length";
                        out.add(std::string("outcome: budget exceeded (") +
                                (run.outcome.branch == BudgetBranch::Steps ? "steps"
                                                                           : "length") +
                                ")");
                        rep.exit_code = 3;
                        break;
                }
                orbit_lines(out, run.orbit, sc.labels, opt.trace);
                break;
            }

            case ScenarioKind::Ekeland: {
                auto f = ObjectiveTable::create(sc.objective);
                const OrbitBudget budget =
                    resolve_budget(sc, opt, suggested_budget(f, sc.x0, sc.eps));
                EkelandRun run = ekeland_premetric(f, sc.dist, sc.eps, sc.x0, budget);
                const PointId v = run.certificate.point;
                rep.data["budget"] = budget_json(budget);
                rep.data["outcome"] = "certified";
                rep.data["point"] = sc.labels[v];
                rep.data["objective_at_point"] =
                    scenario_detail::ext_json(f.at(v));
                rep.data["domination_residual"] =
                    scenario_detail::ext_json(run.certificate.domination_residual);
                rep.data["orbit"] = orbit_json(run.orbit, sc.labels, opt.trace);
                auto check = verify_certificate(f, sc.dist, sc.x0, run.certificate);
                rep.data["verification"] = residual_report_json(check);
                out.add("certified point: " + sc.labels[v]);
                out.add("objective there: " + f.at(v).str());
                out.add("domination residual: " +
                        run.certificate.domination_residual.str());
                orbit_lines(out, run.orbit, sc.labels, opt.trace);
                out.add(std::string("verification: ") + (check.ok ? "ok" : "FAILED"));
                break;
            }

            case ScenarioKind::EkelandMetric: {
                auto f = ObjectiveTable::create(sc.objective);
                const OrbitBudget budget =
                    resolve_budget(sc, opt, suggested_budget(f, sc.x0, sc.lambda));
                EkelandRun run = ekeland_metric(f, sc.dist, sc.lambda, sc.x0, budget);
                const PointId v = run.certificate.point;
                rep.data["budget"] = budget_json(budget);
                rep.data["outcome"] = "certified";
                rep.data["point"] = sc.labels[v];
                rep.data["objective_at_point"] = scenario_detail::ext_json(f.at(v));
                rep.data["descent_residual"] = *run.certificate.descent_residual;
                rep.data["domination_residual"] =
                    scenario_detail::ext_json(run.certificate.domination_residual);
                rep.data["orbit"] = orbit_json(run.orbit, sc.labels, opt.trace);
                auto check = verify_certificate(f, sc.dist, sc.x0, run.certificate);
                rep.data["verification"] = residual_report_json(check);
                out.add("certified point: " + sc.labels[v]);
                out.add("objective there: " + f.at(v).str());
                out.add("descent residual: " +
                        format_double(*run.certificate.descent_residual));
                out.add("domination residual: " +
                        run.certificate.domination_residual.str());
                orbit_lines(out, run.orbit, sc.labels, opt.trace);
                out.add(std::string("verification: ") + (check.ok ? "ok" : "FAILED"));
                break;
            }

            case ScenarioKind::Caristi: {
                auto f = ObjectiveTable::create(sc.objective);
                const OrbitBudget budget =
                    resolve_budget(sc, opt, suggested_budget(f, sc.x0, 1.0));
                CaristiInstance inst{[m = sc.map](PointId x) { return m.at(x); }, f,
                                     sc.dist};
                CaristiRun run = caristi_fixed_point(inst, sc.x0, budget);
                const PointId v = run.fixed_point;
                rep.data["budget"] = budget_json(budget);
                rep.data["outcome"] = "certified";
                rep.data["fixed_point"] = sc.labels[v];
                rep.data["objective_at_point"] = scenario_detail::ext_json(f.at(v));
                bool contains = false;
                for (PointId y : sc.map.at(v)) contains = contains || y == v;
                rep.data["fixed_point_in_map"] = contains;
                rep.data["orbit"] = orbit_json(run.orbit, sc.labels, opt.trace);
                out.add("fixed point: " + sc.labels[v]);
                out.add(std::string("membership recheck: ") + (contains ? "ok" : "FAILED"));
                orbit_lines(out, run.orbit, sc.labels, opt.trace);
                break;
            }

            case ScenarioKind::Takahashi: {
                auto f = ObjectiveTable::create(sc.objective);
                const OrbitBudget budget =
                    resolve_budget(sc, opt, suggested_budget(f, sc.x0, 1.0));
                TakahashiResult res = takahashi_minimize(f, sc.dist, sc.x0, budget);
                rep.data["budget"] = budget_json(budget);
                rep.data["orbit"] = orbit_json(res.orbit, sc.labels, opt.trace);
                rep.data["point"] = sc.labels[res.v];
                rep.data["objective_at_point"] = scenario_detail::ext_json(f.at(res.v));
                if (res.is_min) {
                    rep.data["outcome"] = "certified";
                    rep.data["is_minimum"] = true;
                    out.add("minimizer: " + sc.labels[res.v]);
                    out.add("objective there: " + f.at(res.v).str());
                } else {
                    rep.data["outcome"] = "hypothesis-violated";
                    rep.data["is_minimum"] = false;
                    rep.data["witness"] = sc.labels[res.v];
                    rep.exit_code = 2;
                    out.add("no minimizer certified");
                    out.add("witness: " + sc.labels[res.v] +
                            " is not a minimum, yet no point improves on it by the "
                            "descent condition");
                }
                orbit_lines(out, res.orbit, sc.labels, opt.trace);
                break;
            }

            case ScenarioKind::OettliThera: {
                const OrbitBudget budget = resolve_budget(sc, opt, std::nullopt);
                OettliInstance inst;
                inst.p = sc.p;
                inst.d = sc.dist;
                inst.x0 = sc.x0;
                inst.psi.assign(sc.labels.size(), 0);
                for (PointId i : sc.psi) inst.psi[i] = 1;
                OettliResult res = oettli_thera(inst, budget);
                rep.data["budget"] = budget_json(budget);
                rep.data["outcome"] = "certified";
                rep.data["point"] = sc.labels[res.point];
                rep.data["in_a"] = res.in_a;
                rep.data["in_psi"] = res.in_psi;
                json a = json::array();
                for (PointId i : res.a) a.push_back(sc.labels[i]);
                rep.data["a_set"] = std::move(a);
                rep.data["orbit"] = orbit_json(res.orbit, sc.labels, opt.trace);
                out.add("certified point: " + sc.labels[res.point]);
                std::string a_line = "a-set:";
                for (PointId i : res.a) a_line += " " + sc.labels[i];
                out.add(a_line);
                orbit_lines(out, res.orbit, sc.labels, opt.trace);
                break;
            }

            case ScenarioKind::FabianPreiss: {
                const OrbitBudget budget = resolve_budget(sc, opt, std::nullopt);
                FabianPreissInstance inst;
                inst.d = sc.dist;
                inst.pseudometrics = sc.pseudometrics;
                for (const auto& vals : sc.multi_objectives)
                    inst.objectives.push_back(ObjectiveTable::create(vals));
                inst.i0 = sc.i0;
                inst.x0 = sc.x0;
                FabianResult res = fabian_preiss(inst, budget);
                rep.data["budget"] = budget_json(budget);
                rep.data["outcome"] = "certified";
                rep.data["point"] = sc.labels[res.point];
                rep.data["anchor_objective_at_point"] =
                    scenario_detail::ext_json(res.f_i0_value);
                json phi = json::array();
                for (PointId i : res.phi) phi.push_back(sc.labels[i]);
                rep.data["phi_set"] = std::move(phi);
                rep.data["orbit"] = orbit_json(res.orbit, sc.labels, opt.trace);
                const bool nonpos =
                    res.f_i0_value.is_finite() && res.f_i0_value.raw() <= 0.0;
                out.add("certified point: " + sc.labels[res.point]);
                out.add("anchor objective there: " + res.f_i0_value.str() +
                        (nonpos ? " (nonpositive)" : ""));
                orbit_lines(out, res.orbit, sc.labels, opt.trace);
                break;
            }

            case ScenarioKind::Counterexample: {
                SequenceSpec<double> seq{sc.sequence.fn(), sc.horizon};
                auto g = [](double x, double y) { return std::abs(x - y); };
                CounterexampleKit<double> kit = build_counterexample(seq, g);
                rep.data["prefix_size"] = kit.size();
                rep.data["tail_truncated"] = kit.tail_truncated;
                rep.data["possible_constant_subsequence"] =
                    kit.possible_constant_subsequence;
                rep.data["f"] = kit.f;
                rep.data["jumps"] = kit.jumps;
                auto caristi = verify_caristi_unfixed(kit);
                auto ekeland = verify_ekeland_fails(kit, sc.eps);
                const bool caristi_ok =
                    caristi.no_fixed_point && caristi.caristi_condition;
                rep.data["caristi_check"] =
                    json{{"no_fixed_point", caristi.no_fixed_point},
                         {"descent_condition", caristi.caristi_condition},
                         {"transitions_checked", caristi.transitions_checked},
                         {"boundary_note", caristi.boundary_note}};
                rep.data["ekeland_check"] = json{{"eps", sc.eps},
                                                 {"checked", ekeland.checked},
                                                 {"confirmed", ekeland.confirmed},
                                                 {"all_confirmed", ekeland.all_confirmed},
                                                 {"boundary_note", ekeland.boundary_note}};
                out.add("distinct prefix points: " + std::to_string(kit.size()));
                if (kit.possible_constant_subsequence)
                    out.add("note: the tail of the horizon repeats a single point");
                out.add("map moves every prefix point while the potential descends: " +
                        std::string(caristi_ok
                                        ? "confirmed (" +
                                              std::to_string(caristi.transitions_checked) +
                                              " transitions)"
                                        : "FAILED"));
                out.add("prefix points where the improvement step still fires (eps " +
                        format_double(sc.eps) + "): " + std::to_string(ekeland.confirmed) +
                        " of " + std::to_string(ekeland.checked));
                out.add("boundary: " + ekeland.boundary_note);
                if (caristi_ok) {
                    rep.data["outcome"] = "confirmed";
                } else {
                    rep.data["outcome"] = "hypothesis-violated";
                    if (caristi.first_failure)
                        rep.data["witness"] =
                            "transition " + std::to_string(*caristi.first_failure);
                    rep.exit_code = 2;
                }
                break;
            }

            case ScenarioKind::GdeltaMinimize: {
                GDeltaDomain dom = sc.gdelta.domain();
                OrbitBudget budget{100000, 1e9};
                {
                    // mirror the finite solvers: scale the default length budget
                    // by the initial objective gap when every value is finite
                    auto f = ObjectiveTable::create(sc.grid_objective);
                    if (f.at(sc.x0_index).is_finite())
                        budget = suggested_budget(f, sc.x0_index, sc.eps);
                }
                budget = resolve_budget(sc, opt, budget);
                auto oracle = [&sc](double x) -> ExtReal {
                    for (std::size_t i = 0; i < sc.grid.size(); ++i)
                        if (sc.grid[i] == x) return sc.grid_objective[i];
                    throw InputError("objective oracle: unknown grid point");
                };
                PerturbedMinimum res =
                    perturbed_minimize(dom, sc.grid, oracle, sc.eps, budget, sc.x0_index);
                rep.data["budget"] = budget_json(budget);
                rep.data["outcome"] = "certified";
                rep.data["point"] = res.point;
                rep.data["point_index"] = res.index;
                rep.data["objective_at_point"] =
                    scenario_detail::ext_json(sc.grid_objective[res.index]);
                rep.data["domination_residual"] =
                    scenario_detail::ext_json(res.certificate.domination_residual);
                rep.data["truncation_bound"] =
                    std::ldexp(1.0, -static_cast<int>(dom.depth));
                std::vector<std::string> grid_labels;
                for (double x : sc.grid) grid_labels.push_back(format_double(x));
                rep.data["orbit"] = orbit_json(res.orbit, grid_labels, opt.trace);
                out.add("certified grid point: " + format_double(res.point));
                out.add("objective there: " + sc.grid_objective[res.index].str());
                out.add("domination residual: " +
                        res.certificate.domination_residual.str());
                orbit_lines(out, res.orbit, grid_labels, opt.trace);
                break;
            }

            case ScenarioKind::SeriesCheck: {
                SeriesCheck res =
                    series_equivalence_check(sc.sequence.fn(), sc.horizon, sc.threshold);
                const bool raw_ex = res.raw_verdict == LengthVerdict::ExceededThreshold;
                const bool tr_ex =
                    res.transformed_verdict == LengthVerdict::ExceededThreshold;
                rep.data["outcome"] = "computed";
                rep.data["raw_sum"] = res.sum_raw;
                rep.data["transformed_sum"] = res.sum_transformed;
                rep.data["raw_verdict"] = to_string(res.raw_verdict);
                rep.data["transformed_verdict"] = to_string(res.transformed_verdict);
                rep.data["agreement"] = raw_ex == tr_ex;
                out.add("raw partial sum: " + format_double(res.sum_raw) +
                        (raw_ex ? " (exceeds threshold)" : " (below threshold)"));
                out.add("transformed partial sum: " + format_double(res.sum_transformed) +
                        (tr_ex ? " (exceeds threshold)" : " (below threshold)"));
                out.add(std::string("verdicts agree at this horizon: ") +
                        (raw_ex == tr_ex ? "yes" : "no"));
                break;
            }
        }
    } catch (const InputError& e) {
        rep.data["outcome"] = "error";
        rep.data["error"] = json{{"category", "input"}, {"message", e.what()}};
        rep.exit_code = 1;
        out.add(std::string("error (input): ") + e.what());
    } catch (const HypothesisError& e) {
        rep.data["outcome"] = "error";
        rep.data["error"] = json{{"category", "hypothesis"},
                                 {"message", e.what()},
                                 {"check", e.check()},
                                 {"witness", e.witness()}};
        rep.exit_code = 2;
        out.add(std::string("error (hypothesis): ") + e.check());
        out.add("  witness: " + e.witness());
    } catch (const BudgetError& e) {
        rep.data["outcome"] = "error";
        rep.data["error"] = json{{"category", "budget"},
                                 {"message", e.what()},
                                 {"steps", e.steps()},
                                 {"accumulated_length", e.accumulated_length()}};
        rep.exit_code = 3;
        out.add(std::string("error (budget): ") + e.what());
        out.add("  steps taken: " + std::to_string(e.steps()) + ", accumulated length: " +
                format_double(e.accumulated_length()));
    }

    rep.human = out.text;
    return rep;
}

// ---------------------------------------------------------------------------
// validate dispatch: hypothesis findings without solving
// ---------------------------------------------------------------------------

struct Finding {
    std::string check;
    bool ok = true;
    std::string detail;
};

inline Report validate_scenario(const Scenario& sc) {
    using namespace runner_detail;
    Report rep;
    Lines out;
    rep.data["scenario"] = sc.to_json();
    out.add("kind: " + std::string(to_string(sc.kind)));
    std::vector<Finding> findings;

    try {
        std::optional<FiniteSpace> space;
        if (sc.has_space()) {
            space = FiniteSpace::create(sc.labels, sc.dist);
            findings.push_back({"distance table well formed", true,
                                std::string("classifies as ") +
                                    to_string(space->cls().kind)});
        }
        switch (sc.kind) {
            case ScenarioKind::CheckSpace:
            case ScenarioKind::Orbit: break;
            case ScenarioKind::Ekeland: {
                auto f = ObjectiveTable::create(sc.objective);
                findings.push_back({"objective proper", true,
                                    "minimum value " + format_double(f.min_value())});
                findings.push_back({"eps positive", sc.eps > 0.0, format_double(sc.eps)});
                break;
            }
            case ScenarioKind::EkelandMetric: {
                auto f = ObjectiveTable::create(sc.objective);
                findings.push_back({"objective proper", true,
                                    "minimum value " + format_double(f.min_value())});
                findings.push_back({"lambda positive", sc.lambda > 0.0,
                                    format_double(sc.lambda)});
                const bool metric = space->cls().kind == DistanceKind::Metric;
                findings.push_back({"metric distance required", metric,
                                    std::string("classifies as ") +
                                        to_string(space->cls().kind)});
                break;
            }
            case ScenarioKind::Caristi: {
                CaristiInstance inst{[m = sc.map](PointId x) { return m.at(x); },
                                     ObjectiveTable::create(sc.objective), sc.dist};
                auto ck = check_caristi_condition(inst);
                std::string detail;
                if (ck.ok)
                    detail = std::to_string(ck.checked) + " points checked";
                else if (ck.empty_value)
                    detail = "the map is empty at " + sc.labels[ck.witness];
                else
                    detail = "no descent step out of " + sc.labels[ck.witness];
                findings.push_back({"caristi condition", ck.ok, detail});
                break;
            }
            case ScenarioKind::Takahashi: {
                auto f = ObjectiveTable::create(sc.objective);
                findings.push_back({"objective proper", true,
                                    "minimum value " + format_double(f.min_value())});
                break;
            }
            case ScenarioKind::OettliThera: {
                OettliInstance inst;
                inst.p = sc.p;
                inst.d = sc.dist;
                inst.x0 = sc.x0;
                inst.psi.assign(sc.labels.size(), 0);
                for (PointId i : sc.psi) inst.psi[i] = 1;
                auto st = check_oettli_structure(inst);
                findings.push_back({"oettli p diagonal", st.diagonal_ok,
                                    st.diagonal_ok
                                        ? ""
                                        : "nonzero at " + sc.labels[st.diag_witness]});
                findings.push_back({"oettli p triangle", st.triangle_ok,
                                    st.triangle_ok ? ""
                                                   : "violated at (" + sc.labels[st.w0] +
                                                         ", " + sc.labels[st.w1] + ", " +
                                                         sc.labels[st.w2] + ")"});
                findings.push_back({"metric distance required", st.d_metric,
                                    std::string("classifies as ") +
                                        to_string(st.d_class.kind)});
                if (st.diagonal_ok && st.triangle_ok && st.d_metric) {
                    auto esc = check_oettli_escape(inst);
                    std::string a_line;
                    for (PointId i : esc.a) a_line += (a_line.empty() ? "" : ", ") +
                                                      sc.labels[i];
                    findings.push_back({"oettli escape condition", esc.ok,
                                        esc.ok ? "a-set: " + a_line
                                               : "no escape step out of " +
                                                     sc.labels[esc.witness]});
                }
                break;
            }
            case ScenarioKind::FabianPreiss: {
                FabianPreissInstance inst;
                inst.d = sc.dist;
                inst.pseudometrics = sc.pseudometrics;
                for (const auto& vals : sc.multi_objectives)
                    inst.objectives.push_back(ObjectiveTable::create(vals));
                inst.i0 = sc.i0;
                inst.x0 = sc.x0;
                auto hyp = check_fabian_hypothesis(inst);
                findings.push_back({"fabian-preiss joint step condition", hyp.ok,
                                    hyp.ok ? std::to_string(hyp.phi.size()) +
                                                 " points jointly dominated from x0"
                                           : "no joint step out of " +
                                                 sc.labels[hyp.witness]});
                break;
            }
            case ScenarioKind::Counterexample: {
                SequenceSpec<double> seq{sc.sequence.fn(), sc.horizon};
                auto dd = dedupe_sequence(seq);
                findings.push_back({"sequence yields distinct prefix", dd.points.size() >= 2,
                                    std::to_string(dd.points.size()) + " distinct points"});
                break;
            }
            case ScenarioKind::GdeltaMinimize: {
                GDeltaDomain dom = sc.gdelta.domain();
                dom.validate();
                std::string off;
                for (std::size_t i = 0; i < sc.grid.size(); ++i)
                    if (!in_domain(dom, sc.grid[i]))
                        off += (off.empty() ? "" : ", ") + format_double(sc.grid[i]);
                findings.push_back({"grid avoids removed sets", off.empty(),
                                    off.empty() ? std::to_string(sc.grid.size()) +
                                                      " grid points"
                                                : "on removed set: " + off});
                break;
            }
            case ScenarioKind::SeriesCheck: {
                findings.push_back({"threshold positive", sc.threshold > 0.0,
                                    format_double(sc.threshold)});
                break;
            }
        }
    } catch (const InputError& e) {
        rep.data["outcome"] = "error";
        rep.data["error"] = json{{"category", "input"}, {"message", e.what()}};
        rep.exit_code = 1;
        out.add(std::string("error (input): ") + e.what());
        rep.human = out.text;
        return rep;
    } catch (const HypothesisError& e) {
        findings.push_back({e.check(), false, e.witness()});
    }

    bool all_ok = true;
    json jf = json::array();
    for (const auto& f : findings) {
        all_ok = all_ok && f.ok;
        jf.push_back(json{{"check", f.check}, {"ok", f.ok}, {"detail", f.detail}});
        out.add(std::string(f.ok ? "  ok: " : "  violated: ") + f.check +
                (f.detail.empty() ? "" : " — " + f.detail));
    }
    rep.data["findings"] = std::move(jf);
    rep.data["outcome"] = all_ok ? "hypotheses-hold" : "hypotheses-violated";
    rep.exit_code = all_ok ? 0 : 2;
    out.add(all_ok ? "all hypothesis checks passed" : "hypothesis checks failed");
    rep.human = out.text;
    return rep;
}

} // namespace loev
