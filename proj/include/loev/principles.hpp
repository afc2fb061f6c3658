#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loev/distance.hpp"
#include "loev/errors.hpp"
#include "loev/ext_real.hpp"
#include "loev/numfmt.hpp"
#include "loev/orbit.hpp"

namespace loev {

// ---------------------------------------------------------------------------
// Budget sizing
// ---------------------------------------------------------------------------

// Telescoping bound: an orbit driven by a descent condition with scale c
// accumulates distance at most (f(x0) - min f) / c; twice that plus one is a
// comfortable default threshold. Callers may override.
inline OrbitBudget suggested_budget(const ObjectiveTable& f, PointId x0, double scale) {
    if (x0 >= f.size()) throw InputError("budget: x0 out of range");
    if (!(scale > 0.0)) throw InputError("budget: scale must be positive");
    OrbitBudget b;
    b.length_threshold = 2.0 * (f.at(x0).finite_value() - f.min_value()) / scale + 1.0;
    return b;
}

// ---------------------------------------------------------------------------
// Ekeland, premetric form
// ---------------------------------------------------------------------------

struct EkelandCertificate {
    PointId point = 0;
    double eps_or_lambda = 0.0;
    // Metric mode only: (f(x0) - f(point)) - lambda * d(point, x0), >= 0.
    std::optional<double> descent_residual;
    // min over x != point of f(x) + c * g(x, point) - f(point); +inf when the
    // space is a singleton and the minimum is over an empty set.
    ExtReal domination_residual;
};

struct EkelandRun {
    EkelandCertificate certificate;
    Orbit orbit;
};

namespace detail {

inline void check_start(const ObjectiveTable& f, PointId x0, const char* who) {
    if (x0 >= f.size())
        throw InputError(std::string(who) + ": x0 out of range");
    if (!f.at(x0).is_finite())
        throw InputError(std::string(who) + ": x0 must have a finite objective value");
}

inline ExtReal domination_minimum(const ObjectiveTable& f, const DistFn& g, double c,
                                  PointId v) {
    const double fv = f.at(v).finite_value();
    ExtReal best = ExtReal::infinity();
    for (PointId x = 0; x < f.size(); ++x) {
        if (x == v) continue;
        const ExtReal r = (f.at(x) + c * g(x, v)) - fv;
        if (r < best) best = r;
    }
    return best;
}

} // namespace detail

// Strict-descent solver over a premetric: move while some y satisfies
// f(y) + eps*g(y, x) < f(x); the stopped point dominates every other point.
inline EkelandRun ekeland_premetric(const ObjectiveTable& f, const DistFn& g, double eps,
                                    PointId x0, const OrbitBudget& budget) {
    if (!(eps > 0.0)) throw InputError("ekeland: eps must be positive");
    detail::check_start(f, x0, "ekeland");
    const std::size_t n = f.size();
    SetValuedMap s = [&f, &g, eps, n](PointId x) {
        std::vector<PointId> out;
        for (PointId y = 0; y < n; ++y)
            if (f.at(y) + eps * g(y, x) < f.at(x)) out.push_back(y);
        return out;
    };
    auto run = greedy_orbit(n, s, g, x0, budget);
    if (run.outcome.kind == OutcomeKind::BudgetExceeded)
        throw BudgetError(run.outcome.steps_taken, run.outcome.accumulated_length);
    EkelandCertificate cert;
    cert.point = run.outcome.endpoint;
    cert.eps_or_lambda = eps;
    cert.domination_residual = detail::domination_minimum(f, g, eps, cert.point);
    return {cert, std::move(run.orbit)};
}

inline EkelandRun ekeland_premetric(const ObjectiveTable& f, const DistanceTable& g, double eps,
                                    PointId x0, const OrbitBudget& budget) {
    if (f.size() != g.size())
        throw InputError("ekeland: objective and distance table sizes differ");
    g.validate();
    return ekeland_premetric(f, table_fn(g), eps, x0, budget);
}

// ---------------------------------------------------------------------------
// Ekeland, metric form
// ---------------------------------------------------------------------------

namespace detail {

inline std::string class_witness(const DistanceClass& c) {
    if (!c.symmetry_violations.empty()) {
        const auto& v = c.symmetry_violations.front();
        return "symmetry fails at (" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    }
    if (!c.triangle_violations.empty()) {
        const auto& v = c.triangle_violations.front();
        return "triangle inequality fails at (" + std::to_string(v.i) + "," +
               std::to_string(v.k) + "," + std::to_string(v.j) + ")";
    }
    return "ok";
}

} // namespace detail

// Non-strict descent over a true metric: S(x) = {y : f(y) + lambda*d(y,x) <= f(x)}
// absorbs its own point and is idempotent by the triangle inequality, so the
// orbit runs in absorbed mode. The certificate carries both the descent
// residual against x0 and the strict domination minimum.
inline EkelandRun ekeland_metric(const ObjectiveTable& f, const DistanceTable& d, double lambda,
                                 PointId x0, const OrbitBudget& budget) {
    if (!(lambda > 0.0)) throw InputError("ekeland-metric: lambda must be positive");
    if (f.size() != d.size())
        throw InputError("ekeland-metric: objective and distance table sizes differ");
    detail::check_start(f, x0, "ekeland-metric");
    const DistanceClass cls = classify_distance(d);
    if (cls.kind != DistanceKind::Metric)
        throw HypothesisError("metric distance required",
                              std::string("table classifies as ") + to_string(cls.kind) + ", " +
                                  detail::class_witness(cls));
    const std::size_t n = d.size();
    SetValuedMap s = [&f, &d, lambda, n](PointId x) {
        std::vector<PointId> out;
        for (PointId y = 0; y < n; ++y)
            if (f.at(y) + lambda * d.at(y, x) <= f.at(x)) out.push_back(y);
        return out;
    };
    auto run = idempotent_orbit(n, s, table_fn(d), x0, budget);
    if (run.outcome.kind == OutcomeKind::BudgetExceeded)
        throw BudgetError(run.outcome.steps_taken, run.outcome.accumulated_length);
    const PointId v = run.outcome.endpoint;
    EkelandCertificate cert;
    cert.point = v;
    cert.eps_or_lambda = lambda;
    cert.descent_residual =
        (f.at(x0).finite_value() - f.at(v).finite_value()) - lambda * d.at(v, x0);
    cert.domination_residual = detail::domination_minimum(f, table_fn(d), lambda, v);
    return {cert, std::move(run.orbit)};
}

// ---------------------------------------------------------------------------
// Independent certificate verification
// ---------------------------------------------------------------------------

struct ResidualReport {
    bool ok = true;
    bool strict_mode = false;        // metric-style certificate: residuals must be > 0
    bool endpoint_in_domain = true;  // certificate point has a finite objective value
    std::optional<double> descent_residual;
    ExtReal domination_residual;
    std::vector<std::pair<PointId, ExtReal>> per_point; // residual for each x != point
};

// Recomputes every residual by plain enumeration, independent of how the
// certificate was produced, and flags any residual with the wrong sign.
inline ResidualReport verify_certificate(const ObjectiveTable& f, const DistFn& g, PointId x0,
                                         const EkelandCertificate& cert) {
    if (cert.point >= f.size()) throw InputError("verify: certificate point out of range");
    if (x0 >= f.size()) throw InputError("verify: x0 out of range");
    ResidualReport rep;
    rep.strict_mode = cert.descent_residual.has_value();
    rep.domination_residual = ExtReal::infinity();
    const PointId v = cert.point;
    if (!f.at(v).is_finite()) {
        rep.endpoint_in_domain = false;
        rep.ok = false;
        return rep;
    }
    const double fv = f.at(v).finite_value();
    for (PointId x = 0; x < f.size(); ++x) {
        if (x == v) continue;
        const ExtReal r = (f.at(x) + cert.eps_or_lambda * g(x, v)) - fv;
        rep.per_point.emplace_back(x, r);
        if (r < rep.domination_residual) rep.domination_residual = r;
        const bool bad = rep.strict_mode ? !(r > ExtReal(0.0)) : (r < ExtReal(0.0));
        if (bad) rep.ok = false;
    }
    if (rep.strict_mode) {
        if (!f.at(x0).is_finite()) {
            rep.ok = false;
        } else {
            rep.descent_residual =
                (f.at(x0).finite_value() - fv) - cert.eps_or_lambda * g(v, x0);
            if (!(*rep.descent_residual >= 0.0)) rep.ok = false;
        }
    }
    return rep;
}

inline ResidualReport verify_certificate(const ObjectiveTable& f, const DistanceTable& g,
                                         PointId x0, const EkelandCertificate& cert) {
    return verify_certificate(f, table_fn(g), x0, cert);
}

// ---------------------------------------------------------------------------
// Caristi
// ---------------------------------------------------------------------------

struct CaristiInstance {
    SetValuedMap t;   // the map whose fixed point is sought
    ObjectiveTable f;
    DistanceTable g;
};

struct CaristiConditionReport {
    bool ok = true;
    PointId witness = 0;      // point with no descent step in T
    bool empty_value = false; // T(witness) was empty
    std::size_t checked = 0;
};

// Every point must offer some y in T(x) with f(y) + g(y, x) <= f(x).
inline CaristiConditionReport check_caristi_condition(const CaristiInstance& inst) {
    CaristiConditionReport rep;
    const std::size_t n = inst.f.size();
    rep.checked = n;
    for (PointId x = 0; x < n; ++x) {
        const auto tx = inst.t(x);
        for (PointId y : tx)
            if (y >= n) throw InputError("caristi: map returned out-of-range point index " +
                                         std::to_string(y));
        if (tx.empty()) return {false, x, true, n};
        const bool found = std::any_of(tx.begin(), tx.end(), [&](PointId y) {
            return inst.f.at(y) + inst.g.at(y, x) <= inst.f.at(x);
        });
        if (!found) return {false, x, false, n};
    }
    return rep;
}

struct CaristiRun {
    PointId fixed_point = 0;
    Orbit orbit;
};

// Checks the descent condition exhaustively, then follows the halved-jump
// descent sets until one is empty; that endpoint is a fixed point of T.
inline CaristiRun caristi_fixed_point(const CaristiInstance& inst, PointId x0,
                                      const OrbitBudget& budget) {
    if (inst.f.size() != inst.g.size())
        throw InputError("caristi: objective and distance table sizes differ");
    inst.g.validate();
    if (x0 >= inst.f.size()) throw InputError("caristi: x0 out of range");
    const auto cond = check_caristi_condition(inst);
    if (!cond.ok)
        throw HypothesisError("caristi condition",
                              cond.empty_value
                                  ? "T is empty at point index " + std::to_string(cond.witness)
                                  : "no descent step in T at point index " +
                                        std::to_string(cond.witness));
    const std::size_t n = inst.f.size();
    SetValuedMap s = [&inst, n](PointId x) {
        std::vector<PointId> out;
        for (PointId y = 0; y < n; ++y)
            if (inst.f.at(y) + 0.5 * inst.g.at(y, x) < inst.f.at(x)) out.push_back(y);
        return out;
    };
    auto run = greedy_orbit(n, s, table_fn(inst.g), x0, budget);
    if (run.outcome.kind == OutcomeKind::BudgetExceeded)
        throw BudgetError(run.outcome.steps_taken, run.outcome.accumulated_length);
    const PointId v = run.outcome.endpoint;
    const auto tv = inst.t(v);
    if (std::find(tv.begin(), tv.end(), v) == tv.end())
        throw std::logic_error("caristi: endpoint is not fixed although the descent condition held");
    return {v, std::move(run.orbit)};
}

// ---------------------------------------------------------------------------
// Takahashi
// ---------------------------------------------------------------------------

struct TakahashiResult {
    PointId v = 0;
    bool is_min = false;
    // When v is not a minimizer: v itself witnesses that the minimization
    // hypothesis fails (no other point descends to it), confirmed exhaustively.
    std::optional<PointId> condition_witness_failure;
    Orbit orbit;
};

// Diagnosis operation: follow the same halved-jump descent sets; if the
// endpoint is not a global minimizer, the hypothesis provably fails there.
inline TakahashiResult takahashi_minimize(const ObjectiveTable& f, const DistanceTable& g,
                                          PointId x0, const OrbitBudget& budget) {
    if (f.size() != g.size())
        throw InputError("takahashi: objective and distance table sizes differ");
    g.validate();
    if (x0 >= f.size()) throw InputError("takahashi: x0 out of range");
    const std::size_t n = f.size();
    SetValuedMap s = [&f, &g, n](PointId x) {
        std::vector<PointId> out;
        for (PointId y = 0; y < n; ++y)
            if (f.at(y) + 0.5 * g.at(y, x) < f.at(x)) out.push_back(y);
        return out;
    };
    auto run = greedy_orbit(n, s, table_fn(g), x0, budget);
    if (run.outcome.kind == OutcomeKind::BudgetExceeded)
        throw BudgetError(run.outcome.steps_taken, run.outcome.accumulated_length);
    TakahashiResult res;
    res.v = run.outcome.endpoint;
    res.orbit = std::move(run.orbit);
    res.is_min = f.at(res.v) == ExtReal(f.min_value());
    if (!res.is_min) {
        for (PointId y = 0; y < n; ++y) {
            if (y == res.v) continue;
            if (f.at(y) + g.at(y, res.v) <= f.at(res.v))
                throw std::logic_error("takahashi: descent step exists at a stopped point");
        }
        res.condition_witness_failure = res.v;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Oettli–Théra
// ---------------------------------------------------------------------------

struct OettliInstance {
    std::vector<std::vector<ExtReal>> p; // n x n, zero diagonal, triangle, possibly negative/inf
    DistanceTable d;                     // metric
    PointId x0 = 0;
    std::vector<char> psi;               // target-set membership flags, size n
};

struct OettliStructureReport {
    bool diagonal_ok = true;
    bool triangle_ok = true;
    bool d_metric = true;
    PointId w0 = 0, w1 = 0, w2 = 0; // first triangle witness (x, y, z)
    PointId diag_witness = 0;
    DistanceClass d_class;
};

inline OettliStructureReport check_oettli_structure(const OettliInstance& inst) {
    const std::size_t n = inst.d.size();
    if (inst.p.size() != n) throw InputError("oettli: p table size differs from the space");
    for (const auto& row : inst.p)
        if (row.size() != n) throw InputError("oettli: p table is not square");
    if (inst.psi.size() != n) throw InputError("oettli: psi flag list size differs from the space");
    if (inst.x0 >= n) throw InputError("oettli: x0 out of range");
    OettliStructureReport rep;
    rep.d_class = classify_distance(inst.d);
    rep.d_metric = rep.d_class.kind == DistanceKind::Metric;
    for (PointId x = 0; x < n && rep.diagonal_ok; ++x)
        if (!(inst.p[x][x] == ExtReal(0.0))) {
            rep.diagonal_ok = false;
            rep.diag_witness = x;
        }
    for (PointId x = 0; x < n && rep.triangle_ok; ++x)
        for (PointId y = 0; y < n && rep.triangle_ok; ++y)
            for (PointId z = 0; z < n; ++z)
                if (inst.p[x][z] > inst.p[x][y] + inst.p[y][z]) {
                    rep.triangle_ok = false;
                    rep.w0 = x;
                    rep.w1 = y;
                    rep.w2 = z;
                    break;
                }
    return rep;
}

struct OettliEscapeReport {
    bool ok = true;
    PointId witness = 0;            // point of A \ Psi with no escape step
    std::vector<PointId> a;         // the reachable-by-one-inequality set
};

inline std::vector<PointId> oettli_a_set(const OettliInstance& inst) {
    std::vector<PointId> a;
    for (PointId x = 0; x < inst.d.size(); ++x)
        if (inst.p[inst.x0][x] + inst.d.at(inst.x0, x) <= ExtReal(0.0)) a.push_back(x);
    return a;
}

// Every point of A outside Psi must admit an escape step y != x with
// p(x, y) + d(x, y) <= 0.
inline OettliEscapeReport check_oettli_escape(const OettliInstance& inst) {
    OettliEscapeReport rep;
    rep.a = oettli_a_set(inst);
    const std::size_t n = inst.d.size();
    for (PointId x : rep.a) {
        if (inst.psi[x]) continue;
        bool found = false;
        for (PointId y = 0; y < n && !found; ++y)
            if (y != x && inst.p[x][y] + inst.d.at(x, y) <= ExtReal(0.0)) found = true;
        if (!found) {
            rep.ok = false;
            rep.witness = x;
            return rep;
        }
    }
    return rep;
}

struct OettliResult {
    PointId point = 0;
    bool in_a = false;
    bool in_psi = false;
    std::vector<PointId> a;
    Orbit orbit;
};

inline OettliResult oettli_thera(const OettliInstance& inst, const OrbitBudget& budget) {
    const auto structure = check_oettli_structure(inst);
    if (!structure.diagonal_ok)
        throw HypothesisError("oettli p diagonal",
                              "p is nonzero at (" + std::to_string(structure.diag_witness) + "," +
                                  std::to_string(structure.diag_witness) + ")");
    if (!structure.triangle_ok)
        throw HypothesisError("oettli p triangle",
                              "p(x,z) > p(x,y) + p(y,z) at (" + std::to_string(structure.w0) +
                                  "," + std::to_string(structure.w1) + "," +
                                  std::to_string(structure.w2) + ")");
    if (!structure.d_metric)
        throw HypothesisError("metric distance required",
                              std::string("table classifies as ") +
                                  to_string(structure.d_class.kind) + ", " +
                                  detail::class_witness(structure.d_class));
    const auto escape = check_oettli_escape(inst);
    if (escape.a.empty())
        throw HypothesisError("oettli reachability", "the set A is empty");
    if (!escape.ok)
        throw HypothesisError("oettli escape condition",
                              "point index " + std::to_string(escape.witness) +
                                  " lies in A outside Psi and admits no escape step");
    const std::size_t n = inst.d.size();
    SetValuedMap s = [&inst, n](PointId x) {
        std::vector<PointId> out;
        for (PointId y = 0; y < n; ++y)
            if (inst.p[x][y] + inst.d.at(x, y) <= ExtReal(0.0)) out.push_back(y);
        return out;
    };
    auto run = idempotent_orbit(n, s, table_fn(inst.d), inst.x0, budget);
    if (run.outcome.kind == OutcomeKind::BudgetExceeded)
        throw BudgetError(run.outcome.steps_taken, run.outcome.accumulated_length);
    OettliResult res;
    res.point = run.outcome.endpoint;
    res.in_a = inst.p[inst.x0][res.point] + inst.d.at(inst.x0, res.point) <= ExtReal(0.0);
    res.in_psi = inst.psi[res.point] != 0;
    res.a = escape.a;
    res.orbit = std::move(run.orbit);
    return res;
}

// ---------------------------------------------------------------------------
// Fabián–Preiss
// ---------------------------------------------------------------------------

struct FabianPreissInstance {
    DistanceTable d;                        // host metric
    std::vector<DistanceTable> pseudometrics;
    std::vector<ObjectiveTable> objectives;
    std::size_t i0 = 0;                     // index with p_{i0} equal to d entrywise
    PointId x0 = 0;
};

namespace detail {

// Pseudometric ground rules: symmetric, zero diagonal, nonneg finite entries,
// triangle inequality. Unlike a distance table, zero off-diagonal is legal.
inline void validate_pseudometric(const DistanceTable& p, std::size_t n, std::size_t which) {
    const std::string who = "pseudometric " + std::to_string(which);
    if (p.size() != n) throw InputError(who + ": size differs from the space");
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j) {
            const double v = p.at(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw HypothesisError(who, "entry (" + std::to_string(i) + "," +
                                               std::to_string(j) +
                                               ") must be finite and nonnegative");
            if (i == j && v != 0.0)
                throw HypothesisError(who, "diagonal entry at " + std::to_string(i) +
                                               " must be zero");
        }
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j)
            if (p.at(i, j) != p.at(j, i))
                throw HypothesisError(who, "symmetry fails at (" + std::to_string(i) + "," +
                                               std::to_string(j) + ")");
    for (PointId i = 0; i < n; ++i)
        for (PointId k = 0; k < n; ++k)
            for (PointId j = 0; j < n; ++j)
                if (p.at(i, j) > p.at(i, k) + p.at(k, j))
                    throw HypothesisError(who, "triangle inequality fails at (" +
                                                   std::to_string(i) + "," + std::to_string(k) +
                                                   "," + std::to_string(j) + ")");
}

} // namespace detail

struct FabianHypothesisReport {
    bool ok = true;
    PointId witness = 0;       // Phi point with positive leading objective, no joint step
    std::vector<PointId> phi;  // the jointly dominated set around x0
};

inline std::vector<PointId> fabian_phi_set(const FabianPreissInstance& inst) {
    const std::size_t n = inst.d.size();
    std::vector<PointId> phi;
    for (PointId x = 0; x < n; ++x) {
        bool in = true;
        for (std::size_t i = 0; i < inst.pseudometrics.size() && in; ++i)
            if (!(inst.objectives[i].at(x) + inst.pseudometrics[i].at(inst.x0, x) <=
                  inst.objectives[i].at(inst.x0)))
                in = false;
        if (in) phi.push_back(x);
    }
    return phi;
}

// Every Phi point with positive leading objective must admit y != x improving
// every index jointly: f_i(y) + p_i(x, y) <= f_i(x) for all i.
inline FabianHypothesisReport check_fabian_hypothesis(const FabianPreissInstance& inst) {
    FabianHypothesisReport rep;
    rep.phi = fabian_phi_set(inst);
    const std::size_t n = inst.d.size();
    for (PointId x : rep.phi) {
        if (!(inst.objectives[inst.i0].at(x) > ExtReal(0.0))) continue;
        bool found = false;
        for (PointId y = 0; y < n && !found; ++y) {
            if (y == x) continue;
            bool joint = true;
            for (std::size_t i = 0; i < inst.pseudometrics.size() && joint; ++i)
                if (!(inst.objectives[i].at(y) + inst.pseudometrics[i].at(x, y) <=
                      inst.objectives[i].at(x)))
                    joint = false;
            found = joint;
        }
        if (!found) {
            rep.ok = false;
            rep.witness = x;
            return rep;
        }
    }
    return rep;
}

struct FabianResult {
    PointId point = 0;
    ExtReal f_i0_value;
    std::vector<PointId> phi;
    Orbit orbit;
};

inline FabianResult fabian_preiss(const FabianPreissInstance& inst, const OrbitBudget& budget) {
    const std::size_t n = inst.d.size();
    if (inst.pseudometrics.empty())
        throw InputError("fabian-preiss: at least one pseudometric required");
    if (inst.pseudometrics.size() != inst.objectives.size())
        throw InputError("fabian-preiss: pseudometric and objective counts differ");
    if (inst.i0 >= inst.pseudometrics.size())
        throw InputError("fabian-preiss: i0 out of range");
    if (inst.x0 >= n) throw InputError("fabian-preiss: x0 out of range");
    for (const auto& f : inst.objectives)
        if (f.size() != n)
            throw InputError("fabian-preiss: objective size differs from the space");
    for (std::size_t i = 0; i < inst.objectives.size(); ++i)
        if (!inst.objectives[i].at(inst.x0).is_finite())
            throw InputError("fabian-preiss: x0 must have a finite value in every objective");
    const DistanceClass cls = classify_distance(inst.d);
    if (cls.kind != DistanceKind::Metric)
        throw HypothesisError("metric distance required",
                              std::string("table classifies as ") + to_string(cls.kind) + ", " +
                                  detail::class_witness(cls));
    for (std::size_t i = 0; i < inst.pseudometrics.size(); ++i)
        detail::validate_pseudometric(inst.pseudometrics[i], n, i);
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j)
            if (inst.pseudometrics[inst.i0].at(i, j) != inst.d.at(i, j))
                throw HypothesisError("fabian-preiss anchor index",
                                      "pseudometric " + std::to_string(inst.i0) +
                                          " differs from the host metric at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
    const auto hyp = check_fabian_hypothesis(inst);
    if (!hyp.ok)
        throw HypothesisError("fabian-preiss joint step condition",
                              "point index " + std::to_string(hyp.witness) +
                                  " has positive leading objective and no joint step");
    std::vector<char> in_phi(n, 0);
    for (PointId x : hyp.phi) in_phi[x] = 1;
    SetValuedMap s = [&inst, &in_phi, n](PointId x) {
        std::vector<PointId> out;
        for (PointId y = 0; y < n; ++y) {
            if (!in_phi[y]) continue;
            bool joint = true;
            for (std::size_t i = 0; i < inst.pseudometrics.size() && joint; ++i)
                if (!(inst.objectives[i].at(y) + inst.pseudometrics[i].at(x, y) <=
                      inst.objectives[i].at(x)))
                    joint = false;
            if (joint) out.push_back(y);
        }
        return out;
    };
    auto run = idempotent_orbit(n, s, table_fn(inst.d), inst.x0, budget);
    if (run.outcome.kind == OutcomeKind::BudgetExceeded)
        throw BudgetError(run.outcome.steps_taken, run.outcome.accumulated_length);
    FabianResult res;
    res.point = run.outcome.endpoint;
    res.f_i0_value = inst.objectives[inst.i0].at(res.point);
    res.phi = hyp.phi;
    res.orbit = std::move(run.orbit);
    return res;
}

} // namespace loev
