#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loev/errors.hpp"
#include "loev/ext_real.hpp"
#include "loev/orbit.hpp"
#include "loev/principles.hpp"
#include "loev/semicomplete.hpp"

namespace loev {

// d / (1 + d): the standard bounded remetrization, applied before any
// reciprocal is taken so the derived quantities stay in control.
inline double bound_metric(double d) {
    if (!(d >= 0.0) || !std::isfinite(d))
        throw InputError("bound_metric: distance must be finite and nonnegative");
    return d / (1.0 + d);
}

using HostMetric = std::function<double(double, double)>;
using SetDistance = std::function<double(double)>;

// A host interval with a list of removed closed sets, represented through
// caller-provided distance-to-set oracles (raw host distance). The domain of
// interest Y is the set of points at positive distance from every F_n. The
// series runs to `depth`; closed sets beyond the provided list are empty and
// contribute nothing, so depth mainly records the truncation bound 2^-depth.
struct GDeltaDomain {
    HostMetric host_metric;
    std::vector<SetDistance> closed_sets; // raw distance to F_n, n = 1..size()
    std::size_t depth = 32;

    void validate() const {
        if (!host_metric) throw InputError("gdelta: host metric missing");
        if (depth == 0) throw InputError("gdelta: depth must be at least 1");
        if (depth < closed_sets.size())
            throw InputError("gdelta: depth must cover every closed set");
    }
};

// phi_n(x) = 1 / (bounded distance from x to F_n); +inf on F_n itself, 0 when
// F_n is empty (beyond the provided list).
inline ExtReal phi(const GDeltaDomain& dom, std::size_t n, double x) {
    dom.validate();
    if (n < 1 || n > dom.depth)
        throw InputError("phi: level " + std::to_string(n) + " out of range (depth " +
                         std::to_string(dom.depth) + ")");
    if (n > dom.closed_sets.size()) return ExtReal(0.0);
    const double raw = dom.closed_sets[n - 1](x);
    if (!(raw >= 0.0) || !std::isfinite(raw))
        throw InputError("phi: distance oracle must return finite nonnegative values");
    const double b = bound_metric(raw);
    if (b == 0.0) return ExtReal::infinity();
    return ExtReal(1.0 / b);
}

inline bool in_domain(const GDeltaDomain& dom, double x) {
    for (const auto& dist : dom.closed_sets)
        if (!(dist(x) > 0.0)) return false;
    return true;
}

struct GPremetricValue {
    double value = 0.0;
    double truncation_bound = 0.0; // 2^-depth, the weight of the dropped tail
};

// Premetric separating the removed sets:
//   g(x, y) = bounded d(x, y) + sum_n 2^-n * t_n / (1 + t_n),
//   t_n = |phi_n(x) - phi_n(y)|.
// Requires both points inside Y, where every phi is finite.
inline GPremetricValue gdelta_premetric(const GDeltaDomain& dom, double x, double y) {
    dom.validate();
    double value = bound_metric(dom.host_metric(x, y));
    double weight = 1.0;
    for (std::size_t n = 1; n <= dom.closed_sets.size(); ++n) {
        weight *= 0.5;
        const ExtReal px = phi(dom, n, x);
        const ExtReal py = phi(dom, n, y);
        if (!px.is_finite())
            throw DomainError("gdelta: first point lies on removed set " + std::to_string(n));
        if (!py.is_finite())
            throw DomainError("gdelta: second point lies on removed set " + std::to_string(n));
        const double t = std::abs(px.raw() - py.raw());
        value += weight * (t / (1.0 + t));
    }
    return {value, std::pow(2.0, -static_cast<double>(dom.depth))};
}

struct SeriesCheck {
    double sum_raw = 0.0;
    double sum_transformed = 0.0;
    LengthVerdict raw_verdict = LengthVerdict::BelowThresholdAtHorizon;
    LengthVerdict transformed_verdict = LengthVerdict::BelowThresholdAtHorizon;
};

// Compares a nonnegative series against its t/(1+t) transform: the two sides
// exceed or stay below a divergence threshold together (at the probed horizon).
inline SeriesCheck series_equivalence_check(const std::function<double(std::size_t)>& term,
                                            std::size_t horizon, double threshold) {
    if (horizon < 1) throw InputError("series: horizon must be at least 1");
    if (!(threshold > 0.0)) throw InputError("series: threshold must be positive");
    SeriesCheck out;
    for (std::size_t i = 0; i < horizon; ++i) {
        const double a = term(i);
        if (!(a >= 0.0) || !std::isfinite(a))
            throw InputError("series: term " + std::to_string(i) +
                             " must be finite and nonnegative");
        out.sum_raw += a;
        out.sum_transformed += a / (1.0 + a);
    }
    out.raw_verdict = out.sum_raw >= threshold ? LengthVerdict::ExceededThreshold
                                               : LengthVerdict::BelowThresholdAtHorizon;
    out.transformed_verdict = out.sum_transformed >= threshold
                                  ? LengthVerdict::ExceededThreshold
                                  : LengthVerdict::BelowThresholdAtHorizon;
    return out;
}

struct LevelSetReport {
    bool precondition_ok = true;                 // every term stayed in the level set
    std::optional<std::size_t> first_term_outside;
    ExtReal limit_phi;
    bool pass = false;                           // the limit point stayed in the level set
};

// Level sets {phi_n <= K} are closed: a sequence inside one keeps its limit
// inside. The limit point is supplied by the caller (default: the last
// materialized term).
inline LevelSetReport level_set_probe(const GDeltaDomain& dom, std::size_t n, double k_bound,
                                      const SequenceSpec<double>& seq,
                                      std::optional<double> limit = std::nullopt) {
    if (!(k_bound > 0.0)) throw InputError("level set: bound must be positive");
    const auto pts = seq.materialize();
    LevelSetReport rep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const ExtReal p = phi(dom, n, pts[i]);
        if (!p.is_finite() || p.raw() > k_bound) {
            rep.precondition_ok = false;
            rep.first_term_outside = i;
            break;
        }
    }
    const double lim = limit ? *limit : pts.back();
    rep.limit_phi = phi(dom, n, lim);
    rep.pass = rep.precondition_ok && rep.limit_phi.is_finite() && rep.limit_phi.raw() <= k_bound;
    return rep;
}

struct PerturbedMinimum {
    double point = 0.0;
    std::size_t index = 0;
    EkelandCertificate certificate;
    Orbit orbit;
};

// Minimize f up to an eps-perturbation over a finite grid inside Y, using the
// separating premetric as the perturbation distance.
inline PerturbedMinimum perturbed_minimize(const GDeltaDomain& dom,
                                           const std::vector<double>& grid,
                                           const std::function<ExtReal(double)>& objective,
                                           double eps, const OrbitBudget& budget,
                                           std::size_t x0_index = 0) {
    dom.validate();
    if (grid.empty()) throw InputError("gdelta: grid must be nonempty");
    if (x0_index >= grid.size()) throw InputError("gdelta: x0 index out of range");
    if (!objective) throw InputError("gdelta: objective missing");
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!in_domain(dom, grid[i]))
            throw DomainError("gdelta: grid point at index " + std::to_string(i) +
                              " lies on a removed set");
    std::vector<ExtReal> values;
    values.reserve(grid.size());
    for (double p : grid) values.push_back(objective(p));
    const ObjectiveTable f = ObjectiveTable::create(std::move(values));
    const std::size_t n = grid.size();
    std::vector<double> table(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = i == j ? 0.0 : gdelta_premetric(dom, grid[i], grid[j]).value;
    DistFn g = [table = std::move(table), n](PointId i, PointId j) { return table[i * n + j]; };
    auto run = ekeland_premetric(f, g, eps, x0_index, budget);
    PerturbedMinimum out;
    out.index = run.certificate.point;
    out.point = grid[out.index];
    out.certificate = run.certificate;
    out.orbit = std::move(run.orbit);
    return out;
}

} // namespace loev
