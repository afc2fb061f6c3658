#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "loev/distance.hpp"
#include "loev/errors.hpp"

namespace loev {

// Set-valued map and distance oracle over point indices 0..n-1.
using SetValuedMap = std::function<std::vector<PointId>(PointId)>;
using DistFn = std::function<double(PointId, PointId)>;

inline DistFn table_fn(DistanceTable t) {
    return [t = std::move(t)](PointId i, PointId j) { return t.at(i, j); };
}

struct OrbitBudget {
    std::size_t max_steps = 100000;
    double length_threshold = 1e9;

    void validate() const {
        if (max_steps == 0) throw InputError("budget: max_steps must be positive");
        if (!(length_threshold > 0.0))
            throw InputError("budget: length_threshold must be positive");
    }
};

struct Orbit {
    std::vector<PointId> points;
    std::vector<double> jumps; // jumps[i] = dist(points[i+1], points[i])

    double length() const { return std::accumulate(jumps.begin(), jumps.end(), 0.0); }
};

enum class OutcomeKind { EmptyValue, SingletonAbsorbed, BudgetExceeded };
enum class BudgetBranch { Steps, Length };

struct OrbitOutcome {
    OutcomeKind kind = OutcomeKind::EmptyValue;
    PointId endpoint = 0;              // EmptyValue / SingletonAbsorbed
    std::size_t steps_taken = 0;       // BudgetExceeded
    double accumulated_length = 0.0;   // BudgetExceeded
    BudgetBranch branch = BudgetBranch::Steps;

    static OrbitOutcome empty_value(PointId p) {
        OrbitOutcome o;
        o.kind = OutcomeKind::EmptyValue;
        o.endpoint = p;
        return o;
    }
    static OrbitOutcome singleton_absorbed(PointId p) {
        OrbitOutcome o;
        o.kind = OutcomeKind::SingletonAbsorbed;
        o.endpoint = p;
        return o;
    }
    static OrbitOutcome budget_exceeded(std::size_t steps, double length, BudgetBranch br) {
        OrbitOutcome o;
        o.kind = OutcomeKind::BudgetExceeded;
        o.steps_taken = steps;
        o.accumulated_length = length;
        o.branch = br;
        return o;
    }
};

// Remove x from S(x), the standard remedy when a map may be stationary.
inline SetValuedMap strip_diagonal(SetValuedMap s) {
    return [s = std::move(s)](PointId x) {
        auto ys = s(x);
        std::erase(ys, x);
        return ys;
    };
}

struct OrbitRun {
    Orbit orbit;
    OrbitOutcome outcome;
};

// Greedy orbit: from the current point always jump to the candidate at
// maximal distance, ties broken by enumeration order. Maximal jumps satisfy
// the half-of-supremum rule with slack, so a surviving orbit is long and a
// stopped one certifies an empty value.
inline OrbitRun greedy_orbit(std::size_t n, const SetValuedMap& map, const DistFn& dist,
                             PointId x0, const OrbitBudget& budget) {
    budget.validate();
    if (x0 >= n) throw InputError("orbit: start point index " + std::to_string(x0) +
                                  " out of range (space has " + std::to_string(n) + " points)");
    Orbit orbit;
    orbit.points.push_back(x0);
    double length = 0.0;
    for (;;) {
        const PointId x = orbit.points.back();
        const std::vector<PointId> candidates = map(x);
        for (PointId y : candidates)
            if (y >= n)
                throw InputError("orbit: map returned out-of-range point index " +
                                 std::to_string(y));
        if (candidates.empty())
            return {std::move(orbit), OrbitOutcome::empty_value(x)};
        const std::size_t steps = orbit.jumps.size();
        if (steps >= budget.max_steps)
            return {std::move(orbit),
                    OrbitOutcome::budget_exceeded(steps, length, BudgetBranch::Steps)};
        if (length >= budget.length_threshold)
            return {std::move(orbit),
                    OrbitOutcome::budget_exceeded(steps, length, BudgetBranch::Length)};
        PointId best = candidates.front();
        double best_jump = dist(best, x);
        for (std::size_t idx = 1; idx < candidates.size(); ++idx) {
            const double j = dist(candidates[idx], x);
            if (j > best_jump) {
                best = candidates[idx];
                best_jump = j;
            }
        }
        orbit.points.push_back(best);
        orbit.jumps.push_back(best_jump);
        length += best_jump;
    }
}

// Orbit for maps that absorb their own points (S(x) may legally contain x):
// runs greedily on the diagonal-stripped map, and reinterprets the empty
// value as absorption into the singleton {endpoint}.
inline OrbitRun idempotent_orbit(std::size_t n, const SetValuedMap& map, const DistFn& dist,
                                 PointId x0, const OrbitBudget& budget) {
    auto run = greedy_orbit(n, strip_diagonal(map), dist, x0, budget);
    if (run.outcome.kind == OutcomeKind::EmptyValue)
        run.outcome = OrbitOutcome::singleton_absorbed(run.outcome.endpoint);
    return run;
}

struct IdempotencyReport {
    bool ok = true;
    PointId x = 0, y = 0, z = 0; // witness: y in S(x), z in S(y), z not in S(x)
};

// Exhaustive check that S(S(x)) is contained in S(x) at every point.
inline IdempotencyReport check_idempotent(const SetValuedMap& map, std::size_t n) {
    for (PointId x = 0; x < n; ++x) {
        const auto sx = map(x);
        std::vector<char> in_sx(n, 0);
        for (PointId y : sx)
            if (y < n) in_sx[y] = 1;
        for (PointId y : sx)
            for (PointId z : map(y))
                if (z >= n || !in_sx[z]) return {false, x, y, z};
    }
    return {};
}

} // namespace loev
