// Greedy orbit engine: argmax stepping, tie-breaking, budgets, the
// diagonal-stripped absorbed mode, and the idempotency checker.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <loev/loev.hpp>

#include "test_util.hpp"

using namespace loev;

namespace {

DistanceTable line(std::size_t n) {
    DistanceTable t(n);
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j)
            t.set(i, j, double(i > j ? i - j : j - i));
    return t;
}

SetValuedMap from_table(std::vector<std::vector<PointId>> rows) {
    return [rows = std::move(rows)](PointId x) { return rows.at(x); };
}

} // namespace

TEST_CASE("greedy orbit follows a forced chain to the empty value") {
    const auto map = from_table({{1}, {2}, {}, {}});
    const auto run = greedy_orbit(4, map, table_fn(line(4)), 0, OrbitBudget{});
    REQUIRE(run.outcome.kind == OutcomeKind::EmptyValue);
    REQUIRE(run.outcome.endpoint == 2);
    REQUIRE(run.orbit.points == std::vector<PointId>{0, 1, 2});
    REQUIRE(run.orbit.jumps == std::vector<double>{1.0, 1.0});
    REQUIRE(run.orbit.length() == 2.0);
}

TEST_CASE("greedy orbit picks the candidate with the largest jump") {
    const auto map = from_table({{1, 2}, {}, {}});
    const auto run = greedy_orbit(3, map, table_fn(line(3)), 0, OrbitBudget{});
    REQUIRE(run.orbit.points == std::vector<PointId>{0, 2});
    REQUIRE(run.orbit.jumps == std::vector<double>{2.0});
}

TEST_CASE("ties go to the candidate listed first") {
    const DistanceTable t = DistanceTable::from_rows({{0, 5, 5}, {5, 0, 1}, {5, 1, 0}});
    const auto run1 =
        greedy_orbit(3, from_table({{1, 2}, {}, {}}), table_fn(t), 0, OrbitBudget{});
    REQUIRE(run1.orbit.points[1] == 1);
    const auto run2 =
        greedy_orbit(3, from_table({{2, 1}, {}, {}}), table_fn(t), 0, OrbitBudget{});
    REQUIRE(run2.orbit.points[1] == 2);
}

TEST_CASE("step budget stops a two-cycle") {
    const auto map = from_table({{1}, {0}});
    OrbitBudget b;
    b.max_steps = 10;
    const auto run = greedy_orbit(2, map, table_fn(line(2)), 0, b);
    REQUIRE(run.outcome.kind == OutcomeKind::BudgetExceeded);
    REQUIRE(run.outcome.branch == BudgetBranch::Steps);
    REQUIRE(run.outcome.steps_taken == 10);
    REQUIRE(run.outcome.accumulated_length == 10.0);
    REQUIRE(run.orbit.points.size() == 11);
}

TEST_CASE("length budget stops a two-cycle") {
    const auto map = from_table({{1}, {0}});
    OrbitBudget b;
    b.length_threshold = 5.0;
    const auto run = greedy_orbit(2, map, table_fn(line(2)), 0, b);
    REQUIRE(run.outcome.kind == OutcomeKind::BudgetExceeded);
    REQUIRE(run.outcome.branch == BudgetBranch::Length);
    REQUIRE(run.outcome.steps_taken == 5);
    REQUIRE(run.outcome.accumulated_length == 5.0);
}

TEST_CASE("orbit input validation") {
    const auto empty_map = from_table({{}, {}});
    SECTION("budget fields must be positive") {
        OrbitBudget zero_steps;
        zero_steps.max_steps = 0;
        REQUIRE_THROWS_AS(zero_steps.validate(), InputError);
        OrbitBudget zero_length;
        zero_length.length_threshold = 0.0;
        REQUIRE_THROWS_AS(zero_length.validate(), InputError);
        REQUIRE_THROWS_AS(greedy_orbit(2, empty_map, table_fn(line(2)), 0, zero_steps),
                          InputError);
    }
    SECTION("start point must lie in the space") {
        REQUIRE_THROWS_WITH(greedy_orbit(2, empty_map, table_fn(line(2)), 5, OrbitBudget{}),
                            Catch::Matchers::ContainsSubstring("out of range"));
    }
    SECTION("map values must lie in the space") {
        const auto bad = from_table({{7}, {}});
        REQUIRE_THROWS_WITH(greedy_orbit(2, bad, table_fn(line(2)), 0, OrbitBudget{}),
                            Catch::Matchers::ContainsSubstring("out-of-range point index 7"));
    }
}

TEST_CASE("strip_diagonal removes only the point itself") {
    const auto map = from_table({{0}, {0, 1, 2}, {1}});
    const auto stripped = strip_diagonal(map);
    REQUIRE(stripped(0).empty());
    REQUIRE(stripped(1) == std::vector<PointId>{0, 2});
    REQUIRE(stripped(2) == std::vector<PointId>{1});
}

TEST_CASE("absorbed mode reinterprets the empty value as absorption") {
    SECTION("a map fixing every point absorbs immediately") {
        const SetValuedMap identity = [](PointId x) { return std::vector<PointId>{x}; };
        const auto run = idempotent_orbit(3, identity, table_fn(line(3)), 1, OrbitBudget{});
        REQUIRE(run.outcome.kind == OutcomeKind::SingletonAbsorbed);
        REQUIRE(run.outcome.endpoint == 1);
        REQUIRE(run.orbit.points == std::vector<PointId>{1});
        REQUIRE(run.orbit.jumps.empty());
    }

    SECTION("non-strict descent sets on a line absorb at the minimizer") {
        const DistanceTable d = line(3);
        const std::vector<double> f{2.0, 1.0, 0.0};
        const double lambda = 0.5;
        const SetValuedMap s = [&](PointId x) {
            std::vector<PointId> out;
            for (PointId y = 0; y < 3; ++y)
                if (f[y] + lambda * d.at(y, x) <= f[x]) out.push_back(y);
            return out;
        };
        const auto run = idempotent_orbit(3, s, table_fn(d), 0, OrbitBudget{});
        REQUIRE(run.outcome.kind == OutcomeKind::SingletonAbsorbed);
        REQUIRE(run.outcome.endpoint == 2);
        REQUIRE(run.orbit.points == std::vector<PointId>{0, 2});
        REQUIRE(run.orbit.jumps == std::vector<double>{2.0});
    }

    SECTION("budget overruns stay budget overruns") {
        // After stripping, 0 and 1 keep feeding each other.
        const auto map = from_table({{0, 1}, {0, 1}});
        OrbitBudget b;
        b.max_steps = 4;
        const auto run = idempotent_orbit(2, map, table_fn(line(2)), 0, b);
        REQUIRE(run.outcome.kind == OutcomeKind::BudgetExceeded);
    }
}

TEST_CASE("idempotency check") {
    SECTION("an empty-valued map passes vacuously") {
        REQUIRE(check_idempotent(from_table({{}, {}}), 2).ok);
    }

    SECTION("a forced chain is not idempotent and yields a witness") {
        const auto rep = check_idempotent(from_table({{1}, {2}, {}}), 3);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.x == 0);
        REQUIRE(rep.y == 1);
        REQUIRE(rep.z == 2);
    }

    SECTION("non-strict descent sets over a metric are idempotent") {
        std::mt19937 rng(20240816);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 2 + rng() % 8;
            const DistanceTable d = testutil::random_metric(rng, n);
            const ObjectiveTable f = testutil::random_objective(rng, n);
            const double lambda = 0.5;
            const SetValuedMap s = [&](PointId x) {
                std::vector<PointId> out;
                for (PointId y = 0; y < n; ++y)
                    if (f.at(y) + lambda * d.at(y, x) <= f.at(x)) out.push_back(y);
                return out;
            };
            REQUIRE(check_idempotent(s, n).ok);
        }
    }
}

TEST_CASE("every greedy jump attains the maximum over the candidate set") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng() % 6;
        const DistanceTable d = testutil::random_metric(rng, n);
        // Random map with a few empty rows so orbits terminate.
        std::vector<std::vector<PointId>> rows(n);
        std::uniform_int_distribution<std::size_t> count(0, n - 1);
        for (PointId x = 0; x < n; ++x) {
            const std::size_t c = count(rng);
            for (std::size_t k = 0; k < c; ++k)
                rows[x].push_back(PointId(rng() % n));
        }
        const auto map = from_table(rows);
        OrbitBudget b;
        b.max_steps = 50;
        const auto run = greedy_orbit(n, map, table_fn(d), PointId(rng() % n), b);
        for (std::size_t i = 0; i + 1 < run.orbit.points.size(); ++i) {
            const PointId x = run.orbit.points[i];
            double best = 0.0;
            for (PointId y : map(x)) best = std::max(best, d.at(y, x));
            REQUIRE(run.orbit.jumps[i] == best);
        }
    }
}

TEST_CASE("orbits are deterministic") {
    std::mt19937 rng(5);
    const std::size_t n = 6;
    const DistanceTable d = testutil::random_metric(rng, n);
    std::vector<std::vector<PointId>> rows(n);
    for (PointId x = 0; x + 1 < n; ++x) rows[x] = {PointId(x + 1), PointId(0)};
    rows[n - 1] = {};
    const auto map = from_table(rows);
    OrbitBudget budget;
    budget.max_steps = 100;
    const auto a = greedy_orbit(n, map, table_fn(d), 0, budget);
    const auto b = greedy_orbit(n, map, table_fn(d), 0, budget);
    REQUIRE(a.orbit.points == b.orbit.points);
    REQUIRE(a.orbit.jumps == b.orbit.jumps);
    REQUIRE(a.outcome.kind == b.outcome.kind);
    REQUIRE(a.outcome.endpoint == b.outcome.endpoint);
}
