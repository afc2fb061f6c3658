// Foundations: extended reals, distance tables and their classification,
// labeled spaces, objectives, and the constructive premetric builders.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include <loev/loev.hpp>

#include "test_util.hpp"

using namespace loev;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("extended reals exclude NaN and minus infinity") {
    REQUIRE_THROWS_AS(ExtReal(std::nan("")), InputError);
    REQUIRE_THROWS_AS(ExtReal(-kInf), InputError);
    REQUIRE(ExtReal(0.0).is_finite());
    REQUIRE_FALSE(ExtReal::infinity().is_finite());
}

TEST_CASE("extended real arithmetic") {
    const ExtReal inf = ExtReal::infinity();

    SECTION("addition absorbs infinity") {
        REQUIRE((inf + ExtReal(1.0)) == inf);
        REQUIRE((ExtReal(2.0) + ExtReal(3.0)) == ExtReal(5.0));
        // Finite overflow saturates to +inf, which is still a legal value.
        REQUIRE_FALSE((ExtReal(1e308) + ExtReal(1e308)).is_finite());
    }

    SECTION("subtraction needs a finite right-hand side") {
        REQUIRE((ExtReal(7.0) - 3.0) == ExtReal(4.0));
        REQUIRE_FALSE((inf - 5.0).is_finite());
        REQUIRE_THROWS_AS(ExtReal(1.0) - kInf, InputError);
    }

    SECTION("ordering puts infinity above every finite value") {
        REQUIRE(ExtReal(3.0) < inf);
        REQUIRE(ExtReal(1.0) < ExtReal(2.0));
        REQUIRE(inf == ExtReal::infinity());
    }

    SECTION("finite_value guards against infinity") {
        REQUIRE(ExtReal(2.5).finite_value() == 2.5);
        REQUIRE_THROWS_AS(inf.finite_value(), InputError);
    }

    SECTION("string form") {
        REQUIRE(ExtReal(0.5).str() == "0.5");
        REQUIRE(inf.str() == "inf");
    }
}

TEST_CASE("format_double emits shortest round-trip decimals") {
    REQUIRE(format_double(0.5) == "0.5");
    REQUIRE(format_double(1.0) == "1");
    REQUIRE(format_double(0.1) == "0.1");
    // Round trip is exact for arbitrary values.
    const double v = 1.0 / 3.0;
    REQUIRE(std::stod(format_double(v)) == v);
}

TEST_CASE("distance table ground rules name the offending entry") {
    SECTION("negative entry") {
        DistanceTable t = DistanceTable::from_rows({{0.0, -1.0}, {1.0, 0.0}});
        REQUIRE_THROWS_WITH(t.validate(),
                            Catch::Matchers::ContainsSubstring("(0,1)") &&
                                Catch::Matchers::ContainsSubstring("negative"));
    }
    SECTION("nonzero diagonal") {
        DistanceTable t = DistanceTable::from_rows({{0.0, 1.0}, {1.0, 2.0}});
        REQUIRE_THROWS_WITH(t.validate(),
                            Catch::Matchers::ContainsSubstring("(1,1)") &&
                                Catch::Matchers::ContainsSubstring("diagonal"));
    }
    SECTION("zero between distinct points") {
        DistanceTable t = DistanceTable::from_rows({{0.0, 0.0}, {1.0, 0.0}});
        REQUIRE_THROWS_WITH(t.validate(),
                            Catch::Matchers::ContainsSubstring("(0,1)") &&
                                Catch::Matchers::ContainsSubstring("separated"));
    }
    SECTION("non-finite entry") {
        DistanceTable t = DistanceTable::from_rows({{0.0, kInf}, {1.0, 0.0}});
        REQUIRE_THROWS_WITH(t.validate(), Catch::Matchers::ContainsSubstring("finite"));
    }
    SECTION("ragged rows are rejected at construction") {
        REQUIRE_THROWS_WITH(DistanceTable::from_rows({{0.0, 1.0}, {1.0, 0.0, 2.0}}),
                            Catch::Matchers::ContainsSubstring("row 1"));
    }
}

TEST_CASE("distance classification picks the strongest class") {
    SECTION("a single point is a metric space") {
        const auto c = classify_distance(DistanceTable::from_rows({{0.0}}));
        REQUIRE(c.kind == DistanceKind::Metric);
        REQUIRE(c.symmetry_violations.empty());
        REQUIRE(c.triangle_violations.empty());
    }

    SECTION("three points on a line form a metric") {
        const auto c = classify_distance(
            DistanceTable::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
        REQUIRE(c.kind == DistanceKind::Metric);
    }

    SECTION("asymmetric pair demotes to quasimetric and is listed") {
        const auto c = classify_distance(DistanceTable::from_rows({{0, 1}, {3, 0}}));
        REQUIRE(c.kind == DistanceKind::QuasiMetric);
        REQUIRE(c.symmetry_violations.size() == 1);
        REQUIRE(c.symmetry_violations[0].i == 0);
        REQUIRE(c.symmetry_violations[0].j == 1);
        REQUIRE(c.triangle_violations.empty());
    }

    SECTION("symmetric triangle failure demotes to symmetric premetric") {
        const auto c = classify_distance(
            DistanceTable::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
        REQUIRE(c.kind == DistanceKind::SymmetricPremetric);
        REQUIRE(c.triangle_violations.size() == 2); // (0,1,2) and its mirror (2,1,0)
        REQUIRE(c.triangle_violations[0].i == 0);
        REQUIRE(c.triangle_violations[0].k == 1);
        REQUIRE(c.triangle_violations[0].j == 2);
    }

    SECTION("both failures demote to premetric") {
        const auto c = classify_distance(
            DistanceTable::from_rows({{0, 1, 5}, {2, 0, 1}, {5, 1, 0}}));
        REQUIRE(c.kind == DistanceKind::Premetric);
        REQUIRE_FALSE(c.symmetry_violations.empty());
        REQUIRE_FALSE(c.triangle_violations.empty());
    }

    SECTION("names") {
        REQUIRE(std::string(to_string(DistanceKind::Metric)) == "Metric");
        REQUIRE(std::string(to_string(DistanceKind::QuasiMetric)) == "QuasiMetric");
        REQUIRE(std::string(to_string(DistanceKind::SymmetricPremetric)) ==
                "SymmetricPremetric");
        REQUIRE(std::string(to_string(DistanceKind::Premetric)) == "Premetric");
    }
}

TEST_CASE("shortest-path closed random tables classify as promised") {
    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        REQUIRE(classify_distance(testutil::random_metric(rng, n)).kind ==
                DistanceKind::Metric);
        const auto q = classify_distance(testutil::random_quasimetric(rng, n));
        REQUIRE(q.kind == DistanceKind::QuasiMetric);
        REQUIRE_FALSE(q.symmetry_violations.empty());
    }
}

TEST_CASE("labeled spaces") {
    SECTION("labels resolve to indices") {
        auto s = FiniteSpace::create({"a", "b"}, DistanceTable::from_rows({{0, 1}, {1, 0}}));
        REQUIRE(s.size() == 2);
        REQUIRE(s.label(1) == "b");
        REQUIRE(s.index_of("a") == PointId{0});
        REQUIRE_FALSE(s.index_of("zz").has_value());
        REQUIRE(s.cls().kind == DistanceKind::Metric);
        REQUIRE(s.dist().at(0, 1) == 1.0);
    }
    SECTION("duplicate labels are rejected") {
        REQUIRE_THROWS_WITH(
            FiniteSpace::create({"a", "a"}, DistanceTable::from_rows({{0, 1}, {1, 0}})),
            Catch::Matchers::ContainsSubstring("duplicate label 'a'"));
    }
    SECTION("label count must match the table") {
        REQUIRE_THROWS_WITH(
            FiniteSpace::create({"a"}, DistanceTable::from_rows({{0, 1}, {1, 0}})),
            Catch::Matchers::ContainsSubstring("1 labels for a 2-point"));
    }
    SECTION("at least one point") {
        REQUIRE_THROWS_AS(FiniteSpace::create({}, DistanceTable()), InputError);
    }
}

TEST_CASE("objective tables must be proper") {
    REQUIRE_THROWS_AS(ObjectiveTable::create({}), InputError);
    REQUIRE_THROWS_WITH(
        ObjectiveTable::create({ExtReal::infinity(), ExtReal::infinity()}),
        Catch::Matchers::ContainsSubstring("improper"));
    const auto f =
        ObjectiveTable::create({ExtReal::infinity(), ExtReal(3.0), ExtReal(5.0)});
    REQUIRE(f.min_value() == 3.0);
    REQUIRE(f.at(0) == ExtReal::infinity());
}

TEST_CASE("premetric from a descending base of balls") {
    const auto host = [](double a, double b) { return std::abs(a - b); };
    const std::vector<double> radii{0.5, 0.25, 0.125}; // r_k = 2^-k, three rungs

    SECTION("worked values") {
        REQUIRE(build_premetric_from_base(0.0, radii, host, 0.0) == 0.0);
        // Outside every ball: all bumps are clipped to their full weight.
        REQUIRE(build_premetric_from_base(0.0, radii, host, 1.0) == 0.875);
        // d = 0.25 is halfway through the first ball, on the rim of the rest.
        REQUIRE(build_premetric_from_base(0.0, radii, host, 0.25) == 0.625);
    }

    SECTION("radius list validation") {
        REQUIRE_THROWS_WITH(build_premetric_from_base(0.0, {}, host, 1.0),
                            Catch::Matchers::ContainsSubstring("at least one radius"));
        REQUIRE_THROWS_WITH(build_premetric_from_base(0.0, {0.25, 0.5}, host, 1.0),
                            Catch::Matchers::ContainsSubstring("strictly descending"));
        REQUIRE_THROWS_AS(build_premetric_from_base(0.0, {-1.0}, host, 1.0), InputError);
    }

    SECTION("range, monotonicity, and saturation") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(0.0, 2.0);
        const double cap = 1.0 - std::pow(2.0, -double(radii.size()));
        for (int trial = 0; trial < 200; ++trial) {
            double a = u(rng), b = u(rng);
            if (a > b) std::swap(a, b);
            const double ga = build_premetric_from_base(0.0, radii, host, a);
            const double gb = build_premetric_from_base(0.0, radii, host, b);
            REQUIRE(ga >= 0.0);
            REQUIRE(gb <= cap);
            REQUIRE(ga <= gb); // nondecreasing in the host distance
            if (a > 0.0) REQUIRE(ga > 0.0);
        }
        // Outside the largest ball the value saturates exactly.
        REQUIRE(build_premetric_from_base(0.0, radii, host, 1.7) == cap);
    }
}

TEST_CASE("distance from a nested family of neighbourhoods") {
    const std::size_t depth = 10;
    // Net n around x is the open ball of radius 1/n.
    const auto balls = [](std::size_t n, double x, double y) {
        return std::abs(x - y) < 1.0 / double(n);
    };

    SECTION("worked values") {
        const auto same = build_h_from_neighbournets(balls, depth, 0.0, 0.0);
        REQUIRE(same.value == 0.0);
        REQUIRE_FALSE(same.truncated);

        const auto near = build_h_from_neighbournets(balls, depth, 0.0, 0.3);
        REQUIRE(near.value == 0.25); // first exit at level 4
        REQUIRE_FALSE(near.truncated);

        const auto far = build_h_from_neighbournets(balls, depth, 0.0, 2.0);
        REQUIRE(far.value == 1.0); // exits the very first net
    }

    SECTION("a point inside every probed net gets the truncation value") {
        const auto r = build_h_from_neighbournets(balls, depth, 0.0, 0.05);
        REQUIRE(r.value == 1.0 / double(depth + 1));
        REQUIRE(r.truncated);
    }

    SECTION("a non-nested oracle is rejected on the probed range") {
        const auto flicker = [](std::size_t n, double, double) {
            return n != 2; // exits at level 2, re-enters at level 3
        };
        REQUIRE_THROWS_WITH(build_h_from_neighbournets(flicker, depth, 0.0, 1.0),
                            Catch::Matchers::ContainsSubstring("nestedness violated at level 3"));
    }

    SECTION("depth must be positive") {
        REQUIRE_THROWS_AS(build_h_from_neighbournets(balls, 0, 0.0, 1.0), InputError);
    }
}

TEST_CASE("g-length of a point sequence") {
    const auto host = [](double a, double b) { return std::abs(a - b); };

    SECTION("degenerate sequences") {
        REQUIRE(g_length(std::vector<double>{4.0}, host) == 0.0);
        REQUIRE(g_length(std::vector<double>{1.0, 1.0, 1.0}, host) == 0.0);
        REQUIRE_THROWS_AS(g_length(std::vector<double>{}, host), InputError);
    }

    SECTION("halving sequence sums exactly") {
        std::vector<double> pts;
        for (int i = 0; i <= 10; ++i) pts.push_back(std::pow(2.0, -i));
        REQUIRE(g_length(pts, host) == 1.0 - std::pow(2.0, -10));
    }

    SECTION("concatenation is additive") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> step(0, 63);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> a, b;
            for (int i = 0; i < 6; ++i) a.push_back(step(rng) / 64.0);
            b.push_back(a.back()); // b starts where a ends
            for (int i = 0; i < 6; ++i) b.push_back(step(rng) / 64.0);
            std::vector<double> joined = a;
            joined.insert(joined.end(), b.begin() + 1, b.end());
            REQUIRE(g_length(joined, host) == g_length(a, host) + g_length(b, host));
        }
    }
}
