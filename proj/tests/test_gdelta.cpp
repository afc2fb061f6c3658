// Separating premetrics on a domain with removed closed sets: the bounded
// metric, the level functionals, the series transform, and perturbed
// minimization over sampled grids.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <loev/loev.hpp>

using namespace loev;

namespace {

// Host line with the single point 1/2 removed.
GDeltaDomain punctured_line(std::size_t depth = 32) {
    GDeltaDomain dom;
    dom.host_metric = [](double a, double b) { return std::abs(a - b); };
    dom.closed_sets = {[](double x) { return std::abs(x - 0.5); }};
    dom.depth = depth;
    return dom;
}

} // namespace

TEST_CASE("bounded metric transform") {
    REQUIRE(bound_metric(0.0) == 0.0);
    REQUIRE(bound_metric(1.0) == 0.5);
    REQUIRE(bound_metric(0.25) == 0.2);
    REQUIRE_THROWS_AS(bound_metric(-1.0), InputError);
    REQUIRE_THROWS_AS(bound_metric(std::numeric_limits<double>::infinity()), InputError);
}

TEST_CASE("level functionals over the removed sets") {
    const auto dom = punctured_line();

    SECTION("worked values") {
        REQUIRE(phi(dom, 1, 1.0) == ExtReal(3.0));   // 1 / bound(1/2)
        REQUIRE(phi(dom, 1, 0.75) == ExtReal(5.0));  // 1 / bound(1/4)
        REQUIRE_FALSE(phi(dom, 1, 0.5).is_finite()); // on the removed set
    }

    SECTION("levels beyond the provided list vanish") {
        REQUIRE(phi(dom, 2, 1.0) == ExtReal(0.0));
        REQUIRE(phi(dom, 32, 1.0) == ExtReal(0.0));
    }

    SECTION("level index is range checked") {
        REQUIRE_THROWS_WITH(phi(dom, 0, 1.0),
                            Catch::Matchers::ContainsSubstring("out of range"));
        REQUIRE_THROWS_WITH(phi(dom, 33, 1.0),
                            Catch::Matchers::ContainsSubstring("out of range"));
    }

    SECTION("domain membership") {
        REQUIRE(in_domain(dom, 0.4));
        REQUIRE_FALSE(in_domain(dom, 0.5));
    }

    SECTION("domain validation") {
        GDeltaDomain bad = punctured_line();
        bad.depth = 0;
        REQUIRE_THROWS_AS(bad.validate(), InputError);
        bad = punctured_line(32);
        bad.host_metric = nullptr;
        REQUIRE_THROWS_AS(bad.validate(), InputError);
        bad = punctured_line();
        bad.depth = 0;
        REQUIRE_THROWS_AS(phi(bad, 1, 1.0), InputError);
        GDeltaDomain shallow = punctured_line(1);
        shallow.closed_sets.push_back([](double x) { return std::abs(x - 2.0); });
        REQUIRE_THROWS_WITH(shallow.validate(),
                            Catch::Matchers::ContainsSubstring("cover every closed set"));
    }
}

TEST_CASE("separating premetric") {
    SECTION("worked value at depth one") {
        const auto dom = punctured_line(1);
        const auto g = gdelta_premetric(dom, 1.0, 0.75);
        // bound(1/4) + (1/2) * t/(1+t) with t = |3 - 5| = 2, i.e. 1/5 + 1/3.
        REQUIRE_THAT(g.value, Catch::Matchers::WithinAbs(8.0 / 15.0, 1e-12));
        REQUIRE(g.truncation_bound == 0.5);
    }

    SECTION("coincident points are at distance zero") {
        const auto dom = punctured_line();
        const auto g = gdelta_premetric(dom, 0.25, 0.25);
        REQUIRE(g.value == 0.0);
        REQUIRE(g.truncation_bound == std::pow(2.0, -32));
    }

    SECTION("symmetric in its two arguments") {
        const auto dom = punctured_line();
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(0.55, 2.0);
        for (int trial = 0; trial < 100; ++trial) {
            const double x = u(rng), y = u(rng);
            REQUIRE(gdelta_premetric(dom, x, y).value ==
                    gdelta_premetric(dom, y, x).value);
        }
    }

    SECTION("points on a removed set are outside the domain") {
        const auto dom = punctured_line();
        REQUIRE_THROWS_WITH(gdelta_premetric(dom, 0.5, 0.3),
                            Catch::Matchers::ContainsSubstring("first point") &&
                                Catch::Matchers::ContainsSubstring("removed set 1"));
        REQUIRE_THROWS_WITH(gdelta_premetric(dom, 0.3, 0.5),
                            Catch::Matchers::ContainsSubstring("second point"));
        REQUIRE_THROWS_AS(gdelta_premetric(dom, 0.5, 0.3), DomainError);
    }

    SECTION("a sequence closing in on the removed set piles up length") {
        const SequenceSpec<double> seq{
            [](std::size_t i) { return 0.5 + std::pow(2.0, -double(i + 1)); }, 29};
        const auto dom = punctured_line();
        const auto probe = sigma_cauchy_probe(
            seq, [&](double a, double b) { return gdelta_premetric(dom, a, b).value; },
            10.0);
        REQUIRE(probe.verdict == LengthVerdict::ExceededThreshold);
        REQUIRE_THAT(probe.partial_length,
                     Catch::Matchers::WithinAbs(14.548916556840886, 1e-9));
    }
}

TEST_CASE("series transform keeps the divergence verdict") {
    SECTION("the zero series stays at zero on both sides") {
        const auto chk = series_equivalence_check([](std::size_t) { return 0.0; }, 10, 1.0);
        REQUIRE(chk.sum_raw == 0.0);
        REQUIRE(chk.sum_transformed == 0.0);
        REQUIRE(chk.raw_verdict == LengthVerdict::BelowThresholdAtHorizon);
        REQUIRE(chk.transformed_verdict == LengthVerdict::BelowThresholdAtHorizon);
    }

    SECTION("the all-ones series exceeds on both sides") {
        const auto chk = series_equivalence_check([](std::size_t) { return 1.0; }, 100, 10.0);
        REQUIRE(chk.sum_raw == 100.0);
        REQUIRE(chk.sum_transformed == 50.0);
        REQUIRE(chk.raw_verdict == LengthVerdict::ExceededThreshold);
        REQUIRE(chk.transformed_verdict == LengthVerdict::ExceededThreshold);
    }

    SECTION("the halving series stays below on both sides") {
        const auto chk = series_equivalence_check(
            [](std::size_t i) { return std::pow(2.0, -double(i)); }, 50, 10.0);
        REQUIRE(chk.sum_raw == 2.0 - std::pow(2.0, -49));
        REQUIRE_THAT(chk.sum_transformed,
                     Catch::Matchers::WithinAbs(1.2644997803484423, 1e-12));
        REQUIRE(chk.raw_verdict == LengthVerdict::BelowThresholdAtHorizon);
        REQUIRE(chk.transformed_verdict == LengthVerdict::BelowThresholdAtHorizon);
    }

    SECTION("the transform never increases a term") {
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> u(0.0, 3.0);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> terms;
            for (int i = 0; i < 30; ++i) terms.push_back(u(rng));
            const auto chk = series_equivalence_check(
                [&terms](std::size_t i) { return terms[i]; }, terms.size(), 1.0);
            REQUIRE(chk.sum_transformed <= chk.sum_raw);
            if (chk.transformed_verdict == LengthVerdict::ExceededThreshold)
                REQUIRE(chk.raw_verdict == LengthVerdict::ExceededThreshold);
        }
    }

    SECTION("input validation") {
        const auto one = [](std::size_t) { return 1.0; };
        REQUIRE_THROWS_AS(series_equivalence_check(one, 0, 1.0), InputError);
        REQUIRE_THROWS_AS(series_equivalence_check(one, 10, 0.0), InputError);
        REQUIRE_THROWS_WITH(
            series_equivalence_check(
                [](std::size_t i) { return i == 3 ? -1.0 : 1.0; }, 10, 1.0),
            Catch::Matchers::ContainsSubstring("term 3"));
    }
}

TEST_CASE("level sets hold their limits") {
    const auto dom = punctured_line();

    SECTION("a sequence inside the level set keeps its limit inside") {
        const SequenceSpec<double> seq{
            [](std::size_t i) { return 5.0 / 6.0 + std::pow(2.0, -double(i)) / 10.0; }, 30};
        const auto rep = level_set_probe(dom, 1, 4.0, seq, 5.0 / 6.0);
        REQUIRE(rep.precondition_ok);
        REQUIRE(rep.pass);
        REQUIRE(rep.limit_phi.is_finite());
        REQUIRE(rep.limit_phi.raw() <= 4.0);
    }

    SECTION("a constant sequence passes with its own value as the limit") {
        const SequenceSpec<double> seq{[](std::size_t) { return 0.9; }, 10};
        const auto rep = level_set_probe(dom, 1, 4.0, seq);
        REQUIRE(rep.pass);
        REQUIRE(rep.limit_phi == ExtReal(3.4999999999999996));
    }

    SECTION("a term escaping the level set trips the precondition") {
        const SequenceSpec<double> seq{
            [](std::size_t i) { return 0.5 + std::pow(2.0, -double(i)); }, 10};
        const auto rep = level_set_probe(dom, 1, 4.0, seq);
        REQUIRE_FALSE(rep.precondition_ok);
        REQUIRE(rep.first_term_outside == std::size_t{2});
        REQUIRE_FALSE(rep.pass);
    }

    SECTION("the bound must be positive") {
        const SequenceSpec<double> seq{[](std::size_t) { return 0.9; }, 5};
        REQUIRE_THROWS_AS(level_set_probe(dom, 1, 0.0, seq), InputError);
    }
}

TEST_CASE("perturbed minimization over a sampled grid") {
    const auto dom = punctured_line();
    const std::vector<double> grid{0.1, 0.2, 0.3, 0.4};
    const auto identity = [](double x) { return ExtReal(x); };

    SECTION("worked grid walks to the low end") {
        const auto res = perturbed_minimize(dom, grid, identity, 0.1, OrbitBudget{}, 3);
        REQUIRE(res.point == 0.1);
        REQUIRE(res.index == 0);
        REQUIRE(res.certificate.point == 0);
        REQUIRE(res.orbit.points == std::vector<PointId>{3, 0});
        REQUIRE(res.certificate.domination_residual.is_finite());
        REQUIRE_THAT(res.certificate.domination_residual.raw(),
                     Catch::Matchers::WithinAbs(29.0 / 220.0, 1e-12));

        // Brute-force residual recomputation straight from the premetric.
        ExtReal best = ExtReal::infinity();
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const ExtReal r =
                (ExtReal(grid[i]) + 0.1 * gdelta_premetric(dom, grid[i], 0.1).value) -
                grid[0];
            if (r < best) best = r;
        }
        REQUIRE(res.certificate.domination_residual == best);
    }

    SECTION("a perturbation too coarse to move anywhere certifies the start") {
        // At eps = 1 every move is blocked by the separating terms.
        const auto res = perturbed_minimize(dom, grid, identity, 1.0, OrbitBudget{}, 3);
        REQUIRE(res.point == 0.4);
        REQUIRE(res.orbit.points == std::vector<PointId>{3});
        REQUIRE(res.certificate.domination_residual >= ExtReal(0.0));
    }

    SECTION("a singleton grid certifies with an empty minimum") {
        const auto res =
            perturbed_minimize(dom, {0.25}, identity, 0.5, OrbitBudget{}, 0);
        REQUIRE(res.point == 0.25);
        REQUIRE_FALSE(res.certificate.domination_residual.is_finite());
    }

    SECTION("a constant objective stands still with a positive margin") {
        const auto res = perturbed_minimize(
            dom, grid, [](double) { return ExtReal(5.0); }, 0.5, OrbitBudget{}, 2);
        REQUIRE(res.point == 0.3);
        REQUIRE(res.certificate.domination_residual > ExtReal(0.0));
    }

    SECTION("grid points must avoid the removed sets") {
        REQUIRE_THROWS_WITH(
            perturbed_minimize(dom, {0.5, 0.1}, identity, 0.5, OrbitBudget{}, 1),
            Catch::Matchers::ContainsSubstring("index 0") &&
                Catch::Matchers::ContainsSubstring("removed set"));
        REQUIRE_THROWS_AS(
            perturbed_minimize(dom, {0.5, 0.1}, identity, 0.5, OrbitBudget{}, 1),
            DomainError);
    }

    SECTION("input validation") {
        REQUIRE_THROWS_AS(perturbed_minimize(dom, {}, identity, 0.5, OrbitBudget{}, 0),
                          InputError);
        REQUIRE_THROWS_AS(perturbed_minimize(dom, grid, identity, 0.5, OrbitBudget{}, 9),
                          InputError);
        REQUIRE_THROWS_AS(perturbed_minimize(dom, grid, nullptr, 0.5, OrbitBudget{}, 0),
                          InputError);
    }
}
