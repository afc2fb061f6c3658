#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loev/errors.hpp"
#include "loev/ext_real.hpp"

namespace loev {

// A lazily generated sequence probed up to a fixed horizon (max index).
template <class Point>
struct SequenceSpec {
    std::function<Point(std::size_t)> generator;
    std::size_t horizon = 0;

    std::vector<Point> materialize() const {
        if (!generator) throw InputError("sequence: generator missing");
        if (horizon < 1) throw InputError("sequence: horizon must be at least 1");
        std::vector<Point> out;
        out.reserve(horizon + 1);
        for (std::size_t i = 0; i <= horizon; ++i) out.push_back(generator(i));
        return out;
    }
};

enum class LengthVerdict { ExceededThreshold, BelowThresholdAtHorizon };

inline const char* to_string(LengthVerdict v) {
    return v == LengthVerdict::ExceededThreshold ? "ExceededThreshold"
                                                 : "BelowThresholdAtHorizon";
}

struct CauchyProbe {
    double partial_length = 0.0;
    LengthVerdict verdict = LengthVerdict::BelowThresholdAtHorizon;
};

// Partial g-length of the materialized sequence against a divergence threshold.
template <class Point, class G>
CauchyProbe sigma_cauchy_probe(const SequenceSpec<Point>& seq, G&& g, double threshold) {
    if (!(threshold > 0.0)) throw InputError("probe: threshold must be positive");
    const auto pts = seq.materialize();
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += g(pts[i + 1], pts[i]);
    return {len, len >= threshold ? LengthVerdict::ExceededThreshold
                                  : LengthVerdict::BelowThresholdAtHorizon};
}

template <class Point>
struct DedupeResult {
    std::vector<Point> points;
    // One value occupies the whole remaining tail of the prefix (with at least
    // two occurrences): the sequence may have a constant subsequence, which
    // the extraction below cannot rule out at a finite horizon.
    bool possible_constant_subsequence = false;
};

// Extract a pairwise-distinct subsequence: repeatedly take the current value,
// then resume right after its last occurrence in the prefix. The head element
// z_0 is skipped by construction (extraction starts at index 1).
template <class Point>
DedupeResult<Point> dedupe_sequence(const SequenceSpec<Point>& seq) {
    const auto z = seq.materialize();
    const std::size_t h = z.size() - 1;
    DedupeResult<Point> out;
    std::size_t k = 1;
    while (k <= h) {
        out.points.push_back(z[k]);
        std::size_t last = k;
        for (std::size_t j = k + 1; j <= h; ++j)
            if (z[j] == z[k]) last = j;
        if (last == h && k < h) {
            bool constant_tail = true;
            for (std::size_t j = k; j <= h && constant_tail; ++j)
                if (!(z[j] == z[k])) constant_tail = false;
            if (constant_tail) out.possible_constant_subsequence = true;
        }
        k = last + 1;
    }
    return out;
}

// Frozen finite prefix of the divergence counterexample: distinct points m,
// tail-sum objective f (zero at the horizon boundary, by convention), and the
// next-element rule. Off the prefix the rule returns all of it and the
// objective is +inf.
template <class Point>
struct CounterexampleKit {
    std::vector<Point> m;
    std::vector<double> f;      // f[i] = sum of jumps from i to the end; f.back() == 0
    std::vector<double> jumps;  // jumps[i] = g(m[i+1], m[i])
    bool tail_truncated = true;
    bool possible_constant_subsequence = false;

    std::size_t size() const { return m.size(); }

    std::optional<std::size_t> index_of(const Point& p) const {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == p) return i;
        return std::nullopt;
    }

    std::vector<std::size_t> s_indices(std::size_t i) const {
        if (i + 1 < m.size()) return {i + 1};
        return {}; // successor lies beyond the horizon
    }

    std::vector<Point> s_host(const Point& p) const {
        if (const auto i = index_of(p)) {
            std::vector<Point> out;
            for (std::size_t j : s_indices(*i)) out.push_back(m[j]);
            return out;
        }
        return m;
    }

    ExtReal f_host(const Point& p) const {
        if (const auto i = index_of(p)) return ExtReal(f[*i]);
        return ExtReal::infinity();
    }
};

// Deduplicate, accumulate jumps, and fill f backwards so that
// f[i] - f[i+1] == jumps[i] holds exactly in floating point.
template <class Point, class G>
CounterexampleKit<Point> build_counterexample(const SequenceSpec<Point>& seq, G&& g) {
    auto dd = dedupe_sequence(seq);
    if (dd.points.size() < 2)
        throw InputError("counterexample: need at least two distinct points in the prefix");
    CounterexampleKit<Point> kit;
    kit.m = std::move(dd.points);
    kit.possible_constant_subsequence = dd.possible_constant_subsequence;
    const std::size_t n = kit.m.size();
    kit.jumps.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double j = g(kit.m[i + 1], kit.m[i]);
        if (!std::isfinite(j))
            throw InputError("counterexample: infinite partial g-length at transition " +
                             std::to_string(i));
        if (!(j > 0.0))
            throw InputError("counterexample: zero jump between distinct points at transition " +
                             std::to_string(i));
        kit.jumps[i] = j;
    }
    kit.f.assign(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;) kit.f[i] = kit.f[i + 1] + kit.jumps[i];
    return kit;
}

struct KitCaristiReport {
    bool no_fixed_point = true;    // x never belongs to its own successor set
    bool caristi_condition = true; // f(next) + g(next, x) <= f(x) at each checked transition
    std::size_t transitions_checked = 0;
    std::optional<std::size_t> first_failure;
    std::string boundary_note;
};

// The prefix kit must have no fixed point of its rule while still satisfying
// the descent condition at every transition below the horizon; the last point
// is excluded, its successor lies beyond the prefix.
template <class Point>
KitCaristiReport verify_caristi_unfixed(const CounterexampleKit<Point>& kit) {
    KitCaristiReport rep;
    const std::size_t n = kit.size();
    rep.transitions_checked = n - 1;
    rep.boundary_note = "last prefix point excluded: its successor lies beyond the horizon";
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (kit.m[i + 1] == kit.m[i]) {
            rep.no_fixed_point = false;
            if (!rep.first_failure) rep.first_failure = i;
        }
        if (!(kit.f[i + 1] + kit.jumps[i] <= kit.f[i])) {
            rep.caristi_condition = false;
            if (!rep.first_failure) rep.first_failure = i;
        }
    }
    return rep;
}

struct KitEkelandReport {
    std::size_t checked = 0;   // candidate endpoints below the horizon
    std::size_t confirmed = 0; // candidates whose successor strictly improves on them
    bool all_confirmed = false;
    std::optional<std::size_t> first_unconfirmed;
    std::string boundary_note;
};

// No prefix point below the horizon can serve as a variational endpoint: its
// successor witnesses f(next) + eps * g(next, x) < f(x). The last point is
// undecidable at the horizon.
template <class Point>
KitEkelandReport verify_ekeland_fails(const CounterexampleKit<Point>& kit, double eps = 0.5) {
    if (!(eps >= 0.0)) throw InputError("counterexample: eps must be nonnegative");
    KitEkelandReport rep;
    const std::size_t n = kit.size();
    rep.checked = n - 1;
    rep.boundary_note = "last prefix point undecidable at the horizon";
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (kit.f[i + 1] + eps * kit.jumps[i] < kit.f[i])
            ++rep.confirmed;
        else if (!rep.first_unconfirmed)
            rep.first_unconfirmed = i;
    }
    rep.all_confirmed = rep.confirmed == rep.checked;
    return rep;
}

} // namespace loev
