#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "loev/errors.hpp"

namespace loev {

// Premetric derived from a base point and a strictly descending radius ladder:
//
//   g(center, y) = sum_k min(1, d(center, y) / r_k) / 2^k
//
// Each rung contributes a clipped bump; the value lands in [0, 1 - 2^-K].
template <class Point, class Metric>
double build_premetric_from_base(const Point& center, const std::vector<double>& radii,
                                 Metric&& host_metric, const Point& y) {
    if (radii.empty()) throw InputError("premetric base: at least one radius required");
    if (!(radii.front() > 0.0) || !std::isfinite(radii.front()))
        throw InputError("premetric base: radii must be positive and finite");
    for (std::size_t k = 0; k + 1 < radii.size(); ++k) {
        if (!(radii[k + 1] > 0.0) || !std::isfinite(radii[k + 1]) || !(radii[k] > radii[k + 1]))
            throw InputError("premetric base: radii must be strictly descending and positive");
    }
    const double d = host_metric(center, y);
    if (!(d >= 0.0) || !std::isfinite(d))
        throw InputError("premetric base: host metric must return finite nonnegative values");
    double sum = 0.0;
    double weight = 1.0;
    for (double r : radii) {
        weight *= 0.5;
        sum += weight * std::min(1.0, d / r);
    }
    return sum;
}

struct NeighbournetValue {
    double value = 0.0;
    bool truncated = false; // still inside every net at the probing depth
};

// Distance-like h built from a nested family of neighbourhoods around x:
// h(x, y) = 1/n for the first level n the point y has exited (level 0 is the
// whole space). Every level up to `depth` is queried, so an oracle that is
// not actually nested is caught on the probed range; a point that never exits
// gets the truncation value 1/(depth+1) with the flag set.
template <class Point, class Membership>
NeighbournetValue build_h_from_neighbournets(Membership&& contains, std::size_t depth,
                                             const Point& x, const Point& y) {
    if (depth == 0) throw InputError("neighbournet: depth must be at least 1");
    if (x == y) return {0.0, false};
    std::optional<std::size_t> first_exit;
    for (std::size_t n = 1; n <= depth; ++n) {
        const bool in = contains(n, x, y);
        if (!in && !first_exit) first_exit = n;
        if (in && first_exit)
            throw InputError("neighbournet: nestedness violated at level " + std::to_string(n) +
                             " (point re-enters after exiting at level " +
                             std::to_string(*first_exit) + ")");
    }
    if (!first_exit) return {1.0 / static_cast<double>(depth + 1), true};
    return {1.0 / static_cast<double>(*first_exit), false};
}

// Sum of g(next, current) along a sequence of at least one point.
template <class PointSeq, class G>
double g_length(const PointSeq& points, G&& g) {
    if (std::size(points) == 0)
        throw InputError("g_length: sequence must contain at least one point");
    double total = 0.0;
    auto it = std::begin(points);
    auto prev = it;
    for (++it; it != std::end(points); prev = it, ++it) total += g(*it, *prev);
    return total;
}

} // namespace loev
