#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "loev/errors.hpp"
#include "loev/ext_real.hpp"
#include "loev/numfmt.hpp"

namespace loev {

using PointId = std::size_t;

// Square table of pairwise distances, row-major: at(i, j) is the distance
// from i to j. The container itself is a plain holder so classification can
// inspect malformed data; validate() enforces the premetric ground rules.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::size_t n) : n_(n), e_(n * n, 0.0) {}

    static DistanceTable from_rows(const std::vector<std::vector<double>>& rows) {
        DistanceTable t(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw InputError("distance table: row " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(rows.size()));
            for (std::size_t j = 0; j < rows.size(); ++j) t.set(i, j, rows[i][j]);
        }
        return t;
    }

    std::size_t size() const { return n_; }
    double at(PointId i, PointId j) const { return e_[i * n_ + j]; }
    void set(PointId i, PointId j, double v) { e_[i * n_ + j] = v; }

    bool operator==(const DistanceTable&) const = default;

    // Ground rules for any distance-like table: finite entries, zero diagonal,
    // strictly positive off the diagonal. Violations are malformed input, not
    // a legal weaker distance class.
    void validate() const {
        for (PointId i = 0; i < n_; ++i) {
            for (PointId j = 0; j < n_; ++j) {
                const double v = at(i, j);
                if (!std::isfinite(v))
                    throw InputError("distance entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") = " + format_double(v) +
                                     ": entries must be finite");
                if (v < 0.0)
                    throw InputError("distance entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") = " + format_double(v) +
                                     ": negative entries are not allowed");
                if (i == j && v != 0.0)
                    throw InputError("distance entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") = " + format_double(v) +
                                     ": the diagonal must be zero");
                if (i != j && v == 0.0)
                    throw InputError("distance entry (" + std::to_string(i) + "," +
                                     std::to_string(j) +
                                     ") = 0: distinct points must be separated");
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<double> e_;
};

enum class DistanceKind { Metric, QuasiMetric, SymmetricPremetric, Premetric };

inline const char* to_string(DistanceKind k) {
    switch (k) {
        case DistanceKind::Metric: return "Metric";
        case DistanceKind::QuasiMetric: return "QuasiMetric";
        case DistanceKind::SymmetricPremetric: return "SymmetricPremetric";
        case DistanceKind::Premetric: return "Premetric";
    }
    return "?";
}

struct SymmetryViolation {
    PointId i = 0, j = 0; // d(i,j) != d(j,i)
};

struct TriangleViolation {
    PointId i = 0, k = 0, j = 0; // d(i,j) > d(i,k) + d(k,j)
};

struct DistanceClass {
    DistanceKind kind = DistanceKind::Premetric;
    std::vector<SymmetryViolation> symmetry_violations;
    std::vector<TriangleViolation> triangle_violations;

    bool symmetric() const { return symmetry_violations.empty(); }
    bool triangle() const { return triangle_violations.empty(); }
};

// Strongest class whose axioms all hold, with every violating pair/triple of
// the failed stronger axioms. Comparisons are exact: scenario authors are
// expected to separate values they consider distinct.
inline DistanceClass classify_distance(const DistanceTable& t) {
    t.validate();
    DistanceClass c;
    const std::size_t n = t.size();
    for (PointId i = 0; i < n; ++i)
        for (PointId j = i + 1; j < n; ++j)
            if (t.at(i, j) != t.at(j, i)) c.symmetry_violations.push_back({i, j});
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j) {
            if (i == j) continue;
            for (PointId k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (t.at(i, j) > t.at(i, k) + t.at(k, j))
                    c.triangle_violations.push_back({i, k, j});
            }
        }
    if (c.symmetric() && c.triangle())
        c.kind = DistanceKind::Metric;
    else if (c.triangle())
        c.kind = DistanceKind::QuasiMetric;
    else if (c.symmetric())
        c.kind = DistanceKind::SymmetricPremetric;
    else
        c.kind = DistanceKind::Premetric;
    return c;
}

// A finite point set with labels, a validated distance table, and its class.
class FiniteSpace {
public:
    static FiniteSpace create(std::vector<std::string> labels, DistanceTable dist) {
        if (labels.size() != dist.size())
            throw InputError("space: " + std::to_string(labels.size()) + " labels for a " +
                             std::to_string(dist.size()) + "-point distance table");
        if (labels.empty()) throw InputError("space: at least one point required");
        FiniteSpace s;
        s.labels_ = std::move(labels);
        for (std::size_t i = 0; i < s.labels_.size(); ++i) {
            if (!s.index_.emplace(s.labels_[i], i).second)
                throw InputError("space: duplicate label '" + s.labels_[i] + "'");
        }
        s.class_ = classify_distance(dist);
        s.dist_ = std::move(dist);
        return s;
    }

    std::size_t size() const { return labels_.size(); }
    const std::string& label(PointId i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const DistanceTable& dist() const { return dist_; }
    const DistanceClass& cls() const { return class_; }

    std::optional<PointId> index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, PointId> index_;
    DistanceTable dist_;
    DistanceClass class_;
};

// Objective values per point. Proper = at least one finite entry.
class ObjectiveTable {
public:
    static ObjectiveTable create(std::vector<ExtReal> values) {
        if (values.empty()) throw InputError("objective: at least one point required");
        const bool proper =
            std::any_of(values.begin(), values.end(), [](ExtReal v) { return v.is_finite(); });
        if (!proper)
            throw InputError("objective: improper (every value is inf)");
        ObjectiveTable f;
        f.values_ = std::move(values);
        return f;
    }

    std::size_t size() const { return values_.size(); }
    ExtReal at(PointId i) const { return values_[i]; }
    const std::vector<ExtReal>& values() const { return values_; }

    // Minimum value; finite because the table is proper.
    double min_value() const {
        double m = std::numeric_limits<double>::infinity();
        for (const ExtReal& v : values_)
            if (v.is_finite()) m = std::min(m, v.raw());
        return m;
    }

private:
    std::vector<ExtReal> values_;
};

} // namespace loev
