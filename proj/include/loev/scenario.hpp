#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "loev/distance.hpp"
#include "loev/errors.hpp"
#include "loev/ext_real.hpp"
#include "loev/gdelta.hpp"
#include "loev/numfmt.hpp"
#include "loev/orbit.hpp"
#include "loev/semicomplete.hpp"

namespace loev {

using nlohmann::json;

enum class ScenarioKind {
    Orbit,
    Ekeland,
    EkelandMetric,
    Caristi,
    Takahashi,
    OettliThera,
    FabianPreiss,
    Counterexample,
    GdeltaMinimize,
    CheckSpace,
    SeriesCheck,
};

inline const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Orbit: return "orbit";
        case ScenarioKind::Ekeland: return "ekeland";
        case ScenarioKind::EkelandMetric: return "ekeland-metric";
        case ScenarioKind::Caristi: return "caristi";
        case ScenarioKind::Takahashi: return "takahashi";
        case ScenarioKind::OettliThera: return "oettli-thera";
        case ScenarioKind::FabianPreiss: return "fabian-preiss";
        case ScenarioKind::Counterexample: return "counterexample";
        case ScenarioKind::GdeltaMinimize: return "gdelta-minimize";
        case ScenarioKind::CheckSpace: return "check-space";
        case ScenarioKind::SeriesCheck: return "series-check";
    }
    return "?";
}

inline ScenarioKind parse_kind(const std::string& s) {
    for (ScenarioKind k :
         {ScenarioKind::Orbit, ScenarioKind::Ekeland, ScenarioKind::EkelandMetric,
          ScenarioKind::Caristi, ScenarioKind::Takahashi, ScenarioKind::OettliThera,
          ScenarioKind::FabianPreiss, ScenarioKind::Counterexample,
          ScenarioKind::GdeltaMinimize, ScenarioKind::CheckSpace, ScenarioKind::SeriesCheck})
        if (s == to_string(k)) return k;
    throw InputError("field 'kind': unknown scenario kind '" + s + "'");
}

namespace scenario_detail {

inline const json& require(const json& j, const char* field, const std::string& ctx) {
    if (!j.is_object()) throw InputError(ctx + ": expected an object");
    auto it = j.find(field);
    if (it == j.end()) throw InputError(ctx + ": missing field '" + field + "'");
    return *it;
}

inline double number(const json& v, const std::string& ctx) {
    if (!v.is_number()) throw InputError(ctx + ": expected a number");
    return v.get<double>();
}

inline std::size_t index_number(const json& v, const std::string& ctx) {
    if (!v.is_number_unsigned()) throw InputError(ctx + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

// A numeric value or the token "inf".
inline ExtReal ext_value(const json& v, const std::string& ctx) {
    if (v.is_number()) return ExtReal(v.get<double>());
    if (v.is_string() && v.get<std::string>() == "inf") return ExtReal::infinity();
    throw InputError(ctx + ": expected a number or \"inf\"");
}

inline json ext_json(ExtReal v) {
    if (v.is_finite()) return json(v.raw());
    return json("inf");
}

} // namespace scenario_detail

// Named closed-form sequence generators usable from scenario files.
struct SequenceGen {
    enum class Type { Constant, Geometric, Harmonic, List };
    Type type = Type::Geometric;
    double value = 0.0;             // constant
    double scale = 1.0, ratio = 0.5; // geometric: scale * ratio^i
    std::vector<double> values;      // list

    double at(std::size_t i) const {
        switch (type) {
            case Type::Constant: return value;
            case Type::Geometric: return scale * std::pow(ratio, static_cast<double>(i));
            case Type::Harmonic: return 1.0 / static_cast<double>(i + 1);
            case Type::List:
                if (i >= values.size())
                    throw InputError("sequence list: index " + std::to_string(i) +
                                     " beyond the provided values");
                return values[i];
        }
        return 0.0;
    }

    std::function<double(std::size_t)> fn() const {
        return [g = *this](std::size_t i) { return g.at(i); };
    }

    static SequenceGen from_json(const json& j, const std::string& ctx) {
        using scenario_detail::number;
        using scenario_detail::require;
        SequenceGen g;
        const std::string type = require(j, "type", ctx).get<std::string>();
        if (type == "constant") {
            g.type = Type::Constant;
            g.value = number(require(j, "value", ctx), ctx + ".value");
        } else if (type == "geometric") {
            g.type = Type::Geometric;
            g.scale = number(require(j, "scale", ctx), ctx + ".scale");
            g.ratio = number(require(j, "ratio", ctx), ctx + ".ratio");
        } else if (type == "harmonic") {
            g.type = Type::Harmonic;
        } else if (type == "list") {
            g.type = Type::List;
            const json& vals = require(j, "values", ctx);
            if (!vals.is_array()) throw InputError(ctx + ".values: expected an array");
            for (const auto& v : vals) g.values.push_back(number(v, ctx + ".values"));
        } else {
            throw InputError(ctx + ".type: unknown generator '" + type + "'");
        }
        return g;
    }

    json to_json() const {
        json j;
        switch (type) {
            case Type::Constant:
                j["type"] = "constant";
                j["value"] = value;
                break;
            case Type::Geometric:
                j["type"] = "geometric";
                j["scale"] = scale;
                j["ratio"] = ratio;
                break;
            case Type::Harmonic: j["type"] = "harmonic"; break;
            case Type::List:
                j["type"] = "list";
                j["values"] = values;
                break;
        }
        return j;
    }
};

// Closed-set descriptors on a one-dimensional host: a finite point list, or
// the complement of an open interval. The tag set is open for extension.
struct ClosedSetSpec {
    enum class Type { Points, IntervalComplement };
    Type type = Type::Points;
    std::vector<double> points;
    double a = 0.0, b = 0.0; // F = host minus the open interval (a, b)

    SetDistance oracle() const {
        if (type == Type::Points) {
            if (points.empty()) throw InputError("closed set: point list must be nonempty");
            return [pts = points](double x) {
                double best = std::numeric_limits<double>::infinity();
                for (double p : pts) best = std::min(best, std::abs(x - p));
                return best;
            };
        }
        if (!(a < b)) throw InputError("closed set: interval-complement needs a < b");
        return [a = a, b = b](double x) {
            if (x <= a || x >= b) return 0.0;
            return std::min(x - a, b - x);
        };
    }

    static ClosedSetSpec from_json(const json& j, const std::string& ctx) {
        using scenario_detail::number;
        using scenario_detail::require;
        ClosedSetSpec c;
        const std::string type = require(j, "type", ctx).get<std::string>();
        if (type == "points") {
            c.type = Type::Points;
            const json& vals = require(j, "values", ctx);
            if (!vals.is_array() || vals.empty())
                throw InputError(ctx + ".values: expected a nonempty array");
            for (const auto& v : vals) c.points.push_back(number(v, ctx + ".values"));
        } else if (type == "interval-complement") {
            c.type = Type::IntervalComplement;
            c.a = number(require(j, "a", ctx), ctx + ".a");
            c.b = number(require(j, "b", ctx), ctx + ".b");
        } else {
            throw InputError(ctx + ".type: unknown closed-set type '" + type + "'");
        }
        return c;
    }

    json to_json() const {
        json j;
        if (type == Type::Points) {
            j["type"] = "points";
            j["values"] = points;
        } else {
            j["type"] = "interval-complement";
            j["a"] = a;
            j["b"] = b;
        }
        return j;
    }
};

struct GDeltaSpec {
    double host_a = 0.0, host_b = 1.0;
    std::vector<ClosedSetSpec> closed;
    std::size_t depth = 32;

    GDeltaDomain domain() const {
        GDeltaDomain dom;
        dom.host_metric = [](double x, double y) { return std::abs(x - y); };
        for (const auto& c : closed) dom.closed_sets.push_back(c.oracle());
        dom.depth = std::max(depth, dom.closed_sets.size());
        return dom;
    }

    static GDeltaSpec from_json(const json& j, const std::string& ctx) {
        using scenario_detail::index_number;
        using scenario_detail::number;
        using scenario_detail::require;
        GDeltaSpec g;
        const json& host = require(j, "host", ctx);
        const std::string type = require(host, "type", ctx + ".host").get<std::string>();
        if (type != "interval")
            throw InputError(ctx + ".host.type: unknown host type '" + type + "'");
        g.host_a = number(require(host, "a", ctx + ".host"), ctx + ".host.a");
        g.host_b = number(require(host, "b", ctx + ".host"), ctx + ".host.b");
        if (!(g.host_a < g.host_b)) throw InputError(ctx + ".host: interval needs a < b");
        const json& sets = require(j, "closed_sets", ctx);
        if (!sets.is_array()) throw InputError(ctx + ".closed_sets: expected an array");
        for (std::size_t i = 0; i < sets.size(); ++i)
            g.closed.push_back(ClosedSetSpec::from_json(
                sets[i], ctx + ".closed_sets[" + std::to_string(i) + "]"));
        if (auto it = j.find("depth"); it != j.end())
            g.depth = index_number(*it, ctx + ".depth");
        return g;
    }

    json to_json() const {
        json j;
        j["host"] = {{"type", "interval"}, {"a", host_a}, {"b", host_b}};
        json sets = json::array();
        for (const auto& c : closed) sets.push_back(c.to_json());
        j["closed_sets"] = std::move(sets);
        j["depth"] = depth;
        return j;
    }
};

// One parsed scenario file. Field population depends on the kind; labels are
// resolved to indices at parse time, unresolved ones are reported together.
struct Scenario {
    ScenarioKind kind = ScenarioKind::CheckSpace;

    // Finite-space payload.
    std::vector<std::string> labels;
    DistanceTable dist;
    std::vector<ExtReal> objective;                  // aligned with labels
    std::vector<std::vector<PointId>> map;           // orbit S / caristi T
    std::vector<std::vector<ExtReal>> p;             // oettli
    std::vector<PointId> psi;                        // oettli, sorted indices
    std::vector<DistanceTable> pseudometrics;        // fabian
    std::vector<std::vector<ExtReal>> multi_objectives; // fabian, aligned with labels
    std::size_t i0 = 0;
    PointId x0 = 0;
    double eps = 0.5;
    double lambda = 0.5;
    bool idempotent_mode = false;

    // Sequence payloads.
    SequenceGen sequence;
    std::size_t horizon = 0;
    double threshold = 0.0;

    // Grid payload.
    GDeltaSpec gdelta;
    std::vector<double> grid;
    std::vector<ExtReal> grid_objective;
    std::size_t x0_index = 0;

    std::optional<std::size_t> budget_steps;
    std::optional<double> budget_length;

    bool has_space() const {
        switch (kind) {
            case ScenarioKind::Counterexample:
            case ScenarioKind::GdeltaMinimize:
            case ScenarioKind::SeriesCheck: return false;
            default: return true;
        }
    }

    bool has_objective() const {
        switch (kind) {
            case ScenarioKind::Ekeland:
            case ScenarioKind::EkelandMetric:
            case ScenarioKind::Caristi:
            case ScenarioKind::Takahashi: return true;
            default: return false;
        }
    }

    static Scenario parse(const json& j);
    static Scenario parse_text(const std::string& text);
    static Scenario load(const std::string& path);
    json to_json() const;

    std::optional<PointId> index_of_label(const std::string& s) const {
        for (PointId i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return i;
        return std::nullopt;
    }

private:
    PointId resolve_label(const json& v, const std::string& ctx) const {
        if (!v.is_string()) throw InputError(ctx + ": expected a point label string");
        const std::string s = v.get<std::string>();
        for (PointId i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return i;
        throw InputError(ctx + ": unresolved labels: " + s);
    }
};

inline Scenario Scenario::parse(const json& j) {
    using namespace scenario_detail;
    Scenario sc;
    sc.kind = parse_kind(require(j, "kind", "scenario").get<std::string>());

    if (sc.has_space()) {
        const json& space = require(j, "space", "scenario");
        const json& jlabels = require(space, "labels", "space");
        if (!jlabels.is_array() || jlabels.empty())
            throw InputError("space.labels: expected a nonempty array");
        for (const auto& l : jlabels) {
            if (!l.is_string()) throw InputError("space.labels: labels must be strings");
            sc.labels.push_back(l.get<std::string>());
        }
        for (std::size_t i = 0; i < sc.labels.size(); ++i)
            for (std::size_t k = i + 1; k < sc.labels.size(); ++k)
                if (sc.labels[i] == sc.labels[k])
                    throw InputError("space.labels: duplicate label '" + sc.labels[i] + "'");
        const json& jdist = require(space, "dist", "space");
        if (!jdist.is_array() || jdist.size() != sc.labels.size())
            throw InputError("space.dist: expected " + std::to_string(sc.labels.size()) +
                             " rows");
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < jdist.size(); ++i) {
            const json& row = jdist[i];
            if (!row.is_array() || row.size() != sc.labels.size())
                throw InputError("space.dist: row " + std::to_string(i) + " must have " +
                                 std::to_string(sc.labels.size()) + " entries");
            std::vector<double> r;
            for (const auto& v : row)
                r.push_back(number(v, "space.dist[" + std::to_string(i) + "]"));
            rows.push_back(std::move(r));
        }
        sc.dist = DistanceTable::from_rows(rows);
    }

    if (sc.has_objective()) {
        const json& jobj = require(j, "objective", "scenario");
        if (!jobj.is_object()) throw InputError("objective: expected a label-to-value map");
        sc.objective.assign(sc.labels.size(), ExtReal(0.0));
        std::vector<char> seen(sc.labels.size(), 0);
        std::string unresolved;
        for (auto it = jobj.begin(); it != jobj.end(); ++it) {
            const auto idx = sc.index_of_label(it.key());
            if (!idx) {
                unresolved += (unresolved.empty() ? "" : ", ") + it.key();
                continue;
            }
            sc.objective[*idx] = ext_value(it.value(), "objective." + it.key());
            seen[*idx] = 1;
        }
        if (!unresolved.empty())
            throw InputError("objective: unresolved labels: " + unresolved);
        std::string missing;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) missing += (missing.empty() ? "" : ", ") + sc.labels[i];
        if (!missing.empty())
            throw InputError("objective: missing values for labels: " + missing);
    }

    const json empty_params = json::object();
    const json& params = j.contains("params") ? j.at("params") : empty_params;

    auto parse_map = [&](const char* field) {
        const json& jmap = require(params, field, "params");
        if (!jmap.is_object()) throw InputError(std::string("params.") + field +
                                                ": expected a label-to-list map");
        sc.map.assign(sc.labels.size(), {});
        std::vector<char> seen(sc.labels.size(), 0);
        std::string unresolved;
        for (auto it = jmap.begin(); it != jmap.end(); ++it) {
            PointId from;
            try {
                from = sc.resolve_label(json(it.key()), std::string("params.") + field);
            } catch (const InputError&) {
                unresolved += (unresolved.empty() ? "" : ", ") + it.key();
                continue;
            }
            seen[from] = 1;
            if (!it.value().is_array())
                throw InputError(std::string("params.") + field + "." + it.key() +
                                 ": expected an array of labels");
            for (const auto& v : it.value()) {
                if (!v.is_string() || !sc.index_of_label(v.get<std::string>())) {
                    unresolved += (unresolved.empty() ? "" : ", ") +
                                  (v.is_string() ? v.get<std::string>() : v.dump());
                    continue;
                }
                sc.map[from].push_back(*sc.index_of_label(v.get<std::string>()));
            }
        }
        if (!unresolved.empty())
            throw InputError(std::string("params.") + field +
                             ": unresolved labels: " + unresolved);
        std::string missing;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) missing += (missing.empty() ? "" : ", ") + sc.labels[i];
        if (!missing.empty())
            throw InputError(std::string("params.") + field +
                             ": missing entries for labels: " + missing);
    };

    switch (sc.kind) {
        case ScenarioKind::CheckSpace: break;
        case ScenarioKind::Orbit: {
            parse_map("map");
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            if (auto it = params.find("idempotent"); it != params.end()) {
                if (!it->is_boolean())
                    throw InputError("params.idempotent: expected a boolean");
                sc.idempotent_mode = it->get<bool>();
            }
            break;
        }
        case ScenarioKind::Ekeland: {
            sc.eps = number(require(params, "eps", "params"), "params.eps");
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            break;
        }
        case ScenarioKind::EkelandMetric: {
            sc.lambda = number(require(params, "lambda", "params"), "params.lambda");
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            break;
        }
        case ScenarioKind::Caristi: {
            parse_map("map");
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            break;
        }
        case ScenarioKind::Takahashi: {
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            break;
        }
        case ScenarioKind::OettliThera: {
            const json& jp = require(params, "p", "params");
            if (!jp.is_array() || jp.size() != sc.labels.size())
                throw InputError("params.p: expected " + std::to_string(sc.labels.size()) +
                                 " rows");
            for (std::size_t i = 0; i < jp.size(); ++i) {
                const json& row = jp[i];
                if (!row.is_array() || row.size() != sc.labels.size())
                    throw InputError("params.p: row " + std::to_string(i) + " must have " +
                                     std::to_string(sc.labels.size()) + " entries");
                std::vector<ExtReal> r;
                for (const auto& v : row)
                    r.push_back(ext_value(v, "params.p[" + std::to_string(i) + "]"));
                sc.p.push_back(std::move(r));
            }
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            const json& jpsi = require(params, "psi", "params");
            if (!jpsi.is_array()) throw InputError("params.psi: expected an array of labels");
            std::string unresolved;
            for (const auto& v : jpsi) {
                if (!v.is_string() || !sc.index_of_label(v.get<std::string>())) {
                    unresolved += (unresolved.empty() ? "" : ", ") +
                                  (v.is_string() ? v.get<std::string>() : v.dump());
                    continue;
                }
                sc.psi.push_back(*sc.index_of_label(v.get<std::string>()));
            }
            if (!unresolved.empty())
                throw InputError("params.psi: unresolved labels: " + unresolved);
            std::sort(sc.psi.begin(), sc.psi.end());
            sc.psi.erase(std::unique(sc.psi.begin(), sc.psi.end()), sc.psi.end());
            break;
        }
        case ScenarioKind::FabianPreiss: {
            const json& jps = require(params, "pseudometrics", "params");
            if (!jps.is_array() || jps.empty())
                throw InputError("params.pseudometrics: expected a nonempty array of tables");
            for (std::size_t t = 0; t < jps.size(); ++t) {
                const json& jt = jps[t];
                const std::string ctx = "params.pseudometrics[" + std::to_string(t) + "]";
                if (!jt.is_array() || jt.size() != sc.labels.size())
                    throw InputError(ctx + ": expected " + std::to_string(sc.labels.size()) +
                                     " rows");
                std::vector<std::vector<double>> rows;
                for (std::size_t i = 0; i < jt.size(); ++i) {
                    const json& row = jt[i];
                    if (!row.is_array() || row.size() != sc.labels.size())
                        throw InputError(ctx + ": row " + std::to_string(i) + " must have " +
                                         std::to_string(sc.labels.size()) + " entries");
                    std::vector<double> r;
                    for (const auto& v : row) r.push_back(number(v, ctx));
                    rows.push_back(std::move(r));
                }
                sc.pseudometrics.push_back(DistanceTable::from_rows(rows));
            }
            const json& jobjs = require(params, "objectives", "params");
            if (!jobjs.is_array() || jobjs.size() != jps.size())
                throw InputError("params.objectives: expected one map per pseudometric");
            for (std::size_t t = 0; t < jobjs.size(); ++t) {
                const json& jo = jobjs[t];
                const std::string ctx = "params.objectives[" + std::to_string(t) + "]";
                if (!jo.is_object()) throw InputError(ctx + ": expected a label-to-value map");
                std::vector<ExtReal> vals(sc.labels.size(), ExtReal(0.0));
                std::vector<char> seen(sc.labels.size(), 0);
                for (auto it = jo.begin(); it != jo.end(); ++it) {
                    const auto idx = sc.resolve_label(json(it.key()), ctx);
                    vals[idx] = ext_value(it.value(), ctx + "." + it.key());
                    seen[idx] = 1;
                }
                for (std::size_t i = 0; i < seen.size(); ++i)
                    if (!seen[i])
                        throw InputError(ctx + ": missing value for label " + sc.labels[i]);
                sc.multi_objectives.push_back(std::move(vals));
            }
            sc.i0 = index_number(require(params, "i0", "params"), "params.i0");
            sc.x0 = sc.resolve_label(require(params, "x0", "params"), "params.x0");
            break;
        }
        case ScenarioKind::Counterexample: {
            sc.sequence = SequenceGen::from_json(require(params, "sequence", "params"),
                                                 "params.sequence");
            sc.horizon = index_number(require(params, "horizon", "params"), "params.horizon");
            if (auto it = params.find("eps"); it != params.end())
                sc.eps = number(*it, "params.eps");
            break;
        }
        case ScenarioKind::GdeltaMinimize: {
            sc.gdelta = GDeltaSpec::from_json(require(params, "domain", "params"),
                                              "params.domain");
            const json& jgrid = require(params, "grid", "params");
            if (!jgrid.is_array() || jgrid.empty())
                throw InputError("params.grid: expected a nonempty array");
            for (const auto& v : jgrid) sc.grid.push_back(number(v, "params.grid"));
            const json& jvals = require(params, "objective_values", "params");
            if (!jvals.is_array() || jvals.size() != sc.grid.size())
                throw InputError("params.objective_values: expected one value per grid point");
            for (const auto& v : jvals)
                sc.grid_objective.push_back(ext_value(v, "params.objective_values"));
            sc.eps = number(require(params, "eps", "params"), "params.eps");
            if (auto it = params.find("x0_index"); it != params.end())
                sc.x0_index = index_number(*it, "params.x0_index");
            if (sc.x0_index >= sc.grid.size())
                throw InputError("params.x0_index: out of range");
            break;
        }
        case ScenarioKind::SeriesCheck: {
            sc.sequence = SequenceGen::from_json(require(params, "terms", "params"),
                                                 "params.terms");
            sc.horizon = index_number(require(params, "horizon", "params"), "params.horizon");
            sc.threshold = number(require(params, "threshold", "params"), "params.threshold");
            break;
        }
    }

    if (auto it = j.find("budget"); it != j.end()) {
        if (!it->is_object()) throw InputError("budget: expected an object");
        if (auto s = it->find("max_steps"); s != it->end())
            sc.budget_steps = index_number(*s, "budget.max_steps");
        if (auto l = it->find("length_threshold"); l != it->end())
            sc.budget_length = number(*l, "budget.length_threshold");
    }

    return sc;
}

inline Scenario Scenario::parse_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i)
            if (text[i] == '\n') ++line;
        throw InputError("parse error at line " + std::to_string(line) + ": " + e.what());
    }
    return parse(j);
}

inline Scenario Scenario::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

inline json Scenario::to_json() const {
    using scenario_detail::ext_json;
    json j;
    j["kind"] = to_string(kind);
    if (has_space()) {
        json rows = json::array();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < labels.size(); ++k) row.push_back(dist.at(i, k));
            rows.push_back(std::move(row));
        }
        j["space"] = {{"labels", labels}, {"dist", std::move(rows)}};
    }
    if (has_objective()) {
        json o = json::object();
        for (std::size_t i = 0; i < labels.size(); ++i) o[labels[i]] = ext_json(objective[i]);
        j["objective"] = std::move(o);
    }
    json params = json::object();
    auto map_json = [&]() {
        json m = json::object();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            json lst = json::array();
            for (PointId t : map[i]) lst.push_back(labels[t]);
            m[labels[i]] = std::move(lst);
        }
        return m;
    };
    switch (kind) {
        case ScenarioKind::CheckSpace: break;
        case ScenarioKind::Orbit:
            params["map"] = map_json();
            params["x0"] = labels[x0];
            if (idempotent_mode) params["idempotent"] = true;
            break;
        case ScenarioKind::Ekeland:
            params["eps"] = eps;
            params["x0"] = labels[x0];
            break;
        case ScenarioKind::EkelandMetric:
            params["lambda"] = lambda;
            params["x0"] = labels[x0];
            break;
        case ScenarioKind::Caristi:
            params["map"] = map_json();
            params["x0"] = labels[x0];
            break;
        case ScenarioKind::Takahashi: params["x0"] = labels[x0]; break;
        case ScenarioKind::OettliThera: {
            json rows = json::array();
            for (const auto& row : p) {
                json r = json::array();
                for (ExtReal v : row) r.push_back(ext_json(v));
                rows.push_back(std::move(r));
            }
            params["p"] = std::move(rows);
            params["x0"] = labels[x0];
            json jpsi = json::array();
            for (PointId i : psi) jpsi.push_back(labels[i]);
            params["psi"] = std::move(jpsi);
            break;
        }
        case ScenarioKind::FabianPreiss: {
            json tables = json::array();
            for (const auto& t : pseudometrics) {
                json rows = json::array();
                for (std::size_t i = 0; i < labels.size(); ++i) {
                    json row = json::array();
                    for (std::size_t k = 0; k < labels.size(); ++k) row.push_back(t.at(i, k));
                    rows.push_back(std::move(row));
                }
                tables.push_back(std::move(rows));
            }
            params["pseudometrics"] = std::move(tables);
            json objs = json::array();
            for (const auto& vals : multi_objectives) {
                json o = json::object();
                for (std::size_t i = 0; i < labels.size(); ++i)
                    o[labels[i]] = ext_json(vals[i]);
                objs.push_back(std::move(o));
            }
            params["objectives"] = std::move(objs);
            params["i0"] = i0;
            params["x0"] = labels[x0];
            break;
        }
        case ScenarioKind::Counterexample:
            params["sequence"] = sequence.to_json();
            params["horizon"] = horizon;
            params["eps"] = eps;
            break;
        case ScenarioKind::GdeltaMinimize: {
            params["domain"] = gdelta.to_json();
            params["grid"] = grid;
            json vals = json::array();
            for (ExtReal v : grid_objective) vals.push_back(ext_json(v));
            params["objective_values"] = std::move(vals);
            params["eps"] = eps;
            params["x0_index"] = x0_index;
            break;
        }
        case ScenarioKind::SeriesCheck:
            params["terms"] = sequence.to_json();
            params["horizon"] = horizon;
            params["threshold"] = threshold;
            break;
    }
    if (!params.empty()) j["params"] = std::move(params);
    if (budget_steps || budget_length) {
        json b = json::object();
        if (budget_steps) b["max_steps"] = *budget_steps;
        if (budget_length) b["length_threshold"] = *budget_length;
        j["budget"] = std::move(b);
    }
    return j;
}

// Materialize a counterexample kit as a runnable finite-space scenario, so the
// solvers can be driven against the truncated prefix.
inline Scenario scenario_from_kit(const CounterexampleKit<double>& kit,
                                  const std::function<double(double, double)>& g,
                                  ScenarioKind kind, double eps = 0.5) {
    if (kind != ScenarioKind::Caristi && kind != ScenarioKind::Ekeland &&
        kind != ScenarioKind::Takahashi)
        throw InputError("kit scenario: kind must be caristi, ekeland, or takahashi");
    Scenario sc;
    sc.kind = kind;
    const std::size_t n = kit.size();
    sc.dist = DistanceTable(n);
    for (std::size_t i = 0; i < n; ++i) {
        sc.labels.push_back("x" + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j)
            sc.dist.set(i, j, i == j ? 0.0 : g(kit.m[i], kit.m[j]));
    }
    for (double v : kit.f) sc.objective.push_back(ExtReal(v));
    sc.x0 = 0;
    sc.eps = eps;
    if (kind == ScenarioKind::Caristi) {
        sc.map.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) sc.map[i] = kit.s_indices(i);
    }
    return sc;
}

} // namespace loev
