#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "loev/errors.hpp"

namespace loev {

// A small corpus of ready-to-run scenario files covering every kind. Each
// entry records the exit code a run is expected to produce, so the corpus
// doubles as an end-to-end fixture set.
struct SeedScenario {
    const char* name;
    int expected_exit;
    const char* text;
};

inline const std::vector<SeedScenario>& seeded_scenarios() {
    static const std::vector<SeedScenario> seeds = {
        {"check_space_quasimetric", 0, R"({
  "kind": "check-space",
  "space": {
    "labels": ["a", "b", "c"],
    "dist": [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
  }
})"},

        {"orbit_two_cycle", 3, R"({
  "kind": "orbit",
  "space": {
    "labels": ["a", "b"],
    "dist": [[0, 1], [1, 0]]
  },
  "params": {
    "map": {"a": ["b"], "b": ["a"]},
    "x0": "a"
  },
  "budget": {"max_steps": 10}
})"},

        {"orbit_forced_chain", 0, R"({
  "kind": "orbit",
  "space": {
    "labels": ["a", "b", "c", "d"],
    "dist": [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
  },
  "params": {
    "map": {"a": ["b"], "b": ["c"], "c": ["d"], "d": []},
    "x0": "a"
  }
})"},

        {"ekeland_premetric_asymmetric", 0, R"({
  "kind": "ekeland",
  "space": {
    "labels": ["a", "b"],
    "dist": [[0, 1], [3, 0]]
  },
  "objective": {"a": 1, "b": 0},
  "params": {"eps": 1, "x0": "a"}
})"},

        {"ekeland_metric_line", 0, R"({
  "kind": "ekeland-metric",
  "space": {
    "labels": ["0", "1", "2"],
    "dist": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
  },
  "objective": {"0": 2, "1": 1, "2": 0},
  "params": {"lambda": 0.5, "x0": "0"}
})"},

        {"caristi_line", 0, R"({
  "kind": "caristi",
  "space": {
    "labels": ["0", "1", "2"],
    "dist": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
  },
  "objective": {"0": 2, "1": 1, "2": 0},
  "params": {
    "map": {"0": ["1"], "1": ["2"], "2": ["2"]},
    "x0": "0"
  }
})"},

        {"takahashi_flat", 2, R"({
  "kind": "takahashi",
  "space": {
    "labels": ["a", "b"],
    "dist": [[0, 5], [5, 0]]
  },
  "objective": {"a": 1, "b": 0},
  "params": {"x0": "a"}
})"},

        {"oettli_line", 0, R"({
  "kind": "oettli-thera",
  "space": {
    "labels": ["0", "1", "2"],
    "dist": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
  },
  "params": {
    "p": [[0, -1, -2], [1, 0, -1], [2, 1, 0]],
    "x0": "0",
    "psi": ["2"]
  }
})"},

        {"fabian_line", 0, R"({
  "kind": "fabian-preiss",
  "space": {
    "labels": ["0", "1", "2"],
    "dist": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
  },
  "params": {
    "pseudometrics": [
      [[0, 1, 2], [1, 0, 1], [2, 1, 0]],
      [[0, 2, 4], [2, 0, 2], [4, 2, 0]]
    ],
    "objectives": [
      {"0": 2, "1": 1, "2": 0},
      {"0": 4, "1": 2, "2": 0}
    ],
    "i0": 0,
    "x0": "0"
  }
})"},

        {"counterexample_pow2", 0, R"({
  "kind": "counterexample",
  "params": {
    "sequence": {"type": "geometric", "scale": 1, "ratio": 0.5},
    "horizon": 40,
    "eps": 0.5
  }
})"},

        {"gdelta_minimize_grid", 0, R"({
  "kind": "gdelta-minimize",
  "params": {
    "domain": {
      "host": {"type": "interval", "a": 0, "b": 1},
      "closed_sets": [{"type": "points", "values": [0.5]}],
      "depth": 32
    },
    "grid": [0.1, 0.2, 0.3, 0.4],
    "objective_values": [0.1, 0.2, 0.3, 0.4],
    "eps": 0.1,
    "x0_index": 3
  }
})"},

        {"series_check_harmonic", 0, R"({
  "kind": "series-check",
  "params": {
    "terms": {"type": "harmonic"},
    "horizon": 100,
    "threshold": 3
  }
})"},
    };
    return seeds;
}

// Write the corpus into a directory as <name>.json files; returns the paths.
inline std::vector<std::string> seed_scenarios(const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create directory: " + dir);
    std::vector<std::string> paths;
    for (const auto& seed : seeded_scenarios()) {
        fs::path path = fs::path(dir) / (std::string(seed.name) + ".json");
        std::ofstream out(path);
        if (!out) throw InputError("cannot write scenario file: " + path.string());
        out << seed.text << '\n';
        paths.push_back(path.string());
    }
    return paths;
}

} // namespace loev
