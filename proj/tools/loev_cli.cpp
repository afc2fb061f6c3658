// Command-line front end: run or validate scenario files, or write the
// built-in scenario corpus to a directory.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <loev/loev.hpp>

namespace {

int write_report(const loev::Report& rep, const std::string& path, double ms) {
    loev::json data = rep.data;
    data["timing_ms"] = ms;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write report to " << path << '\n';
        return 1;
    }
    out << data.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit engine for generalized-distance spaces"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string report_path;
    std::optional<std::size_t> budget_steps;
    std::optional<double> budget_length;
    bool trace = false;

    CLI::App* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--budget-steps", budget_steps, "override the step budget");
    run->add_option("--budget-length", budget_length,
                    "override the orbit length threshold");
    run->add_option("--report", report_path, "write a JSON report to this path");
    run->add_flag("--trace", trace, "include the full orbit trace");

    CLI::App* validate = app.add_subcommand("validate", "check hypotheses without solving");
    validate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    validate->add_option("--report", report_path, "write a JSON report to this path");

    std::string seed_dir;
    CLI::App* seed = app.add_subcommand("seed-scenarios",
                                        "write the built-in scenario corpus");
    seed->add_option("dir", seed_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (seed->parsed()) {
            for (const auto& path : loev::seed_scenarios(seed_dir))
                std::cout << path << '\n';
            return 0;
        }

        const auto t0 = std::chrono::steady_clock::now();
        loev::Scenario sc = loev::Scenario::load(scenario_path);
        loev::Report rep;
        if (run->parsed()) {
            loev::RunOptions opt;
            opt.budget_steps = budget_steps;
            opt.budget_length = budget_length;
            opt.trace = trace;
            rep = loev::run_scenario(sc, opt);
        } else {
            rep = loev::validate_scenario(sc);
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::cout << rep.human;
        if (!report_path.empty()) {
            if (int rc = write_report(rep, report_path, ms); rc != 0) return rc;
        }
        return rep.exit_code;
    } catch (const loev::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
