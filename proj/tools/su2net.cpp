#include <CLI11.hpp>
#include <cstdio>
#include <exception>

#include "su2net/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"su(2) resonator network state-transfer simulator"};
    app.require_subcommand(1);

    std::string configPath;
    std::string outDir = ".";
    double tolerance = 1e-10;
    bool oracleOn = false, oracleOff = false;

    CLI::App* run = app.add_subcommand("run", "run a scenario config");
    run->add_option("config", configPath, "scenario config file")->required();
    run->add_option("--out-dir", outDir, "output directory");
    run->add_option("--tolerance", tolerance, "unitarity breach threshold");
    run->add_flag("--oracle", oracleOn, "force the brute-force oracle cross-check on");
    run->add_flag("--no-oracle", oracleOff, "force the brute-force oracle cross-check off");

    int maxTwoJ = 8;
    double limitTol = 1e-9;
    CLI::App* limits = app.add_subcommand("check-limits", "verify the special-time limit matrices");
    limits->add_option("--max-twoj", maxTwoJ, "largest twoJ to check")->required();
    limits->add_option("--tolerance", limitTol, "elementwise tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            su2net::cli::ScenarioOptions options;
            options.outDir = outDir;
            options.tolerance = tolerance;
            if (oracleOn) options.oracleOverride = true;
            if (oracleOff) options.oracleOverride = false;
            su2net::cli::runScenario(su2net::cli::loadConfig(configPath), options);
        } else {
            const auto report = su2net::cli::checkLimits(maxTwoJ, limitTol);
            std::fputs(su2net::cli::formatLimitReport(report).c_str(), stdout);
            if (!report.allPass) return 3;
        }
    } catch (const su2net::cli::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const su2net::cli::InvariantBreach& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
