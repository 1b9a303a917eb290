#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "su2net/states.hpp"
#include "su2net/transport.hpp"

namespace su2net::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantBreach : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateSpec {
    std::string kind;  // fock | coherent | squeezed | cat
    Complex alpha;     // coherent / cat
    double r = 0.0;    // squeezed
    double phi = 0.0;  // squeezed
    int k = 0;         // fock
    std::string parity = "even";  // cat
    int kMax = 12;
};

struct OracleConfig {
    bool enabled = false;
    int perModeCap = 5;
    int totalCap = 5;
};

struct ScenarioConfig {
    Su2Params network;
    StateSpec input;
    int inputSite = 0;
    std::vector<int> targetSites;
    double gtMax = 0.0;  // time grid end, in units of 1/g
    int points = 0;
    OracleConfig oracle;
    std::string csvPath;
    std::string summaryPath;
};

/// Parse the flat key = value config format. Errors carry the line number.
ScenarioConfig parseConfig(const std::string& text);
ScenarioConfig loadConfig(const std::string& path);

SingleModeState buildInputState(const StateSpec& spec);

struct ScenarioOptions {
    std::string outDir = ".";
    double tolerance = 1e-10;  // unitarity breach threshold
    std::optional<bool> oracleOverride;
};

/// Run a scenario: fidelity-trace CSV plus a JSON summary (special times,
/// limit matrices, fidelities at the special times, oracle overlap when
/// enabled). Throws ConfigError / InvariantBreach; the CLI maps those to
/// exit codes 2 and 3.
void runScenario(const ScenarioConfig& config, const ScenarioOptions& options);

struct LimitRow {
    int twoJ;
    double reconstructionError;
    double halfError;
    double transferError;
    bool pass;
};

struct LimitReport {
    std::vector<LimitRow> rows;
    bool allPass = true;
};

/// Verify U(tau_r) = 1, U(tau_r/2) = (-1)^2j 1, U(tau_t) = (-i)^2j J for
/// every twoJ up to maxTwoJ at omega = 0, g = 1.
LimitReport checkLimits(int maxTwoJ, double tolerance = 1e-9);

std::string formatLimitReport(const LimitReport& report);

}  // namespace su2net::cli
