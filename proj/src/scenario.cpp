#include "su2net/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "su2net/io.hpp"
#include "su2net/oracle.hpp"

namespace su2net::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

struct KeyValue {
    std::string value;
    int line;
    mutable bool used = false;
};

class KvMap {
public:
    void put(const std::string& key, const std::string& value, int line) {
        if (entries_.count(key)) fail(line, "duplicate key '" + key + "'");
        entries_[key] = KeyValue{value, line};
    }
    const KeyValue* find(const std::string& key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }
    std::string requireString(const std::string& key) const {
        const KeyValue* kv = find(key);
        if (!kv) throw ConfigError("config: missing required key '" + key + "'");
        return kv->value;
    }
    double requireDouble(const std::string& key) const { return toDouble(key, *require(key)); }
    int requireInt(const std::string& key) const { return toInt(key, *require(key)); }
    double getDouble(const std::string& key, double fallback) const {
        const KeyValue* kv = find(key);
        return kv ? toDouble(key, *kv) : fallback;
    }
    int getInt(const std::string& key, int fallback) const {
        const KeyValue* kv = find(key);
        return kv ? toInt(key, *kv) : fallback;
    }
    std::string getString(const std::string& key, const std::string& fallback) const {
        const KeyValue* kv = find(key);
        return kv ? kv->value : fallback;
    }
    bool getBool(const std::string& key, bool fallback) const {
        const KeyValue* kv = find(key);
        if (!kv) return fallback;
        if (kv->value == "true" || kv->value == "1") return true;
        if (kv->value == "false" || kv->value == "0") return false;
        fail(kv->line, "expected boolean for '" + key + "', got '" + kv->value + "'");
    }
    void checkAllUsed() const {
        for (const auto& [key, kv] : entries_)
            if (!kv.used) fail(kv.line, "unknown key '" + key + "'");
    }

private:
    const KeyValue* require(const std::string& key) const {
        const KeyValue* kv = find(key);
        if (!kv) throw ConfigError("config: missing required key '" + key + "'");
        return kv;
    }
    static double toDouble(const std::string& key, const KeyValue& kv) {
        try {
            size_t pos = 0;
            const double v = std::stod(kv.value, &pos);
            if (pos != kv.value.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            fail(kv.line, "expected number for '" + key + "', got '" + kv.value + "'");
        }
    }
    static int toInt(const std::string& key, const KeyValue& kv) {
        try {
            size_t pos = 0;
            const int v = std::stoi(kv.value, &pos);
            if (pos != kv.value.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            fail(kv.line, "expected integer for '" + key + "', got '" + kv.value + "'");
        }
    }
    std::map<std::string, KeyValue> entries_;
};

std::string trim(const std::string& s) {
    const size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<int> parseIntList(const std::string& value, int line) {
    std::vector<int> out;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(line, "empty entry in integer list");
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail(line, "expected integer list, got '" + value + "'");
        }
    }
    if (out.empty()) fail(line, "empty integer list");
    return out;
}

double maxUnitarityError(const EvolutionMatrix& u) {
    const int n = u.size();
    return (u.u * u.u.adjoint() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

double maxDiff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

ScenarioConfig parseConfig(const std::string& text) {
    KvMap kv;
    std::stringstream stream(text);
    std::string rawLine;
    int lineNo = 0;
    while (std::getline(stream, rawLine)) {
        ++lineNo;
        const std::string stripped = trim(rawLine.substr(0, rawLine.find('#')));
        if (stripped.empty()) continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) fail(lineNo, "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) fail(lineNo, "expected 'key = value'");
        kv.put(key, value, lineNo);
    }

    ScenarioConfig config;
    config.network.twoJ = kv.requireInt("network.twoJ");
    config.network.omega = kv.getDouble("network.omega", 0.0);
    config.network.omega0 = kv.getDouble("network.omega0", 0.0);
    config.network.g = kv.requireDouble("network.g");
    if (config.network.twoJ < 1) throw ConfigError("config: network.twoJ must be >= 1");
    if (!(config.network.g > 0)) throw ConfigError("config: network.g must be > 0");

    config.input.kind = kv.requireString("input.kind");
    config.input.alpha = Complex(kv.getDouble("input.alpha.re", 0.0),
                                 kv.getDouble("input.alpha.im", 0.0));
    config.input.r = kv.getDouble("input.r", 0.0);
    config.input.phi = kv.getDouble("input.phi", 0.0);
    config.input.k = kv.getInt("input.k", 0);
    config.input.parity = kv.getString("input.parity", "even");
    config.input.kMax = kv.getInt("input.kMax", 12);
    config.inputSite = kv.requireInt("input.site");

    const KeyValue* targets = kv.find("targets");
    if (!targets) throw ConfigError("config: missing required key 'targets'");
    config.targetSites = parseIntList(targets->value, targets->line);

    config.gtMax = kv.requireDouble("grid.gtMax");
    config.points = kv.requireInt("grid.points");
    if (config.points < 2) throw ConfigError("config: grid.points must be >= 2");
    if (!(config.gtMax > 0)) throw ConfigError("config: grid.gtMax must be > 0");

    config.oracle.enabled = kv.getBool("oracle.enabled", false);
    config.oracle.perModeCap = kv.getInt("oracle.perModeCap", 5);
    config.oracle.totalCap = kv.getInt("oracle.totalCap", 5);

    config.csvPath = kv.getString("output.csv", "trace.csv");
    config.summaryPath = kv.getString("output.summary", "summary.json");
    kv.checkAllUsed();

    const int n = config.network.twoJ + 1;
    if (config.inputSite < 0 || config.inputSite >= n)
        throw ConfigError("config: input.site out of range for this network");
    for (int site : config.targetSites)
        if (site < 0 || site >= n) throw ConfigError("config: target site out of range");
    return config;
}

ScenarioConfig loadConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parseConfig(buffer.str());
}

SingleModeState buildInputState(const StateSpec& spec) {
    if (spec.kind == "fock") return fockState(spec.k, spec.kMax);
    if (spec.kind == "coherent") return coherentState(spec.alpha, spec.kMax);
    if (spec.kind == "squeezed") return squeezedVacuum(spec.r, spec.phi, spec.kMax);
    if (spec.kind == "cat") {
        if (spec.parity != "even" && spec.parity != "odd")
            throw ConfigError("config: input.parity must be 'even' or 'odd'");
        return catState(spec.alpha, spec.parity == "even" ? CatParity::Even : CatParity::Odd,
                        spec.kMax);
    }
    throw ConfigError("config: unknown input.kind '" + spec.kind + "'");
}

void runScenario(const ScenarioConfig& config, const ScenarioOptions& options) {
    const Su2Params& params = config.network;
    const SingleModeState input = buildInputState(config.input);
    const int totalCap = input.kMax();

    std::vector<double> grid(config.points);
    for (int i = 0; i < config.points; ++i)
        grid[i] = config.gtMax * i / double(config.points - 1) / params.g;

    std::filesystem::create_directories(options.outDir);
    const std::filesystem::path outDir(options.outDir);

    std::ofstream csv(outDir / config.csvPath);
    if (!csv) throw std::runtime_error("cannot open CSV output file");
    csv << "t,gt";
    for (int site : config.targetSites) csv << ",fidelity_site_" << site;
    csv << ",total_photon,norm\n";

    for (double t : grid) {
        const EvolutionMatrix u = analyticEvolutionMatrix(params, t);
        const double unitarityError = maxUnitarityError(u);
        if (unitarityError > options.tolerance)
            throw InvariantBreach("unitarity breach at t = " + io::formatDouble(t) +
                                  ": error " + io::formatDouble(unitarityError));
        const TransportResult evolved = expandState(input, config.inputSite, u, totalCap);
        csv << io::formatDouble(t) << ',' << io::formatDouble(params.g * t);
        for (int site : config.targetSites)
            csv << ',' << io::formatDouble(fidelityClosedForm(input, config.inputSite, site, u));
        csv << ',' << io::formatDouble(totalPhotonExpectation(evolved)) << ','
            << io::formatDouble(std::sqrt(evolved.state.normSquared())) << '\n';
    }
    csv.close();

    // Summary: special times, the limit evolution matrices, fidelities there.
    const SpecialTimes times = specialTimes(params);
    json summary;
    summary["network"] = {{"twoJ", params.twoJ},
                          {"omega0", params.omega0},
                          {"omega", params.omega},
                          {"g", params.g},
                          {"effectiveFrequency", effectiveFrequency(params)}};
    summary["specialTimes"]["reconstruction"] = times.reconstruction;
    summary["specialTimes"]["halfReconstruction"] = times.halfReconstruction;
    if (times.transfer) summary["specialTimes"]["transfer"] = *times.transfer;

    const auto report = [&](const char* name, SpecialTime which) {
        const EvolutionMatrix u = evolutionAtSpecialTime(params, which);
        summary["evolutionMatrices"][name] = io::evolutionMatrixToJson(u);
        json fidelities;
        for (int site : config.targetSites)
            fidelities["site_" + std::to_string(site)] =
                fidelityClosedForm(input, config.inputSite, site, u);
        summary["fidelities"][name] = std::move(fidelities);
    };
    report("reconstruction", SpecialTime::Reconstruction);
    report("halfReconstruction", SpecialTime::Half);
    if (times.transfer) report("transfer", SpecialTime::Transfer);

    const bool oracleEnabled = options.oracleOverride.value_or(config.oracle.enabled);
    if (oracleEnabled) {
        const int n = params.twoJ + 1;
        const FockBasis basis(n, config.oracle.perModeCap, config.oracle.totalCap);
        const HamiltonianMatrix h = buildHamiltonian(buildSu2CouplingMatrix(params), basis);
        const double tCompare = times.transfer.value_or(times.halfReconstruction);
        const MultiModeFockState psi0 =
            localizedState(input, config.inputSite, n,
                           std::max(totalCap, config.oracle.totalCap));
        const PropagationResult numeric = propagate(h, psi0, tCompare);
        const TransportResult analytic =
            expandState(input, config.inputSite, analyticEvolutionMatrix(params, tCompare),
                        totalCap);
        const StateComparison cmp = compareStates(analytic.state, numeric.state);
        summary["oracle"] = {{"t", tCompare},
                             {"perModeCap", config.oracle.perModeCap},
                             {"totalCap", config.oracle.totalCap},
                             {"inputLostNorm", numeric.lostNorm},
                             {"overlap", cmp.overlap},
                             {"maxAmpDiff", cmp.maxAmpDiff}};
    }

    std::ofstream summaryOut(outDir / config.summaryPath);
    if (!summaryOut) throw std::runtime_error("cannot open summary output file");
    summaryOut << summary.dump(2) << '\n';
}

LimitReport checkLimits(int maxTwoJ, double tolerance) {
    if (maxTwoJ < 1) throw std::invalid_argument("checkLimits: maxTwoJ must be >= 1");
    LimitReport report;
    for (int twoJ = 1; twoJ <= maxTwoJ; ++twoJ) {
        const Su2Params params{twoJ, 0.0, 0.0, 1.0};
        const SpecialTimes times = specialTimes(params);
        LimitRow row{twoJ, 0.0, 0.0, 0.0, false};
        row.reconstructionError =
            maxDiff(analyticEvolutionMatrix(params, times.reconstruction).u,
                    evolutionAtSpecialTime(params, SpecialTime::Reconstruction).u);
        row.halfError = maxDiff(analyticEvolutionMatrix(params, times.halfReconstruction).u,
                                evolutionAtSpecialTime(params, SpecialTime::Half).u);
        row.transferError = maxDiff(analyticEvolutionMatrix(params, *times.transfer).u,
                                    evolutionAtSpecialTime(params, SpecialTime::Transfer).u);
        row.pass = row.reconstructionError <= tolerance && row.halfError <= tolerance &&
                   row.transferError <= tolerance;
        report.allPass = report.allPass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

std::string formatLimitReport(const LimitReport& report) {
    std::ostringstream out;
    out << "twoJ  |U(tau_r)-1|  |U(tau_r/2)-(-1)^2j 1|  |U(tau_t)-(-i)^2j J|  status\n";
    for (const LimitRow& row : report.rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%4d  %12.3e  %22.3e  %20.3e  %s\n", row.twoJ,
                      row.reconstructionError, row.halfError, row.transferError,
                      row.pass ? "pass" : "FAIL");
        out << line;
    }
    out << (report.allPass ? "all limits pass\n" : "LIMIT CHECK FAILED\n");
    return out.str();
}

}  // namespace su2net::cli
