#include "su2net/transport.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace su2net {

namespace {

int threadBudget(size_t work) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("SU2NET_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(n)) n = static_cast<unsigned>(cap);
    }
    return static_cast<int>(std::min<size_t>(n, std::max<size_t>(work, 1)));
}

// Walks all compositions of `remaining` photons over modes site..N-1,
// accumulating the product of U-row powers and inverse factorial roots.
void enumerate(int mode, int remaining, Complex partial, const std::vector<std::vector<Complex>>& rowPowers,
               const std::vector<double>& halfLogFact, Occupation& occ, MultiModeFockState& out) {
    const int nModes = static_cast<int>(occ.size());
    if (mode == nModes - 1) {
        occ[mode] = remaining;
        out.insert(occ, partial * rowPowers[mode][remaining] *
                            std::exp(-halfLogFact[remaining]));
        occ[mode] = 0;
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        occ[mode] = k;
        enumerate(mode + 1, remaining - k,
                  partial * rowPowers[mode][k] * std::exp(-halfLogFact[k]), rowPowers,
                  halfLogFact, occ, out);
    }
    occ[mode] = 0;
}

}  // namespace

TransportResult expandState(const SingleModeState& s, int inputSite, const EvolutionMatrix& u,
                            int totalCap) {
    const int nModes = u.size();
    if (inputSite < 0 || inputSite >= nModes)
        throw std::out_of_range("expandState: input site out of range");
    const int kTop = std::min(s.kMax(), totalCap);

    // U(m,q)^e for q = 0..N-1, e = 0..kTop
    std::vector<std::vector<Complex>> rowPowers(nModes, std::vector<Complex>(kTop + 1, 1.0));
    for (int q = 0; q < nModes; ++q)
        for (int e = 1; e <= kTop; ++e) rowPowers[q][e] = rowPowers[q][e - 1] * u.u(inputSite, q);

    std::vector<double> halfLogFact(kTop + 1, 0.0);
    for (int k = 0; k <= kTop; ++k) halfLogFact[k] = 0.5 * std::lgamma(k + 1.0);

    TransportResult result{MultiModeFockState{nModes, totalCap, {}}, u.t, inputSite, 0.0};
    Occupation occ(nModes, 0);
    for (int k = 0; k <= kTop; ++k) {
        const Complex alpha = s.amplitudes[k];
        if (std::abs(alpha) < MultiModeFockState::kAmplitudeFloor) continue;
        enumerate(0, k, alpha * std::exp(halfLogFact[k]), rowPowers, halfLogFact, occ,
                  result.state);
    }
    for (int k = kTop + 1; k <= s.kMax(); ++k) result.lostNorm += std::norm(s.amplitudes[k]);
    return result;
}

double fidelityClosedForm(const SingleModeState& s, int inputSite, int targetSite,
                          const EvolutionMatrix& u) {
    if (inputSite < 0 || inputSite >= u.size() || targetSite < 0 || targetSite >= u.size())
        throw std::out_of_range("fidelityClosedForm: site index out of range");
    const Complex element = u.u(inputSite, targetSite);
    Complex overlap = 0.0;
    Complex power = 1.0;
    for (int k = 0; k <= s.kMax(); ++k) {
        overlap += std::norm(s.amplitudes[k]) * power;
        power *= element;
    }
    return std::norm(overlap);
}

std::vector<FidelityPoint> fidelityTrace(const Su2Params& params, const SingleModeState& s,
                                         int inputSite, int targetSite,
                                         const std::vector<double>& timeGrid) {
    for (size_t i = 1; i < timeGrid.size(); ++i)
        if (timeGrid[i] <= timeGrid[i - 1])
            throw std::invalid_argument("fidelityTrace: time grid must be strictly increasing");
    std::vector<FidelityPoint> trace(timeGrid.size());
    const int nThreads = threadBudget(timeGrid.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < timeGrid.size(); i = next.fetch_add(1)) {
            const EvolutionMatrix u = analyticEvolutionMatrix(params, timeGrid[i]);
            trace[i] = FidelityPoint{timeGrid[i], fidelityClosedForm(s, inputSite, targetSite, u)};
        }
    };
    if (nThreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nThreads);
        for (int i = 0; i < nThreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return trace;
}

std::vector<double> sitePhotonDistribution(const TransportResult& r, int site, int kMax) {
    if (site < 0 || site >= r.state.nModes)
        throw std::out_of_range("sitePhotonDistribution: site out of range");
    std::vector<double> dist(kMax + 1, 0.0);
    for (const auto& [occ, amp] : r.state.amplitudes) {
        if (occ[site] <= kMax) dist[occ[site]] += std::norm(amp);
    }
    return dist;
}

double totalPhotonExpectation(const TransportResult& r) {
    double sum = 0.0;
    for (const auto& [occ, amp] : r.state.amplitudes) {
        int total = 0;
        for (int k : occ) total += k;
        sum += total * std::norm(amp);
    }
    return sum;
}

}  // namespace su2net
