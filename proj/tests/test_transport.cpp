#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "su2net/transport.hpp"

using namespace su2net;

namespace {

// Random unitary via eigendecomposition of a random Hermitian matrix.
EvolutionMatrix randomUnitary(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
    return numericEvolutionMatrix(CouplingMatrix{0.5 * (a + a.adjoint())}, 1.0);
}

// Direct overlap of the evolved state with the input relocated to a target
// site: the independent check for fidelityClosedForm.
double fidelityByExpansion(const SingleModeState& s, int inputSite, int targetSite,
                           const EvolutionMatrix& u) {
    const TransportResult r = expandState(s, inputSite, u, s.kMax());
    const MultiModeFockState target = localizedState(s, targetSite, u.size(), s.kMax());
    Complex overlap = 0.0;
    for (const auto& [occ, amp] : target.amplitudes) {
        const auto it = r.state.amplitudes.find(occ);
        if (it != r.state.amplitudes.end()) overlap += std::conj(amp) * it->second;
    }
    return std::norm(overlap);
}

}  // namespace

TEST_CASE("expandState basics") {
    SUBCASE("identity evolution leaves the localized state unchanged") {
        const SingleModeState s = coherentState(1.0, 5);
        const EvolutionMatrix id{Matrix::Identity(4, 4), 0.0};
        const TransportResult r = expandState(s, 2, id, 5);
        const MultiModeFockState expected = localizedState(s, 2, 4, 5);
        for (const auto& [occ, amp] : expected.amplitudes) {
            const auto it = r.state.amplitudes.find(occ);
            REQUIRE(it != r.state.amplitudes.end());
            CHECK(std::abs(it->second - amp) < 1e-14);
        }
    }
    SUBCASE("backward identity moves a Fock state to the mirror site") {
        const EvolutionMatrix u = evolutionAtSpecialTime({4, 0.0, 0.0, 1.0}, SpecialTime::Transfer);
        const TransportResult r = expandState(fockState(3, 3), 0, u, 3);
        REQUIRE(r.state.amplitudes.size() == 1);
        const auto& [occ, amp] = *r.state.amplitudes.begin();
        CHECK(occ == Occupation{0, 0, 0, 0, 3});
        CHECK(std::abs(amp - Complex(1.0)) < 1e-14);  // (-i)^(4*3) = 1
    }
    SUBCASE("single photon in the 2x2 network at gt = pi/4") {
        const EvolutionMatrix u = analyticEvolutionMatrix({1, 0.0, 0.0, 1.0}, std::numbers::pi / 4);
        const TransportResult r = expandState(fockState(1, 1), 0, u, 1);
        const double c = std::cos(std::numbers::pi / 4);
        CHECK(std::abs(r.state.amplitudes.at({1, 0}) - Complex(c)) < 1e-13);
        CHECK(std::abs(r.state.amplitudes.at({0, 1}) - Complex(0.0, -c)) < 1e-13);
    }
    SUBCASE("norm conserved for untruncated input") {
        std::mt19937 rng(808);
        const EvolutionMatrix u = randomUnitary(4, rng);
        const SingleModeState s = coherentState(Complex(0.6, 0.5), 6);
        const TransportResult r = expandState(s, 1, u, 6);
        CHECK(r.state.normSquared() == doctest::Approx(s.normSquared()).epsilon(1e-12));
        CHECK(r.lostNorm == 0.0);
    }
    SUBCASE("totalCap truncation reports lost norm") {
        std::mt19937 rng(809);
        const EvolutionMatrix u = randomUnitary(3, rng);
        const SingleModeState s = coherentState(1.0, 6);
        const TransportResult r = expandState(s, 0, u, 3);
        double expectedLost = 0.0;
        for (int k = 4; k <= 6; ++k) expectedLost += std::norm(s.amplitudes[k]);
        CHECK(r.lostNorm == doctest::Approx(expectedLost).epsilon(1e-14));
    }
}

TEST_CASE("closed-form fidelity matches the expansion overlap") {
    std::mt19937 rng(40);
    std::uniform_int_distribution<int> nDist(2, 6);
    std::uniform_int_distribution<int> kDist(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = nDist(rng);
        const EvolutionMatrix u = randomUnitary(n, rng);
        const SingleModeState s = coherentState(Complex(0.9, -0.3), kDist(rng));
        std::uniform_int_distribution<int> site(0, n - 1);
        const int in = site(rng), out = site(rng);
        CHECK(fidelityClosedForm(s, in, out, u) ==
              doctest::Approx(fidelityByExpansion(s, in, out, u)).epsilon(1e-12));
    }
}

TEST_CASE("reconstruction and parity laws") {
    SUBCASE("F = 1 at tau_r for every constructor, twoJ <= 8") {
        for (int twoJ = 1; twoJ <= 8; ++twoJ) {
            const Su2Params p{twoJ, 0.0, 0.4, 1.0};
            const EvolutionMatrix u =
                analyticEvolutionMatrix(p, specialTimes(p).reconstruction);
            for (const SingleModeState& s :
                 {fockState(2, 24), coherentState(1.0, 24), squeezedVacuum(0.5, 0.1, 24),
                  catState(1.0, CatParity::Odd, 23)}) {
                const double f = fidelityClosedForm(s, 0, 0, u);
                CHECK(f == doctest::Approx(s.normSquared() * s.normSquared()).epsilon(1e-10));
            }
        }
    }
    SUBCASE("parity law at half reconstruction") {
        const Su2Params p{3, 0.0, 0.0, 1.0};  // half-integer j
        const EvolutionMatrix u =
            analyticEvolutionMatrix(p, specialTimes(p).halfReconstruction);
        const SingleModeState coh = coherentState(1.0, 30);
        double alternating = 0.0;
        for (int k = 0; k <= coh.kMax(); ++k)
            alternating += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(coh.amplitudes[k]);
        CHECK(fidelityClosedForm(coh, 1, 1, u) ==
              doctest::Approx(alternating * alternating).epsilon(1e-10));

        // even-only and odd-only states fully reconstruct
        const SingleModeState sq = squeezedVacuum(std::sqrt(0.2), 0.0, 30);
        CHECK(fidelityClosedForm(sq, 1, 1, u) ==
              doctest::Approx(sq.normSquared() * sq.normSquared()).epsilon(1e-10));

        // integer j reconstructs any state
        const Su2Params pInt{4, 0.0, 0.0, 1.0};
        const EvolutionMatrix uInt =
            analyticEvolutionMatrix(pInt, specialTimes(pInt).halfReconstruction);
        CHECK(fidelityClosedForm(coh, 0, 0, uInt) ==
              doctest::Approx(coh.normSquared() * coh.normSquared()).epsilon(1e-10));
    }
    SUBCASE("transfer law at tau_t") {
        const SingleModeState coh = coherentState(1.0, 30);
        for (int twoJ : {4, 8}) {
            const Su2Params p{twoJ, 0.0, 0.0, 1.0};
            const EvolutionMatrix u = analyticEvolutionMatrix(p, *specialTimes(p).transfer);
            CHECK(fidelityClosedForm(coh, 0, twoJ, u) ==
                  doctest::Approx(coh.normSquared() * coh.normSquared()).epsilon(1e-9));
        }
        for (int twoJ : {1, 2, 3, 5}) {
            const Su2Params p{twoJ, 0.0, 0.0, 1.0};
            const EvolutionMatrix u = analyticEvolutionMatrix(p, *specialTimes(p).transfer);
            CHECK(fidelityClosedForm(coh, 0, twoJ, u) < 1.0 - 1e-3);
        }
    }
}

TEST_CASE("fidelity trace") {
    SUBCASE("decoupled limit keeps F near 1 at the zero-detuning site") {
        const Su2Params p{2, 0.0, 200.0, 0.1};
        std::vector<double> grid;
        for (int i = 0; i < 30; ++i) grid.push_back(0.02 * (i + 1));
        const SingleModeState s = coherentState(1.0, 10);
        for (const auto& point : fidelityTrace(p, s, 1, 1, grid)) CHECK(point.fidelity > 0.99);
    }
    SUBCASE("twoJ=4 coherent input peaks at the mirror site at gt = pi/2") {
        const Su2Params p{4, 0.0, 0.0, 1.0};
        std::vector<double> grid;
        const int points = 201;
        for (int i = 0; i < points; ++i)
            grid.push_back(1e-9 + std::numbers::pi * i / double(points - 1));
        const SingleModeState s = coherentState(1.0, 12);
        const auto trace = fidelityTrace(p, s, 0, 4, grid);
        size_t best = 0;
        for (size_t i = 1; i < trace.size(); ++i)
            if (trace[i].fidelity > trace[best].fidelity) best = i;
        CHECK(std::abs(trace[best].t - std::numbers::pi / 2) < 0.02);
        CHECK(trace[best].fidelity > 0.999);
    }
    SUBCASE("rejects a non-monotone grid") {
        CHECK_THROWS_AS(
            fidelityTrace({2, 0.0, 0.0, 1.0}, coherentState(1.0, 4), 0, 0, {0.0, 0.2, 0.1}),
            std::invalid_argument);
    }
}

TEST_CASE("photon distribution and total photon expectation") {
    SUBCASE("identity evolution: distribution stays at the input site") {
        const SingleModeState s = coherentState(1.0, 6);
        const EvolutionMatrix id{Matrix::Identity(3, 3), 0.0};
        const TransportResult r = expandState(s, 1, id, 6);
        const auto atInput = sitePhotonDistribution(r, 1, 6);
        for (int k = 0; k <= 6; ++k)
            CHECK(atInput[k] == doctest::Approx(std::norm(s.amplitudes[k])).epsilon(1e-13));
        const auto elsewhere = sitePhotonDistribution(r, 0, 6);
        CHECK(elsewhere[0] == doctest::Approx(s.normSquared()).epsilon(1e-13));
        for (int k = 1; k <= 6; ++k) CHECK(elsewhere[k] == 0.0);
    }
    SUBCASE("distribution preserved at the mirror site at tau_t") {
        for (int twoJ : {2, 3, 5}) {
            const Su2Params p{twoJ, 0.0, 0.0, 1.0};
            const SingleModeState s = coherentState(1.0, 8);
            const EvolutionMatrix u = analyticEvolutionMatrix(p, *specialTimes(p).transfer);
            const TransportResult r = expandState(s, 0, u, 8);
            const auto dist = sitePhotonDistribution(r, twoJ, 8);
            for (int k = 0; k <= 8; ++k)
                CHECK(dist[k] == doctest::Approx(std::norm(s.amplitudes[k])).epsilon(1e-9));
        }
    }
    SUBCASE("photon number conserved along a trace") {
        const Su2Params p{3, 0.0, 0.7, 1.1};
        const SingleModeState s = coherentState(1.0, 10);
        const double expected = s.meanPhotonNumber();
        for (double t : {0.0, 0.3, 0.9, 2.2}) {
            const TransportResult r = expandState(s, 0, analyticEvolutionMatrix(p, t), 10);
            CHECK(totalPhotonExpectation(r) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("fock input keeps its photon count") {
        const TransportResult r =
            expandState(fockState(3, 3), 0, analyticEvolutionMatrix({2, 0.0, 0.0, 1.0}, 0.8), 3);
        CHECK(totalPhotonExpectation(r) == doctest::Approx(3.0).epsilon(1e-13));
    }
}
