#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "su2net/evolution.hpp"

using namespace su2net;

namespace {

double maxAbs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double unitarityError(const EvolutionMatrix& u) {
    return maxAbs(u.u * u.u.adjoint() - Matrix::Identity(u.size(), u.size()));
}

}  // namespace

TEST_CASE("analytic diagonalization") {
    SUBCASE("equally spaced eigenvalues, gap Omega") {
        const Diagonalization d = analyticDiagonalization({2, 0.0, 0.0, 1.0});
        CHECK(d.lambda(0) == doctest::Approx(-2.0));
        CHECK(d.lambda(1) == doctest::Approx(0.0));
        CHECK(d.lambda(2) == doctest::Approx(2.0));
    }
    SUBCASE("reconstructs M and is unitary") {
        std::mt19937 rng(5150);
        std::uniform_real_distribution<double> omegaDist(-3.0, 3.0);
        std::uniform_real_distribution<double> gDist(0.2, 3.0);
        std::uniform_int_distribution<int> jDist(1, 10);
        for (int trial = 0; trial < 30; ++trial) {
            const Su2Params p{jDist(rng), 0.0, omegaDist(rng), gDist(rng)};
            const Diagonalization d = analyticDiagonalization(p);
            const int n = p.twoJ + 1;
            CHECK(maxAbs(d.d * d.d.adjoint() - Matrix::Identity(n, n)) < 1e-10);
            const Matrix m = buildSu2CouplingMatrix(p).entries;
            const Matrix rebuilt =
                d.d.adjoint() * d.lambda.cast<Complex>().asDiagonal() * d.d;
            CHECK(maxAbs(rebuilt - m) < 1e-10 * std::max(1.0, maxAbs(m)));
        }
    }
}

TEST_CASE("numeric diagonalization") {
    SUBCASE("scaled identity") {
        const Diagonalization d = numericDiagonalization(CouplingMatrix{Matrix::Identity(3, 3) * 2.5});
        for (int i = 0; i < 3; ++i) CHECK(d.lambda(i) == doctest::Approx(2.5));
    }
    SUBCASE("su(2) spectrum matches the closed form, twoJ <= 12") {
        for (int twoJ = 1; twoJ <= 12; ++twoJ) {
            const Su2Params p{twoJ, 0.0, 1.1, 0.9};
            const double bigOmega = effectiveFrequency(p);
            const Diagonalization d = numericDiagonalization(buildSu2CouplingMatrix(p));
            for (int m = 0; m <= twoJ; ++m)
                CHECK(std::abs(d.lambda(m) - bigOmega * (m - 0.5 * twoJ)) < 1e-10);
        }
    }
    SUBCASE("random Hermitian: diagonalizes to 1e-10") {
        std::mt19937 rng(31337);
        std::normal_distribution<double> gauss;
        Matrix a(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
        const Matrix h = 0.5 * (a + a.adjoint());
        const Diagonalization d = numericDiagonalization(CouplingMatrix{h});
        const Matrix diag = d.d * h * d.d.adjoint();
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                if (r != c) CHECK(std::abs(diag(r, c)) < 1e-10);
    }
    SUBCASE("rejects non-Hermitian input") {
        Matrix bad(2, 2);
        bad << 0.0, 1.0, 2.0, 0.0;
        CHECK_THROWS_AS(numericDiagonalization(CouplingMatrix{bad}), std::invalid_argument);
    }
}

TEST_CASE("evolution matrices") {
    SUBCASE("t = 0 is the identity on both routes") {
        const Su2Params p{3, 0.0, 0.5, 1.0};
        CHECK(maxAbs(analyticEvolutionMatrix(p, 0.0).u - Matrix::Identity(4, 4)) < 1e-14);
        CHECK(maxAbs(numericEvolutionMatrix(buildSu2CouplingMatrix(p), 0.0).u -
                     Matrix::Identity(4, 4)) < 1e-14);
    }
    SUBCASE("2x2 closed form") {
        const CouplingMatrix m = buildSu2CouplingMatrix({1, 0.0, 0.0, 1.0});
        const double t = 0.7;
        const EvolutionMatrix u = numericEvolutionMatrix(m, t);
        CHECK(std::abs(u.u(0, 0) - Complex(std::cos(t))) < 1e-13);
        CHECK(std::abs(u.u(0, 1) - Complex(0.0, -std::sin(t))) < 1e-13);
        CHECK(std::abs(u.u(1, 0) - Complex(0.0, -std::sin(t))) < 1e-13);
    }
    SUBCASE("cross-path equivalence on random samples") {
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> jDist(1, 10);
        std::uniform_real_distribution<double> omegaDist(0.0, 5.0);
        std::uniform_real_distribution<double> gDist(0.05, 5.0);
        std::uniform_real_distribution<double> gtDist(0.0, 4 * std::numbers::pi);
        for (int trial = 0; trial < 100; ++trial) {
            const Su2Params p{jDist(rng), 0.0, omegaDist(rng), gDist(rng)};
            const double t = gtDist(rng) / p.g;
            const EvolutionMatrix analytic = analyticEvolutionMatrix(p, t);
            const EvolutionMatrix numeric = numericEvolutionMatrix(buildSu2CouplingMatrix(p), t);
            CHECK(maxAbs(analytic.u - numeric.u) < 1e-9);
            CHECK(unitarityError(analytic) < 1e-10);
            CHECK(unitarityError(numeric) < 1e-12);
        }
    }
    SUBCASE("group property and periodicity") {
        const Su2Params p{5, 0.0, 0.8, 1.2};
        const double tauR = specialTimes(p).reconstruction;
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> tDist(0.0, 5.0);
        for (int trial = 0; trial < 20; ++trial) {
            const double t1 = tDist(rng), t2 = tDist(rng);
            const Matrix u1 = analyticEvolutionMatrix(p, t1).u;
            const Matrix u2 = analyticEvolutionMatrix(p, t2).u;
            const Matrix u12 = analyticEvolutionMatrix(p, t1 + t2).u;
            CHECK(maxAbs(u12 - u1 * u2) < 1e-10);
            CHECK(maxAbs(analyticEvolutionMatrix(p, t1 + tauR).u - u1) < 1e-10);
        }
    }
    SUBCASE("mirror symmetry at omega = 0") {
        const Su2Params p{6, 0.0, 0.0, 1.0};
        std::mt19937 rng(515);
        std::uniform_real_distribution<double> tDist(0.0, 3.0);
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix u = analyticEvolutionMatrix(p, tDist(rng)).u;
            for (int r = 0; r <= p.twoJ; ++r)
                for (int c = 0; c <= p.twoJ; ++c)
                    CHECK(std::abs(u(r, c) - u(p.twoJ - r, p.twoJ - c)) < 1e-10);
        }
    }
    SUBCASE("fallback near the omega=0 singularity stays unitary") {
        const Su2Params p{4, 0.0, 0.0, 1.0};
        const EvolutionMatrix u = analyticEvolutionMatrix(p, std::numbers::pi / 2);
        CHECK(unitarityError(u) < 1e-12);
    }
}

TEST_CASE("special times") {
    SUBCASE("omega = 0, g = 1") {
        const SpecialTimes t = specialTimes({4, 0.0, 0.0, 1.0});
        CHECK(t.reconstruction == doctest::Approx(2 * std::numbers::pi));
        CHECK(t.halfReconstruction == doctest::Approx(std::numbers::pi));
        REQUIRE(t.transfer.has_value());
        CHECK(*t.transfer == doctest::Approx(std::numbers::pi / 2));
    }
    SUBCASE("transfer absent for omega != 0, and tau scaling") {
        const SpecialTimes t = specialTimes({4, 0.0, 3.0, 2.0});
        CHECK(t.reconstruction == doctest::Approx(4 * std::numbers::pi / 5));
        CHECK_FALSE(t.transfer.has_value());
        const SpecialTimes doubled = specialTimes({4, 0.0, 6.0, 4.0});
        CHECK(doubled.reconstruction == doctest::Approx(t.reconstruction / 2));
    }
}

TEST_CASE("special time limit matrices") {
    SUBCASE("half reconstruction: sign by parity of twoJ") {
        CHECK(maxAbs(evolutionAtSpecialTime({3, 0.0, 0.0, 1.0}, SpecialTime::Half).u +
                     Matrix::Identity(4, 4)) == 0.0);
        CHECK(maxAbs(evolutionAtSpecialTime({2, 0.0, 0.0, 1.0}, SpecialTime::Half).u -
                     Matrix::Identity(3, 3)) == 0.0);
    }
    SUBCASE("transfer: phased backward identity") {
        const EvolutionMatrix u = evolutionAtSpecialTime({4, 0.0, 0.0, 1.0}, SpecialTime::Transfer);
        for (int m = 0; m <= 4; ++m) CHECK(u.u(m, 4 - m) == Complex(1.0));
        const EvolutionMatrix u2 =
            evolutionAtSpecialTime({2, 0.0, 0.0, 1.0}, SpecialTime::Transfer);
        CHECK(u2.u(0, 2) == Complex(-1.0));
        CHECK_THROWS_AS(evolutionAtSpecialTime({2, 0.0, 1.0, 1.0}, SpecialTime::Transfer),
                        std::invalid_argument);
    }
    SUBCASE("analytic evolution approaches the limit matrices") {
        for (int twoJ = 1; twoJ <= 8; ++twoJ) {
            const Su2Params p{twoJ, 0.0, 0.0, 1.0};
            const SpecialTimes times = specialTimes(p);
            CHECK(maxAbs(analyticEvolutionMatrix(p, times.reconstruction).u -
                         evolutionAtSpecialTime(p, SpecialTime::Reconstruction).u) < 1e-9);
            CHECK(maxAbs(analyticEvolutionMatrix(p, times.halfReconstruction).u -
                         evolutionAtSpecialTime(p, SpecialTime::Half).u) < 1e-9);
            CHECK(maxAbs(analyticEvolutionMatrix(p, *times.transfer).u -
                         evolutionAtSpecialTime(p, SpecialTime::Transfer).u) < 1e-9);
        }
    }
}
