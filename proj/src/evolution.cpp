#include "su2net/evolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su2net {

namespace {

constexpr double kHermitianTol = 1e-10;

// The Wei-Norman matrix elements carry prefactors that grow like
// (Omega/|den|)^twoJ while the hypergeometric sum shrinks to match;
// cancellation costs roughly 10^(twoJ log10(Omega/|den|)) digits
// (measured: max elementwise error ~ 10^(expo - 13.5)). Above this
// exponent the numeric eigensolver route takes over. This also covers
// the omega = 0 poles at gt = pi/2 + k pi, where the parameters
// themselves diverge while U stays regular.
constexpr double kFallbackExponent = 2.5;

Matrix buildF(int twoJ, const WeiNormanParams& p) {
    const int n = twoJ + 1;
    Matrix out(n, n);
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) out(row, col) = matrixElementF(row, col, twoJ, p);
    return out;
}

Complex minusIPow(int exponent) {
    switch (((exponent % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

}  // namespace

Diagonalization analyticDiagonalization(const Su2Params& p) {
    validateParams(p);
    const double bigOmega = effectiveFrequency(p);
    const double j = 0.5 * p.twoJ;
    RealVector lambda(p.twoJ + 1);
    for (int m = 0; m <= p.twoJ; ++m) lambda(m) = bigOmega * (m - j);
    return Diagonalization{buildF(p.twoJ, staticParams(p.omega, p.g)), std::move(lambda)};
}

Diagonalization numericDiagonalization(const CouplingMatrix& m) {
    if (!validateHermitian(m, kHermitianTol * std::max(1.0, m.entries.cwiseAbs().maxCoeff())))
        throw std::invalid_argument("numericDiagonalization: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("numericDiagonalization: eigensolver failed");
    Matrix vectors = solver.eigenvectors();  // columns, eigenvalues ascending
    // Fix each eigenvector's phase: first component above threshold real positive.
    for (int col = 0; col < vectors.cols(); ++col) {
        for (int row = 0; row < vectors.rows(); ++row) {
            const Complex v = vectors(row, col);
            if (std::abs(v) > 1e-10) {
                vectors.col(col) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    // M = V Lambda V^dagger, so D = V^dagger.
    return Diagonalization{vectors.adjoint(), solver.eigenvalues()};
}

EvolutionMatrix numericEvolutionMatrix(const CouplingMatrix& m, double t) {
    const Diagonalization diag = numericDiagonalization(m);
    const int n = diag.d.rows();
    Vector phases(n);
    for (int p = 0; p < n; ++p) phases(p) = std::exp(Complex(0.0, -diag.lambda(p) * t));
    return EvolutionMatrix{diag.d.adjoint() * phases.asDiagonal() * diag.d, t};
}

EvolutionMatrix analyticEvolutionMatrix(const Su2Params& p, double t) {
    validateParams(p);
    const double bigOmega = effectiveFrequency(p);
    const double half = 0.5 * bigOmega * t;
    const double den = std::hypot(bigOmega * std::cos(half), p.omega * std::sin(half));
    if (den <= 0.0 || p.twoJ * std::log10(bigOmega / den) > kFallbackExponent)
        return numericEvolutionMatrix(buildSu2CouplingMatrix(p), t);
    return EvolutionMatrix{buildF(p.twoJ, dynamicParams(t, p.omega, p.g)), t};
}

SpecialTimes specialTimes(const Su2Params& p) {
    validateParams(p);
    const double bigOmega = effectiveFrequency(p);
    SpecialTimes times;
    times.reconstruction = 4.0 * std::numbers::pi / bigOmega;
    times.halfReconstruction = 2.0 * std::numbers::pi / bigOmega;
    if (p.omega == 0.0) times.transfer = std::numbers::pi / (2.0 * p.g);
    return times;
}

EvolutionMatrix evolutionAtSpecialTime(const Su2Params& p, SpecialTime which) {
    validateParams(p);
    const SpecialTimes times = specialTimes(p);
    const int n = p.twoJ + 1;
    switch (which) {
        case SpecialTime::Reconstruction:
            return EvolutionMatrix{Matrix::Identity(n, n), times.reconstruction};
        case SpecialTime::Half: {
            const double sign = (p.twoJ % 2 == 0) ? 1.0 : -1.0;
            return EvolutionMatrix{sign * Matrix::Identity(n, n), times.halfReconstruction};
        }
        case SpecialTime::Transfer: {
            if (!times.transfer)
                throw std::invalid_argument("evolutionAtSpecialTime: transfer requires omega = 0");
            Matrix u = Matrix::Zero(n, n);
            const Complex phase = minusIPow(p.twoJ);
            for (int m = 0; m < n; ++m) u(m, p.twoJ - m) = phase;
            return EvolutionMatrix{std::move(u), *times.transfer};
        }
    }
    throw std::logic_error("evolutionAtSpecialTime: unknown special time");
}

}  // namespace su2net
