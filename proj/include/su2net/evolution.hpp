#pragma once

#include <optional>

#include "su2net/network.hpp"
#include "su2net/specfun.hpp"

namespace su2net {

/// Unitary decomposition M = d^dagger * diag(lambda) * d. Row p of d holds
/// the coefficients of normal mode p in the localized-site basis.
struct Diagonalization {
    Matrix d;
    RealVector lambda;
};

/// Evolution matrix U(t) = d^dagger * exp(-i lambda t) * d, mapping the
/// creation operator at the input site to a superposition over sites.
struct EvolutionMatrix {
    Matrix u;
    double t = 0.0;

    int size() const { return static_cast<int>(u.rows()); }
};

struct SpecialTimes {
    double reconstruction = 0.0;       // tau_r, r = 1
    double halfReconstruction = 0.0;   // tau_{r/2}, r = 1
    std::optional<double> transfer;    // tau_t, defined only for omega = 0
};

enum class SpecialTime { Reconstruction, Half, Transfer };

/// Closed-form diagonalization of the su(2) coupling matrix:
/// lambda(m) = Omega (m - j), d(m,n) = f(m, n, A+-, Az).
Diagonalization analyticDiagonalization(const Su2Params& p);

/// Generic Hermitian eigensolver route. Eigenvalues ascending; each
/// eigenvector's phase fixed so its first nonzero component is real
/// positive. Throws on non-Hermitian input.
Diagonalization numericDiagonalization(const CouplingMatrix& m);

/// U(t) via the Wei-Norman matrix elements. Near the omega = 0 parameter
/// singularities (|cos(Omega t / 2)| < 1e-6) the analytic parameters are
/// indeterminate while U itself is regular, so this falls back to the
/// numeric route.
EvolutionMatrix analyticEvolutionMatrix(const Su2Params& p, double t);

/// U(t) from the numeric eigendecomposition of an arbitrary Hermitian
/// coupling matrix.
EvolutionMatrix numericEvolutionMatrix(const CouplingMatrix& m, double t);

SpecialTimes specialTimes(const Su2Params& p);

/// The exact limit matrices at the special times: identity at tau_r,
/// (-1)^twoJ * identity at tau_{r/2}, (-i)^twoJ * backward identity at
/// tau_t. Transfer requires omega = 0.
EvolutionMatrix evolutionAtSpecialTime(const Su2Params& p, SpecialTime which);

}  // namespace su2net
