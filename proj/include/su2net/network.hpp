#pragma once

#include <Eigen/Dense>
#include <complex>

namespace su2net {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hermitian coupling matrix of a resonator network. Diagonal entries are
/// resonator frequencies, off-diagonal entries hopping amplitudes, all in
/// angular-frequency units.
struct CouplingMatrix {
    Matrix entries;

    int size() const { return static_cast<int>(entries.rows()); }
};

/// Parameters of the su(2) network family. The network has twoJ+1 sites.
/// omega0 is a common frequency offset; it only contributes a global phase
/// and never enters the dynamics, so it is carried as metadata.
struct Su2Params {
    int twoJ = 1;
    double omega0 = 0.0;
    double omega = 0.0;
    double g = 1.0;
};

void validateParams(const Su2Params& p);

/// Effective network frequency sqrt(omega^2 + 4 g^2).
double effectiveFrequency(const Su2Params& p);

/// Symmetric tridiagonal coupling matrix in the rotating frame:
/// diagonal omega*(m - j), off-diagonal g*sqrt((m+1)*(twoJ - m)),
/// sites 0-indexed m = 0..twoJ.
CouplingMatrix buildSu2CouplingMatrix(const Su2Params& p);

/// True iff max |M(m,n) - conj(M(n,m))| <= tol. Throws on non-square input.
bool validateHermitian(const CouplingMatrix& m, double tol);

}  // namespace su2net
