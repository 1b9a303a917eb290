#include "su2net/network.hpp"

#include <cmath>
#include <stdexcept>

namespace su2net {

void validateParams(const Su2Params& p) {
    if (p.twoJ < 1) throw std::invalid_argument("Su2Params: twoJ must be >= 1");
    if (!(p.g > 0.0)) throw std::invalid_argument("Su2Params: g must be > 0");
}

double effectiveFrequency(const Su2Params& p) {
    validateParams(p);
    return std::sqrt(p.omega * p.omega + 4.0 * p.g * p.g);
}

CouplingMatrix buildSu2CouplingMatrix(const Su2Params& p) {
    validateParams(p);
    const int n = p.twoJ + 1;
    const double j = 0.5 * p.twoJ;
    Matrix m = Matrix::Zero(n, n);
    for (int site = 0; site < n; ++site) {
        m(site, site) = p.omega * (site - j);
    }
    for (int site = 0; site + 1 < n; ++site) {
        // g_m = g sqrt(m(2j+1-m)) with m = site+1 in 1-based counting
        const double coupling = p.g * std::sqrt(double(site + 1) * double(p.twoJ - site));
        m(site, site + 1) = coupling;
        m(site + 1, site) = coupling;
    }
    return CouplingMatrix{std::move(m)};
}

bool validateHermitian(const CouplingMatrix& m, double tol) {
    if (m.entries.rows() != m.entries.cols())
        throw std::invalid_argument("validateHermitian: matrix is not square");
    const double dev = (m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff();
    return dev <= tol;
}

}  // namespace su2net
