#pragma once

#include "su2net/network.hpp"

namespace su2net {

/// Wei-Norman decomposition parameters for the su(2) algebra. The z
/// parameter is stored through its square root: only integer powers of
/// sqrtXz ever enter the matrix elements, which removes any complex-power
/// branch choice for half-integer Bargmann parameters.
struct WeiNormanParams {
    Complex xPlus;
    Complex xMinus;
    Complex sqrtXz;
};

WeiNormanParams makeWeiNormanParams(Complex xPlus, Complex xMinus, Complex sqrtXz);

/// Terminating Gauss hypergeometric series 2F1(a, b; c; z) with a a
/// non-positive integer; the sum has |a|+1 terms.
Complex hyp2F1Terminating(int a, Complex b, Complex c, Complex z);

/// Static parameters A+/-, sqrt(Az): theta = atan2(2g, omega)/2, so the
/// omega = 0 limit gives theta = pi/4.
WeiNormanParams staticParams(double omega, double g);

/// Relative tolerance on the denominator below which dynamicParams refuses
/// to evaluate (scaled by Omega).
inline constexpr double kSingularityTol = 1e-9;

struct SingularTimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Time-dependent parameters B+/-(t), sqrt(Bz(t)). Throws SingularTimeError
/// when the common denominator comes within kSingularityTol * Omega of zero
/// (only possible at omega = 0, g t near pi/2 + k pi).
WeiNormanParams dynamicParams(double t, double omega, double g);

/// Matrix element f(m, n, X+-, Xz) of the unitary / evolution matrices,
/// sites 0-indexed in 0..twoJ.
Complex matrixElementF(int m, int n, int twoJ, const WeiNormanParams& p);

}  // namespace su2net
