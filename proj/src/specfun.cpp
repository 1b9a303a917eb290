#include "su2net/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace su2net {

namespace {

// Integer power of a complex number, negative exponents allowed.
Complex ipow(Complex base, int exponent) {
    if (exponent < 0) return 1.0 / ipow(base, -exponent);
    Complex result = 1.0;
    Complex acc = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= acc;
        acc *= acc;
    }
    return result;
}

}  // namespace

WeiNormanParams makeWeiNormanParams(Complex xPlus, Complex xMinus, Complex sqrtXz) {
    if (sqrtXz == Complex(0.0, 0.0))
        throw std::invalid_argument("WeiNormanParams: sqrtXz must be nonzero");
    return WeiNormanParams{xPlus, xMinus, sqrtXz};
}

Complex hyp2F1Terminating(int a, Complex b, Complex c, Complex z) {
    if (a > 0) throw std::invalid_argument("hyp2F1Terminating: a must be a non-positive integer");
    Complex sum = 1.0;
    Complex term = 1.0;
    for (int s = 0; s < -a; ++s) {
        const Complex cs = c + double(s);
        if (std::abs(cs) == 0.0)
            throw std::invalid_argument("hyp2F1Terminating: vanishing (c)_s denominator");
        term *= (double(a) + s) * (b + double(s)) / (cs * double(s + 1)) * z;
        sum += term;
    }
    return sum;
}

WeiNormanParams staticParams(double omega, double g) {
    if (!(g > 0.0)) throw std::invalid_argument("staticParams: g must be > 0");
    const double theta = 0.5 * std::atan2(2.0 * g, omega);
    const double tanTheta = std::tan(theta);
    const double secTheta = 1.0 / std::cos(theta);
    return makeWeiNormanParams(tanTheta, -tanTheta, secTheta);
}

WeiNormanParams dynamicParams(double t, double omega, double g) {
    if (!(g > 0.0)) throw std::invalid_argument("dynamicParams: g must be > 0");
    const double bigOmega = std::sqrt(omega * omega + 4.0 * g * g);
    const double half = 0.5 * bigOmega * t;
    const Complex den(bigOmega * std::cos(half), omega * std::sin(half));
    if (std::abs(den) <= kSingularityTol * bigOmega)
        throw SingularTimeError("dynamicParams: Wei-Norman parameters singular at this time");
    const Complex b = Complex(0.0, -1.0) * (2.0 * g * std::sin(half)) / den;
    const Complex sqrtBz = bigOmega / den;
    return makeWeiNormanParams(b, b, sqrtBz);
}

Complex matrixElementF(int m, int n, int twoJ, const WeiNormanParams& p) {
    if (m < 0 || n < 0 || m > twoJ || n > twoJ)
        throw std::out_of_range("matrixElementF: site index out of range");
    // -X+X-/Xz with Xz recovered from its stored square root
    const Complex z = -p.xPlus * p.xMinus / (p.sqrtXz * p.sqrtXz);
    if (m == n) {
        return ipow(p.sqrtXz, 2 * m - twoJ) *
               hyp2F1Terminating(-m, double(twoJ + 1 - m), 1.0, z);
    }
    const int lo = std::min(m, n);
    const int hi = std::max(m, n);
    // 1/(hi-lo)! * sqrt(hi!(2j-lo)! / (lo!(2j-hi)!)), in log space
    const double logPref = 0.5 * (std::lgamma(hi + 1.0) + std::lgamma(twoJ - lo + 1.0) -
                                  std::lgamma(lo + 1.0) - std::lgamma(twoJ - hi + 1.0)) -
                           std::lgamma(hi - lo + 1.0);
    const Complex ladder = (m < n) ? p.xMinus : p.xPlus;
    return std::exp(logPref) * ipow(ladder, hi - lo) * ipow(p.sqrtXz, 2 * lo - twoJ) *
           hyp2F1Terminating(-lo, double(twoJ + 1 - lo), double(hi - lo + 1), z);
}

}  // namespace su2net
