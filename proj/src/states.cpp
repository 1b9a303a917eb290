#include "su2net/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su2net {

double SingleModeState::normSquared() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return sum;
}

double SingleModeState::meanPhotonNumber() const {
    double sum = 0.0;
    for (size_t k = 0; k < amplitudes.size(); ++k) sum += double(k) * std::norm(amplitudes[k]);
    return sum;
}

double MultiModeFockState::normSquared() const {
    double sum = 0.0;
    for (const auto& [occ, amp] : amplitudes) sum += std::norm(amp);
    return sum;
}

void MultiModeFockState::insert(const Occupation& occ, Complex amp) {
    if (static_cast<int>(occ.size()) != nModes)
        throw std::invalid_argument("MultiModeFockState: occupation vector length mismatch");
    if (std::abs(amp) < kAmplitudeFloor) return;
    amplitudes[occ] += amp;
}

SingleModeState fockState(int k, int kMax) {
    if (k < 0 || kMax < 0 || k > kMax) throw std::out_of_range("fockState: k > kMax");
    SingleModeState s{std::vector<Complex>(kMax + 1, 0.0)};
    s.amplitudes[k] = 1.0;
    return s;
}

SingleModeState coherentState(Complex alpha, int kMax) {
    if (kMax < 0) throw std::invalid_argument("coherentState: kMax must be >= 0");
    SingleModeState s{std::vector<Complex>(kMax + 1, 0.0)};
    const double weight = std::exp(-0.5 * std::norm(alpha));
    Complex power = 1.0;  // alpha^p / sqrt(p!) built iteratively
    for (int p = 0; p <= kMax; ++p) {
        s.amplitudes[p] = weight * power;
        power *= alpha / std::sqrt(double(p + 1));
    }
    return s;
}

SingleModeState squeezedVacuum(double r, double phi, int kMax) {
    if (r < 0.0) throw std::invalid_argument("squeezedVacuum: r must be >= 0");
    if (kMax < 0) throw std::invalid_argument("squeezedVacuum: kMax must be >= 0");
    SingleModeState s{std::vector<Complex>(kMax + 1, 0.0)};
    const double weight = 1.0 / std::sqrt(std::cosh(r));
    const Complex base = -std::exp(Complex(0.0, phi)) * std::tanh(r);
    Complex power = 1.0;
    for (int p = 0; 2 * p <= kMax; ++p) {
        // sqrt((2p)!) / (2^p p!) via log-gamma
        const double factor = std::exp(0.5 * std::lgamma(2.0 * p + 1.0) -
                                       p * std::numbers::ln2 - std::lgamma(p + 1.0));
        s.amplitudes[2 * p] = weight * power * factor;
        power *= base;
    }
    return s;
}

SingleModeState catState(Complex alpha, CatParity parity, int kMax) {
    if (kMax < 0) throw std::invalid_argument("catState: kMax must be >= 0");
    if (parity == CatParity::Odd && alpha == Complex(0.0, 0.0))
        throw std::invalid_argument("catState: odd cat undefined at alpha = 0");
    // |alpha> +/- |-alpha>, normalized over the full (untruncated) space:
    // norm^2 = 2 (1 +/- exp(-2|alpha|^2)).
    const double sign = (parity == CatParity::Even) ? 1.0 : -1.0;
    const double norm = std::sqrt(2.0 * (1.0 + sign * std::exp(-2.0 * std::norm(alpha))));
    SingleModeState s{std::vector<Complex>(kMax + 1, 0.0)};
    const double weight = std::exp(-0.5 * std::norm(alpha)) / norm;
    Complex power = 1.0;
    for (int k = 0; k <= kMax; ++k) {
        const double parityFactor = (k % 2 == 0) ? 1.0 + sign : 1.0 - sign;
        s.amplitudes[k] = weight * parityFactor * power;
        power *= alpha / std::sqrt(double(k + 1));
    }
    return s;
}

MultiModeFockState localizedState(const SingleModeState& s, int site, int nModes, int totalCap) {
    if (site < 0 || site >= nModes) throw std::out_of_range("localizedState: site out of range");
    if (s.kMax() > totalCap)
        throw std::invalid_argument("localizedState: state kMax exceeds totalCap");
    MultiModeFockState out{nModes, totalCap, {}};
    Occupation occ(nModes, 0);
    for (int k = 0; k <= s.kMax(); ++k) {
        occ[site] = k;
        out.insert(occ, s.amplitudes[k]);
    }
    return out;
}

}  // namespace su2net
