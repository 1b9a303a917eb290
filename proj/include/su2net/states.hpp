#pragma once

#include <map>
#include <vector>

#include "su2net/network.hpp"

namespace su2net {

/// Truncated single-mode state: amplitudes over Fock states |0>..|kMax>.
/// Truncation is projection, never renormalization; the lost norm is left
/// visible through normSquared().
struct SingleModeState {
    std::vector<Complex> amplitudes;  // index = photon number

    int kMax() const { return static_cast<int>(amplitudes.size()) - 1; }
    double normSquared() const;
    double meanPhotonNumber() const;
};

using Occupation = std::vector<int>;

/// Sparse multimode Fock state: occupation vector -> amplitude, keys in
/// lexicographic order. Entries below kAmplitudeFloor are dropped.
struct MultiModeFockState {
    int nModes = 0;
    int totalCap = 0;
    std::map<Occupation, Complex> amplitudes;

    static constexpr double kAmplitudeFloor = 1e-15;

    double normSquared() const;
    void insert(const Occupation& occ, Complex amp);
};

SingleModeState fockState(int k, int kMax);
SingleModeState coherentState(Complex alpha, int kMax);
SingleModeState squeezedVacuum(double r, double phi, int kMax);

enum class CatParity { Even, Odd };
SingleModeState catState(Complex alpha, CatParity parity, int kMax);

/// Embed a single-mode state at one site of an nModes network, vacuum
/// elsewhere.
MultiModeFockState localizedState(const SingleModeState& s, int site, int nModes, int totalCap);

}  // namespace su2net
