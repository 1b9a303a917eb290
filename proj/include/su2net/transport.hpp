#pragma once

#include <vector>

#include "su2net/evolution.hpp"
#include "su2net/states.hpp"

namespace su2net {

struct TransportResult {
    MultiModeFockState state;
    double t = 0.0;
    int inputSite = 0;
    double lostNorm = 0.0;  // norm^2 dropped by the totalCap truncation
};

/// Evolve a single-mode state localized at inputSite through U by the exact
/// multinomial expansion: the occupation vector (k_0,...,k_{N-1}) with
/// sum k receives amplitude alpha_k sqrt(k!) prod_q U(m,q)^{k_q}/sqrt(k_q!).
/// All occupation vectors with total <= totalCap are enumerated.
TransportResult expandState(const SingleModeState& s, int inputSite, const EvolutionMatrix& u,
                            int totalCap);

/// Overlap fidelity of the evolved state with the input state relocated to
/// targetSite: F = |sum_k |alpha_k|^2 U(m,n)^k|^2.
double fidelityClosedForm(const SingleModeState& s, int inputSite, int targetSite,
                          const EvolutionMatrix& u);

struct FidelityPoint {
    double t;
    double fidelity;
};

/// Fidelity at targetSite along a monotone time grid, using the analytic
/// evolution matrix (with its numeric fallback). Parallelized over grid
/// points; thread count capped by the SU2NET_THREADS environment variable.
std::vector<FidelityPoint> fidelityTrace(const Su2Params& params, const SingleModeState& s,
                                         int inputSite, int targetSite,
                                         const std::vector<double>& timeGrid);

/// Photon-number distribution P(n) at one site, n = 0..kMax.
std::vector<double> sitePhotonDistribution(const TransportResult& r, int site, int kMax);

/// Expectation of the total photon number over the stored amplitudes.
double totalPhotonExpectation(const TransportResult& r);

}  // namespace su2net
