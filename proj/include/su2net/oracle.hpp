#pragma once

#include <unordered_map>
#include <vector>

#include "su2net/network.hpp"
#include "su2net/states.hpp"

namespace su2net {

/// Truncated multimode Fock basis with both a per-mode and a total photon
/// cap; occupation vectors enumerated in lexicographic order.
class FockBasis {
public:
    FockBasis(int nModes, int perModeCap, int totalCap);

    int nModes() const { return nModes_; }
    int perModeCap() const { return perModeCap_; }
    int totalCap() const { return totalCap_; }
    int dimension() const { return static_cast<int>(vectors_.size()); }

    const Occupation& occupation(int ordinal) const { return vectors_[ordinal]; }
    /// Ordinal of an occupation vector, or -1 if outside the basis.
    int ordinal(const Occupation& occ) const;

private:
    int nModes_;
    int perModeCap_;
    int totalCap_;
    std::vector<Occupation> vectors_;
    std::map<Occupation, int> index_;
};

/// Sparse Hermitian Hamiltonian in the truncated basis, block diagonal in
/// total photon number. Transitions leaving the basis are dropped.
struct HamiltonianMatrix {
    const FockBasis* basis = nullptr;
    std::vector<std::unordered_map<int, Complex>> rows;  // row -> (col -> value)

    int dimension() const { return static_cast<int>(rows.size()); }
};

HamiltonianMatrix buildHamiltonian(const CouplingMatrix& m, const FockBasis& basis);

struct PropagationResult {
    MultiModeFockState state;
    double lostNorm = 0.0;  // norm^2 of psi0 outside the basis
};

/// exp(-i H t) |psi0> by dense Hermitian eigendecomposition of each
/// total-photon block.
PropagationResult propagate(const HamiltonianMatrix& h, const MultiModeFockState& psi0, double t);

struct StateComparison {
    double overlap = 0.0;     // |<a|b>|^2 / (|a|^2 |b|^2)
    double maxAmpDiff = 0.0;  // over the union of supports
};

StateComparison compareStates(const MultiModeFockState& a, const MultiModeFockState& b);

}  // namespace su2net
