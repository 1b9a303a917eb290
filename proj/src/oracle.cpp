#include "su2net/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace su2net {

namespace {

void enumerateVectors(int mode, int nModes, int perModeCap, int remaining, Occupation& occ,
                      std::vector<Occupation>& out) {
    if (mode == nModes) {
        out.push_back(occ);
        return;
    }
    for (int k = 0; k <= std::min(perModeCap, remaining); ++k) {
        occ[mode] = k;
        enumerateVectors(mode + 1, nModes, perModeCap, remaining - k, occ, out);
    }
    occ[mode] = 0;
}

int totalPhotons(const Occupation& occ) {
    int total = 0;
    for (int k : occ) total += k;
    return total;
}

}  // namespace

FockBasis::FockBasis(int nModes, int perModeCap, int totalCap)
    : nModes_(nModes), perModeCap_(perModeCap), totalCap_(totalCap) {
    if (nModes < 1) throw std::invalid_argument("FockBasis: nModes must be >= 1");
    if (perModeCap < 0 || totalCap < 0) throw std::invalid_argument("FockBasis: caps must be >= 0");
    Occupation occ(nModes, 0);
    enumerateVectors(0, nModes, perModeCap, totalCap, occ, vectors_);
    for (int i = 0; i < static_cast<int>(vectors_.size()); ++i) index_[vectors_[i]] = i;
}

int FockBasis::ordinal(const Occupation& occ) const {
    const auto it = index_.find(occ);
    return it == index_.end() ? -1 : it->second;
}

HamiltonianMatrix buildHamiltonian(const CouplingMatrix& m, const FockBasis& basis) {
    if (m.size() != basis.nModes())
        throw std::invalid_argument("buildHamiltonian: coupling matrix size != nModes");
    HamiltonianMatrix h;
    h.basis = &basis;
    h.rows.resize(basis.dimension());
    const int n = basis.nModes();
    for (int col = 0; col < basis.dimension(); ++col) {
        const Occupation& ket = basis.occupation(col);
        // diagonal: sum_q M(q,q) k_q
        Complex diag = 0.0;
        for (int q = 0; q < n; ++q) diag += m.entries(q, q) * double(ket[q]);
        if (diag != Complex(0.0, 0.0)) h.rows[col][col] += diag;
        // hopping: a_j^dagger a_k moves one photon from site k to site j
        for (int from = 0; from < n; ++from) {
            if (ket[from] == 0) continue;
            for (int to = 0; to < n; ++to) {
                if (to == from || m.entries(to, from) == Complex(0.0, 0.0)) continue;
                Occupation bra = ket;
                bra[from] -= 1;
                bra[to] += 1;
                const int row = basis.ordinal(bra);
                if (row < 0) continue;  // transition leaves the basis
                const double ladder = std::sqrt(double(ket[from]) * double(bra[to]));
                h.rows[row][col] += m.entries(to, from) * ladder;
            }
        }
    }
    return h;
}

PropagationResult propagate(const HamiltonianMatrix& h, const MultiModeFockState& psi0, double t) {
    const FockBasis& basis = *h.basis;
    if (psi0.nModes != basis.nModes())
        throw std::invalid_argument("propagate: mode count mismatch");

    // Scatter psi0 into the basis; anything outside is reported as lost norm.
    Vector amp = Vector::Zero(basis.dimension());
    double lost = 0.0;
    for (const auto& [occ, a] : psi0.amplitudes) {
        const int ordinal = basis.ordinal(occ);
        if (ordinal < 0)
            lost += std::norm(a);
        else
            amp(ordinal) = a;
    }

    // Group ordinals by total photon number; each block is closed under H.
    const int maxTotal = basis.totalCap();
    std::vector<std::vector<int>> blocks(maxTotal + 1);
    for (int i = 0; i < basis.dimension(); ++i)
        blocks[totalPhotons(basis.occupation(i))].push_back(i);

    Vector out = Vector::Zero(basis.dimension());
    for (const std::vector<int>& block : blocks) {
        if (block.empty()) continue;
        const int dim = static_cast<int>(block.size());
        Matrix dense = Matrix::Zero(dim, dim);
        for (int r = 0; r < dim; ++r) {
            const auto& row = h.rows[block[r]];
            for (int c = 0; c < dim; ++c) {
                const auto it = row.find(block[c]);
                if (it != row.end()) dense(r, c) = it->second;
            }
        }
        Vector local(dim);
        for (int r = 0; r < dim; ++r) local(r) = amp(block[r]);
        if (local.cwiseAbs().maxCoeff() == 0.0) continue;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(dense);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("propagate: block eigendecomposition failed");
        Vector modal = solver.eigenvectors().adjoint() * local;
        for (int p = 0; p < dim; ++p)
            modal(p) *= std::exp(Complex(0.0, -solver.eigenvalues()(p) * t));
        local = solver.eigenvectors() * modal;
        for (int r = 0; r < dim; ++r) out(block[r]) = local(r);
    }

    PropagationResult result{MultiModeFockState{basis.nModes(), basis.totalCap(), {}}, lost};
    for (int i = 0; i < basis.dimension(); ++i)
        result.state.insert(basis.occupation(i), out(i));
    return result;
}

StateComparison compareStates(const MultiModeFockState& a, const MultiModeFockState& b) {
    if (a.nModes != b.nModes) throw std::invalid_argument("compareStates: mode count mismatch");
    Complex inner = 0.0;
    double maxDiff = 0.0;
    for (const auto& [occ, amp] : a.amplitudes) {
        const auto it = b.amplitudes.find(occ);
        const Complex other = it == b.amplitudes.end() ? Complex(0.0) : it->second;
        inner += std::conj(amp) * other;
        maxDiff = std::max(maxDiff, std::abs(other - amp));
    }
    for (const auto& [occ, amp] : b.amplitudes) {
        if (!a.amplitudes.contains(occ)) maxDiff = std::max(maxDiff, std::abs(amp));
    }
    const double normProduct = a.normSquared() * b.normSquared();
    StateComparison cmp;
    cmp.maxAmpDiff = maxDiff;
    cmp.overlap = normProduct > 0.0 ? std::norm(inner) / normProduct : 0.0;
    return cmp;
}

}  // namespace su2net
