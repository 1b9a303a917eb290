#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "su2net/evolution.hpp"
#include "su2net/oracle.hpp"
#include "su2net/scenario.hpp"
#include "su2net/specfun.hpp"
#include "su2net/transport.hpp"

namespace py = pybind11;
using namespace su2net;

PYBIND11_MODULE(_su2net, m) {
    m.doc() = "su(2) resonator network state-transfer simulator";

    py::class_<Su2Params>(m, "Su2Params")
        .def(py::init([](int twoJ, double omega0, double omega, double g) {
                 Su2Params p{twoJ, omega0, omega, g};
                 validateParams(p);
                 return p;
             }),
             py::arg("two_j"), py::arg("omega0") = 0.0, py::arg("omega") = 0.0,
             py::arg("g") = 1.0)
        .def_readonly("two_j", &Su2Params::twoJ)
        .def_readonly("omega0", &Su2Params::omega0)
        .def_readonly("omega", &Su2Params::omega)
        .def_readonly("g", &Su2Params::g);

    py::class_<CouplingMatrix>(m, "CouplingMatrix")
        .def(py::init([](const Matrix& entries) { return CouplingMatrix{entries}; }),
             py::arg("entries"))
        .def_property_readonly("entries",
                               [](const CouplingMatrix& m) { return m.entries; })
        .def_property_readonly("size", &CouplingMatrix::size);

    py::class_<EvolutionMatrix>(m, "EvolutionMatrix")
        .def_property_readonly("u", [](const EvolutionMatrix& u) { return u.u; })
        .def_readonly("t", &EvolutionMatrix::t);

    py::class_<Diagonalization>(m, "Diagonalization")
        .def_property_readonly("d", [](const Diagonalization& d) { return d.d; })
        .def_property_readonly("eigenvalues",
                               [](const Diagonalization& d) { return d.lambda; });

    py::class_<SingleModeState>(m, "SingleModeState")
        .def_property_readonly("amplitudes",
                               [](const SingleModeState& s) { return s.amplitudes; })
        .def_property_readonly("k_max", &SingleModeState::kMax)
        .def("norm_squared", &SingleModeState::normSquared)
        .def("mean_photon_number", &SingleModeState::meanPhotonNumber);

    py::class_<MultiModeFockState>(m, "MultiModeFockState")
        .def_readonly("n_modes", &MultiModeFockState::nModes)
        .def_readonly("total_cap", &MultiModeFockState::totalCap)
        .def("norm_squared", &MultiModeFockState::normSquared)
        .def("items", [](const MultiModeFockState& s) {
            std::vector<std::pair<Occupation, Complex>> out(s.amplitudes.begin(),
                                                            s.amplitudes.end());
            return out;
        });

    py::class_<TransportResult>(m, "TransportResult")
        .def_readonly("state", &TransportResult::state)
        .def_readonly("t", &TransportResult::t)
        .def_readonly("input_site", &TransportResult::inputSite)
        .def_readonly("lost_norm", &TransportResult::lostNorm);

    m.def("effective_frequency", &effectiveFrequency, py::arg("params"));
    m.def(
        "build_su2_coupling_matrix",
        [](const Su2Params& p) { return buildSu2CouplingMatrix(p).entries; },
        py::arg("params"));
    m.def("hyp2f1_terminating", &hyp2F1Terminating, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("z"));
    m.def(
        "analytic_evolution_matrix",
        [](const Su2Params& p, double t) { return analyticEvolutionMatrix(p, t); },
        py::arg("params"), py::arg("t"));
    m.def(
        "numeric_evolution_matrix",
        [](const Matrix& m, double t) { return numericEvolutionMatrix(CouplingMatrix{m}, t); },
        py::arg("coupling"), py::arg("t"));
    m.def(
        "numeric_diagonalization",
        [](const Matrix& m) { return numericDiagonalization(CouplingMatrix{m}); },
        py::arg("coupling"));
    m.def("analytic_diagonalization", &analyticDiagonalization, py::arg("params"));
    m.def(
        "special_times",
        [](const Su2Params& p) {
            const SpecialTimes t = specialTimes(p);
            py::dict out;
            out["reconstruction"] = t.reconstruction;
            out["half_reconstruction"] = t.halfReconstruction;
            if (t.transfer) out["transfer"] = *t.transfer;
            return out;
        },
        py::arg("params"));

    m.def("fock_state", &fockState, py::arg("k"), py::arg("k_max"));
    m.def("coherent_state", &coherentState, py::arg("alpha"), py::arg("k_max"));
    m.def("squeezed_vacuum", &squeezedVacuum, py::arg("r"), py::arg("phi"), py::arg("k_max"));
    m.def(
        "cat_state",
        [](Complex alpha, const std::string& parity, int kMax) {
            return catState(alpha, parity == "odd" ? CatParity::Odd : CatParity::Even, kMax);
        },
        py::arg("alpha"), py::arg("parity"), py::arg("k_max"));

    m.def("expand_state", &expandState, py::arg("state"), py::arg("input_site"), py::arg("u"),
          py::arg("total_cap"));
    m.def("fidelity_closed_form", &fidelityClosedForm, py::arg("state"), py::arg("input_site"),
          py::arg("target_site"), py::arg("u"));
    m.def(
        "fidelity_trace",
        [](const Su2Params& params, const SingleModeState& s, int inputSite, int targetSite,
           const std::vector<double>& grid) {
            const auto trace = fidelityTrace(params, s, inputSite, targetSite, grid);
            std::vector<std::pair<double, double>> out;
            out.reserve(trace.size());
            for (const auto& p : trace) out.emplace_back(p.t, p.fidelity);
            return out;
        },
        py::arg("params"), py::arg("state"), py::arg("input_site"), py::arg("target_site"),
        py::arg("time_grid"));
    m.def("site_photon_distribution", &sitePhotonDistribution, py::arg("result"), py::arg("site"),
          py::arg("k_max"));
    m.def("total_photon_expectation", &totalPhotonExpectation, py::arg("result"));

    py::class_<FockBasis>(m, "FockBasis")
        .def(py::init<int, int, int>(), py::arg("n_modes"), py::arg("per_mode_cap"),
             py::arg("total_cap"))
        .def_property_readonly("dimension", &FockBasis::dimension)
        .def("occupation", &FockBasis::occupation, py::arg("ordinal"))
        .def("ordinal", &FockBasis::ordinal, py::arg("occupation"));

    m.def(
        "propagate",
        [](const Matrix& coupling, const FockBasis& basis, const MultiModeFockState& psi0,
           double t) {
            const HamiltonianMatrix h = buildHamiltonian(CouplingMatrix{coupling}, basis);
            const PropagationResult r = propagate(h, psi0, t);
            return py::make_tuple(r.state, r.lostNorm);
        },
        py::arg("coupling"), py::arg("basis"), py::arg("psi0"), py::arg("t"));
    m.def("localized_state", &localizedState, py::arg("state"), py::arg("site"),
          py::arg("n_modes"), py::arg("total_cap"));
    m.def(
        "compare_states",
        [](const MultiModeFockState& a, const MultiModeFockState& b) {
            const StateComparison c = compareStates(a, b);
            return py::make_tuple(c.overlap, c.maxAmpDiff);
        },
        py::arg("a"), py::arg("b"));
}
