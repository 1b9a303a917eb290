#include "su2net/io.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace su2net::io {

using nlohmann::json;

json matrixToJson(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    json re = json::array(), im = json::array();
    for (int r = 0; r < n; ++r) {
        json reRow = json::array(), imRow = json::array();
        for (int c = 0; c < static_cast<int>(m.cols()); ++c) {
            reRow.push_back(m(r, c).real());
            imRow.push_back(m(r, c).imag());
        }
        re.push_back(std::move(reRow));
        im.push_back(std::move(imRow));
    }
    return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrixFromJson(const json& j) {
    const int n = j.at("n").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
        throw std::invalid_argument("matrixFromJson: row count mismatch");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(re[r].size()) != n || static_cast<int>(im[r].size()) != n)
            throw std::invalid_argument("matrixFromJson: column count mismatch");
        for (int c = 0; c < n; ++c)
            m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
    return m;
}

json couplingMatrixToJson(const CouplingMatrix& m) { return matrixToJson(m.entries); }

CouplingMatrix couplingMatrixFromJson(const json& j) { return CouplingMatrix{matrixFromJson(j)}; }

json evolutionMatrixToJson(const EvolutionMatrix& u) {
    json j = matrixToJson(u.u);
    j["t"] = u.t;
    return j;
}

EvolutionMatrix evolutionMatrixFromJson(const json& j) {
    return EvolutionMatrix{matrixFromJson(j), j.at("t").get<double>()};
}

json stateToJson(const MultiModeFockState& s) {
    json entries = json::array();
    for (const auto& [occ, amp] : s.amplitudes)
        entries.push_back(json::array({occ, amp.real(), amp.imag()}));
    return json{{"nModes", s.nModes}, {"totalCap", s.totalCap}, {"amplitudes", std::move(entries)}};
}

MultiModeFockState stateFromJson(const json& j) {
    MultiModeFockState s{j.at("nModes").get<int>(), j.at("totalCap").get<int>(), {}};
    for (const auto& entry : j.at("amplitudes")) {
        s.insert(entry.at(0).get<Occupation>(),
                 Complex(entry.at(1).get<double>(), entry.at(2).get<double>()));
    }
    return s;
}

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace su2net::io
