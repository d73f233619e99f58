#include "qgini/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgini::io {

namespace {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

int dim_from_json(const json& j) {
    if (!j.contains("d")) throw std::invalid_argument("missing field \"d\"");
    return j.at("d").get<int>();
}

}  // namespace

json to_json(const PureState& s) {
    json amps = json::array();
    for (const cplx& a : s.amplitudes()) amps.push_back(complex_to_json(a));
    return json{{"d", s.dim_value()}, {"amplitudes", std::move(amps)}};
}

PureState pure_state_from_json(const json& j) {
    const Dimension dim(dim_from_json(j));
    const json& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != static_cast<std::size_t>(dim.value())) {
        throw std::invalid_argument("amplitudes: expected d entries");
    }
    std::vector<cplx> a;
    a.reserve(amps.size());
    for (const json& e : amps) a.push_back(complex_from_json(e));
    return PureState::normalized(dim, std::move(a));
}

json to_json(const DensityMatrix& rho) {
    const int d = rho.dim_value();
    json rows = json::array();
    for (int i = 0; i < d; ++i) {
        json row = json::array();
        for (int j = 0; j < d; ++j) {
            row.push_back(complex_to_json(
                rho.entries()(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
        }
        rows.push_back(std::move(row));
    }
    return json{{"d", d}, {"entries", std::move(rows)}};
}

DensityMatrix density_from_json(const json& j) {
    const Dimension dim(dim_from_json(j));
    const std::size_t d = static_cast<std::size_t>(dim.value());
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != d) {
        throw std::invalid_argument("entries: expected d rows");
    }
    CMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != d) {
            throw std::invalid_argument("entries: expected d columns");
        }
        for (std::size_t k = 0; k < d; ++k) m(i, k) = complex_from_json(row[k]);
    }
    return DensityMatrix(dim, std::move(m));
}

json to_json(const ExpansionCoefficients& c) {
    const int d = c.dim().value();
    json rows = json::array();
    for (int a = 0; a < d; ++a) {
        json row = json::array();
        for (int b = 0; b < d; ++b) row.push_back(complex_to_json(c.at(a, b)));
        rows.push_back(std::move(row));
    }
    return json{{"d", d}, {"coeffs", std::move(rows)}};
}

ExpansionCoefficients expansion_from_json(const json& j) {
    const Dimension dim(dim_from_json(j));
    const std::size_t d = static_cast<std::size_t>(dim.value());
    const json& rows = j.at("coeffs");
    if (!rows.is_array() || rows.size() != d) {
        throw std::invalid_argument("coeffs: expected d rows");
    }
    std::vector<cplx> c(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        const json& row = rows[a];
        if (!row.is_array() || row.size() != d) {
            throw std::invalid_argument("coeffs: expected d columns");
        }
        for (std::size_t b = 0; b < d; ++b) c[a * d + b] = complex_from_json(row[b]);
    }
    return ExpansionCoefficients(dim, std::move(c));
}

json to_json(const GiniReport& r) {
    return json{{"d", r.d},
                {"g_x", r.g_x},
                {"g_p", r.g_p},
                {"g_xp", r.g_xp},
                {"delta", r.delta}};
}

json to_json(const EntropyReport& r) {
    return json{{"d", r.d}, {"e_x", r.e_x}, {"e_p", r.e_p}, {"excess", r.excess}};
}

json to_json(const EtaEstimate& e) {
    return json{{"d", e.d},
                {"sup_gxp_estimate", e.sup_gxp_estimate},
                {"eta_hat", e.eta_hat},
                {"eta_tilde", e.eta_tilde},
                {"n_samples", e.n_samples},
                {"refined", e.refined},
                {"best_state", to_json(e.best_state)},
                {"seed", e.seed}};
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_row(const GiniReport& r) {
    std::ostringstream os;
    os << r.d << ',' << fmt17(r.g_x) << ',' << fmt17(r.g_p) << ','
       << fmt17(r.g_xp) << ',' << fmt17(r.delta);
    return os.str();
}

std::string csv_row(const EntropyReport& r) {
    std::ostringstream os;
    os << r.d << ',' << fmt17(r.e_x) << ',' << fmt17(r.e_p) << ','
       << fmt17(r.excess);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qgini::io
