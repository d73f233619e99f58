// JSON and CSV serialization. Formats are shared by the library, the CLI
// and the test suites; numbers are written with 17 significant digits so
// files round-trip doubles losslessly.
#pragma once

#include <string>

#include <json.hpp>

#include "qgini/phase_space.hpp"
#include "qgini/search.hpp"
#include "qgini/types.hpp"
#include "qgini/uncertainty.hpp"

namespace qgini::io {

using json = nlohmann::json;

// {"d": d, "amplitudes": [[re, im], ...]} in 0..d-1 ordering.
json to_json(const PureState& s);
// States loaded from files may be rounded; they are renormalized.
PureState pure_state_from_json(const json& j);

// {"d": d, "entries": [[[re, im], ... d], ... d]} row-major.
json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

// {"d": d, "coeffs": [[[re, im], ...], ...]} row alpha, column beta.
json to_json(const ExpansionCoefficients& c);
ExpansionCoefficients expansion_from_json(const json& j);

json to_json(const GiniReport& r);
json to_json(const EntropyReport& r);
json to_json(const EtaEstimate& e);

// %.17g
std::string fmt17(double x);

// CSV rows for sweep outputs.
inline constexpr const char* kGiniCsvHeader = "d,g_x,g_p,g_xp,delta";
inline constexpr const char* kEntropyCsvHeader = "d,e_x,e_p,excess";
std::string csv_row(const GiniReport& r);
std::string csv_row(const EntropyReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qgini::io
