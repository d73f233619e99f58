// Reference expansion data for d = 3: an (unnormalized) input vector and
// the nine component vectors s_{a,b} |a,b> of its expansion in the
// coherent family of the d=3 reference fiducial. Values are printed to
// four decimals, so comparisons use a 5e-4 entrywise tolerance.
//
// Print conventions for this data set (pinned by exhaustive matching):
// the reference fiducial's components must be read in REVERSED order,
// the input vector and the component vectors directly as 0..d-1, and a
// printed label (alpha, beta) denotes the displacement
// ((-alpha) mod d, beta mod d).
#pragma once

#include <array>
#include <vector>

#include "qgini/types.hpp"

namespace qgini_testdata {

inline const std::vector<qgini::cplx>& expansion_input_d3() {
    static const std::vector<qgini::cplx> v = {
        {0.5040, -0.1526}, {0.3283, 0.1757}, {0.8324, 0.0231}};
    return v;
}

struct ExpansionComponent {
    int alpha;  // printed label, symmetric range
    int beta;
    std::array<qgini::cplx, 3> vector;
};

inline const std::vector<ExpansionComponent>& expansion_components_d3() {
    static const std::vector<ExpansionComponent> t = {
        {-1, -1, {{{0.2527, -0.0295}, {0.0844, 0.0181}, {0.1074, -0.0148}}}},
        {-1, 0, {{{0.0893, 0.0016}, {0.2093, 0.0081}, {0.0664, 0.0255}}}},
        {-1, 1, {{{0.0923, 0.0310}, {0.1222, -0.0029}, {0.2869, -0.0008}}}},
        {0, -1, {{{0.0672, -0.0952}, {-0.0361, -0.0161}, {0.0217, 0.0447}}}},
        {0, 0, {{{-0.0338, -0.0055}, {0.0270, 0.0757}, {0.0234, -0.0140}}}},
        {0, 1, {{{-0.0108, -0.0733}, {-0.0488, 0.0791}, {0.2180, 0.0109}}}},
        {1, -1, {{{0.0688, 0.0071}, {-0.0191, 0.0136}, {-0.0126, -0.0266}}}},
        {1, 0, {{{0.0151, -0.0175}, {0.0169, 0.0517}, {-0.0159, -0.0094}}}},
        {1, 1, {{{-0.0367, 0.0287}, {-0.0274, -0.0517}, {0.1370, 0.0078}}}},
    };
    return t;
}

}  // namespace qgini_testdata
