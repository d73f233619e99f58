// Reference minimum-uncertainty fiducial states for d = 3, 5, 7 with
// known uncertainty gaps. Components are rounded to four decimals, so
// they must go through PureState::normalized before use. The find-g
// command reports how the search result compares against these.
#pragma once

#include <vector>

#include "qgini/types.hpp"

namespace qgini {

inline std::vector<cplx> reference_fiducial(int d) {
    switch (d) {
        case 3:
            return {{-0.2395, 0.1773}, {-0.3749, -0.7941}, {0.3735, 0.0232}};
        case 5:
            return {{-0.1665, 0.2964},
                    {0.5752, -0.5821},
                    {-0.3445, 0.2167},
                    {0.1598, 0.0086},
                    {-0.1092, -0.1072}};
        case 7:
            return {{0.3479, -0.0613},  {-0.1256, -0.0417}, {-0.0054, 0.8010},
                    {0.1875, 0.1370},   {-0.1618, -0.1764}, {-0.3214, 0.0283},
                    {-0.0125, 0.0228}};
        default:
            return {};
    }
}

inline bool has_reference_fiducial(int d) {
    return d == 3 || d == 5 || d == 7;
}

}  // namespace qgini
