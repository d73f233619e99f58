#include "qgini/fourier.hpp"

#include <cmath>
#include <numbers>

namespace qgini {

cplx omega_power(Dimension dim, long long k) {
    const int d = dim.value();
    long long r = k % d;
    if (r < 0) r += d;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

CMatrix fourier_matrix(Dimension dim) {
    const int d = dim.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    CMatrix f(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        for (int s = 0; s < d; ++s) {
            f(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) =
                omega_power(dim, static_cast<long long>(r) * s) * scale;
        }
    }
    return f;
}

PureState momentum_state(Dimension dim, ZdIndex r) {
    const int d = dim.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<cplx> a(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        a[static_cast<std::size_t>(m)] =
            omega_power(dim, static_cast<long long>(m) * r.value()) * scale;
    }
    return PureState::normalized(dim, std::move(a));
}

}  // namespace qgini
