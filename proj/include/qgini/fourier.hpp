// Finite Fourier transform and the momentum basis |P;r> = F|X;r>.
#pragma once

#include "qgini/types.hpp"

namespace qgini {

// F[r][s] = omega^{rs} / sqrt(d) with omega = exp(i 2 pi / d),
// indices 0..d-1. Unitary; F^4 = I.
CMatrix fourier_matrix(Dimension dim);

// Column r of F as a state.
PureState momentum_state(Dimension dim, ZdIndex r);

// omega^k for the given dimension.
cplx omega_power(Dimension dim, long long k);

}  // namespace qgini
