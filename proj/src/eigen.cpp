#include "qgini/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgini {

namespace {

constexpr double kOffDiagTarget = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
    const std::size_t n = a.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). With apq = |apq| phi,
// the plane rotation is J = [[c, -s phi], [s conj(phi), c]] and we apply
// a <- J^H a J, accumulating J into v.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq < 1e-300) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const cplx phase = apq / abs_apq;

    // tan(2 theta) = 2|apq| / (app - aqq), stable small-root form
    double t;  // tan(theta)
    const double diff = app - aqq;
    if (diff == 0.0) {
        t = 1.0;
    } else {
        const double tau = diff / (2.0 * abs_apq);
        t = (tau >= 0.0 ? 1.0 : -1.0) /
            (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.size();
    // a <- a J
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(phase) * aiq;
        a(i, q) = -s * phase * aip + c * aiq;
    }
    // a <- J^H a
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj + s * phase * aqj;
        a(q, j) = -s * std::conj(phase) * apj + c * aqj;
    }
    // v <- v J
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip + s * std::conj(phase) * viq;
        v(i, q) = -s * phase * vip + c * viq;
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const CMatrix& m) {
    if (m.hermiticity_defect() > 1e-12) {
        throw std::invalid_argument("hermitian_eigen: matrix not Hermitian");
    }
    const std::size_t n = m.size();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kOffDiagTarget) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    const Dimension dim(static_cast<int>(n));
    for (std::size_t k : order) {
        out.eigenvalues.push_back(a(k, k).real());
        std::vector<cplx> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
        out.eigenvectors.push_back(PureState::normalized(dim, std::move(col)));
    }
    return out;
}

EigenDecomposition hermitian_eig(const DensityMatrix& m) {
    return hermitian_eigen(m.entries());
}

}  // namespace qgini
