#include "qgini/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qgini/eigen.hpp"

namespace qgini {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kNormGate = 1e-8;
constexpr double kProbClamp = 1e-12;
constexpr double kProbSumTol = 1e-12;
}  // namespace

Dimension::Dimension(int d) : d_(d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("Dimension: d must be odd and >= 3, got " +
                                    std::to_string(d));
    }
}

ZdIndex::ZdIndex(int value, Dimension dim) : d_(dim.value()) {
    v_ = value % d_;
    if (v_ < 0) v_ += d_;
}

void ZdIndex::require_same_modulus(ZdIndex other) const {
    if (d_ != other.d_) {
        throw std::invalid_argument("ZdIndex: modulus mismatch");
    }
}

ZdIndex ZdIndex::operator+(ZdIndex other) const {
    require_same_modulus(other);
    return ZdIndex(v_ + other.v_, Dimension(d_));
}

ZdIndex ZdIndex::operator-(ZdIndex other) const {
    require_same_modulus(other);
    return ZdIndex(v_ - other.v_, Dimension(d_));
}

ZdIndex ZdIndex::operator*(ZdIndex other) const {
    require_same_modulus(other);
    return ZdIndex(v_ * other.v_, Dimension(d_));
}

ZdIndex ZdIndex::operator-() const { return ZdIndex(-v_, Dimension(d_)); }

CMatrix::CMatrix(std::size_t n) : n_(n), a_(n * n, cplx(0.0, 0.0)) {}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const cplx aik = a_[i * n_ + k];
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                out.a_[i * n_ + j] += aik * rhs.a_[k * n_ + j];
            }
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

CMatrix CMatrix::scaled(cplx factor) const {
    CMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * factor;
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out.a_[j * n_ + i] = std::conj(a_[i * n_ + j]);
        }
    }
    return out;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> v) const {
    if (v.size() != n_) throw std::invalid_argument("CMatrix: vector size");
    std::vector<cplx> out(n_, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n_; ++i) {
        cplx acc(0.0, 0.0);
        const cplx* row = a_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("CMatrix: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        m = std::max(m, std::abs(a_[i] - other.a_[i]));
    }
    return m;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& x : a_) m = std::max(m, std::abs(x));
    return m;
}

cplx CMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
    return t;
}

double CMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            m = std::max(m, std::abs(a_[i * n_ + j] - std::conj(a_[j * n_ + i])));
        }
    }
    return m;
}

double norm2(std::span<const cplx> v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

PureState::PureState(Dimension dim, std::vector<cplx> amps, bool strict)
    : dim_(dim), amps_(std::move(amps)) {
    if (amps_.size() != static_cast<std::size_t>(dim_.value())) {
        throw std::invalid_argument("PureState: amplitude count mismatch");
    }
    const double n = norm2(amps_);
    if (n < 1e-300) throw std::invalid_argument("PureState: zero vector");
    if (strict && std::abs(n - 1.0) > kNormGate) {
        throw std::invalid_argument("PureState: input not normalized");
    }
    for (cplx& a : amps_) a /= n;
}

PureState::PureState(Dimension dim, std::vector<cplx> amplitudes)
    : PureState(dim, std::move(amplitudes), true) {}

PureState PureState::normalized(Dimension dim, std::vector<cplx> amplitudes) {
    return PureState(dim, std::move(amplitudes), false);
}

PureState PureState::basis_state(Dimension dim, int r) {
    if (r < 0 || r >= dim.value()) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    std::vector<cplx> a(static_cast<std::size_t>(dim.value()), cplx(0.0, 0.0));
    a[static_cast<std::size_t>(r)] = 1.0;
    return PureState::normalized(dim, std::move(a));
}

DensityMatrix::DensityMatrix(Dimension dim, CMatrix entries)
    : dim_(dim), m_(std::move(entries)) {
    if (m_.size() != static_cast<std::size_t>(dim_.value())) {
        throw std::invalid_argument("DensityMatrix: size mismatch");
    }
    if (m_.hermiticity_defect() > kHermTol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(m_.trace() - cplx(1.0, 0.0)) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace != 1");
    }
    const EigenDecomposition eig = hermitian_eigen(m_);
    if (eig.eigenvalues.back() < -kPsdTol) {
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
}

DensityMatrix density_from_pure(const PureState& s) {
    const std::vector<cplx>& a = s.amplitudes();
    const double dev = std::abs(norm2(a) - 1.0);
    if (dev > kNormGate) {
        throw std::invalid_argument("density_from_pure: state not normalized");
    }
    const std::size_t d = a.size();
    CMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = a[i] * std::conj(a[j]);
        }
    }
    return DensityMatrix(s.dim(), std::move(m));
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms) {
    if (terms.empty()) throw std::invalid_argument("mix: no terms");
    const Dimension dim = terms.front().second.dim();
    double wsum = 0.0;
    for (const auto& [w, rho] : terms) {
        if (w < 0.0) throw std::invalid_argument("mix: negative weight");
        if (rho.dim() != dim) throw std::invalid_argument("mix: dim mismatch");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > kTraceTol) {
        throw std::invalid_argument("mix: weights must sum to 1");
    }
    const std::size_t d = static_cast<std::size_t>(dim.value());
    CMatrix m(d);
    for (const auto& [w, rho] : terms) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                m(i, j) += w * rho.entries()(i, j);
            }
        }
    }
    return DensityMatrix(dim, std::move(m));
}

ProbDist::ProbDist(Dimension dim, std::vector<double> probs)
    : dim_(dim), p_(std::move(probs)) {
    if (p_.size() != static_cast<std::size_t>(dim_.value())) {
        throw std::invalid_argument("ProbDist: length mismatch");
    }
    double sum = 0.0;
    for (double& x : p_) {
        if (x < 0.0) {
            if (x < -kProbClamp) {
                throw std::invalid_argument("ProbDist: negative entry");
            }
            x = 0.0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw std::invalid_argument("ProbDist: entries must sum to 1");
    }
}

}  // namespace qgini
