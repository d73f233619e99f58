#include "qgini/phase_space.hpp"

#include <cmath>
#include <stdexcept>

#include "qgini/fourier.hpp"
#include "qgini/rng.hpp"

namespace qgini {

namespace {

void require_same_dim(int a, int b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

CMatrix displacement_matrix(Dimension dim, PhasePoint p) {
    const int d = dim.value();
    const int h = dim.half_inverse();
    const int a = p.alpha.value();
    const int b = p.beta.value();
    CMatrix m(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const long long phase =
            static_cast<long long>(h) * a * b + static_cast<long long>(a) * k;
        m(static_cast<std::size_t>((k + b) % d), static_cast<std::size_t>(k)) =
            omega_power(dim, phase);
    }
    return m;
}

CMatrix z_power(Dimension dim, ZdIndex a) {
    const int d = dim.value();
    CMatrix m(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        m(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
            omega_power(dim, static_cast<long long>(a.value()) * k);
    }
    return m;
}

CMatrix x_power(Dimension dim, ZdIndex b) {
    const int d = dim.value();
    CMatrix m(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        m(static_cast<std::size_t>((k + b.value()) % d),
          static_cast<std::size_t>(k)) = 1.0;
    }
    return m;
}

CMatrix group_element_matrix(Dimension dim, const GroupElement& g) {
    return displacement_matrix(dim, g.point)
        .scaled(omega_power(dim, g.gamma.value()));
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    require_same_dim(a.gamma.modulus(), b.gamma.modulus(), "compose");
    const Dimension dim(a.gamma.modulus());
    const ZdIndex h(dim.half_inverse(), dim);
    const ZdIndex alpha = a.point.alpha + b.point.alpha;
    const ZdIndex beta = a.point.beta + b.point.beta;
    const ZdIndex twist =
        h * (a.point.alpha * b.point.beta - b.point.alpha * a.point.beta);
    return GroupElement{{alpha, beta}, a.gamma + b.gamma + twist};
}

GroupElement inverse(const GroupElement& g) {
    return GroupElement{{-g.point.alpha, -g.point.beta}, -g.gamma};
}

GroupElement identity_element(Dimension dim) {
    const ZdIndex zero(0, dim);
    return GroupElement{{zero, zero}, zero};
}

ExpansionCoefficients::ExpansionCoefficients(Dimension dim,
                                             std::vector<cplx> coeffs)
    : dim_(dim), c_(std::move(coeffs)) {
    const std::size_t d = static_cast<std::size_t>(dim_.value());
    if (c_.size() != d * d) {
        throw std::invalid_argument("ExpansionCoefficients: expected d*d entries");
    }
}

cplx ExpansionCoefficients::at(int alpha, int beta) const {
    const int d = dim_.value();
    if (alpha < 0 || alpha >= d || beta < 0 || beta >= d) {
        throw std::invalid_argument("ExpansionCoefficients: index out of range");
    }
    return c_[static_cast<std::size_t>(alpha * d + beta)];
}

CoherentFamily::CoherentFamily(PureState fiducial)
    : fiducial_(std::move(fiducial)),
      cache_(static_cast<std::size_t>(fiducial_.dim_value()) *
             static_cast<std::size_t>(fiducial_.dim_value())) {}

const PureState& CoherentFamily::member(PhasePoint p) const {
    return member(p.alpha.value(), p.beta.value());
}

const PureState& CoherentFamily::member(int alpha, int beta) const {
    const int d = fiducial_.dim_value();
    const std::size_t slot =
        static_cast<std::size_t>(((alpha % d + d) % d) * d + ((beta % d + d) % d));
    std::lock_guard<std::mutex> lock(mu_);
    if (!cache_[slot]) {
        const Dimension dim = fiducial_.dim();
        const PhasePoint point{ZdIndex(alpha, dim), ZdIndex(beta, dim)};
        std::vector<cplx> v =
            displacement_matrix(dim, point).apply(fiducial_.amplitudes());
        cache_[slot] = std::make_unique<const PureState>(
            PureState::normalized(dim, std::move(v)));
    }
    return *cache_[slot];
}

double identity_resolution_defect(const CoherentFamily& fam) {
    const int d = fam.dim().value();
    const std::size_t n = static_cast<std::size_t>(d);
    CMatrix sum(n);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const std::vector<cplx>& m = fam.member(a, b).amplitudes();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    sum(i, j) += m[i] * std::conj(m[j]);
                }
            }
        }
    }
    return sum.scaled(1.0 / d).max_abs_diff(CMatrix::identity(n));
}

ExpansionCoefficients expand(const CoherentFamily& fam,
                             std::span<const cplx> s) {
    const int d = fam.dim().value();
    if (s.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("expand: vector length mismatch");
    }
    std::vector<cplx> c(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            c[static_cast<std::size_t>(a * d + b)] =
                inner(fam.member(a, b).amplitudes(), s) / static_cast<double>(d);
        }
    }
    return ExpansionCoefficients(fam.dim(), std::move(c));
}

ExpansionCoefficients expand(const CoherentFamily& fam, const PureState& s) {
    return expand(fam, std::span<const cplx>(s.amplitudes()));
}

std::vector<cplx> reconstruct(const CoherentFamily& fam,
                              const ExpansionCoefficients& c) {
    const int d = fam.dim().value();
    require_same_dim(d, c.dim().value(), "reconstruct");
    std::vector<cplx> out(static_cast<std::size_t>(d), cplx(0.0, 0.0));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const cplx coef = c.at(a, b);
            const std::vector<cplx>& m = fam.member(a, b).amplitudes();
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += coef * m[i];
        }
    }
    return out;
}

NoiseResult noise_experiment(const CoherentFamily& fam,
                             std::span<const cplx> s, double epsilon,
                             int trials, std::uint64_t seed) {
    if (epsilon < 0.0) throw std::invalid_argument("noise_experiment: epsilon < 0");
    if (trials < 1) throw std::invalid_argument("noise_experiment: trials < 1");
    const int d = fam.dim().value();
    const ExpansionCoefficients coeffs = expand(fam, s);

    NoiseResult out;
    out.per_trial.resize(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(t)));
        std::vector<cplx> err(static_cast<std::size_t>(d), cplx(0.0, 0.0));
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                // lambda = epsilon * u keeps matched seeds exactly
                // proportional across epsilon values.
                const double lambda = epsilon * rng.uniform_sym();
                const cplx w = lambda * coeffs.at(a, b);
                const std::vector<cplx>& m = fam.member(a, b).amplitudes();
                for (std::size_t i = 0; i < err.size(); ++i) err[i] += w * m[i];
            }
        }
        out.per_trial[static_cast<std::size_t>(t)] = norm2(err);
    }
    double sum = 0.0;
    for (double x : out.per_trial) sum += x;
    out.avg_error_norm = sum / static_cast<double>(trials);
    return out;
}

}  // namespace qgini
