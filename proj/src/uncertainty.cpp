#include "qgini/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgini/fourier.hpp"

namespace qgini {

namespace {

// Gini of a raw probability array (caller guarantees nonnegative entries
// summing to ~1). Stable sort keeps ties in original-index order so runs
// are bit-reproducible.
double gini_of(std::vector<double> p) {
    const std::size_t d = p.size();
    std::stable_sort(p.begin(), p.end());
    double acc = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        acc += static_cast<double>(d - k) * p[k];
    }
    double g = 1.0 - 2.0 / (static_cast<double>(d) + 1.0) * acc;
    if (g < 0.0 && g > -1e-12) g = 0.0;  // rounding at the uniform point
    return g;
}

double shannon_entropy(const std::vector<double>& p) {
    double e = 0.0;
    for (double x : p) {
        if (x < 1e-300) continue;  // 0 ln 0 = 0
        e -= x * std::log(x);
    }
    return e;
}

std::vector<double> position_probs(const PureState& s) {
    std::vector<double> p(s.amplitudes().size());
    for (std::size_t r = 0; r < p.size(); ++r) {
        p[r] = std::norm(s.amplitudes()[r]);
    }
    return p;
}

std::vector<double> momentum_probs(const PureState& s) {
    const CMatrix fdag = fourier_matrix(s.dim()).adjoint();
    const std::vector<cplx> ps = fdag.apply(s.amplitudes());
    std::vector<double> p(ps.size());
    for (std::size_t r = 0; r < p.size(); ++r) p[r] = std::norm(ps[r]);
    return p;
}

}  // namespace

ProbDist prob_position(const DensityMatrix& rho) {
    const std::size_t d = static_cast<std::size_t>(rho.dim_value());
    std::vector<double> p(d);
    for (std::size_t r = 0; r < d; ++r) p[r] = rho.entries()(r, r).real();
    return ProbDist(rho.dim(), std::move(p));
}

ProbDist prob_momentum(const DensityMatrix& rho) {
    const CMatrix f = fourier_matrix(rho.dim());
    const CMatrix in_momentum = f.adjoint() * rho.entries() * f;
    const std::size_t d = static_cast<std::size_t>(rho.dim_value());
    std::vector<double> p(d);
    for (std::size_t r = 0; r < d; ++r) p[r] = in_momentum(r, r).real();
    return ProbDist(rho.dim(), std::move(p));
}

ProbDist prob_position(const PureState& s) {
    return ProbDist(s.dim(), position_probs(s));
}

ProbDist prob_momentum(const PureState& s) {
    return ProbDist(s.dim(), momentum_probs(s));
}

double gini_sorted(const ProbDist& p) { return gini_of(p.probs()); }

double gini_pairwise(const ProbDist& p) {
    const std::vector<double>& v = p.probs();
    const std::size_t d = v.size();
    double acc = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
            acc += std::abs(v[r] - v[s]);
        }
    }
    return acc / (2.0 * (static_cast<double>(d) + 1.0));
}

double gini_max(Dimension dim) {
    const double d = static_cast<double>(dim.value());
    return (d - 1.0) / (d + 1.0);
}

namespace {

GiniReport make_report(Dimension dim, double gx, double gp) {
    GiniReport r;
    r.d = dim.value();
    r.g_x = gx;
    r.g_p = gp;
    r.g_xp = gx + gp;
    r.delta = 2.0 * gini_max(dim) - r.g_xp;
    return r;
}

EntropyReport make_entropy(Dimension dim, double ex, double ep) {
    EntropyReport r;
    r.d = dim.value();
    r.e_x = ex;
    r.e_p = ep;
    r.excess = ex + ep - std::log(static_cast<double>(dim.value()));
    return r;
}

}  // namespace

GiniReport gini_report(const DensityMatrix& rho) {
    return make_report(rho.dim(), gini_sorted(prob_position(rho)),
                       gini_sorted(prob_momentum(rho)));
}

GiniReport gini_report(const PureState& s) {
    return make_report(s.dim(), gini_of(position_probs(s)),
                       gini_of(momentum_probs(s)));
}

EntropyReport entropy_report(const DensityMatrix& rho) {
    return make_entropy(rho.dim(), shannon_entropy(prob_position(rho).probs()),
                        shannon_entropy(prob_momentum(rho).probs()));
}

EntropyReport entropy_report(const PureState& s) {
    return make_entropy(s.dim(), shannon_entropy(position_probs(s)),
                        shannon_entropy(momentum_probs(s)));
}

GxpEvaluator::GxpEvaluator(Dimension dim)
    : dim_(dim),
      px_(static_cast<std::size_t>(dim.value())),
      pp_(static_cast<std::size_t>(dim.value())) {
    const CMatrix fdag = fourier_matrix(dim).adjoint();
    fdag_ = fdag.data();
}

double GxpEvaluator::operator()(std::span<const cplx> amplitudes) const {
    const std::size_t d = px_.size();
    double nrm = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        px_[r] = std::norm(amplitudes[r]);
        nrm += px_[r];
    }
    for (std::size_t r = 0; r < d; ++r) {
        const cplx* row = fdag_.data() + r * d;
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < d; ++k) acc += row[k] * amplitudes[k];
        pp_[r] = std::norm(acc);
    }
    const double inv = 1.0 / nrm;
    for (std::size_t r = 0; r < d; ++r) {
        px_[r] *= inv;
        pp_[r] *= inv;
    }
    return gini_of(px_) + gini_of(pp_);
}

}  // namespace qgini
