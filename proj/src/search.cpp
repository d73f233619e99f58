#include "qgini/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qgini/fourier.hpp"
#include "qgini/rng.hpp"

namespace qgini {

PureState sample_haar_state(Dimension dim, SplitMix64& rng) {
    const std::size_t d = static_cast<std::size_t>(dim.value());
    std::vector<cplx> a(d);
    for (std::size_t k = 0; k < d; ++k) {
        double re = 0.0, im = 0.0;
        rng.gaussian_pair(re, im);
        a[k] = cplx(re, im);
    }
    return PureState::normalized(dim, std::move(a));
}

double eta_tilde(Dimension dim) {
    const double sd = std::sqrt(static_cast<double>(dim.value()));
    return gini_max(dim) * sd / (1.0 + sd);
}

double special_state_gxp(Dimension dim) {
    const double sd = std::sqrt(static_cast<double>(dim.value()));
    return gini_max(dim) * (1.0 + 1.0 / (1.0 + sd));
}

PureState special_state(Dimension dim, ZdIndex a) {
    const int d = dim.value();
    const double sd = std::sqrt(static_cast<double>(d));
    const double prefactor = std::sqrt(sd / (2.0 * sd + 2.0));
    // |X;0> + |P;a>; the prefactor absorbs the overlap <X;0|P;a> = 1/sqrt(d).
    std::vector<cplx> v = momentum_state(dim, a).amplitudes();
    v[0] += 1.0;
    for (cplx& x : v) x *= prefactor;
    return PureState(dim, std::move(v));
}

PureState local_refine(const PureState& start, const SearchConfig& cfg,
                       std::vector<double>* accepted_trace) {
    if (cfg.step_min >= cfg.step_init) {
        throw std::invalid_argument("local_refine: step_min must be < step_init");
    }
    const Dimension dim = start.dim();
    const std::size_t d = static_cast<std::size_t>(dim.value());
    const GxpEvaluator gxp(dim);

    std::vector<cplx> v = start.amplitudes();
    double best = gxp(v);
    std::vector<cplx> probe(d);

    for (double step = cfg.step_init; step >= cfg.step_min;) {
        bool improved = false;
        for (std::size_t k = 0; k < d; ++k) {
            for (int part = 0; part < 2; ++part) {
                const cplx dir = (part == 0) ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
                for (double sgn : {1.0, -1.0}) {
                    probe = v;
                    probe[k] += sgn * step * dir;
                    const double nrm = norm2(probe);
                    for (cplx& x : probe) x /= nrm;
                    const double val = gxp(probe);
                    if (val > best) {
                        best = val;
                        v = probe;
                        improved = true;
                        if (accepted_trace) accepted_trace->push_back(val);
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return PureState::normalized(dim, std::move(v));
}

EtaEstimate estimate_eta(Dimension dim, const SearchConfig& cfg) {
    if (cfg.n_random < 1) {
        throw std::invalid_argument("estimate_eta: n_random must be >= 1");
    }
    const GxpEvaluator gxp(dim);

    std::vector<PureState> pool;
    pool.reserve(static_cast<std::size_t>(cfg.n_random) + 1);
    std::vector<double> vals;
    vals.reserve(pool.capacity());
    for (int i = 0; i < cfg.n_random; ++i) {
        // Per-index substream: enlarging n_random keeps earlier samples,
        // which makes the estimate monotone in the pool size.
        SplitMix64 rng(SplitMix64::derive(cfg.seed, static_cast<std::uint64_t>(i)));
        pool.push_back(sample_haar_state(dim, rng));
        vals.push_back(gxp(pool.back()));
    }
    // The analytic-bound state is always part of the candidate pool, so
    // eta_hat <= eta_tilde holds in every run.
    pool.push_back(special_state(dim, ZdIndex(0, dim)));
    vals.push_back(gxp(pool.back()));

    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] > vals[best_idx]) best_idx = i;
    }
    PureState best_state = pool[best_idx];
    double best_val = vals[best_idx];

    if (cfg.refine && cfg.n_restarts > 0) {
        std::vector<std::size_t> order(pool.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t i, std::size_t j) {
                             return vals[i] > vals[j];
                         });
        const std::size_t starts =
            std::min(order.size(), static_cast<std::size_t>(cfg.n_restarts));
        for (std::size_t r = 0; r < starts; ++r) {
            PureState refined = local_refine(pool[order[r]], cfg);
            const double val = gxp(refined);
            if (val > best_val) {
                best_val = val;
                best_state = std::move(refined);
            }
        }
    }

    EtaEstimate est{/*d=*/dim.value(),
                    /*sup_gxp_estimate=*/best_val,
                    /*eta_hat=*/2.0 * gini_max(dim) - best_val,
                    /*eta_tilde=*/eta_tilde(dim),
                    /*n_samples=*/cfg.n_random,
                    /*refined=*/cfg.refine,
                    /*best_state=*/std::move(best_state),
                    /*seed=*/cfg.seed};
    return est;
}

std::pair<PureState, double> find_min_uncertainty_state(
    Dimension dim, const SearchConfig& cfg) {
    EtaEstimate est = estimate_eta(dim, cfg);
    return {std::move(est.best_state), est.eta_hat};
}

}  // namespace qgini
