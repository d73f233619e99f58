// Estimation of the Gini uncertainty constant eta_d: Haar sampling of
// pure states, the analytic bound eta_tilde, derivative-free refinement
// of the best candidates, and the minimum-uncertainty state search.
#pragma once

#include <cstdint>
#include <utility>

#include "qgini/types.hpp"
#include "qgini/uncertainty.hpp"

namespace qgini {
class SplitMix64;

struct SearchConfig {
    int n_random = 400;
    int n_restarts = 5;
    bool refine = true;
    double step_init = 0.1;
    double step_min = 1e-6;
    std::uint64_t seed = 12345;
};

struct EtaEstimate {
    int d = 0;
    double sup_gxp_estimate = 0.0;
    double eta_hat = 0.0;    // 2(d-1)/(d+1) - sup_gxp_estimate
    double eta_tilde = 0.0;
    int n_samples = 0;
    bool refined = false;
    PureState best_state;
    std::uint64_t seed = 0;
};

// d iid standard complex Gaussian amplitudes, normalized (Haar on the
// unit sphere).
PureState sample_haar_state(Dimension dim, SplitMix64& rng);

// (d-1)/(d+1) * sqrt(d)/(1+sqrt(d)), the analytic upper bound on eta_d.
double eta_tilde(Dimension dim);

// sqrt(sqrt(d)/(2 sqrt(d)+2)) * (|X;0> + |P;a>); exactly unit norm, and
// G_XP = (d-1)/(d+1) * (1 + 1/(1+sqrt(d))) independent of a.
PureState special_state(Dimension dim, ZdIndex a);
double special_state_gxp(Dimension dim);

// Pattern search maximizing G_XP on the unit sphere: probe +-step along
// the 2d real coordinates (real/imag parts), renormalize, accept strict
// improvements; halve step after a sweep with no acceptance; stop below
// step_min. Output G_XP >= input G_XP. If accepted_trace is given it
// receives the strictly increasing sequence of accepted values.
PureState local_refine(const PureState& start, const SearchConfig& cfg,
                       std::vector<double>* accepted_trace = nullptr);

// Samples cfg.n_random Haar states (per-index substreams of cfg.seed, so
// enlarging the pool keeps earlier samples), always injects the
// special_state(dim, 0) into the pool, optionally refines the top
// cfg.n_restarts candidates, and returns the best G_XP found with the
// derived eta_hat.
EtaEstimate estimate_eta(Dimension dim, const SearchConfig& cfg);

// Best state from estimate_eta and its uncertainty gap Delta.
std::pair<PureState, double> find_min_uncertainty_state(
    Dimension dim, const SearchConfig& cfg);

}  // namespace qgini
