// Acceptance suite: one self-contained check per criterion, one
// [PASS]/[FAIL] line each, nonzero exit if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "expansion_reference.hpp"
#include "qgini/eigen.hpp"
#include "qgini/phase_space.hpp"
#include "qgini/reference_states.hpp"
#include "qgini/rng.hpp"
#include "qgini/search.hpp"
#include "qgini/types.hpp"
#include "qgini/uncertainty.hpp"

using namespace qgini;

namespace {

constexpr std::uint64_t kBaseSeed = 12345;

PureState random_state(Dimension dim, SplitMix64& rng) {
    std::vector<cplx> a(static_cast<std::size_t>(dim.value()));
    for (auto& x : a) {
        double re = 0.0, im = 0.0;
        rng.gaussian_pair(re, im);
        x = cplx(re, im);
    }
    return PureState::normalized(dim, std::move(a));
}

ProbDist random_dist(Dimension dim, SplitMix64& rng) {
    std::vector<double> p(static_cast<std::size_t>(dim.value()));
    double sum = 0.0;
    for (double& x : p) {
        x = rng.uniform01();
        sum += x;
    }
    for (double& x : p) x /= sum;
    return ProbDist(dim, std::move(p));
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

std::string fnum(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// 1. Sorted and pairwise Gini definitions agree to 1e-12.
Outcome criterion1() {
    Outcome out;
    double worst = 0.0;
    for (int d = 3; d <= 15; d += 2) {
        const Dimension dim(d);
        SplitMix64 rng(SplitMix64::derive(kBaseSeed, 1000 + static_cast<std::uint64_t>(d)));
        for (int rep = 0; rep < 1000; ++rep) {
            const ProbDist p = random_dist(dim, rng);
            worst = std::max(worst, std::abs(gini_sorted(p) - gini_pairwise(p)));
        }
    }
    if (worst >= 1e-12) out.fail("max |sorted - pairwise| = " + fnum(worst));
    out.note("max deviation " + fnum(worst) + " over 7000 distributions");
    return out;
}

// 2. G_XP of the |X;0>+|P;a> state equals its closed form to 1e-10.
Outcome criterion2() {
    Outcome out;
    double worst = 0.0;
    for (int d = 3; d <= 31; d += 2) {
        const Dimension dim(d);
        const double want = special_state_gxp(dim);
        for (int a = 0; a < d; ++a) {
            const GiniReport r = gini_report(special_state(dim, ZdIndex(a, dim)));
            worst = std::max(worst, std::abs(r.g_xp - want));
        }
    }
    if (worst >= 1e-10) out.fail("max closed-form deviation " + fnum(worst));
    out.note("max deviation " + fnum(worst) + " across d=3..31, all a");
    return out;
}

// 3. Resolution of the identity for arbitrary fiducials.
Outcome criterion3() {
    Outcome out;
    double worst = 0.0;
    for (int d = 3; d <= 15; d += 2) {
        const Dimension dim(d);
        SplitMix64 rng(SplitMix64::derive(kBaseSeed, 3000 + static_cast<std::uint64_t>(d)));
        for (int rep = 0; rep < 20; ++rep) {
            const CoherentFamily fam(random_state(dim, rng));
            worst = std::max(worst, identity_resolution_defect(fam));
        }
    }
    if (worst >= 1e-10) out.fail("max defect " + fnum(worst));
    out.note("max defect " + fnum(worst) + " over 20 fiducials per d=3..15");
    return out;
}

// 4. The d=3 expansion components match the reference table to 5e-4.
Outcome criterion4() {
    Outcome out;
    const Dimension d3(3);
    std::vector<cplx> fid = reference_fiducial(3);
    std::reverse(fid.begin(), fid.end());  // pinned reading, see header
    const CoherentFamily fam(PureState::normalized(d3, std::move(fid)));
    const std::vector<cplx>& s = qgini_testdata::expansion_input_d3();
    const ExpansionCoefficients coeffs = expand(fam, s);

    double worst = 0.0;
    for (const auto& entry : qgini_testdata::expansion_components_d3()) {
        const int a = ((-entry.alpha) % 3 + 3) % 3;
        const int b = (entry.beta % 3 + 3) % 3;
        const cplx c = coeffs.at(a, b);
        const PureState& m = fam.member(a, b);
        for (int r = 0; r < 3; ++r) {
            worst = std::max(worst,
                             std::abs(c * m.amp(r) - entry.vector[static_cast<std::size_t>(r)]));
        }
    }
    if (worst > 5e-4) out.fail("max entry deviation " + fnum(worst));
    out.note("max entry deviation " + fnum(worst) + " over 9 components");
    return out;
}

// 5. The optimizer's Delta dominates the reference states at d = 3, 5, 7.
Outcome criterion5() {
    Outcome out;
    for (int d : {3, 5, 7}) {
        const Dimension dim(d);
        const double ref_delta =
            gini_report(PureState::normalized(dim, reference_fiducial(d))).delta;
        SearchConfig cfg;
        cfg.seed = SplitMix64::derive(kBaseSeed, static_cast<std::uint64_t>(d));
        const auto [g, delta] = find_min_uncertainty_state(dim, cfg);
        if (delta > ref_delta + 1e-6) {
            out.fail("d=" + std::to_string(d) + ": delta " + fnum(delta) +
                     " > reference " + fnum(ref_delta));
        } else {
            out.note("d=" + std::to_string(d) + ": " + fnum(delta) + " <= " +
                     fnum(ref_delta));
        }
    }
    return out;
}

// 6. Refined eta_hat within 0.02 of eta_tilde at d = 41, 61, 81, 101,
// with the exact ordering eta_hat <= eta_tilde.
Outcome criterion6() {
    Outcome out;
    for (int d : {41, 61, 81, 101}) {
        const Dimension dim(d);
        SearchConfig cfg;
        cfg.seed = SplitMix64::derive(kBaseSeed, static_cast<std::uint64_t>(d));
        const EtaEstimate e = estimate_eta(dim, cfg);
        if (e.eta_hat < -1e-12) {
            out.fail("d=" + std::to_string(d) + ": eta_hat negative");
        }
        if (e.eta_hat > e.eta_tilde + 1e-12) {
            out.fail("d=" + std::to_string(d) + ": ordering violated");
        }
        const double gap = std::abs(e.eta_hat - e.eta_tilde);
        if (gap >= 0.02) {
            out.fail("d=" + std::to_string(d) + ": |eta_hat - eta_tilde| = " +
                     fnum(gap) + " (eta_hat " + fnum(e.eta_hat) + ", eta_tilde " +
                     fnum(e.eta_tilde) + ")");
        }
    }
    return out;
}

// 7. Group law and Delta displacement invariance.
Outcome criterion7() {
    Outcome out;
    double worst_law = 0.0;
    double worst_delta = 0.0;
    for (int d : {3, 5, 7}) {
        const Dimension dim(d);
        SplitMix64 rng(SplitMix64::derive(kBaseSeed, 7000 + static_cast<std::uint64_t>(d)));
        for (int rep = 0; rep < 200; ++rep) {
            const auto pick = [&]() {
                return GroupElement{
                    {ZdIndex(static_cast<int>(rng.next() % 997), dim),
                     ZdIndex(static_cast<int>(rng.next() % 997), dim)},
                    ZdIndex(static_cast<int>(rng.next() % 997), dim)};
            };
            const GroupElement a = pick();
            const GroupElement b = pick();
            const CMatrix lhs =
                group_element_matrix(dim, a) * group_element_matrix(dim, b);
            worst_law = std::max(
                lhs.max_abs_diff(group_element_matrix(dim, compose(a, b))),
                worst_law);

            const PureState psi = random_state(dim, rng);
            const GiniReport before = gini_report(psi);
            const CMatrix dm = displacement_matrix(
                dim, {ZdIndex(static_cast<int>(rng.next() % 997), dim),
                      ZdIndex(static_cast<int>(rng.next() % 997), dim)});
            const PureState moved =
                PureState::normalized(dim, dm.apply(psi.amplitudes()));
            worst_delta = std::max(
                std::abs(gini_report(moved).delta - before.delta), worst_delta);
        }
    }
    if (worst_law >= 1e-12) out.fail("group law deviation " + fnum(worst_law));
    if (worst_delta >= 1e-12) {
        out.fail("Delta invariance deviation " + fnum(worst_delta));
    }
    out.note("law " + fnum(worst_law) + ", Delta " + fnum(worst_delta));
    return out;
}

// 8. Noise robustness: ordering in epsilon, per-trial bound, smallness.
Outcome criterion8() {
    Outcome out;
    const Dimension d3(3);
    std::vector<cplx> fid = reference_fiducial(3);
    std::reverse(fid.begin(), fid.end());
    const CoherentFamily fam(PureState::normalized(d3, std::move(fid)));
    const std::vector<cplx>& s = qgini_testdata::expansion_input_d3();

    const ExpansionCoefficients coeffs = expand(fam, s);
    double coeff_abs_sum = 0.0;
    for (const cplx& c : coeffs.data()) coeff_abs_sum += std::abs(c);
    const double snorm = norm2(std::span<const cplx>(s));

    const std::uint64_t seed = SplitMix64::derive(kBaseSeed, 8);
    const NoiseResult r3 = noise_experiment(fam, s, 0.3, 10, seed);
    const NoiseResult r5 = noise_experiment(fam, s, 0.5, 10, seed);

    if (!(r3.avg_error_norm < r5.avg_error_norm)) {
        out.fail("avg(0.3) !< avg(0.5)");
    }
    for (std::size_t t = 0; t < r3.per_trial.size(); ++t) {
        if (r3.per_trial[t] > 0.3 * coeff_abs_sum ||
            r5.per_trial[t] > 0.5 * coeff_abs_sum) {
            out.fail("per-trial bound violated at trial " + std::to_string(t));
        }
    }
    if (!(r3.avg_error_norm < 0.15 * snorm)) {
        out.fail("avg error " + fnum(r3.avg_error_norm) + " >= 15% of ||s||");
    }
    out.note("avg(0.3) = " + fnum(r3.avg_error_norm) + ", avg(0.5) = " +
             fnum(r5.avg_error_norm) + ", ||s|| = " + fnum(snorm));
    return out;
}

// 9. Found minimum-uncertainty states are not entropy-minimal.
Outcome criterion9() {
    Outcome out;
    double min_excess = 1e9;
    for (int d = 3; d <= 31; d += 2) {
        const Dimension dim(d);
        SearchConfig cfg;
        cfg.seed = SplitMix64::derive(kBaseSeed, static_cast<std::uint64_t>(d));
        const auto [g, delta] = find_min_uncertainty_state(dim, cfg);
        const double excess = entropy_report(g).excess;
        min_excess = std::min(min_excess, excess);
        if (excess < -1e-10) {
            out.fail("d=" + std::to_string(d) + ": entropic bound violated");
        }
        if (excess <= 0.01) {
            out.fail("d=" + std::to_string(d) + ": excess " + fnum(excess) +
                     " <= 0.01");
        }
    }
    out.note("min excess " + fnum(min_excess) + " over d=3..31");
    return out;
}

// 10. Gini convexity and the spectral mixture bound.
Outcome criterion10() {
    Outcome out;
    double worst_convex = -1e9;
    double worst_mix = -1e9;
    for (int d : {3, 5, 7}) {
        const Dimension dim(d);
        SplitMix64 rng(SplitMix64::derive(kBaseSeed, 10000 + static_cast<std::uint64_t>(d)));
        for (int rep = 0; rep < 100; ++rep) {
            const DensityMatrix rho = density_from_pure(random_state(dim, rng));
            const DensityMatrix sigma = density_from_pure(random_state(dim, rng));
            const double p = rng.uniform01();
            const DensityMatrix mixed = mix({{p, rho}, {1.0 - p, sigma}});

            const double lhs = gini_sorted(prob_position(mixed));
            const double rhs = p * gini_sorted(prob_position(rho)) +
                               (1.0 - p) * gini_sorted(prob_position(sigma));
            worst_convex = std::max(worst_convex, lhs - rhs);

            const EigenDecomposition eig = hermitian_eig(mixed);
            double emax = 0.0;
            for (const PureState& v : eig.eigenvectors) {
                emax = std::max(emax, gini_report(v).g_xp);
            }
            worst_mix = std::max(worst_mix, gini_report(mixed).g_xp - emax);
        }
    }
    if (worst_convex >= 1e-12) out.fail("convexity violated by " + fnum(worst_convex));
    if (worst_mix >= 1e-12) out.fail("mixture bound violated by " + fnum(worst_mix));
    out.note("max convexity slack " + fnum(worst_convex) + ", max mixture slack " +
             fnum(worst_mix));
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Gini definition equivalence (sorted vs pairwise, 1e-12)", 5.0,
         criterion1},
        {2, "analytic G_XP of the |X;0>+|P;a> state (1e-10, all a)", 10.0,
         criterion2},
        {3, "resolution of identity defect < 1e-10", 10.0, criterion3},
        {4, "d=3 expansion component table reproduced to 5e-4", 1.0,
         criterion4},
        {5, "optimizer dominates reference states at d=3,5,7 (+1e-6)", 120.0,
         criterion5},
        {6, "refined eta_hat within 0.02 of eta_tilde at d=41..101", 600.0,
         criterion6},
        {7, "group law and Delta displacement invariance (1e-12)", 30.0,
         criterion7},
        {8, "noise robustness: epsilon ordering, trial bound, <15% of ||s||",
         1.0, criterion8},
        {9, "entropic excess of found states > 0.01 for d=3..31", 180.0,
         criterion9},
        {10, "Gini convexity and spectral mixture bound (1e-12)", 30.0,
         criterion10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (elapsed >= c.time_limit_s) {
            out.fail("runtime " + fnum(elapsed) + "s exceeds " +
                     fnum(c.time_limit_s) + "s");
        }
        if (!out.pass) ++failures;
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n",
                    out.pass ? "PASS" : "FAIL", c.id, c.name, elapsed,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
