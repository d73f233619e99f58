// Discrete phase space Z_d x Z_d: displacement operators D(alpha, beta),
// the Heisenberg-Weyl group law, coherent families Sigma(|f>), resolution
// of the identity, expansion/reconstruction of arbitrary vectors, and the
// multiplicative-noise robustness experiment.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>

#include "qgini/types.hpp"

namespace qgini {

struct PhasePoint {
    ZdIndex alpha;
    ZdIndex beta;
};

// D(alpha, beta) omega^gamma; the phase exponent gamma lives in Z_d.
struct GroupElement {
    PhasePoint point;
    ZdIndex gamma;
};

// Built directly from the closed-form action
//   D(a,b)|X;k> = omega^{h a b + a k} |X;k+b>,  h = (d+1)/2,
// not from matrix powers of Z and X (those remain a test oracle).
CMatrix displacement_matrix(Dimension dim, PhasePoint p);

// Z^a = sum_m omega^{am} |X;m><X;m| and X^b = sum_m |X;m+b><X;m|.
CMatrix z_power(Dimension dim, ZdIndex a);
CMatrix x_power(Dimension dim, ZdIndex b);

// Full matrix of D(alpha, beta) omega^gamma.
CMatrix group_element_matrix(Dimension dim, const GroupElement& g);

// Group law: (a1,b1,c1)*(a2,b2,c2) =
//   (a1+a2, b1+b2, c1+c2 + h(a1 b2 - a2 b1)), all mod d.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement identity_element(Dimension dim);

// Expansion coefficients s_{alpha,beta} = (1/d) <alpha,beta|s>, indexed
// row alpha, column beta.
class ExpansionCoefficients {
  public:
    ExpansionCoefficients(Dimension dim, std::vector<cplx> coeffs);

    Dimension dim() const { return dim_; }
    cplx at(int alpha, int beta) const;
    const std::vector<cplx>& data() const { return c_; }

  private:
    Dimension dim_;
    std::vector<cplx> c_;  // row-major alpha*d + beta
};

// The family {D(alpha,beta)|f>}. Members are computed on demand and
// cached per phase point; after materialization an entry is immutable.
class CoherentFamily {
  public:
    explicit CoherentFamily(PureState fiducial);

    Dimension dim() const { return fiducial_.dim(); }
    const PureState& fiducial() const { return fiducial_; }

    const PureState& member(PhasePoint p) const;
    const PureState& member(int alpha, int beta) const;

  private:
    PureState fiducial_;
    mutable std::vector<std::unique_ptr<const PureState>> cache_;
    mutable std::mutex mu_;
};

// || (1/d) sum_{a,b} |a,b><a,b| - I ||_max. Below 1e-10 for any
// normalized fiducial.
double identity_resolution_defect(const CoherentFamily& fam);

// Expansion is linear and valid for any vector of length d (no
// normalization is applied).
ExpansionCoefficients expand(const CoherentFamily& fam,
                             std::span<const cplx> s);
ExpansionCoefficients expand(const CoherentFamily& fam, const PureState& s);

std::vector<cplx> reconstruct(const CoherentFamily& fam,
                              const ExpansionCoefficients& c);

struct NoiseResult {
    double avg_error_norm = 0.0;
    std::vector<double> per_trial;
};

// Multiplies each coefficient by (1 + lambda_{a,b}) with lambda drawn
// uniformly from (-epsilon, epsilon) and reports ||error vector||_2 per
// trial. Trials use per-trial derived streams from (seed, trial), so the
// result is independent of evaluation order; draws are scaled by epsilon
// so matched seeds give error norms exactly linear in epsilon.
NoiseResult noise_experiment(const CoherentFamily& fam,
                             std::span<const cplx> s, double epsilon,
                             int trials, std::uint64_t seed);

}  // namespace qgini
