// Measurement statistics and uncertainty functionals: position/momentum
// probabilities, Gini indices, the combined G_XP, the uncertainty gap
// Delta = 2(d-1)/(d+1) - G_XP, and Shannon-entropy counterparts.
// All functions are pure; GxpEvaluator carries scratch buffers and must
// not be shared across threads (copy one per worker).
#pragma once

#include "qgini/types.hpp"

namespace qgini {

struct GiniReport {
    int d = 0;
    double g_x = 0.0;
    double g_p = 0.0;
    double g_xp = 0.0;   // g_x + g_p
    double delta = 0.0;  // 2(d-1)/(d+1) - g_xp
};

struct EntropyReport {
    int d = 0;
    double e_x = 0.0;
    double e_p = 0.0;
    double excess = 0.0;  // e_x + e_p - ln d, nonnegative
};

// P_X(r|rho) = <X;r|rho|X;r>: real diagonal of rho.
ProbDist prob_position(const DensityMatrix& rho);
// P_P(r|rho) = <P;r|rho|P;r>; equals prob_position(F^dag rho F).
ProbDist prob_momentum(const DensityMatrix& rho);

ProbDist prob_position(const PureState& s);
ProbDist prob_momentum(const PureState& s);

// Gini index, production path: sort ascending (stable, ties by original
// index) and take 1 - 2/(d+1) * sum_k (d-k) p_sorted[k].
// 0 for uniform, (d-1)/(d+1) for a point mass.
double gini_sorted(const ProbDist& p);

// Equivalent O(d^2) pairwise form, 1/(2(d+1)) * sum_{r,s} |p_r - p_s|.
// Kept as an independent oracle for gini_sorted.
double gini_pairwise(const ProbDist& p);

// Upper end of the Gini range, (d-1)/(d+1).
double gini_max(Dimension dim);

GiniReport gini_report(const DensityMatrix& rho);
GiniReport gini_report(const PureState& s);

// Shannon entropies with natural log; terms with p < 1e-300 contribute 0.
EntropyReport entropy_report(const DensityMatrix& rho);
EntropyReport entropy_report(const PureState& s);

// Fast repeated G_XP evaluation for pure states: caches F^dag and reuses
// scratch buffers. Copyable; one instance per thread.
class GxpEvaluator {
  public:
    explicit GxpEvaluator(Dimension dim);

    Dimension dim() const { return dim_; }
    // Accepts any nonzero vector of length d; probabilities are taken
    // from the normalized vector.
    double operator()(std::span<const cplx> amplitudes) const;
    double operator()(const PureState& s) const {
        return (*this)(s.amplitudes());
    }

  private:
    Dimension dim_;
    std::vector<cplx> fdag_;  // row-major F^dag
    mutable std::vector<double> px_, pp_;
};

}  // namespace qgini
