// Core types for a single odd-dimensional qudit: dimension, mod-d indices,
// dense complex matrices, pure states, density matrices and probability
// distributions. All types are immutable after construction and safe to
// share read-only across threads.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qgini {

using cplx = std::complex<double>;

// Dimension of the Hilbert space. Restricted to odd d >= 3 so that the
// half inverse 2^{-1} = (d+1)/2 exists mod d.
class Dimension {
  public:
    explicit Dimension(int d);

    int value() const { return d_; }
    // h with 2*h == 1 (mod d).
    int half_inverse() const { return (d_ + 1) / 2; }

    friend bool operator==(Dimension a, Dimension b) { return a.d_ == b.d_; }
    friend bool operator!=(Dimension a, Dimension b) { return a.d_ != b.d_; }

  private:
    int d_;
};

// Residue in Z_d. All arithmetic is mod d; negative inputs are reduced
// into {0, ..., d-1}.
class ZdIndex {
  public:
    ZdIndex(int value, Dimension dim);

    int value() const { return v_; }
    int modulus() const { return d_; }

    ZdIndex operator+(ZdIndex other) const;
    ZdIndex operator-(ZdIndex other) const;
    ZdIndex operator*(ZdIndex other) const;
    ZdIndex operator-() const;

    friend bool operator==(ZdIndex a, ZdIndex b) {
        return a.d_ == b.d_ && a.v_ == b.v_;
    }
    friend bool operator!=(ZdIndex a, ZdIndex b) { return !(a == b); }

  private:
    void require_same_modulus(ZdIndex other) const;

    int v_;
    int d_;
};

// Dense square complex matrix, row-major. Only what the project needs:
// products, adjoints, matrix-vector application and elementwise diffs.
class CMatrix {
  public:
    explicit CMatrix(std::size_t n);

    static CMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[i * n_ + j];
    }

    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(cplx factor) const;
    CMatrix adjoint() const;

    std::vector<cplx> apply(std::span<const cplx> v) const;

    // max_ij |a_ij - b_ij|
    double max_abs_diff(const CMatrix& other) const;
    double max_abs() const;

    cplx trace() const;
    double hermiticity_defect() const;  // max |a_ij - conj(a_ji)|

    const std::vector<cplx>& data() const { return a_; }

  private:
    std::size_t n_;
    std::vector<cplx> a_;
};

double norm2(std::span<const cplx> v);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // <a|b>

// Unit vector in the position basis. The strict constructor accepts only
// vectors already normalized to within 1e-8 (then rescales exactly);
// `normalized` rescales arbitrary nonzero vectors, which is the entry
// point for externally printed states that are rounded to few decimals.
class PureState {
  public:
    PureState(Dimension dim, std::vector<cplx> amplitudes);

    static PureState normalized(Dimension dim, std::vector<cplx> amplitudes);
    static PureState basis_state(Dimension dim, int r);

    Dimension dim() const { return dim_; }
    int dim_value() const { return dim_.value(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amp(int r) const { return amps_[static_cast<std::size_t>(r)]; }

  private:
    PureState(Dimension dim, std::vector<cplx> amps, bool strict);

    Dimension dim_;
    std::vector<cplx> amps_;
};

// d x d density matrix. Construction validates hermiticity (1e-12),
// unit trace (1e-12) and positive semidefiniteness (eigenvalues >= -1e-10).
class DensityMatrix {
  public:
    DensityMatrix(Dimension dim, CMatrix entries);

    Dimension dim() const { return dim_; }
    int dim_value() const { return dim_.value(); }
    const CMatrix& entries() const { return m_; }

  private:
    Dimension dim_;
    CMatrix m_;
};

DensityMatrix density_from_pure(const PureState& s);

// Convex combination of density matrices; weights must be nonnegative and
// sum to 1 within 1e-12.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms);

// Length-d probability vector: entries >= 0, sum 1 within 1e-12. Entries
// in [-1e-12, 0) are rounding noise and are clamped to 0.
class ProbDist {
  public:
    ProbDist(Dimension dim, std::vector<double> probs);

    Dimension dim() const { return dim_; }
    const std::vector<double>& probs() const { return p_; }
    double operator[](std::size_t r) const { return p_[r]; }

  private:
    Dimension dim_;
    std::vector<double> p_;
};

}  // namespace qgini
