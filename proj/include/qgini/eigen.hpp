// Hermitian eigensolver: cyclic Jacobi with complex rotations.
// Deliberately dependency-free; matrices here are small (d <= ~201).
#pragma once

#include "qgini/types.hpp"

namespace qgini {

struct EigenDecomposition {
    std::vector<double> eigenvalues;      // descending
    std::vector<PureState> eigenvectors;  // paired with eigenvalues
};

// Low-level solver on a raw Hermitian matrix (hermiticity checked to
// 1e-12). Off-diagonal Frobenius norm is driven below 1e-14, at most
// 100 sweeps. Returns eigenvalues descending with orthonormal vectors.
EigenDecomposition hermitian_eigen(const CMatrix& m);

EigenDecomposition hermitian_eig(const DensityMatrix& m);

}  // namespace qgini
