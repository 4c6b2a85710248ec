#pragma once

#include "spindimer/matrix.hpp"

#include <vector>

namespace spindimer {

struct EigenDecomposition {
    int dim = 0;
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // row-major dim x dim, column k <-> eigenvalue k

    double vector_entry(int row, int k) const {
        return eigenvectors[static_cast<size_t>(row) * dim + k];
    }
    std::vector<double> column(int k) const {
        std::vector<double> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = vector_entry(i, k);
        return v;
    }
};

// Cyclic-by-rows Jacobi diagonalization of a real symmetric matrix.
// Converges when off(A) <= 1e-13 * ||A||_F, hard cap of 100 sweeps.
EigenDecomposition eigh(const DenseSymmetricMatrix& a);

}  // namespace spindimer
