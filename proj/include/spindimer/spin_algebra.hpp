#pragma once

#include "spindimer/matrix.hpp"
#include "spindimer/model.hpp"

namespace spindimer {

// Spin operators in the |m = S, S-1, ..., -S> basis, stored as real
// matrices.  S^y is purely imaginary there, so we keep sy_imag with
// S^y = i * sy_imag (sy_imag is real antisymmetric).
struct SpinMatrices {
    DenseSymmetricMatrix sx;
    DenseMatrix sy_imag;
    DenseSymmetricMatrix sz;
};

SpinMatrices spin_matrices(int two_s);

// H = J [ Delta (mu^x S^x + mu^y S^y) + mu^z S^z ] + D (S^z)^2
// in basis_index ordering.  The mu^y S^y product of two purely
// imaginary factors is real, so the result is a real symmetric matrix.
DenseSymmetricMatrix build_hamiltonian(const DimerModel& model);

}  // namespace spindimer
