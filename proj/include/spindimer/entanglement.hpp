#pragma once

#include "spindimer/matrix.hpp"
#include "spindimer/model.hpp"

#include <vector>

namespace spindimer {

struct NegativityResult {
    double negativity;                        // sum of |lambda_i| over the list below
    std::vector<double> negative_eigenvalues; // the lambda_i < 0 actually summed
};

// Equal-weight mixture over the (possibly degenerate) ground-state
// manifold; the T -> 0 limit of thermal_density.
DenseSymmetricMatrix ground_state_density(const DimerModel& model);

// Gibbs state at reduced temperature t = k_B T / J (t > 0, J > 0),
// assembled from the closed-form spectrum with energies shifted by
// eps_min before exponentiation.
DenseSymmetricMatrix thermal_density(const DimerModel& model, double temperature);

// Transposition of the spin-1/2 tensor factor: with rho viewed as 2x2
// blocks of size dim/2, the off-diagonal blocks are swapped.
DenseSymmetricMatrix partial_transpose_half(const DenseSymmetricMatrix& rho);

// Transposition of the spin-S factor instead (each block transposed in
// place); used to check side independence of the negativity.
DenseSymmetricMatrix partial_transpose_spin_s(const DenseSymmetricMatrix& rho);

// N = sum of |lambda_i| over eigenvalues lambda_i < -1e-12 of the
// partially transposed density matrix.
NegativityResult negativity(const DenseSymmetricMatrix& rho);

// Closed form for the mixed |(+-1/2)_-> ground state of integer-S
// dimers (Delta > 0):
//   N = (1/4) (1 - x/sqrt(alpha)) (sqrt((5 sqrt(alpha) + 3x)/(sqrt(alpha) - x)) - 1),
//   x = 1 - 2D/J, alpha = x^2 + 4 Delta^2 S(S+1).
double negativity_closed_pm_half(const DimerModel& model);

// Closed form for the |(+-(S-1/2))_-> ground state (disjoint sectors,
// so S >= 3/2; for S = 1 the +-1/2 form above applies):
//   N = c^- c^+ = (1/2) sqrt(8 S Delta^2 / (8 S Delta^2 + (1 - 2D/J)^2 (2S-1)^2)).
double negativity_closed_stretched(const DimerModel& model);

}  // namespace spindimer
