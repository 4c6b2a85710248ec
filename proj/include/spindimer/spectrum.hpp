#pragma once

#include "spindimer/model.hpp"

#include <utility>
#include <vector>

namespace spindimer {

enum class Branch { minus, plus };

// P, Q, R of a two-dimensional total-magnetization sector.
struct SectorCoefficients {
    double p;
    double q;
    double r;
};

// Closed-form spectrum of one S^z_t sector.  Edge sectors
// (|S^z_t| = S + 1/2) are one-dimensional; interior sectors carry the
// two branches with energies eps_minus <= eps_plus and the amplitude
// pair (c_minus, c_plus), c_minus^2 + c_plus^2 = 1.
struct SectorSpectrum {
    int two_s_z_t;
    bool edge;
    double energy_minus;
    double energy_plus;  // equals energy_minus for edge sectors
    double c_minus;      // 0 for edge sectors
    double c_plus;
};

// Is two_s_z_t a valid sector label for this spin (range and parity)?
bool sector_exists(int two_s, int two_s_z_t);
bool sector_is_edge(int two_s, int two_s_z_t);

// P = (J - 2D) - D (2S^z_t - 1)(2S^z_t + 1)
// Q = (J Delta)^2 [4S(S+1) - (2S^z_t - 1)(2S^z_t + 1)]
// R = 2 (J - 2D) S^z_t
// Defined for two-dimensional sectors only (|S^z_t| <= S - 1/2).
SectorCoefficients sector_coefficients(const DimerModel& model, int two_s_z_t);

// All sectors, ordered by S^z_t descending from +(S+1/2) to -(S+1/2).
// Edge sectors: eps = (S/2)(J + 2DS).  Interior:
//   eps_-/+ = -P/4 -/+ (1/4) sqrt(R^2 + Q),
//   c_-/+   = (1/sqrt 2) sqrt(1 -/+ R / sqrt(R^2 + Q)).
std::vector<SectorSpectrum> closed_form_spectrum(const DimerModel& model);

// Unit-norm eigenvector in basis_index ordering.  Interior minus branch
// is c_minus on |1/2, S^z_t - 1/2> and -c_plus on |-1/2, S^z_t + 1/2>;
// the plus branch is c_plus and +c_minus on the same kets.
std::vector<double> eigenvector_in_product_basis(const DimerModel& model,
                                                 int two_s_z_t, Branch branch);

struct GroundManifold {
    double energy;
    std::vector<std::pair<int, Branch>> states;  // (two_s_z_t, branch)
};

// Global energy minimum over all sectors and every state within
// degeneracy_tol * max(|eps_min|, |J|) of it.
GroundManifold ground_state_manifold(const DimerModel& model,
                                     double degeneracy_tol = 1e-9);

}  // namespace spindimer
