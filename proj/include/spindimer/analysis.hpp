#pragma once

#include "spindimer/model.hpp"
#include "spindimer/sweep_table.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace spindimer {

// Entangled/separable decision level for thresholds and phase labels.
inline constexpr double kNegativityFloor = 1e-10;

struct PhasePoint {
    double delta;
    double d_over_j;
    std::vector<int> ground_sectors;  // distinct |2 S^z_t| labels of the manifold
    double negativity;                // zero-temperature value
};

// Zero-temperature phase diagram in the D/J - Delta plane.  Grid order:
// delta outer (ascending), d_over_j inner (ascending).
std::vector<PhasePoint> phase_diagram(double j, int two_s,
                                      double delta_min, double delta_max, int delta_count,
                                      double d_min, double d_max, int d_count);

// Ground-state negativity vs D/J for a list of spins at fixed Delta.
// Columns: S, D_over_J, negativity.
SweepTable negativity_vs_d(double j, const std::vector<int>& two_s_list,
                           double d_min, double d_max, int points, double delta);

// N(T) on the given reduced-temperature grid.  Columns: kT_over_J, negativity.
SweepTable thermal_profile(const DimerModel& model,
                           const std::vector<double>& temperatures);

std::vector<double> geometric_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

struct ThresholdResult {
    double t_threshold;  // k_B T / J; 0 when the ground state is separable
    double bracket_lo;
    double bracket_hi;
    std::vector<std::pair<double, double>> profile;  // sampled (t, N(t))
    int flection_count;  // sign changes of the second difference of N(t) on the entangled part
};

// Thrown when N is still above the floor at the top of the scan grid;
// carries the partial profile.
struct ThresholdUnresolvedError : std::runtime_error {
    explicit ThresholdUnresolvedError(std::vector<std::pair<double, double>> p)
        : std::runtime_error("negativity still nonzero at the scan maximum kT/J = 50"),
          profile(std::move(p)) {}
    std::vector<std::pair<double, double>> profile;
};

// Scans N(T) on a 400-point geometric grid over [1e-3, 50], locates the
// last crossing of the floor and bisects it to relative width 1e-8.
// Defined as the supremum of entangled temperatures.
ThresholdResult threshold_temperature(const DimerModel& model);

// Threshold vs D/J for a list of spins at fixed Delta.
// Columns: S, D_over_J, kT_threshold_over_J.
SweepTable threshold_vs_d(double j, const std::vector<int>& two_s_list,
                          double d_min, double d_max, int points, double delta);

}  // namespace spindimer
