#include "spindimer/analysis.hpp"

#include "spindimer/entanglement.hpp"
#include "spindimer/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spindimer {

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("linear_grid: n must be >= 1");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (n < 1 || lo <= 0.0 || hi < lo)
        throw std::invalid_argument("geometric_grid: need n >= 1 and 0 < lo <= hi");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(ratio * i);
    return g;
}

std::vector<PhasePoint> phase_diagram(double j, int two_s,
                                      double delta_min, double delta_max, int delta_count,
                                      double d_min, double d_max, int d_count) {
    if (j <= 0.0) throw std::domain_error("phase_diagram: J > 0 required");
    if (delta_count < 2 || d_count < 2)
        throw std::invalid_argument("phase_diagram: grid counts must be >= 2");
    std::vector<PhasePoint> out;
    out.reserve(static_cast<size_t>(delta_count) * d_count);
    for (double delta : linear_grid(delta_min, delta_max, delta_count)) {
        for (double d : linear_grid(d_min, d_max, d_count)) {
            DimerModel model(j, delta, d * j, two_s);
            const auto g = ground_state_manifold(model);
            PhasePoint p;
            p.delta = delta;
            p.d_over_j = d;
            for (const auto& [t, branch] : g.states) {
                const int lbl = std::abs(t);
                if (std::find(p.ground_sectors.begin(), p.ground_sectors.end(), lbl) ==
                    p.ground_sectors.end())
                    p.ground_sectors.push_back(lbl);
            }
            std::sort(p.ground_sectors.begin(), p.ground_sectors.end());
            p.negativity = negativity(ground_state_density(model)).negativity;
            out.push_back(std::move(p));
        }
    }
    return out;
}

SweepTable negativity_vs_d(double j, const std::vector<int>& two_s_list,
                           double d_min, double d_max, int points, double delta) {
    if (j <= 0.0) throw std::domain_error("negativity_vs_d: J > 0 required");
    SweepTable t;
    t.columns = {"S", "D_over_J", "negativity"};
    for (int two_s : two_s_list) {
        for (double d : linear_grid(d_min, d_max, points)) {
            DimerModel model(j, delta, d * j, two_s);
            const double n = negativity(ground_state_density(model)).negativity;
            t.rows.push_back({0.5 * two_s, d, n});
        }
    }
    return t;
}

SweepTable thermal_profile(const DimerModel& model,
                           const std::vector<double>& temperatures) {
    SweepTable t;
    t.columns = {"kT_over_J", "negativity"};
    for (double temp : temperatures) {
        if (temp <= 0.0)
            throw std::domain_error("thermal_profile: temperatures must be > 0");
        t.rows.push_back({temp, negativity(thermal_density(model, temp)).negativity});
    }
    return t;
}

namespace {

int count_flections(const std::vector<std::pair<double, double>>& profile) {
    // sign changes of the numerical second difference of N(t) on the
    // entangled part of the profile
    std::vector<double> n;
    for (const auto& [t, val] : profile)
        if (val > kNegativityFloor) n.push_back(val);
    if (n.size() < 4) return 0;
    int changes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (size_t i = 1; i + 1 < n.size(); ++i) {
        const double d2 = n[i + 1] - 2.0 * n[i] + n[i - 1];
        if (d2 == 0.0) continue;
        if (have_prev && ((d2 > 0.0) != (prev > 0.0))) ++changes;
        prev = d2;
        have_prev = true;
    }
    return changes;
}

}  // namespace

ThresholdResult threshold_temperature(const DimerModel& model) {
    constexpr double kTMin = 1e-3;
    constexpr double kTMax = 50.0;
    constexpr int kScanPoints = 400;

    ThresholdResult res;
    res.flection_count = 0;

    const double n0 = negativity(ground_state_density(model)).negativity;
    if (n0 <= kNegativityFloor) {
        res.t_threshold = 0.0;
        res.bracket_lo = 0.0;
        res.bracket_hi = 0.0;
        return res;
    }

    auto neg_at = [&](double t) { return negativity(thermal_density(model, t)).negativity; };

    const auto grid = geometric_grid(kTMin, kTMax, kScanPoints);
    res.profile.reserve(grid.size());
    for (double t : grid) res.profile.emplace_back(t, neg_at(t));
    res.flection_count = count_flections(res.profile);

    // last crossing: the highest grid point still entangled
    int last = -1;
    for (int i = 0; i < kScanPoints; ++i)
        if (res.profile[i].second > kNegativityFloor) last = i;
    if (last == kScanPoints - 1)
        throw ThresholdUnresolvedError(std::move(res.profile));

    double lo = last >= 0 ? res.profile[last].first : kTMin;
    double hi = last >= 0 ? res.profile[last + 1].first : kTMin;
    if (last < 0) {
        // already separable at the bottom of the scan; threshold below kTMin
        lo = kTMin * 1e-6;
        hi = kTMin;
    }
    while ((hi - lo) / hi > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (neg_at(mid) > kNegativityFloor)
            lo = mid;
        else
            hi = mid;
    }
    res.t_threshold = 0.5 * (lo + hi);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    return res;
}

SweepTable threshold_vs_d(double j, const std::vector<int>& two_s_list,
                          double d_min, double d_max, int points, double delta) {
    if (j <= 0.0) throw std::domain_error("threshold_vs_d: J > 0 required");
    SweepTable t;
    t.columns = {"S", "D_over_J", "kT_threshold_over_J"};
    for (int two_s : two_s_list) {
        for (double d : linear_grid(d_min, d_max, points)) {
            DimerModel model(j, delta, d * j, two_s);
            t.rows.push_back({0.5 * two_s, d, threshold_temperature(model).t_threshold});
        }
    }
    return t;
}

}  // namespace spindimer
