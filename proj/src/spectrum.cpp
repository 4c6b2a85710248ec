#include "spindimer/spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spindimer {

bool sector_exists(int two_s, int two_s_z_t) {
    // S^z_t = S^z + mu^z runs over -(S+1/2) ... (S+1/2) with the parity
    // opposite to 2S.
    if (std::abs(two_s_z_t) > two_s + 1) return false;
    return (two_s + 1 - two_s_z_t) % 2 == 0;
}

bool sector_is_edge(int two_s, int two_s_z_t) {
    return std::abs(two_s_z_t) == two_s + 1;
}

SectorCoefficients sector_coefficients(const DimerModel& model, int two_s_z_t) {
    if (!sector_exists(model.two_s, two_s_z_t))
        throw std::out_of_range("sector_coefficients: no such sector");
    if (sector_is_edge(model.two_s, two_s_z_t))
        throw std::invalid_argument("sector_coefficients: edge sector is one-dimensional");
    const double j = model.j;
    const double d = model.d_anis;
    // (2 S^z_t - 1)(2 S^z_t + 1) and 4S(S+1) in exact integer arithmetic
    const double bracket = static_cast<double>(two_s_z_t) * two_s_z_t - 1.0;
    const double four_s_s1 = static_cast<double>(model.two_s) * (model.two_s + 2);
    SectorCoefficients c;
    c.p = (j - 2.0 * d) - d * bracket;
    c.q = (j * model.delta) * (j * model.delta) * (four_s_s1 - bracket);
    c.r = (j - 2.0 * d) * two_s_z_t;  // 2 (J - 2D) S^z_t
    return c;
}

std::vector<SectorSpectrum> closed_form_spectrum(const DimerModel& model) {
    std::vector<SectorSpectrum> out;
    const double s = model.spin();
    for (int t = model.two_s + 1; t >= -(model.two_s + 1); t -= 2) {
        SectorSpectrum sec;
        sec.two_s_z_t = t;
        sec.edge = sector_is_edge(model.two_s, t);
        if (sec.edge) {
            const double e = 0.5 * s * (model.j + 2.0 * model.d_anis * s);
            sec.energy_minus = e;
            sec.energy_plus = e;
            sec.c_minus = 0.0;
            sec.c_plus = 0.0;
        } else {
            const auto [p, q, r] = sector_coefficients(model, t);
            const double root = std::sqrt(r * r + q);
            sec.energy_minus = -0.25 * p - 0.25 * root;
            sec.energy_plus = -0.25 * p + 0.25 * root;
            if (root == 0.0) {
                // R^2 + Q = 0 only at Delta = 0, S^z_t = 0; amplitudes by continuity
                sec.c_minus = std::sqrt(0.5);
                sec.c_plus = std::sqrt(0.5);
            } else {
                const double ratio = r / root;
                sec.c_minus = std::sqrt(0.5 * std::max(0.0, 1.0 - ratio));
                sec.c_plus = std::sqrt(0.5 * std::max(0.0, 1.0 + ratio));
            }
        }
        out.push_back(sec);
    }
    return out;
}

std::vector<double> eigenvector_in_product_basis(const DimerModel& model,
                                                 int two_s_z_t, Branch branch) {
    if (!sector_exists(model.two_s, two_s_z_t))
        throw std::out_of_range("eigenvector_in_product_basis: no such sector");
    std::vector<double> v(model.hilbert_dim(), 0.0);
    if (sector_is_edge(model.two_s, two_s_z_t)) {
        if (branch == Branch::plus)
            throw std::out_of_range("eigenvector_in_product_basis: edge sector has one state");
        // |+(S+1/2)> = |1/2, S>, |-(S+1/2)> = |-1/2, -S>
        if (two_s_z_t > 0)
            v[basis_index(model.two_s, true, model.two_s)] = 1.0;
        else
            v[basis_index(model.two_s, false, -model.two_s)] = 1.0;
        return v;
    }
    // Interior: span of |1/2, S^z_t - 1/2> and |-1/2, S^z_t + 1/2>
    const int i_up = basis_index(model.two_s, true, two_s_z_t - 1);
    const int i_dn = basis_index(model.two_s, false, two_s_z_t + 1);
    const auto spec = closed_form_spectrum(model);
    const SectorSpectrum* sec = nullptr;
    for (const auto& s : spec)
        if (s.two_s_z_t == two_s_z_t) sec = &s;
    if (branch == Branch::minus) {
        v[i_up] = sec->c_minus;
        v[i_dn] = -sec->c_plus;
    } else {
        v[i_up] = sec->c_plus;
        v[i_dn] = sec->c_minus;
    }
    return v;
}

GroundManifold ground_state_manifold(const DimerModel& model, double degeneracy_tol) {
    const auto spec = closed_form_spectrum(model);
    double e_min = std::numeric_limits<double>::infinity();
    for (const auto& s : spec) {
        e_min = std::min(e_min, s.energy_minus);
        if (!s.edge) e_min = std::min(e_min, s.energy_plus);
    }
    const double tol = degeneracy_tol * std::max(std::abs(e_min), std::abs(model.j));
    GroundManifold g;
    g.energy = e_min;
    for (const auto& s : spec) {
        if (s.energy_minus - e_min <= tol)
            g.states.emplace_back(s.two_s_z_t, Branch::minus);
        if (!s.edge && s.energy_plus - e_min <= tol)
            g.states.emplace_back(s.two_s_z_t, Branch::plus);
    }
    return g;
}

}  // namespace spindimer
