#include "spindimer/entanglement.hpp"

#include "spindimer/jacobi.hpp"
#include "spindimer/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace spindimer {

namespace {

void add_projector(DenseSymmetricMatrix& rho, const std::vector<double>& v, double w) {
    const int n = rho.dim();
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0.0) continue;
        for (int k = i; k < n; ++k)
            if (v[k] != 0.0) rho.add(i, k, w * v[i] * v[k]);
    }
}

}  // namespace

DenseSymmetricMatrix ground_state_density(const DimerModel& model) {
    const auto g = ground_state_manifold(model);
    DenseSymmetricMatrix rho(model.hilbert_dim());
    const double w = 1.0 / static_cast<double>(g.states.size());
    for (const auto& [t, branch] : g.states)
        add_projector(rho, eigenvector_in_product_basis(model, t, branch), w);
    return rho;
}

DenseSymmetricMatrix thermal_density(const DimerModel& model, double temperature) {
    if (temperature <= 0.0)
        throw std::domain_error("thermal_density: temperature must be > 0 (use ground_state_density for T = 0)");
    if (model.j <= 0.0)
        throw std::domain_error("thermal_density: reduced temperature k_B T / J needs J > 0");

    struct State {
        int two_s_z_t;
        Branch branch;
        double energy;
    };
    std::vector<State> states;
    double e_min = 0.0;
    bool first = true;
    for (const auto& s : closed_form_spectrum(model)) {
        states.push_back({s.two_s_z_t, Branch::minus, s.energy_minus});
        if (!s.edge) states.push_back({s.two_s_z_t, Branch::plus, s.energy_plus});
        const double lo = s.energy_minus;
        if (first || lo < e_min) e_min = lo;
        first = false;
    }

    const double kt = temperature * model.j;  // energy units
    double z = 0.0;
    std::vector<double> weights;
    weights.reserve(states.size());
    for (const auto& st : states) {
        const double w = std::exp(-(st.energy - e_min) / kt);
        weights.push_back(w);
        z += w;
    }

    DenseSymmetricMatrix rho(model.hilbert_dim());
    for (size_t k = 0; k < states.size(); ++k)
        add_projector(rho, eigenvector_in_product_basis(model, states[k].two_s_z_t, states[k].branch),
                      weights[k] / z);
    return rho;
}

DenseSymmetricMatrix partial_transpose_half(const DenseSymmetricMatrix& rho) {
    const int n = rho.dim();
    if (n % 2 != 0)
        throw std::invalid_argument("partial_transpose_half: dimension must be even");
    const int b = n / 2;
    DenseSymmetricMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) {
            const int mu_i = i / b, m_i = i % b;
            const int mu_k = k / b, m_k = k % b;
            out.set(i, k, rho(mu_k * b + m_i, mu_i * b + m_k));
        }
    return out;
}

DenseSymmetricMatrix partial_transpose_spin_s(const DenseSymmetricMatrix& rho) {
    const int n = rho.dim();
    if (n % 2 != 0)
        throw std::invalid_argument("partial_transpose_spin_s: dimension must be even");
    const int b = n / 2;
    DenseSymmetricMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) {
            const int mu_i = i / b, m_i = i % b;
            const int mu_k = k / b, m_k = k % b;
            out.set(i, k, rho(mu_i * b + m_k, mu_k * b + m_i));
        }
    return out;
}

NegativityResult negativity(const DenseSymmetricMatrix& rho) {
    const auto eig = eigh(partial_transpose_half(rho));
    NegativityResult res;
    res.negativity = 0.0;
    for (double lam : eig.eigenvalues) {
        if (lam < -1e-12) {
            res.negative_eigenvalues.push_back(lam);
            res.negativity += -lam;
        }
    }
    return res;
}

double negativity_closed_pm_half(const DimerModel& model) {
    if (model.two_s % 2 != 0)
        throw std::invalid_argument("negativity_closed_pm_half: integer S required");
    if (model.delta <= 0.0)
        throw std::domain_error("negativity_closed_pm_half: Delta > 0 required");
    const double x = 1.0 - 2.0 * model.d_anis / model.j;
    const double s = model.spin();
    const double alpha = x * x + 4.0 * model.delta * model.delta * s * (s + 1.0);
    const double sa = std::sqrt(alpha);
    if (sa - x <= 0.0)
        throw std::domain_error("negativity_closed_pm_half: singular denominator (Delta = 0)");
    return 0.25 * (1.0 - x / sa) * (std::sqrt((5.0 * sa + 3.0 * x) / (sa - x)) - 1.0);
}

double negativity_closed_stretched(const DimerModel& model) {
    const double s = model.spin();
    const double x = 1.0 - 2.0 * model.d_anis / model.j;
    const double num = 8.0 * s * model.delta * model.delta;
    if (num == 0.0) return 0.0;
    const double den = num + x * x * (2.0 * s - 1.0) * (2.0 * s - 1.0);
    return 0.5 * std::sqrt(num / den);
}

}  // namespace spindimer
