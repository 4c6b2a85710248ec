#pragma once

#include <stdexcept>

namespace spindimer {

// Two exchange-coupled spins: a spin-1/2 and a spin-S with S >= 1.
// Spin magnitude is carried as the integer 2S so sector bookkeeping
// stays exact (no floating-point half-integers in indices).
struct DimerModel {
    double j;       // exchange coupling
    double delta;   // XXZ exchange anisotropy
    double d_anis;  // uniaxial single-ion anisotropy on the spin-S site
    int two_s;      // 2S, integer >= 2

    DimerModel(double j_, double delta_, double d_anis_, int two_s_)
        : j(j_), delta(delta_), d_anis(d_anis_), two_s(two_s_) {
        if (two_s < 2)
            throw std::invalid_argument("DimerModel: two_s must be >= 2 (S >= 1)");
    }

    double spin() const { return 0.5 * two_s; }
    int spin_dim() const { return two_s + 1; }
    int hilbert_dim() const { return 2 * (two_s + 1); }
};

// Product basis |mu^z, S^z>, mu^z-major with m descending:
//   i = (1/2 - mu^z) * (2S+1) + (S - m)
// mu_up = true means mu^z = +1/2.  two_m is 2*S^z.
inline int basis_index(int two_s, bool mu_up, int two_m) {
    if (two_m > two_s || two_m < -two_s || (two_s - two_m) % 2 != 0)
        throw std::out_of_range("basis_index: two_m out of range");
    return (mu_up ? 0 : two_s + 1) + (two_s - two_m) / 2;
}

struct BasisIndex {
    bool mu_up;  // mu^z = +1/2 when true, -1/2 otherwise
    int two_m;   // 2*S^z in {two_s, two_s-2, ..., -two_s}

    static BasisIndex from_linear(int two_s, int i) {
        int n = two_s + 1;
        if (i < 0 || i >= 2 * n)
            throw std::out_of_range("BasisIndex: linear index out of range");
        BasisIndex b;
        b.mu_up = i < n;
        b.two_m = two_s - 2 * (i % n);
        return b;
    }

    int linear(int two_s) const { return basis_index(two_s, mu_up, two_m); }

    // total magnetization 2*S^z_t = 2*(mu^z + S^z)
    int two_s_z_t() const { return two_m + (mu_up ? 1 : -1); }
};

}  // namespace spindimer
