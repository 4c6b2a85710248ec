#include "spindimer/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spindimer {

SpinMatrices spin_matrices(int two_s) {
    if (two_s < 1)
        throw std::invalid_argument("spin_matrices: two_s must be >= 1");
    const int n = two_s + 1;
    const double s = 0.5 * two_s;
    SpinMatrices out{DenseSymmetricMatrix(n), DenseMatrix(n), DenseSymmetricMatrix(n)};

    for (int k = 0; k < n; ++k)
        out.sz.set(k, k, s - k);  // m = S, S-1, ..., -S

    // S+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>; index k holds m = S - k.
    for (int k = 1; k < n; ++k) {
        const double m = s - k;
        const double a = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
        out.sx.set(k - 1, k, 0.5 * a);
        out.sy_imag(k - 1, k) = -0.5 * a;
        out.sy_imag(k, k - 1) = 0.5 * a;
    }
    return out;
}

DenseSymmetricMatrix build_hamiltonian(const DimerModel& model) {
    const int n = model.spin_dim();
    const auto mu = spin_matrices(1);
    const auto big = spin_matrices(model.two_s);

    DenseSymmetricMatrix h(2 * n);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < n; ++d) {
                    const int i = a * n + b;
                    const int k = c * n + d;
                    if (k < i) continue;
                    // mu^y S^y = (i mu_yi)(i S_yi) = -mu_yi (x) S_yi
                    double v = model.j * (model.delta * (mu.sx(a, c) * big.sx(b, d) -
                                                         mu.sy_imag(a, c) * big.sy_imag(b, d)) +
                                          mu.sz(a, c) * big.sz(b, d));
                    if (i == k) {
                        const double m = big.sz(b, b);
                        v += model.d_anis * m * m;
                    }
                    h.set(i, k, v);
                }
    return h;
}

}  // namespace spindimer
