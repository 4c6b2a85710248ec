#include "spindimer/jacobi.hpp"
#include "spindimer/spectrum.hpp"
#include "spindimer/spin_algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace spindimer;

namespace {

std::vector<double> sorted_closed_form_energies(const DimerModel& model) {
    std::vector<double> e;
    for (const auto& s : closed_form_spectrum(model)) {
        e.push_back(s.energy_minus);
        if (!s.edge) e.push_back(s.energy_plus);
    }
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

TEST_CASE("sector coefficients: direct substitution at (J=1, Delta=1, D=0, S=1)") {
    const DimerModel model(1.0, 1.0, 0.0, 2);
    const auto c = sector_coefficients(model, 1);  // S^z_t = 1/2
    CHECK(c.p == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.q == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(c.r == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sector coefficients: R vanishes at S^z_t = 0, Q vanishes at Delta = 0") {
    const DimerModel a(1.7, 0.9, -0.3, 3);
    CHECK(sector_coefficients(a, 0).r == 0.0);
    const DimerModel b(1.0, 0.0, 0.8, 4);
    for (int t : {-1, 1, -3, 3}) CHECK(sector_coefficients(b, t).q == 0.0);
}

TEST_CASE("sector coefficients rejects edge and nonexistent sectors") {
    const DimerModel model(1.0, 1.0, 0.0, 2);
    CHECK_THROWS_AS(sector_coefficients(model, 3), std::invalid_argument);
    CHECK_THROWS_AS(sector_coefficients(model, 2), std::out_of_range);   // wrong parity
    CHECK_THROWS_AS(sector_coefficients(model, 9), std::out_of_range);
}

TEST_CASE("closed-form spectrum of the isotropic S=1 dimer") {
    const DimerModel model(1.0, 1.0, 0.0, 2);
    const auto e = sorted_closed_form_energies(model);
    const std::vector<double> want = {-1.0, -1.0, 0.5, 0.5, 0.5, 0.5};
    REQUIRE(e.size() == want.size());
    for (size_t i = 0; i < e.size(); ++i)
        CHECK(e[i] == doctest::Approx(want[i]).epsilon(1e-14));

    // Clebsch-Gordan amplitudes of |F=1/2, M=1/2>
    for (const auto& s : closed_form_spectrum(model)) {
        if (s.two_s_z_t == 1) {
            CHECK(s.c_minus == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
            CHECK(s.c_plus == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
        }
    }
}

TEST_CASE("edge sector energy and state count") {
    for (int two_s : {2, 3, 5, 8}) {
        const DimerModel model(1.2, 0.6, 0.35, two_s);
        const auto spec = closed_form_spectrum(model);
        const double s = model.spin();
        int count = 0;
        for (const auto& sec : spec) {
            if (sec.edge) {
                CHECK(sec.energy_minus ==
                      doctest::Approx(0.5 * s * (model.j + 2.0 * model.d_anis * s)).epsilon(1e-14));
            }
            count += sec.edge ? 1 : 2;
        }
        CHECK(count == model.hilbert_dim());
    }
}

TEST_CASE("amplitudes at R=0 are 1/sqrt(2); normalization everywhere") {
    const DimerModel model(1.0, 0.8, 0.5, 4);  // J - 2D = 0 so R = 0 in every sector
    for (const auto& s : closed_form_spectrum(model)) {
        if (s.edge) continue;
        CHECK(s.c_minus == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
        CHECK(s.c_plus == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    }
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dd(-2.0, 2.0), dl(0.0, 2.0);
    for (int it = 0; it < 50; ++it) {
        const DimerModel m(1.0, dl(rng), dd(rng), 2 + it % 6);
        for (const auto& s : closed_form_spectrum(m)) {
            if (s.edge) continue;
            CHECK(s.c_minus >= 0.0);
            CHECK(s.c_plus >= 0.0);
            CHECK(s.c_minus * s.c_minus + s.c_plus * s.c_plus ==
                  doctest::Approx(1.0).epsilon(1e-14));
            CHECK(s.energy_minus <= s.energy_plus);
        }
    }
}

TEST_CASE("oracle equivalence: closed-form energies match Jacobi on a random grid") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dd(-2.0, 2.0), dl(0.0, 2.0);
    for (int two_s = 2; two_s <= 8; ++two_s) {
        for (int it = 0; it < 25; ++it) {
            const DimerModel model(1.0, dl(rng), dd(rng), two_s);
            CAPTURE(two_s);
            CAPTURE(model.delta);
            CAPTURE(model.d_anis);
            const auto closed = sorted_closed_form_energies(model);
            const auto numeric = eigh(build_hamiltonian(model)).eigenvalues;
            REQUIRE(closed.size() == numeric.size());
            double emax = 0.0;
            for (double e : numeric) emax = std::max(emax, std::abs(e));
            const double tol = 1e-10 * std::max(1.0, emax);
            for (size_t i = 0; i < closed.size(); ++i)
                CHECK(std::abs(closed[i] - numeric[i]) <= tol);
        }
    }
}

TEST_CASE("sector symmetry: energies equal and amplitudes swap under S^z_t -> -S^z_t") {
    const DimerModel model(1.0, 1.3, -0.7, 5);
    const auto spec = closed_form_spectrum(model);
    auto find = [&](int t) {
        for (const auto& s : spec)
            if (s.two_s_z_t == t) return s;
        throw std::logic_error("sector missing");
    };
    for (int t = model.two_s - 1; t > 0; t -= 2) {
        const auto a = find(t);
        const auto b = find(-t);
        CHECK(a.energy_minus == doctest::Approx(b.energy_minus).epsilon(1e-14));
        CHECK(a.energy_plus == doctest::Approx(b.energy_plus).epsilon(1e-14));
        CHECK(a.c_minus == doctest::Approx(b.c_plus).epsilon(1e-14));
        CHECK(a.c_plus == doctest::Approx(b.c_minus).epsilon(1e-14));
    }
}

TEST_CASE("eigenvectors: edge kets, residuals, orthonormal completeness") {
    // edge sector is the pure product ket
    const DimerModel m1(1.0, 1.0, 0.2, 3);
    const auto v_top = eigenvector_in_product_basis(m1, 4, Branch::minus);
    CHECK(v_top[basis_index(3, true, 3)] == 1.0);
    const auto v_bot = eigenvector_in_product_basis(m1, -4, Branch::minus);
    CHECK(v_bot[basis_index(3, false, -3)] == 1.0);

    // explicit amplitudes at the isotropic S=1 point
    const DimerModel m2(1.0, 1.0, 0.0, 2);
    const auto v = eigenvector_in_product_basis(m2, 1, Branch::minus);
    CHECK(v[basis_index(2, true, 0)] == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
    CHECK(v[basis_index(2, false, 2)] == doctest::Approx(-std::sqrt(2.0 / 3.0)).epsilon(1e-14));

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dd(-2.0, 2.0), dl(0.0, 2.0);
    for (int two_s : {2, 3, 5}) {
        const DimerModel model(1.0, dl(rng), dd(rng), two_s);
        const auto h = build_hamiltonian(model);
        std::vector<std::vector<double>> all;
        for (const auto& s : closed_form_spectrum(model)) {
            for (Branch br : {Branch::minus, Branch::plus}) {
                if (s.edge && br == Branch::plus) continue;
                const auto vec = eigenvector_in_product_basis(model, s.two_s_z_t, br);
                const double e = br == Branch::minus ? s.energy_minus : s.energy_plus;
                double norm2 = 0.0, resid = 0.0;
                const auto hv = h.apply(vec);
                for (size_t i = 0; i < vec.size(); ++i) {
                    norm2 += vec[i] * vec[i];
                    const double r = hv[i] - e * vec[i];
                    resid += r * r;
                }
                CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-14));
                CHECK(std::sqrt(resid) <= 1e-10 * std::max(1.0, std::abs(e)));
                all.push_back(vec);
            }
        }
        REQUIRE(static_cast<int>(all.size()) == model.hilbert_dim());
        for (size_t a = 0; a < all.size(); ++a)
            for (size_t b = a; b < all.size(); ++b) {
                double dot = 0.0;
                for (size_t i = 0; i < all[a].size(); ++i) dot += all[a][i] * all[b][i];
                CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
            }
    }
}

TEST_CASE("eigenvector errors: nonexistent sector and edge plus branch") {
    const DimerModel model(1.0, 1.0, 0.0, 2);
    CHECK_THROWS_AS(eigenvector_in_product_basis(model, 2, Branch::minus), std::out_of_range);
    CHECK_THROWS_AS(eigenvector_in_product_basis(model, 5, Branch::minus), std::out_of_range);
    CHECK_THROWS_AS(eigenvector_in_product_basis(model, 3, Branch::plus), std::out_of_range);
}

TEST_CASE("ground-state manifold examples") {
    // isotropic S=1: doublet (+-1/2, minus) at energy -J
    const auto g1 = ground_state_manifold(DimerModel(1.0, 1.0, 0.0, 2));
    CHECK(g1.energy == doctest::Approx(-1.0).epsilon(1e-14));
    REQUIRE(g1.states.size() == 2);
    for (const auto& [t, br] : g1.states) {
        CHECK(std::abs(t) == 1);
        CHECK(br == Branch::minus);
    }

    // fully isotropic S=3/2: all interior minus branches coincide, 2S = 3 states
    const auto g2 = ground_state_manifold(DimerModel(1.0, 1.0, 0.0, 3));
    CHECK(g2.states.size() == 3);
    for (const auto& [t, br] : g2.states) CHECK(br == Branch::minus);

    // easy-axis D/J = -2, S=3/2: stretched doublet +-(S - 1/2) = +-1
    const auto g3 = ground_state_manifold(DimerModel(1.0, 1.0, -2.0, 3));
    REQUIRE(g3.states.size() == 2);
    for (const auto& [t, br] : g3.states) {
        CHECK(std::abs(t) == 2);
        CHECK(br == Branch::minus);
    }
}

TEST_CASE("ground manifold matches the oracle eigensolver's ground space") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dd(-2.0, 2.0), dl(0.0, 2.0);
    for (int it = 0; it < 40; ++it) {
        const DimerModel model(1.0, dl(rng), dd(rng), 2 + it % 7);
        const auto g = ground_state_manifold(model);
        const auto eig = eigh(build_hamiltonian(model));
        CHECK(g.energy == doctest::Approx(eig.eigenvalues[0]).epsilon(1e-12));
        // for J > 0 the manifold is drawn from minus branches
        for (const auto& [t, br] : g.states)
            if (!sector_is_edge(model.two_s, t)) CHECK(br == Branch::minus);
    }
}
