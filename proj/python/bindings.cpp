#include "spindimer/analysis.hpp"
#include "spindimer/entanglement.hpp"
#include "spindimer/jacobi.hpp"
#include "spindimer/spectrum.hpp"
#include "spindimer/spin_algebra.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

namespace py = pybind11;
using namespace spindimer;

namespace {

py::array_t<double> to_numpy(const DenseSymmetricMatrix& m) {
    const int n = m.dim();
    py::array_t<double> out({n, n});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf(i, j) = m(i, j);
    return out;
}

py::array_t<double> to_numpy(const DenseMatrix& m) {
    const int n = m.dim();
    py::array_t<double> out({n, n});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf(i, j) = m(i, j);
    return out;
}

DenseSymmetricMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw py::value_error("expected a square 2-D array");
    const int n = static_cast<int>(arr.shape(0));
    auto buf = arr.unchecked<2>();
    DenseSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (std::abs(buf(i, j) - buf(j, i)) > 1e-12)
                throw py::value_error("matrix is not symmetric");
            m.set(i, j, buf(i, j));
        }
    return m;
}

py::dict table_to_dict(const SweepTable& t) {
    py::dict d;
    d["columns"] = t.columns;
    d["rows"] = t.rows;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectra and entanglement negativity of the mixed spin-(1/2,S) XXZ Heisenberg dimer";

    py::class_<DimerModel>(m, "DimerModel")
        .def(py::init<double, double, double, int>(),
             py::arg("j"), py::arg("delta"), py::arg("d_anis"), py::arg("two_s"))
        .def_readonly("j", &DimerModel::j)
        .def_readonly("delta", &DimerModel::delta)
        .def_readonly("d_anis", &DimerModel::d_anis)
        .def_readonly("two_s", &DimerModel::two_s)
        .def_property_readonly("spin", &DimerModel::spin)
        .def_property_readonly("hilbert_dim", &DimerModel::hilbert_dim)
        .def("__repr__", [](const DimerModel& mo) {
            return "DimerModel(j=" + std::to_string(mo.j) + ", delta=" + std::to_string(mo.delta) +
                   ", d_anis=" + std::to_string(mo.d_anis) + ", two_s=" + std::to_string(mo.two_s) + ")";
        });

    py::enum_<Branch>(m, "Branch")
        .value("minus", Branch::minus)
        .value("plus", Branch::plus);

    m.def("spin_matrices", [](int two_s) {
        const auto sm = spin_matrices(two_s);
        return py::make_tuple(to_numpy(sm.sx), to_numpy(sm.sy_imag), to_numpy(sm.sz));
    }, py::arg("two_s"),
       "Returns (sx, sy_imag, sz) as real matrices with S^y = 1j * sy_imag.");

    m.def("build_hamiltonian",
          [](const DimerModel& model) { return to_numpy(build_hamiltonian(model)); },
          py::arg("model"));

    m.def("eigh", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
        const auto eig = eigh(from_numpy(a));
        py::array_t<double> vals(std::vector<py::ssize_t>{eig.dim},
                                 std::vector<py::ssize_t>{sizeof(double)});
        auto vb = vals.mutable_unchecked<1>();
        for (int i = 0; i < eig.dim; ++i) vb(i) = eig.eigenvalues[i];
        py::array_t<double> vecs({eig.dim, eig.dim});
        auto mb = vecs.mutable_unchecked<2>();
        for (int i = 0; i < eig.dim; ++i)
            for (int k = 0; k < eig.dim; ++k) mb(i, k) = eig.vector_entry(i, k);
        return py::make_tuple(vals, vecs);
    }, py::arg("a"), "Jacobi eigendecomposition: (eigenvalues ascending, eigenvector columns).");

    py::class_<SectorSpectrum>(m, "SectorSpectrum")
        .def_readonly("two_s_z_t", &SectorSpectrum::two_s_z_t)
        .def_readonly("edge", &SectorSpectrum::edge)
        .def_readonly("energy_minus", &SectorSpectrum::energy_minus)
        .def_readonly("energy_plus", &SectorSpectrum::energy_plus)
        .def_readonly("c_minus", &SectorSpectrum::c_minus)
        .def_readonly("c_plus", &SectorSpectrum::c_plus);

    m.def("sector_coefficients", [](const DimerModel& model, int two_s_z_t) {
        const auto c = sector_coefficients(model, two_s_z_t);
        return py::make_tuple(c.p, c.q, c.r);
    }, py::arg("model"), py::arg("two_s_z_t"), "Returns (P, Q, R) of a two-dimensional sector.");

    m.def("closed_form_spectrum", &closed_form_spectrum, py::arg("model"));

    m.def("eigenvector_in_product_basis",
          [](const DimerModel& model, int two_s_z_t, Branch branch) {
              const auto v = eigenvector_in_product_basis(model, two_s_z_t, branch);
              py::array_t<double> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())},
                                      std::vector<py::ssize_t>{sizeof(double)});
              auto buf = out.mutable_unchecked<1>();
              for (size_t i = 0; i < v.size(); ++i) buf(static_cast<py::ssize_t>(i)) = v[i];
              return out;
          },
          py::arg("model"), py::arg("two_s_z_t"), py::arg("branch"));

    m.def("ground_state_manifold", [](const DimerModel& model, double tol) {
        const auto g = ground_state_manifold(model, tol);
        return py::make_tuple(g.energy, g.states);
    }, py::arg("model"), py::arg("degeneracy_tol") = 1e-9);

    m.def("ground_state_density",
          [](const DimerModel& model) { return to_numpy(ground_state_density(model)); },
          py::arg("model"));

    m.def("thermal_density",
          [](const DimerModel& model, double t) { return to_numpy(thermal_density(model, t)); },
          py::arg("model"), py::arg("temperature"), "Gibbs state at reduced temperature k_B T / J.");

    m.def("partial_transpose_half",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& rho) {
              return to_numpy(partial_transpose_half(from_numpy(rho)));
          },
          py::arg("rho"));

    m.def("negativity", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& rho) {
        const auto res = negativity(from_numpy(rho));
        return py::make_tuple(res.negativity, res.negative_eigenvalues);
    }, py::arg("rho"), "Returns (negativity, negative eigenvalues of the partial transpose).");

    m.def("negativity_closed_pm_half", &negativity_closed_pm_half, py::arg("model"));
    m.def("negativity_closed_stretched", &negativity_closed_stretched, py::arg("model"));

    m.def("phase_diagram", [](double j, int two_s, double delta_min, double delta_max,
                              int delta_count, double d_min, double d_max, int d_count) {
        py::list out;
        for (const auto& p : phase_diagram(j, two_s, delta_min, delta_max, delta_count,
                                           d_min, d_max, d_count)) {
            py::dict d;
            d["delta"] = p.delta;
            d["d_over_j"] = p.d_over_j;
            d["ground_sectors"] = p.ground_sectors;
            d["negativity"] = p.negativity;
            out.append(d);
        }
        return out;
    }, py::arg("j"), py::arg("two_s"), py::arg("delta_min"), py::arg("delta_max"),
       py::arg("delta_count"), py::arg("d_min"), py::arg("d_max"), py::arg("d_count"));

    m.def("negativity_vs_d", [](double j, const std::vector<int>& two_s_list, double d_min,
                                double d_max, int points, double delta) {
        return table_to_dict(negativity_vs_d(j, two_s_list, d_min, d_max, points, delta));
    }, py::arg("j"), py::arg("two_s_list"), py::arg("d_min"), py::arg("d_max"),
       py::arg("points"), py::arg("delta"));

    m.def("thermal_profile", [](const DimerModel& model, const std::vector<double>& temps) {
        return table_to_dict(thermal_profile(model, temps));
    }, py::arg("model"), py::arg("temperatures"));

    m.def("threshold_temperature", [](const DimerModel& model) {
        const auto r = threshold_temperature(model);
        py::dict d;
        d["t_threshold"] = r.t_threshold;
        d["bracket"] = py::make_tuple(r.bracket_lo, r.bracket_hi);
        d["profile"] = r.profile;
        d["flection_count"] = r.flection_count;
        return d;
    }, py::arg("model"));

    m.def("geometric_grid", &geometric_grid, py::arg("lo"), py::arg("hi"), py::arg("n"));
}
