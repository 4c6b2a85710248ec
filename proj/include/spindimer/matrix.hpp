#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace spindimer {

// Plain dense square matrix, row-major.
class DenseMatrix {
  public:
    explicit DenseMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {
        if (dim < 1) throw std::invalid_argument("DenseMatrix: dim must be >= 1");
    }

    int dim() const { return dim_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    std::span<const double> data() const { return a_; }

  private:
    int dim_;
    std::vector<double> a_;
};

// Real symmetric matrix; set() writes both mirrored entries so the
// stored matrix is symmetric bitwise, not merely within tolerance.
class DenseSymmetricMatrix {
  public:
    explicit DenseSymmetricMatrix(int dim) : m_(dim) {}

    int dim() const { return m_.dim(); }
    double operator()(int i, int j) const { return m_(i, j); }

    void set(int i, int j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    void add(int i, int j, double v) { set(i, j, m_(i, j) + v); }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim(); ++i) t += m_(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : m_.data()) s += x * x;
        return std::sqrt(s);
    }

    std::vector<double> apply(std::span<const double> v) const {
        if (static_cast<int>(v.size()) != dim())
            throw std::invalid_argument("apply: size mismatch");
        std::vector<double> out(dim(), 0.0);
        for (int i = 0; i < dim(); ++i) {
            double s = 0.0;
            for (int j = 0; j < dim(); ++j) s += m_(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    std::span<const double> data() const { return m_.data(); }

  private:
    DenseMatrix m_;
};

}  // namespace spindimer
