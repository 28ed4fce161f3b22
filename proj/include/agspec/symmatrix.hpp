#ifndef AGSPEC_SYMMATRIX_HPP
#define AGSPEC_SYMMATRIX_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace agspec {

// Dense real symmetric matrix. set() writes both mirrored entries and
// rejects non-finite values, so instances stay symmetric and finite.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("SymMatrix: dimension must be >= 1");
        a_.assign(static_cast<std::size_t>(n) * n, 0.0);
    }

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double value) {
        if (!std::isfinite(value)) throw std::invalid_argument("SymMatrix: non-finite entry");
        a_[idx(i, j)] = value;
        a_[idx(j, i)] = value;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += a_[idx(i, i)];
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SymMatrix: index");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<double> a_;
};

}  // namespace agspec

#endif
