#pragma once

#include <cstddef>
#include <vector>

#include "meetdet/errors.hpp"
#include "meetdet/scalar.hpp"

namespace meetdet {

/// Dense row-major matrix of Scalars. Rectangular in general; the incidence
/// matrices of a poset and the C matrix of a grounded function both live here.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0) {}
    ScalarMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static ScalarMatrix identity(int n) {
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
        ScalarMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                Scalar s(0);
                for (int t = 0; t < a.cols_; ++t) s += a.at(i, t) * b.at(t, j);
                r.at(i, j) = s;
            }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Incidence matrices (zeta, Moebius) are integer ScalarMatrix values.
using IncidenceMatrix = ScalarMatrix;

} // namespace meetdet
