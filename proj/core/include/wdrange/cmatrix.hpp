#pragma once

#include "wdrange/special.hpp"

#include <cmath>
#include <vector>

namespace wdr {

/// Dense complex matrix, row-major. Just enough linear algebra for the
/// operator matrices and the numerical-range engine.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), cplx(0.0)) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("CMatrix: negative dimension");
    }

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }
    const cplx& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    const std::vector<cplx>& data() const { return a_; }

    CMatrix adjoint() const {
        CMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    CMatrix scaled(cplx factor) const {
        CMatrix m = *this;
        for (cplx& x : m.a_)
            x *= factor;
        return m;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (const cplx& x : a_)
            acc += std::norm(x);
        return std::sqrt(acc);
    }

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
        check_same_shape(a, b);
        CMatrix m = a;
        for (size_t i = 0; i < m.a_.size(); ++i)
            m.a_[i] += b.a_[i];
        return m;
    }

    friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
        check_same_shape(a, b);
        CMatrix m = a;
        for (size_t i = 0; i < m.a_.size(); ++i)
            m.a_[i] -= b.a_[i];
        return m;
    }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("CMatrix: incompatible product shapes");
        CMatrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0))
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    m(i, j) += aik * b(k, j);
            }
        }
        return m;
    }

    // y = A x
    std::vector<cplx> apply(const std::vector<cplx>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("CMatrix::apply: bad vector size");
        std::vector<cplx> y(static_cast<size_t>(rows_), cplx(0.0));
        for (int i = 0; i < rows_; ++i) {
            cplx acc = 0.0;
            for (int j = 0; j < cols_; ++j)
                acc += (*this)(i, j) * x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = acc;
        }
        return y;
    }

private:
    static void check_same_shape(const CMatrix& a, const CMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("CMatrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<cplx> a_;
};

inline cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    // <x, y> conjugate-linear in the second slot
    cplx acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
        acc += x[i] * std::conj(y[i]);
    return acc;
}

inline double vec_norm(const std::vector<cplx>& x) {
    double acc = 0.0;
    for (const cplx& v : x)
        acc += std::norm(v);
    return std::sqrt(acc);
}

} // namespace wdr
