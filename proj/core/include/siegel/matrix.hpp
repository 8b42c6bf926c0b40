#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

using Int = mpz_class;
using Rat = mpq_class;

// Dense row-major matrix over an exact ring.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<long>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
            for (long x : row) a_.emplace_back(T(x));
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Mat transpose() const {
        Mat t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
        Mat b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat p(x.r_, y.c_);
        T acc;
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const T& xik = x(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.c_; ++j) {
                    acc = xik * y(k, j);
                    p(i, j) += acc;
                }
            }
        return p;
    }

    friend Mat operator+(Mat x, const Mat& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix sum shape mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }

    friend Mat operator-(Mat x, const Mat& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix difference shape mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }

    friend Mat operator-(Mat x) {
        for (auto& v : x.a_) v = -v;
        return x;
    }

    friend Mat operator*(const T& s, Mat x) {
        for (auto& v : x.a_) v *= s;
        return x;
    }

    const std::vector<T>& data() const { return a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
// Throws if some entry is not an integer.
IntMat to_int(const RatMat& m);

Rat det(RatMat m);
Int det(const IntMat& m);
// Throws std::domain_error on singular input.
RatMat inverse(const RatMat& m);
std::size_t rank(const RatMat& m);

// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
RatMat rref(const RatMat& m, std::vector<std::size_t>* pivots = nullptr);

// Rows spanning {v : m·vᵀ = 0}.
RatMat kernel_rows(const RatMat& m);

// Smith normal form: a = u·diag(d)·v with u, v unimodular; d nonnegative, each dividing the next.
struct Smith {
    IntMat u, v;
    std::vector<Int> d;
};
Smith smith_normal_form(const IntMat& a);

template <class T>
std::string to_string(const Mat<T>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            s += j ? " " : "";
            s += m(i, j).get_str();
        }
    }
    return s + "]";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
    return os << to_string(m);
}

}  // namespace siegel
