#include "siegel/matrix.hpp"

#include <algorithm>
#include <utility>

namespace siegel {

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw std::domain_error("non-integral entry " + m(i, j).get_str());
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

Rat det(RatMat m) {
    if (!m.square()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows();
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            Rat f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return d;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    return d.get_num();
}

RatMat rref(const RatMat& in, std::vector<std::size_t>* pivots) {
    RatMat m = in;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Rat pv = m(r, c);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m.block(0, 0, r, cols);
}

std::size_t rank(const RatMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).rows();
}

RatMat inverse(const RatMat& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, RatMat::identity(n));
    std::vector<std::size_t> piv;
    RatMat red = rref(aug, &piv);
    if (red.rows() < n || piv.back() >= n) throw std::domain_error("singular matrix");
    return red.block(0, n, n, n);
}

RatMat kernel_rows(const RatMat& m) {
    const std::size_t cols = m.cols();
    std::vector<std::size_t> piv;
    RatMat red = m.rows() ? rref(m, &piv) : RatMat(0, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<Rat>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
        out.push_back(std::move(v));
    }
    RatMat k(out.size(), cols);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) k(i, j) = out[i][j];
    return k;
}

namespace {

void row_axpy(IntMat& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void col_axpy(IntMat& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void row_swap(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void col_swap(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
void row_neg(IntMat& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

// Row ops are mirrored on ui (ui·a·vi = current), so a = ui⁻¹·D·vi⁻¹.
Smith smith_normal_form(const IntMat& a_in) {
    IntMat a = a_in;
    const std::size_t m = a.rows(), n = a.cols();
    IntMat ui = IntMat::identity(m), vi = IntMat::identity(n);
    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
        bool found = false;
        std::size_t bi = t, bj = t;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < best)) {
                    found = true;
                    best = abs(a(i, j));
                    bi = i;
                    bj = j;
                }
        if (!found) break;
        row_swap(a, t, bi);
        row_swap(ui, t, bi);
        col_swap(a, t, bj);
        col_swap(vi, t, bj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = floor_div(a(i, t), a(t, t));
                row_axpy(a, i, t, -q);
                row_axpy(ui, i, t, -q);
                if (a(i, t) != 0) {
                    clean = false;
                    row_swap(a, t, i);
                    row_swap(ui, t, i);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = floor_div(a(t, j), a(t, t));
                col_axpy(a, j, t, -q);
                col_axpy(vi, j, t, -q);
                if (a(t, j) != 0) {
                    clean = false;
                    col_swap(a, t, j);
                    col_swap(vi, t, j);
                }
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        row_axpy(a, t, i, 1);
                        row_axpy(ui, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            row_neg(a, t);
            row_neg(ui, t);
        }
    }
    Smith s;
    s.d.resize(k);
    for (std::size_t t = 0; t < k; ++t) s.d[t] = a(t, t);
    s.u = to_int(inverse(to_rat(ui)));
    s.v = to_int(inverse(to_rat(vi)));
    return s;
}

}  // namespace siegel
