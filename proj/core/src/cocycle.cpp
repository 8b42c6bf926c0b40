#include "siegel/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace siegel {

Rat symplectic_pairing(const std::vector<Rat>& v, const std::vector<Rat>& w) {
    const std::size_t m = v.size() / 2;
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += v[i] * w[m + i] - v[m + i] * w[i];
    return s;
}

Lagrangian::Lagrangian(RatMat basis) : b_(std::move(basis)) {
    const std::size_t m = b_.rows();
    if (b_.cols() != 2 * m) throw std::domain_error("Lagrangian basis must be m×2m");
    if (rank(b_) != m) throw std::domain_error("Lagrangian basis is rank deficient");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (symplectic_pairing(b_.row(i), b_.row(j)) != 0) throw std::domain_error("subspace is not isotropic");
}

Lagrangian Lagrangian::vertical(std::size_t m) {
    RatMat b(m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) b(i, m + i) = 1;
    return Lagrangian(std::move(b));
}

Lagrangian Lagrangian::vertical_times(const IntegerSymplectic& g) {
    const std::size_t m = g.genus();
    return Lagrangian(to_rat(g.mat().block(m, 0, m, 2 * m)));
}

int rational_signature(RatMat s) {
    int pos = 0, neg = 0;
    while (s.rows() > 0) {
        const std::size_t n = s.rows();
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (s(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (s(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            // e_i → e_i + e_j makes the diagonal entry 2·s(i,j) ≠ 0
            for (std::size_t k = 0; k < n; ++k) s(pi, k) += s(pj, k);
            for (std::size_t k = 0; k < n; ++k) s(k, pi) += s(k, pj);
            p = pi;
        }
        const Rat pv = s(p, p);
        (pv > 0 ? pos : neg)++;
        RatMat t(n - 1, n - 1);
        for (std::size_t a = 0, ta = 0; a < n; ++a) {
            if (a == p) continue;
            for (std::size_t b = 0, tb = 0; b < n; ++b) {
                if (b == p) continue;
                t(ta, tb) = s(a, b) - s(a, p) * s(p, b) / pv;
                ++tb;
            }
            ++ta;
        }
        s = std::move(t);
    }
    return pos - neg;
}

int real_signature(const RealMat& s, double tol) {
    Eigen::SelfAdjointEigenSolver<RealMat> es((s + s.transpose()) / 2);
    int sig = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        if (l > tol) ++sig;
        else if (l < -tol) --sig;
    }
    return sig;
}

int maslov_signature(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
    const std::size_t m = l1.genus();
    if (l2.genus() != m || l3.genus() != m) throw std::invalid_argument("genus mismatch");
    std::vector<std::pair<int, std::vector<Rat>>> basis;
    const Lagrangian* ls[3] = {&l1, &l2, &l3};
    for (int t = 0; t < 3; ++t)
        for (std::size_t i = 0; i < m; ++i) basis.emplace_back(t, ls[t]->basis().row(i));
    const std::size_t n = basis.size();
    auto cyclic = [](int a, int b) { return b == (a + 1) % 3; };
    RatMat s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& [ti, vi] = basis[i];
            const auto& [tj, vj] = basis[j];
            Rat v = 0;
            if (cyclic(ti, tj)) v += symplectic_pairing(vi, vj);
            if (cyclic(tj, ti)) v += symplectic_pairing(vj, vi);
            s(i, j) = v / 2;
        }
    return rational_signature(std::move(s));
}

Mu8 rao_cocycle(const IntegerSymplectic& g1, const IntegerSymplectic& g2) {
    const std::size_t m = g1.genus();
    if (g2.genus() != m) throw std::invalid_argument("genus mismatch");
    return Mu8(maslov_signature(Lagrangian::vertical(m), Lagrangian::vertical_times(g2.inverse()),
                                Lagrangian::vertical_times(g1)));
}

namespace {

RatMat omega_s_rat(std::size_t m, const std::vector<std::size_t>& s, bool inverse) {
    RatMat w = RatMat::identity(2 * m);
    for (std::size_t i : s) {
        w(i, i) = 0;
        w(m + i, m + i) = 0;
        w(i, m + i) = inverse ? 1 : -1;
        w(m + i, i) = inverse ? -1 : 1;
    }
    return w;
}

}  // namespace

PwsFactorization pws_decompose(const RatMat& g, PivotRule rule) {
    if (!g.square() || g.rows() % 2) throw std::invalid_argument("expected a 2m×2m matrix");
    const std::size_t m = g.rows() / 2;
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = rule == PivotRule::Leftmost ? i : m - 1 - i;

    RatMat cd(m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) cd(i, k) = g(m + i, perm[k]);
        for (std::size_t k = 0; k < m; ++k) cd(i, m + k) = g(m + i, m + k);
    }
    // forward elimination on the c-columns, pivot rows left unscaled
    RatMat red = cd;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0, r = 0; col < m && r < m; ++col) {
        std::size_t p = r;
        while (p < m && red(p, col) == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t k = 0; k < 2 * m; ++k) std::swap(red(p, k), red(r, k));
        for (std::size_t i = r + 1; i < m; ++i) {
            if (red(i, col) == 0) continue;
            const Rat f = red(i, col) / red(r, col);
            for (std::size_t k = 0; k < 2 * m; ++k) red(i, k) -= f * red(r, k);
        }
        piv.push_back(col);
        ++r;
    }
    const std::size_t j = piv.size();

    PwsFactorization f;
    f.j = j;
    RatMat a = RatMat::identity(m), brows(j, m);
    std::vector<std::size_t> srows(j);
    for (std::size_t t = 0; t < j; ++t) {
        const std::size_t row = perm[piv[t]];
        srows[t] = row;
        for (std::size_t k = 0; k < m; ++k) a(row, perm[k]) = red(t, k);
    }
    for (std::size_t t = 0; t < j; ++t) {
        // row S[t] of B is D₁Aᵀ
        for (std::size_t k = 0; k < m; ++k) {
            Rat v = 0;
            for (std::size_t l = 0; l < m; ++l) v += red(t, m + l) * a(k, l);
            brows(t, k) = v;
        }
    }
    RatMat b(m, m);
    for (std::size_t t = 0; t < j; ++t)
        for (std::size_t k = 0; k < m; ++k) {
            b(srows[t], k) = brows(t, k);
            b(k, srows[t]) = brows(t, k);
        }
    f.s = srows;
    std::sort(f.s.begin(), f.s.end());

    const RatMat ainv = inverse(a);
    const RatMat ainvt = ainv.transpose();
    RatMat p2(2 * m, 2 * m), p2inv(2 * m, 2 * m);
    p2.set_block(0, 0, a);
    p2.set_block(0, m, b * ainvt);
    p2.set_block(m, m, ainvt);
    p2inv.set_block(0, 0, ainv);
    p2inv.set_block(0, m, -(ainv * b));
    p2inv.set_block(m, m, a.transpose());

    const RatMat p1 = g * p2inv * omega_s_rat(m, f.s, true);
    if (!p1.block(m, 0, m, m).is_zero()) throw std::logic_error("pws factorisation left a nonzero c-block");
    if (!(p1 * omega_s_rat(m, f.s, false) * p2 == g)) throw std::logic_error("pws factorisation does not reconstruct g");
    const Rat x = det(p1.block(0, 0, m, m)) * det(a);
    f.x_sign = x > 0 ? 1 : -1;
    f.p1 = p1;
    f.p2 = p2;
    return f;
}

PwsFactorization pws_decompose(const IntegerSymplectic& g, PivotRule rule) { return pws_decompose(to_rat(g.mat()), rule); }

Mu8 m_xstar(const PwsFactorization& f) { return Mu8(-static_cast<long>(f.j) + (f.x_sign < 0 ? 2 : 0)); }

Mu8 m_xstar(const IntegerSymplectic& g) { return m_xstar(pws_decompose(g)); }

Mu8 nu_minus_one(const PwsFactorization& f) { return Mu8((f.x_sign < 0 ? 4 : 0) + 2 * static_cast<long>(f.j)); }

int cbar_cocycle(const IntegerSymplectic& g1, const IntegerSymplectic& g2) {
    const Mu8 v = m_xstar(g1 * g2).inv() * m_xstar(g1) * m_xstar(g2) * rao_cocycle(g1, g2);
    if (!v.is_sign()) throw std::logic_error("two-valued cocycle took value " + v.str());
    return v.sign();
}

IntegerSymplectic conjugate_by_minus_one(const IntegerSymplectic& g) {
    const std::size_t m = g.genus();
    IntMat r = g.mat();
    r.set_block(0, m, -g.b());
    r.set_block(m, 0, -g.c());
    return IntegerSymplectic(std::move(r));
}

CoverElement cover_identity(std::size_t m) { return {IntegerSymplectic::identity(m), 1}; }

CoverElement cover_mul(const CoverElement& a, const CoverElement& b) {
    return {a.g * b.g, a.eps * b.eps * cbar_cocycle(a.g, b.g)};
}

CoverElement cover_inverse(const CoverElement& a) {
    const IntegerSymplectic gi = a.g.inverse();
    return {gi, a.eps * cbar_cocycle(a.g, gi)};
}

}  // namespace siegel
