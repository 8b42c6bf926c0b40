#include "siegel/gauss.hpp"

#include <cmath>
#include <numbers>

namespace siegel {

namespace {

// q mod 2 in [0, 2)
Rat mod2(const Rat& q) {
    const Rat two = 2;
    Rat t = q / two;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return q - two * Rat(fl);
}

std::complex<double> unit_phase(const Rat& turns_over_pi) {
    const double a = std::numbers::pi * mod2(turns_over_pi).get_d();
    return {std::cos(a), std::sin(a)};
}

std::size_t class_count(const std::vector<Int>& d, std::size_t r) {
    Int n = 1;
    for (std::size_t i = 0; i < r; ++i) {
        n *= d[i];
        if (n > kMaxResidueClasses) throw std::length_error("residue enumeration exceeds the class guard");
    }
    return n.get_ui();
}

// Odometer over 0 ≤ kᵢ < dᵢ for i < r.
template <class F>
void for_each_digit(const std::vector<Int>& d, std::size_t r, F&& f) {
    std::vector<Int> k(r, 0);
    for (;;) {
        f(k);
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (++k[i] < d[i]) break;
            k[i] = 0;
        }
        if (i == r) return;
    }
}

}  // namespace

ResidueSystem residues_mod_cT(const IntMat& c) {
    if (!c.square()) throw std::invalid_argument("c must be square");
    if (det(c) == 0) throw std::domain_error("c is singular");
    const std::size_t m = c.rows();
    const Smith s = smith_normal_form(c.transpose());
    class_count(s.d, m);
    ResidueSystem rs{c, {}};
    for_each_digit(s.d, m, [&](const std::vector<Int>& k) {
        std::vector<Int> v(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) v[i] += s.u(i, j) * k[j];
        rs.reps.push_back(std::move(v));
    });
    return rs;
}

std::complex<double> symplectic_gauss_sum(const IntMat& d, const IntMat& c) {
    const ResidueSystem rs = residues_mod_cT(c);
    const std::size_t m = c.rows();
    const RatMat q = inverse(to_rat(c)) * to_rat(d);
    std::complex<double> sum = 0;
    for (const auto& l : rs.reps) {
        Rat ph = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) ph += Rat(l[i]) * q(i, j) * Rat(l[j]);
        sum += unit_phase(ph);
    }
    return sum;
}

SnappedRoot snap_root(std::complex<double> z) {
    const Mu8Snap s = snap_mu8(z);
    if (!(s.residual < kSnapTolerance))
        throw PrecisionError("value " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i is not an eighth root of unity");
    return {s.root, z, s.residual};
}

SnappedRoot beta_tilde(const IntegerSymplectic& g) {
    if (!in_theta_group(g)) throw std::domain_error("beta_tilde needs an element of the theta group");
    const std::size_t m = g.genus();
    const IntMat c = g.c(), d = g.d();
    const Smith s = smith_normal_form(c);
    std::size_t r = 0;
    while (r < m && s.d[r] != 0) ++r;
    const std::size_t n = class_count(s.d, r);
    const RatMat uinv = inverse(to_rat(s.u));
    const RatMat dct = to_rat(d * c.transpose());
    std::complex<double> sum = 0;
    for_each_digit(s.d, r, [&](const std::vector<Int>& k) {
        std::vector<Rat> u(m, Rat(0));
        for (std::size_t i = 0; i < r; ++i) {
            Rat w(k[i], s.d[i]);
            w.canonicalize();
            for (std::size_t j = 0; j < m; ++j) u[j] += w * uinv(i, j);
        }
        Rat ph = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) ph += u[i] * dct(i, j) * u[j];
        sum += unit_phase(-ph);
    });
    return snap_root(sum / std::sqrt(static_cast<double>(n)));
}

SnappedRoot beta_tilde_nonsingular(const IntegerSymplectic& g) {
    if (!in_theta_group(g)) throw std::domain_error("beta_tilde needs an element of the theta group");
    const Int dc = det(g.c());
    if (dc == 0) throw std::domain_error("c is singular");
    const std::complex<double> gs = symplectic_gauss_sum(g.d(), g.c());
    return snap_root(std::conj(gs) / std::sqrt(std::abs(dc.get_d())));
}

Mu8 lambda_multiplier(const IntegerSymplectic& r) { return m_xstar(r) / beta_tilde(r).value; }

Mu8 lambda_bar(const CoverElement& rbar) { return lambda_multiplier(rbar.g) * sign_mu8(rbar.eps); }

Mu8 f_shift(const CosetTable& table, const IntegerSymplectic& g) {
    const CosetRecord& rec = table[table.index_of(g)];
    const IntegerSymplectic r = g * rec.m.inverse();
    return beta_tilde(r).value * rao_cocycle(r, rec.m);
}

Mu8 modified_cocycle(const CosetTable& table, const IntegerSymplectic& g1, const IntegerSymplectic& g2) {
    return rao_cocycle(g1, g2) * f_shift(table, g1) * f_shift(table, g2) / f_shift(table, g1 * g2);
}

}  // namespace siegel
