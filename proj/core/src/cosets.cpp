#include "siegel/cosets.hpp"

#include <stdexcept>

namespace siegel {

F2Vector::F2Vector(std::vector<int> coords) {
    if (coords.size() % 2) throw std::invalid_argument("F2 vector needs even length");
    m_ = coords.size() / 2;
    for (int c : coords) {
        if (c != 0 && c != 1) throw std::invalid_argument("F2 coordinates must be 0 or 1");
        v_.push_back(static_cast<std::uint8_t>(c));
    }
}

bool F2Vector::is_zero() const {
    for (auto b : v_)
        if (b) return false;
    return true;
}

std::string F2Vector::str() const {
    std::string s;
    for (std::size_t k = 0; k < v_.size(); ++k) {
        if (k == m_) s += '|';
        s += static_cast<char>('0' + v_[k]);
    }
    return s;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
    F2Vector r(n_ / 2);
    for (std::size_t j = 0; j < n_; ++j) {
        int s = 0;
        for (std::size_t i = 0; i < n_; ++i) s ^= v[i] & (*this)(i, j);
        r.set(j, s);
    }
    return r;
}

F2Matrix operator*(const F2Matrix& x, const F2Matrix& y) {
    F2Matrix p(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
        for (std::size_t j = 0; j < x.n_; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < x.n_; ++k) s ^= x(i, k) & y(k, j);
            p.set(i, j, s);
        }
    return p;
}

bool F2Matrix::is_symplectic() const {
    const std::size_t m = n_ / 2;
    std::vector<F2Vector> rows;
    for (std::size_t i = 0; i < n_; ++i) {
        F2Vector r(m);
        for (std::size_t j = 0; j < n_; ++j) r.set(j, (*this)(i, j));
        rows.push_back(r);
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            F2Vector ei(m), ej(m);
            ei.set(i, 1);
            ej.set(j, 1);
            if (f2_pairing(rows[i], rows[j]) != f2_pairing(ei, ej)) return false;
        }
    return true;
}

F2Matrix reduce_mod2(const IntMat& g) {
    F2Matrix r(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) r.set(i, j, mpz_odd_p(g(i, j).get_mpz_t()) ? 1 : 0);
    return r;
}

F2Matrix reduce_mod2(const IntegerSymplectic& g) { return reduce_mod2(g.mat()); }

int q0_eval(const F2Vector& v) {
    int s = 0;
    for (std::size_t i = 0; i < v.genus(); ++i) s ^= v.x(i) & v.xs(i);
    return s;
}

int f2_pairing(const F2Vector& v, const F2Vector& w) {
    int s = 0;
    for (std::size_t i = 0; i < v.genus(); ++i) s ^= (v.x(i) & w.xs(i)) ^ (v.xs(i) & w.x(i));
    return s;
}

std::vector<F2Vector> enumerate_isotropic(std::size_t m) {
    if (m < 1) throw std::invalid_argument("genus must be at least 1");
    if (m > 8) throw std::length_error("exhaustive enumeration is capped at m = 8");
    const std::size_t n = 2 * m;
    std::vector<F2Vector> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        F2Vector v(m);
        for (std::size_t k = 0; k < n; ++k) v.set(k, static_cast<int>((bits >> (n - 1 - k)) & 1));
        if (q0_eval(v) == 0) out.push_back(std::move(v));
    }
    return out;
}

IntegerSymplectic transvection_rep(const F2Vector& q) {
    const std::size_t m = q.genus();
    IntMat g = IntMat::identity(2 * m);
    for (std::size_t r = 0; r < 2 * m; ++r) {
        const long c = r < m ? q.xs(r) : -q.x(r - m);
        if (!c) continue;
        for (std::size_t k = 0; k < 2 * m; ++k) g(r, k) += c * q[k];
    }
    return IntegerSymplectic(std::move(g));
}

F2Matrix transvection_f2(const F2Vector& q) {
    const std::size_t m = q.genus(), n = 2 * m;
    F2Matrix t(n);
    for (std::size_t r = 0; r < n; ++r) {
        const int c = r < m ? q.xs(r) : q.x(r - m);
        for (std::size_t k = 0; k < n; ++k) t.set(r, k, (r == k ? 1 : 0) ^ (c & q[k]));
    }
    return t;
}

namespace {

const IntMat& pair_block() {
    static const IntMat b = {{0, -1, -1, 0}, {-1, 0, 0, -1}, {1, 1, 1, 0}, {1, 1, 0, 1}};
    return b;
}

}  // namespace

CosetRecord refine_rep(const F2Vector& q) {
    if (q0_eval(q) != 0) throw std::domain_error("coset representatives need Q0(q) = 0");
    const std::size_t m = q.genus();
    CosetRecord rec;
    rec.q = q;
    rec.m_prime = transvection_rep(q);
    rec.m_q.assign(m, 0);
    rec.eps_q.assign(m, 0);

    long expected = 0;
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < m; ++i) {
        const int x = q.x(i), xs = q.xs(i);
        if (x && xs) {
            odd.push_back(i);
            continue;
        }
        rec.s0.push_back(i);
        if (xs) {
            rec.factors.push_back(gen_iota(m, {i}, IntMat{{1, 1}, {0, 1}}));
            rec.m_q[i] = 1;
        } else if (x) {
            rec.factors.push_back(gen_iota(m, {i}, IntMat{{1, 0}, {-1, 1}}));
            rec.eps_q[i] = 1;
            expected += 1;
        }
    }
    for (std::size_t p = 0; p + 1 < odd.size(); p += 2) {
        const std::size_t j = odd[p], k = odd[p + 1];
        rec.s1.emplace_back(j, k);
        rec.factors.push_back(gen_iota(m, {j, k}, pair_block()));
        rec.m_q[j] = rec.m_q[k] = -1;
        rec.eps_q[j] = rec.eps_q[k] = -1;
        expected -= 1;
    }

    rec.m = IntegerSymplectic::identity(m);
    rec.lift = cover_identity(m);
    Mu8 mx = Mu8::one();
    for (const auto& f : rec.factors) {
        rec.m = rec.m * f;
        rec.lift = cover_mul(rec.lift, {f, 1});
        mx *= m_xstar(f);
    }
    if (!(mx == Mu8(expected))) throw std::logic_error("factor normalising constants disagree with the case table");
    rec.m_xstar_q = mx;
    rec.t = m_xstar(rec.m) * sign_mu8(rec.lift.eps);
    if (!in_theta_group(rec.m_prime * rec.m.inverse())) throw std::logic_error("refined representative left its coset");
    return rec;
}

namespace {

F2Vector coset_label(const IntegerSymplectic& g) {
    const std::size_t m = g.genus();
    const F2Matrix gi = reduce_mod2(g.inverse());
    F2Vector q(m);
    for (std::size_t i = 0; i < m; ++i) {
        F2Vector e(m), es(m);
        e.set(i, 1);
        es.set(m + i, 1);
        q.set(m + i, q0_eval(gi.apply(e)));
        q.set(i, q0_eval(gi.apply(es)));
    }
    if (q0_eval(q) != 0) throw std::logic_error("recovered coset label is anisotropic");
    return q;
}

}  // namespace

F2Vector coset_index_of(const IntegerSymplectic& g) {
    const F2Vector q = coset_label(g);
    if (!in_theta_group(g * refine_rep(q).m.inverse())) throw std::logic_error("recovered coset label fails the membership check");
    return q;
}

CosetTable::CosetTable(std::size_t m) : m_(m) {
    for (const auto& q : enumerate_isotropic(m)) {
        index_.emplace(q, recs_.size());
        recs_.push_back(refine_rep(q));
    }
}

std::size_t CosetTable::index_of(const F2Vector& q) const {
    auto it = index_.find(q);
    if (it == index_.end()) throw std::invalid_argument("not a coset label: " + q.str());
    return it->second;
}

std::size_t CosetTable::index_of(const IntegerSymplectic& g) const {
    if (g.genus() != m_) throw std::invalid_argument("genus mismatch");
    const std::size_t i = index_of(coset_label(g));
    if (!in_theta_group(g * recs_[i].m.inverse())) throw std::logic_error("recovered coset label fails the membership check");
    return i;
}

std::uint64_t coset_count(std::size_t m) {
    return ((std::uint64_t{1} << m) + 1) * (std::uint64_t{1} << (m - 1));
}

}  // namespace siegel
