#include "siegel/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace siegel {

IntMat standard_j(std::size_t m) {
    IntMat j(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j(i, m + i) = -1;
        j(m + i, i) = 1;
    }
    return j;
}

bool is_symplectic(const IntMat& g) {
    if (!g.square() || g.rows() % 2) throw std::invalid_argument("symplectic test needs an even square matrix");
    const IntMat j = standard_j(g.rows() / 2);
    return g.transpose() * j * g == j;
}

bool is_symplectic(const RealMat& g, double tol) {
    if (g.rows() != g.cols() || g.rows() % 2) throw std::invalid_argument("symplectic test needs an even square matrix");
    const Eigen::Index m = g.rows() / 2;
    RealMat j = RealMat::Zero(2 * m, 2 * m);
    j.topRightCorner(m, m) = -RealMat::Identity(m, m);
    j.bottomLeftCorner(m, m) = RealMat::Identity(m, m);
    return (g.transpose() * j * g - j).cwiseAbs().maxCoeff() <= tol;
}

IntegerSymplectic::IntegerSymplectic(IntMat g) : g_(std::move(g)) {
    if (!g_.square() || g_.rows() == 0 || g_.rows() % 2) throw std::invalid_argument("expected a 2m×2m matrix");
    if (!is_symplectic(g_)) throw std::invalid_argument("matrix is not symplectic");
    m_ = g_.rows() / 2;
}

IntegerSymplectic::IntegerSymplectic(IntMat g, Trusted) : g_(std::move(g)), m_(g_.rows() / 2) {}

IntegerSymplectic IntegerSymplectic::identity(std::size_t m) {
    return IntegerSymplectic(IntMat::identity(2 * m), Trusted{});
}

IntegerSymplectic IntegerSymplectic::inverse() const {
    // g⁻¹ = (dᵀ −bᵀ; −cᵀ aᵀ)
    IntMat r(2 * m_, 2 * m_);
    r.set_block(0, 0, d().transpose());
    r.set_block(0, m_, -b().transpose());
    r.set_block(m_, 0, -c().transpose());
    r.set_block(m_, m_, a().transpose());
    return IntegerSymplectic(std::move(r), Trusted{});
}

bool IntegerSymplectic::is_identity() const { return g_ == IntMat::identity(2 * m_); }

RealMat IntegerSymplectic::to_real() const {
    RealMat r(2 * m_, 2 * m_);
    for (std::size_t i = 0; i < 2 * m_; ++i)
        for (std::size_t j = 0; j < 2 * m_; ++j) r(i, j) = g_(i, j).get_d();
    return r;
}

IntegerSymplectic operator*(const IntegerSymplectic& x, const IntegerSymplectic& y) {
    if (x.m_ != y.m_) throw std::invalid_argument("genus mismatch");
    return IntegerSymplectic(x.g_ * y.g_, IntegerSymplectic::Trusted{});
}

namespace {

void require_symmetric(const IntMat& s, const char* what) {
    if (!s.square() || !(s == s.transpose())) throw std::invalid_argument(std::string(what) + " must be symmetric");
}

void require_index(std::size_t m, std::size_t i) {
    if (i >= m) throw std::invalid_argument("index out of range");
}

IntMat elementary(std::size_t m, std::size_t i, std::size_t j, long t) {
    IntMat e(m, m);
    e(i, j) = t;
    return e;
}

}  // namespace

IntegerSymplectic gen_u(const IntMat& b) {
    require_symmetric(b, "b");
    const std::size_t m = b.rows();
    IntMat g = IntMat::identity(2 * m);
    g.set_block(0, m, b);
    return IntegerSymplectic(std::move(g));
}

IntegerSymplectic gen_u_lower(const IntMat& c) {
    require_symmetric(c, "c");
    const std::size_t m = c.rows();
    IntMat g = IntMat::identity(2 * m);
    g.set_block(m, 0, c);
    return IntegerSymplectic(std::move(g));
}

IntegerSymplectic gen_h(const IntMat& a) {
    if (!a.square()) throw std::invalid_argument("a must be square");
    const Int dt = det(a);
    if (dt != 1 && dt != -1) throw std::invalid_argument("a must be unimodular");
    const std::size_t m = a.rows();
    IntMat g(2 * m, 2 * m);
    g.set_block(0, 0, a);
    g.set_block(m, m, to_int(inverse(to_rat(a))).transpose());
    return IntegerSymplectic(std::move(g));
}

IntegerSymplectic gen_omega(std::size_t m) {
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    return gen_omega_s(m, all);
}

IntegerSymplectic gen_omega_s(std::size_t m, const std::vector<std::size_t>& s) {
    IntMat g = IntMat::identity(2 * m);
    for (std::size_t i : s) {
        require_index(m, i);
        g(i, i) = 0;
        g(m + i, m + i) = 0;
        g(i, m + i) = -1;
        g(m + i, i) = 1;
    }
    return IntegerSymplectic(std::move(g));
}

IntegerSymplectic gen_u_ij(std::size_t m, std::size_t i, std::size_t j, long t) {
    require_index(m, i);
    require_index(m, j);
    IntMat b = elementary(m, i, j, t);
    if (i != j) b(j, i) = t;
    return gen_u(b);
}

IntegerSymplectic gen_u_lower_ij(std::size_t m, std::size_t i, std::size_t j, long t) {
    require_index(m, i);
    require_index(m, j);
    IntMat c = elementary(m, i, j, -t);
    if (i != j) c(j, i) = -t;
    return gen_u_lower(c);
}

IntegerSymplectic gen_v_ij(std::size_t m, std::size_t i, std::size_t j, long t) {
    require_index(m, i);
    require_index(m, j);
    if (i == j) throw std::invalid_argument("v_ij needs i != j");
    return gen_h(IntMat::identity(m) + elementary(m, i, j, t));
}

IntegerSymplectic gen_iota(std::size_t m, const std::vector<std::size_t>& idx, const IntMat& small) {
    const std::size_t k = idx.size();
    if (small.rows() != 2 * k || small.cols() != 2 * k) throw std::invalid_argument("block size does not match index set");
    std::vector<std::size_t> pos;
    for (std::size_t i : idx) {
        require_index(m, i);
        if (std::count(idx.begin(), idx.end(), i) > 1) throw std::invalid_argument("repeated index");
        pos.push_back(i);
    }
    for (std::size_t i : idx) pos.push_back(m + i);
    IntMat g = IntMat::identity(2 * m);
    for (std::size_t r = 0; r < 2 * k; ++r)
        for (std::size_t c = 0; c < 2 * k; ++c) g(pos[r], pos[c]) = small(r, c);
    return IntegerSymplectic(std::move(g));
}

IntegerSymplectic make_generator(GeneratorKind kind, std::size_t m, const GeneratorParams& p) {
    auto ij = [&]() {
        if (p.indices.size() != 2) throw std::invalid_argument("expected two indices");
        return std::pair{p.indices[0], p.indices[1]};
    };
    switch (kind) {
        case GeneratorKind::U: return gen_u(p.matrix);
        case GeneratorKind::ULower: return gen_u_lower(p.matrix);
        case GeneratorKind::H: return gen_h(p.matrix);
        case GeneratorKind::Omega: return gen_omega(m);
        case GeneratorKind::OmegaS: return gen_omega_s(m, p.indices);
        case GeneratorKind::Uij: {
            auto [i, j] = ij();
            return gen_u_ij(m, i, j, p.t);
        }
        case GeneratorKind::ULowerij: {
            auto [i, j] = ij();
            return gen_u_lower_ij(m, i, j, p.t);
        }
        case GeneratorKind::Vij: {
            auto [i, j] = ij();
            return gen_v_ij(m, i, j, p.t);
        }
        case GeneratorKind::Iota: return gen_iota(m, p.indices, p.matrix);
    }
    throw std::invalid_argument("unknown generator kind");
}

bool in_theta_group(const IntegerSymplectic& g) {
    const std::size_t m = g.genus();
    for (std::size_t i = 0; i < m; ++i) {
        Int ab = 0, cd = 0;
        for (std::size_t k = 0; k < m; ++k) {
            ab += g(i, k) * g(i, m + k);
            cd += g(m + i, k) * g(m + i, m + k);
        }
        if (ab % 2 != 0 || cd % 2 != 0) return false;
    }
    return true;
}

bool in_gamma2(const IntegerSymplectic& g) {
    const std::size_t n = 2 * g.genus();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((g(i, j) - (i == j ? 1 : 0)) % 2 != 0) return false;
    return true;
}

bool in_gamma_d_2d(const IntegerSymplectic& g, long d) {
    if (d <= 0) throw std::invalid_argument("level must be positive");
    const std::size_t m = g.genus(), n = 2 * m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((g(i, j) - (i == j ? 1 : 0)) % d != 0) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (g(m + i, i) % (2 * d) != 0) return false;
        if (g(i, m + i) % (2 * d) != 0) return false;
    }
    return true;
}

bool in_subgroup(const IntegerSymplectic& g, Subgroup which, long d) {
    switch (which) {
        case Subgroup::Full: return true;
        case Subgroup::Theta: return in_theta_group(g);
        case Subgroup::Level2: return in_gamma2(g);
        case Subgroup::Level: return in_gamma_d_2d(g, d);
    }
    return false;
}

namespace {

struct Letter {
    IntegerSymplectic g;
    std::string name;
};

std::vector<Letter> alphabet(std::size_t m, Subgroup which) {
    std::vector<Letter> out;
    auto idx = [](std::size_t i) { return std::to_string(i + 1); };
    if (which == Subgroup::Level2) {
        for (std::size_t i = 0; i < m; ++i) {
            out.push_back({gen_u_ij(m, i, i, 2), "u" + idx(i) + idx(i) + "(2)"});
            out.push_back({gen_u_lower_ij(m, i, i, 2), "u-" + idx(i) + idx(i) + "(2)"});
            for (std::size_t j = i + 1; j < m; ++j) {
                out.push_back({gen_u_ij(m, i, j, 2), "u" + idx(i) + idx(j) + "(2)"});
                out.push_back({gen_u_lower_ij(m, i, j, 2), "u-" + idx(i) + idx(j) + "(2)"});
                out.push_back({gen_v_ij(m, i, j, 2), "v" + idx(i) + idx(j) + "(2)"});
                out.push_back({gen_v_ij(m, j, i, 2), "v" + idx(j) + idx(i) + "(2)"});
            }
        }
    } else {
        const long diag = which == Subgroup::Theta ? 2 : 1;
        out.push_back({gen_omega(m), "w"});
        for (std::size_t i = 0; i < m; ++i) {
            out.push_back({gen_u_ij(m, i, i, diag), "u" + idx(i) + idx(i) + "(" + std::to_string(diag) + ")"});
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                if (j > i) out.push_back({gen_u_ij(m, i, j, 1), "u" + idx(i) + idx(j)});
                out.push_back({gen_v_ij(m, i, j, 1), "v" + idx(i) + idx(j)});
            }
        }
    }
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back({out[k].g.inverse(), out[k].name + "^-1"});
    return out;
}

}  // namespace

Word random_word(std::size_t m, Subgroup which, std::size_t length, std::mt19937_64& rng) {
    if (which == Subgroup::Level) throw std::invalid_argument("no word sampler for Γ(d,2d)");
    const auto letters = alphabet(m, which);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word w{IntegerSymplectic::identity(m), {}};
    for (std::size_t k = 0; k < length; ++k) {
        const auto& l = letters[pick(rng)];
        w.element = w.element * l.g;
        w.letters.push_back(l.name);
    }
    return w;
}

Word random_gamma48(std::size_t m, std::size_t length, std::mt19937_64& rng) {
    const Word x = random_word(m, Subgroup::Level2, length, rng);
    const Word y = random_word(m, Subgroup::Level2, length, rng);
    Word w{x.element * y.element * x.element.inverse() * y.element.inverse(), {"["}};
    for (const auto& l : x.letters) w.letters.push_back(l);
    w.letters.push_back(",");
    for (const auto& l : y.letters) w.letters.push_back(l);
    w.letters.push_back("]");
    if (!in_gamma_d_2d(w.element, 4)) throw std::logic_error("commutator left the level-(4,8) subgroup");
    return w;
}

Word random_word(std::size_t m, Subgroup which, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_word(m, which, length, rng);
}

SiegelPoint::SiegelPoint(CplxMat z) : z_(std::move(z)) {
    if (z_.rows() != z_.cols() || z_.rows() == 0) throw std::domain_error("Siegel point must be square");
    if ((z_ - z_.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw std::domain_error("Siegel point must be symmetric");
    RealMat y = z_.imag();
    y = ((y + y.transpose()) / 2).eval();
    Eigen::LLT<RealMat> llt(y);
    if (llt.info() != Eigen::Success) throw std::domain_error("imaginary part is not positive definite");
    for (Eigen::Index i = 0; i < y.rows(); ++i)
        if (!(llt.matrixL()(i, i) > 0)) throw std::domain_error("imaginary part is not positive definite");
}

SiegelPoint::SiegelPoint(const RealMat& x, const RealMat& y) : SiegelPoint(CplxMat(x.cast<std::complex<double>>() + std::complex<double>(0, 1) * y.cast<std::complex<double>>())) {}

SiegelPoint SiegelPoint::base(std::size_t m) {
    const auto n = static_cast<Eigen::Index>(m);
    return SiegelPoint(CplxMat(std::complex<double>(0, 1) * CplxMat::Identity(n, n)));
}

double SiegelPoint::min_eig_y() const {
    Eigen::SelfAdjointEigenSolver<RealMat> es(y());
    return es.eigenvalues().minCoeff();
}

double SiegelPoint::cond_y() const {
    Eigen::SelfAdjointEigenSolver<RealMat> es(y());
    return es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
}

MobiusResult mobius(const RealMat& g, const SiegelPoint& z) {
    const Eigen::Index m = static_cast<Eigen::Index>(z.genus());
    if (g.rows() != 2 * m || g.cols() != 2 * m) throw std::invalid_argument("genus mismatch");
    const CplxMat a = g.topLeftCorner(m, m).cast<std::complex<double>>();
    const CplxMat b = g.topRightCorner(m, m).cast<std::complex<double>>();
    const CplxMat c = g.bottomLeftCorner(m, m).cast<std::complex<double>>();
    const CplxMat d = g.bottomRightCorner(m, m).cast<std::complex<double>>();
    CplxMat j = c * z.z() + d;
    Eigen::PartialPivLU<CplxMat> lu(j);
    if (lu.rcond() < 1e-12) throw std::domain_error("cz+d is numerically singular");
    CplxMat w = (a * z.z() + b) * lu.inverse();
    w = ((w + w.transpose()) / 2.0).eval();
    return {SiegelPoint(std::move(w)), std::move(j)};
}

SiegelPoint mobius_act(const RealMat& g, const SiegelPoint& z) { return mobius(g, z).point; }

CplxMat automorphy_j(const RealMat& g, const SiegelPoint& z) {
    const Eigen::Index m = static_cast<Eigen::Index>(z.genus());
    return g.bottomLeftCorner(m, m).cast<std::complex<double>>() * z.z() + g.bottomRightCorner(m, m).cast<std::complex<double>>();
}

IwasawaPair iwasawa_decompose(const RealMat& g) {
    const Eigen::Index m = g.rows() / 2;
    const SiegelPoint zg = mobius_act(g, SiegelPoint::base(static_cast<std::size_t>(m)));
    RealMat y = zg.y();
    Eigen::SelfAdjointEigenSolver<RealMat> es((y + y.transpose()) / 2);
    if (es.eigenvalues().minCoeff() <= 0) throw std::domain_error("y_g is not positive definite");
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(1e-14);
    const RealMat q = es.eigenvectors();
    const RealMat sq = q * ev.cwiseSqrt().asDiagonal() * q.transpose();
    const RealMat sqi = q * ev.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
    RealMat p = RealMat::Zero(2 * m, 2 * m);
    p.topLeftCorner(m, m) = sq;
    p.topRightCorner(m, m) = zg.x() * sqi;
    p.bottomRightCorner(m, m) = sqi;
    RealMat pinv = RealMat::Zero(2 * m, 2 * m);
    pinv.topLeftCorner(m, m) = sqi;
    pinv.topRightCorner(m, m) = -sqi * zg.x();
    pinv.bottomRightCorner(m, m) = sq;
    return {p, pinv * g};
}

double unitary_identity_residual(const RealMat& g) {
    const Eigen::Index m = g.rows() / 2;
    const std::complex<double> i(0, 1);
    const CplxMat c = g.bottomLeftCorner(m, m).cast<std::complex<double>>();
    const CplxMat d = g.bottomRightCorner(m, m).cast<std::complex<double>>();
    const RealMat y = mobius_act(g, SiegelPoint::base(static_cast<std::size_t>(m))).y();
    const CplxMat lhs = (c * i + d) * (-c * i + d).transpose() * y.transpose().cast<std::complex<double>>();
    return (lhs - CplxMat::Identity(m, m)).cwiseAbs().maxCoeff();
}

SiegelPoint random_siegel_point(std::size_t m, std::mt19937_64& rng, double max_cond) {
    const auto n = static_cast<Eigen::Index>(m);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (;;) {
        RealMat x(n, n), a(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                x(i, j) = 0.5 * nd(rng);
                a(i, j) = (i == j ? 1.0 : 0.0) + 0.3 * nd(rng);
            }
        x = ((x + x.transpose()) / 2).eval();
        if (std::abs(a.determinant()) < 1e-3) continue;
        RealMat g = RealMat::Identity(2 * n, 2 * n);
        g.topRightCorner(n, n) = x;
        RealMat h = RealMat::Zero(2 * n, 2 * n);
        h.topLeftCorner(n, n) = a;
        h.bottomRightCorner(n, n) = a.inverse().transpose();
        SiegelPoint z = mobius_act(g * h, SiegelPoint::base(m));
        if (z.cond_y() <= max_cond) return z;
    }
}

}  // namespace siegel
