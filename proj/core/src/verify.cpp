#include "siegel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "siegel/gauss.hpp"

namespace siegel {

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> perm, std::vector<Mu8> coeffs)
    : perm_(std::move(perm)), coeffs_(std::move(coeffs)) {
    if (perm_.size() != coeffs_.size()) throw std::invalid_argument("monomial matrix shape mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p]) throw std::invalid_argument("monomial matrix needs a permutation");
        seen[p] = true;
    }
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return MonomialMatrix(std::move(p), std::vector<Mu8>(n, Mu8::one()));
}

bool MonomialMatrix::entry(std::size_t i, std::size_t j, Mu8* value) const {
    if (perm_[i] != j) return false;
    if (value) *value = coeffs_[i];
    return true;
}

std::vector<Complex> MonomialMatrix::apply_right(const std::vector<Complex>& v) const {
    std::vector<Complex> out(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) out[perm_[i]] += v[i] * coeffs_[i].value();
    return out;
}

std::vector<Eigen::VectorXcd> MonomialMatrix::apply_right(const std::vector<Eigen::VectorXcd>& v) const {
    std::vector<Eigen::VectorXcd> out(size(), Eigen::VectorXcd::Zero(v.empty() ? 0 : v[0].size()));
    for (std::size_t i = 0; i < size(); ++i) out[perm_[i]] += v[i] * coeffs_[i].value();
    return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial matrix size mismatch");
    std::vector<std::size_t> p(a.size());
    std::vector<Mu8> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        p[i] = b.perm_[a.perm_[i]];
        c[i] = a.coeffs_[i] * b.coeffs_[a.perm_[i]];
    }
    return MonomialMatrix(std::move(p), std::move(c));
}

MonomialMatrix induced_rep_matrix(const CosetTable& table, const CoverElement& rbar) {
    const std::size_t n = table.size();
    std::vector<std::size_t> perm(n);
    std::vector<Mu8> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const CoverElement x = cover_mul(table[i].lift, rbar);
        const std::size_t j = table.index_of(x.g);
        const CoverElement s = cover_mul(x, cover_inverse(table[j].lift));
        if (!in_theta_group(s.g)) throw std::logic_error("coset bookkeeping produced an element outside the theta group");
        perm[i] = j;
        coeffs[i] = lambda_bar(s).inv();
    }
    return MonomialMatrix(std::move(perm), std::move(coeffs));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

namespace {

constexpr int kMaxAttempts = 1000;

struct Sample {
    IntegerSymplectic r;
    SiegelPoint z, rz;
};

std::string describe(const IntegerSymplectic& r, const SiegelPoint& z) {
    std::ostringstream os;
    os.precision(17);
    os << "r=" << r.mat() << " z=[";
    for (Eigen::Index i = 0; i < z.z().rows(); ++i)
        for (Eigen::Index j = 0; j < z.z().cols(); ++j)
            os << (i || j ? (j ? " " : "; ") : "") << z.z()(i, j).real() << (z.z()(i, j).imag() < 0 ? "" : "+")
               << z.z()(i, j).imag() << "i";
    os << "]";
    return os.str();
}

// Resamples until r(z) is well conditioned and both theta sums fit under the radius cap.
template <class DrawR>
Sample draw_sample(const VerifyOptions& opt, std::mt19937_64& rng, DrawR&& draw_r) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        IntegerSymplectic r = draw_r(rng);
        SiegelPoint z = random_siegel_point(opt.m, rng);
        try {
            SiegelPoint rz = mobius_act(r.to_real(), z);
            if (rz.cond_y() > 1e4) continue;
            truncation_radius(z, opt.theta);
            truncation_radius(rz, opt.theta);
            return {std::move(r), std::move(z), std::move(rz)};
        } catch (const std::domain_error&) {
        } catch (const CapacityError&) {
        }
    }
    throw std::runtime_error("could not draw a well-conditioned sample");
}

struct ErrorTracker {
    VerificationReport& rep;
    void record(double abs_err, double scale, bool half, const std::string& where) {
        const double rel = abs_err / std::max(scale, 1e-300);
        rep.max_abs_error = std::max(rep.max_abs_error, abs_err);
        double& slot = half ? rep.max_rel_error_half : rep.max_rel_error_three_half;
        slot = std::max(slot, rel);
        if (rel > rep.max_rel_error || rep.worst_case.empty()) {
            rep.max_rel_error = std::max(rep.max_rel_error, rel);
            rep.worst_case = where;
        }
    }
};

std::size_t word_length(std::mt19937_64& rng, std::size_t cap) {
    return std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(cap, 1))(rng);
}

}  // namespace

VerificationReport verify_scalar_law(const VerifyOptions& opt) {
    if (opt.m < 1 || opt.m > 3) throw std::invalid_argument("scalar law is verified for m in {1,2,3}");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.theorem = "scalar";
    rep.m = opt.m;
    rep.trials = opt.trials;
    rep.tolerance = opt.tol;
    ErrorTracker track{rep};
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = trial_rng(opt.seed, t);
        const Sample s = draw_sample(opt, rng, [&](std::mt19937_64& g) {
            return random_word(opt.m, Subgroup::Theta, word_length(g, opt.max_word_length), g).element;
        });
        const Complex factor = lambda_multiplier(s.r).value() * sqrt_det(s.r, s.z);
        const std::string where = describe(s.r, s.z);

        const ThetaValue lhs = theta_series(s.rz, Weight::Half, opt.theta);
        const ThetaValue rhs = theta_series(s.z, Weight::Half, opt.theta);
        const Complex r1 = factor * rhs.scalar;
        track.record(std::abs(lhs.scalar - r1), std::max(std::abs(lhs.scalar), std::abs(r1)), true, where);

        const ThetaValue lhs3 = theta_series(s.rz, Weight::ThreeHalf, opt.theta);
        const ThetaValue rhs3 = theta_series(s.z, Weight::ThreeHalf, opt.theta);
        const CplxMat j = automorphy_j(s.r.to_real(), s.z);
        const Eigen::VectorXcd r3 = factor * (j * rhs3.vec);
        const double scale = std::max({lhs3.vec.norm(), r3.norm(), lhs3.mass, std::abs(factor) * j.norm() * rhs3.mass});
        track.record((lhs3.vec - r3).norm(), scale, false, where);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.pass = rep.max_rel_error < rep.tolerance;
    return rep;
}

VerificationReport verify_vector_law(const VerifyOptions& opt) {
    if (opt.m < 1 || opt.m > 2) throw std::invalid_argument("vector law is verified for m in {1,2}");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.theorem = "vector";
    rep.m = opt.m;
    rep.trials = opt.trials;
    rep.tolerance = opt.tol;
    ErrorTracker track{rep};
    const CosetTable table(opt.m);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        auto rng = trial_rng(opt.seed, t);
        const Sample s = draw_sample(opt, rng, [&](std::mt19937_64& g) {
            const std::size_t half = std::max<std::size_t>(opt.max_word_length / 2, 1);
            const auto w1 = random_word(opt.m, Subgroup::Theta, word_length(g, half), g).element;
            const auto w2 = random_word(opt.m, Subgroup::Full, word_length(g, half), g).element;
            const std::size_t k = std::uniform_int_distribution<std::size_t>(0, table.size() - 1)(g);
            return w1 * table[k].m * w2;
        });
        const int eps = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        const CoverElement rbar{s.r, eps};
        const MonomialMatrix gam = induced_rep_matrix(table, cover_inverse(rbar));
        const Complex factor = static_cast<double>(eps) * sqrt_det(s.r, s.z);
        const std::string where = describe(s.r, s.z) + " eps=" + std::to_string(eps);

        const auto lhs = big_theta(table, s.rz, Weight::Half, opt.theta);
        const auto rhs = big_theta(table, s.z, Weight::Half, opt.theta);
        std::vector<Complex> v(table.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = rhs[i].value.scalar;
        const auto moved = gam.apply_right(v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Complex r1 = factor * moved[i];
            track.record(std::abs(lhs[i].value.scalar - r1), std::max(std::abs(lhs[i].value.scalar), std::abs(r1)), true,
                         where + " component=" + std::to_string(i));
        }

        const auto lhs3 = big_theta(table, s.rz, Weight::ThreeHalf, opt.theta);
        const auto rhs3 = big_theta(table, s.z, Weight::ThreeHalf, opt.theta);
        const CplxMat j = automorphy_j(s.r.to_real(), s.z);
        std::vector<Eigen::VectorXcd> v3(table.size());
        double rhs_mass = 0;
        for (std::size_t i = 0; i < v3.size(); ++i) {
            v3[i] = rhs3[i].value.vec;
            rhs_mass = std::max(rhs_mass, rhs3[i].value.mass);
        }
        const auto moved3 = gam.apply_right(v3);
        for (std::size_t i = 0; i < v3.size(); ++i) {
            const Eigen::VectorXcd r3 = factor * (j * moved3[i]);
            const double scale = std::max({lhs3[i].value.vec.norm(), r3.norm(), lhs3[i].value.mass,
                                           std::abs(factor) * j.norm() * rhs_mass});
            track.record((lhs3[i].value.vec - r3).norm(), scale, false, where + " component=" + std::to_string(i));
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.pass = rep.max_rel_error < rep.tolerance;
    return rep;
}

}  // namespace siegel
