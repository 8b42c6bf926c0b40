#include "doctest.h"

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "siegel/gauss.hpp"

using namespace siegel;
using testing::sym;

namespace {

using C = std::complex<double>;

bool congruent(const std::vector<Int>& a, const std::vector<Int>& b, const IntMat& c) {
    // a − b ∈ cᵀZᵐ ⇔ c^{−T}(a − b) integral
    const RatMat cti = inverse(to_rat(c.transpose()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) s += cti(i, j) * Rat(a[j] - b[j]);
        if (s.get_den() != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("residue systems") {
    const auto two = residues_mod_cT(IntMat{{2}});
    CHECK(two.reps.size() == 2);
    CHECK(residues_mod_cT(IntMat{{-2}}).reps.size() == 2);
    for (const IntMat& c : {IntMat{{2, 0}, {0, 3}}, IntMat{{2, 1}, {1, 3}}, IntMat{{4, 2}, {0, -2}}}) {
        const auto r = residues_mod_cT(c);
        Int d = det(c);
        CHECK(r.reps.size() == Int(abs(d)).get_ui());
        for (std::size_t i = 0; i < r.reps.size(); ++i)
            for (std::size_t j = i + 1; j < r.reps.size(); ++j) CHECK_FALSE(congruent(r.reps[i], r.reps[j], c));
    }
    CHECK_THROWS_AS(residues_mod_cT(IntMat{{1, 1}, {1, 1}}), std::domain_error);
}

TEST_CASE("symplectic Gauss sums") {
    CHECK(std::abs(symplectic_gauss_sum(IntMat{{0}}, IntMat{{1}}) - C(1, 0)) < 1e-14);
    CHECK(std::abs(symplectic_gauss_sum(IntMat{{1}}, IntMat{{-2}}) - C(1, -1)) < 1e-14);
    CHECK(std::abs(symplectic_gauss_sum(IntMat{{1}}, IntMat{{-4}}) - 2.0 * std::polar(1.0, -std::numbers::pi / 4)) < 1e-13);
    CHECK_THROWS_AS(symplectic_gauss_sum(IntMat{{1}}, IntMat{{0}}), std::domain_error);
}

TEST_CASE("snapping") {
    CHECK(snap_root(std::polar(1.0, 3 * std::numbers::pi / 4)).value == Mu8(3));
    CHECK_THROWS_AS(snap_root(C(0.5, 0)), PrecisionError);
    CHECK_THROWS_AS(snap_root(std::polar(1.0, 0.1)), PrecisionError);
}

TEST_CASE("trivialisation anchors") {
    std::mt19937_64 rng(53);
    for (std::size_t m = 1; m <= 3; ++m) {
        IntMat b(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) b(i, j) = b(j, i) = (i == j) ? 2 * static_cast<long>(i + 1) : -1;
        CHECK(beta_tilde(gen_u(b)).value == Mu8::one());
        for (std::size_t i = 0; i < m; ++i) CHECK(beta_tilde(gen_omega_s(m, {i})).value == Mu8::one());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) CHECK(beta_tilde(gen_u_lower_ij(m, i, j, 4)).value == Mu8::one());
    }
    CHECK(beta_tilde(gen_u_lower(IntMat{{-4}})).value == Mu8(1));
    CHECK(beta_tilde(sym({{-3, 4}, {-4, 5}})).value == Mu8(5));
    CHECK_THROWS_AS(beta_tilde(sym({{1, 1}, {0, 1}})), std::domain_error);
    CHECK_THROWS_AS(beta_tilde_nonsingular(gen_u(IntMat{{2}})), std::domain_error);
}

TEST_CASE("trivialisation identity") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + t % 2;
        const auto h1 = testing::word(m, Subgroup::Theta, rng);
        const auto h2 = testing::word(m, Subgroup::Theta, rng);
        const auto b1 = beta_tilde(h1), b2 = beta_tilde(h2), b12 = beta_tilde(h1 * h2);
        CHECK(rao_cocycle(h1, h2) == b1.value.inv() * b2.value.inv() * b12.value);
        CHECK(b12.residual < kSnapTolerance);
    }
}

TEST_CASE("nonsingular and general routes agree") {
    std::mt19937_64 rng(61);
    int seen = 0;
    for (int t = 0; t < 400 && seen < 100; ++t) {
        const auto g = testing::word(1 + t % 3, Subgroup::Theta, rng);
        if (det(g.c()) == 0) continue;
        ++seen;
        CHECK(beta_tilde(g).value == beta_tilde_nonsingular(g).value);
    }
    CHECK(seen >= 50);
}

TEST_CASE("singular c-block cross-check through the trivialisation identity") {
    std::mt19937_64 rng(67);
    int seen = 0;
    for (int t = 0; t < 600 && seen < 60; ++t) {
        const std::size_t m = 2 + t % 2;
        const auto g = testing::word(m, Subgroup::Theta, rng);
        if (det(g.c()) != 0) continue;
        bool done = false;
        for (long k = 0; k < 12 && !done; ++k) {
            IntMat b(m, m);
            for (std::size_t i = 0; i < m; ++i) b(i, i) = 2 * (k + static_cast<long>(i));
            const auto h = gen_u(b) * gen_omega(m);
            const auto gh = g * h;
            if (det(gh.c()) == 0) continue;
            const Mu8 via = beta_tilde_nonsingular(gh).value * beta_tilde_nonsingular(h).value.inv() * rao_cocycle(g, h).inv();
            CHECK(beta_tilde(g).value == via);
            done = true;
        }
        seen += done;
    }
    CHECK(seen >= 20);
}

TEST_CASE("SL2 embedding consistency") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const auto g = testing::word(1, Subgroup::Theta, rng);
        for (std::size_t m = 2; m <= 3; ++m)
            for (std::size_t i = 0; i < m; ++i) CHECK(beta_tilde(gen_iota(m, {i}, g.mat())).value == beta_tilde(g).value);
    }
}

TEST_CASE("multiplier system") {
    CHECK(lambda_multiplier(IntegerSymplectic::identity(2)) == Mu8::one());
    CHECK(lambda_multiplier(gen_omega(1)) == Mu8(-1));
    CHECK(lambda_multiplier(gen_u_lower(IntMat{{-2}})) == Mu8::one());
    CHECK(lambda_bar({IntegerSymplectic::identity(1), 1}) == Mu8::one());
    CHECK(lambda_bar({IntegerSymplectic::identity(1), -1}) == Mu8::minus_one());
    CHECK(lambda_bar({gen_u_lower(IntMat{{-2}}), 1}) == Mu8::one());
    std::mt19937_64 rng(73);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + t % 2;
        const auto r1 = testing::word(m, Subgroup::Theta, rng);
        const auto r2 = testing::word(m, Subgroup::Theta, rng);
        CHECK(lambda_multiplier(r1) * lambda_multiplier(r2) == lambda_multiplier(r1 * r2) * sign_mu8(cbar_cocycle(r1, r2)));
    }
}

TEST_CASE("finite reduction") {
    const CosetTable table(2);
    const auto g = gen_iota(2, {1}, IntMat{{1, 1}, {0, 1}});
    const auto r = gen_iota(2, {1}, IntMat{{1, 0}, {-4, 1}});
    CHECK(f_shift(table, g) == Mu8::one());
    CHECK(f_shift(table, r) == Mu8(1));
    CHECK(f_shift(table, g * r) == Mu8(5));
    CHECK(modified_cocycle(table, g, r) == Mu8::minus_one());

    std::mt19937_64 rng(79);
    for (int t = 0; t < 100; ++t) {
        const auto h = testing::word(2, Subgroup::Theta, rng);
        const auto x = testing::word(2, Subgroup::Full, rng);
        CHECK(modified_cocycle(table, h, x) == Mu8::one());
        CHECK(f_shift(table, h) == beta_tilde(h).value);
    }
    for (int t = 0; t < 30; ++t) {
        const auto x = testing::word(2, Subgroup::Full, rng);
        CHECK(modified_cocycle(table, x, random_gamma48(2, 3, rng).element) == Mu8::one());
    }
}
