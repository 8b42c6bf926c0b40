#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "siegel/gauss.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

TEST_CASE("monomial matrices") {
    CHECK_THROWS_AS(MonomialMatrix({0, 0}, {Mu8::one(), Mu8::one()}), std::invalid_argument);
    CHECK_THROWS_AS(MonomialMatrix({0, 1}, {Mu8::one()}), std::invalid_argument);
    const MonomialMatrix a({1, 2, 0}, {Mu8(1), Mu8(2), Mu8(3)});
    const MonomialMatrix b({2, 0, 1}, {Mu8(4), Mu8(5), Mu8(6)});
    const MonomialMatrix ab = a * b;
    // (ab)_{ik} = a_{i,π(i)}·b_{π(i),k}
    CHECK(ab.column(0) == 0);
    CHECK(ab.coeff(0) == Mu8(1) * Mu8(5));
    CHECK(a * MonomialMatrix::identity(3) == a);
    Mu8 v;
    CHECK(a.entry(2, 0, &v));
    CHECK(v == Mu8(3));
    CHECK_FALSE(a.entry(2, 1, nullptr));
    const std::vector<Complex> x{1.0, 2.0, 3.0};
    const auto y = a.apply_right(x);
    CHECK(std::abs(y[1] - Mu8(1).value()) < 1e-15);
    CHECK(std::abs(y[0] - 3.0 * Mu8(3).value()) < 1e-15);
}

TEST_CASE("induced representation on central and trivial elements") {
    for (std::size_t m = 1; m <= 2; ++m) {
        const CosetTable table(m);
        const std::size_t n = table.size();
        CHECK(induced_rep_matrix(table, cover_identity(m)) == MonomialMatrix::identity(n));
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        const MonomialMatrix minus = induced_rep_matrix(table, {IntegerSymplectic::identity(m), -1});
        CHECK(minus == MonomialMatrix(perm, std::vector<Mu8>(n, Mu8::minus_one())));
    }
}

TEST_CASE("induced representation restricted to the theta group") {
    const CosetTable table(2);
    std::mt19937_64 rng(137);
    for (int t = 0; t < 100; ++t) {
        const auto r = testing::word(2, Subgroup::Theta, rng);
        const MonomialMatrix g = induced_rep_matrix(table, {r, 1});
        Mu8 v;
        REQUIRE(g.entry(0, 0, &v));
        CHECK(v == lambda_multiplier(r).inv());
    }
}

TEST_CASE("induced representation is a homomorphism") {
    const CosetTable table(2);
    std::mt19937_64 rng(139);
    for (int t = 0; t < 100; ++t) {
        const CoverElement a{testing::word(2, Subgroup::Full, rng), (rng() & 1) ? 1 : -1};
        const CoverElement b{testing::word(2, Subgroup::Full, rng), (rng() & 1) ? 1 : -1};
        CHECK(induced_rep_matrix(table, cover_mul(a, b)) == induced_rep_matrix(table, a) * induced_rep_matrix(table, b));
    }
}

TEST_CASE("scalar law fixed points") {
    std::mt19937_64 rng(149);
    for (std::size_t m = 1; m <= 2; ++m) {
        const SiegelPoint z = random_siegel_point(m, rng);
        const IntMat two = IntMat::identity(m) + IntMat::identity(m);
        const auto u2 = gen_u(two);
        const Complex shifted = theta_series(mobius_act(u2.to_real(), z), Weight::Half).scalar;
        CHECK(std::abs(shifted - theta_series(z, Weight::Half).scalar) < 1e-12);
        CHECK(lambda_multiplier(u2) == Mu8::one());
        CHECK(std::abs(sqrt_det(u2, z) - 1.0) < 1e-12);
    }
    const SiegelPoint i1 = testing::point1({0, 1});
    CHECK(std::abs(lambda_multiplier(gen_omega(1)).value() * sqrt_det(gen_omega(1), i1) - 1.0) < 1e-12);
}

TEST_CASE("verification reports") {
    VerifyOptions o;
    o.m = 2;
    o.trials = 20;
    const auto a = verify_scalar_law(o);
    CHECK(a.pass);
    CHECK(a.max_rel_error < 1e-8);
    CHECK(a.theorem == "scalar");
    const auto b = verify_scalar_law(o);
    CHECK(a.max_rel_error == b.max_rel_error);
    CHECK(a.worst_case == b.worst_case);

    o.m = 1;
    const auto v = verify_vector_law(o);
    CHECK(v.pass);
    CHECK(v.max_rel_error < 1e-8);

    o.m = 4;
    CHECK_THROWS_AS(verify_scalar_law(o), std::invalid_argument);
    o.m = 3;
    CHECK_THROWS_AS(verify_vector_law(o), std::invalid_argument);

    o.m = 1;
    o.tol = 1e-300;
    CHECK_FALSE(verify_scalar_law(o).pass);
}

TEST_CASE("trial streams are independent of ordering") {
    auto a = trial_rng(5, 3);
    auto b = trial_rng(5, 3);
    auto c = trial_rng(5, 4);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
}
