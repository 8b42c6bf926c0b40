#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "siegel/cosets.hpp"

using namespace siegel;
using testing::sym;

namespace {

F2Vector vec(std::vector<int> c) { return F2Vector(std::move(c)); }

}  // namespace

TEST_CASE("F2 vectors") {
    const F2Vector v = vec({1, 0, 0, 1});
    CHECK(v.genus() == 2);
    CHECK(v.x(0) == 1);
    CHECK(v.xs(1) == 1);
    CHECK(v.str() == "10|01");
    CHECK_THROWS_AS(vec({1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(vec({2, 0}), std::invalid_argument);
    CHECK(F2Vector(3).is_zero());
}

TEST_CASE("reduction mod 2") {
    CHECK(reduce_mod2(IntegerSymplectic::identity(2)) == reduce_mod2(IntMat::identity(4)));
    const F2Matrix r = reduce_mod2(sym({{2, 1}, {-1, 0}}));
    CHECK(r(0, 0) == 0);
    CHECK(r(0, 1) == 1);
    CHECK(r(1, 0) == 1);
    CHECK(r(1, 1) == 0);
    CHECK(r.is_symplectic());

    const F2Matrix last = reduce_mod2(IntMat{{2, 1, 1, 1}, {1, 2, 1, 1}, {-1, -1, 0, -1}, {-1, -1, -1, 0}});
    CHECK(last.is_symplectic());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(last(i, j) == ((i == j) + 1) % 2);
}

TEST_CASE("quadratic form Q0") {
    CHECK(q0_eval(F2Vector(2)) == 0);
    CHECK(q0_eval(vec({1, 1})) == 1);
    CHECK(q0_eval(vec({1, 0, 0, 1})) == 0);
    CHECK(q0_eval(vec({1, 1, 1, 1})) == 0);
    CHECK(f2_pairing(vec({1, 0}), vec({0, 1})) == 1);
    CHECK(f2_pairing(vec({1, 0, 0, 0}), vec({1, 0, 0, 0})) == 0);
}

TEST_CASE("isotropic enumeration") {
    const auto one = enumerate_isotropic(1);
    CHECK(std::set<F2Vector>(one.begin(), one.end()) == std::set<F2Vector>{vec({0, 0}), vec({1, 0}), vec({0, 1})});
    const std::size_t expect[] = {3, 10, 36, 136, 528};
    for (std::size_t m = 1; m <= 5; ++m) {
        const auto all = enumerate_isotropic(m);
        CHECK(all.size() == expect[m - 1]);
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& v : all) CHECK(q0_eval(v) == 0);
    }
    CHECK_THROWS_AS(enumerate_isotropic(9), std::length_error);
    CHECK(coset_count(4) == 136);
}

TEST_CASE("transvection representatives") {
    CHECK(transvection_rep(F2Vector(2)).is_identity());
    CHECK(transvection_rep(vec({0, 1})).mat() == IntMat{{1, 1}, {0, 1}});
    CHECK(transvection_rep(vec({1, 0})).mat() == IntMat{{1, 0}, {-1, 1}});
    CHECK(transvection_rep(vec({1, 1, 1, 1})).mat() == IntMat{{2, 1, 1, 1}, {1, 2, 1, 1}, {-1, -1, 0, -1}, {-1, -1, -1, 0}});
    // the anisotropic vector lifts to (2 1; −1 0)
    CHECK(transvection_rep(vec({1, 1})).mat() == IntMat{{2, 1}, {-1, 0}});
    for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& q : enumerate_isotropic(m)) CHECK(reduce_mod2(transvection_rep(q)) == transvection_f2(q));
}

TEST_CASE("refined representatives") {
    const CosetRecord zero = refine_rep(F2Vector(2));
    CHECK(zero.m.is_identity());
    CHECK(zero.m_q == std::vector<int>{0, 0});
    CHECK(zero.eps_q == std::vector<int>{0, 0});
    CHECK(zero.m_xstar_q == Mu8::one());

    const CosetRecord full = refine_rep(vec({1, 1, 1, 1}));
    CHECK(full.m.mat() == IntMat{{0, -1, -1, 0}, {-1, 0, 0, -1}, {1, 1, 1, 0}, {1, 1, 0, 1}});
    CHECK(full.m_q == std::vector<int>{-1, -1});
    CHECK(full.eps_q == std::vector<int>{-1, -1});
    CHECK(full.m_xstar_q == Mu8(-1));
    CHECK(full.s1.size() == 1);

    const CosetRecord e1 = refine_rep(vec({1, 0}));
    CHECK(e1.m.mat() == IntMat{{1, 0}, {-1, 1}});
    CHECK(e1.eps_q == std::vector<int>{1});
    CHECK(e1.m_q == std::vector<int>{0});

    const CosetRecord e1s = refine_rep(vec({0, 1}));
    CHECK(e1s.m_q == std::vector<int>{1});
    CHECK(e1s.eps_q == std::vector<int>{0});

    CHECK_THROWS_AS(refine_rep(vec({1, 1})), std::domain_error);

    for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& q : enumerate_isotropic(m)) {
            const CosetRecord r = refine_rep(q);
            CHECK(in_theta_group(r.m_prime * r.m.inverse()));
            CHECK(r.t == r.m_xstar_q);
            Mu8 prod = Mu8::one();
            for (const auto& f : r.factors) prod *= m_xstar(f);
            CHECK(prod == r.m_xstar_q);
            int parity = 0;
            for (std::size_t i = 0; i < m; ++i) parity += r.m_q[i] * r.eps_q[i];
            CHECK(parity % 2 == 0);
        }
}

TEST_CASE("coset identification") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) CHECK(coset_index_of(testing::word(2, Subgroup::Theta, rng)).is_zero());
    CHECK(coset_index_of(sym({{1, 1}, {0, 1}})) == vec({0, 1}));
    for (const auto& q : enumerate_isotropic(2)) CHECK(coset_index_of(transvection_rep(q)) == q);
}

TEST_CASE("coset representatives are distinct and complete") {
    for (std::size_t m = 1; m <= 2; ++m) {
        const CosetTable table(m);
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = 0; j < table.size(); ++j)
                CHECK(in_theta_group(table[i].m * table[j].m.inverse()) == (i == j));
    }
    const CosetTable table(2);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 1000; ++t) {
        const auto g = testing::word(2, Subgroup::Full, rng, 8);
        const std::size_t i = table.index_of(g);
        REQUIRE(in_theta_group(g * table[i].m.inverse()));
        CHECK(table.index_of(table[i].q) == i);
    }
    CHECK_THROWS_AS(table.index_of(vec({1, 0, 1, 0})), std::invalid_argument);
}
