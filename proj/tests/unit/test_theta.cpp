#include "doctest.h"

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "siegel/theta.hpp"

using namespace siegel;
using testing::point1;

namespace {

Complex brute_force(const SiegelPoint& z, int r) {
    const std::size_t m = z.genus();
    Complex s = 0;
    std::vector<int> n(m, -r);
    for (;;) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(m));
        for (std::size_t i = 0; i < m; ++i) v(static_cast<Eigen::Index>(i)) = n[i];
        s += std::exp(Complex(0, std::numbers::pi) * Complex(v.dot(z.x() * v), v.dot(z.y() * v)));
        std::size_t i = 0;
        for (; i < m; ++i) {
            if (++n[i] <= r) break;
            n[i] = -r;
        }
        if (i == m) return s;
    }
}

}  // namespace

TEST_CASE("scalar theta constants") {
    const ThetaValue t = theta_series(point1({0, 1}), Weight::Half);
    CHECK(std::abs(t.scalar - 1.0864348112) < 1e-9);
    CHECK(t.tail_bound < 1e-12);

    CplxMat d = CplxMat::Zero(2, 2);
    d(0, 0) = d(1, 1) = Complex(0, 1);
    CHECK(std::abs(theta_series(SiegelPoint(d), Weight::Half).scalar - t.scalar * t.scalar) < 1e-12);

    // θ(−1/z) = √(z/i)·θ(z)
    const Complex z(0.3, 0.8);
    const Complex lhs = theta_series(point1(-1.0 / z), Weight::Half).scalar;
    const Complex rhs = std::sqrt(z / Complex(0, 1)) * theta_series(point1(z), Weight::Half).scalar;
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("weight 3/2 series vanishes") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 20; ++t) {
        const ThetaValue v = theta_series(random_siegel_point(1 + t % 3, rng), Weight::ThreeHalf);
        CHECK(v.vec.norm() < 1e-12 * std::max(1.0, v.mass));
    }
}

TEST_CASE("tail certification") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 10; ++t) {
        const SiegelPoint z = random_siegel_point(1 + t % 2, rng);
        const ThetaValue v = theta_series(z, Weight::Half);
        CHECK(std::abs(v.scalar - brute_force(z, 2 * v.radius)) < 1e-12);
    }
    CHECK_THROWS_AS(theta_series(point1({0, 1e-4}), Weight::Half), CapacityError);
    try {
        theta_series(point1({0, 1e-4}), Weight::Half);
    } catch (const CapacityError& e) {
        CHECK(e.needed_radius > 64);
    }
    ThetaParams bad;
    bad.tail_tol = 0;
    CHECK_THROWS_AS(truncation_radius(point1({0, 1}), bad), std::invalid_argument);
}

TEST_CASE("holomorphy proxy") {
    std::mt19937_64 rng(127);
    const double h = 1e-4;
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 1 + t % 2;
        const SiegelPoint z = random_siegel_point(m, rng);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                CplxMat e = CplxMat::Zero(m, m);
                e(i, j) = e(j, i) = 1;
                auto f = [&](Complex step) { return theta_series(SiegelPoint(CplxMat(z.z() + step * e)), Weight::Half).scalar; };
                const Complex dx = (f(h) - f(-h)) / (2 * h);
                const Complex dy = (f(Complex(0, h)) - f(Complex(0, -h))) / (2 * h);
                CHECK(std::abs(dy - Complex(0, 1) * dx) < 1e-6);
            }
    }
}

TEST_CASE("coset components") {
    const CosetTable t1(1);
    const SiegelPoint i1 = point1({0, 1});
    const auto zero = theta_component(t1[t1.index_of(F2Vector(1))], 1, i1, Weight::Half);
    CHECK(zero.prefactor == Mu8::one());
    CHECK(std::abs(zero.value.scalar - theta_series(i1, Weight::Half).scalar) < 1e-15);

    const auto es = theta_component(t1[t1.index_of(F2Vector(std::vector<int>{0, 1}))], 1, i1, Weight::Half);
    // 1 − 2e^{−π} + 2e^{−4π} − …
    CHECK(std::abs(es.value.scalar - 0.91357913815611683) < 1e-12);

    const auto e = theta_component(t1[t1.index_of(F2Vector(std::vector<int>{1, 0}))], 1, i1, Weight::Half);
    double shifted = 0;
    for (int n = -20; n <= 20; ++n) shifted += std::exp(-std::numbers::pi * (n + 0.5) * (n + 0.5));
    CHECK(std::abs(e.value.scalar - e.prefactor.value() * shifted) < 1e-14);

    const auto flipped = theta_component(t1[1], -1, i1, Weight::Half);
    CHECK(std::abs(flipped.value.scalar + theta_component(t1[1], 1, i1, Weight::Half).value.scalar) < 1e-15);
    CHECK_THROWS_AS(theta_component(t1[1], 2, i1, Weight::Half), std::invalid_argument);

    std::mt19937_64 rng(131);
    for (std::size_t m = 1; m <= 2; ++m) {
        const CosetTable table(m);
        const SiegelPoint z = random_siegel_point(m, rng);
        const auto all = big_theta(table, z, Weight::Half);
        CHECK(all.size() == (m == 1 ? 3u : 10u));
        CHECK(std::abs(all[0].value.scalar - theta_series(z, Weight::Half).scalar) < 1e-15);
        for (const auto& c : all) CHECK(std::abs(std::abs(c.prefactor.value()) - 1.0) < 1e-15);
    }
    CHECK_THROWS_AS(big_theta(CosetTable(2), i1, Weight::Half), std::invalid_argument);
}
