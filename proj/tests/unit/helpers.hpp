#pragma once

#include <complex>
#include <random>

#include "siegel/symplectic.hpp"

namespace testing {

inline siegel::SiegelPoint point1(std::complex<double> z) {
    siegel::CplxMat m(1, 1);
    m(0, 0) = z;
    return siegel::SiegelPoint(m);
}

inline siegel::IntegerSymplectic sym(std::initializer_list<std::initializer_list<long>> rows) {
    return siegel::IntegerSymplectic(siegel::IntMat(rows));
}

inline siegel::IntegerSymplectic word(std::size_t m, siegel::Subgroup which, std::mt19937_64& rng, std::size_t max_len = 6) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    return siegel::random_word(m, which, len, rng).element;
}

}  // namespace testing
