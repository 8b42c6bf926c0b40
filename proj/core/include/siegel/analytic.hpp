#pragma once

#include <complex>

#include "siegel/symplectic.hpp"

namespace siegel {

using Complex = std::complex<double>;

// ∏ λᵢ^{−1/2} over eigenvalues, principal branch. Requires Sᵀ = S and Re S ≻ 0.
Complex det_invsqrt(const CplxMat& s);

// det^{−1/2}((z′ − z̄)/2i)·det(Im z′)^{1/4}·det(Im z)^{1/4}
Complex gamma_pair(const SiegelPoint& z1, const SiegelPoint& z2);

// γ(g z₁, g z₂)/γ(z₁, z₂)
Complex epsilon_factor(const RealMat& g, const SiegelPoint& z1, const SiegelPoint& z2);

// ε(g; z, w)·|det(cz+d)|^{1/2} for an arbitrary base point w.
Complex j_half_based(const RealMat& g, const SiegelPoint& z, const SiegelPoint& w);

constexpr double kCuspHeight = 1e6;

struct HalfFactor {
    Complex value;    // snapped J_{1/2}(g, z)
    Complex raw;      // before snapping
    int root = 0;     // value = e^{iπ·root/4}·√det(cz+d), principal root
    double residual = 0;
};

// J_{1/2}(g,z) with the base point at the cusp it·1ₘ, t = kCuspHeight, snapped to the nearest
// e^{iπk/4}·√det(cz+d). Throws PrecisionError if the raw value is not within a quarter gap.
HalfFactor j_half(const RealMat& g, const SiegelPoint& z);
Complex j_half(const IntegerSymplectic& g, const SiegelPoint& z);

// J_{1/2}(g,z)·m_{X*}(g)⁻¹, a square root of det(cz+d).
Complex sqrt_det(const IntegerSymplectic& g, const SiegelPoint& z);

// J_{1/2}(g,z)·(cz+d)
CplxMat j_three_half(const IntegerSymplectic& g, const SiegelPoint& z);

}  // namespace siegel
