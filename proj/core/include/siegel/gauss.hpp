#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "siegel/cocycle.hpp"
#include "siegel/cosets.hpp"
#include "siegel/matrix.hpp"
#include "siegel/mu8.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double kSnapTolerance = 1e-9;
constexpr std::size_t kMaxResidueClasses = 1'000'000;

// One representative per class of Zᵐ/cᵀZᵐ.
struct ResidueSystem {
    IntMat c;
    std::vector<std::vector<Int>> reps;
};

// Throws std::domain_error for singular c, std::length_error beyond kMaxResidueClasses.
ResidueSystem residues_mod_cT(const IntMat& c);

// Σ_{l mod cᵀ} e^{iπ·l c⁻¹ d lᵀ}, phases reduced mod 2 exactly.
std::complex<double> symplectic_gauss_sum(const IntMat& d, const IntMat& c);

struct SnappedRoot {
    Mu8 value;
    std::complex<double> raw;
    double residual = 0;
};

// Throws PrecisionError when the residual reaches kSnapTolerance.
SnappedRoot snap_root(std::complex<double> z);

// Requires g ∈ Γ(1,2) (std::domain_error otherwise). Works for singular c.
SnappedRoot beta_tilde(const IntegerSymplectic& g);
// |det c|^{−1/2}·conj(G(d,c)), nonsingular c only.
SnappedRoot beta_tilde_nonsingular(const IntegerSymplectic& g);

// m_{X*}(r)·β̃(r)⁻¹
Mu8 lambda_multiplier(const IntegerSymplectic& r);
// λ(r)·ε
Mu8 lambda_bar(const CoverElement& rbar);

// g = r·M_q with r ∈ Γ(1,2); f(g) = β̃(r)·c̃(r, M_q).
Mu8 f_shift(const CosetTable& table, const IntegerSymplectic& g);
// c̃(g₁,g₂)·f(g₁)·f(g₂)·f(g₁g₂)⁻¹
Mu8 modified_cocycle(const CosetTable& table, const IntegerSymplectic& g1, const IntegerSymplectic& g2);

}  // namespace siegel
