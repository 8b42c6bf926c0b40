#pragma once

#include <vector>

#include "siegel/matrix.hpp"
#include "siegel/mu8.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

// ⟨(x,x*),(y,y*)⟩ = x·y* − x*·y
Rat symplectic_pairing(const std::vector<Rat>& v, const std::vector<Rat>& w);

// Maximal isotropic subspace of Q^{2m}, stored as an m×2m row basis.
class Lagrangian {
public:
    // Throws std::domain_error unless the rows have rank m and are pairwise orthogonal.
    explicit Lagrangian(RatMat basis);
    static Lagrangian vertical(std::size_t m);  // X* = span(e*₁..e*ₘ)
    // X*·g, the row space of the bottom m rows of g.
    static Lagrangian vertical_times(const IntegerSymplectic& g);

    std::size_t genus() const { return b_.rows(); }
    const RatMat& basis() const { return b_; }

private:
    RatMat b_;
};

// Signature of a symmetric rational matrix by exact congruence diagonalisation.
int rational_signature(RatMat s);
// Eigenvalue fallback for real symmetric input; |λ| ≤ tol counts as zero.
int real_signature(const RealMat& s, double tol = 1e-9);

// Signature of ⟨x₁,x₂⟩ + ⟨x₂,x₃⟩ + ⟨x₃,x₁⟩ on L₁ ⊕ L₂ ⊕ L₃.
int maslov_signature(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

// e^{iπτ/4}, τ = maslov_signature(X*, X*g₂⁻¹, X*g₁).
Mu8 rao_cocycle(const IntegerSymplectic& g1, const IntegerSymplectic& g2);

enum class PivotRule { Leftmost, Rightmost };

struct PwsFactorization {
    RatMat p1, p2;
    std::vector<std::size_t> s;
    std::size_t j = 0;
    int x_sign = 1;  // sign of det(a₁a₂)
};

// g = p₁·ω_S·p₂ with p₁, p₂ block upper triangular. Reconstruction is checked exactly.
PwsFactorization pws_decompose(const RatMat& g, PivotRule rule = PivotRule::Leftmost);
PwsFactorization pws_decompose(const IntegerSymplectic& g, PivotRule rule = PivotRule::Leftmost);

// exponent −j + (2 if det(a₁a₂) < 0)
Mu8 m_xstar(const PwsFactorization& f);
Mu8 m_xstar(const IntegerSymplectic& g);
// (det(a₁a₂), −1)_R · γ(−1, ψ^{1/2})^{−|S|}
Mu8 nu_minus_one(const PwsFactorization& f);

// m(g₁g₂)⁻¹m(g₁)m(g₂)c̃(g₁,g₂) ∈ {±1}; throws std::logic_error otherwise.
int cbar_cocycle(const IntegerSymplectic& g1, const IntegerSymplectic& g2);

// (a −b; −c d)
IntegerSymplectic conjugate_by_minus_one(const IntegerSymplectic& g);

struct CoverElement {
    IntegerSymplectic g;
    int eps = 1;

    friend bool operator==(const CoverElement& x, const CoverElement& y) { return x.eps == y.eps && x.g == y.g; }
};

CoverElement cover_identity(std::size_t m);
CoverElement cover_mul(const CoverElement& a, const CoverElement& b);
CoverElement cover_inverse(const CoverElement& a);

}  // namespace siegel
