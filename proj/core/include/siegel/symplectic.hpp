#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "siegel/matrix.hpp"

namespace siegel {

using RealMat = Eigen::MatrixXd;
using CplxMat = Eigen::MatrixXcd;

// Standard form J = (0 −1; 1 0) in m×m blocks.
IntMat standard_j(std::size_t m);

// 2m×2m integer matrix with gᵀJg = J. Group elements act on row vectors, w ↦ w·g.
class IntegerSymplectic {
public:
    IntegerSymplectic() = default;
    // Throws std::invalid_argument unless g is 2m×2m with gᵀJg = J.
    explicit IntegerSymplectic(IntMat g);
    static IntegerSymplectic identity(std::size_t m);

    std::size_t genus() const { return m_; }
    const IntMat& mat() const { return g_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

    IntMat a() const { return g_.block(0, 0, m_, m_); }
    IntMat b() const { return g_.block(0, m_, m_, m_); }
    IntMat c() const { return g_.block(m_, 0, m_, m_); }
    IntMat d() const { return g_.block(m_, m_, m_, m_); }

    IntegerSymplectic inverse() const;
    bool is_identity() const;
    RealMat to_real() const;

    friend IntegerSymplectic operator*(const IntegerSymplectic& x, const IntegerSymplectic& y);
    friend bool operator==(const IntegerSymplectic& x, const IntegerSymplectic& y) { return x.g_ == y.g_; }

private:
    struct Trusted {};
    IntegerSymplectic(IntMat g, Trusted);
    IntMat g_;
    std::size_t m_ = 0;
};

// Throws std::invalid_argument on odd dimension.
bool is_symplectic(const IntMat& g);
bool is_symplectic(const RealMat& g, double tol = 1e-10);

// Generators. Indices are 0-based.
IntegerSymplectic gen_u(const IntMat& b);        // (1 b; 0 1), b symmetric
IntegerSymplectic gen_u_lower(const IntMat& c);  // (1 0; c 1), c symmetric
IntegerSymplectic gen_h(const IntMat& a);        // (a 0; 0 a^{-T}), a unimodular
IntegerSymplectic gen_omega(std::size_t m);
IntegerSymplectic gen_omega_s(std::size_t m, const std::vector<std::size_t>& s);
IntegerSymplectic gen_u_ij(std::size_t m, std::size_t i, std::size_t j, long t);
IntegerSymplectic gen_u_lower_ij(std::size_t m, std::size_t i, std::size_t j, long t);
IntegerSymplectic gen_v_ij(std::size_t m, std::size_t i, std::size_t j, long t);
// Places a 2k×2k symplectic block on the coordinates idx (and their duals).
IntegerSymplectic gen_iota(std::size_t m, const std::vector<std::size_t>& idx, const IntMat& small);

enum class GeneratorKind { U, ULower, H, Omega, OmegaS, Uij, ULowerij, Vij, Iota };

struct GeneratorParams {
    IntMat matrix;                     // b, c, a or the embedded block
    std::vector<std::size_t> indices;  // S, (i, j) or the ι index set
    long t = 1;
};

IntegerSymplectic make_generator(GeneratorKind kind, std::size_t m, const GeneratorParams& p);

enum class Subgroup { Full, Theta, Level2, Level };

// Γ(2): g ≡ 1 mod 2. Theta: diag(abᵀ), diag(cdᵀ) even. Level: Γ(d,2d) with g = 1 + d·g′,
// g′(m+i,i) and g′(i,m+i) even.
bool in_subgroup(const IntegerSymplectic& g, Subgroup which, long d = 0);
bool in_theta_group(const IntegerSymplectic& g);
bool in_gamma2(const IntegerSymplectic& g);
bool in_gamma_d_2d(const IntegerSymplectic& g, long d);

struct Word {
    IntegerSymplectic element;
    std::vector<std::string> letters;
};

Word random_word(std::size_t m, Subgroup which, std::size_t length, std::uint64_t seed);
Word random_word(std::size_t m, Subgroup which, std::size_t length, std::mt19937_64& rng);
// Commutator x·y·x⁻¹·y⁻¹ of two random Γ(2)-words, checked against Γ(4,8).
Word random_gamma48(std::size_t m, std::size_t length, std::mt19937_64& rng);

// --- real and complex side ---

class SiegelPoint {
public:
    SiegelPoint() = default;
    // Throws std::domain_error unless z is symmetric with positive-definite imaginary part.
    explicit SiegelPoint(CplxMat z);
    SiegelPoint(const RealMat& x, const RealMat& y);
    static SiegelPoint base(std::size_t m);  // i·1ₘ

    std::size_t genus() const { return static_cast<std::size_t>(z_.rows()); }
    const CplxMat& z() const { return z_; }
    RealMat x() const { return z_.real(); }
    RealMat y() const { return z_.imag(); }
    double min_eig_y() const;
    double cond_y() const;

private:
    CplxMat z_;
};

struct MobiusResult {
    SiegelPoint point;
    CplxMat j;  // cz + d
};

// Throws std::domain_error if cz+d is numerically singular (rcond < 1e−12).
MobiusResult mobius(const RealMat& g, const SiegelPoint& z);
SiegelPoint mobius_act(const RealMat& g, const SiegelPoint& z);
CplxMat automorphy_j(const RealMat& g, const SiegelPoint& z);

struct IwasawaPair {
    RealMat p, k;
};

// g = p·k with p = (√y, x√y⁻¹; 0, √y⁻¹) built from g(i·1ₘ) = x + iy and k(i·1ₘ) = i·1ₘ.
IwasawaPair iwasawa_decompose(const RealMat& g);

// ‖(ci+d)(−ci+d)ᵀ y_gᵀ − 1‖∞ for y_g = Im g(i·1ₘ).
double unitary_identity_residual(const RealMat& g);

// z = u(X)h(A)(i·1ₘ) with random X, A; resampled until cond(Y) ≤ max_cond.
SiegelPoint random_siegel_point(std::size_t m, std::mt19937_64& rng, double max_cond = 1e4);

}  // namespace siegel
