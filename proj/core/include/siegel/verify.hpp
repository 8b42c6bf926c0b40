#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "siegel/cocycle.hpp"
#include "siegel/cosets.hpp"
#include "siegel/mu8.hpp"
#include "siegel/theta.hpp"

namespace siegel {

// Row i has its single nonzero entry coeffs[i] in column perm[i].
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(std::vector<std::size_t> perm, std::vector<Mu8> coeffs);
    static MonomialMatrix identity(std::size_t n);

    std::size_t size() const { return perm_.size(); }
    std::size_t column(std::size_t row) const { return perm_[row]; }
    Mu8 coeff(std::size_t row) const { return coeffs_[row]; }
    // Entry (i, j) when nonzero.
    bool entry(std::size_t i, std::size_t j, Mu8* value) const;

    // (v·M)_j = Σᵢ vᵢ Mᵢⱼ
    std::vector<Complex> apply_right(const std::vector<Complex>& v) const;
    std::vector<Eigen::VectorXcd> apply_right(const std::vector<Eigen::VectorXcd>& v) const;

    friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
    friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
        return a.perm_ == b.perm_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<std::size_t> perm_;
    std::vector<Mu8> coeffs_;
};

// Entry (i, j) = λ̄(s̄)⁻¹ where M̄_{q_i}·r̄ = s̄·M̄_{q_j}.
MonomialMatrix induced_rep_matrix(const CosetTable& table, const CoverElement& rbar);

struct VerificationReport {
    std::string theorem;  // "scalar" or "vector"
    std::size_t m = 0;
    std::size_t trials = 0;
    double tolerance = 0;
    double max_abs_error = 0;
    double max_rel_error = 0;
    double max_rel_error_half = 0;
    double max_rel_error_three_half = 0;
    std::string worst_case;
    double seconds = 0;
    bool pass = false;
};

struct VerifyOptions {
    std::size_t m = 1;
    std::size_t trials = 100;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    std::size_t max_word_length = 8;
    ThetaParams theta;
};

// Independent stream for each trial.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// θ(rz) = λ(r)√det(cz+d)θ(z) and its weight-3/2 companion over random r ∈ Γ(1,2).
VerificationReport verify_scalar_law(const VerifyOptions& opt);

// Θ(r̄z) = ε√det(cz+d)Θ(z)γ̄(r̄⁻¹) for both weights over random r̄ in the double cover.
VerificationReport verify_vector_law(const VerifyOptions& opt);

}  // namespace siegel
