#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "siegel/cocycle.hpp"
#include "siegel/mu8.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

// (x₁..xₘ, x*₁..x*ₘ) over F₂.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t m) : m_(m), v_(2 * m, 0) {}
    // Throws std::invalid_argument on odd length or entries outside {0,1}.
    explicit F2Vector(std::vector<int> coords);

    std::size_t genus() const { return m_; }
    int operator[](std::size_t k) const { return v_[k]; }
    void set(std::size_t k, int bit) { v_[k] = static_cast<std::uint8_t>(bit & 1); }
    int x(std::size_t i) const { return v_[i]; }
    int xs(std::size_t i) const { return v_[m_ + i]; }
    bool is_zero() const;
    std::vector<int> coords() const { return {v_.begin(), v_.end()}; }
    std::string str() const;

    friend bool operator==(const F2Vector& a, const F2Vector& b) { return a.v_ == b.v_; }
    friend bool operator<(const F2Vector& a, const F2Vector& b) { return a.v_ < b.v_; }

private:
    std::size_t m_ = 0;
    std::vector<std::uint8_t> v_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    explicit F2Matrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    std::size_t size() const { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, int bit) { a_[i * n_ + j] = static_cast<std::uint8_t>(bit & 1); }
    F2Vector apply(const F2Vector& v) const;  // v·M
    bool is_symplectic() const;

    friend F2Matrix operator*(const F2Matrix& x, const F2Matrix& y);
    friend bool operator==(const F2Matrix& x, const F2Matrix& y) { return x.a_ == y.a_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> a_;
};

F2Matrix reduce_mod2(const IntegerSymplectic& g);
F2Matrix reduce_mod2(const IntMat& g);

int q0_eval(const F2Vector& v);
int f2_pairing(const F2Vector& v, const F2Vector& w);

// All v with Q₀(v) = 0 in lexicographic order. Throws std::length_error for m > 8.
std::vector<F2Vector> enumerate_isotropic(std::size_t m);

// 1 + col(x*ᵀ, −xᵀ)·row(x, x*)
IntegerSymplectic transvection_rep(const F2Vector& q);
// v ↦ v + ⟨v,q⟩q as a matrix acting on row vectors
F2Matrix transvection_f2(const F2Vector& q);

struct CosetRecord {
    F2Vector q;
    IntegerSymplectic m_prime;
    IntegerSymplectic m;
    std::vector<std::size_t> s0;
    std::vector<std::pair<std::size_t, std::size_t>> s1;
    std::vector<int> m_q;
    std::vector<int> eps_q;
    Mu8 m_xstar_q;
    std::vector<IntegerSymplectic> factors;
    CoverElement lift;  // product of (factor, +1) in the double cover
    Mu8 t;              // m_{X*}(M)·ε of the lift
};

// Throws std::domain_error when Q₀(q) = 1.
CosetRecord refine_rep(const F2Vector& q);

// q with Q₀(v·ḡ⁻¹) = Q₀(v) + ⟨v,q⟩ for all v; checks g·M_q⁻¹ ∈ Γ(1,2).
F2Vector coset_index_of(const IntegerSymplectic& g);

class CosetTable {
public:
    explicit CosetTable(std::size_t m);

    std::size_t genus() const { return m_; }
    std::size_t size() const { return recs_.size(); }
    const CosetRecord& operator[](std::size_t i) const { return recs_[i]; }
    const std::vector<CosetRecord>& records() const { return recs_; }

    std::size_t index_of(const F2Vector& q) const;
    std::size_t index_of(const IntegerSymplectic& g) const;

private:
    std::size_t m_;
    std::vector<CosetRecord> recs_;
    std::map<F2Vector, std::size_t> index_;
};

// (2^m + 1)·2^{m−1}
std::uint64_t coset_count(std::size_t m);

}  // namespace siegel
