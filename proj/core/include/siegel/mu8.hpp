#pragma once

#include <complex>
#include <numbers>
#include <string>

namespace siegel {

// e^{iπk/4}, k mod 8.
class Mu8 {
public:
    constexpr Mu8() = default;
    constexpr explicit Mu8(long k) : k_(static_cast<int>(((k % 8) + 8) % 8)) {}

    static constexpr Mu8 one() { return Mu8(0); }
    static constexpr Mu8 minus_one() { return Mu8(4); }

    constexpr int exponent() const { return k_; }
    constexpr bool is_sign() const { return k_ == 0 || k_ == 4; }
    constexpr int sign() const { return k_ == 0 ? 1 : -1; }

    constexpr Mu8 inv() const { return Mu8(-k_); }
    constexpr Mu8 pow(long e) const { return Mu8(static_cast<long>(k_) * e); }

    std::complex<double> value() const {
        // exact table avoids drift for the axis-aligned roots
        static const double h = std::numbers::sqrt2 / 2;
        static const std::complex<double> tab[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
        return tab[k_];
    }

    friend constexpr Mu8 operator*(Mu8 a, Mu8 b) { return Mu8(a.k_ + b.k_); }
    friend constexpr Mu8 operator/(Mu8 a, Mu8 b) { return Mu8(a.k_ - b.k_); }
    Mu8& operator*=(Mu8 b) { return *this = *this * b; }
    friend constexpr bool operator==(Mu8 a, Mu8 b) { return a.k_ == b.k_; }

    std::string str() const { return "e^(i*pi*" + std::to_string(k_) + "/4)"; }

private:
    int k_ = 0;
};

constexpr Mu8 sign_mu8(int s) { return s < 0 ? Mu8::minus_one() : Mu8::one(); }

// Nearest eighth root of unity to z on the unit circle, with the distance.
struct Mu8Snap {
    Mu8 root;
    double residual = 0;
};
Mu8Snap snap_mu8(std::complex<double> z);

}  // namespace siegel
