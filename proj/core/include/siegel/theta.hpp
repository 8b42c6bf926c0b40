#pragma once

#include <stdexcept>
#include <vector>

#include "siegel/analytic.hpp"
#include "siegel/cosets.hpp"

namespace siegel {

class CapacityError : public std::length_error {
public:
    CapacityError(const std::string& what, int needed) : std::length_error(what), needed_radius(needed) {}
    int needed_radius;
};

enum class Weight { Half, ThreeHalf };

struct ThetaParams {
    double tail_tol = 1e-12;
    int max_radius = 64;
};

struct ThetaValue {
    Complex scalar;            // weight ½
    Eigen::VectorXcd vec;      // weight 3/2
    double mass = 0;           // Σ|term|, the scale of rounding error
    double tail_bound = 0;     // bound on the omitted terms
    int radius = 0;
};

// Smallest R ≥ ⌈√(ln(1/tol)/(π λ_min))⌉ + 2 whose tail bound is below tail_tol.
// Throws CapacityError past max_radius.
int truncation_radius(const SiegelPoint& z, const ThetaParams& params, double* tail = nullptr);

// Σ_n (−1)^{sign·n} e^{iπ(n+shift/2) z (n+shift/2)ᵀ}, times (n+shift/2)ᵀ for weight 3/2.
ThetaValue theta_shifted(const SiegelPoint& z, const std::vector<int>& half_shift, const std::vector<int>& sign,
                         Weight weight, const ThetaParams& params = {});
ThetaValue theta_series(const SiegelPoint& z, Weight weight, const ThetaParams& params = {});

struct ThetaComponentValue {
    F2Vector q;
    ThetaValue value;  // prefactor applied
    Mu8 prefactor;     // m_{X*}(q)⁻¹·t_{M_q}, lift sign included
};

ThetaComponentValue theta_component(const CosetRecord& rec, int lift_sign, const SiegelPoint& z, Weight weight,
                                    const ThetaParams& params = {});

// One component per coset, in table order.
std::vector<ThetaComponentValue> big_theta(const CosetTable& table, const SiegelPoint& z, Weight weight,
                                           const ThetaParams& params = {});

}  // namespace siegel
