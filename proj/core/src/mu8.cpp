#include "siegel/mu8.hpp"

#include <cmath>

namespace siegel {

Mu8Snap snap_mu8(std::complex<double> z) {
    const double a = std::arg(z);
    const long k = std::lround(a / (std::numbers::pi / 4));
    Mu8Snap s{Mu8(k), 0};
    s.residual = std::abs(z - s.root.value());
    return s;
}

}  // namespace siegel
