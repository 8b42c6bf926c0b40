#include "siegel/analytic.hpp"

#include <cmath>
#include <numbers>

#include "siegel/cocycle.hpp"
#include "siegel/gauss.hpp"

namespace siegel {

namespace {

const Complex kI(0, 1);

double det_real(const RealMat& y) { return y.determinant(); }

}  // namespace

Complex det_invsqrt(const CplxMat& s) {
    if (s.rows() != s.cols()) throw std::invalid_argument("det_invsqrt needs a square matrix");
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, s.cwiseAbs().maxCoeff()))
        throw std::domain_error("det_invsqrt needs a symmetric matrix");
    const RealMat re = s.real();
    Eigen::LLT<RealMat> llt((re + re.transpose()) / 2);
    if (llt.info() != Eigen::Success) throw std::domain_error("real part is not positive definite");
    Eigen::ComplexEigenSolver<CplxMat> es(s, false);
    Complex p = 1;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) p /= std::sqrt(es.eigenvalues()(i));
    return p;
}

Complex gamma_pair(const SiegelPoint& z1, const SiegelPoint& z2) {
    const CplxMat s = (z1.z() - z2.z().conjugate()) / (2.0 * kI);
    return det_invsqrt(s) * std::pow(det_real(z1.y()), 0.25) * std::pow(det_real(z2.y()), 0.25);
}

Complex epsilon_factor(const RealMat& g, const SiegelPoint& z1, const SiegelPoint& z2) {
    return gamma_pair(mobius_act(g, z1), mobius_act(g, z2)) / gamma_pair(z1, z2);
}

Complex j_half_based(const RealMat& g, const SiegelPoint& z, const SiegelPoint& w) {
    return epsilon_factor(g, z, w) * std::sqrt(std::abs(automorphy_j(g, z).determinant()));
}

namespace {

// ε(g; z, it)·|det(cz+d)|^{1/2} in closed form, using
// gz − conj(gw) = (cw̄+d)^{−T}(z − w̄)(cz+d)^{−1}.
Complex j_half_cusp(const RealMat& g, const SiegelPoint& z, double t) {
    const Eigen::Index m = static_cast<Eigen::Index>(z.genus());
    const CplxMat c = g.bottomLeftCorner(m, m).cast<Complex>();
    const CplxMat d = g.bottomRightCorner(m, m).cast<Complex>();
    const CplxMat id = CplxMat::Identity(m, m);
    const CplxMat jz = c * z.z() + d;
    const CplxMat jwbar = -kI * t * c + d;
    const CplxMat jwt = c * (kI * t) + d;
    const CplxMat diff = z.z() + kI * t * id;
    Eigen::PartialPivLU<CplxMat> lz(jz), lw(jwbar.transpose());
    if (lz.rcond() < 1e-12 || lw.rcond() < 1e-12) throw std::domain_error("automorphy factor is numerically singular");
    CplxMat s1 = lw.solve(diff) * lz.inverse() / (2.0 * kI);
    s1 = ((s1 + s1.transpose()) / 2.0).eval();
    const Complex num = det_invsqrt(s1);
    const Complex den = det_invsqrt(diff / (2.0 * kI));
    return num / den / std::sqrt(std::abs(jwt.determinant()));
}

}  // namespace

HalfFactor j_half(const RealMat& g, const SiegelPoint& z) {
    HalfFactor h;
    h.raw = j_half_cusp(g, z, kCuspHeight);
    const Complex root = std::sqrt(automorphy_j(g, z).determinant());
    double best = INFINITY;
    for (int k = 0; k < 8; ++k) {
        const Complex cand = std::polar(1.0, std::numbers::pi * k / 4) * root;
        const double e = std::abs(h.raw - cand);
        if (e < best) {
            best = e;
            h.value = cand;
            h.root = k;
        }
    }
    h.residual = best;
    const double gap = 2 * std::sin(std::numbers::pi / 8) * std::abs(root);
    if (!(best < gap / 4)) throw PrecisionError("J_{1/2} does not resolve to a branch of the square root");
    return h;
}

Complex j_half(const IntegerSymplectic& g, const SiegelPoint& z) { return j_half(g.to_real(), z).value; }

Complex sqrt_det(const IntegerSymplectic& g, const SiegelPoint& z) {
    return j_half(g, z) * m_xstar(g).inv().value();
}

CplxMat j_three_half(const IntegerSymplectic& g, const SiegelPoint& z) {
    return j_half(g, z) * automorphy_j(g.to_real(), z);
}

}  // namespace siegel
