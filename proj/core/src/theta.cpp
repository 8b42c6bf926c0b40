#include "siegel/theta.hpp"

#include <cmath>
#include <numbers>

namespace siegel {

namespace {

double tail_bound_at(int r, std::size_t m, double lmin) {
    const double md = static_cast<double>(m);
    double sum = 0;
    for (int k = r + 1; k < r + 4000; ++k) {
        const double shells = std::pow(2.0 * k + 1, md) - std::pow(2.0 * k - 1, md);
        const double t = shells * std::sqrt(md) * (k + 0.5) * std::exp(-std::numbers::pi * lmin * (k - 0.5) * (k - 0.5));
        sum += t;
        if (t < 1e-300 || t < 1e-20 * sum) break;
    }
    return sum;
}

}  // namespace

int truncation_radius(const SiegelPoint& z, const ThetaParams& params, double* tail) {
    if (!(params.tail_tol > 0 && params.tail_tol < 1)) throw std::invalid_argument("tail_tol must lie in (0,1)");
    const double lmin = z.min_eig_y();
    int r = static_cast<int>(std::ceil(std::sqrt(std::log(1 / params.tail_tol) / (std::numbers::pi * lmin)))) + 2;
    double t = tail_bound_at(r, z.genus(), lmin);
    while (t >= params.tail_tol && r <= params.max_radius) t = tail_bound_at(++r, z.genus(), lmin);
    if (r > params.max_radius)
        throw CapacityError("theta truncation needs radius " + std::to_string(r) + " > max_radius " + std::to_string(params.max_radius), r);
    if (tail) *tail = t;
    return r;
}

ThetaValue theta_shifted(const SiegelPoint& z, const std::vector<int>& half_shift, const std::vector<int>& sign,
                         Weight weight, const ThetaParams& params) {
    const std::size_t m = z.genus();
    if (half_shift.size() != m || sign.size() != m) throw std::invalid_argument("characteristic length does not match genus");
    ThetaValue out;
    out.radius = truncation_radius(z, params, &out.tail_bound);
    const int r = out.radius;
    const RealMat x = z.x(), y = z.y();
    const auto n_ = static_cast<Eigen::Index>(m);
    out.scalar = 0;
    out.vec = Eigen::VectorXcd::Zero(n_);
    std::vector<int> n(m, -r);
    Eigen::VectorXd v(n_);
    for (;;) {
        int parity = 0;
        for (std::size_t i = 0; i < m; ++i) {
            v(static_cast<Eigen::Index>(i)) = n[i] + 0.5 * half_shift[i];
            parity += sign[i] * n[i];
        }
        const double re = -std::numbers::pi * v.dot(y * v);
        const double im = std::numbers::pi * v.dot(x * v);
        Complex term = std::exp(Complex(re, im));
        if (parity & 1) term = -term;
        if (weight == Weight::Half) {
            out.scalar += term;
            out.mass += std::abs(term);
        } else {
            out.vec += term * v.cast<Complex>();
            out.mass += std::abs(term) * v.norm();
        }
        std::size_t i = 0;
        for (; i < m; ++i) {
            if (++n[i] <= r) break;
            n[i] = -r;
        }
        if (i == m) break;
    }
    return out;
}

ThetaValue theta_series(const SiegelPoint& z, Weight weight, const ThetaParams& params) {
    const std::vector<int> zero(z.genus(), 0);
    return theta_shifted(z, zero, zero, weight, params);
}

ThetaComponentValue theta_component(const CosetRecord& rec, int lift_sign, const SiegelPoint& z, Weight weight,
                                    const ThetaParams& params) {
    if (lift_sign != 1 && lift_sign != -1) throw std::invalid_argument("lift sign must be ±1");
    ThetaComponentValue c;
    c.q = rec.q;
    c.prefactor = rec.m_xstar_q.inv() * rec.t * sign_mu8(lift_sign);
    c.value = theta_shifted(z, rec.eps_q, rec.m_q, weight, params);
    const Complex p = c.prefactor.value();
    c.value.scalar *= p;
    c.value.vec *= p;
    return c;
}

std::vector<ThetaComponentValue> big_theta(const CosetTable& table, const SiegelPoint& z, Weight weight,
                                           const ThetaParams& params) {
    if (table.genus() != z.genus()) throw std::invalid_argument("genus mismatch");
    std::vector<ThetaComponentValue> out;
    out.reserve(table.size());
    for (const auto& rec : table.records()) out.push_back(theta_component(rec, 1, z, weight, params));
    return out;
}

}  // namespace siegel
