#include "hgeo/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hgeo {

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
    auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
}

double Rng::normal() {
    // Box-Muller, cosine branch only; always consumes exactly two draws.
    double u1 = 1.0 - uniform01();  // (0, 1], safe for log
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::exponential() {
    return -std::log(1.0 - uniform01());
}

double Rng::gamma(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0)
        throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
        // boost: G(a) = G(a+1) * U^(1/a)
        double u = 1.0 - uniform01();
        return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = 1.0 - uniform01();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

double Rng::chi_square(double dof) {
    return gamma(0.5 * dof, 2.0);
}

double Rng::student_t(double dof) {
    double z = normal();
    double s = chi_square(dof);
    return z / std::sqrt(s / dof);
}

std::vector<double> Rng::dirichlet_uniform(std::size_t n) {
    std::vector<double> v(n);
    double total = 0.0;
    for (auto& x : v) {
        x = exponential();
        total += x;
    }
    for (auto& x : v) x /= total;
    return v;
}

std::size_t Rng::weighted_index(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("weighted_index: negative weight");
        total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("weighted_index: total weight must be positive");
    double target = uniform01() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0.0) last_positive = i;
        acc += weights[i];
        if (target < acc && weights[i] > 0.0) return i;
    }
    return last_positive;  // accumulated rounding fell short of total
}

} // namespace hgeo
