#include "hosm/homogeneous.hpp"

#include <cmath>
#include <stdexcept>

namespace hosm {

namespace {

constexpr double kZeroFloor = 1e-300;

void check_prefix(std::span<const double> z, const ChainParams& params) {
    if (z.empty() || z.size() > params.p.size()) {
        throw std::invalid_argument("prefix length must lie in [1, r]");
    }
}

}  // namespace

double signed_power(double x, double a) {
    if (!(a >= 0.0)) {
        throw std::invalid_argument("signed_power: exponent must be >= 0");
    }
    const double ax = std::fabs(x);
    if (ax < kZeroFloor) {
        return 0.0;
    }
    if (a == 0.0) {
        return sign_of(x);
    }
    // exp(a ln|x|) keeps negative bases with fractional exponents NaN-free.
    return std::exp(a * std::log(ax)) * sign_of(x);
}

StateVector dilate(std::span<const double> z, double eps, const ChainParams& params) {
    check_prefix(z, params);
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("dilate: eps must be positive and finite");
    }
    StateVector out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = std::pow(eps, params.p[i]) * z[i];
    }
    return out;
}

double hom_norm(std::span<const double> z, const ChainParams& params) {
    check_prefix(z, params);
    double sum = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double ax = std::fabs(z[i]);
        if (ax >= kZeroFloor) {
            sum += std::exp(params.c / params.p[i] * std::log(ax));
        }
    }
    if (sum <= 0.0) {
        return 0.0;
    }
    return std::exp(std::log(sum) / params.c);
}

StateVector project_to_sphere(std::span<const double> z, const ChainParams& params) {
    double gamma = hom_norm(z, params);
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("project_to_sphere: cannot project the zero vector");
    }
    StateVector out = dilate(z, 1.0 / gamma, params);
    // One corrective rescale squeezes out the floating-point residual of the
    // exact identity Gamma(dilate(z, 1/Gamma)) = 1.
    for (int pass = 0; pass < 3; ++pass) {
        gamma = hom_norm(out, params);
        if (std::fabs(gamma - 1.0) <= 1e-13) {
            break;
        }
        out = dilate(out, 1.0 / gamma, params);
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

QuasiRandom::QuasiRandom(int dim, std::uint64_t seed) {
    // Generalized golden ratio: unique positive root of x^{dim+1} = x + 1.
    double phi = 1.5;
    for (int it = 0; it < 64; ++it) {
        const double f = std::pow(phi, dim + 1) - phi - 1.0;
        const double df = (dim + 1) * std::pow(phi, dim) - 1.0;
        phi -= f / df;
    }
    alpha_.resize(static_cast<std::size_t>(dim));
    state_.resize(static_cast<std::size_t>(dim));
    std::uint64_t s = seed;
    for (int j = 0; j < dim; ++j) {
        alpha_[static_cast<std::size_t>(j)] = std::pow(1.0 / phi, j + 1);
        const double offset =
            static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
        state_[static_cast<std::size_t>(j)] = offset;
    }
}

std::vector<double> QuasiRandom::next() {
    std::vector<double> u(state_.size());
    for (std::size_t j = 0; j < state_.size(); ++j) {
        state_[j] += alpha_[j];
        state_[j] -= std::floor(state_[j]);
        u[j] = state_[j];
    }
    return u;
}

std::vector<StateVector> sphere_sample(int i, int n, const ChainParams& params,
                                       std::uint64_t seed) {
    if (i < 1 || i > params.r) {
        throw std::invalid_argument("sphere_sample: prefix index out of range");
    }
    if (n < 1) {
        throw std::invalid_argument("sphere_sample: need n >= 1");
    }
    std::vector<StateVector> points;
    points.reserve(static_cast<std::size_t>(n));
    QuasiRandom qr(i, seed);
    const unsigned orthants = 1u << static_cast<unsigned>(i);
    for (int m = 0; m < n; ++m) {
        std::vector<double> u = qr.next();
        const unsigned pattern = static_cast<unsigned>(m) % orthants;
        StateVector z(static_cast<std::size_t>(i));
        double biggest = 0.0;
        for (int j = 0; j < i; ++j) {
            const double mag = u[static_cast<std::size_t>(j)];
            const double sgn = (pattern >> static_cast<unsigned>(j)) & 1u ? -1.0 : 1.0;
            z[static_cast<std::size_t>(j)] = sgn * mag;
            biggest = std::max(biggest, mag);
        }
        if (biggest < 1e-12) {
            z[0] = (pattern & 1u) ? -1.0 : 1.0;  // degenerate draw, pin a direction
        }
        points.push_back(project_to_sphere(z, params));
    }
    return points;
}

}  // namespace hosm
