#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hosm/types.hpp"

namespace hosm {

/// Signed fractional power |x|^a * sgn(x) with the convention sgn(0) = 0.
/// Total for a >= 0; inputs with |x| below 1e-300 are treated as zero.
double signed_power(double x, double a);

/// sgn with sgn(0) = 0.
inline double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/// Weighted dilation: component i of the result is eps^{p_i} * z_i.
/// Accepts prefixes (z.size() <= params.r). Rejects eps <= 0.
StateVector dilate(std::span<const double> z, double eps, const ChainParams& params);

/// Homogeneous norm Gamma_i(z) = (sum_j |z_j|^{c/p_j})^{1/c} over the prefix
/// z_1..z_i given by the span length.
double hom_norm(std::span<const double> z, const ChainParams& params);

/// n deterministic points on the unit sphere {Gamma_i = 1} of the i-prefix,
/// cycling through all sign orthants, low-discrepancy magnitudes, projected
/// radially so |Gamma_i - 1| <= 1e-12.
std::vector<StateVector> sphere_sample(int i, int n, const ChainParams& params,
                                       std::uint64_t seed = 0x5eed0001u);

/// Radial projection of z != 0 onto {Gamma_i = 1} using the exact scaling
/// identity Gamma(dilate(z, eps)) = eps * Gamma(z).
StateVector project_to_sphere(std::span<const double> z, const ChainParams& params);

/// Low-discrepancy sequence in [0,1)^dim (additive recurrence with the
/// generalized golden ratio), offset deterministically by the seed.
class QuasiRandom {
  public:
    QuasiRandom(int dim, std::uint64_t seed);
    std::vector<double> next();

  private:
    std::vector<double> alpha_;
    std::vector<double> state_;
};

/// splitmix64 PRNG step; used to derive deterministic sub-seeds and offsets.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace hosm
