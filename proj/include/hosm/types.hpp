#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hosm {

/// State of the integrator chain, z = [z_1 ... z_r]. Operations that work on
/// sphere prefixes accept vectors of length i <= r.
using StateVector = std::vector<double>;

/// Weighted-dilation structure of an order-r chain: homogeneity degree kappa,
/// weights p_i = 1 + (i-1)*kappa, and the norm exponent c >= max_i p_i.
struct ChainParams {
    int r = 1;
    double kappa = 0.0;
    double c = 2.0;
    std::vector<double> p;  // p[i-1] = 1 + (i-1)*kappa

    /// Builds validated params; with two arguments c defaults to max_i p_i + 1.
    static ChainParams make(int r, double kappa);
    static ChainParams make(int r, double kappa, double c);

    double max_weight() const;
};

/// Controller gains l_1..l_r plus the synthesis byproducts (helper constants
/// k_i, per-stage margins eta_i, decay constant C) when they were computed.
struct GainSet {
    std::vector<double> l;
    std::vector<double> k;    // empty when not synthesized
    std::vector<double> eta;  // empty when not synthesized
    std::optional<double> C;

    static GainSet from_l(std::vector<double> l);
    void validate(int r) const;
};

}  // namespace hosm
