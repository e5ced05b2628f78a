#include "hosm/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hosm {

namespace {

std::vector<double> chain_weights(int r, double kappa) {
    std::vector<double> p(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        p[static_cast<std::size_t>(i)] = 1.0 + static_cast<double>(i) * kappa;
    }
    return p;
}

}  // namespace

ChainParams ChainParams::make(int r, double kappa) {
    ChainParams tmp;
    tmp.r = r;
    tmp.p = chain_weights(std::max(r, 1), kappa);
    double pmax = *std::max_element(tmp.p.begin(), tmp.p.end());
    return make(r, kappa, pmax + 1.0);
}

ChainParams ChainParams::make(int r, double kappa, double c) {
    if (r < 1) {
        throw std::invalid_argument("ChainParams: order r must be >= 1");
    }
    const double bound = 1.0 / static_cast<double>(r);
    // Tiny slack so that kappa = -1/r expressed in decimal (e.g. -0.3333333333)
    // round-trips through config files.
    if (kappa < -bound - 1e-12 || kappa > bound + 1e-12) {
        throw std::invalid_argument("ChainParams: kappa must lie in [-1/r, 1/r]");
    }
    kappa = std::clamp(kappa, -bound, bound);
    ChainParams params;
    params.r = r;
    params.kappa = kappa;
    params.p = chain_weights(r, kappa);
    for (double pi : params.p) {
        if (!(pi > 0.0)) {
            throw std::invalid_argument("ChainParams: weights p_i must be positive");
        }
    }
    if (!(c >= params.max_weight() - 1e-12) || !std::isfinite(c)) {
        throw std::invalid_argument("ChainParams: c must satisfy c >= max_i p_i");
    }
    params.c = c;
    return params;
}

double ChainParams::max_weight() const {
    return *std::max_element(p.begin(), p.end());
}

GainSet GainSet::from_l(std::vector<double> l) {
    GainSet g;
    g.l = std::move(l);
    g.validate(static_cast<int>(g.l.size()));
    return g;
}

void GainSet::validate(int r) const {
    if (static_cast<int>(l.size()) != r) {
        throw std::invalid_argument("GainSet: need exactly r gains l_1..l_r");
    }
    for (double li : l) {
        if (!(li > 0.0) || !std::isfinite(li)) {
            throw std::invalid_argument("GainSet: gains l_i must be positive and finite");
        }
    }
    if (C && !(*C > 0.0)) {
        throw std::invalid_argument("GainSet: decay constant C must be positive");
    }
}

}  // namespace hosm
