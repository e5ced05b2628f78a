#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hosm/types.hpp"

namespace hosm {

/// Stage-by-stage evaluation of the nested law on a prefix z_1..z_i:
/// v_0 = 0, N_i = (sum_j |z_j|^{c/p_j})^{(p_i+kappa)/c},
/// v_i = -l_i N_i sgn(z_i - v_{i-1}), omega = v_i at the last stage.
struct ChainEval {
    double omega = 0.0;
    std::vector<double> v;      // v_1..v_i
    std::vector<double> N;      // N_1..N_i
    std::vector<double> sigma;  // z_j - v_{j-1}
    std::vector<double> sums;   // partial sums of |z_j|^{c/p_j}
};

ChainEval nominal_eval(std::span<const double> z, const ChainParams& params,
                       const GainSet& gains, double boundary_layer = 0.0);

/// omega_kappa(z), the full-state nested control.
double nominal_control(const StateVector& z, const ChainParams& params,
                       const GainSet& gains);

/// Lyapunov pieces: W_i by its closed-form antiderivative, the normalized
/// Wbar_i = W_i^{(c+1)/(c+p_i)}, and V = sum_i Wbar_i.
struct LyapunovEval {
    double V = 0.0;
    std::vector<double> W;
    std::vector<double> Wbar;
    ChainEval chain;
};

LyapunovEval lyapunov_eval(std::span<const double> z, const ChainParams& params,
                           const GainSet& gains);
double lyapunov(const StateVector& z, const ChainParams& params, const GainSet& gains);

/// Piecewise-analytic gradient data, valid away from the switching surfaces
/// z_i = v_{i-1} (where sgn terms are treated as locally constant).
struct LyapunovGrad {
    std::vector<double> grad;                    // dV/dz_k
    std::vector<std::vector<double>> wbar_grad;  // dWbar_i/dz_k, k <= i
    bool kink = false;                           // some W_i vanished en route
    LyapunovEval lyap;
};

LyapunovGrad lyapunov_grad_analytic(std::span<const double> z, const ChainParams& params,
                                    const GainSet& gains);

/// Central finite-difference gradient with homogeneity-scaled steps
/// h_i = 1e-5 * max(1, Gamma_r(z)^{p_i}); flags proximity to kinks.
struct FiniteDiffGrad {
    std::vector<double> grad;
    std::vector<double> h;
    bool near_kink = false;
};

FiniteDiffGrad lyapunov_grad(const StateVector& z, const ChainParams& params,
                             const GainSet& gains);

/// Directional derivative of V along the closed-loop pure chain
/// (z_2, ..., z_r, omega(z)); analytic chain rule, kink flag as above.
struct ClosedLoopVdot {
    double vdot = 0.0;
    double V = 0.0;
    bool kink = false;
};

ClosedLoopVdot closed_loop_vdot(const StateVector& z, const ChainParams& params,
                                const GainSet& gains);

enum class LawVariant { nominal, robust, relay, min_amplitude, fixed_time };

std::string to_string(LawVariant v);

/// A fully parameterized feedback law. For the switching variants the struct
/// carries both branch geometries (inner = params at inner_kappa, outer at
/// -1/r or -inner_kappa) built over a shared exponent c.
struct ControlLaw {
    LawVariant variant = LawVariant::nominal;
    ChainParams params;        // geometry the law settles with
    ChainParams outer_params;  // switching variants only
    GainSet gains;
    double m = 1.0;
    double n = 1.0;
    double phi_bar = 0.0;
    double gamma_m = 1.0;
    double threshold = 0.0;    // A (min_amplitude) or B (fixed_time)
    double inner_kappa = 0.0;
    bool threshold_validated = false;
    double boundary_layer = 0.0;  // 0 = pure sgn

    static ControlLaw make_nominal(ChainParams params, GainSet gains);
    static ControlLaw make_robust(ChainParams params, GainSet gains, double m, double n,
                                  double phi_bar, double gamma_m);
    static ControlLaw make_relay(int r, double c, GainSet gains, double m, double n,
                                 double phi_bar, double gamma_m);
    static ControlLaw make_min_amplitude(int r, double c, GainSet gains, double inner_kappa,
                                         double threshold, bool validated, double phi_bar,
                                         double gamma_m);
    static ControlLaw make_fixed_time(int r, double c, GainSet gains, double inner_kappa,
                                      double threshold, double phi_bar, double gamma_m);

    /// Relay amplitude M = m (l_r + n phi_bar) / gamma_m.
    double relay_amplitude() const;
};

struct LawEval {
    double u = 0.0;
    int branch = 0;      // 0 inner/primary, 1 outer
    double omega = 0.0;  // nominal value feeding the robustification
};

LawEval evaluate(const ControlLaw& law, const StateVector& z);

double robust_control(const StateVector& z, const ControlLaw& law);
double relay_control(const StateVector& z, const ControlLaw& law);
double min_amplitude_control(const StateVector& z, const ControlLaw& law);
double fixed_time_control(const StateVector& z, const ControlLaw& law);

/// Sampled certificate of the two robustification hypotheses:
/// dV/dz_r * omega <= 0 on S_r (plus random dilations), and
/// omega = 0 => dV/dz_r = 0 on constructed zero-omega points.
struct HypothesisReport {
    bool pass = false;
    int n_samples = 0;
    double worst_product = 0.0;
    StateVector worst_point;
    double implication_worst = 0.0;
    std::vector<std::pair<StateVector, double>> violations;  // capped listing
    std::vector<std::string> invariant_violations;
};

HypothesisReport check_hypotheses(const ChainParams& params, const GainSet& gains,
                                  int n_samples, std::uint64_t seed = 0x5eed0002u);

}  // namespace hosm
