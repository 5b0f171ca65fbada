#pragma once

#include <cstdint>
#include <vector>

#include "dynperc/spectral.hpp"

namespace dynperc {

/// Closed-form spectral data for the root-cluster-size observable on the
/// perfect binary tree of depth n. Masses are unnormalized: m[k] = var * P(W=k).
struct TreeSpectrum {
    int depth = 0;
    double p = 0.0;
    double n_bits = 0.0;            // |B_n| = 2^{n+1} - 2
    std::vector<double> g;          // g[d], d = 1..depth (g[0] unused)
    std::vector<double> masses;     // m[k], k = 1..depth (m[0] unused); zero above depth
    double variance = 0.0;
};

/// g_{p,n}(d) = p^{2d} [(1-(2p)^{n+1-d})/(1-2p)]^2, with the p = 1/2 limit
/// 2^{-2d} (n+1-d)^2; evaluated stably across p = 1/2.
double g_factor(double p, int n, int d);

TreeSpectrum tree_spectrum(double p, int n);

/// Exact spectral weights; w[k] lives on k = 1..n inside a bit set of size
/// 2^{n+1}-2. Materializes the full weight vector, so n is capped at 24.
SpectralWeights tree_weights(double p, int n);

/// var_p(f_n) * E(z^W) for z in [0,1]. At z = 1 this is the variance
/// (n(n+1)(2n+1)/12 at p = 1/2). Evaluated in log space; may overflow to
/// +inf for large supercritical trees, where the normalized form stays finite.
double tree_mgf(double p, int n, double z);

/// E(z^W): the mgf normalized by the variance; stable for n up to ~1e6.
double tree_mgf_normalized(double p, int n, double z);

double tree_variance(double p, int n);

/// E(W^{-1}); stable for large n.
double tree_mean_inverse(double p, int n);

/// tau = |B_n| E(W^{-1}) - 1/2. Overflows for n > ~1020; use tree_tau_ratio.
double tree_tau(double p, int n);

/// tau / |B_n|, computed without forming |B_n|.
double tree_tau_ratio(double p, int n);

/// Large-n limit of tau/|B_n| for p != 1/2 (three-case constants). For
/// p = 1/2 the ratio decays like critical_rate(n); this throws to route
/// callers there.
double tree_tau_asymptote(double p);

/// 6 log(n) / n, the critical decay rate of tau/|B_n|.
double critical_rate(int n);

struct TreeTableRow {
    int n;
    double p;
    double variance;
    double tau;
    double tau_ratio;     // tau / |B_n|
    double limit_ratio;   // tau_ratio / asymptote (or / critical_rate at p = 1/2)
};

TreeTableRow tree_table_row(double p, int n);

}  // namespace dynperc
