#pragma once

#include <cstdint>
#include <vector>

#include "dynperc/chain.hpp"
#include "dynperc/measure.hpp"

namespace dynperc {

/// Windowed estimate of the integrated autocorrelation time.
struct AutocorrEstimate {
    std::vector<double> rho;   // rho_hat(s), s = 0..window (rho[0] = 1)
    double tau = 0.0;          // 1/2 + sum_{s=1}^{window} rho_hat(s)
    int window = 0;            // M
    double se_tau = 0.0;       // sqrt(2(2M+1)/T) * tau_hat
    std::int64_t length = 0;   // T
    double ess = 0.0;          // T / (2 tau_hat)
    double mean = 0.0;
    double variance = 0.0;     // biased (1/T) sample variance
    bool window_closed = true; // false if M hit the lag cap
    bool degenerate = false;   // constant series; tau/se meaningless
};

struct WindowRule {
    double c = 6.0;        // window closes at the smallest M >= c * tau_hat(M)
    int max_lag = 4096;    // hard cap on M
};

/// Sample autocovariance c(0..s_max) with biased 1/T normalization.
/// Parallel over lags; identical results for any thread count.
std::vector<double> autocovariance(const std::vector<double>& series, int s_max);
/// Serial reference implementation.
std::vector<double> autocovariance_serial(const std::vector<double>& series, int s_max);

/// rho_hat(0..s_max) = c(s)/c(0). Throws on constant or too-short series
/// (requires T >= 10 * s_max).
std::vector<double> estimate_autocorr(const std::vector<double>& series, int s_max);

/// Batch-means standard errors for rho_hat(s), s = 0..s_max.
std::vector<double> estimate_autocorr_se(const std::vector<double>& series, int s_max, int n_batches = 32);

/// Self-consistent windowed tau with standard error. A constant series
/// yields a flagged (degenerate) estimate rather than NaNs.
AutocorrEstimate integrated_tau(const std::vector<double>& series, const WindowRule& rule = {});

struct PairCorrelation {
    double value = 0.0;  // estimate of rho~(t)
    double se = 0.0;     // batch standard error
    std::int64_t samples = 0;
};

/// Monte Carlo estimate of corr(f(X), f(X_eps)) with eps = 1 - exp(-t):
/// independent stationary pairs coupled through the noise operator, giving
/// the continuous-time pair correlation rho~(t). Batches run in parallel
/// with seeds derived from (seed, batch); merge order is fixed.
PairCorrelation pair_correlation_continuous(const Lattice& lattice, const ProductMeasure& measure,
                                            const Observable& f, double t, std::int64_t samples,
                                            std::uint64_t seed, int n_batches = 64);

}  // namespace dynperc
