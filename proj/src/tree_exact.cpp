#include "dynperc/tree_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dynperc {

namespace {

void check_args(double p, int n) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("tree: p must lie in (0,1)");
    if (n < 1) throw std::domain_error("tree: depth must be >= 1");
}

// log of S(m) = sum_{k=0}^{m-1} (2p)^k = expm1(m log(2p)) / (2p-1),
// continuous across p = 1/2 where S(m) = m.
double log_geom_sum(double p, int m) {
    const double h = 2.0 * p - 1.0;
    if (h == 0.0) return std::log(static_cast<double>(m));
    const double y = m * std::log1p(h);  // m log(2p)
    double log_num;                      // log |expm1(y)|
    if (y > 36.0)
        log_num = y + std::log1p(-std::exp(-y));
    else if (y > 0.0)
        log_num = std::log(std::expm1(y));
    else
        log_num = std::log(-std::expm1(y));
    return log_num - std::log(std::abs(h));
}

// streaming log-sum-exp over positive terms given by their logs
class LogSumExp {
public:
    void add(double log_term) {
        if (log_term == -std::numeric_limits<double>::infinity()) return;
        if (log_term > max_) {
            sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        } else {
            sum_ += std::exp(log_term - max_);
        }
    }
    double log() const {
        if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
        return max_ + std::log(sum_);
    }

private:
    double max_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
};

// log of sum_d exp(d * log_c + 2 log S(n+1-d)); the shared backbone of the
// mgf, the variance and the tau sums
double log_weighted_gsum(double p, int n, double log_c) {
    LogSumExp acc;
    for (int d = 1; d <= n; ++d) acc.add(d * log_c + 2.0 * log_geom_sum(p, n + 1 - d));
    return acc.log();
}

double log_variance(double p, int n) {
    // var = (1-p) sum_d (2p)^d S(n+1-d)^2
    return std::log1p(-p) + log_weighted_gsum(p, n, std::log(2.0 * p));
}

}  // namespace

double g_factor(double p, int n, int d) {
    check_args(p, n);
    if (d < 1 || d > n) throw std::domain_error("g_factor: d must lie in [1,n]");
    return std::exp(2.0 * d * std::log(p) + 2.0 * log_geom_sum(p, n + 1 - d));
}

TreeSpectrum tree_spectrum(double p, int n) {
    check_args(p, n);
    if (n > 60) throw std::domain_error("tree_spectrum: depth too large to materialize masses");
    TreeSpectrum spec;
    spec.depth = n;
    spec.p = p;
    spec.n_bits = std::pow(2.0, n + 1) - 2.0;
    spec.g.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int d = 1; d <= n; ++d) spec.g[d] = g_factor(p, n, d);

    // m[k] = nu^{2k} sum_d binom(d-1, k-1) 2^d g(d)
    const double nu_sq = (1.0 - p) / p;
    spec.masses.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        double sum = 0.0;
        for (int d = k; d <= n; ++d) {
            double binom = 1.0;  // binom(d-1, k-1), running product
            for (int j = 1; j <= k - 1; ++j) binom *= static_cast<double>(d - j) / j;
            sum += binom * std::pow(2.0, d) * spec.g[d];
        }
        spec.masses[k] = std::pow(nu_sq, k) * sum;
    }
    spec.variance = 0.0;
    for (int k = 1; k <= n; ++k) spec.variance += spec.masses[k];
    return spec;
}

SpectralWeights tree_weights(double p, int n) {
    if (n > 24) throw std::domain_error("tree_weights: weight vector of size 2^{n+1}-2 is too large");
    const TreeSpectrum spec = tree_spectrum(p, n);
    SpectralWeights weights;
    weights.n_bits = (1 << (n + 1)) - 2;
    weights.variance = spec.variance;
    weights.w.assign(static_cast<std::size_t>(weights.n_bits) + 1, 0.0);
    for (int k = 1; k <= n; ++k) weights.w[k] = spec.masses[k] / spec.variance;
    return weights;
}

double tree_mgf(double p, int n, double z) {
    check_args(p, n);
    if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("tree_mgf: z must lie in [0,1]");
    if (z == 0.0) return 0.0;  // W >= 1
    const double nu_sq = (1.0 - p) / p;
    // var E(z^W) = [z nu^2/(1+z nu^2)] sum_d [2p^2(1+z nu^2)]^d S^2
    const double c = 2.0 * p * p * (1.0 + z * nu_sq);
    const double prefactor = z * nu_sq / (1.0 + z * nu_sq);
    return prefactor * std::exp(log_weighted_gsum(p, n, std::log(c)));
}

double tree_mgf_normalized(double p, int n, double z) {
    check_args(p, n);
    if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("tree_mgf_normalized: z must lie in [0,1]");
    if (z == 0.0) return 0.0;
    const double nu_sq = (1.0 - p) / p;
    const double c = 2.0 * p * p * (1.0 + z * nu_sq);
    const double log_ratio = log_weighted_gsum(p, n, std::log(c)) - log_weighted_gsum(p, n, std::log(2.0 * p));
    const double prefactor = (z * nu_sq / (1.0 + z * nu_sq)) / (1.0 - p);
    return prefactor * std::exp(log_ratio);
}

double tree_variance(double p, int n) {
    check_args(p, n);
    if (p == 0.5) return n * (n + 1.0) * (2.0 * n + 1.0) / 12.0;
    return std::exp(log_variance(p, n));
}

double tree_mean_inverse(double p, int n) {
    check_args(p, n);
    // var E(W^{-1}) = sum_d (2p)^d (1 - p^d)/d S^2
    LogSumExp num;
    const double log_2p = std::log(2.0 * p);
    const double log_p = std::log(p);
    for (int d = 1; d <= n; ++d) {
        const double log_one_minus_pd = std::log1p(-std::exp(d * log_p));
        num.add(d * log_2p + log_one_minus_pd - std::log(static_cast<double>(d)) +
                2.0 * log_geom_sum(p, n + 1 - d));
    }
    return std::exp(num.log() - log_variance(p, n));
}

double tree_tau(double p, int n) {
    const double n_bits = std::pow(2.0, n + 1) - 2.0;
    return n_bits * tree_mean_inverse(p, n) - 0.5;
}

double tree_tau_ratio(double p, int n) {
    // tau/|B_n| = E(W^{-1}) - 0.5/|B_n|; the correction underflows harmlessly
    const double log_n_bits = (n + 1) * std::log(2.0) + std::log1p(-std::pow(2.0, -n));
    return tree_mean_inverse(p, n) - 0.5 * std::exp(-log_n_bits);
}

double tree_tau_asymptote(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("tree_tau_asymptote: p must lie in (0,1)");
    if (p == 0.5)
        throw std::domain_error("tree_tau_asymptote: at p = 1/2 the ratio decays; use critical_rate(n)");
    if (p < 0.5)
        return (1.0 - 2.0 * p) / (2.0 * p * (1.0 - p)) * std::log((1.0 - 2.0 * p * p) / (1.0 - 2.0 * p));
    return (2.0 * p - 1.0) / (1.0 - p) * std::log(p / (2.0 * p - 1.0));
}

double critical_rate(int n) {
    if (n < 2) throw std::domain_error("critical_rate: n must be >= 2");
    return 6.0 * std::log(static_cast<double>(n)) / n;
}

TreeTableRow tree_table_row(double p, int n) {
    TreeTableRow row;
    row.n = n;
    row.p = p;
    row.variance = tree_variance(p, n);
    row.tau = tree_tau(p, n);
    row.tau_ratio = tree_tau_ratio(p, n);
    const double limit = (p == 0.5) ? critical_rate(std::max(n, 2)) : tree_tau_asymptote(p);
    row.limit_ratio = row.tau_ratio / limit;
    return row;
}

}  // namespace dynperc
