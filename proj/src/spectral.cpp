#include "dynperc/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "dynperc/cluster.hpp"

namespace dynperc {

namespace {

constexpr double kMassClamp = 1e-14;  // relative; suppresses enumeration round-off

void check_cap(const Lattice& lattice, int cap) {
    if (cap < 1 || cap > 26) throw std::invalid_argument("enumeration cap must lie in [1,26]");
    if (lattice.num_edges() > cap)
        throw std::invalid_argument("lattice exceeds the exhaustive-enumeration cap (" +
                                    std::to_string(lattice.num_edges()) + " > " + std::to_string(cap) + " bits)");
}

// powers nu^j for j in [-n, n], offset by n
std::vector<double> nu_power_table(const ProductMeasure& measure, int n) {
    std::vector<double> t(2 * n + 1);
    for (int j = -n; j <= n; ++j) t[j + n] = std::pow(measure.nu(), j);
    return t;
}

SpectralWeights weights_from_masses(std::vector<double> masses, int n_bits) {
    double total = 0.0;
    for (int k = 1; k <= n_bits; ++k) total += masses[k];
    if (!(total > 0.0)) throw std::domain_error("spectral_weights: observable is constant (variance 0)");
    double clamped_total = 0.0;
    for (int k = 1; k <= n_bits; ++k) {
        if (masses[k] < kMassClamp * total) masses[k] = 0.0;
        clamped_total += masses[k];
    }
    SpectralWeights weights;
    weights.n_bits = n_bits;
    weights.variance = total;
    weights.w.assign(static_cast<std::size_t>(n_bits) + 1, 0.0);
    for (int k = 1; k <= n_bits; ++k) weights.w[k] = masses[k] / clamped_total;
    return weights;
}

}  // namespace

double SpectralWeights::mean_inverse() const {
    double m = 0.0;
    for (int k = n_bits; k >= 1; --k) m += w[k] / k;
    return m;
}

std::vector<double> observable_table(const Observable& f, const Lattice& lattice, int cap) {
    check_cap(lattice, cap);
    const int n = lattice.num_edges();
    std::vector<double> table(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < table.size(); ++m)
        table[m] = f(BitConfig::from_mask(static_cast<std::size_t>(n), m));
    return table;
}

std::vector<double> cluster_size_table(const Lattice& lattice, int cap) {
    check_cap(lattice, cap);
    const int n = lattice.num_edges();
    std::vector<double> table(std::size_t{1} << n);
    ClusterScratch scratch;
    for (std::uint64_t m = 0; m < table.size(); ++m)
        table[m] = static_cast<double>(cluster_size_at_root_mask(lattice, m, scratch));
    return table;
}

double config_prob(const ProductMeasure& measure, std::uint64_t mask, int n_bits) {
    const int open = std::popcount(mask);
    return std::pow(measure.p(), open) * std::pow(1.0 - measure.p(), n_bits - open);
}

void psi_transform(std::vector<double>& values, const ProductMeasure& measure) {
    const std::size_t size = values.size();
    if (size == 0 || (size & (size - 1)) != 0) throw std::invalid_argument("psi_transform: size must be 2^n");
    const double p = measure.p();
    const double q = 1.0 - p;
    const double s = std::sqrt(p * q);
    // per-bit butterfly: (f(-), f(+)) -> (q f(-) + p f(+), s (f(+) - f(-)))
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        const std::int64_t half = static_cast<std::int64_t>(size >> 1);
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < half; ++r) {
            // r enumerates masks with this bit clear
            const std::size_t low = static_cast<std::size_t>(r) & (bit - 1);
            const std::size_t m = ((static_cast<std::size_t>(r) & ~(bit - 1)) << 1) | low;
            const double a = values[m];
            const double b = values[m | bit];
            values[m] = q * a + p * b;
            values[m | bit] = s * (b - a);
        }
    }
}

double fourier_coefficient_from_table(const std::vector<double>& table, const BitSubset& subset,
                                      const ProductMeasure& measure) {
    int n = 0;
    while ((std::size_t{1} << n) < table.size()) ++n;
    std::uint64_t amask = 0;
    for (const std::uint32_t i : subset.ids) {
        if (static_cast<int>(i) >= n) throw std::out_of_range("fourier_coefficient: bit id out of range");
        amask |= std::uint64_t{1} << i;
    }
    const int k = static_cast<int>(subset.size());
    const auto nu_pow = nu_power_table(measure, n);
    const double p = measure.p();
    double acc = 0.0;
    for (std::uint64_t m = 0; m < table.size(); ++m) {
        const int open_in_a = std::popcount(m & amask);
        // Psi_A(x) = (-1)^{#closed in A} nu^{#open in A - #closed in A}
        const double psi = ((k - open_in_a) & 1 ? -1.0 : 1.0) * nu_pow[2 * open_in_a - k + n];
        const int open = std::popcount(m);
        acc += std::pow(p, open) * std::pow(1.0 - p, n - open) * table[m] * psi;
    }
    return acc;
}

double fourier_coefficient(const Observable& f, const BitSubset& subset, const ProductMeasure& measure,
                           const Lattice& lattice, int cap) {
    return fourier_coefficient_from_table(observable_table(f, lattice, cap), subset, measure);
}

SpectralWeights spectral_weights_direct(const std::vector<double>& table, const ProductMeasure& measure) {
    int n = 0;
    while ((std::size_t{1} << n) < table.size()) ++n;
    const auto nu_pow = nu_power_table(measure, n);
    // pre-weight the table by pi(x)
    std::vector<double> weighted(table.size());
    std::vector<double> p_pow(n + 1), q_pow(n + 1);
    for (int j = 0; j <= n; ++j) {
        p_pow[j] = std::pow(measure.p(), j);
        q_pow[j] = std::pow(1.0 - measure.p(), j);
    }
    for (std::uint64_t m = 0; m < table.size(); ++m) {
        const int open = std::popcount(m);
        weighted[m] = p_pow[open] * q_pow[n - open] * table[m];
    }
    std::vector<double> masses(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::uint64_t amask = 1; amask < table.size(); ++amask) {
        const int k = std::popcount(amask);
        double coef = 0.0;
        for (std::uint64_t m = 0; m < table.size(); ++m) {
            const int open_in_a = std::popcount(m & amask);
            coef += weighted[m] * ((k - open_in_a) & 1 ? -nu_pow[2 * open_in_a - k + n]
                                                       : nu_pow[2 * open_in_a - k + n]);
        }
        masses[k] += coef * coef;
    }
    return weights_from_masses(std::move(masses), n);
}

SpectralWeights spectral_weights_transform(const std::vector<double>& table, const ProductMeasure& measure) {
    int n = 0;
    while ((std::size_t{1} << n) < table.size()) ++n;
    std::vector<double> coefs = table;
    psi_transform(coefs, measure);

    // accumulate squared coefficients per level in fixed block order
    const int n_blocks = 64;
    const std::uint64_t size = coefs.size();
    const std::uint64_t block = (size + n_blocks - 1) / n_blocks;
    std::vector<double> partial(static_cast<std::size_t>(n_blocks) * (n + 1), 0.0);
#pragma omp parallel for schedule(static)
    for (int b = 0; b < n_blocks; ++b) {
        double* mass = partial.data() + static_cast<std::size_t>(b) * (n + 1);
        const std::uint64_t lo = b * block;
        const std::uint64_t hi = std::min(size, lo + block);
        for (std::uint64_t amask = std::max<std::uint64_t>(lo, 1); amask < hi; ++amask)
            mass[std::popcount(amask)] += coefs[amask] * coefs[amask];
    }
    std::vector<double> masses(static_cast<std::size_t>(n) + 1, 0.0);
    for (int b = 0; b < n_blocks; ++b)
        for (int k = 0; k <= n; ++k) masses[k] += partial[static_cast<std::size_t>(b) * (n + 1) + k];
    return weights_from_masses(std::move(masses), n);
}

SpectralWeights spectral_weights_from_table(const std::vector<double>& table, const ProductMeasure& measure) {
    int n = 0;
    while ((std::size_t{1} << n) < table.size()) ++n;
    if (n > kTransformThreshold) return spectral_weights_transform(table, measure);
    return spectral_weights_direct(table, measure);
}

SpectralWeights spectral_weights(const Observable& f, const ProductMeasure& measure, const Lattice& lattice,
                                 int cap) {
    return spectral_weights_from_table(observable_table(f, lattice, cap), measure);
}

double rho_discrete(const SpectralWeights& weights, std::int64_t s) {
    if (s < 0) throw std::invalid_argument("rho_discrete: s must be >= 0");
    double acc = 0.0;
    for (int k = 1; k <= weights.n_bits; ++k) {
        if (weights.w[k] == 0.0) continue;
        acc += weights.w[k] * std::pow(1.0 - static_cast<double>(k) / weights.n_bits, static_cast<double>(s));
    }
    return acc;
}

double tau_discrete(const SpectralWeights& weights) {
    return weights.n_bits * weights.mean_inverse() - 0.5;
}

double rho_continuous(const SpectralWeights& weights, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("rho_continuous: t must be >= 0");
    double acc = 0.0;
    for (int k = 1; k <= weights.n_bits; ++k)
        if (weights.w[k] != 0.0) acc += weights.w[k] * std::exp(-t * k);
    return acc;
}

double tau_continuous(const SpectralWeights& weights) { return weights.mean_inverse(); }

double h_function(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("h_function: x must lie in [0,1)");
    if (x < 1e-4) {
        // sum x^l / (l+2); four terms give full precision here
        return 0.5 + x * (1.0 / 3.0 + x * (0.25 + x * 0.2));
    }
    return (-x - std::log1p(-x)) / (x * x);
}

SpectralWeights dictator_parity_weights(int n, double gamma) {
    if (n < 2) throw std::invalid_argument("dictator_parity_weights: n must be >= 2");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("dictator_parity_weights: gamma in (0,1)");
    SpectralWeights weights;
    weights.n_bits = n;
    weights.variance = 1.0;
    weights.w.assign(static_cast<std::size_t>(n) + 1, 0.0);
    weights.w[1] = std::pow(n, -gamma);
    weights.w[n] = 1.0 - weights.w[1];
    return weights;
}

Observable make_dictator_parity_observable(const ProductMeasure& measure, int n, double gamma) {
    const double a = std::pow(n, -gamma / 2.0);
    const double b = std::sqrt(1.0 - std::pow(n, -gamma));
    return [measure, a, b, n](const BitConfig& config) {
        double parity = 1.0;
        for (int i = 0; i < n; ++i) parity *= measure.psi(config[static_cast<std::size_t>(i)]);
        return a * measure.psi(config[0]) + b * parity;
    };
}

}  // namespace dynperc
