#pragma once

#include <cstdint>
#include <vector>

#include "dynperc/basis.hpp"
#include "dynperc/chain.hpp"
#include "dynperc/measure.hpp"

namespace dynperc {

/// Largest |B| for which exhaustive 2^|B| enumeration is attempted.
inline constexpr int kDefaultEnumCap = 22;

/// Direct subset-by-subset enumeration is the default up to this size; above
/// it the fast transform over the psi basis is used.
inline constexpr int kTransformThreshold = 14;

/// Distribution of the spectral level W: w[k] = P(W = k) for k = 1..n_bits,
/// together with the variance of the observable. Levels carry all
/// autocorrelation information: rho(s) = E(1-W/|B|)^s, rho~(t) = E exp(-tW).
struct SpectralWeights {
    int n_bits = 0;
    std::vector<double> w;  // size n_bits+1; w[0] == 0
    double variance = 0.0;

    double mean_inverse() const;  // E(W^{-1})
};

/// f evaluated on every configuration; entry m is the config whose open set
/// is the bit mask m. Throws if the lattice exceeds the cap.
std::vector<double> observable_table(const Observable& f, const Lattice& lattice, int cap = kDefaultEnumCap);

/// Fast table for the root-cluster-size observable.
std::vector<double> cluster_size_table(const Lattice& lattice, int cap = kDefaultEnumCap);

/// pi_{p,B}(x) for the config with open-set mask m.
double config_prob(const ProductMeasure& measure, std::uint64_t mask, int n_bits);

/// In-place generalized Walsh transform over the psi basis: on return,
/// values[m] = <f, Psi_A> where A is the subset with mask m. O(n 2^n).
void psi_transform(std::vector<double>& values, const ProductMeasure& measure);

/// <f, Psi_A> by exact enumeration over all 2^|B| configurations.
double fourier_coefficient(const Observable& f, const BitSubset& subset, const ProductMeasure& measure,
                           const Lattice& lattice, int cap = kDefaultEnumCap);
double fourier_coefficient_from_table(const std::vector<double>& table, const BitSubset& subset,
                                      const ProductMeasure& measure);

/// Spectral weights of a non-constant observable by exhaustive enumeration.
/// Dispatches to the direct route for small systems and the transform route
/// above kTransformThreshold bits.
SpectralWeights spectral_weights(const Observable& f, const ProductMeasure& measure, const Lattice& lattice,
                                 int cap = kDefaultEnumCap);
SpectralWeights spectral_weights_from_table(const std::vector<double>& table, const ProductMeasure& measure);

/// Serial reference: direct O(4^n) accumulation of squared coefficients.
SpectralWeights spectral_weights_direct(const std::vector<double>& table, const ProductMeasure& measure);
/// Transform route; parallel over configuration blocks with a fixed
/// reduction order, so results are identical for any thread count.
SpectralWeights spectral_weights_transform(const std::vector<double>& table, const ProductMeasure& measure);

// Exact autocorrelation functions and times derived from the weights.
double rho_discrete(const SpectralWeights& weights, std::int64_t s);
double tau_discrete(const SpectralWeights& weights);     // |B| E(W^{-1}) - 1/2
double rho_continuous(const SpectralWeights& weights, double t);
double tau_continuous(const SpectralWeights& weights);   // E(W^{-1})

/// h(x) = (-x - log(1-x)) / x^2 on [0,1), evaluated stably; h(0) = 1/2.
double h_function(double x);

/// Two-level toy spectrum: P(W=1) = n^{-gamma}, P(W=n) = 1 - n^{-gamma}.
SpectralWeights dictator_parity_weights(int n, double gamma);
/// The matching observable f = n^{-gamma/2} Psi_{{0}} + sqrt(1-n^{-gamma}) Psi_{B};
/// its weights equal dictator_parity_weights(n, gamma) for every p.
Observable make_dictator_parity_observable(const ProductMeasure& measure, int n, double gamma);

}  // namespace dynperc
