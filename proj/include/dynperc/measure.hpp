#pragma once

#include <cmath>
#include <stdexcept>

#include "dynperc/bit_config.hpp"
#include "dynperc/lattice.hpp"
#include "dynperc/rng.hpp"

namespace dynperc {

/// Bernoulli product measure on {-1,+1}^B: each bit is +1 with probability p.
class ProductMeasure {
public:
    explicit ProductMeasure(double p) : p_(p) {
        if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("ProductMeasure: p must lie in (0,1)");
        nu_ = std::sqrt((1.0 - p) / p);
    }

    double p() const { return p_; }
    double nu() const { return nu_; }
    double nu_sq() const { return (1.0 - p_) / p_; }

    double prob(Spin s) const { return s > 0 ? p_ : 1.0 - p_; }

    // psi(s) = s * nu^s, the one-bit basis function orthogonal to 1
    double psi(Spin s) const { return s > 0 ? nu_ : -1.0 / nu_; }

    Spin sample(Xoshiro256& rng) const { return rng.bernoulli(p_) ? Spin{1} : Spin{-1}; }

private:
    double p_;
    double nu_;
};

/// Exact stationary sample: every bit independently +1 with probability p.
inline BitConfig sample_config(const ProductMeasure& measure, const Lattice& lattice, Xoshiro256& rng) {
    BitConfig config(static_cast<std::size_t>(lattice.num_edges()));
    for (std::size_t i = 0; i < config.size(); ++i) config.set(i, measure.sample(rng));
    return config;
}

}  // namespace dynperc
