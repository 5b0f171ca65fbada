#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "dynperc/cluster.hpp"
#include "dynperc/measure.hpp"

namespace dynperc {

/// Real observable of a configuration. An Observable instance may carry
/// scratch buffers; give each concurrent worker its own copy.
using Observable = std::function<double(const BitConfig&)>;

/// f(x) = number of vertices in the root/origin cluster.
inline Observable make_cluster_size_observable(const Lattice& lattice) {
    auto scratch = std::make_shared<ClusterScratch>();
    return [&lattice, scratch](const BitConfig& config) {
        return static_cast<double>(cluster_size_at_root(lattice, config, *scratch));
    };
}

/// State of one discrete-time heat-bath chain; owned by a single worker.
struct ChainState {
    BitConfig config;
    std::uint64_t step = 0;
    Xoshiro256 rng;
};

/// Stationary start: Z_0 ~ pi_{p,B}.
inline ChainState init_chain(const Lattice& lattice, const ProductMeasure& measure, std::uint64_t seed) {
    ChainState state{BitConfig{}, 0, Xoshiro256{seed}};
    state.config = sample_config(measure, lattice, state.rng);
    return state;
}

/// One heat-bath update: a uniformly chosen bit is resampled from pi_p
/// independently of its old value; all other bits are unchanged.
inline void step_discrete(ChainState& state, const ProductMeasure& measure) {
    const std::uint64_t i = state.rng.uniform_index(state.config.size());
    state.config.set(static_cast<std::size_t>(i), measure.sample(state.rng));
    ++state.step;
}

/// Independently per bit: keep with probability 1-eps, resample from pi_p
/// with probability eps. With eps = 1-exp(-t), (X, perturbed X) has the joint
/// law of the stationary continuous-time chain at times (0, t).
BitConfig noise_perturb(const BitConfig& config, double eps, const ProductMeasure& measure, Xoshiro256& rng);

struct TimeSeries {
    std::vector<double> values;
};

/// Observable series f(Z_0), ..., f(Z_{steps-1}) from a stationary start.
TimeSeries run_observable_series(const Lattice& lattice, const ProductMeasure& measure,
                                 const Observable& observable, std::int64_t steps, std::uint64_t seed);

}  // namespace dynperc
