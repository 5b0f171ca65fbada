#include "dynperc/chain.hpp"

#include <stdexcept>

namespace dynperc {

BitConfig noise_perturb(const BitConfig& config, double eps, const ProductMeasure& measure, Xoshiro256& rng) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("noise_perturb: eps must lie in [0,1]");
    BitConfig out = config;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (rng.uniform01() < eps) out.set(i, measure.sample(rng));
    }
    return out;
}

TimeSeries run_observable_series(const Lattice& lattice, const ProductMeasure& measure,
                                 const Observable& observable, std::int64_t steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("run_observable_series: steps must be >= 1");
    TimeSeries series;
    series.values.resize(static_cast<std::size_t>(steps));
    ChainState state = init_chain(lattice, measure, seed);
    series.values[0] = observable(state.config);
    for (std::int64_t s = 1; s < steps; ++s) {
        step_discrete(state, measure);
        series.values[static_cast<std::size_t>(s)] = observable(state.config);
    }
    return series;
}

}  // namespace dynperc
