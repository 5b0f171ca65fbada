#pragma once

#include <stdexcept>

#include "dynperc/bit_config.hpp"
#include "dynperc/measure.hpp"

namespace dynperc {

/// Psi_A(x) = prod_{i in A} x_i nu^{x_i}; the empty subset gives 1.
/// {Psi_A} is an orthonormal basis of l2(pi_{p,B}).
inline double basis_eval(const BitSubset& subset, const BitConfig& config, const ProductMeasure& measure) {
    double value = 1.0;
    for (const std::uint32_t i : subset.ids) {
        if (i >= config.size()) throw std::out_of_range("basis_eval: bit id out of range");
        value *= measure.psi(config[i]);
    }
    return value;
}

}  // namespace dynperc
