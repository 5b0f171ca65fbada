#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dynperc/bit_config.hpp"
#include "dynperc/lattice.hpp"

namespace dynperc {

/// Reusable BFS buffers for hot loops.
struct ClusterScratch {
    std::vector<std::int32_t> queue;
    std::vector<std::uint8_t> seen;
};

namespace detail {

// BFS over open edges from the root; O(component size).
template <class IsOpen>
std::int64_t cluster_size_from_root(const Lattice& lat, IsOpen&& is_open, ClusterScratch& scratch) {
    scratch.seen.assign(static_cast<std::size_t>(lat.num_vertices()), 0);
    scratch.queue.clear();
    scratch.queue.push_back(lat.root);
    scratch.seen[lat.root] = 1;
    std::size_t head = 0;
    while (head < scratch.queue.size()) {
        const std::int32_t v = scratch.queue[head++];
        for (const auto* it = lat.adj_begin(v); it != lat.adj_end(v); ++it) {
            if (!is_open(it->edge) || scratch.seen[it->neighbor]) continue;
            scratch.seen[it->neighbor] = 1;
            scratch.queue.push_back(it->neighbor);
        }
    }
    return static_cast<std::int64_t>(scratch.queue.size());
}

}  // namespace detail

/// Number of vertices in the open-edge component of the root/origin (>= 1).
inline std::int64_t cluster_size_at_root(const Lattice& lat, const BitConfig& config, ClusterScratch& scratch) {
    if (config.size() != static_cast<std::size_t>(lat.num_edges()))
        throw std::invalid_argument("cluster_size_at_root: config length does not match lattice");
    return detail::cluster_size_from_root(lat, [&](std::int32_t e) { return config.is_open(e); }, scratch);
}

inline std::int64_t cluster_size_at_root(const Lattice& lat, const BitConfig& config) {
    ClusterScratch scratch;
    return cluster_size_at_root(lat, config, scratch);
}

/// Mask variant for exhaustive enumeration (bit i of open_mask = edge i open).
inline std::int64_t cluster_size_at_root_mask(const Lattice& lat, std::uint64_t open_mask, ClusterScratch& scratch) {
    return detail::cluster_size_from_root(lat, [&](std::int32_t e) { return (open_mask >> e) & 1; }, scratch);
}

}  // namespace dynperc
