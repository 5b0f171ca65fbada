#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dynperc {

using Spin = std::int8_t;  // -1 (closed) or +1 (open)

/// A +-1 assignment to the edge/bit set, indexed by edge id.
class BitConfig {
public:
    BitConfig() = default;
    explicit BitConfig(std::size_t n_bits, Spin fill = -1) : bits_(n_bits, fill) { check(fill); }

    static BitConfig from_mask(std::size_t n_bits, std::uint64_t open_mask) {
        BitConfig c(n_bits);
        for (std::size_t i = 0; i < n_bits; ++i)
            c.bits_[i] = (open_mask >> i) & 1 ? Spin{1} : Spin{-1};
        return c;
    }

    std::size_t size() const { return bits_.size(); }
    Spin operator[](std::size_t i) const { return bits_[i]; }

    void set(std::size_t i, Spin s) {
        check(s);
        bits_[i] = s;
    }
    void flip(std::size_t i) { bits_[i] = static_cast<Spin>(-bits_[i]); }

    bool is_open(std::size_t i) const { return bits_[i] > 0; }

    std::uint64_t to_mask() const {
        if (size() > 64) throw std::length_error("BitConfig: too many bits for a mask");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (bits_[i] > 0) m |= std::uint64_t{1} << i;
        return m;
    }

    bool operator==(const BitConfig&) const = default;

private:
    static void check(Spin s) {
        if (s != 1 && s != -1) throw std::invalid_argument("BitConfig: values must be +-1");
    }
    std::vector<Spin> bits_;
};

/// Sorted subset of bit ids.
struct BitSubset {
    std::vector<std::uint32_t> ids;

    BitSubset() = default;
    explicit BitSubset(std::vector<std::uint32_t> sorted_ids) : ids(std::move(sorted_ids)) {
        for (std::size_t i = 1; i < ids.size(); ++i)
            if (ids[i - 1] >= ids[i]) throw std::invalid_argument("BitSubset: ids must be strictly increasing");
    }

    static BitSubset from_mask(std::uint64_t mask) {
        BitSubset s;
        for (std::uint32_t i = 0; i < 64; ++i)
            if ((mask >> i) & 1) s.ids.push_back(i);
        return s;
    }

    std::size_t size() const { return ids.size(); }
};

}  // namespace dynperc
