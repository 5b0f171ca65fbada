#pragma once

#include <array>
#include <cstdint>

namespace dynperc {

// splitmix64 finalizer; used for seeding and for deriving per-replica streams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Replica r of a run seeded with `master` uses derive_seed(master, r).
// Streams for distinct r are decorrelated by construction; the mapping is a
// pure function of (master, r) so parallel runs are reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

// xoshiro256++ (Blackman & Vigna). Self-contained so that sequences are
// bit-identical across platforms and standard-library versions.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed = 0x853c49e6748fea9bULL) {
        std::uint64_t z = seed;
        for (auto& si : s_) {
            z = mix64(z);
            si = z;
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on [0,1) with 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // unbiased integer in [0, n) via rejection
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_;
};

}  // namespace dynperc
