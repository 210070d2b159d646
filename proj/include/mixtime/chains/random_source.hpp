#pragma once

#include <cstdint>
#include <string_view>

namespace mixtime {

// Counter-based deterministic stream (splitmix64 core). Child streams are
// keyed by (seed, label) so replicas and levels can draw independently
// without sequencing constraints.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(mix_(seed ^ kGolden)) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix_(state_);
    }

    // Unbiased uniform draw in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

    bool coin() { return next_u64() >> 63; }

    double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    RandomSource child(std::uint64_t label) const {
        return RandomSource(mix_(state_ ^ mix_(label + kGolden)));
    }

    RandomSource child(std::string_view label) const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char c : label) { h ^= std::uint8_t(c); h *= 1099511628211ull; }
        return child(h);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

    static std::uint64_t mix_(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace mixtime
