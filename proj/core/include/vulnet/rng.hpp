#pragma once

#include <cassert>
#include <cstdint>

namespace vulnet {

// PCG XSH RR 64/32 (O'Neill's reference constants); tiny and bit-identical
// across platforms, which the seeded generators and samplers rely on
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) {
        inc_ = (stream << 1) | 1u;
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        auto xorshifted = static_cast<std::uint32_t>(((old >> 18) ^ old) >> 27);
        auto rot = static_cast<std::uint32_t>(old >> 59);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // unbiased draw in [0, bound) by rejection
    std::uint32_t bounded(std::uint32_t bound) {
        assert(bound > 0);
        std::uint32_t threshold = (~bound + 1u) % bound; // 2^32 mod bound
        for (;;) {
            std::uint32_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // same, for 64-bit bounds; always consumes draws in pairs
    std::uint64_t bounded64(std::uint64_t bound) {
        assert(bound > 0);
        std::uint64_t threshold = (~bound + 1u) % bound;
        for (;;) {
            std::uint64_t hi = next(); // sequenced: high word first
            std::uint64_t lo = next();
            std::uint64_t r = (hi << 32) | lo;
            if (r >= threshold) return r % bound;
        }
    }

    // uniform in [0, 1)
    double uniform() { return next() * 0x1p-32; }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 1;
};

} // namespace vulnet
