#pragma once

#include <cstdint>
#include <string>

#include "ccl/image.hpp"

namespace ccl {

/**
 * xoshiro256** with splitmix64 seeding. Fixed as the project generator so
 * that a stream is defined by the seed alone and images are reproducible
 * byte-for-byte across platforms and languages.
 */
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : s_) {
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            s = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t s_[4];
};

/// Each pixel independently foreground with the given probability, raster
/// order, one 64-bit draw per pixel: fg iff (next() >> 11) < density * 2^53.
BinaryImage random_image(std::uint32_t w, std::uint32_t h, double density, std::uint64_t seed);

enum class PatternKind { stripes, spiral, blobs, checkerboard };

PatternKind parse_pattern_kind(const std::string& s);  // invalid_argument on unknown

struct PatternParams {
    std::uint32_t period = 2;   // stripes: band period (>= 2)
    double density = 0.5;       // blobs: target coverage
    std::uint64_t seed = 0;     // blobs: placement stream
};

/// Deterministic structured test patterns. stripes: ceil(h/period)
/// horizontal bands; spiral: a single long component of nested connected
/// rings (worst case for chain length); blobs: seeded filled discs;
/// checkerboard: isolated foreground pixels.
BinaryImage pattern_image(PatternKind kind, std::uint32_t w, std::uint32_t h,
                          const PatternParams& params = {});

}  // namespace ccl
