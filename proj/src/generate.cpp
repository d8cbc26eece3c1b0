#include "ccl/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccl {

BinaryImage random_image(std::uint32_t w, std::uint32_t h, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("density must be in [0, 1]");
    BinaryImage img(w, h);
    Xoshiro256ss rng(seed);
    // 2^53 threshold keeps the comparison exact in integers
    const std::uint64_t threshold = std::uint64_t(density * 9007199254740992.0);
    for (auto& px : img.data) px = (rng.next() >> 11) < threshold ? 1 : 0;
    return img;
}

PatternKind parse_pattern_kind(const std::string& s) {
    if (s == "stripes") return PatternKind::stripes;
    if (s == "spiral") return PatternKind::spiral;
    if (s == "blobs") return PatternKind::blobs;
    if (s == "checkerboard") return PatternKind::checkerboard;
    throw std::invalid_argument("unknown pattern kind: " + s);
}

namespace {

BinaryImage make_stripes(std::uint32_t w, std::uint32_t h, std::uint32_t period) {
    if (period < 2) throw std::invalid_argument("stripes period must be >= 2");
    BinaryImage img(w, h);
    const std::uint32_t thickness = period / 2;
    for (std::uint32_t y = 0; y < h; ++y) {
        if (y % period < thickness)
            std::fill_n(img.data.begin() + std::size_t(y) * w, w, std::uint8_t(1));
    }
    return img;
}

// Nested 1-pixel rectangular rings two apart, each bridged to the next:
// one connected component whose equivalence chains span the whole image.
BinaryImage make_spiral(std::uint32_t w, std::uint32_t h) {
    BinaryImage img(w, h);
    auto ring_exists = [&](std::uint32_t inset) {
        return 2 * inset < w && 2 * inset < h;
    };
    for (std::uint32_t inset = 0; ring_exists(inset); inset += 2) {
        const std::uint32_t x1 = w - 1 - inset, y1 = h - 1 - inset;
        for (std::uint32_t x = inset; x <= x1; ++x) {
            img.at(x, inset) = 1;
            img.at(x, y1) = 1;
        }
        for (std::uint32_t y = inset; y <= y1; ++y) {
            img.at(inset, y) = 1;
            img.at(x1, y) = 1;
        }
        if (ring_exists(inset + 2)) img.at(inset + 2, inset + 1) = 1;  // bridge inward
    }
    return img;
}

BinaryImage make_blobs(std::uint32_t w, std::uint32_t h, double density, std::uint64_t seed) {
    BinaryImage img(w, h);
    const double radius = std::max(2.0, std::min(w, h) / 16.0);
    const double area = 3.14159265358979323846 * radius * radius;
    const std::uint64_t count =
        std::max<std::uint64_t>(1, std::uint64_t(std::llround(density * w * h / area)));
    Xoshiro256ss rng(seed);
    const auto r2 = std::int64_t(radius * radius);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::int64_t cx = std::int64_t(rng.next() % w);
        const std::int64_t cy = std::int64_t(rng.next() % h);
        const std::int64_t r = std::int64_t(radius);
        for (std::int64_t y = std::max<std::int64_t>(0, cy - r);
             y <= std::min<std::int64_t>(h - 1, cy + r); ++y) {
            for (std::int64_t x = std::max<std::int64_t>(0, cx - r);
                 x <= std::min<std::int64_t>(w - 1, cx + r); ++x) {
                if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r2)
                    img.at(std::uint32_t(x), std::uint32_t(y)) = 1;
            }
        }
    }
    return img;
}

BinaryImage make_checkerboard(std::uint32_t w, std::uint32_t h) {
    BinaryImage img(w, h);
    for (std::uint32_t y = 0; y < h; ++y)
        for (std::uint32_t x = 0; x < w; ++x)
            if ((x + y) % 2 == 0) img.at(x, y) = 1;
    return img;
}

}  // namespace

BinaryImage pattern_image(PatternKind kind, std::uint32_t w, std::uint32_t h,
                          const PatternParams& params) {
    switch (kind) {
        case PatternKind::stripes: return make_stripes(w, h, params.period);
        case PatternKind::spiral: return make_spiral(w, h);
        case PatternKind::blobs: return make_blobs(w, h, params.density, params.seed);
        case PatternKind::checkerboard: return make_checkerboard(w, h);
    }
    throw std::invalid_argument("unknown pattern kind");
}

}  // namespace ccl
