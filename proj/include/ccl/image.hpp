#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccl {

using Label = std::uint32_t;

// Background marker in raw-root label maps. Deliberately not 0: raster
// index 0 is a legal component root.
inline constexpr Label kBackground = std::numeric_limits<Label>::max();

/// 2D binary image, row-major, top-left origin. data[i] is 0 or 1.
struct BinaryImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> data;

    BinaryImage() = default;
    BinaryImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0)
        : width(w), height(h), data(check_size(w, h), fill) {}

    std::size_t pixel_count() const { return data.size(); }
    std::uint8_t at(std::uint32_t x, std::uint32_t y) const { return data[x + std::size_t(y) * width]; }
    std::uint8_t& at(std::uint32_t x, std::uint32_t y) { return data[x + std::size_t(y) * width]; }

    static std::size_t check_size(std::uint32_t w, std::uint32_t h) {
        if (w == 0 || h == 0)
            throw std::invalid_argument("image dimensions must be at least 1x1");
        std::uint64_t n = std::uint64_t(w) * h;
        if (n > std::uint64_t(kBackground) - 1)
            throw std::invalid_argument("image exceeds 2^32-2 pixels");
        return std::size_t(n);
    }
};

/// Per-pixel component labels. Raw-root form stores the minimum raster
/// index of each component with kBackground for background; compacted
/// form stores 1..K with 0 for background.
struct LabelMap {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<Label> labels;
    bool compacted = false;

    LabelMap() = default;
    LabelMap(std::uint32_t w, std::uint32_t h, Label fill = kBackground)
        : width(w), height(h), labels(BinaryImage::check_size(w, h), fill) {}
};

/// Tile shape for block decomposition. The slot ceiling bounds per-block
/// scratch buffers (the shared-memory analogue).
struct BlockConfig {
    std::uint32_t block_w = 32;
    std::uint32_t block_h = 32;
    std::uint32_t slot_ceiling = 4096;

    std::size_t slots() const { return std::size_t(block_w) * block_h; }
    bool valid() const {
        return block_w >= 1 && block_h >= 1 && slots() <= slot_ceiling;
    }
};

/// Which coarse scans run and which directions refinement merges:
///   C2FL  - row scan + column scan, refine rows
///   RC2FL - row scan only,          refine columns
///   CC2FL - column scan only,       refine rows
///   NC2FL - no coarse scan,         refine rows then columns
enum class Variant { C2FL, RC2FL, CC2FL, NC2FL };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::C2FL: return "c2fl";
        case Variant::RC2FL: return "rc2fl";
        case Variant::CC2FL: return "cc2fl";
        case Variant::NC2FL: return "nc2fl";
    }
    return "?";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "c2fl") return Variant::C2FL;
    if (s == "rc2fl") return Variant::RC2FL;
    if (s == "cc2fl") return Variant::CC2FL;
    if (s == "nc2fl") return Variant::NC2FL;
    throw std::invalid_argument("unknown variant: " + s);
}

/// Raster position of (x, y) in a width-w image.
inline Label position(std::uint32_t x, std::uint32_t y, std::uint32_t w) {
    return x + y * w;
}

struct BlockCoord {
    std::uint32_t block_col = 0;
    std::uint32_t block_row = 0;
    std::uint32_t local_x = 0;
    std::uint32_t local_y = 0;
};

/// Inverse of the block/local index arithmetic: which block holds pixel p
/// and where inside it.
inline BlockCoord block_of(Label p, const BinaryImage& img, const BlockConfig& cfg) {
    std::uint32_t x = p % img.width;
    std::uint32_t y = p / img.width;
    return {x / cfg.block_w, y / cfg.block_h, x % cfg.block_w, y % cfg.block_h};
}

}  // namespace ccl
