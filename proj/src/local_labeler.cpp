#include "ccl/local_labeler.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccl {

BlockView init_block(const BinaryImage& img, std::uint32_t x0, std::uint32_t y0,
                     const BlockConfig& cfg) {
    if (x0 >= img.width || y0 >= img.height)
        throw std::invalid_argument("block origin outside image");
    if (x0 % cfg.block_w != 0 || y0 % cfg.block_h != 0)
        throw std::invalid_argument("block origin not aligned to block grid");

    BlockView bv;
    bv.x0 = x0;
    bv.y0 = y0;
    bv.width = std::min(cfg.block_w, img.width - x0);
    bv.height = std::min(cfg.block_h, img.height - y0);
    bv.image_width = img.width;
    bv.pixels.resize(std::size_t(bv.width) * bv.height);
    for (std::uint32_t ly = 0; ly < bv.height; ++ly) {
        const std::uint8_t* src = img.data.data() + x0 + std::size_t(y0 + ly) * img.width;
        std::copy(src, src + bv.width, bv.pixels.data() + std::size_t(ly) * bv.width);
    }
    bv.forest = LabelForest(bv.slots());
    return bv;
}

void coarse_row_scan(BlockView& bv) {
    const std::size_t n = bv.slots();
    std::vector<Label> snap(n);
    for (std::size_t i = 0; i < n; ++i) snap[i] = bv.forest.parent(i);
    for (std::size_t i = 0; i < n; ++i) {
        if (i % bv.width != 0 && bv.pixels[i] == bv.pixels[i - 1])
            bv.forest.set_parent(i, snap[i - 1]);
    }
}

void coarse_column_scan(BlockView& bv) {
    const std::size_t n = bv.slots();
    std::vector<Label> snap(n);
    for (std::size_t i = 0; i < n; ++i) snap[i] = bv.forest.parent(i);
    for (std::size_t i = bv.width; i < n; ++i) {
        if (bv.pixels[i] == bv.pixels[i - bv.width])
            bv.forest.set_parent(i, snap[i - bv.width]);
    }
}

void flatten_all(BlockView& bv, BlockMetrics& m) {
    const std::size_t n = bv.slots();
    for (std::size_t i = 0; i < n; ++i) flatten(bv.forest, Label(i), m);
}

void refine(BlockView& bv, RefineDirection dir, BlockMetrics& m) {
    const std::size_t n = bv.slots();
    if (dir == RefineDirection::rows) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i % bv.width != 0 && bv.pixels[i] == 1 && bv.pixels[i - 1] == 1)
                merge(bv.forest, Label(i), Label(i - 1), m);
        }
    } else {
        for (std::size_t i = bv.width; i < n; ++i) {
            if (bv.pixels[i] == 1 && bv.pixels[i - bv.width] == 1)
                merge(bv.forest, Label(i), Label(i - bv.width), m);
        }
    }
}

void label_block(BlockView& bv, Variant variant, BlockMetrics& m) {
    switch (variant) {
        case Variant::C2FL:
            coarse_row_scan(bv);
            coarse_column_scan(bv);
            break;
        case Variant::RC2FL:
            coarse_row_scan(bv);
            break;
        case Variant::CC2FL:
            coarse_column_scan(bv);
            break;
        case Variant::NC2FL:
            break;
    }
    flatten_all(bv, m);
    switch (variant) {
        case Variant::C2FL:
        case Variant::CC2FL:
            refine(bv, RefineDirection::rows, m);
            break;
        case Variant::RC2FL:
            refine(bv, RefineDirection::columns, m);
            break;
        case Variant::NC2FL:
            refine(bv, RefineDirection::rows, m);
            refine(bv, RefineDirection::columns, m);
            break;
    }
    flatten_all(bv, m);
}

void convert_ids(const BlockView& bv, LabelForest& global) {
    const std::size_t n = bv.slots();
    for (std::size_t i = 0; i < n; ++i) {
        Label root = bv.forest.parent(i);  // flattened by label_block
        std::uint32_t rx = bv.x0 + Label(root) % bv.width;
        std::uint32_t ry = bv.y0 + Label(root) / bv.width;
        std::uint32_t lx = bv.x0 + std::uint32_t(i) % bv.width;
        std::uint32_t ly = bv.y0 + std::uint32_t(i) / bv.width;
        global.set_parent(position(lx, ly, bv.image_width), position(rx, ry, bv.image_width));
    }
}

}  // namespace ccl
