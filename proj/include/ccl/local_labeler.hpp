#pragma once

#include <cstdint>
#include <vector>

#include "ccl/forest.hpp"
#include "ccl/image.hpp"

namespace ccl {

/// One block's working state: an immutable intensity snapshot of the
/// sub-image plus a local forest over its slots. Local slot id
/// tid == local_x + local_y * width.
struct BlockView {
    std::uint32_t x0 = 0;
    std::uint32_t y0 = 0;
    std::uint32_t width = 0;   // truncated extent, <= cfg.block_w
    std::uint32_t height = 0;  // truncated extent, <= cfg.block_h
    std::uint32_t image_width = 0;
    std::vector<std::uint8_t> pixels;
    LabelForest forest;

    std::size_t slots() const { return pixels.size(); }
};

enum class RefineDirection { rows, columns };

/// Snapshot the sub-image at origin (x0, y0) and set every local slot to
/// be its own provisional label. Edge blocks are truncated to the image.
/// Throws std::invalid_argument if the origin is outside the image or not
/// aligned to the block grid.
BlockView init_block(const BinaryImage& img, std::uint32_t x0, std::uint32_t y0,
                     const BlockConfig& cfg);

/// Coarse scans: link each slot to its left (row) / upper (column)
/// neighbour's parent when the two snapshot intensities are equal. Reads
/// the previous phase's forest through a snapshot, so the result is a pure
/// function of the block's intensities.
void coarse_row_scan(BlockView& bv);
void coarse_column_scan(BlockView& bv);

/// Point every slot at its root, in ascending slot order.
void flatten_all(BlockView& bv, BlockMetrics& m);

/// Merge every adjacent same-intensity foreground pair along the given
/// direction. Requires a flatten after the coarse scans.
void refine(BlockView& bv, RefineDirection dir, BlockMetrics& m);

/// Full local labeling: the variant's coarse scans, a flatten, the
/// variant's refinement merges, and a final flatten. Afterwards every
/// foreground slot's parent is the minimum slot index of its 4-connected
/// foreground component within the block.
void label_block(BlockView& bv, Variant variant, BlockMetrics& m);

/// Rewrite each slot's local root as a global raster position and store it
/// at the slot's global position. Writes go to distinct global slots.
void convert_ids(const BlockView& bv, LabelForest& global);

}  // namespace ccl
