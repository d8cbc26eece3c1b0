#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccl/forest.hpp"
#include "ccl/image.hpp"

namespace ccl {

/// Enumeration of the pixel pairs straddling interior block boundaries:
/// vertical pairs (p, p-1) with x a positive multiple of block_w,
/// horizontal pairs (p, p-W) with y a positive multiple of block_h.
/// border_px_x / border_px_y are the border-pixel counts
/// floor(W/b_x)*H and floor(H/b_y)*W.
struct BorderPlan {
    std::vector<std::pair<Label, Label>> vertical_pairs;
    std::vector<std::pair<Label, Label>> horizontal_pairs;
    std::uint64_t border_px_x = 0;
    std::uint64_t border_px_y = 0;

    std::size_t pair_count() const { return vertical_pairs.size() + horizontal_pairs.size(); }
};

BorderPlan plan_borders(const BinaryImage& img, const BlockConfig& cfg);

/// One pass over the plan: merge the global forest across every planned
/// pair whose two pixels are both foreground. A single pass suffices
/// because merge() performs full transitive union. Pairs may be processed
/// by several workers concurrently; counters deterministic for workers==1.
void merge_borders(const BorderPlan& plan, const BinaryImage& img, LabelForest& global,
                   BlockMetrics& m, unsigned workers = 1);

/// Per-pixel root lookup into a raw-root label map: foreground pixels get
/// their component root, background gets the sentinel. Flattens the forest
/// as a side effect.
LabelMap resolve_global(const BinaryImage& img, LabelForest& global, BlockMetrics& m,
                        unsigned workers = 1);

}  // namespace ccl
