#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "ccl/forest.hpp"
#include "ccl/image.hpp"

namespace ccl {

/// Everything one labeling run produces. per_block holds the local-phase
/// counters of each block (row-major block grid); the border-merge and
/// resolve phases are variant-independent and aggregated separately.
struct RunReport {
    LabelMap label_map;  // raw-root form
    std::vector<BlockMetrics> per_block;
    std::uint32_t blocks_x = 0;
    std::uint32_t blocks_y = 0;
    BlockMetrics border_phase;
    BlockMetrics resolve_phase;
    std::chrono::duration<double, std::milli> wall_time{0};
    Variant variant = Variant::C2FL;
    BlockConfig cfg;
    unsigned worker_count = 1;
};

/// The full three-step method: local labeling of every block, one border
/// merge pass, global resolve. Output label map is identical for any
/// worker count. wall_time covers the three steps only.
/// Throws std::invalid_argument for a block config over the scratch
/// ceiling or workers == 0.
RunReport label_image(const BinaryImage& img, const BlockConfig& cfg, Variant variant,
                      unsigned workers = 1);

/// Renumber a raw-root map to dense labels 1..K in raster order of first
/// appearance, background 0. Idempotent.
LabelMap compact_labels(const LabelMap& lm);

struct MetricsSummary {
    double mean_iterations = 0.0;
    double mean_atomics = 0.0;
    std::uint32_t grid_w = 0;
    std::uint32_t grid_h = 0;
    std::vector<std::uint64_t> iterations_grid;  // row-major blocks_x * blocks_y
    std::vector<std::uint64_t> atomics_grid;
};

/// Per-block means plus the per-block counter grids for heat-map export.
MetricsSummary aggregate_metrics(const RunReport& report);

}  // namespace ccl
