#include "ccl/boundary.hpp"

#include "ccl/parallel.hpp"

namespace ccl {

BorderPlan plan_borders(const BinaryImage& img, const BlockConfig& cfg) {
    BorderPlan plan;
    plan.border_px_x = std::uint64_t(img.width / cfg.block_w) * img.height;
    plan.border_px_y = std::uint64_t(img.height / cfg.block_h) * img.width;
    for (std::uint32_t x = cfg.block_w; x < img.width; x += cfg.block_w)
        for (std::uint32_t y = 0; y < img.height; ++y)
            plan.vertical_pairs.emplace_back(position(x, y, img.width),
                                             position(x - 1, y, img.width));
    for (std::uint32_t y = cfg.block_h; y < img.height; y += cfg.block_h)
        for (std::uint32_t x = 0; x < img.width; ++x)
            plan.horizontal_pairs.emplace_back(position(x, y, img.width),
                                               position(x, y - 1, img.width));
    return plan;
}

void merge_borders(const BorderPlan& plan, const BinaryImage& img, LabelForest& global,
                   BlockMetrics& m, unsigned workers) {
    const std::size_t nv = plan.vertical_pairs.size();
    const std::size_t total = plan.pair_count();
    std::vector<BlockMetrics> scratch(std::max(1u, workers));
    parallel_chunks(workers, total, 2048, [&](unsigned id, std::size_t b, std::size_t e) {
        BlockMetrics& wm = scratch[id];
        for (std::size_t i = b; i < e; ++i) {
            auto [p, q] = i < nv ? plan.vertical_pairs[i] : plan.horizontal_pairs[i - nv];
            if (img.data[p] == 1 && img.data[q] == 1) merge(global, p, q, wm);
        }
    });
    for (const auto& wm : scratch) m += wm;
}

LabelMap resolve_global(const BinaryImage& img, LabelForest& global, BlockMetrics& m,
                        unsigned workers) {
    LabelMap lm(img.width, img.height);
    std::vector<BlockMetrics> scratch(std::max(1u, workers));
    parallel_chunks(workers, img.pixel_count(), 8192, [&](unsigned id, std::size_t b, std::size_t e) {
        BlockMetrics& wm = scratch[id];
        for (std::size_t p = b; p < e; ++p) {
            if (img.data[p] == 1) {
                Label r = find_root(global, Label(p), wm);
                global.set_parent(p, r);
                lm.labels[p] = r;
            } else {
                lm.labels[p] = kBackground;
            }
        }
    });
    for (const auto& wm : scratch) m += wm;
    return lm;
}

}  // namespace ccl
