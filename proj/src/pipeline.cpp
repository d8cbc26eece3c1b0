#include "ccl/pipeline.hpp"

#include <stdexcept>

#include "ccl/boundary.hpp"
#include "ccl/local_labeler.hpp"
#include "ccl/parallel.hpp"

namespace ccl {

RunReport label_image(const BinaryImage& img, const BlockConfig& cfg, Variant variant,
                      unsigned workers) {
    if (!cfg.valid())
        throw std::invalid_argument("block configuration invalid or over the scratch ceiling");
    if (workers == 0) throw std::invalid_argument("workers must be >= 1");

    RunReport rep;
    rep.variant = variant;
    rep.cfg = cfg;
    rep.worker_count = workers;
    rep.blocks_x = (img.width + cfg.block_w - 1) / cfg.block_w;
    rep.blocks_y = (img.height + cfg.block_h - 1) / cfg.block_h;
    const std::size_t nblocks = std::size_t(rep.blocks_x) * rep.blocks_y;
    rep.per_block.resize(nblocks);

    const auto t0 = std::chrono::steady_clock::now();

    LabelForest global(img.pixel_count());

    // step 1: independent local labeling of every block
    parallel_chunks(workers, nblocks, 1, [&](unsigned, std::size_t b, std::size_t e) {
        for (std::size_t bi = b; bi < e; ++bi) {
            std::uint32_t bc = std::uint32_t(bi) % rep.blocks_x;
            std::uint32_t br = std::uint32_t(bi) / rep.blocks_x;
            BlockView bv = init_block(img, bc * cfg.block_w, br * cfg.block_h, cfg);
            BlockMetrics& m = rep.per_block[bi];
            m.block_id = std::uint32_t(bi);
            label_block(bv, variant, m);
            convert_ids(bv, global);
        }
    });

    // step 2: one border-merge pass
    BorderPlan plan = plan_borders(img, cfg);
    merge_borders(plan, img, global, rep.border_phase, workers);

    // step 3: global resolve
    rep.label_map = resolve_global(img, global, rep.resolve_phase, workers);

    rep.wall_time = std::chrono::steady_clock::now() - t0;
    return rep;
}

LabelMap compact_labels(const LabelMap& lm) {
    if (lm.compacted) return lm;
    LabelMap out(lm.width, lm.height, 0);
    out.compacted = true;
    std::vector<Label> remap(lm.labels.size(), 0);
    Label next = 0;
    for (std::size_t i = 0; i < lm.labels.size(); ++i) {
        Label raw = lm.labels[i];
        if (raw == kBackground) {
            out.labels[i] = 0;
            continue;
        }
        if (remap[raw] == 0) remap[raw] = ++next;
        out.labels[i] = remap[raw];
    }
    return out;
}

MetricsSummary aggregate_metrics(const RunReport& report) {
    MetricsSummary s;
    s.grid_w = report.blocks_x;
    s.grid_h = report.blocks_y;
    const std::size_t n = report.per_block.size();
    s.iterations_grid.reserve(n);
    s.atomics_grid.reserve(n);
    std::uint64_t it = 0, at = 0;
    for (const auto& m : report.per_block) {
        s.iterations_grid.push_back(m.findroot_iterations);
        s.atomics_grid.push_back(m.atomic_ops);
        it += m.findroot_iterations;
        at += m.atomic_ops;
    }
    if (n > 0) {
        s.mean_iterations = double(it) / double(n);
        s.mean_atomics = double(at) / double(n);
    }
    return s;
}

}  // namespace ccl
