// Command-line front end: label / verify / bench / generate.
// Exit codes: 0 ok, 1 parse or configuration error, 2 I/O error,
// 3 verification mismatch.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ccl/generate.hpp"
#include "ccl/label_io.hpp"
#include "ccl/oracle.hpp"
#include "ccl/pipeline.hpp"
#include "ccl/pnm.hpp"
#include "ccl/stats.hpp"

namespace {

using namespace ccl;

std::pair<std::uint32_t, std::uint32_t> parse_wxh(const std::string& s, const char* what) {
    auto pos = s.find('x');
    if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size())
        throw std::invalid_argument(std::string(what) + " must look like WxH: " + s);
    std::uint32_t a = 0, b = 0;
    try {
        a = std::uint32_t(std::stoul(s.substr(0, pos)));
        b = std::uint32_t(std::stoul(s.substr(pos + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " must look like WxH: " + s);
    }
    if (a == 0 || b == 0)
        throw std::invalid_argument(std::string(what) + " dimensions must be >= 1: " + s);
    return {a, b};
}

BlockConfig parse_block(const std::string& s) {
    auto [bw, bh] = parse_wxh(s, "--block");
    BlockConfig cfg;
    cfg.block_w = bw;
    cfg.block_h = bh;
    return cfg;
}

unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

Label count_components(const LabelMap& compacted) {
    Label k = 0;
    for (Label v : compacted.labels) k = std::max(k, v);
    return k;
}

std::uint64_t splitmix_step(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct LabelOpts {
    std::string in, out, metrics;
    std::string format = "raw";
    std::string block = "32x32";
    std::string variant = "c2fl";
    unsigned workers = default_workers();
    std::uint32_t threshold = 0;
};

int run_label(const LabelOpts& o) {
    BinaryImage img = read_binary_image(o.in, std::uint16_t(o.threshold));
    RunReport rep = label_image(img, parse_block(o.block), parse_variant(o.variant), o.workers);
    write_label_map(rep.label_map, o.out, parse_label_format(o.format));
    if (!o.metrics.empty()) write_metrics_csv(rep, o.metrics);
    LabelMap compacted = compact_labels(rep.label_map);
    std::printf("components=%u time=%.3fms\n", unsigned(count_components(compacted)),
                rep.wall_time.count());
    return 0;
}

struct VerifyOpts {
    std::string in;
    std::string block = "32x32";
    std::string variant = "c2fl";
    unsigned workers = default_workers();
    std::uint32_t threshold = 0;
    bool inject_fault = false;
};

int run_verify(const VerifyOpts& o) {
    BinaryImage img = read_binary_image(o.in, std::uint16_t(o.threshold));
    RunReport rep = label_image(img, parse_block(o.block), parse_variant(o.variant), o.workers);
    LabelMap got = compact_labels(rep.label_map);
    LabelMap want = compact_labels(sequential_ccl(img));
    if (o.inject_fault && !got.labels.empty()) got.labels[0] = got.labels[0] == 0 ? 1 : 0;
    for (std::size_t i = 0; i < got.labels.size(); ++i) {
        if (got.labels[i] != want.labels[i]) {
            std::printf("mismatch at x=%u y=%u: got %u expected %u\n",
                        unsigned(i % img.width), unsigned(i / img.width),
                        unsigned(got.labels[i]), unsigned(want.labels[i]));
            return 3;
        }
    }
    std::printf("ok components=%u\n", unsigned(count_components(want)));
    return 0;
}

struct GenerateOpts {
    std::string kind;
    std::string size;
    std::string out;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::uint32_t period = 2;
};

int run_generate(const GenerateOpts& o) {
    auto [w, h] = parse_wxh(o.size, "--size");
    BinaryImage img;
    if (o.kind == "random") {
        img = random_image(w, h, o.density, o.seed);
    } else {
        PatternParams params;
        params.period = o.period;
        params.density = o.density;
        params.seed = o.seed;
        img = pattern_image(parse_pattern_kind(o.kind), w, h, params);
    }
    write_pbm(img, o.out);
    return 0;
}

struct BenchOpts {
    std::string sizes = "32..4096";
    std::string densities = "0.1..0.9";
    std::string variants = "c2fl,rc2fl,cc2fl,nc2fl";
    std::string block = "32x32";
    std::string out;
    unsigned runs = 10;
    unsigned workers = default_workers();
    std::uint64_t seed = 42;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// "32..4096" doubles, otherwise a comma list
std::vector<std::uint32_t> parse_sizes(const std::string& s) {
    std::vector<std::uint32_t> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        std::uint32_t lo = std::uint32_t(std::stoul(s.substr(0, dots)));
        std::uint32_t hi = std::uint32_t(std::stoul(s.substr(dots + 2)));
        if (lo == 0 || hi < lo) throw std::invalid_argument("bad --sizes range: " + s);
        for (std::uint64_t v = lo; v <= hi; v *= 2) out.push_back(std::uint32_t(v));
        return out;
    }
    for (const auto& tok : split_csv(s)) {
        std::uint32_t v = std::uint32_t(std::stoul(tok));
        if (v == 0) throw std::invalid_argument("bad size: " + tok);
        out.push_back(v);
    }
    return out;
}

// "0.1..0.9" steps by 0.1, otherwise a comma list
std::vector<double> parse_densities(const std::string& s) {
    std::vector<double> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        double lo = std::stod(s.substr(0, dots));
        double hi = std::stod(s.substr(dots + 2));
        if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
            throw std::invalid_argument("bad --densities range: " + s);
        for (int i = 0;; ++i) {
            double d = lo + 0.1 * i;
            if (d > hi + 1e-9) break;
            out.push_back(d);
        }
        return out;
    }
    for (const auto& tok : split_csv(s)) {
        double d = std::stod(tok);
        if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("bad density: " + tok);
        out.push_back(d);
    }
    return out;
}

int run_bench(const BenchOpts& o) {
    const auto sizes = parse_sizes(o.sizes);
    const auto densities = parse_densities(o.densities);
    const BlockConfig cfg = parse_block(o.block);
    std::vector<Variant> variants;
    for (const auto& tok : split_csv(o.variants)) variants.push_back(parse_variant(tok));
    if (o.runs == 0) throw std::invalid_argument("--runs must be >= 1");

    const bool fresh = !std::filesystem::exists(o.out) || std::filesystem::file_size(o.out) == 0;
    std::ofstream out(o.out, std::ios::app);
    if (!out) throw IoError("cannot open " + o.out + " for writing");
    if (fresh)
        out << "size,density,variant,block_w,block_h,workers,runs,"
               "min_ms,max_ms,mean_ms,stddev_ms,mean_iterations,mean_atomics\n";

    for (std::uint32_t size : sizes) {
        for (double density : densities) {
            const std::uint64_t cell_seed =
                splitmix_step(splitmix_step(o.seed ^ size) ^
                              std::uint64_t(std::llround(density * 1000.0)));
            const BinaryImage img = random_image(size, size, density, cell_seed);
            for (Variant v : variants) {
                std::vector<double> times;
                double iters = 0.0, atomics = 0.0;
                times.reserve(o.runs);
                for (unsigned r = 0; r < o.runs; ++r) {
                    RunReport rep = label_image(img, cfg, v, o.workers);
                    times.push_back(rep.wall_time.count());
                    MetricsSummary s = aggregate_metrics(rep);
                    iters += s.mean_iterations;
                    atomics += s.mean_atomics;
                }
                Stats st = compute_stats(times);
                out << size << ',' << density << ',' << to_string(v) << ',' << cfg.block_w
                    << ',' << cfg.block_h << ',' << o.workers << ',' << o.runs << ','
                    << st.min << ',' << st.max << ',' << st.mean << ',' << st.stddev << ','
                    << iters / o.runs << ',' << atomics / o.runs << '\n';
                out.flush();
                std::fprintf(stderr, "bench size=%u density=%.2f variant=%s mean=%.3fms\n",
                             size, density, to_string(v), st.mean);
            }
        }
    }
    if (!out) throw IoError("write failed: " + o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block-based parallel connected components labeling"};
    app.require_subcommand(1);

    LabelOpts lo;
    auto* label = app.add_subcommand("label", "Label an image and write the result");
    label->add_option("--in", lo.in, "input PBM/PGM")->required();
    label->add_option("--out", lo.out, "output label map")->required();
    label->add_option("--format", lo.format, "raw|csv|pgm16");
    label->add_option("--block", lo.block, "block shape BXxBY");
    label->add_option("--variant", lo.variant, "c2fl|rc2fl|cc2fl|nc2fl");
    label->add_option("--workers", lo.workers, "worker threads")->envname("CCL_WORKERS");
    label->add_option("--threshold", lo.threshold, "PGM foreground threshold");
    label->add_option("--metrics", lo.metrics, "write per-block metrics CSV here");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Compare against the sequential oracle");
    verify->add_option("--in", vo.in, "input PBM/PGM")->required();
    verify->add_option("--block", vo.block, "block shape BXxBY");
    verify->add_option("--variant", vo.variant, "c2fl|rc2fl|cc2fl|nc2fl");
    verify->add_option("--workers", vo.workers, "worker threads")->envname("CCL_WORKERS");
    verify->add_option("--threshold", vo.threshold, "PGM foreground threshold");
    verify->add_flag("--inject-fault", vo.inject_fault)->group("");  // test hook

    GenerateOpts go;
    auto* generate = app.add_subcommand("generate", "Write a synthetic PBM");
    generate->add_option("--kind", go.kind, "random|stripes|spiral|blobs|checkerboard")
        ->required();
    generate->add_option("--size", go.size, "WxH")->required();
    generate->add_option("--out", go.out, "output PBM path")->required();
    generate->add_option("--density", go.density, "foreground density (random, blobs)");
    generate->add_option("--seed", go.seed, "generator seed");
    generate->add_option("--period", go.period, "stripe period");

    BenchOpts bo;
    auto* bench = app.add_subcommand("bench", "Density/size sweep, appends CSV rows");
    bench->add_option("--sizes", bo.sizes, "comma list or lo..hi (doubling)");
    bench->add_option("--densities", bo.densities, "comma list or lo..hi (step 0.1)");
    bench->add_option("--variants", bo.variants, "comma list");
    bench->add_option("--block", bo.block, "block shape BXxBY");
    bench->add_option("--runs", bo.runs, "repetitions per cell");
    bench->add_option("--seed", bo.seed, "sweep seed");
    bench->add_option("--workers", bo.workers, "worker threads")->envname("CCL_WORKERS");
    bench->add_option("--out", bo.out, "output CSV")->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(label)) return run_label(lo);
        if (app.got_subcommand(verify)) return run_verify(vo);
        if (app.got_subcommand(generate)) return run_generate(go);
        if (app.got_subcommand(bench)) return run_bench(bo);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ccl::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ccl::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
