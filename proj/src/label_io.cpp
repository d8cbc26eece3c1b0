#include "ccl/label_io.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

namespace ccl {

namespace {

using Kind = ParseError::Kind;

void put_u32le(std::ostream& out, std::uint32_t v) {
    char b[4] = {char(v & 0xFF), char((v >> 8) & 0xFF), char((v >> 16) & 0xFF),
                 char((v >> 24) & 0xFF)};
    out.write(b, 4);
}

std::uint32_t get_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (in.gcount() != 4) throw ParseError(Kind::truncated, "truncated CCLM file");
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
           std::uint32_t(b[3]) << 24;
}

void write_raw(const LabelMap& lm, std::ostream& out) {
    out.write("CCLM", 4);
    out.put(char(1));
    put_u32le(out, lm.width);
    put_u32le(out, lm.height);
    for (Label v : lm.labels) put_u32le(out, v);
}

void write_csv(const LabelMap& lm, std::ostream& out) {
    for (std::uint32_t y = 0; y < lm.height; ++y) {
        for (std::uint32_t x = 0; x < lm.width; ++x) {
            if (x) out << ',';
            out << lm.labels[x + std::size_t(y) * lm.width];
        }
        out << '\n';
    }
}

void write_pgm16(const LabelMap& lm, std::ostream& out) {
    Label maxlabel = 0;
    for (Label v : lm.labels) maxlabel = std::max(maxlabel, v);
    if (maxlabel > 65535)
        throw std::overflow_error("pgm16 cannot represent more than 65535 components");
    out << "P5\n" << lm.width << " " << lm.height << "\n" << std::max<Label>(maxlabel, 1) << "\n";
    for (Label v : lm.labels) {
        out.put(char((v >> 8) & 0xFF));
        out.put(char(v & 0xFF));
    }
}

}  // namespace

LabelMapFormat parse_label_format(const std::string& s) {
    if (s == "raw") return LabelMapFormat::raw;
    if (s == "csv") return LabelMapFormat::csv;
    if (s == "pgm16") return LabelMapFormat::pgm16;
    throw std::invalid_argument("unknown label map format: " + s);
}

void write_label_map(const LabelMap& lm, const std::string& path, LabelMapFormat format) {
    const LabelMap compact = compact_labels(lm);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    switch (format) {
        case LabelMapFormat::raw: write_raw(compact, out); break;
        case LabelMapFormat::csv: write_csv(compact, out); break;
        case LabelMapFormat::pgm16: write_pgm16(compact, out); break;
    }
    if (!out) throw IoError("write failed: " + path);
}

LabelMap read_label_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::string(magic, 4) != "CCLM")
        throw ParseError(Kind::unsupported_magic, "not a CCLM file: " + path);
    int version = in.get();
    if (version != 1) throw ParseError(Kind::bad_header, "unsupported CCLM version");
    const std::uint32_t w = get_u32le(in);
    const std::uint32_t h = get_u32le(in);
    if (w == 0 || h == 0) throw ParseError(Kind::bad_header, "zero dimension in CCLM header");
    LabelMap lm(w, h, 0);
    lm.compacted = true;
    for (auto& v : lm.labels) v = get_u32le(in);
    return lm;
}

void write_metrics_csv(const RunReport& report, const std::string& path,
                       std::optional<double> density) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const MetricsSummary s = aggregate_metrics(report);
    const bool empty = report.per_block.empty();

    auto write_grid = [&](const char* name, const std::vector<std::uint64_t>& grid) {
        out << name << '\n';
        for (std::uint32_t gy = 0; gy < s.grid_h; ++gy) {
            for (std::uint32_t gx = 0; gx < s.grid_w; ++gx) {
                if (gx) out << ',';
                out << grid[gx + std::size_t(gy) * s.grid_w];
            }
            out << '\n';
        }
    };
    write_grid("iterations", s.iterations_grid);
    write_grid("atomics", s.atomics_grid);

    out << "width,height,block_w,block_h,density,variant,mean_iterations,mean_atomics,wall_ms\n";
    if (!empty) {
        out << report.label_map.width << ',' << report.label_map.height << ','
            << report.cfg.block_w << ',' << report.cfg.block_h << ',';
        if (density) out << *density;
        out << ',' << to_string(report.variant) << ',' << s.mean_iterations << ','
            << s.mean_atomics << ',' << report.wall_time.count() << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace ccl
