#include "ccl/pnm.hpp"

#include <cctype>
#include <fstream>
#include <vector>

namespace ccl {

namespace {

using Kind = ParseError::Kind;

// skip whitespace and '#' comments between header tokens
void skip_separators(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
        } else if (std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

std::uint64_t read_header_int(std::istream& in, const char* what) {
    skip_separators(in);
    int c = in.peek();
    if (c == EOF || !std::isdigit(c))
        throw ParseError(Kind::bad_header, std::string("malformed header: expected ") + what);
    std::uint64_t v = 0;
    while ((c = in.peek()) != EOF && std::isdigit(c)) {
        v = v * 10 + std::uint64_t(in.get() - '0');
        if (v > 0xFFFFFFFFull)
            throw ParseError(Kind::bad_header, std::string("header value out of range: ") + what);
    }
    return v;
}

// binary rasters start after exactly one whitespace character
void expect_single_whitespace(std::istream& in) {
    int c = in.get();
    if (c == EOF || !std::isspace(c))
        throw ParseError(Kind::bad_header, "malformed header: missing raster separator");
}

void read_p1(std::istream& in, BinaryImage& img) {
    for (std::size_t i = 0; i < img.pixel_count();) {
        int c = in.get();
        if (c == EOF) throw ParseError(Kind::truncated, "truncated P1 raster");
        if (std::isspace(c)) continue;
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (c != '0' && c != '1')
            throw ParseError(Kind::bad_value, "P1 raster contains a non-bit character");
        img.data[i++] = std::uint8_t(c - '0');
    }
}

void read_p4(std::istream& in, BinaryImage& img) {
    const std::size_t row_bytes = (img.width + 7) / 8;
    std::vector<char> row(row_bytes);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        in.read(row.data(), std::streamsize(row_bytes));
        if (std::size_t(in.gcount()) != row_bytes)
            throw ParseError(Kind::truncated, "truncated P4 raster");
        for (std::uint32_t x = 0; x < img.width; ++x) {
            std::uint8_t byte = std::uint8_t(row[x / 8]);
            img.at(x, y) = (byte >> (7 - x % 8)) & 1;
        }
    }
}

void read_p2(std::istream& in, BinaryImage& img, std::uint64_t maxval, std::uint16_t threshold) {
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        skip_separators(in);
        if (in.peek() == EOF) throw ParseError(Kind::truncated, "truncated P2 raster");
        std::uint64_t v = read_header_int(in, "P2 sample");
        if (v > maxval) throw ParseError(Kind::bad_value, "P2 sample exceeds maxval");
        img.data[i] = v > threshold ? 1 : 0;
    }
}

void read_p5(std::istream& in, BinaryImage& img, std::uint64_t maxval, std::uint16_t threshold) {
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    const std::size_t row_bytes = std::size_t(img.width) * sample_bytes;
    std::vector<unsigned char> row(row_bytes);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), std::streamsize(row_bytes));
        if (std::size_t(in.gcount()) != row_bytes)
            throw ParseError(Kind::truncated, "truncated P5 raster");
        for (std::uint32_t x = 0; x < img.width; ++x) {
            std::uint32_t v = sample_bytes == 2
                                  ? (std::uint32_t(row[2 * x]) << 8) | row[2 * x + 1]
                                  : row[x];
            img.at(x, y) = v > threshold ? 1 : 0;
        }
    }
}

}  // namespace

BinaryImage read_binary_image(const std::string& path, std::uint16_t threshold) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P')
        throw ParseError(Kind::unsupported_magic, "not a PNM file: " + path);
    if (magic[1] != '1' && magic[1] != '2' && magic[1] != '4' && magic[1] != '5')
        throw ParseError(Kind::unsupported_magic,
                         std::string("unsupported PNM type P") + magic[1]);

    const std::uint64_t w = read_header_int(in, "width");
    const std::uint64_t h = read_header_int(in, "height");
    if (w == 0 || h == 0) throw ParseError(Kind::bad_header, "zero image dimension");

    std::uint64_t maxval = 1;
    if (magic[1] == '2' || magic[1] == '5') {
        maxval = read_header_int(in, "maxval");
        if (maxval == 0 || maxval > 65535)
            throw ParseError(Kind::bad_header, "maxval out of range");
    }

    BinaryImage img(std::uint32_t(w), std::uint32_t(h));
    switch (magic[1]) {
        case '1':
            read_p1(in, img);
            break;
        case '4':
            expect_single_whitespace(in);
            read_p4(in, img);
            break;
        case '2':
            read_p2(in, img, maxval, threshold);
            break;
        case '5':
            expect_single_whitespace(in);
            read_p5(in, img, maxval, threshold);
            break;
    }
    return img;
}

void write_pbm(const BinaryImage& img, const std::string& path, bool plain) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (plain) {
        out << "P1\n" << img.width << " " << img.height << "\n";
        for (std::uint32_t y = 0; y < img.height; ++y) {
            for (std::uint32_t x = 0; x < img.width; ++x) {
                if (x) out << ' ';
                out << int(img.at(x, y));
            }
            out << '\n';
        }
    } else {
        out << "P4\n" << img.width << " " << img.height << "\n";
        const std::size_t row_bytes = (img.width + 7) / 8;
        std::vector<char> row(row_bytes);
        for (std::uint32_t y = 0; y < img.height; ++y) {
            std::fill(row.begin(), row.end(), 0);
            for (std::uint32_t x = 0; x < img.width; ++x)
                if (img.at(x, y)) row[x / 8] |= char(1 << (7 - x % 8));
            out.write(row.data(), std::streamsize(row_bytes));
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace ccl
