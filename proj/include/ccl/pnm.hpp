#pragma once

#include <cstdint>
#include <string>

#include "ccl/errors.hpp"
#include "ccl/image.hpp"

namespace ccl {

/// Read a PBM (P1/P4) directly or a PGM (P2/P5) thresholded to binary:
/// foreground iff value > threshold. Row-major, top-left origin.
BinaryImage read_binary_image(const std::string& path, std::uint16_t threshold = 0);

/// Write a PBM, raw (P4) by default or plain (P1).
void write_pbm(const BinaryImage& img, const std::string& path, bool plain = false);

}  // namespace ccl
