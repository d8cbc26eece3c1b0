#pragma once

#include <optional>
#include <string>

#include "ccl/errors.hpp"
#include "ccl/image.hpp"
#include "ccl/pipeline.hpp"

namespace ccl {

enum class LabelMapFormat { raw, csv, pgm16 };

LabelMapFormat parse_label_format(const std::string& s);  // invalid_argument on unknown

/// Write a label map, compacting first so files never carry the sentinel.
///   raw   - "CCLM" magic, version byte 1, width and height as 32-bit LE,
///           then width*height 32-bit LE labels (background 0). Bit-exact.
///   csv   - one line per image row, comma-separated labels, LF endings.
///   pgm16 - P5 with 16-bit samples for quick visual inspection; throws
///           std::overflow_error past 65535 components.
void write_label_map(const LabelMap& lm, const std::string& path, LabelMapFormat format);

/// Read back a CCLM file (compacted form).
LabelMap read_label_map(const std::string& path);

/// Per-block counter grids (iterations, then atomics) followed by a
/// 9-field summary row:
/// width,height,block_w,block_h,density,variant,mean_iterations,mean_atomics,wall_ms
/// density is left empty when unknown.
void write_metrics_csv(const RunReport& report, const std::string& path,
                       std::optional<double> density = std::nullopt);

}  // namespace ccl
