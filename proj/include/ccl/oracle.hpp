#pragma once

#include "ccl/image.hpp"

namespace ccl {

/// Ground-truth labeling: classic two-pass union-find over the whole
/// image, 4-connectivity, raw-root form (each component labeled by its
/// minimum raster index). Single-threaded and deliberately plain.
LabelMap sequential_ccl(const BinaryImage& img);

}  // namespace ccl
