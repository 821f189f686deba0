// Binary PGM (P5) export/import for grayscale images in [0,1], used for
// golden-image checks and plot output.
#pragma once

#include <string>

#include "rhi/tensor.hpp"

namespace rhi {

// image must be rank-2 [H,W] with values in [0,1]; quantized to 8 bits.
void write_pgm(const std::string& path, const Tensor& image);
Tensor read_pgm(const std::string& path);

}  // namespace rhi
