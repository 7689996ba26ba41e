#pragma once

#include <cstdint>
#include <vector>

namespace nephro {

/// Encodes 8-bit RGB pixels (row-major, 3 bytes per pixel) as a PNG with
/// exactly three chunks: IHDR, IDAT, IEND. No ancillary chunks, so identical
/// pixels always produce identical bytes.
std::vector<std::uint8_t> encode_png_rgb(int width, int height,
                                         const std::vector<std::uint8_t>& rgb);

}  // namespace nephro
