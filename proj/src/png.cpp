#include "nephro/png.hpp"

#include <zlib.h>

#include <cstring>
#include <stdexcept>
#include <string>

namespace nephro {

namespace {

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::uint8_t* data, std::size_t size) {
  put_u32_be(out, static_cast<std::uint32_t>(size));
  const std::size_t crc_start = out.size();
  out.insert(out.end(), type, type + 4);
  if (size > 0) {
    out.insert(out.end(), data, data + size);
  }
  const uLong crc = crc32(crc32(0L, nullptr, 0), out.data() + crc_start,
                          static_cast<uInt>(4 + size));
  put_u32_be(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png_rgb(int width, int height,
                                         const std::vector<std::uint8_t>& rgb) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("encode_png_rgb: non-positive dimensions");
  }
  const std::size_t row_bytes = static_cast<std::size_t>(width) * 3;
  if (rgb.size() != row_bytes * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("encode_png_rgb: pixel buffer size mismatch");
  }

  // Filter byte 0 (None) prepended to each scanline.
  std::vector<std::uint8_t> raw;
  raw.reserve((row_bytes + 1) * static_cast<std::size_t>(height));
  for (int y = 0; y < height; ++y) {
    raw.push_back(0);
    const auto* row = rgb.data() + static_cast<std::size_t>(y) * row_bytes;
    raw.insert(raw.end(), row, row + row_bytes);
  }

  uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(compressed_size);
  const int rc = compress2(compressed.data(), &compressed_size, raw.data(),
                           static_cast<uLong>(raw.size()), 6);
  if (rc != Z_OK) {
    throw std::runtime_error("encode_png_rgb: zlib compress failed (" + std::to_string(rc) + ")");
  }
  compressed.resize(compressed_size);

  std::vector<std::uint8_t> out;
  out.reserve(compressed.size() + 128);
  static const std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  out.insert(out.end(), kSignature, kSignature + 8);

  std::uint8_t ihdr[13];
  ihdr[0] = static_cast<std::uint8_t>((width >> 24) & 0xff);
  ihdr[1] = static_cast<std::uint8_t>((width >> 16) & 0xff);
  ihdr[2] = static_cast<std::uint8_t>((width >> 8) & 0xff);
  ihdr[3] = static_cast<std::uint8_t>(width & 0xff);
  ihdr[4] = static_cast<std::uint8_t>((height >> 24) & 0xff);
  ihdr[5] = static_cast<std::uint8_t>((height >> 16) & 0xff);
  ihdr[6] = static_cast<std::uint8_t>((height >> 8) & 0xff);
  ihdr[7] = static_cast<std::uint8_t>(height & 0xff);
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 2;   // color type: truecolor RGB
  ihdr[10] = 0;  // compression
  ihdr[11] = 0;  // filter
  ihdr[12] = 0;  // interlace
  put_chunk(out, "IHDR", ihdr, sizeof(ihdr));
  put_chunk(out, "IDAT", compressed.data(), compressed.size());
  put_chunk(out, "IEND", nullptr, 0);
  return out;
}

}  // namespace nephro
