#pragma once

#include <cstdint>

namespace nephro {

/// Fixed 5x7 bitmap font, column-major, bit 0 = top row. Covers printable
/// ASCII plus U+00B2 (superscript two, used by the y-axis unit label).
/// Returns nullptr for unmapped codepoints.
const std::uint8_t* font5x7_glyph(char32_t codepoint);

constexpr int kFontGlyphWidth = 5;
constexpr int kFontGlyphHeight = 7;

}  // namespace nephro
