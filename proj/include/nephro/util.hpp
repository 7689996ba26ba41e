#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nephro {

// SplitMix64; used to derive independent per-item RNG seeds from one run seed.
std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a over bytes; stable across platforms. Not cryptographic — used for
// request fingerprints and content digests only.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(std::string_view s);
std::string to_hex16(std::uint64_t v);

// Shortest round-trip decimal form of a double ("46.13", "0.1", "250").
std::string format_double(double v);
// Fixed two decimals ("1.02", "11.06").
std::string format_fixed2(double v);
// Up to two decimals, trailing zeros trimmed ("46.1", "46", "-0.5").
std::string format_up_to2(double v);

std::string to_lower(std::string_view s);

// Case-insensitive whole-word containment. Word boundaries are non-alphanumeric
// characters (so "age" does not match inside "usage").
bool contains_word_ci(std::string_view text, std::string_view word);

std::string read_text_file(const std::filesystem::path& path);
std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
void write_binary_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace nephro
