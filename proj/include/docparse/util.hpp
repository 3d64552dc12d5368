#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace docparse {

std::string base64_encode(const std::uint8_t* data, std::size_t len);
std::string base64_encode(const std::vector<std::uint8_t>& data);
std::vector<std::uint8_t> base64_decode(std::string_view text);

// Decodes UTF-8 into Unicode scalar values. Malformed bytes decode to
// U+FFFD, one replacement per offending byte, so the result is total.
std::vector<char32_t> utf8_decode(std::string_view text);
std::string utf8_encode(char32_t cp);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

// Name-derived UUID string (8-4-4-4-12 hex). Identical names always map to
// the identical UUID, which keeps emitted image links reproducible.
std::string deterministic_uuid(std::string_view name);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_lines(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Fixed-precision decimal formatting ("%.2f" style), used wherever output
// bytes must be reproducible.
std::string format_fixed(double value, int decimals);

std::string json_escape(std::string_view s);

}  // namespace docparse
