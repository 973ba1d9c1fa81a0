#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ttq {

// --- string helpers ---

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string collapse_whitespace(std::string_view s);  // runs of whitespace -> single space, trimmed
bool starts_with_ci(std::string_view text, std::string_view prefix);
bool equals_ci(std::string_view a, std::string_view b);
bool contains_ci(std::string_view haystack, std::string_view needle);
std::string replace_all(std::string s, std::string_view from, std::string_view to);
std::vector<std::string> split_lines(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Whole-token numeric check; accepts optional sign, decimals and thousands commas.
bool parse_number(std::string_view s, double& out);
// Date-ish strings ("1981", "May 31, 1952", "10-12-2007", "December, 2022").
bool looks_like_date(std::string_view s);

// --- hashing ---

// FNV-1a over (seed as 8 little-endian bytes) then the text bytes. Used where a
// hand-recomputable 64-bit hash is part of the contract (alias selection,
// deterministic coin flips).
std::uint64_t fnv1a64(std::uint64_t seed, std::string_view text);

std::string sha256_hex(std::string_view bytes);

// --- filesystem ---

std::string read_file(const std::filesystem::path& path);          // throws Error(Io)
void write_file(const std::filesystem::path& path, std::string_view content);  // atomic: tmp + rename

// --- deterministic shuffling ---

// Fisher-Yates with an explicit generator so the permutation is identical on
// every platform (std::shuffle's draw sequence is not portable).
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace ttq
