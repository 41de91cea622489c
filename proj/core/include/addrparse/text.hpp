#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace addrparse {

/// Decodes one UTF-8 code point starting at `pos`, advancing `pos` past it.
/// Malformed bytes decode as U+FFFD and advance by one byte.
char32_t utf8_decode(std::string_view text, std::size_t& pos);

/// Appends `cp` to `out` as UTF-8.
void utf8_encode(char32_t cp, std::string& out);

/// Splits into code points (malformed bytes become U+FFFD).
std::vector<char32_t> utf8_codepoints(std::string_view text);

/// True for ASCII letters and the Latin diacritic ranges used in addresses.
bool is_address_letter(char32_t cp);

/// True for characters stripped by the zero-width rule (ZWSP, ZWNJ, ZWJ,
/// word joiner, BOM, soft hyphen).
bool is_zero_width(char32_t cp);

/// Applies the per-codepoint NFKC compatibility mapping. Idempotent.
std::string nfkc_fold(std::string_view text);

/// Lowercases ASCII and strips one trailing period: the folding used for
/// all lexicon lookups ("Ave." and "ave" hit the same key).
std::string lexicon_fold(std::string_view token);

/// Levenshtein distance over code points.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// levenshtein(a, b) / max(|a|, |b|); 0.0 when both are empty.
double normalized_levenshtein(std::string_view a, std::string_view b);

/// Shannon entropy in bits per character of the code-point distribution.
double shannon_entropy(std::string_view line);

/// Splits on runs of spaces; no empty tokens.
std::vector<std::string> split_tokens(std::string_view text);

/// Joins with single spaces.
std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end);

namespace detail {

struct NfkcRow {
    char32_t cp;
    std::uint16_t off;
    std::uint8_t len;
};

struct NfkcTable {
    const NfkcRow* rows;
    std::size_t size;
    const char* pool;
};

const NfkcTable& nfkc_table();

}  // namespace detail

}  // namespace addrparse
