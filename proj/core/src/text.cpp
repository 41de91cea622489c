#include "addrparse/text.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace addrparse {

char32_t utf8_decode(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) -> std::uint8_t {
        return static_cast<std::uint8_t>(text[i]);
    };
    const std::uint8_t b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++pos;
        return 0xFFFD;
    }
    if (pos + len > text.size()) {
        ++pos;
        return 0xFFFD;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const std::uint8_t b = byte(pos + i);
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += len;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0xFFFD;
    return cp;
}

void utf8_encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<char32_t> utf8_codepoints(std::string_view text) {
    std::vector<char32_t> cps;
    cps.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) cps.push_back(utf8_decode(text, pos));
    return cps;
}

bool is_address_letter(char32_t cp) {
    if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
    // Latin-1 Supplement letters, Latin Extended-A/B, Latin Extended Additional.
    if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
    if (cp >= 0x1E00 && cp <= 0x1EFF) return true;
    return false;
}

bool is_zero_width(char32_t cp) {
    switch (cp) {
        case 0x200B:  // zero width space
        case 0x200C:  // zero width non-joiner
        case 0x200D:  // zero width joiner
        case 0x2060:  // word joiner
        case 0xFEFF:  // BOM / zero width no-break space
        case 0x00AD:  // soft hyphen
            return true;
        default:
            return false;
    }
}

std::string nfkc_fold(std::string_view text) {
    const auto& table = detail::nfkc_table();
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = pos;
        const char32_t cp = utf8_decode(text, pos);
        const detail::NfkcRow* begin = table.rows;
        const detail::NfkcRow* end = table.rows + table.size;
        const auto it = std::lower_bound(
            begin, end, cp,
            [](const detail::NfkcRow& row, char32_t key) { return row.cp < key; });
        if (it != end && it->cp == cp) {
            out.append(table.pool + it->off, it->len);
        } else {
            out.append(text.substr(start, pos - start));
        }
    }
    return out;
}

std::string lexicon_fold(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (char c : token) {
        out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    }
    if (!out.empty() && out.back() == '.') out.pop_back();
    return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    const std::vector<char32_t> ca = utf8_codepoints(a);
    const std::vector<char32_t> cb = utf8_codepoints(b);
    const std::size_t n = ca.size(), m = cb.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 0; i < n; ++i) {
        cur[0] = i + 1;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t sub = prev[j] + (ca[i] == cb[j] ? 0 : 1);
            cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

double normalized_levenshtein(std::string_view a, std::string_view b) {
    const std::size_t la = utf8_codepoints(a).size();
    const std::size_t lb = utf8_codepoints(b).size();
    const std::size_t longest = std::max(la, lb);
    if (longest == 0) return 0.0;
    return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

double shannon_entropy(std::string_view line) {
    if (line.empty()) return 0.0;
    std::unordered_map<char32_t, std::size_t> counts;
    const auto cps = utf8_codepoints(line);
    for (char32_t cp : cps) ++counts[cp];
    const double total = static_cast<double>(cps.size());
    double bits = 0.0;
    for (const auto& [cp, count] : counts) {
        const double p = static_cast<double>(count) / total;
        bits -= p * std::log2(p);
    }
    return bits;
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
        if (!out.empty()) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

}  // namespace addrparse
