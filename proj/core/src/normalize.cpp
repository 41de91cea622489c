#include "addrparse/normalize.hpp"

#include <algorithm>
#include <cstddef>

#include "addrparse/text.hpp"

namespace addrparse {

namespace {

constexpr std::string_view kRuleNfkc = "nfkc";
constexpr std::string_view kRuleZeroWidth = "zero_width";
constexpr std::string_view kRuleUnitSymbol = "unit_symbol";
constexpr std::string_view kRuleAbbrev = "abbrev";
constexpr std::string_view kRuleDirectional = "directional";
constexpr std::string_view kRuleOrdinal = "ordinal";
constexpr std::string_view kRuleZipPlus4 = "zip_plus4";
constexpr std::string_view kRulePunct = "punct";
constexpr std::string_view kRuleWhitespace = "whitespace";

bool is_trailing_punct(char c) { return c == '.' || c == ',' || c == ';'; }

/// Splits a token into (core, trail) where trail is the maximal suffix of
/// periods/commas/semicolons.
std::pair<std::string_view, std::string_view> split_trail(std::string_view token) {
    std::size_t end = token.size();
    while (end > 0 && is_trailing_punct(token[end - 1])) --end;
    return {token.substr(0, end), token.substr(end)};
}

/// Re-appends a trail minus its periods (the period is part of the matched
/// abbreviation; commas are real text that the punctuation pass owns).
void append_trail_without_periods(std::string& out, std::string_view trail) {
    for (char c : trail) {
        if (c != '.') out.push_back(c);
    }
}

std::string strip_zero_width(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = pos;
        const char32_t cp = utf8_decode(text, pos);
        if (!is_zero_width(cp)) out.append(text.substr(start, pos - start));
    }
    return out;
}

/// '#' glued before a unit number becomes "Unit"; when a unit designator
/// already precedes it ("Apt#4B"), the symbol collapses to a space so the
/// number separates cleanly.
std::string unify_unit_symbols(std::string_view text, const CanonicalLexica& lexica) {
    std::string out;
    out.reserve(text.size());
    std::string prev_word;
    std::string current_word;
    for (char c : text) {
        if (c == '#') {
            const std::string& before = current_word.empty() ? prev_word : current_word;
            const bool after_designator =
                !before.empty() && lexica.lookup(Lexicon::kUnitType, before).has_value();
            out.push_back(' ');
            if (!after_designator) out += "Unit ";
            if (!current_word.empty()) {
                prev_word = current_word;
                current_word.clear();
            }
        } else if (c == ' ') {
            if (!current_word.empty()) {
                prev_word = current_word;
                current_word.clear();
            }
            out.push_back(c);
        } else {
            current_word.push_back(c);
            out.push_back(c);
        }
    }
    return out;
}

template <typename Fn>
std::string map_tokens(std::string_view text, Fn&& fn) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            out.push_back(' ');
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        fn(text.substr(start, i - start), out);
    }
    return out;
}

std::string expand_abbreviations(std::string_view text, const CanonicalLexica& lexica) {
    return map_tokens(text, [&](std::string_view token, std::string& out) {
        const auto [core, trail] = split_trail(token);
        const auto expansion = lexica.lookup(Lexicon::kAbbreviation, core);
        if (expansion) {
            out += *expansion;
            append_trail_without_periods(out, trail);
        } else {
            out += token;
        }
    });
}

std::string canonicalize_directionals(std::string_view text,
                                      const CanonicalLexica& lexica) {
    return map_tokens(text, [&](std::string_view token, std::string& out) {
        const auto [core, trail] = split_trail(token);
        // "A."-style initials keep their period; only compact variants
        // (NE, N.E, sw) are rewritten in free text.
        const bool dotted_initial =
            utf8_codepoints(core).size() == 1 && !trail.empty();
        const std::string folded = lexicon_fold(core);
        if (!dotted_initial && lexica.is_compact_directional(folded)) {
            const auto canon = lexica.lookup(Lexicon::kDirectional, core);
            if (canon) {
                out += *canon;
                append_trail_without_periods(out, trail);
                return;
            }
        }
        out += token;
    });
}

std::string normalize_ordinals(std::string_view text) {
    return map_tokens(text, [](std::string_view token, std::string& out) {
        const auto [core, trail] = split_trail(token);
        const std::string replaced = normalize_ordinal(core);
        if (replaced != core) {
            out += replaced;
            out += trail;
        } else {
            out += token;
        }
    });
}

std::string fold_zip_plus4(std::string_view text) {
    return map_tokens(text, [](std::string_view token, std::string& out) {
        const auto [core, trail] = split_trail(token);
        if (core.size() == 10 && core[5] == '-') {
            bool digits = true;
            for (std::size_t i = 0; i < core.size(); ++i) {
                if (i == 5) continue;
                if (core[i] < '0' || core[i] > '9') {
                    digits = false;
                    break;
                }
            }
            if (digits) {
                out += core.substr(0, 5);
                out += core.substr(6);
                out += trail;
                return;
            }
        }
        out += token;
    });
}

/// Commas and semicolons die everywhere; trailing periods die on tokens
/// whose core is longer than two characters, preserving "Mr." and "A."
/// style abbreviations.
std::string strip_stray_punct(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            out.push_back(' ');
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        std::string_view token = text.substr(start, i - start);
        std::string kept;
        kept.reserve(token.size());
        for (char c : token) {
            if (c != ',' && c != ';') kept.push_back(c);
        }
        std::string_view core = kept;
        std::size_t trailing_periods = 0;
        while (!core.empty() && core.back() == '.') {
            core.remove_suffix(1);
            ++trailing_periods;
        }
        if (trailing_periods > 0 && utf8_codepoints(core).size() > 2) {
            kept.resize(core.size());
        }
        out += kept;
    }
    return out;
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_space = true;  // swallow leading whitespace
    for (char c : text) {
        const bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                        c == '\f' || c == '\v';
        if (ws) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace

std::string SourceRef::to_string() const {
    return input_name + ":" + std::to_string(start_line) + "-" +
           std::to_string(end_line);
}

const std::vector<std::string>& normalization_rule_ids() {
    static const std::vector<std::string> ids = {
        std::string(kRuleNfkc),        std::string(kRuleZeroWidth),
        std::string(kRuleUnitSymbol),  std::string(kRuleAbbrev),
        std::string(kRuleDirectional), std::string(kRuleOrdinal),
        std::string(kRuleZipPlus4),    std::string(kRulePunct),
        std::string(kRuleWhitespace),
    };
    return ids;
}

NormalizedRecord normalize_text(std::string_view raw, const CanonicalLexica& lexica) {
    NormalizedRecord result;
    std::string text(raw);

    const auto apply = [&](std::string_view rule_id, auto&& fn) {
        std::string next = fn(text);
        if (next != text) {
            result.trace.emplace_back(rule_id);
            text = std::move(next);
        }
    };

    apply(kRuleNfkc, [](const std::string& t) { return nfkc_fold(t); });
    apply(kRuleZeroWidth, [](const std::string& t) { return strip_zero_width(t); });

    // Token passes see space-separated words; control whitespace folds to
    // spaces up front and the change is attributed to the whitespace rule.
    bool whitespace_changed = false;
    {
        std::string spaced = text;
        std::replace_if(
            spaced.begin(), spaced.end(),
            [](char c) {
                return c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
            },
            ' ');
        if (spaced != text) {
            whitespace_changed = true;
            text = std::move(spaced);
        }
    }

    apply(kRuleUnitSymbol,
          [&](const std::string& t) { return unify_unit_symbols(t, lexica); });
    apply(kRuleAbbrev,
          [&](const std::string& t) { return expand_abbreviations(t, lexica); });
    apply(kRuleDirectional,
          [&](const std::string& t) { return canonicalize_directionals(t, lexica); });
    apply(kRuleOrdinal, [](const std::string& t) { return normalize_ordinals(t); });
    apply(kRuleZipPlus4, [](const std::string& t) { return fold_zip_plus4(t); });
    apply(kRulePunct, [](const std::string& t) { return strip_stray_punct(t); });

    {
        std::string collapsed = collapse_whitespace(text);
        if (collapsed != text) whitespace_changed = true;
        text = std::move(collapsed);
    }
    if (whitespace_changed) result.trace.emplace_back(kRuleWhitespace);

    result.text = std::move(text);
    return result;
}

std::string normalize_ordinal(std::string_view token) {
    if (token.size() < 3) return std::string(token);
    std::string_view digits = token.substr(0, token.size() - 2);
    std::string_view suffix = token.substr(token.size() - 2);
    if (digits.find_first_not_of("0123456789") != std::string_view::npos) {
        return std::string(token);
    }
    std::string folded;
    for (char c : suffix) {
        folded.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    }
    if (folded == "st" || folded == "nd" || folded == "rd" || folded == "th") {
        return std::string(digits);
    }
    return std::string(token);
}

std::vector<std::string> dedupe_near_identical(const std::vector<std::string>& lines,
                                               double threshold) {
    std::vector<std::string> survivors;
    std::vector<std::vector<char32_t>> survivor_cps;
    for (const auto& line : lines) {
        const auto cps = utf8_codepoints(line);
        bool duplicate = false;
        for (std::size_t i = 0; i < survivors.size(); ++i) {
            const auto& other = survivor_cps[i];
            const std::size_t longest = std::max(cps.size(), other.size());
            if (longest == 0) {
                duplicate = true;
                break;
            }
            // Cheap lower bound: the length gap alone may exceed the budget.
            const auto gap = cps.size() > other.size() ? cps.size() - other.size()
                                                       : other.size() - cps.size();
            const double budget = threshold * static_cast<double>(longest);
            if (static_cast<double>(gap) > budget) continue;
            if (normalized_levenshtein(line, survivors[i]) <= threshold) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            survivors.push_back(line);
            survivor_cps.push_back(cps);
        }
    }
    return survivors;
}

}  // namespace addrparse
