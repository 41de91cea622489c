#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "addrparse/infer.hpp"
#include "addrparse/text.hpp"

namespace addrparse {

namespace {

constexpr std::string_view kInputMarker = "Input:";

bool all_digits(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

bool starts_with_digit(std::string_view s) {
    return !s.empty() && s.front() >= '0' && s.front() <= '9';
}

/// 5 digits, 9 digits, or 5-4 with hyphen; returns digits only.
std::optional<std::string> as_postal(std::string_view token) {
    if ((token.size() == 5 || token.size() == 9) && all_digits(token)) {
        return std::string(token);
    }
    if (token.size() == 10 && token[5] == '-' && all_digits(token.substr(0, 5)) &&
        all_digits(token.substr(6))) {
        return std::string(token.substr(0, 5)) + std::string(token.substr(6));
    }
    return std::nullopt;
}

/// Tokenizer shared by the cascade: whitespace split; commas and semicolons
/// always drop, trailing periods drop only when the core is longer than two
/// characters so "A." and "Jr." keep their dotted form.
std::vector<std::string> cascade_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    for (const auto& raw : split_tokens(text)) {
        std::string kept;
        kept.reserve(raw.size());
        for (char c : raw) {
            if (c != ',' && c != ';') kept.push_back(c);
        }
        std::string_view core = kept;
        std::size_t periods = 0;
        while (!core.empty() && core.back() == '.') {
            core.remove_suffix(1);
            ++periods;
        }
        if (periods > 0 && utf8_codepoints(core).size() > 2) kept.resize(core.size());
        if (!kept.empty()) tokens.push_back(std::move(kept));
    }
    return tokens;
}

/// Single letter with optional trailing period: a middle initial.
bool is_initial(std::string_view token) {
    const auto cps = utf8_codepoints(token);
    if (cps.size() == 1) return is_address_letter(cps[0]);
    if (cps.size() == 2 && cps[1] == U'.') return is_address_letter(cps[0]);
    return false;
}

struct Cascade {
    const CanonicalLexica& lexica;
    const std::vector<std::string>& tokens;
    ParsedRecord& record;

    std::optional<std::string> in(Lexicon kind, std::string_view token) const {
        return lexica.lookup(kind, token);
    }

    bool is_unit_marker(std::string_view token) const {
        return token.front() == '#' || in(Lexicon::kUnitType, token).has_value();
    }

    /// Trailing city/state/ZIP/country block; returns the index where the
    /// tail starts.
    std::size_t consume_tail(std::size_t begin) {
        std::size_t end = tokens.size();
        if (end > begin) {
            if (const auto country = in(Lexicon::kCountry, tokens[end - 1])) {
                record.country = *country;
                --end;
            } else if (end - begin >= 2) {
                // Two-token country names ("United States").
                const std::string pair = tokens[end - 2] + " " + tokens[end - 1];
                if (const auto two = in(Lexicon::kCountry, pair)) {
                    record.country = *two;
                    end -= 2;
                }
            }
        }
        if (end > begin) {
            if (const auto postal = as_postal(tokens[end - 1])) {
                record.postal_code = *postal;
                --end;
            }
        }
        if (end > begin) {
            const auto& token = tokens[end - 1];
            if (utf8_codepoints(token).size() == 2) {
                if (const auto state = in(Lexicon::kState, token)) {
                    record.state = *state;
                    --end;
                }
            }
        }
        return end;
    }

    /// [title] first [initials] last [suffix], ending before `limit`.
    void consume_name(std::size_t begin, std::size_t limit) {
        if (begin >= limit) return;
        std::vector<std::string> span(tokens.begin() + begin, tokens.begin() + limit);
        if (span.size() >= 2) {
            if (const auto suffix = in(Lexicon::kSuffix, span.back())) {
                record.suffix = *suffix;
                span.pop_back();
            }
        }
        if (span.empty()) return;
        record.first_name = span.front();
        std::vector<std::string> middles;
        std::vector<std::string> last_parts;
        for (std::size_t i = 1; i < span.size(); ++i) {
            if (is_initial(span[i]) && last_parts.empty()) {
                middles.push_back(span[i]);
            } else {
                last_parts.push_back(span[i]);
            }
        }
        std::string middle;
        for (const auto& m : middles) {
            if (!middle.empty()) middle.push_back(' ');
            middle += m;
        }
        std::string last;
        for (const auto& l : last_parts) {
            if (!last.empty()) last.push_back(' ');
            last += l;
        }
        record.middle_name = middle;
        record.last_name = last;
    }

    /// Unit designator at `cursor`; returns the index after the unit block.
    std::size_t consume_unit(const std::vector<std::string>& span, std::size_t cursor) {
        if (cursor >= span.size() || !is_unit_marker(span[cursor])) return cursor;
        const auto& token = span[cursor];
        if (token.front() == '#') {
            record.unit_type = "Unit";
            if (token.size() > 1) {
                record.unit_number = token.substr(1);
                return cursor + 1;
            }
            if (cursor + 1 < span.size()) {
                record.unit_number = span[cursor + 1];
                return cursor + 2;
            }
            return cursor + 1;
        }
        record.unit_type = *in(Lexicon::kUnitType, token);
        if (cursor + 1 < span.size()) {
            record.unit_number = span[cursor + 1];
            return cursor + 2;
        }
        return cursor + 1;
    }

    /// Street core between the house number and the tail: directional,
    /// name, type, post-directional, unit, city.
    void consume_street_span(std::vector<std::string> span) {
        std::size_t cursor = 0;
        if (span.size() > 1 && !is_unit_marker(span[0])) {
            if (const auto dir = in(Lexicon::kDirectional, span[0])) {
                record.pre_directional = *dir;
                span.erase(span.begin());
            }
        }
        std::size_t type_at = span.size();
        for (std::size_t i = 0; i < span.size(); ++i) {
            if (in(Lexicon::kStreetType, span[i]).has_value() && !is_unit_marker(span[i])) {
                type_at = i;
                break;
            }
        }
        if (type_at == 0 && span.size() >= 2) {
            // Type-first ordering ("123 Calle Sol San Juan ...").
            record.street_type = *in(Lexicon::kStreetType, span[0]);
            record.street_name = span[1];
            cursor = 2;
        } else if (type_at < span.size()) {
            record.street_name = join_tokens(span, 0, type_at);
            record.street_type = *in(Lexicon::kStreetType, span[type_at]);
            cursor = type_at + 1;
            if (cursor < span.size()) {
                // Post-directionals only in compact form; a spelled-out word
                // here is a city name like "North Las Vegas".
                if (lexica.is_compact_directional(lexicon_fold(span[cursor]))) {
                    record.post_directional = *in(Lexicon::kDirectional, span[cursor]);
                    ++cursor;
                }
            }
        } else {
            // No street type present: stop the street name at a unit marker
            // when one exists, otherwise take a single token.
            std::size_t unit_at = span.size();
            for (std::size_t i = 0; i < span.size(); ++i) {
                if (is_unit_marker(span[i])) {
                    unit_at = i;
                    break;
                }
            }
            if (unit_at < span.size()) {
                record.street_name = join_tokens(span, 0, unit_at);
                cursor = unit_at;
            } else if (span.size() >= 2) {
                record.street_name = span[0];
                cursor = 1;
            } else {
                record.street_name = join_tokens(span, 0, span.size());
                cursor = span.size();
            }
        }
        cursor = consume_unit(span, cursor);
        record.city = join_tokens(span, cursor, span.size());
    }

    /// European ordering: type, name tokens, trailing number, then city.
    void consume_european(std::size_t begin, std::size_t limit) {
        record.street_type = *in(Lexicon::kStreetType, tokens[begin]);
        std::size_t i = begin + 1;
        std::vector<std::string> name_parts;
        while (i < limit && !starts_with_digit(tokens[i])) {
            name_parts.push_back(tokens[i]);
            ++i;
        }
        std::string name;
        for (const auto& part : name_parts) {
            if (!name.empty()) name.push_back(' ');
            name += part;
        }
        record.street_name = name;
        if (i < limit && starts_with_digit(tokens[i])) {
            record.street_number = tokens[i];
            ++i;
        }
        std::vector<std::string> rest(tokens.begin() + i, tokens.begin() + limit);
        record.city = join_tokens(rest, 0, rest.size());
    }

    void run() {
        if (tokens.empty()) return;
        const std::size_t tail_start = consume_tail(0);
        std::size_t i = 0;
        if (i < tail_start) {
            if (const auto title = in(Lexicon::kPrefixTitle, tokens[i])) {
                record.prefix_title = *title;
                ++i;
            }
        }
        if (i < tail_start && record.prefix_title.empty() &&
            in(Lexicon::kStreetType, tokens[i]).has_value() &&
            !starts_with_digit(tokens[i])) {
            consume_european(i, tail_start);
            return;
        }
        std::size_t number_at = tail_start;
        for (std::size_t j = i; j < tail_start; ++j) {
            if (starts_with_digit(tokens[j]) || tokens[j].front() == '#') {
                number_at = j;
                break;
            }
        }
        // Type-before-number ordering after a name ("Ana Souza Avenida
        // Paulista 1578 ..."). A street-type token directly followed by the
        // house number ("Lois Lane 42 Oak St") is a surname, not a type.
        for (std::size_t t = i; t < number_at; ++t) {
            if (!in(Lexicon::kStreetType, tokens[t]).has_value()) continue;
            if (is_unit_marker(tokens[t])) continue;
            if (t + 1 < tail_start && t + 1 != number_at &&
                !starts_with_digit(tokens[t + 1])) {
                consume_name(i, t);
                consume_european(t, tail_start);
                return;
            }
            break;
        }
        consume_name(i, number_at);
        if (number_at >= tail_start) return;  // no street section
        if (tokens[number_at].front() != '#') {
            record.street_number = tokens[number_at];
            std::vector<std::string> span(tokens.begin() + number_at + 1,
                                          tokens.begin() + tail_start);
            consume_street_span(std::move(span));
        } else {
            std::vector<std::string> span(tokens.begin() + number_at,
                                          tokens.begin() + tail_start);
            consume_street_span(std::move(span));
        }
    }
};

}  // namespace

ParsedRecord mock_parse_text(std::string_view record_id, std::string_view text,
                             const CanonicalLexica& lexica) {
    ParsedRecord record;
    record.record_id = std::string(record_id);
    const std::vector<std::string> tokens = cascade_tokens(text);
    Cascade cascade{lexica, tokens, record};
    cascade.run();
    return record;
}

std::string mock_backend_respond(std::string_view prompt,
                                 const CanonicalLexica& lexica) {
    // Find the input marker on its own line.
    std::size_t marker = std::string_view::npos;
    std::size_t search = 0;
    while (search < prompt.size()) {
        const std::size_t at = prompt.find(kInputMarker, search);
        if (at == std::string_view::npos) break;
        const bool line_start = at == 0 || prompt[at - 1] == '\n';
        const std::size_t after = at + kInputMarker.size();
        const bool line_end = after >= prompt.size() || prompt[after] == '\n' ||
                              prompt[after] == '\r';
        if (line_start && line_end) {
            marker = at;
            break;
        }
        search = at + 1;
    }
    if (marker == std::string_view::npos) {
        throw MalformedPromptError("prompt has no input block marker");
    }

    std::string_view block = prompt.substr(marker + kInputMarker.size());
    std::string out;
    std::size_t start = 0;
    while (start <= block.size()) {
        std::size_t end = block.find('\n', start);
        if (end == std::string_view::npos) end = block.size();
        std::string_view line = block.substr(start, end - start);
        const std::size_t next = end + 1;

        while (!line.empty() && (line.front() == ' ' || line.front() == '\r')) {
            line.remove_prefix(1);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) {
            line.remove_suffix(1);
        }
        // Numbered input lines: "<index>. <record_id>|<text>".
        std::size_t digits = 0;
        while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9') {
            ++digits;
        }
        if (digits > 0 && digits + 1 < line.size() && line[digits] == '.') {
            std::string_view rest = line.substr(digits + 1);
            while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
            const std::size_t pipe = rest.find('|');
            std::string_view record_id;
            std::string_view text = rest;
            if (pipe != std::string_view::npos) {
                record_id = rest.substr(0, pipe);
                text = rest.substr(pipe + 1);
            }
            const ParsedRecord record = mock_parse_text(record_id, text, lexica);
            out += serialize_row(record);
            out.push_back('\n');
        }
        if (end == block.size()) break;
        start = next;
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string MockBackend::complete(const std::string& prompt,
                                  const DecodingConfig& config) {
    (void)config;  // decoding controls do not affect the deterministic mock
    return mock_backend_respond(prompt, lexica_);
}

}  // namespace addrparse
