#include "addrparse/lexica.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "addrparse/text.hpp"

namespace addrparse {

namespace detail {
extern const std::string_view k_embedded_states;
extern const std::string_view k_embedded_directionals;
extern const std::string_view k_embedded_street_types;
extern const std::string_view k_embedded_unit_types;
extern const std::string_view k_embedded_abbreviations;
extern const std::string_view k_embedded_prefix_titles;
extern const std::string_view k_embedded_suffixes;
extern const std::string_view k_embedded_countries;
extern const std::string_view k_embedded_zip_prefixes;
}  // namespace detail

namespace {

struct LexiconSource {
    Lexicon kind;
    std::string_view name;
    std::string_view embedded;
    bool is_map;
};

const std::array<LexiconSource, 9>& sources() {
    static const std::array<LexiconSource, 9> s = {{
        {Lexicon::kState, "state", detail::k_embedded_states, false},
        {Lexicon::kDirectional, "directional", detail::k_embedded_directionals, true},
        {Lexicon::kStreetType, "street_type", detail::k_embedded_street_types, true},
        {Lexicon::kUnitType, "unit_type", detail::k_embedded_unit_types, true},
        {Lexicon::kAbbreviation, "abbreviation", detail::k_embedded_abbreviations, true},
        {Lexicon::kPrefixTitle, "prefix_title", detail::k_embedded_prefix_titles, true},
        {Lexicon::kSuffix, "suffix", detail::k_embedded_suffixes, true},
        {Lexicon::kCountry, "country", detail::k_embedded_countries, true},
        {Lexicon::kZipPrefix, "zip_prefix", detail::k_embedded_zip_prefixes, true},
    }};
    return s;
}

std::string_view file_stem(Lexicon kind) {
    switch (kind) {
        case Lexicon::kState: return "states";
        case Lexicon::kDirectional: return "directionals";
        case Lexicon::kStreetType: return "street_types";
        case Lexicon::kUnitType: return "unit_types";
        case Lexicon::kAbbreviation: return "abbreviations";
        case Lexicon::kPrefixTitle: return "prefix_titles";
        case Lexicon::kSuffix: return "suffixes";
        case Lexicon::kCountry: return "countries";
        case Lexicon::kZipPrefix: return "zip_prefixes";
    }
    return "";
}

}  // namespace

std::optional<Lexicon> lexicon_from_name(std::string_view name) {
    for (const auto& src : sources()) {
        if (src.name == name) return src.kind;
    }
    return std::nullopt;
}

std::string_view lexicon_name(Lexicon kind) {
    for (const auto& src : sources()) {
        if (src.kind == kind) return src.name;
    }
    return "";
}

void CanonicalLexica::load_entries(Lexicon kind, std::string_view content,
                                   bool map_expected) {
    auto& map = maps_[kind];
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') {
            if (end == content.size()) break;
            continue;
        }
        const std::size_t tab = line.find('\t');
        std::string key, value;
        if (tab == std::string_view::npos) {
            if (map_expected) {
                throw LexiconFormatError("lexicon " + std::string(lexicon_name(kind)) +
                                         " line " + std::to_string(line_no) +
                                         ": expected short<TAB>canonical");
            }
            key = lexicon_fold(line);
            value = std::string(line);
        } else {
            key = lexicon_fold(line.substr(0, tab));
            value = std::string(line.substr(tab + 1));
        }
        if (key.empty() || value.empty()) {
            throw LexiconFormatError("lexicon " + std::string(lexicon_name(kind)) +
                                     " line " + std::to_string(line_no) +
                                     ": empty entry");
        }
        map[key] = value;
        if (end == content.size()) break;
    }
}

void CanonicalLexica::finalize() {
    state_codes_.clear();
    for (const auto& [key, value] : maps_[Lexicon::kState]) state_codes_.insert(value);

    directional_codes_.clear();
    compact_directionals_.clear();
    for (const auto& [key, value] : maps_[Lexicon::kDirectional]) {
        directional_codes_.insert(value);
        // Compact variants: the canonical codes themselves and dotted forms
        // (n, ne, n.e). Spelled-out words stay out so free-text rewriting
        // cannot touch names like "North Las Vegas".
        const bool dotted = key.find('.') != std::string::npos;
        if (dotted || key.size() <= 2) compact_directionals_.insert(key);
    }

    // ZIP prefix table invariants: 3-digit keys, values in the state set.
    for (const auto& [key, value] : maps_[Lexicon::kZipPrefix]) {
        if (key.size() != 3 ||
            key.find_first_not_of("0123456789") != std::string::npos) {
            throw LexiconFormatError("zip prefix key must be 3 digits: " + key);
        }
        if (!state_codes_.contains(value)) {
            throw LexiconFormatError("zip prefix " + key +
                                     " maps to unknown state " + value);
        }
    }

    // Street-type closure: every canonical long form maps to itself.
    auto& street = maps_[Lexicon::kStreetType];
    for (const auto& [key, value] : street) {
        const std::string folded = lexicon_fold(value);
        const auto it = street.find(folded);
        if (it == street.end() || it->second != value) {
            throw LexiconFormatError("street type value not closed under map: " +
                                     value);
        }
    }

    known_tokens_.clear();
    for (const auto& [kind, map] : maps_) {
        for (const auto& [key, value] : map) {
            known_tokens_.insert(key);
            known_tokens_.insert(lexicon_fold(value));
        }
    }
}

const CanonicalLexica& CanonicalLexica::builtin() {
    static const CanonicalLexica instance = [] {
        CanonicalLexica lex;
        for (const auto& src : sources()) {
            lex.load_entries(src.kind, src.embedded, src.is_map);
        }
        lex.finalize();
        return lex;
    }();
    return instance;
}

CanonicalLexica CanonicalLexica::with_overrides(const std::filesystem::path& dir) {
    CanonicalLexica lex = builtin();
    for (const auto& src : sources()) {
        const auto path = dir / (std::string(file_stem(src.kind)) + ".txt");
        if (!std::filesystem::exists(path)) continue;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw LexiconFormatError("cannot read lexicon file " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        lex.load_entries(src.kind, buffer.str(), src.is_map);
    }
    lex.finalize();
    return lex;
}

std::optional<std::string> CanonicalLexica::lookup(Lexicon kind,
                                                   std::string_view token) const {
    const auto map_it = maps_.find(kind);
    if (map_it == maps_.end()) return std::nullopt;
    const std::string folded = lexicon_fold(token);
    if (folded.empty()) return std::nullopt;
    const auto it = map_it->second.find(folded);
    if (it == map_it->second.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> CanonicalLexica::lookup(std::string_view kind_name,
                                                   std::string_view token) const {
    const auto kind = lexicon_from_name(kind_name);
    if (!kind) {
        throw UnknownLexiconError("unknown lexicon \"" + std::string(kind_name) +
                                  "\"");
    }
    return lookup(*kind, token);
}

bool CanonicalLexica::knows_token(std::string_view token) const {
    return known_tokens_.contains(lexicon_fold(token));
}

std::optional<std::string> CanonicalLexica::state_for_zip_prefix(
    std::string_view prefix) const {
    return lookup(Lexicon::kZipPrefix, prefix);
}

bool CanonicalLexica::is_compact_directional(std::string_view folded_token) const {
    return compact_directionals_.contains(std::string(folded_token));
}

std::optional<std::string> lookup_canonical(const CanonicalLexica& lexica,
                                            std::string_view kind_name,
                                            std::string_view token) {
    return lexica.lookup(kind_name, token);
}

}  // namespace addrparse
