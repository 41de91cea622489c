#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "addrparse/schema.hpp"

namespace addrparse {

class UnknownLexiconError : public Error {
public:
    using Error::Error;
};

class LexiconFormatError : public Error {
public:
    using Error::Error;
};

/// Names of the lexica a CanonicalLexica holds.
enum class Lexicon {
    kState,
    kDirectional,
    kStreetType,
    kUnitType,
    kAbbreviation,
    kPrefixTitle,
    kSuffix,
    kCountry,
    kZipPrefix,
};

std::optional<Lexicon> lexicon_from_name(std::string_view name);
std::string_view lexicon_name(Lexicon kind);

/// The admissible sets and canonicalization maps the pipeline shares:
/// USPS state codes, the 8 directionals, street-type long forms, unit
/// designators, general abbreviations, personal titles and suffixes,
/// country names, and the 3-digit ZIP-prefix table.
///
/// Instances are immutable after construction and safe to share across
/// threads. Entry files use one entry per line: `short<TAB>canonical` for
/// maps, a bare token per line for sets, `#` for comments.
class CanonicalLexica {
public:
    /// The compiled-in default lexica.
    static const CanonicalLexica& builtin();

    /// Builtin lexica extended/overridden by `<name>.txt` files in `dir`
    /// (states.txt, directionals.txt, street_types.txt, unit_types.txt,
    /// abbreviations.txt, prefix_titles.txt, suffixes.txt, countries.txt,
    /// zip_prefixes.txt). Missing files keep the builtin entries.
    static CanonicalLexica with_overrides(const std::filesystem::path& dir);

    /// Case- and trailing-period-insensitive lookup. Returns the canonical
    /// form, or nullopt for unknown tokens.
    std::optional<std::string> lookup(Lexicon kind, std::string_view token) const;

    /// lookup() by lexicon name; throws UnknownLexiconError for a bad name.
    std::optional<std::string> lookup(std::string_view kind_name,
                                      std::string_view token) const;

    /// True when the folded token is a key or canonical value anywhere in
    /// the lexica. Used by the rarity component of confidence scoring.
    bool knows_token(std::string_view token) const;

    /// Maps a 3-digit ZIP prefix to its USPS state code.
    std::optional<std::string> state_for_zip_prefix(std::string_view prefix) const;

    const std::set<std::string>& state_codes() const { return state_codes_; }
    const std::set<std::string>& directional_codes() const { return directional_codes_; }

    /// The compact directional variants (NE, N.E, SW, ...) safe to rewrite
    /// in free text, as opposed to spelled-out words like "North" that may
    /// be part of a city name.
    bool is_compact_directional(std::string_view folded_token) const;

private:
    CanonicalLexica() = default;

    void load_entries(Lexicon kind, std::string_view content, bool map_expected);
    void finalize();

    std::unordered_map<Lexicon, std::unordered_map<std::string, std::string>> maps_;
    std::set<std::string> state_codes_;
    std::set<std::string> directional_codes_;
    std::unordered_set<std::string> known_tokens_;
    std::unordered_set<std::string> compact_directionals_;
};

/// Free-function form used throughout the pipeline; equivalent to
/// lexica.lookup(kind, token).
std::optional<std::string> lookup_canonical(const CanonicalLexica& lexica,
                                            std::string_view kind_name,
                                            std::string_view token);

}  // namespace addrparse
