#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "addrparse/lexica.hpp"

namespace addrparse {

/// Where a record came from: input name plus 1-based inclusive line span.
struct SourceRef {
    std::string input_name;
    std::size_t start_line = 0;
    std::size_t end_line = 0;

    std::string to_string() const;
    bool operator==(const SourceRef&) const = default;
};

/// Result of normalize_text: cleaned text plus the ordered ids of the rules
/// that actually changed something.
struct NormalizedRecord {
    std::string record_id;
    std::string text;
    std::vector<std::string> trace;
    SourceRef source_ref;
};

/// Registered normalization rule ids, in application order.
const std::vector<std::string>& normalization_rule_ids();

/// Deterministic pre-model cleanup. Applies, in fixed order: compatibility
/// normalization (NFKC table), zero-width strip, unit-symbol unification
/// (# -> Unit, or a plain space when a designator already precedes it),
/// abbreviation expansion, directional canonicalization of compact variants,
/// ordinal-suffix normalization (1st -> 1), ZIP+4 hyphen removal, stray
/// punctuation strip, and whitespace collapse. Total function; idempotent.
NormalizedRecord normalize_text(std::string_view raw, const CanonicalLexica& lexica);

/// Strips an ordinal suffix from digit tokens: "1st" -> "1", "42nd" -> "42".
/// Non-digit tokens are returned unchanged.
std::string normalize_ordinal(std::string_view token);

/// Keeps the first line of each near-duplicate group. Two lines are near
/// -identical when their normalized Levenshtein distance is <= threshold.
/// Survivor order follows input order.
std::vector<std::string> dedupe_near_identical(const std::vector<std::string>& lines,
                                               double threshold);

}  // namespace addrparse
