#pragma once

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "addrparse/lexica.hpp"
#include "addrparse/normalize.hpp"

namespace addrparse {

class UnreadableInputError : public Error {
public:
    using Error::Error;
};

/// Input whose shape does not match the accepted CSV/JSON forms.
class InputFormatError : public Error {
public:
    using Error::Error;
};

enum class InputKind { kCsv, kJson, kTxt };

std::string_view to_string(InputKind kind);

/// One candidate record produced by segmentation, before normalization.
struct CandidateRecord {
    std::string record_id;
    std::string raw_text;
    SourceRef source_ref;
    std::set<std::string> signals;
};

/// Detector names used in CandidateRecord::signals.
inline constexpr std::string_view kSignalPostalPattern = "postal_pattern";
inline constexpr std::string_view kSignalStateToken = "state_token";
inline constexpr std::string_view kSignalUnitMarker = "unit_marker";
inline constexpr std::string_view kSignalLengthOk = "length_ok";
inline constexpr std::string_view kSignalEntropyOk = "entropy_ok";

struct SegmentOptions {
    /// Lines below this Shannon entropy (bits/char) are separators.
    double entropy_threshold = 1.5;
    /// Lines shorter than this (after trimming) are separators.
    std::size_t min_line_length = 4;
    /// A record accumulates at most this many lines before a forced boundary.
    std::size_t max_record_lines = 6;
};

/// Generates record ids from source references; injected so the pipeline can
/// use its anonymizer. When absent, sequential ids r000001, r000002, ... are
/// assigned per call.
using RecordIdGenerator = std::function<std::string(const SourceRef&)>;

/// Chooses the input kind by file extension, falling back to content
/// sniffing: a leading '[' or '{' means JSON, delimiter-consistent lines
/// mean CSV, anything else is free text.
InputKind detect_input_kind(const std::filesystem::path& path);
InputKind detect_input_kind(std::string_view bytes);

/// Shannon entropy of the line's character distribution, bits per character.
double line_entropy(std::string_view line);

/// Splits a free-text block into candidate records. A record closes when a
/// line terminates with a postal pattern (5 or 9 digits, optional hyphen,
/// optionally followed by a country token), when a separator line (too short
/// or low-entropy) intervenes, or at the multi-line cap. Line spans of the
/// produced records are disjoint and increasing.
std::vector<CandidateRecord> segment_block(std::string_view text,
                                           const CanonicalLexica& lexica,
                                           std::string_view input_name = "block",
                                           const RecordIdGenerator& id_gen = {},
                                           const SegmentOptions& options = {});

/// Reads one input (path, or "-" for stdin) and produces candidate records:
/// TXT goes through segment_block, CSV yields one record per row (header
/// rows whose cells are schema field names are skipped), JSON accepts an
/// array of strings, an array of objects with a "text" member, or an object
/// with a "records" array of either.
std::vector<CandidateRecord> read_input(const std::filesystem::path& path,
                                        const CanonicalLexica& lexica,
                                        const RecordIdGenerator& id_gen = {},
                                        const SegmentOptions& options = {});

/// Same, from bytes already in memory.
std::vector<CandidateRecord> read_input_bytes(std::string_view bytes, InputKind kind,
                                              std::string_view input_name,
                                              const CanonicalLexica& lexica,
                                              const RecordIdGenerator& id_gen = {},
                                              const SegmentOptions& options = {});

}  // namespace addrparse
