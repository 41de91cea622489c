#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "addrparse/infer.hpp"
#include "addrparse/validate.hpp"

namespace addrparse {

class IoError : public Error {
public:
    using Error::Error;
};

class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

enum class ExportFormat { kJsonl, kCsv };

std::optional<ExportFormat> export_format_from_string(std::string_view name);
std::string_view to_string(ExportFormat format);

/// One exported row: the record in schema order plus status, composite
/// confidence, and the ids of the rules that fired. raw_text is present
/// only when the run retains raw input.
struct ExportedRecord {
    ParsedRecord record;
    RecordStatus status = RecordStatus::kValid;
    double confidence = 0.0;
    std::vector<std::string> rule_ids;
    std::optional<std::string> raw_text;
};

/// Writes records in input order. CSV quotes per RFC 4180 and starts with a
/// header row; JSONL emits one object per line keyed by the schema field
/// names. Returns the number of records written.
std::size_t export_records(const std::vector<ExportedRecord>& records,
                           ExportFormat format,
                           const std::filesystem::path& destination,
                           bool retain_raw = false);

/// Inverse of export_records; round-trips (record, status, confidence,
/// rule_ids) exactly.
std::vector<ExportedRecord> import_records(const std::filesystem::path& source,
                                           ExportFormat format);

/// Stable keyed id: HMAC-SHA256 of the source reference under the
/// deployment salt, truncated to 12 hex chars and prefixed "rid". The raw
/// text never feeds the hash, so ids are safe to persist.
std::string anonymize_id(const SourceRef& source_ref, std::string_view salt);

struct BatchSummary {
    std::string batch_id;
    std::size_t size = 0;
    int attempts = 1;
    std::int64_t latency_ms = 0;
    bool guard_passed = true;
};

/// Run-level audit metadata written next to every export.
struct RunMetadata {
    std::string run_id;
    std::string started_at;   // ISO 8601 UTC
    std::string finished_at;
    std::string backend;
    std::string scaffold_version;
    DecodingConfig decoding;
    std::size_t batch_size = kDefaultBatchSize;
    std::vector<BatchSummary> batches;
    std::map<std::string, std::size_t> status_counts;
    std::size_t records_total = 0;
};

void write_metadata(const RunMetadata& metadata,
                    const std::filesystem::path& destination);
RunMetadata read_metadata(const std::filesystem::path& source);

/// Writes the rule registry as JSON for auditability.
void write_rules_catalog(const std::filesystem::path& destination);

/// Current UTC time as ISO 8601.
std::string timestamp_utc_now();

/// Append-only job-scoped log of prompts, responses, and guard events as
/// newline-delimited JSON with monotonically increasing sequence numbers.
/// Appends are serialized; safe to share across workers.
class AuditLog {
public:
    explicit AuditLog(const std::filesystem::path& path);

    void append(const AuditEvent& event);
    std::uint64_t entries_written() const;

    /// An AuditSink bound to this log.
    AuditSink sink();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    mutable std::mutex mutex_;
    std::uint64_t next_seq_ = 1;
};

}  // namespace addrparse
