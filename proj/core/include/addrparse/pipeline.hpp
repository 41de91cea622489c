#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "addrparse/exporter.hpp"
#include "addrparse/segment.hpp"

namespace addrparse {

/// Run configuration: defaults follow the fixed decoding/batch contract and
/// are overridden by a config file, then by flags.
struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path output = "out.jsonl";
    ExportFormat format = ExportFormat::kJsonl;
    std::string backend = "mock";  // mock | http
    std::string endpoint;
    std::string auth_token;  // resolved from the environment, never logged
    DecodingConfig decoding;
    std::size_t batch_size = kDefaultBatchSize;
    bool second_parse = false;
    bool retain_raw = false;
    std::size_t parallelism = 0;  // 0 = min(hardware threads, 8)
    std::optional<std::filesystem::path> scaffold_path;
    std::optional<std::filesystem::path> lexica_dir;
    std::string salt = "addrparse";
    std::string run_id = "run";
    double max_invalid_rate = 1.01;  // > 1 disables the exit gate
    std::optional<double> dedupe_threshold;  // near-duplicate drop when set
};

/// Everything the pipeline knows about one record after validation.
struct RecordResult {
    ParsedRecord record;  // canonical (post layer-2) parse
    ValidationOutcome outcome;
    ConfidenceScore confidence;
    SourceRef source_ref;
    std::string raw_text;
    std::string normalized_text;
};

struct PipelineResult {
    std::vector<RecordResult> records;
    RunMetadata metadata;
    double invalid_row_rate = 0.0;

    std::vector<ExportedRecord> to_exported(bool retain_raw) const;
};

/// Builds the backend named by the config (mock or http).
std::unique_ptr<Backend> make_backend(const RunConfig& config,
                                      const CanonicalLexica& lexica);

/// The id generator used everywhere: HMAC of the source ref under the salt.
RecordIdGenerator make_id_generator(std::string salt);

/// Core orchestration: normalize -> batch/prompt -> infer -> validate ->
/// confidence, over pre-segmented candidates. Batches run on a worker pool;
/// record order is preserved.
PipelineResult run_pipeline_on_candidates(std::vector<CandidateRecord> candidates,
                                          const RunConfig& config,
                                          const CanonicalLexica& lexica,
                                          Backend& backend,
                                          AuditLog* audit = nullptr);

/// Full parse run: reads inputs, segments, runs the pipeline, and writes the
/// export, metadata sidecar, rules catalog, and audit log.
PipelineResult run_parse(const RunConfig& config);

}  // namespace addrparse
