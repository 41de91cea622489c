#include "addrparse/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "addrparse/normalize.hpp"
#include "addrparse/prompt.hpp"

namespace addrparse {

namespace {

struct BatchWork {
    PromptBatch batch;
    BatchParse parse;
    std::optional<BatchParse> second_parse;
    int attempts = 1;
    std::int64_t latency_ms = 0;
    bool guard_passed = true;
};

std::vector<std::string> unique_rule_ids(const std::vector<RuleFinding>& findings) {
    std::vector<std::string> ids;
    for (const auto& finding : findings) {
        if (std::find(ids.begin(), ids.end(), finding.rule_id) == ids.end()) {
            ids.push_back(finding.rule_id);
        }
    }
    return ids;
}

}  // namespace

std::vector<ExportedRecord> PipelineResult::to_exported(bool retain_raw) const {
    std::vector<ExportedRecord> exported;
    exported.reserve(records.size());
    for (const auto& result : records) {
        ExportedRecord row;
        row.record = result.record;
        row.status = result.outcome.status;
        row.confidence = result.confidence.value;
        row.rule_ids = unique_rule_ids(result.outcome.findings);
        if (retain_raw) row.raw_text = result.raw_text;
        exported.push_back(std::move(row));
    }
    return exported;
}

std::unique_ptr<Backend> make_backend(const RunConfig& config,
                                      const CanonicalLexica& lexica) {
    if (config.backend == "mock") return std::make_unique<MockBackend>(lexica);
    if (config.backend == "http") {
        return std::make_unique<HttpBackend>(config.endpoint, config.auth_token);
    }
    throw Error("unknown backend \"" + config.backend + "\" (expected mock or http)");
}

RecordIdGenerator make_id_generator(std::string salt) {
    return [salt = std::move(salt)](const SourceRef& ref) {
        return anonymize_id(ref, salt);
    };
}

PipelineResult run_pipeline_on_candidates(std::vector<CandidateRecord> candidates,
                                          const RunConfig& config,
                                          const CanonicalLexica& lexica,
                                          Backend& backend, AuditLog* audit) {
    PipelineResult result;
    result.metadata.run_id = config.run_id;
    result.metadata.started_at = timestamp_utc_now();
    result.metadata.backend = backend.name();
    result.metadata.decoding = config.decoding;
    result.metadata.batch_size = config.batch_size;

    const Scaffold scaffold = config.scaffold_path
                                  ? Scaffold::load(*config.scaffold_path)
                                  : Scaffold::builtin();
    result.metadata.scaffold_version = scaffold.version();

    // Normalization pass (and optional near-duplicate drop).
    std::vector<NormalizedRecord> normalized;
    std::vector<const CandidateRecord*> kept;
    normalized.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        NormalizedRecord record = normalize_text(candidate.raw_text, lexica);
        record.record_id = candidate.record_id;
        record.source_ref = candidate.source_ref;
        normalized.push_back(std::move(record));
        kept.push_back(&candidate);
    }
    if (config.dedupe_threshold) {
        std::vector<std::string> texts;
        texts.reserve(normalized.size());
        for (const auto& record : normalized) texts.push_back(record.text);
        const auto survivors = dedupe_near_identical(texts, *config.dedupe_threshold);
        std::vector<NormalizedRecord> filtered;
        std::vector<const CandidateRecord*> filtered_kept;
        std::size_t next = 0;
        for (std::size_t i = 0; i < normalized.size(); ++i) {
            if (next < survivors.size() && normalized[i].text == survivors[next]) {
                filtered.push_back(std::move(normalized[i]));
                filtered_kept.push_back(kept[i]);
                ++next;
            }
        }
        normalized = std::move(filtered);
        kept = std::move(filtered_kept);
    }

    // Rarity statistics over the whole run's normalized corpus.
    std::vector<std::string> corpus_texts;
    corpus_texts.reserve(normalized.size());
    for (const auto& record : normalized) corpus_texts.push_back(record.text);
    const TokenCounts token_counts = build_token_counts(corpus_texts);

    // Raw text lookup for the final assembly.
    std::vector<std::string> raw_texts;
    raw_texts.reserve(kept.size());
    for (const auto* candidate : kept) raw_texts.push_back(candidate->raw_text);

    std::vector<PromptBatch> batches =
        make_batches(std::move(normalized), config.batch_size, config.run_id);
    for (auto& batch : batches) {
        batch.rendered = assemble_prompt(batch, scaffold);
        batch.scaffold_version = scaffold.version();
    }

    // Inference over a bounded worker pool; results keyed by batch index.
    std::vector<BatchWork> work(batches.size());
    for (std::size_t i = 0; i < batches.size(); ++i) work[i].batch = batches[i];

    const AuditSink sink = audit ? audit->sink() : AuditSink{};
    std::atomic<std::size_t> next_index{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    const auto run_batch = [&](BatchWork& unit) {
        try {
            const ModelResponse response =
                infer_batch(unit.batch, config.decoding, backend, sink);
            unit.attempts = response.attempt;
            unit.latency_ms = response.latency.count();
            unit.parse = parse_response(response, unit.batch);
            if (config.second_parse) {
                const ModelResponse again =
                    infer_batch(unit.batch, config.decoding, backend, sink);
                unit.second_parse = parse_response(again, unit.batch);
            }
        } catch (const GuardFailureError& failure) {
            unit.attempts = failure.last_response().attempt;
            unit.latency_ms = failure.last_response().latency.count();
            unit.guard_passed = false;
            // Whole batch routes to assisted review as rejected rows.
            for (const auto& record : unit.batch.records) {
                RowResult row;
                row.record_id = record.record_id;
                row.error = RowError{"row.guard_failure", failure.what()};
                unit.parse.rows.push_back(std::move(row));
            }
        }
    };

    const std::size_t hardware = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::thread::hardware_concurrency()));
    const std::size_t requested =
        config.parallelism == 0 ? hardware : config.parallelism;
    const std::size_t workers =
        std::min({requested, std::size_t{8}, batches.size()});

    if (workers <= 1) {
        for (auto& unit : work) run_batch(unit);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t index =
                        next_index.fetch_add(1, std::memory_order_relaxed);
                    if (index >= work.size()) return;
                    try {
                        run_batch(work[index]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& thread : pool) thread.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // Validation, confidence, and assembly in input order.
    std::size_t record_index = 0;
    for (auto& unit : work) {
        for (std::size_t j = 0; j < unit.parse.rows.size(); ++j) {
            const RowResult& row = unit.parse.rows[j];
            RecordResult out;
            out.source_ref = unit.batch.records[j].source_ref;
            out.normalized_text = unit.batch.records[j].text;
            out.raw_text = raw_texts[record_index];

            std::vector<RuleFinding> extra;
            ParsedRecord parsed;
            if (row.record) {
                parsed = *row.record;
            } else {
                parsed.record_id = row.record_id;
                RuleFinding finding;
                finding.rule_id = row.error->rule_id;
                finding.severity = Severity::kError;
                finding.field = "row";
                finding.message = row.error->message;
                extra.push_back(std::move(finding));
            }
            out.outcome = validate_record(parsed, lexica, std::move(extra));
            out.record = out.outcome.corrected_record.value_or(parsed);

            std::optional<ParsedRecord> second;
            if (unit.second_parse && j < unit.second_parse->rows.size() &&
                unit.second_parse->rows[j].record) {
                second = unit.second_parse->rows[j].record;
            }
            out.confidence = score_confidence(out.record, out.outcome.findings,
                                              second, lexica, &token_counts);
            result.records.push_back(std::move(out));
            ++record_index;
        }

        BatchSummary summary;
        summary.batch_id = unit.batch.batch_id;
        summary.size = unit.batch.records.size();
        summary.attempts = unit.attempts;
        summary.latency_ms = unit.latency_ms;
        summary.guard_passed = unit.guard_passed;
        result.metadata.batches.push_back(std::move(summary));
    }

    std::size_t rejected = 0;
    for (const auto& record : result.records) {
        ++result.metadata.status_counts[std::string(to_string(record.outcome.status))];
        if (record.outcome.status == RecordStatus::kRejected) ++rejected;
    }
    for (std::string_view status : {"valid", "corrected", "review", "rejected"}) {
        result.metadata.status_counts.try_emplace(std::string(status), 0);
    }
    result.metadata.records_total = result.records.size();
    result.invalid_row_rate =
        result.records.empty()
            ? 0.0
            : static_cast<double>(rejected) /
                  static_cast<double>(result.records.size());
    result.metadata.finished_at = timestamp_utc_now();
    return result;
}

PipelineResult run_parse(const RunConfig& config) {
    const CanonicalLexica lexica = config.lexica_dir
                                       ? CanonicalLexica::with_overrides(*config.lexica_dir)
                                       : CanonicalLexica::builtin();
    const RecordIdGenerator id_gen = make_id_generator(config.salt);

    std::vector<CandidateRecord> candidates;
    for (const auto& input : config.inputs) {
        auto batch = read_input(input, lexica, id_gen);
        candidates.insert(candidates.end(), std::make_move_iterator(batch.begin()),
                          std::make_move_iterator(batch.end()));
    }

    const auto out_dir = config.output.parent_path();
    const auto audit_path =
        (out_dir.empty() ? std::filesystem::path(".") : out_dir) /
        (config.run_id + ".audit.jsonl");
    AuditLog audit(audit_path);

    const std::unique_ptr<Backend> backend = make_backend(config, lexica);
    PipelineResult result = run_pipeline_on_candidates(std::move(candidates), config,
                                                       lexica, *backend, &audit);

    export_records(result.to_exported(config.retain_raw), config.format,
                   config.output, config.retain_raw);

    std::filesystem::path meta_path = config.output;
    meta_path.replace_extension(".meta.json");
    write_metadata(result.metadata, meta_path);

    std::filesystem::path rules_path = config.output;
    rules_path.replace_extension(".rules.json");
    write_rules_catalog(rules_path);
    return result;
}

}  // namespace addrparse
