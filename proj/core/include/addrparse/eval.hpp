#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "addrparse/pipeline.hpp"

namespace addrparse {

class AlignmentError : public Error {
public:
    using Error::Error;
};

enum class Cohort { kUsStandard, kPuertoRico, kMultilingual, kNoisySynthetic };

std::string_view to_string(Cohort cohort);

/// One synthetic gold record: the true 17 fields, the unstructured rendering
/// fed to the pipeline, and the noise operators applied to it.
struct GoldRecord {
    ParsedRecord fields;
    std::string raw_text;
    std::vector<std::string> noise_tags;
    Cohort cohort = Cohort::kUsStandard;
    SourceRef source_ref;  // line span inside the rendered input block
};

/// Cohort sizes follow the corpus composition at desk scale (10%); the full
/// 1,500-record mix is reached by scaling.
struct CorpusSpec {
    std::size_t us_standard = 40;
    std::size_t puerto_rico = 30;
    std::size_t multilingual = 30;
    std::size_t noisy_synthetic = 50;
    std::uint64_t seed = 7;

    std::size_t total() const {
        return us_standard + puerto_rico + multilingual + noisy_synthetic;
    }

    /// Proportionally rescales all cohorts to roughly `records` total
    /// (largest-remainder rounding, exact total).
    CorpusSpec scaled_to(std::size_t records) const;
};

struct Corpus {
    std::vector<GoldRecord> records;
    std::string input_text;  // raw texts with blank-line record separators
    std::string input_name;
};

/// Deterministic per seed: the same spec yields the same corpus bit for bit.
Corpus generate_corpus(const CorpusSpec& spec);

/// Assigns gold record ids from each record's source span using the same
/// generator the pipeline uses, so predictions align by id.
void assign_gold_ids(Corpus& corpus, const RecordIdGenerator& id_gen);

void write_gold_jsonl(const Corpus& corpus, const std::filesystem::path& path);
Corpus read_gold_jsonl(const std::filesystem::path& path);

struct BucketStat {
    std::size_t count = 0;
    double share = 0.0;
    double accuracy = 0.0;
};

struct EvalReport {
    std::size_t total_gold = 0;
    std::size_t total_predictions = 0;
    double exact_row_accuracy = 0.0;
    std::map<std::string, double> per_field_accuracy;
    double invalid_row_rate = 0.0;
    double mean_confidence = 0.0;
    std::map<std::string, BucketStat> bucket_table;
    std::map<std::string, double> error_distribution;
    std::map<std::string, double> per_cohort_exact;
    std::size_t failures = 0;
};

/// Scores predictions against gold, aligned by record id; unmatched gold
/// rows count as wrong. Throws AlignmentError on duplicate ids.
EvalReport evaluate(const std::vector<RecordResult>& predictions,
                    const std::vector<GoldRecord>& gold);

/// One residual failure: the gold row plus the prediction that covered it,
/// when any did.
struct ErrorCase {
    std::optional<RecordResult> prediction;
    GoldRecord gold;
};

/// Classifies failures: record_separation when the prediction span merged or
/// split gold spans (or no prediction covered the gold row), then
/// ambiguous_assignment when all gold tokens survived in wrong fields, then
/// irregular_pattern. Shares over the residual set sum to 1.
std::map<std::string, double> categorize_errors(const std::vector<ErrorCase>& failed);

std::string report_to_json(const EvalReport& report);
std::string report_to_text(const EvalReport& report);

struct EvalOptions {
    CorpusSpec spec;
    double inject_rate = 0.0;
    std::string backend = "mock";
    std::string endpoint;
    std::string auth_token;
    bool second_parse = false;
    std::size_t batch_size = kDefaultBatchSize;
    std::string salt = "addrparse";
    std::size_t parallelism = 0;
    /// When set, writes gold.jsonl, input.txt, predictions, metadata, and the
    /// report (JSON + text) under this directory.
    std::optional<std::filesystem::path> out_dir;
};

struct EvalRunResult {
    EvalReport report;
    std::size_t injected_count = 0;
    std::size_t injected_flagged = 0;    // got at least one finding
    std::size_t injected_rejected = 0;   // ended status=rejected
    Corpus corpus;
    std::vector<RecordResult> predictions;
    RunMetadata metadata;
};

/// Generates the corpus, runs the full pipeline over its rendered input
/// (fault-injecting the chosen share of rows when inject_rate > 0), scores
/// predictions against gold, and optionally writes all artifacts.
EvalRunResult run_eval(const EvalOptions& options);

}  // namespace addrparse
