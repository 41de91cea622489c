#include "addrparse/exporter.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/hmac.h>

#include "csv_detail.hpp"

namespace addrparse {

namespace {

constexpr std::string_view kStatusColumn = "status";
constexpr std::string_view kConfidenceColumn = "confidence";
constexpr std::string_view kRuleIdsColumn = "rule_ids";
constexpr std::string_view kRawTextColumn = "raw_text";

std::string shortest_double(double value) {
    return nlohmann::json(value).dump();
}

nlohmann::json record_to_json(const ExportedRecord& exported) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        row[std::string(ParsedRecord::field_names()[i])] = exported.record.field(i);
    }
    row[std::string(kStatusColumn)] = std::string(to_string(exported.status));
    row[std::string(kConfidenceColumn)] = exported.confidence;
    row[std::string(kRuleIdsColumn)] = exported.rule_ids;
    if (exported.raw_text) row[std::string(kRawTextColumn)] = *exported.raw_text;
    return row;
}

ExportedRecord record_from_json(const nlohmann::json& row) {
    ExportedRecord exported;
    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        const std::string key(ParsedRecord::field_names()[i]);
        if (row.contains(key) && row[key].is_string()) {
            exported.record.field(i) = row[key].get<std::string>();
        }
    }
    if (row.contains(kStatusColumn)) {
        const auto status =
            record_status_from_string(row[std::string(kStatusColumn)].get<std::string>());
        if (!status) throw Error("unknown status in imported row");
        exported.status = *status;
    }
    if (row.contains(kConfidenceColumn)) {
        exported.confidence = row[std::string(kConfidenceColumn)].get<double>();
    }
    if (row.contains(kRuleIdsColumn) && row[std::string(kRuleIdsColumn)].is_array()) {
        for (const auto& id : row[std::string(kRuleIdsColumn)]) {
            exported.rule_ids.push_back(id.get<std::string>());
        }
    }
    if (row.contains(kRawTextColumn) && row[std::string(kRawTextColumn)].is_string()) {
        exported.raw_text = row[std::string(kRawTextColumn)].get<std::string>();
    }
    return exported;
}

std::string join_rule_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out.push_back(';');
        out += id;
    }
    return out;
}

std::vector<std::string> split_rule_ids(std::string_view joined) {
    std::vector<std::string> ids;
    std::size_t start = 0;
    while (start < joined.size()) {
        std::size_t end = joined.find(';', start);
        if (end == std::string_view::npos) end = joined.size();
        if (end > start) ids.emplace_back(joined.substr(start, end - start));
        start = end + 1;
    }
    return ids;
}

nlohmann::json decoding_to_json(const DecodingConfig& config) {
    nlohmann::json out = {
        {"max_tokens", config.max_tokens},
        {"temperature", config.temperature},
        {"top_p", config.top_p},
        {"top_k", config.top_k},
        {"stop_sequences", config.stop_sequences},
        {"retries", config.retries},
    };
    if (config.seed) out["seed"] = *config.seed;
    return out;
}

DecodingConfig decoding_from_json(const nlohmann::json& in) {
    DecodingConfig config;
    config.max_tokens = in.value("max_tokens", config.max_tokens);
    config.temperature = in.value("temperature", config.temperature);
    config.top_p = in.value("top_p", config.top_p);
    config.top_k = in.value("top_k", config.top_k);
    if (in.contains("stop_sequences")) {
        config.stop_sequences =
            in["stop_sequences"].get<std::vector<std::string>>();
    }
    config.retries = in.value("retries", config.retries);
    if (in.contains("seed") && !in["seed"].is_null()) {
        config.seed = in["seed"].get<std::uint64_t>();
    }
    return config;
}

}  // namespace

std::optional<ExportFormat> export_format_from_string(std::string_view name) {
    if (name == "jsonl") return ExportFormat::kJsonl;
    if (name == "csv") return ExportFormat::kCsv;
    return std::nullopt;
}

std::string_view to_string(ExportFormat format) {
    return format == ExportFormat::kJsonl ? "jsonl" : "csv";
}

std::size_t export_records(const std::vector<ExportedRecord>& records,
                           ExportFormat format,
                           const std::filesystem::path& destination,
                           bool retain_raw) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + destination.string());

    if (format == ExportFormat::kJsonl) {
        for (const auto& exported : records) {
            ExportedRecord masked = exported;
            if (!retain_raw) masked.raw_text.reset();
            out << record_to_json(masked).dump() << '\n';
        }
    } else {
        std::string header;
        for (const auto& name : ParsedRecord::field_names()) {
            if (!header.empty()) header.push_back(',');
            header += std::string(name);
        }
        header += ",";
        header += kStatusColumn;
        header += ",";
        header += kConfidenceColumn;
        header += ",";
        header += kRuleIdsColumn;
        if (retain_raw) {
            header += ",";
            header += kRawTextColumn;
        }
        out << header << '\n';
        for (const auto& exported : records) {
            std::string line;
            for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
                if (i > 0) line.push_back(',');
                line += detail::csv_escape(exported.record.field(i));
            }
            line.push_back(',');
            line += std::string(to_string(exported.status));
            line.push_back(',');
            line += shortest_double(exported.confidence);
            line.push_back(',');
            line += detail::csv_escape(join_rule_ids(exported.rule_ids));
            if (retain_raw) {
                line.push_back(',');
                line += detail::csv_escape(exported.raw_text.value_or(""));
            }
            out << line << '\n';
        }
    }
    if (!out) throw IoError("failed writing " + destination.string());
    return records.size();
}

std::vector<ExportedRecord> import_records(const std::filesystem::path& source,
                                           ExportFormat format) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot read " + source.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();

    std::vector<ExportedRecord> records;
    if (format == ExportFormat::kJsonl) {
        std::size_t start = 0;
        std::size_t line_no = 0;
        while (start < bytes.size()) {
            std::size_t end = bytes.find('\n', start);
            if (end == std::string::npos) end = bytes.size();
            const std::string_view line(bytes.data() + start, end - start);
            start = end + 1;
            ++line_no;
            if (line.empty()) continue;
            nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
            if (row.is_discarded() || !row.is_object()) {
                throw Error("line " + std::to_string(line_no) +
                            " is not a JSON object");
            }
            records.push_back(record_from_json(row));
        }
        return records;
    }

    const auto rows = detail::parse_csv(bytes);
    if (rows.empty()) throw Error("CSV export has no header row");
    const auto& header = rows.front().cells;
    std::map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < header.size(); ++i) columns[header[i]] = i;
    for (const auto& name : ParsedRecord::field_names()) {
        if (!columns.contains(std::string(name))) {
            throw Error("CSV header missing column " + std::string(name));
        }
    }
    const auto cell = [&](const detail::CsvRow& row,
                          std::string_view name) -> std::string {
        const auto it = columns.find(std::string(name));
        if (it == columns.end() || it->second >= row.cells.size()) return "";
        return row.cells[it->second];
    };
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.cells.size() < ParsedRecord::kFieldCount) {
            throw Error("CSV row " + std::to_string(r + 1) + " has " +
                        std::to_string(row.cells.size()) + " cells");
        }
        ExportedRecord exported;
        for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
            exported.record.field(i) = cell(row, ParsedRecord::field_names()[i]);
        }
        const auto status = record_status_from_string(cell(row, kStatusColumn));
        if (!status) throw Error("CSV row " + std::to_string(r + 1) +
                                 " has an unknown status");
        exported.status = *status;
        const std::string confidence = cell(row, kConfidenceColumn);
        if (!confidence.empty()) {
            try {
                exported.confidence = std::stod(confidence);
            } catch (const std::exception&) {
                throw Error("CSV row " + std::to_string(r + 1) +
                            " has a malformed confidence");
            }
        }
        exported.rule_ids = split_rule_ids(cell(row, kRuleIdsColumn));
        if (columns.contains(std::string(kRawTextColumn))) {
            const std::string raw = cell(row, kRawTextColumn);
            if (!raw.empty()) exported.raw_text = raw;
        }
        records.push_back(std::move(exported));
    }
    return records;
}

std::string anonymize_id(const SourceRef& source_ref, std::string_view salt) {
    const std::string message = source_ref.to_string();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    HMAC(EVP_sha256(), salt.data(), static_cast<int>(salt.size()),
         reinterpret_cast<const unsigned char*>(message.data()), message.size(),
         digest, &length);
    static const char* hex = "0123456789abcdef";
    std::string id = "rid";
    for (unsigned int i = 0; i < length && id.size() < 15; ++i) {
        id.push_back(hex[digest[i] >> 4]);
        if (id.size() < 15) id.push_back(hex[digest[i] & 0xF]);
    }
    return id;
}

void write_metadata(const RunMetadata& metadata,
                    const std::filesystem::path& destination) {
    nlohmann::json batches = nlohmann::json::array();
    for (const auto& batch : metadata.batches) {
        batches.push_back({
            {"batch_id", batch.batch_id},
            {"size", batch.size},
            {"attempts", batch.attempts},
            {"latency_ms", batch.latency_ms},
            {"guard_passed", batch.guard_passed},
        });
    }
    const nlohmann::json doc = {
        {"run_id", metadata.run_id},
        {"started_at", metadata.started_at},
        {"finished_at", metadata.finished_at},
        {"backend", metadata.backend},
        {"scaffold_version", metadata.scaffold_version},
        {"decoding", decoding_to_json(metadata.decoding)},
        {"batch_size", metadata.batch_size},
        {"batches", batches},
        {"status_counts", metadata.status_counts},
        {"records_total", metadata.records_total},
    };
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + destination.string());
    out << doc.dump(2) << '\n';
}

RunMetadata read_metadata(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot read " + source.string());
    nlohmann::json doc;
    in >> doc;
    RunMetadata metadata;
    metadata.run_id = doc.value("run_id", "");
    metadata.started_at = doc.value("started_at", "");
    metadata.finished_at = doc.value("finished_at", "");
    metadata.backend = doc.value("backend", "");
    metadata.scaffold_version = doc.value("scaffold_version", "");
    if (doc.contains("decoding")) {
        metadata.decoding = decoding_from_json(doc["decoding"]);
    }
    metadata.batch_size = doc.value("batch_size", kDefaultBatchSize);
    if (doc.contains("batches")) {
        for (const auto& entry : doc["batches"]) {
            BatchSummary batch;
            batch.batch_id = entry.value("batch_id", "");
            batch.size = entry.value("size", std::size_t{0});
            batch.attempts = entry.value("attempts", 1);
            batch.latency_ms = entry.value("latency_ms", std::int64_t{0});
            batch.guard_passed = entry.value("guard_passed", true);
            metadata.batches.push_back(std::move(batch));
        }
    }
    if (doc.contains("status_counts")) {
        for (const auto& [key, value] : doc["status_counts"].items()) {
            metadata.status_counts[key] = value.get<std::size_t>();
        }
    }
    metadata.records_total = doc.value("records_total", std::size_t{0});
    return metadata;
}

void write_rules_catalog(const std::filesystem::path& destination) {
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& rule : rule_registry()) {
        std::string action;
        switch (rule.action) {
            case RuleAction::kNormalize: action = "normalize"; break;
            case RuleAction::kReview: action = "review"; break;
            case RuleAction::kReject: action = "reject"; break;
            case RuleAction::kWarn: action = "warn"; break;
        }
        rules.push_back({
            {"rule_id", std::string(rule.id)},
            {"layer", rule.layer},
            {"action", action},
            {"description", std::string(rule.description)},
        });
    }
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + destination.string());
    out << nlohmann::json({{"rules", rules}}).dump(2) << '\n';
}

std::string timestamp_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&seconds, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

AuditLog::AuditLog(const std::filesystem::path& path) : path_(path) {
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) throw IoError("cannot open audit log " + path.string());
}

void AuditLog::append(const AuditEvent& event) {
    nlohmann::json entry = {
        {"kind", event.kind},
        {"batch_id", event.batch_id},
        {"attempt", event.attempt},
        {"ts", timestamp_utc_now()},
    };
    if (!event.text.empty()) entry["text"] = event.text;
    for (const auto& [key, value] : event.fields) entry[key] = value;

    std::lock_guard<std::mutex> lock(mutex_);
    entry["seq"] = next_seq_++;
    out_ << entry.dump() << '\n';
    out_.flush();
    if (!out_) throw IoError("failed appending to audit log " + path_.string());
}

std::uint64_t AuditLog::entries_written() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return next_seq_ - 1;
}

AuditSink AuditLog::sink() {
    return [this](const AuditEvent& event) { append(event); };
}

}  // namespace addrparse
