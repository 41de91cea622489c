#include "addrparse/infer.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "addrparse/text.hpp"

namespace addrparse {

namespace {

bool is_permitted_char(char32_t cp) {
    if (cp >= U'0' && cp <= U'9') return true;
    if (cp == U' ' || cp == U'|' || cp == U'.' || cp == U',' || cp == U'#' ||
        cp == U'/' || cp == U'-' || cp == U'\'' || cp == U'&') {
        return true;
    }
    return is_address_letter(cp);
}

std::vector<std::string> nonblank_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (!line.empty()) lines.emplace_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::optional<std::vector<std::string>> json_fallback_rows(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' ||
                               text[i] == '\t')) {
        ++i;
    }
    if (i >= text.size() || text[i] != '[') return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) return std::nullopt;
    std::vector<std::string> rows;
    for (const auto& element : doc) {
        if (element.is_string()) {
            rows.push_back(element.get<std::string>());
        } else if (element.is_array()) {
            std::string row;
            bool all_strings = true;
            for (const auto& cell : element) {
                if (!cell.is_string()) {
                    all_strings = false;
                    break;
                }
                if (!row.empty()) row.push_back('|');
                row += cell.get<std::string>();
            }
            if (!all_strings) return std::nullopt;
            rows.push_back(std::move(row));
        } else {
            return std::nullopt;
        }
    }
    return rows;
}

std::size_t pipe_count(std::string_view row) {
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), '|'));
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t hash = 14695981039346656037ull ^ seed;
    for (char c : data) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace

DecodingConfig tightened_for_retry(const DecodingConfig& config,
                                   std::size_t batch_size) {
    DecodingConfig tightened = config;
    for (std::string_view stop : {"\nInput:", "\nOUT:"}) {
        if (std::find(tightened.stop_sequences.begin(), tightened.stop_sequences.end(),
                      stop) == tightened.stop_sequences.end()) {
            tightened.stop_sequences.emplace_back(stop);
        }
    }
    const int cap = static_cast<int>(96 * std::max<std::size_t>(batch_size, 1));
    tightened.max_tokens = std::min(tightened.max_tokens, cap);
    return tightened;
}

std::vector<std::string> extract_rows(std::string_view response) {
    if (auto rows = json_fallback_rows(response)) return *rows;
    return nonblank_lines(response);
}

GuardResult structural_precheck(std::string_view response, std::size_t batch_size) {
    const std::vector<std::string> rows = extract_rows(response);
    if (rows.size() > batch_size) {
        return {false, "row count " + std::to_string(rows.size()) +
                           " exceeds batch size " + std::to_string(batch_size)};
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t pipes = pipe_count(rows[i]);
        if (pipes != ParsedRecord::kFieldCount - 1) {
            return {false, "row " + std::to_string(i + 1) + " has " +
                               std::to_string(pipes + 1) + " fields, want " +
                               std::to_string(ParsedRecord::kFieldCount)};
        }
        std::size_t pos = 0;
        while (pos < rows[i].size()) {
            const char32_t cp = utf8_decode(rows[i], pos);
            if (!is_permitted_char(cp)) {
                return {false, "row " + std::to_string(i + 1) +
                                   " contains a character outside the permitted set"};
            }
        }
    }
    return {true, ""};
}

BatchParse parse_response(const ModelResponse& response, const PromptBatch& batch) {
    BatchParse result;
    const std::vector<std::string> rows = extract_rows(response.raw_text);
    if (rows.size() > batch.records.size()) {
        result.warnings.push_back(
            "discarded " + std::to_string(rows.size() - batch.records.size()) +
            " surplus row(s) in batch " + batch.batch_id);
    }
    for (std::size_t i = 0; i < batch.records.size(); ++i) {
        RowResult row;
        row.record_id = batch.records[i].record_id;
        if (i >= rows.size()) {
            row.error = RowError{"row.missing",
                                 "no response row for record " + row.record_id};
            result.rows.push_back(std::move(row));
            continue;
        }
        try {
            row.record = parse_row(rows[i], row.record_id);
        } catch (const IdMismatchError& e) {
            row.error = RowError{"row.id_mismatch", e.what()};
        } catch (const FieldCountError& e) {
            row.error = RowError{"row.field_count", e.what()};
        } catch (const EmptyRowError&) {
            row.error = RowError{"row.missing", "blank response row"};
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

ModelResponse infer_batch(const PromptBatch& batch, const DecodingConfig& config,
                          Backend& backend, const AuditSink& audit) {
    const int attempts = 1 + std::max(config.retries, 0);
    ModelResponse response;
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        const DecodingConfig effective =
            attempt == 1 ? config : tightened_for_retry(config, batch.records.size());
        if (audit) {
            AuditEvent event;
            event.kind = "prompt";
            event.batch_id = batch.batch_id;
            event.attempt = attempt;
            event.text = batch.rendered;
            audit(event);
        }
        const auto started = std::chrono::steady_clock::now();
        std::string raw = backend.complete(batch.rendered, effective);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);

        response.raw_text = std::move(raw);
        response.attempt = attempt;
        response.latency = elapsed;
        response.backend_name = backend.name();
        response.guard = structural_precheck(response.raw_text, batch.records.size());

        if (audit) {
            AuditEvent event;
            event.kind = "response";
            event.batch_id = batch.batch_id;
            event.attempt = attempt;
            event.text = response.raw_text;
            event.fields["latency_ms"] = std::to_string(elapsed.count());
            event.fields["guard"] = response.guard.passed ? "pass" : "fail";
            if (!response.guard.passed) {
                event.fields["guard_reason"] = response.guard.reason;
            }
            audit(event);
        }
        if (response.guard.passed) return response;
    }
    if (audit) {
        AuditEvent event;
        event.kind = "guard_failure";
        event.batch_id = batch.batch_id;
        event.attempt = response.attempt;
        event.fields["reason"] = response.guard.reason;
        audit(event);
    }
    throw GuardFailureError("batch " + batch.batch_id +
                                " failed the format guard after " +
                                std::to_string(attempts) + " attempt(s): " +
                                response.guard.reason,
                            response);
}

FaultInjectingBackend::FaultInjectingBackend(std::shared_ptr<Backend> inner,
                                             std::unordered_set<std::string> corrupt_ids,
                                             std::uint64_t seed)
    : inner_(std::move(inner)), corrupt_ids_(std::move(corrupt_ids)), seed_(seed) {}

std::string FaultInjectingBackend::complete(const std::string& prompt,
                                            const DecodingConfig& config) {
    std::string raw = inner_->complete(prompt, config);
    std::string out;
    out.reserve(raw.size());
    std::size_t start = 0;
    while (start <= raw.size()) {
        std::size_t end = raw.find('\n', start);
        const bool last = end == std::string::npos;
        if (last) end = raw.size();
        std::string line = raw.substr(start, end - start);

        const std::size_t first_pipe = line.find('|');
        const std::string row_id =
            first_pipe == std::string::npos ? "" : line.substr(0, first_pipe);
        if (!row_id.empty() && corrupt_ids_.contains(row_id) &&
            pipe_count(line) == ParsedRecord::kFieldCount - 1) {
            ParsedRecord record = parse_row(line);
            // Op choice is keyed to the record id so it is stable across
            // batching layouts and repeated runs.
            const std::uint64_t pick = fnv1a64(row_id, seed_) % 10;
            bool applied = false;
            if (pick < 4 && record.postal_code.size() >= 3) {
                record.postal_code[2] = 'A';  // non-digit ZIP
                applied = true;
            } else if (pick < 6 && (record.postal_code.size() == 5 ||
                                    record.postal_code.size() == 9)) {
                record.postal_code.pop_back();  // bad ZIP length
                applied = true;
            } else if (pick < 8) {
                record.state = "ZZ";  // outside the USPS set
                applied = true;
            }
            if (!applied) {
                record.city += "#";  // outside the city field charset
            }
            line = serialize_row(record);
        }
        out += line;
        if (!last) out.push_back('\n');
        if (last) break;
        start = end + 1;
    }
    return out;
}

}  // namespace addrparse
