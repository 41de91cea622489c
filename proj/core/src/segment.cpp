#include "addrparse/segment.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "addrparse/text.hpp"
#include "csv_detail.hpp"

namespace addrparse {

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_postal_token(std::string_view token) {
    // Trailing punctuation does not block the pattern.
    while (!token.empty() &&
           (token.back() == '.' || token.back() == ',' || token.back() == ';')) {
        token.remove_suffix(1);
    }
    const auto all_digits = [](std::string_view s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (token.size() == 5 || token.size() == 9) return all_digits(token);
    if (token.size() == 10 && token[5] == '-') {
        return all_digits(token.substr(0, 5)) && all_digits(token.substr(6));
    }
    return false;
}

bool ends_with_postal_pattern(std::string_view line, const CanonicalLexica& lexica) {
    const auto tokens = split_tokens(std::string(trim_view(line)));
    if (tokens.empty()) return false;
    std::size_t last = tokens.size() - 1;
    if (lexica.lookup(Lexicon::kCountry, tokens[last]).has_value()) {
        if (last == 0) return false;
        --last;
    }
    return is_postal_token(tokens[last]);
}

std::set<std::string> detect_signals(std::string_view joined_text, bool postal,
                                     const CanonicalLexica& lexica) {
    std::set<std::string> signals;
    if (postal) signals.emplace(kSignalPostalPattern);
    for (const auto& token : split_tokens(joined_text)) {
        std::string_view core = token;
        while (!core.empty() && (core.back() == '.' || core.back() == ',')) {
            core.remove_suffix(1);
        }
        if (core.size() == 2 && lexica.state_codes().contains(std::string(core))) {
            signals.emplace(kSignalStateToken);
        }
        if (token.find('#') != std::string::npos ||
            lexica.lookup(Lexicon::kUnitType, core).has_value()) {
            signals.emplace(kSignalUnitMarker);
        }
        if (!signals.contains(std::string(kSignalPostalPattern)) &&
            is_postal_token(core)) {
            signals.emplace(kSignalPostalPattern);
        }
    }
    signals.emplace(kSignalLengthOk);
    signals.emplace(kSignalEntropyOk);
    return signals;
}

class IdAssigner {
public:
    explicit IdAssigner(const RecordIdGenerator& gen) : gen_(gen) {}

    std::string next(const SourceRef& ref) {
        if (gen_) return gen_(ref);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "r%06zu", ++counter_);
        return buf;
    }

private:
    const RecordIdGenerator& gen_;
    std::size_t counter_ = 0;
};

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool looks_like_header(const std::vector<std::string>& cells) {
    if (cells.size() < 2) return false;
    std::size_t named = 0;
    for (const auto& cell : cells) {
        const std::string folded = lexicon_fold(std::string(trim_view(cell)));
        if (folded.empty()) continue;
        bool match = false;
        for (const auto& name : ParsedRecord::field_names()) {
            if (folded == name) {
                match = true;
                break;
            }
        }
        if (!match) return false;
        ++named;
    }
    return named >= 2;
}

std::vector<CandidateRecord> records_from_csv(std::string_view bytes,
                                              std::string_view input_name,
                                              const CanonicalLexica& lexica,
                                              IdAssigner& ids) {
    std::vector<CandidateRecord> records;
    for (const auto& row : detail::parse_csv(bytes)) {
        if (looks_like_header(row.cells)) continue;
        std::string joined;
        for (const auto& cell : row.cells) {
            const auto trimmed = trim_view(cell);
            if (trimmed.empty()) continue;
            if (!joined.empty()) joined.push_back(' ');
            joined += std::string(trimmed);
        }
        if (joined.empty()) continue;
        CandidateRecord record;
        record.source_ref = {std::string(input_name), row.start_line, row.end_line};
        record.raw_text = joined;
        record.signals = detect_signals(joined, false, lexica);
        record.record_id = ids.next(record.source_ref);
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<CandidateRecord> records_from_json(std::string_view bytes,
                                               std::string_view input_name,
                                               const CanonicalLexica& lexica,
                                               IdAssigner& ids) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& outer) {
        // JSON Lines fallback: one value per line.
        doc = nlohmann::json::array();
        for (const auto& line : split_lines(bytes)) {
            if (trim_view(line).empty()) continue;
            try {
                doc.push_back(nlohmann::json::parse(line));
            } catch (const nlohmann::json::parse_error&) {
                throw InputFormatError("invalid JSON input: " +
                                       std::string(outer.what()));
            }
        }
    }
    if (doc.is_object() && doc.contains("records")) doc = doc["records"];
    if (!doc.is_array()) {
        throw InputFormatError(
            "JSON input must be an array of strings, an array of objects with "
            "a \"text\" member, or an object with a \"records\" array");
    }
    std::vector<CandidateRecord> records;
    std::size_t ordinal = 0;
    for (const auto& element : doc) {
        ++ordinal;
        std::string text;
        if (element.is_string()) {
            text = element.get<std::string>();
        } else if (element.is_object() && element.contains("text") &&
                   element["text"].is_string()) {
            text = element["text"].get<std::string>();
        } else {
            throw InputFormatError("JSON record " + std::to_string(ordinal) +
                                   " is neither a string nor an object with a "
                                   "\"text\" member");
        }
        const auto trimmed = trim_view(text);
        if (trimmed.empty()) continue;
        CandidateRecord record;
        record.source_ref = {std::string(input_name), ordinal, ordinal};
        record.raw_text = std::string(trimmed);
        record.signals = detect_signals(record.raw_text, false, lexica);
        record.record_id = ids.next(record.source_ref);
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace

std::string_view to_string(InputKind kind) {
    switch (kind) {
        case InputKind::kCsv: return "csv";
        case InputKind::kJson: return "json";
        case InputKind::kTxt: return "txt";
    }
    return "txt";
}

InputKind detect_input_kind(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".csv") return InputKind::kCsv;
    if (ext == ".json" || ext == ".jsonl" || ext == ".ndjson") return InputKind::kJson;
    if (ext == ".txt") return InputKind::kTxt;

    std::ifstream in(path, std::ios::binary);
    if (!in) throw UnreadableInputError("cannot read input " + path.string());
    std::string head(4096, '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    head.resize(static_cast<std::size_t>(in.gcount()));
    return detect_input_kind(std::string_view(head));
}

InputKind detect_input_kind(std::string_view bytes) {
    std::size_t i = 0;
    while (i < bytes.size() &&
           (bytes[i] == ' ' || bytes[i] == '\t' || bytes[i] == '\n' || bytes[i] == '\r')) {
        ++i;
    }
    if (i < bytes.size() && (bytes[i] == '[' || bytes[i] == '{')) return InputKind::kJson;

    // Delimiter-consistent lines: every sampled non-empty line carries the
    // same positive comma count.
    std::size_t sampled = 0;
    std::size_t expected = 0;
    bool first = true;
    for (const auto& line : split_lines(bytes)) {
        if (trim_view(line).empty()) continue;
        const auto commas =
            static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
        if (first) {
            expected = commas;
            first = false;
        } else if (commas != expected) {
            return InputKind::kTxt;
        }
        if (++sampled >= 10) break;
    }
    if (sampled >= 2 && expected > 0) return InputKind::kCsv;
    return InputKind::kTxt;
}

double line_entropy(std::string_view line) { return shannon_entropy(line); }

std::vector<CandidateRecord> segment_block(std::string_view text,
                                           const CanonicalLexica& lexica,
                                           std::string_view input_name,
                                           const RecordIdGenerator& id_gen,
                                           const SegmentOptions& options) {
    std::vector<CandidateRecord> records;
    IdAssigner ids(id_gen);

    std::vector<std::string> open_lines;
    std::size_t open_start = 0;
    std::size_t open_end = 0;
    bool open_postal = false;

    const auto flush = [&] {
        if (open_lines.empty()) return;
        CandidateRecord record;
        record.source_ref = {std::string(input_name), open_start, open_end};
        std::string joined;
        for (const auto& line : open_lines) {
            if (!joined.empty()) joined.push_back(' ');
            joined += line;
        }
        record.raw_text = joined;
        record.signals = detect_signals(joined, open_postal, lexica);
        record.record_id = ids.next(record.source_ref);
        records.push_back(std::move(record));
        open_lines.clear();
        open_postal = false;
    };

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto trimmed = trim_view(lines[i]);
        const bool too_short = utf8_codepoints(trimmed).size() < options.min_line_length;
        const bool low_entropy = line_entropy(trimmed) < options.entropy_threshold;
        if (too_short || low_entropy) {
            flush();
            continue;
        }
        if (open_lines.empty()) open_start = line_no;
        open_end = line_no;
        open_lines.emplace_back(trimmed);
        if (ends_with_postal_pattern(trimmed, lexica)) {
            open_postal = true;
            flush();
        } else if (open_lines.size() >= options.max_record_lines) {
            flush();
        }
    }
    flush();
    return records;
}

std::vector<CandidateRecord> read_input(const std::filesystem::path& path,
                                        const CanonicalLexica& lexica,
                                        const RecordIdGenerator& id_gen,
                                        const SegmentOptions& options) {
    std::string bytes;
    std::string name;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        bytes = buffer.str();
        name = "stdin";
        return read_input_bytes(bytes, detect_input_kind(std::string_view(bytes)),
                                name, lexica, id_gen, options);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UnreadableInputError("cannot read input " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    bytes = buffer.str();
    name = path.filename().string();
    return read_input_bytes(bytes, detect_input_kind(path), name, lexica, id_gen,
                            options);
}

std::vector<CandidateRecord> read_input_bytes(std::string_view bytes, InputKind kind,
                                              std::string_view input_name,
                                              const CanonicalLexica& lexica,
                                              const RecordIdGenerator& id_gen,
                                              const SegmentOptions& options) {
    IdAssigner ids(id_gen);
    switch (kind) {
        case InputKind::kCsv:
            return records_from_csv(bytes, input_name, lexica, ids);
        case InputKind::kJson:
            return records_from_json(bytes, input_name, lexica, ids);
        case InputKind::kTxt:
            return segment_block(bytes, lexica, input_name, id_gen, options);
    }
    return {};
}

}  // namespace addrparse
