#include "addrparse/schema.hpp"

#include <algorithm>

namespace addrparse {

namespace {

constexpr std::array<std::string_view, ParsedRecord::kFieldCount> kFieldNames = {
    "record_id",    "prefix_title",    "first_name",  "middle_name",
    "last_name",    "suffix",          "street_number", "pre_directional",
    "street_name",  "street_type",     "post_directional", "unit_type",
    "unit_number",  "city",            "state",       "postal_code",
    "country",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

const std::array<std::string_view, ParsedRecord::kFieldCount>&
ParsedRecord::field_names() {
    return kFieldNames;
}

std::string& ParsedRecord::field(std::size_t index) {
    return const_cast<std::string&>(
        static_cast<const ParsedRecord*>(this)->field(index));
}

const std::string& ParsedRecord::field(std::size_t index) const {
    static const std::string empty;
    switch (index) {
        case 0: return record_id;
        case 1: return prefix_title;
        case 2: return first_name;
        case 3: return middle_name;
        case 4: return last_name;
        case 5: return suffix;
        case 6: return street_number;
        case 7: return pre_directional;
        case 8: return street_name;
        case 9: return street_type;
        case 10: return post_directional;
        case 11: return unit_type;
        case 12: return unit_number;
        case 13: return city;
        case 14: return state;
        case 15: return postal_code;
        case 16: return country;
        default: throw Error("field index out of range: " + std::to_string(index));
    }
    return empty;
}

std::string_view to_string(Severity severity) {
    switch (severity) {
        case Severity::kError: return "error";
        case Severity::kCorrected: return "corrected";
        case Severity::kWarning: return "warning";
    }
    return "error";
}

ParsedRecord parse_row(std::string_view line,
                       const std::optional<std::string>& expected_id) {
    if (trim(line).empty()) throw EmptyRowError();

    ParsedRecord record;
    std::size_t field_index = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '|') {
            if (field_index >= ParsedRecord::kFieldCount) {
                // Count the rest to report the real total.
                std::size_t total = field_index + 1;
                for (std::size_t j = i; j < line.size(); ++j) {
                    if (line[j] == '|') ++total;
                }
                throw FieldCountError(total, ParsedRecord::kFieldCount);
            }
            record.field(field_index++) =
                std::string(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (field_index != ParsedRecord::kFieldCount) {
        throw FieldCountError(field_index, ParsedRecord::kFieldCount);
    }
    if (expected_id && record.record_id != *expected_id) {
        throw IdMismatchError(*expected_id, record.record_id);
    }
    return record;
}

std::string serialize_row(const ParsedRecord& record) {
    std::string out;
    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        const std::string& value = record.field(i);
        if (value.find('|') != std::string::npos) {
            throw IllegalCharacterError("field \"" + std::string(kFieldNames[i]) +
                                        "\" contains a pipe character");
        }
        if (i > 0) out.push_back('|');
        out += value;
    }
    return out;
}

}  // namespace addrparse
