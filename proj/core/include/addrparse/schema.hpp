#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace addrparse {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldCountError : public Error {
public:
    FieldCountError(std::size_t got, std::size_t want)
        : Error("row has " + std::to_string(got) + " fields, want " +
                std::to_string(want)),
          got_(got), want_(want) {}
    std::size_t got() const { return got_; }
    std::size_t want() const { return want_; }

private:
    std::size_t got_;
    std::size_t want_;
};

class IdMismatchError : public Error {
public:
    IdMismatchError(std::string expected, std::string actual)
        : Error("record id mismatch: expected \"" + expected + "\", got \"" +
                actual + "\""),
          expected_(std::move(expected)), actual_(std::move(actual)) {}
    const std::string& expected() const { return expected_; }
    const std::string& actual() const { return actual_; }

private:
    std::string expected_;
    std::string actual_;
};

class EmptyRowError : public Error {
public:
    EmptyRowError() : Error("blank row") {}
};

class IllegalCharacterError : public Error {
public:
    using Error::Error;
};

/// The 17-field structured output row. Fields are stored verbatim; the
/// validation layers decide whether values belong to the admissible sets.
struct ParsedRecord {
    std::string record_id;
    std::string prefix_title;
    std::string first_name;
    std::string middle_name;
    std::string last_name;
    std::string suffix;
    std::string street_number;
    std::string pre_directional;
    std::string street_name;
    std::string street_type;
    std::string post_directional;
    std::string unit_type;
    std::string unit_number;
    std::string city;
    std::string state;
    std::string postal_code;
    std::string country;

    static constexpr std::size_t kFieldCount = 17;

    /// Schema field names in wire order.
    static const std::array<std::string_view, kFieldCount>& field_names();

    std::string& field(std::size_t index);
    const std::string& field(std::size_t index) const;

    bool operator==(const ParsedRecord&) const = default;
};

enum class Severity { kError, kCorrected, kWarning };

std::string_view to_string(Severity severity);

/// One validation-rule outcome attached to a record.
struct RuleFinding {
    std::string rule_id;
    Severity severity = Severity::kError;
    std::string field;  // schema field name, or "row"
    std::string message;
    std::optional<std::string> suggestion;

    bool operator==(const RuleFinding&) const = default;
};

/// Splits a pipe-delimited line into a record, trimming per-field whitespace.
/// Only structural failures throw; canonical-set violations are left to the
/// validation layers.
ParsedRecord parse_row(std::string_view line,
                       const std::optional<std::string>& expected_id = {});

/// Inverse of parse_row: pipe-joins the 17 fields in schema order.
std::string serialize_row(const ParsedRecord& record);

}  // namespace addrparse
