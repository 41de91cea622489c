#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "addrparse/prompt.hpp"

namespace addrparse {

class BackendUnavailableError : public Error {
public:
    using Error::Error;
};

class MalformedPromptError : public Error {
public:
    using Error::Error;
};

/// Decoding and batch controls. The defaults are the fixed settings used for
/// every run: max_tokens 1500, temperature 0.30, top_p 0.90, top_k 50, one
/// retry with tightened stops.
struct DecodingConfig {
    int max_tokens = 1500;
    double temperature = 0.30;
    double top_p = 0.90;
    int top_k = 50;
    std::vector<std::string> stop_sequences = {"\n\n"};
    int retries = 1;
    std::optional<std::uint64_t> seed;  // forwarded to backends that support it
};

/// The retry configuration: adds stop sequences that cut off scaffold echoes
/// (a superset of the first attempt's stops) and caps max_tokens at
/// 96 tokens per expected row.
DecodingConfig tightened_for_retry(const DecodingConfig& config,
                                   std::size_t batch_size);

struct GuardResult {
    bool passed = false;
    std::string reason;
};

struct ModelResponse {
    std::string raw_text;
    int attempt = 1;
    std::chrono::milliseconds latency{0};
    std::string backend_name;
    GuardResult guard;
};

class GuardFailureError : public Error {
public:
    GuardFailureError(const std::string& message, ModelResponse last)
        : Error(message), last_response_(std::move(last)) {}
    const ModelResponse& last_response() const { return last_response_; }

private:
    ModelResponse last_response_;
};

/// A pluggable completion backend. Implementations must be safe to call from
/// multiple threads.
class Backend {
public:
    virtual ~Backend() = default;
    virtual std::string name() const = 0;
    virtual std::string complete(const std::string& prompt,
                                 const DecodingConfig& config) = 0;
};

/// Deterministic offline backend: parses the prompt's numbered input block
/// with a rule cascade and emits pipe rows. Same prompt, same response.
/// Unknown components become empty fields; it never invents data.
class MockBackend : public Backend {
public:
    explicit MockBackend(const CanonicalLexica& lexica = CanonicalLexica::builtin())
        : lexica_(lexica) {}
    std::string name() const override { return "mock"; }
    std::string complete(const std::string& prompt,
                         const DecodingConfig& config) override;

private:
    const CanonicalLexica& lexica_;
};

/// The mock's response function, exposed for direct testing.
std::string mock_backend_respond(std::string_view prompt,
                                 const CanonicalLexica& lexica);

/// The single-record rule cascade behind the mock: title and name tokens,
/// then number / directional / street / type, unit designators, and the
/// city-state-ZIP-country tail.
ParsedRecord mock_parse_text(std::string_view record_id, std::string_view text,
                             const CanonicalLexica& lexica);

/// Wraps another backend and corrupts the response rows whose record ids are
/// in `corrupt_ids`. Corruption ops (chosen deterministically per record id)
/// keep the response inside the format guard's charset so damage surfaces in
/// the validator, not as a batch-level guard failure.
class FaultInjectingBackend : public Backend {
public:
    FaultInjectingBackend(std::shared_ptr<Backend> inner,
                          std::unordered_set<std::string> corrupt_ids,
                          std::uint64_t seed);
    std::string name() const override { return inner_->name() + "+faults"; }
    std::string complete(const std::string& prompt,
                         const DecodingConfig& config) override;

private:
    std::shared_ptr<Backend> inner_;
    std::unordered_set<std::string> corrupt_ids_;
    std::uint64_t seed_;
};

/// Generic HTTP adapter speaking a minimal JSON POST contract:
/// {prompt, max_tokens, temperature, top_p, top_k, stop, seed?} -> {text}.
/// The bearer token, when set, is sent but never logged.
class HttpBackend : public Backend {
public:
    HttpBackend(std::string endpoint, std::string auth_token = "");
    std::string name() const override { return "http"; }
    std::string complete(const std::string& prompt,
                         const DecodingConfig& config) override;

private:
    std::string endpoint_;
    std::string auth_token_;
};

/// Structural format guard: after dropping blank lines, every line must
/// split into exactly 17 pipe fields, the line count must not exceed the
/// batch size, and all characters must belong to the permitted set (letters
/// including diacritics, digits, space, and |.,#/-'&). A response that
/// parses as a JSON array of 17-field rows also passes.
GuardResult structural_precheck(std::string_view response, std::size_t batch_size);

/// The rows a guard-passing response contains: non-blank pipe lines, or the
/// elements of the JSON-array fallback rendered as pipe rows.
std::vector<std::string> extract_rows(std::string_view response);

/// Row-level alignment failure.
struct RowError {
    std::string rule_id;  // row.missing, row.id_mismatch, row.field_count
    std::string message;
};

struct RowResult {
    std::string record_id;  // the expected id from the batch
    std::optional<ParsedRecord> record;
    std::optional<RowError> error;
};

struct BatchParse {
    std::vector<RowResult> rows;
    std::vector<std::string> warnings;
};

/// Matches response rows to batch records by position and cross-checks each
/// row's field-1 id against the expected record id. Mismatched or missing
/// rows yield row errors; surplus rows are discarded with a warning. Rows
/// are never reassigned by guessing.
BatchParse parse_response(const ModelResponse& response, const PromptBatch& batch);

/// One audit event (prompt, response, or guard failure).
struct AuditEvent {
    std::string kind;
    std::string batch_id;
    int attempt = 0;
    std::string text;
    std::map<std::string, std::string> fields;
};

using AuditSink = std::function<void(const AuditEvent&)>;

/// Runs one batch through the backend with the format guard and single
/// retry: on a guard failure with retries left, reissues with tightened
/// stops. Prompts and responses go to the audit sink when one is supplied.
/// Throws GuardFailureError when every attempt fails the guard.
ModelResponse infer_batch(const PromptBatch& batch, const DecodingConfig& config,
                          Backend& backend, const AuditSink& audit = {});

}  // namespace addrparse
