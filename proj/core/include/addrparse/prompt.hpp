#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "addrparse/normalize.hpp"

namespace addrparse {

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class ScaffoldIncompleteError : public Error {
public:
    using Error::Error;
};

/// One worked example embedded in the prompt.
struct WorkedExample {
    std::string input;   // raw record text, with its record id
    std::string output;  // the 17-field pipe row
};

/// The prompt template. Everything outside the {{examples}} and {{inputs}}
/// markers is emitted verbatim; the worked examples are pinned data carried
/// alongside the template text.
class Scaffold {
public:
    /// The compiled-in default scaffold with its two worked examples.
    static const Scaffold& builtin();

    /// Loads template text from a file, keeping the builtin worked examples.
    static Scaffold load(const std::filesystem::path& path);

    /// Builds from raw template text and examples.
    static Scaffold from_text(std::string template_text,
                              std::vector<WorkedExample> examples);

    const std::string& template_text() const { return template_text_; }
    const std::vector<WorkedExample>& examples() const { return examples_; }

    /// Content hash identifying this scaffold revision ("sha256:<12 hex>").
    const std::string& version() const { return version_; }

    /// Throws ScaffoldIncompleteError unless the template carries the role
    /// line, the schema line, the rules line, the negative guidance, both
    /// substitution markers, and at least two worked examples.
    void validate() const;

private:
    std::string template_text_;
    std::vector<WorkedExample> examples_;
    std::string version_;
};

/// The schema line pinned into every prompt (field names joined by pipes).
std::string schema_line();

/// A numbered batch of at most 16 records plus its rendered prompt.
struct PromptBatch {
    std::string batch_id;
    std::vector<NormalizedRecord> records;
    std::string rendered;
    std::string scaffold_version;
};

inline constexpr std::size_t kDefaultBatchSize = 16;

/// Chunks records into consecutive batches of `size` (the final batch may be
/// smaller). Batch ids are `<run_id>-b<seq>` with a zero-padded sequence.
/// Rendered text is left empty; assemble_prompt fills it.
std::vector<PromptBatch> make_batches(std::vector<NormalizedRecord> records,
                                      std::size_t size = kDefaultBatchSize,
                                      std::string_view run_id = "run");

/// Renders the scaffold around the batch: examples formatted as IN:/OUT:
/// pairs, inputs as "<n>. <record_id>|<text>" lines. Deterministic.
std::string assemble_prompt(const PromptBatch& batch, const Scaffold& scaffold);

}  // namespace addrparse
