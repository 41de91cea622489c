#include "addrparse/prompt.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace addrparse {

namespace detail {
extern const std::string_view k_embedded_scaffold;
}

namespace {

constexpr std::string_view kExamplesMarker = "{{examples}}";
constexpr std::string_view kInputsMarker = "{{inputs}}";
constexpr std::string_view kNegativeGuidance = "Do not output headers or explanations";
constexpr std::string_view kRulesAnchor = "Do not invent data";
constexpr std::string_view kRoleAnchor = "You are";

std::string sha256_hex12(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(12);
    for (unsigned int i = 0; i < len && out.size() < 12; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        if (out.size() < 12) out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::vector<WorkedExample> pinned_examples() {
    return {
        {"rid001|Mr. John A. Smith, 123-1/2 NE Main St Apt 4B, Phoenix AZ 85004 USA",
         "rid001|Mr.|John|A.|Smith||123-1/2|NE|Main|Street||Apt|4B|Phoenix|AZ|85004|USA"},
        {"rid002|Dr. Maria L. Garcia-Lopez Jr., 900 W Oak Avenue S Ste 12, Austin TX "
         "78701-4321 USA",
         "rid002|Dr.|Maria|L.|Garcia-Lopez|Jr.|900|W|Oak|Avenue|S|Ste|12|Austin|TX|"
         "787014321|USA"},
    };
}

void replace_all(std::string& text, std::string_view marker, std::string_view value) {
    std::size_t pos = 0;
    while ((pos = text.find(marker, pos)) != std::string::npos) {
        text.replace(pos, marker.size(), value);
        pos += value.size();
    }
}

}  // namespace

std::string schema_line() {
    std::string line;
    for (const auto& name : ParsedRecord::field_names()) {
        if (!line.empty()) line.push_back('|');
        line += name;
    }
    return line;
}

const Scaffold& Scaffold::builtin() {
    static const Scaffold instance = Scaffold::from_text(
        std::string(detail::k_embedded_scaffold), pinned_examples());
    return instance;
}

Scaffold Scaffold::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read scaffold file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str(), pinned_examples());
}

Scaffold Scaffold::from_text(std::string template_text,
                             std::vector<WorkedExample> examples) {
    Scaffold scaffold;
    scaffold.template_text_ = std::move(template_text);
    scaffold.examples_ = std::move(examples);
    scaffold.version_ = "sha256:" + sha256_hex12(scaffold.template_text_);
    return scaffold;
}

void Scaffold::validate() const {
    const auto require = [&](bool ok, std::string_view what) {
        if (!ok) {
            throw ScaffoldIncompleteError("scaffold missing " + std::string(what));
        }
    };
    require(template_text_.find(kRoleAnchor) != std::string::npos, "role line");
    require(template_text_.find(schema_line()) != std::string::npos, "schema line");
    require(template_text_.find(kRulesAnchor) != std::string::npos, "rules line");
    require(template_text_.find(kNegativeGuidance) != std::string::npos,
            "negative guidance");
    require(template_text_.find(kExamplesMarker) != std::string::npos,
            "{{examples}} marker");
    require(template_text_.find(kInputsMarker) != std::string::npos,
            "{{inputs}} marker");
    require(examples_.size() >= 2, "two worked examples");
}

std::vector<PromptBatch> make_batches(std::vector<NormalizedRecord> records,
                                      std::size_t size, std::string_view run_id) {
    if (records.empty()) throw EmptyInputError("no records to batch");
    if (size == 0) throw Error("batch size must be positive");

    std::vector<PromptBatch> batches;
    batches.reserve((records.size() + size - 1) / size);
    std::size_t seq = 0;
    for (std::size_t start = 0; start < records.size(); start += size) {
        PromptBatch batch;
        char suffix[16];
        std::snprintf(suffix, sizeof(suffix), "-b%04zu", ++seq);
        batch.batch_id = std::string(run_id) + suffix;
        const std::size_t end = std::min(start + size, records.size());
        batch.records.assign(std::make_move_iterator(records.begin() + start),
                             std::make_move_iterator(records.begin() + end));
        batches.push_back(std::move(batch));
    }
    return batches;
}

std::string assemble_prompt(const PromptBatch& batch, const Scaffold& scaffold) {
    scaffold.validate();
    if (batch.records.empty()) throw EmptyInputError("batch has no records");

    std::string examples;
    for (const auto& example : scaffold.examples()) {
        examples += "IN: " + example.input + "\n";
        examples += "OUT: " + example.output + "\n";
    }
    if (!examples.empty()) examples.pop_back();

    std::string inputs;
    for (std::size_t i = 0; i < batch.records.size(); ++i) {
        inputs += std::to_string(i + 1) + ". " + batch.records[i].record_id + "|" +
                  batch.records[i].text + "\n";
    }
    if (!inputs.empty()) inputs.pop_back();

    std::string rendered = scaffold.template_text();
    replace_all(rendered, kExamplesMarker, examples);
    replace_all(rendered, kInputsMarker, inputs);
    return rendered;
}

}  // namespace addrparse
