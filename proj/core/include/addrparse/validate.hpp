#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "addrparse/lexica.hpp"
#include "addrparse/schema.hpp"

namespace addrparse {

class UnknownPrefixError : public Error {
public:
    using Error::Error;
};

enum class RecordStatus { kValid, kCorrected, kReview, kRejected };

std::string_view to_string(RecordStatus status);
std::optional<RecordStatus> record_status_from_string(std::string_view name);

/// What a rule does when it fires: normalize writes the canonical value and
/// reports a corrected finding, review routes the record to assisted review,
/// reject marks it invalid (other fields are kept), warn annotates only.
enum class RuleAction { kNormalize, kReview, kReject, kWarn };

struct RuleInfo {
    std::string_view id;
    int layer = 0;  // 1 schema, 2 canonicalization, 3 cross-field, 0 row-level
    RuleAction action = RuleAction::kWarn;
    std::string_view description;
};

/// The fixed rule registry, exported alongside results for auditability.
const std::vector<RuleInfo>& rule_registry();
const RuleInfo* find_rule(std::string_view rule_id);

/// Per-record validation verdict.
struct ValidationOutcome {
    std::string record_id;
    RecordStatus status = RecordStatus::kValid;
    std::vector<RuleFinding> findings;
    std::optional<ParsedRecord> corrected_record;
};

/// Layer 1: exact field count is structural (parse_row), so this checks
/// basic types and charsets: digits-only ZIP of length 0/5/9, per-field
/// character sets, and a single-token middle name.
std::vector<RuleFinding> validate_layer1_schema(const ParsedRecord& record);

/// Layer 2: maps directionals, street types, unit types, and state casing
/// onto the admissible sets, reporting a corrected finding per change.
/// Unmappable tokens in closed sets yield error findings. Fields that layer
/// 1 already rejected are skipped.
std::pair<ParsedRecord, std::vector<RuleFinding>> validate_layer2_canonicalize(
    const ParsedRecord& record, const CanonicalLexica& lexica,
    const std::vector<RuleFinding>& layer1_findings = {});

/// Layer 3: cross-field constraints on the canonicalized record: ZIP-state
/// compatibility (with a suggested state from the prefix table), street
/// number without street name, state without ZIP, and identical pre/post
/// directionals.
std::vector<RuleFinding> validate_layer3_crossfield(const ParsedRecord& record,
                                                    const CanonicalLexica& lexica);

/// True when the prefix table maps the ZIP's first three digits to `state`.
/// Throws UnknownPrefixError when the prefix is unallocated (callers treat
/// that as a warning).
bool zip_state_consistent(std::string_view postal_code, std::string_view state,
                          const CanonicalLexica& lexica);

/// Runs all three layers and composes the status ladder.
ValidationOutcome validate_record(const ParsedRecord& record,
                                  const CanonicalLexica& lexica,
                                  std::vector<RuleFinding> extra_findings = {});

/// Status from a finding set: reject beats review/warn beats corrected;
/// no findings means valid.
RecordStatus status_for_findings(const std::vector<RuleFinding>& findings);

/// Composite confidence in [0,1]: 0.5 * rule-pass ratio + 0.3 * second-parse
/// agreement + 0.2 * (1 - token rarity), bucketed High (>= 0.90),
/// Medium (>= 0.70), Low (< 0.70).
struct ConfidenceScore {
    double value = 0.0;
    double rule_pass_ratio = 0.0;
    double agreement = 0.0;
    double rarity = 0.0;
    std::string_view bucket = "Low";
};

std::string_view bucket_for_value(double value);

/// Token frequencies over the run's normalized input corpus; tokens seen
/// fewer than twice and absent from every lexicon count as rare.
using TokenCounts = std::unordered_map<std::string, std::size_t>;

TokenCounts build_token_counts(const std::vector<std::string>& texts);

ConfidenceScore score_confidence(const ParsedRecord& record,
                                 const std::vector<RuleFinding>& findings,
                                 const std::optional<ParsedRecord>& second_parse,
                                 const CanonicalLexica& lexica,
                                 const TokenCounts* corpus_counts = nullptr);

}  // namespace addrparse
