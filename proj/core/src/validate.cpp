#include "addrparse/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include "addrparse/text.hpp"

namespace addrparse {

namespace {

constexpr std::array<RuleInfo, 18> kRegistry = {{
    {"schema.zip_digits", 1, RuleAction::kReject,
     "postal_code must contain digits only"},
    {"schema.zip_length", 1, RuleAction::kReject,
     "postal_code must be empty, 5 digits, or 9 digits"},
    {"schema.field_charset", 1, RuleAction::kReject,
     "field contains characters outside its allowed set"},
    {"schema.middle_name", 1, RuleAction::kWarn,
     "middle_name should be a single name token"},
    {"canon.directional", 2, RuleAction::kNormalize,
     "directional mapped to the canonical compass set"},
    {"canon.directional_unknown", 2, RuleAction::kReview,
     "directional outside the canonical compass set"},
    {"canon.street_type", 2, RuleAction::kNormalize,
     "street type mapped to its canonical long form"},
    {"canon.street_type_unknown", 2, RuleAction::kReview,
     "street type outside the canonical set"},
    {"canon.unit_type", 2, RuleAction::kNormalize,
     "unit designator mapped to its canonical form"},
    {"canon.unit_type_unknown", 2, RuleAction::kReview,
     "unit designator outside the canonical set"},
    {"canon.state_case", 2, RuleAction::kNormalize,
     "state code mapped to USPS uppercase form"},
    {"canon.state_unknown", 2, RuleAction::kReject,
     "state outside the USPS two-letter set"},
    {"cross.zip_state", 3, RuleAction::kReview,
     "ZIP prefix is allocated to a different state"},
    {"cross.zip_prefix_unknown", 3, RuleAction::kWarn,
     "ZIP prefix is not in the allocation table"},
    {"cross.missing_street_name", 3, RuleAction::kReview,
     "street number present but street name empty"},
    {"cross.state_no_zip", 3, RuleAction::kWarn,
     "state present but postal code empty"},
    {"cross.dual_directional", 3, RuleAction::kWarn,
     "pre and post directionals are identical"},
    {"row.alignment", 0, RuleAction::kReject,
     "response row missing, misaligned, or malformed"},
}};

bool all_digits(std::string_view s) {
    return s.find_first_not_of("0123456789") == std::string_view::npos;
}

bool is_digit_cp(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

/// Per-field character policies beyond the wire-format guard.
bool char_allowed_in_field(std::size_t field_index, char32_t cp) {
    const bool letter = is_address_letter(cp);
    const bool digit = is_digit_cp(cp);
    switch (field_index) {
        case 0:  // record_id
            return letter || digit || cp == U'-' || cp == U'_';
        case 1:  // prefix_title
        case 5:  // suffix
            return letter || digit || cp == U'.';
        case 2:   // first_name
        case 3:   // middle_name
        case 4:   // last_name
            return letter || cp == U' ' || cp == U'.' || cp == U'\'' || cp == U'-';
        case 6:  // street_number
            return letter || digit || cp == U'-' || cp == U'/';
        case 7:   // pre_directional
        case 10:  // post_directional
            return letter || cp == U'.';
        case 8:  // street_name
            return letter || digit || cp == U' ' || cp == U'.' || cp == U'\'' ||
                   cp == U'-' || cp == U'&' || cp == U'/';
        case 9:  // street_type
            return letter;
        case 11:  // unit_type
            return letter || cp == U'#';
        case 12:  // unit_number
            return letter || digit || cp == U'-' || cp == U'/';
        case 13:  // city
            return letter || digit || cp == U' ' || cp == U'.' || cp == U'\'' ||
                   cp == U'-' || cp == U'&';
        case 14:  // state
            return letter;
        case 15:  // postal_code handled by the ZIP rules
            return true;
        case 16:  // country
            return letter || cp == U' ' || cp == U'.' || cp == U'\'' || cp == U'-';
        default:
            return false;
    }
}

RuleFinding make_finding(std::string_view rule_id, Severity severity,
                         std::string_view field, std::string message,
                         std::optional<std::string> suggestion = std::nullopt) {
    RuleFinding finding;
    finding.rule_id = std::string(rule_id);
    finding.severity = severity;
    finding.field = std::string(field);
    finding.message = std::move(message);
    finding.suggestion = std::move(suggestion);
    return finding;
}

/// Canonicalizes one closed-set field in place, appending findings.
void canonicalize_field(ParsedRecord& record, std::size_t field_index,
                        Lexicon lexicon, std::string_view mapped_rule,
                        std::string_view unknown_rule,
                        const CanonicalLexica& lexica,
                        std::vector<RuleFinding>& findings) {
    std::string& value = record.field(field_index);
    if (value.empty()) return;
    const auto field_name = ParsedRecord::field_names()[field_index];
    const auto canonical = lexica.lookup(lexicon, value);
    if (!canonical) {
        findings.push_back(make_finding(
            unknown_rule, Severity::kError, field_name,
            "\"" + value + "\" is not in the " +
                std::string(lexicon_name(lexicon)) + " set"));
        return;
    }
    if (*canonical != value) {
        findings.push_back(make_finding(
            mapped_rule, Severity::kCorrected, field_name,
            "\"" + value + "\" normalized to \"" + *canonical + "\"", *canonical));
        value = *canonical;
    }
}

/// The evaluation units behind the rule-pass ratio. Each unit is one
/// applicability check; a unit fails when any of its findings fired.
struct EvalUnit {
    std::string_view name;
    std::vector<std::string_view> rule_ids;
};

std::vector<EvalUnit> evaluated_units(const ParsedRecord& record) {
    std::vector<EvalUnit> units;
    units.push_back({"row", {"row.alignment"}});
    units.push_back({"field_charset", {"schema.field_charset"}});
    if (!record.postal_code.empty()) {
        units.push_back({"zip_digits", {"schema.zip_digits"}});
        units.push_back({"zip_length", {"schema.zip_length"}});
    }
    if (!record.middle_name.empty()) {
        units.push_back({"middle_name", {"schema.middle_name"}});
    }
    if (!record.pre_directional.empty() || !record.post_directional.empty()) {
        units.push_back(
            {"directional", {"canon.directional", "canon.directional_unknown"}});
    }
    if (!record.street_type.empty()) {
        units.push_back(
            {"street_type", {"canon.street_type", "canon.street_type_unknown"}});
    }
    if (!record.unit_type.empty()) {
        units.push_back({"unit_type", {"canon.unit_type", "canon.unit_type_unknown"}});
    }
    if (!record.state.empty()) {
        units.push_back({"state", {"canon.state_case", "canon.state_unknown"}});
    }
    if (!record.postal_code.empty() && !record.state.empty()) {
        units.push_back(
            {"zip_state", {"cross.zip_state", "cross.zip_prefix_unknown"}});
    }
    if (!record.street_number.empty()) {
        units.push_back({"missing_street_name", {"cross.missing_street_name"}});
    }
    if (!record.state.empty()) {
        units.push_back({"state_no_zip", {"cross.state_no_zip"}});
    }
    if (!record.pre_directional.empty() && !record.post_directional.empty()) {
        units.push_back({"dual_directional", {"cross.dual_directional"}});
    }
    return units;
}

}  // namespace

std::string_view to_string(RecordStatus status) {
    switch (status) {
        case RecordStatus::kValid: return "valid";
        case RecordStatus::kCorrected: return "corrected";
        case RecordStatus::kReview: return "review";
        case RecordStatus::kRejected: return "rejected";
    }
    return "rejected";
}

std::optional<RecordStatus> record_status_from_string(std::string_view name) {
    if (name == "valid") return RecordStatus::kValid;
    if (name == "corrected") return RecordStatus::kCorrected;
    if (name == "review") return RecordStatus::kReview;
    if (name == "rejected") return RecordStatus::kRejected;
    return std::nullopt;
}

const std::vector<RuleInfo>& rule_registry() {
    static const std::vector<RuleInfo> registry(kRegistry.begin(), kRegistry.end());
    return registry;
}

const RuleInfo* find_rule(std::string_view rule_id) {
    // Row-level findings carry ids like row.missing / row.id_mismatch.
    if (rule_id.substr(0, 4) == "row.") rule_id = "row.alignment";
    for (const auto& rule : rule_registry()) {
        if (rule.id == rule_id) return &rule;
    }
    return nullptr;
}

std::vector<RuleFinding> validate_layer1_schema(const ParsedRecord& record) {
    std::vector<RuleFinding> findings;

    const std::string& zip = record.postal_code;
    if (!zip.empty()) {
        if (!all_digits(zip)) {
            findings.push_back(make_finding("schema.zip_digits", Severity::kError,
                                            "postal_code",
                                            "non-digit ZIP \"" + zip + "\""));
        } else if (zip.size() != 5 && zip.size() != 9) {
            findings.push_back(make_finding(
                "schema.zip_length", Severity::kError, "postal_code",
                "ZIP \"" + zip + "\" has " + std::to_string(zip.size()) +
                    " digits, want 5 or 9"));
        }
    }

    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        const std::string& value = record.field(i);
        std::size_t pos = 0;
        while (pos < value.size()) {
            const char32_t cp = utf8_decode(value, pos);
            if (!char_allowed_in_field(i, cp)) {
                findings.push_back(make_finding(
                    "schema.field_charset", Severity::kError,
                    ParsedRecord::field_names()[i],
                    "disallowed character in \"" + value + "\""));
                break;
            }
        }
    }

    if (record.middle_name.find(' ') != std::string::npos) {
        findings.push_back(make_finding(
            "schema.middle_name", Severity::kWarning, "middle_name",
            "middle_name \"" + record.middle_name + "\" is not a single token"));
    }
    return findings;
}

std::pair<ParsedRecord, std::vector<RuleFinding>> validate_layer2_canonicalize(
    const ParsedRecord& record, const CanonicalLexica& lexica,
    const std::vector<RuleFinding>& layer1_findings) {
    ParsedRecord out = record;
    std::vector<RuleFinding> findings;

    std::unordered_set<std::string> rejected_fields;
    for (const auto& finding : layer1_findings) {
        if (finding.severity == Severity::kError) rejected_fields.insert(finding.field);
    }
    const auto untouched = [&](std::size_t index) {
        return !rejected_fields.contains(
            std::string(ParsedRecord::field_names()[index]));
    };

    if (untouched(7)) {
        canonicalize_field(out, 7, Lexicon::kDirectional, "canon.directional",
                           "canon.directional_unknown", lexica, findings);
    }
    if (untouched(10)) {
        canonicalize_field(out, 10, Lexicon::kDirectional, "canon.directional",
                           "canon.directional_unknown", lexica, findings);
    }
    if (untouched(9)) {
        canonicalize_field(out, 9, Lexicon::kStreetType, "canon.street_type",
                           "canon.street_type_unknown", lexica, findings);
    }
    if (untouched(11)) {
        canonicalize_field(out, 11, Lexicon::kUnitType, "canon.unit_type",
                           "canon.unit_type_unknown", lexica, findings);
    }
    if (untouched(14) && !out.state.empty()) {
        const auto canonical = lexica.lookup(Lexicon::kState, out.state);
        if (!canonical) {
            findings.push_back(make_finding(
                "canon.state_unknown", Severity::kError, "state",
                "\"" + out.state + "\" is not a USPS state code"));
        } else if (*canonical != out.state) {
            findings.push_back(make_finding(
                "canon.state_case", Severity::kCorrected, "state",
                "\"" + out.state + "\" normalized to \"" + *canonical + "\"",
                *canonical));
            out.state = *canonical;
        }
    }
    return {std::move(out), std::move(findings)};
}

bool zip_state_consistent(std::string_view postal_code, std::string_view state,
                          const CanonicalLexica& lexica) {
    const auto mapped = lexica.state_for_zip_prefix(postal_code.substr(0, 3));
    if (!mapped) {
        throw UnknownPrefixError("ZIP prefix \"" +
                                 std::string(postal_code.substr(0, 3)) +
                                 "\" is not in the allocation table");
    }
    return *mapped == state;
}

std::vector<RuleFinding> validate_layer3_crossfield(const ParsedRecord& record,
                                                    const CanonicalLexica& lexica) {
    std::vector<RuleFinding> findings;

    const std::string& zip = record.postal_code;
    const bool zip_usable =
        (zip.size() == 5 || zip.size() == 9) && all_digits(zip);
    if (zip_usable && !record.state.empty() &&
        lexica.state_codes().contains(record.state)) {
        try {
            if (!zip_state_consistent(zip, record.state, lexica)) {
                const auto suggested = lexica.state_for_zip_prefix(zip.substr(0, 3));
                findings.push_back(make_finding(
                    "cross.zip_state", Severity::kError, "state",
                    "ZIP " + zip + " is allocated to " + *suggested + ", not " +
                        record.state,
                    *suggested));
            }
        } catch (const UnknownPrefixError& e) {
            findings.push_back(make_finding("cross.zip_prefix_unknown",
                                            Severity::kWarning, "postal_code",
                                            e.what()));
        }
    }

    if (!record.street_number.empty() && record.street_name.empty()) {
        findings.push_back(make_finding(
            "cross.missing_street_name", Severity::kError, "street_name",
            "street number \"" + record.street_number +
                "\" has no street name; routing to assisted review"));
    }

    if (!record.state.empty() && zip.empty()) {
        findings.push_back(make_finding("cross.state_no_zip", Severity::kWarning,
                                        "postal_code",
                                        "state present but postal code empty"));
    }

    if (!record.pre_directional.empty() &&
        record.pre_directional == record.post_directional) {
        findings.push_back(make_finding(
            "cross.dual_directional", Severity::kWarning, "post_directional",
            "pre and post directionals are both \"" + record.pre_directional + "\""));
    }
    return findings;
}

RecordStatus status_for_findings(const std::vector<RuleFinding>& findings) {
    if (findings.empty()) return RecordStatus::kValid;
    bool has_reject = false;
    bool has_review = false;
    bool has_corrected = false;
    for (const auto& finding : findings) {
        const RuleInfo* rule = find_rule(finding.rule_id);
        const RuleAction action = rule ? rule->action : RuleAction::kReview;
        switch (action) {
            case RuleAction::kReject: has_reject = true; break;
            case RuleAction::kReview:
            case RuleAction::kWarn: has_review = true; break;
            case RuleAction::kNormalize: has_corrected = true; break;
        }
    }
    if (has_reject) return RecordStatus::kRejected;
    if (has_review) return RecordStatus::kReview;
    if (has_corrected) return RecordStatus::kCorrected;
    return RecordStatus::kValid;
}

ValidationOutcome validate_record(const ParsedRecord& record,
                                  const CanonicalLexica& lexica,
                                  std::vector<RuleFinding> extra_findings) {
    ValidationOutcome outcome;
    outcome.record_id = record.record_id;

    std::vector<RuleFinding> findings = std::move(extra_findings);
    const auto layer1 = validate_layer1_schema(record);
    findings.insert(findings.end(), layer1.begin(), layer1.end());

    auto [canonical, layer2] = validate_layer2_canonicalize(record, lexica, layer1);
    findings.insert(findings.end(), layer2.begin(), layer2.end());

    const auto layer3 = validate_layer3_crossfield(canonical, lexica);
    findings.insert(findings.end(), layer3.begin(), layer3.end());

    outcome.status = status_for_findings(findings);
    outcome.findings = std::move(findings);
    if (canonical != record) outcome.corrected_record = std::move(canonical);
    return outcome;
}

std::string_view bucket_for_value(double value) {
    if (value >= 0.90) return "High";
    if (value >= 0.70) return "Medium";
    return "Low";
}

TokenCounts build_token_counts(const std::vector<std::string>& texts) {
    TokenCounts counts;
    for (const auto& text : texts) {
        for (const auto& token : split_tokens(text)) {
            ++counts[lexicon_fold(token)];
        }
    }
    return counts;
}

ConfidenceScore score_confidence(const ParsedRecord& record,
                                 const std::vector<RuleFinding>& findings,
                                 const std::optional<ParsedRecord>& second_parse,
                                 const CanonicalLexica& lexica,
                                 const TokenCounts* corpus_counts) {
    ConfidenceScore score;

    // Rule passes over the units actually evaluated for this record.
    std::unordered_set<std::string_view> fired;
    for (const auto& finding : findings) {
        fired.insert(std::string_view(finding.rule_id));
    }
    const auto units = evaluated_units(record);
    std::size_t failed = 0;
    for (const auto& unit : units) {
        bool unit_failed = false;
        for (const auto& rule_id : unit.rule_ids) {
            if (unit.name == "row") {
                // Any row.* finding fails the row unit.
                for (const auto& f : fired) {
                    if (f.substr(0, 4) == "row.") {
                        unit_failed = true;
                        break;
                    }
                }
            } else if (fired.contains(rule_id)) {
                unit_failed = true;
            }
            if (unit_failed) break;
        }
        if (unit_failed) ++failed;
    }
    score.rule_pass_ratio =
        units.empty() ? 1.0
                      : static_cast<double>(units.size() - failed) /
                            static_cast<double>(units.size());

    // Agreement across a second parse, or the neutral fallback.
    if (second_parse) {
        double sum = 0.0;
        for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
            sum += 1.0 - normalized_levenshtein(record.field(i),
                                                second_parse->field(i));
        }
        score.agreement = sum / static_cast<double>(ParsedRecord::kFieldCount);
    } else {
        score.agreement = findings.empty() ? 1.0 : 0.8;
    }

    // Rarity: record tokens absent from every lexicon and seen fewer than
    // twice in the run's input corpus.
    std::size_t total_tokens = 0;
    std::size_t rare_tokens = 0;
    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        for (const auto& token : split_tokens(record.field(i))) {
            ++total_tokens;
            if (lexica.knows_token(token)) continue;
            std::size_t count = 0;
            if (corpus_counts) {
                const auto it = corpus_counts->find(lexicon_fold(token));
                if (it != corpus_counts->end()) count = it->second;
            }
            if (count < 2) ++rare_tokens;
        }
    }
    score.rarity = total_tokens == 0
                       ? 0.0
                       : static_cast<double>(rare_tokens) /
                             static_cast<double>(total_tokens);

    score.value = 0.5 * score.rule_pass_ratio + 0.3 * score.agreement +
                  0.2 * (1.0 - score.rarity);
    score.value = std::clamp(score.value, 0.0, 1.0);
    score.bucket = bucket_for_value(score.value);
    return score;
}

}  // namespace addrparse
