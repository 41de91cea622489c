#include "addrparse/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "addrparse/text.hpp"
#include "eval_banks.hpp"

namespace addrparse {

namespace {

constexpr std::array<std::string_view, 8> kDirectionals = {"N", "NE", "E", "SE",
                                                           "S", "SW", "W", "NW"};

/// Deterministic helper over mt19937_64: raw modulo keeps draws identical
/// across standard libraries (uniform_int_distribution is not portable).
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(engine() % n);
    }
    bool chance(unsigned percent) { return below(100) < percent; }
    template <typename V>
    const auto& pick(const V& values) {
        return values[below(values.size())];
    }
};

std::string vary_zip(Rng& rng, std::string_view base) {
    static const std::array<std::string_view, 4> last2 = {"04", "21", "47", "88"};
    std::string zip(base);
    const auto pick = last2[rng.below(last2.size())];
    zip[3] = pick[0];
    zip[4] = pick[1];
    return zip;
}

std::string_view zip4_suffix(Rng& rng) {
    static const std::array<std::string_view, 4> pool = {"1234", "0042", "7710",
                                                         "2205"};
    return pool[rng.below(pool.size())];
}

struct RenderStyle {
    bool commas = true;
    bool abbrev_type = false;
    bool hash_unit = false;
};

/// Renders gold fields into one unstructured line. ZIP+4 renders with its
/// hyphen; the unit renders as "#<n>" under the hash style.
std::string render_us(const ParsedRecord& f, const RenderStyle& style,
                      std::string_view short_type, bool bare_unit_number = false) {
    std::vector<std::string> parts;
    const auto push = [&](std::string_view value) {
        if (!value.empty()) parts.emplace_back(value);
    };

    std::string segment;
    const auto flush_segment = [&] {
        if (segment.empty()) return;
        parts.push_back(segment);
        segment.clear();
    };
    const auto add = [&](std::string_view value) {
        if (value.empty()) return;
        if (!segment.empty()) segment.push_back(' ');
        segment += value;
    };

    add(f.prefix_title);
    add(f.first_name);
    add(f.middle_name);
    add(f.last_name);
    add(f.suffix);
    flush_segment();

    add(f.street_number);
    add(f.pre_directional);
    add(f.street_name);
    if (!f.street_type.empty()) {
        add(style.abbrev_type && !short_type.empty() ? short_type
                                                     : std::string_view(f.street_type));
    }
    add(f.post_directional);
    if (!f.unit_number.empty()) {
        if (bare_unit_number) {
            add(f.unit_number);
        } else if (style.hash_unit) {
            add("#" + f.unit_number);
        } else {
            flush_segment();
            add(f.unit_type);
            add(f.unit_number);
        }
    }
    flush_segment();

    std::string zip = f.postal_code;
    if (zip.size() == 9) zip = zip.substr(0, 5) + "-" + zip.substr(5);
    add(f.city);
    add(f.state);
    add(zip);
    add(f.country);
    flush_segment();

    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += style.commas ? ", " : " ";
        out += parts[i];
    }
    (void)push;
    return out;
}

ParsedRecord make_us_fields(Rng& rng, bool& has_short_type,
                            std::string& short_type) {
    ParsedRecord f;
    if (rng.chance(30)) f.prefix_title = std::string(rng.pick(banks::titles()));
    f.first_name = std::string(rng.pick(banks::us_first_names()));
    if (rng.chance(40)) f.middle_name = std::string(rng.pick(banks::middle_initials()));
    f.last_name = std::string(rng.pick(banks::us_last_names()));
    if (rng.chance(8)) {
        const std::string second(rng.pick(banks::us_last_names()));
        if (second != f.last_name) f.last_name += "-" + second;
    }
    if (rng.chance(15)) f.suffix = std::string(rng.pick(banks::suffixes()));

    f.street_number = std::string(rng.pick(banks::street_numbers()));
    has_short_type = false;
    short_type.clear();
    if (rng.chance(6)) {
        f.street_name = std::string(rng.pick(banks::us_typeless_streets()));
        if (rng.chance(40)) f.pre_directional = std::string(rng.pick(kDirectionals));
    } else {
        if (rng.chance(25)) f.pre_directional = std::string(rng.pick(kDirectionals));
        f.street_name = std::string(rng.pick(banks::us_street_names()));
        const auto& type = rng.pick(banks::us_street_types());
        f.street_type = std::string(type.canonical);
        short_type = std::string(type.short_form);
        has_short_type = true;
        if (rng.chance(10)) f.post_directional = std::string(rng.pick(kDirectionals));
    }
    if (rng.chance(30)) {
        static const std::array<std::string_view, 3> unit_types = {"Apt", "Ste",
                                                                   "Unit"};
        f.unit_type = std::string(unit_types[rng.below(unit_types.size())]);
        f.unit_number = std::string(rng.pick(banks::unit_numbers()));
    }

    const auto& city = rng.pick(banks::us_cities());
    f.city = std::string(city.city);
    f.state = std::string(city.state);
    f.postal_code = vary_zip(rng, city.zip);
    if (rng.chance(20)) f.postal_code += std::string(zip4_suffix(rng));
    if (rng.chance(60)) f.country = "USA";
    return f;
}

GoldRecord make_us_record(Rng& rng) {
    GoldRecord gold;
    gold.cohort = Cohort::kUsStandard;
    bool has_short = false;
    std::string short_type;
    gold.fields = make_us_fields(rng, has_short, short_type);

    RenderStyle style;
    const std::size_t pick = rng.below(10);
    if (pick >= 4 && pick <= 6) {
        style.commas = false;
    } else if (pick >= 7 && pick <= 8) {
        style.abbrev_type = has_short;
    } else if (pick == 9 && !gold.fields.unit_number.empty()) {
        style.hash_unit = true;
        gold.fields.unit_type = "Unit";  // "#" canonicalizes to Unit
    }
    gold.raw_text = render_us(gold.fields, style, short_type);
    return gold;
}

GoldRecord make_pr_record(Rng& rng) {
    GoldRecord gold;
    gold.cohort = Cohort::kPuertoRico;
    ParsedRecord& f = gold.fields;
    f.first_name = std::string(rng.pick(banks::pr_first_names()));
    if (rng.chance(20)) f.middle_name = std::string(rng.pick(banks::middle_initials()));
    f.last_name = std::string(rng.pick(banks::pr_last_names()));
    if (rng.chance(30)) {
        const std::string second(rng.pick(banks::pr_last_names()));
        if (second != f.last_name) f.last_name += " " + second;
    }
    f.street_number = std::string(rng.pick(banks::street_numbers()));
    f.street_type = rng.chance(70) ? "Calle" : "Avenida";
    f.street_name = std::string(rng.pick(banks::pr_street_names()));
    if (rng.chance(15)) {
        f.unit_type = "Apt";
        f.unit_number = std::string(rng.pick(banks::unit_numbers()));
    }
    const auto& city = rng.pick(banks::pr_cities());
    f.city = std::string(city.city);
    f.state = std::string(city.state);
    f.postal_code = vary_zip(rng, city.zip);
    if (rng.chance(40)) f.country = "USA";

    const bool commas = rng.chance(60);
    const bool abbrev_avenida = f.street_type == "Avenida" && rng.chance(30);
    std::string street = f.street_number + " " +
                         (abbrev_avenida ? "Avda." : f.street_type) + " " +
                         f.street_name;
    if (!f.unit_number.empty()) street += " " + f.unit_type + " " + f.unit_number;
    std::string name = f.first_name;
    if (!f.middle_name.empty()) name += " " + f.middle_name;
    name += " " + f.last_name;
    std::string tail = f.city + " " + f.state + " " + f.postal_code;
    if (!f.country.empty()) tail += " " + f.country;
    gold.raw_text =
        commas ? name + ", " + street + ", " + tail : name + " " + street + " " + tail;
    return gold;
}

GoldRecord make_multilingual_record(Rng& rng) {
    GoldRecord gold;
    gold.cohort = Cohort::kMultilingual;
    ParsedRecord& f = gold.fields;

    if (rng.chance(25)) {
        const auto& entry = rng.pick(banks::german_templates());
        f.street_name = std::string(entry.street);
        f.street_number = std::to_string(1 + rng.below(200));
        f.city = std::string(entry.city);
        f.country = "Germany";
        const bool commas = rng.chance(60);
        gold.raw_text = f.street_name + " " + f.street_number +
                        (commas ? ", " : " ") + f.city + (commas ? ", " : " ") +
                        "Germany";
        return gold;
    }

    const auto& entry = rng.pick(banks::multilingual_templates());
    f.street_type = std::string(entry.street_type);
    f.street_name = std::string(entry.street_name);
    f.street_number = std::to_string(1 + rng.below(3000));
    f.city = std::string(entry.city);
    f.country = std::string(entry.country);
    const bool commas = rng.chance(60);
    const std::string sep = commas ? ", " : " ";
    gold.raw_text = f.street_type + " " + f.street_name + " " + f.street_number +
                    sep + f.city + sep + std::string(entry.country_render);
    return gold;
}

void swap_adjacent_letters(Rng& rng, std::string& token) {
    if (token.size() < 4) return;
    const std::size_t start = 1 + rng.below(token.size() - 2);
    for (std::size_t i = start; i + 1 < token.size(); ++i) {
        const char a = token[i];
        const char b = token[i + 1];
        const bool ascii_letters =
            ((a >= 'a' && a <= 'z') || (a >= 'A' && a <= 'Z')) &&
            ((b >= 'a' && b <= 'z') || (b >= 'A' && b <= 'Z'));
        if (ascii_letters && a != b) {
            std::swap(token[i], token[i + 1]);
            return;
        }
    }
}

GoldRecord make_noisy_record(Rng& rng, bool allow_merge, bool& wants_merge) {
    GoldRecord gold;
    bool has_short = false;
    std::string short_type;
    gold.fields = make_us_fields(rng, has_short, short_type);
    gold.cohort = Cohort::kNoisySynthetic;
    wants_merge = false;

    RenderStyle style;
    style.commas = false;  // delimiter omission is the cohort's baseline
    gold.noise_tags.emplace_back("delimiter_omission");

    const std::size_t op = rng.below(100);
    if (op < 40) {
        // Typo in one open-set field; gold keeps the true spelling.
        ParsedRecord noisy = gold.fields;
        std::string* target = nullptr;
        const std::size_t which = rng.below(3);
        if (which == 0) target = &noisy.city;
        else if (which == 1) target = &noisy.street_name;
        else target = &noisy.last_name;
        std::string tag = which == 0 ? "typo_city"
                          : which == 1 ? "typo_street_name"
                                       : "typo_last_name";
        swap_adjacent_letters(rng, *target);
        gold.noise_tags.push_back(std::move(tag));
        gold.raw_text = render_us(noisy, style, short_type);
        return gold;
    }
    if (op < 55 && !gold.fields.unit_number.empty()) {
        // Bare unit number: the designator is genuinely absent.
        gold.fields.unit_type.clear();
        gold.noise_tags.emplace_back("bare_unit_number");
        gold.raw_text = render_us(gold.fields, style, short_type, true);
        return gold;
    }
    if (op < 70) {
        gold.fields.postal_code.clear();  // the truth omits the ZIP
        gold.noise_tags.emplace_back("dropout_zip");
        gold.raw_text = render_us(gold.fields, style, short_type);
        return gold;
    }
    if (op < 80 && allow_merge) {
        // The render drops the ZIP/country terminator and the corpus drops
        // the blank separator, so this line merges into the next record.
        ParsedRecord unterminated = gold.fields;
        unterminated.postal_code.clear();
        unterminated.country.clear();
        gold.noise_tags.emplace_back("merge_with_next");
        gold.raw_text = render_us(unterminated, style, short_type);
        wants_merge = true;
        return gold;
    }
    style.abbrev_type = has_short;
    gold.noise_tags.emplace_back("abbrev_style");
    gold.raw_text = render_us(gold.fields, style, short_type);
    return gold;
}

std::multiset<std::string> content_tokens(const ParsedRecord& record) {
    std::multiset<std::string> tokens;
    for (std::size_t i = 1; i < ParsedRecord::kFieldCount; ++i) {
        for (const auto& token : split_tokens(record.field(i))) {
            tokens.insert(token);
        }
    }
    return tokens;
}

nlohmann::json gold_to_json(const GoldRecord& gold) {
    nlohmann::json fields = nlohmann::json::object();
    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        fields[std::string(ParsedRecord::field_names()[i])] = gold.fields.field(i);
    }
    return {
        {"fields", fields},
        {"raw_text", gold.raw_text},
        {"noise_tags", gold.noise_tags},
        {"cohort", std::string(to_string(gold.cohort))},
        {"source",
         {{"input", gold.source_ref.input_name},
          {"start_line", gold.source_ref.start_line},
          {"end_line", gold.source_ref.end_line}}},
    };
}

Cohort cohort_from_string(std::string_view name) {
    if (name == "us_standard") return Cohort::kUsStandard;
    if (name == "puerto_rico") return Cohort::kPuertoRico;
    if (name == "multilingual") return Cohort::kMultilingual;
    if (name == "noisy_synthetic") return Cohort::kNoisySynthetic;
    throw Error("unknown cohort \"" + std::string(name) + "\"");
}

}  // namespace

std::string_view to_string(Cohort cohort) {
    switch (cohort) {
        case Cohort::kUsStandard: return "us_standard";
        case Cohort::kPuertoRico: return "puerto_rico";
        case Cohort::kMultilingual: return "multilingual";
        case Cohort::kNoisySynthetic: return "noisy_synthetic";
    }
    return "us_standard";
}

CorpusSpec CorpusSpec::scaled_to(std::size_t records) const {
    const std::size_t current = total();
    if (current == 0 || records == 0) return *this;
    CorpusSpec scaled = *this;
    const std::array<std::size_t, 4> sizes = {us_standard, puerto_rico, multilingual,
                                              noisy_synthetic};
    std::array<std::size_t, 4> out{};
    std::array<double, 4> remainders{};
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double exact = static_cast<double>(sizes[i]) *
                             static_cast<double>(records) /
                             static_cast<double>(current);
        out[i] = static_cast<std::size_t>(exact);
        remainders[i] = exact - static_cast<double>(out[i]);
        assigned += out[i];
    }
    while (assigned < records) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < 4; ++i) {
            if (remainders[i] > remainders[best]) best = i;
        }
        ++out[best];
        remainders[best] = -1.0;
        ++assigned;
    }
    scaled.us_standard = out[0];
    scaled.puerto_rico = out[1];
    scaled.multilingual = out[2];
    scaled.noisy_synthetic = out[3];
    return scaled;
}

Corpus generate_corpus(const CorpusSpec& spec) {
    Rng rng(spec.seed);
    Corpus corpus;
    corpus.input_name = "corpus-" + std::to_string(spec.seed);
    corpus.records.reserve(spec.total());

    for (std::size_t i = 0; i < spec.us_standard; ++i) {
        corpus.records.push_back(make_us_record(rng));
    }
    for (std::size_t i = 0; i < spec.puerto_rico; ++i) {
        corpus.records.push_back(make_pr_record(rng));
    }
    for (std::size_t i = 0; i < spec.multilingual; ++i) {
        corpus.records.push_back(make_multilingual_record(rng));
    }
    const std::size_t noisy_begin = corpus.records.size();
    bool previous_wants_merge = false;
    for (std::size_t i = 0; i < spec.noisy_synthetic; ++i) {
        const bool allow_merge =
            !previous_wants_merge && i + 1 < spec.noisy_synthetic;
        bool wants_merge = false;
        corpus.records.push_back(make_noisy_record(rng, allow_merge, wants_merge));
        if (previous_wants_merge) {
            corpus.records.back().noise_tags.emplace_back("merged_into_previous");
        }
        previous_wants_merge = wants_merge;
    }
    (void)noisy_begin;

    // Render the input block: one line per record, blank-line separators,
    // except after merge leads.
    std::string text;
    std::size_t line = 1;
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
        GoldRecord& gold = corpus.records[i];
        gold.source_ref = {corpus.input_name, line, line};
        text += gold.raw_text;
        text.push_back('\n');
        ++line;
        const bool merge_lead =
            std::find(gold.noise_tags.begin(), gold.noise_tags.end(),
                      "merge_with_next") != gold.noise_tags.end();
        if (!merge_lead && i + 1 < corpus.records.size()) {
            text.push_back('\n');
            ++line;
        }
    }
    corpus.input_text = std::move(text);
    return corpus;
}

void assign_gold_ids(Corpus& corpus, const RecordIdGenerator& id_gen) {
    for (auto& gold : corpus.records) {
        gold.fields.record_id = id_gen(gold.source_ref);
    }
}

void write_gold_jsonl(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& gold : corpus.records) {
        out << gold_to_json(gold).dump() << '\n';
    }
}

Corpus read_gold_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    Corpus corpus;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json doc = nlohmann::json::parse(line);
        GoldRecord gold;
        for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
            const std::string key(ParsedRecord::field_names()[i]);
            gold.fields.field(i) = doc["fields"].value(key, "");
        }
        gold.raw_text = doc.value("raw_text", "");
        if (doc.contains("noise_tags")) {
            gold.noise_tags = doc["noise_tags"].get<std::vector<std::string>>();
        }
        gold.cohort = cohort_from_string(doc.value("cohort", "us_standard"));
        if (doc.contains("source")) {
            gold.source_ref.input_name = doc["source"].value("input", "");
            gold.source_ref.start_line = doc["source"].value("start_line", 0u);
            gold.source_ref.end_line = doc["source"].value("end_line", 0u);
        }
        corpus.records.push_back(std::move(gold));
        corpus.input_text += corpus.records.back().raw_text + "\n\n";
    }
    return corpus;
}

EvalReport evaluate(const std::vector<RecordResult>& predictions,
                    const std::vector<GoldRecord>& gold) {
    EvalReport report;
    report.total_gold = gold.size();
    report.total_predictions = predictions.size();

    std::unordered_map<std::string, const GoldRecord*> gold_by_id;
    for (const auto& g : gold) {
        if (!gold_by_id.emplace(g.fields.record_id, &g).second) {
            throw AlignmentError("duplicate gold record id " + g.fields.record_id);
        }
    }
    std::unordered_map<std::string, const RecordResult*> pred_by_id;
    for (const auto& p : predictions) {
        if (!pred_by_id.emplace(p.record.record_id, &p).second) {
            throw AlignmentError("duplicate prediction record id " +
                                 p.record.record_id);
        }
    }

    // Per-field and exact-row scores over the gold set.
    std::array<std::size_t, ParsedRecord::kFieldCount> field_correct{};
    std::size_t exact = 0;
    std::vector<ErrorCase> failures;
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> cohort_stats;
    std::unordered_map<const RecordResult*, bool> pred_exact;

    for (const auto& g : gold) {
        const auto it = pred_by_id.find(g.fields.record_id);
        const RecordResult* pred = it == pred_by_id.end() ? nullptr : it->second;
        bool all_match = pred != nullptr;
        for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
            const bool match = pred && pred->record.field(i) == g.fields.field(i);
            if (match) ++field_correct[i];
            all_match = all_match && match;
        }
        auto& [total, right] = cohort_stats[std::string(to_string(g.cohort))];
        ++total;
        if (all_match) {
            ++exact;
            ++right;
            pred_exact[pred] = true;
        } else {
            ErrorCase failure;
            if (pred) failure.prediction = *pred;
            failure.gold = g;
            failures.push_back(std::move(failure));
        }
    }

    report.exact_row_accuracy =
        gold.empty() ? 0.0
                     : static_cast<double>(exact) / static_cast<double>(gold.size());
    for (std::size_t i = 0; i < ParsedRecord::kFieldCount; ++i) {
        report.per_field_accuracy[std::string(ParsedRecord::field_names()[i])] =
            gold.empty() ? 0.0
                         : static_cast<double>(field_correct[i]) /
                               static_cast<double>(gold.size());
    }
    for (const auto& [cohort, stats] : cohort_stats) {
        report.per_cohort_exact[cohort] =
            stats.first == 0 ? 0.0
                             : static_cast<double>(stats.second) /
                                   static_cast<double>(stats.first);
    }

    // Prediction-side rates: invalid rows, confidence, calibration buckets.
    std::size_t rejected = 0;
    double confidence_sum = 0.0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> buckets;  // count, correct
    for (const auto& p : predictions) {
        if (p.outcome.status == RecordStatus::kRejected) ++rejected;
        confidence_sum += p.confidence.value;
        auto& [count, correct] = buckets[std::string(p.confidence.bucket)];
        ++count;
        if (pred_exact.contains(&p)) ++correct;
    }
    report.invalid_row_rate =
        predictions.empty() ? 0.0
                            : static_cast<double>(rejected) /
                                  static_cast<double>(predictions.size());
    report.mean_confidence =
        predictions.empty() ? 0.0
                            : confidence_sum /
                                  static_cast<double>(predictions.size());
    for (std::string_view name : {"High", "Medium", "Low"}) {
        const auto it = buckets.find(std::string(name));
        BucketStat stat;
        if (it != buckets.end()) {
            stat.count = it->second.first;
            stat.share = predictions.empty()
                             ? 0.0
                             : static_cast<double>(stat.count) /
                                   static_cast<double>(predictions.size());
            stat.accuracy = stat.count == 0
                                ? 0.0
                                : static_cast<double>(it->second.second) /
                                      static_cast<double>(stat.count);
        }
        report.bucket_table[std::string(name)] = stat;
    }

    report.failures = failures.size();
    report.error_distribution = categorize_errors(failures);
    return report;
}

std::map<std::string, double> categorize_errors(const std::vector<ErrorCase>& failed) {
    std::map<std::string, double> shares = {{"irregular_pattern", 0.0},
                                            {"record_separation", 0.0},
                                            {"ambiguous_assignment", 0.0}};
    if (failed.empty()) return shares;
    for (const auto& failure : failed) {
        if (!failure.prediction ||
            !(failure.prediction->source_ref == failure.gold.source_ref)) {
            shares["record_separation"] += 1.0;
        } else if (content_tokens(failure.prediction->record) ==
                   content_tokens(failure.gold.fields)) {
            shares["ambiguous_assignment"] += 1.0;
        } else {
            shares["irregular_pattern"] += 1.0;
        }
    }
    for (auto& [key, value] : shares) {
        value /= static_cast<double>(failed.size());
    }
    return shares;
}

std::string report_to_json(const EvalReport& report) {
    nlohmann::json buckets = nlohmann::json::object();
    for (const auto& [name, stat] : report.bucket_table) {
        buckets[name] = {{"count", stat.count},
                         {"share", stat.share},
                         {"accuracy", stat.accuracy}};
    }
    const nlohmann::json doc = {
        {"total_gold", report.total_gold},
        {"total_predictions", report.total_predictions},
        {"exact_row_accuracy", report.exact_row_accuracy},
        {"per_field_accuracy", report.per_field_accuracy},
        {"invalid_row_rate", report.invalid_row_rate},
        {"mean_confidence", report.mean_confidence},
        {"bucket_table", buckets},
        {"error_distribution", report.error_distribution},
        {"per_cohort_exact", report.per_cohort_exact},
        {"failures", report.failures},
    };
    return doc.dump(2);
}

std::string report_to_text(const EvalReport& report) {
    std::ostringstream out;
    const auto pct = [](double v) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%6.2f%%", v * 100.0);
        return std::string(buf);
    };
    out << "Overall results\n";
    out << "  records scored      " << report.total_gold << "\n";
    out << "  exact-row accuracy  " << pct(report.exact_row_accuracy) << "\n";
    out << "  invalid-row rate    " << pct(report.invalid_row_rate) << "\n";
    out << "  mean confidence     " << pct(report.mean_confidence) << "\n";
    out << "\nPer-field accuracy\n";
    for (const auto& name : ParsedRecord::field_names()) {
        const auto it = report.per_field_accuracy.find(std::string(name));
        if (it == report.per_field_accuracy.end()) continue;
        out << "  " << name;
        for (std::size_t pad = name.size(); pad < 18; ++pad) out << ' ';
        out << pct(it->second) << "\n";
    }
    out << "\nConfidence buckets (share / accuracy)\n";
    for (std::string_view name : {"High", "Medium", "Low"}) {
        const auto it = report.bucket_table.find(std::string(name));
        if (it == report.bucket_table.end()) continue;
        out << "  " << name;
        for (std::size_t pad = name.size(); pad < 8; ++pad) out << ' ';
        out << pct(it->second.share) << "  " << pct(it->second.accuracy) << "\n";
    }
    out << "\nError categories (share of residual set)\n";
    for (const auto& [name, share] : report.error_distribution) {
        out << "  " << name;
        for (std::size_t pad = name.size(); pad < 24; ++pad) out << ' ';
        out << pct(share) << "\n";
    }
    out << "\nPer-cohort exact-row accuracy\n";
    for (const auto& [name, value] : report.per_cohort_exact) {
        out << "  " << name;
        for (std::size_t pad = name.size(); pad < 18; ++pad) out << ' ';
        out << pct(value) << "\n";
    }
    return out.str();
}

EvalRunResult run_eval(const EvalOptions& options) {
    const CanonicalLexica& lexica = CanonicalLexica::builtin();
    EvalRunResult result;
    result.corpus = generate_corpus(options.spec);

    const RecordIdGenerator id_gen = make_id_generator(options.salt);
    assign_gold_ids(result.corpus, id_gen);

    // Choose the rows to corrupt: exact count over the records expected to
    // survive segmentation unmerged, so the measured invalid-row rate tracks
    // the requested rate.
    std::unordered_set<std::string> corrupt_ids;
    std::size_t merge_pairs = 0;
    if (options.inject_rate > 0.0) {
        std::vector<std::string> eligible;
        for (const auto& gold : result.corpus.records) {
            const bool merged =
                std::find_if(gold.noise_tags.begin(), gold.noise_tags.end(),
                             [](const std::string& tag) {
                                 return tag == "merge_with_next" ||
                                        tag == "merged_into_previous";
                             }) != gold.noise_tags.end();
            if (merged) continue;
            eligible.push_back(gold.fields.record_id);
        }
        for (const auto& gold : result.corpus.records) {
            if (std::find(gold.noise_tags.begin(), gold.noise_tags.end(),
                          "merge_with_next") != gold.noise_tags.end()) {
                ++merge_pairs;
            }
        }
        const std::size_t expected_predictions =
            result.corpus.records.size() - merge_pairs;
        const auto target = static_cast<std::size_t>(std::llround(
            options.inject_rate * static_cast<double>(expected_predictions)));
        std::mt19937_64 shuffler(options.spec.seed ^ 0x1723faceull);
        for (std::size_t i = eligible.size(); i > 1; --i) {
            std::swap(eligible[i - 1], eligible[shuffler() % i]);
        }
        for (std::size_t i = 0; i < std::min(target, eligible.size()); ++i) {
            corrupt_ids.insert(eligible[i]);
        }
    }
    result.injected_count = corrupt_ids.size();

    RunConfig config;
    config.backend = options.backend;
    config.endpoint = options.endpoint;
    config.auth_token = options.auth_token;
    config.batch_size = options.batch_size;
    config.second_parse = options.second_parse;
    config.salt = options.salt;
    config.parallelism = options.parallelism;
    config.run_id = "eval-" + std::to_string(options.spec.seed);
    config.decoding.seed = options.spec.seed;

    std::unique_ptr<Backend> inner = make_backend(config, lexica);
    std::shared_ptr<Backend> backend = std::move(inner);
    if (!corrupt_ids.empty()) {
        backend = std::make_shared<FaultInjectingBackend>(backend, corrupt_ids,
                                                          options.spec.seed);
    }

    std::optional<AuditLog> audit;
    if (options.out_dir) {
        std::filesystem::create_directories(*options.out_dir);
        audit.emplace(*options.out_dir / (config.run_id + ".audit.jsonl"));
    }

    std::vector<CandidateRecord> candidates =
        segment_block(result.corpus.input_text, lexica, result.corpus.input_name,
                      id_gen);
    PipelineResult pipeline = run_pipeline_on_candidates(
        std::move(candidates), config, lexica, *backend,
        audit ? &*audit : nullptr);

    result.report = evaluate(pipeline.records, result.corpus.records);
    result.metadata = pipeline.metadata;

    for (const auto& record : pipeline.records) {
        if (!corrupt_ids.contains(record.record.record_id)) continue;
        if (!record.outcome.findings.empty()) ++result.injected_flagged;
        if (record.outcome.status == RecordStatus::kRejected) {
            ++result.injected_rejected;
        }
    }

    if (options.out_dir) {
        const auto& dir = *options.out_dir;
        write_gold_jsonl(result.corpus, dir / "gold.jsonl");
        std::ofstream input(dir / "input.txt", std::ios::binary | std::ios::trunc);
        input << result.corpus.input_text;
        export_records(pipeline.to_exported(false), ExportFormat::kJsonl,
                       dir / "predictions.jsonl");
        write_metadata(pipeline.metadata, dir / "predictions.meta.json");
        write_rules_catalog(dir / "predictions.rules.json");
        std::ofstream json(dir / "eval_report.json", std::ios::binary | std::ios::trunc);
        json << report_to_json(result.report) << '\n';
        std::ofstream text(dir / "eval_report.txt", std::ios::binary | std::ios::trunc);
        text << report_to_text(result.report);
    }

    result.predictions = std::move(pipeline.records);
    return result;
}

}  // namespace addrparse
