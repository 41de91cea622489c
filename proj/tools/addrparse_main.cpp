// addrparse - batch CLI for the structured person/address parsing pipeline.
//
// Subcommands:
//   parse       run the full pipeline over unstructured inputs
//   validate    re-run the validation layers over a previous export
//   eval        generate a synthetic corpus, run the pipeline, score it
//   gen-corpus  write a synthetic corpus without running the pipeline
//
// Exit codes: 0 success, 1 operational failure, 2 invalid-row rate above the
// configured threshold, 64 usage/config error, 65 input format error,
// 74 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "addrparse/eval.hpp"
#include "addrparse/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOperational = 1;
constexpr int kExitInvalidRate = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDataFormat = 65;
constexpr int kExitIo = 74;

constexpr const char* kTokenEnvVar = "ADDRPARSE_HTTP_TOKEN";

/// Flat key=value config file; '#' comments. Flags override these values.
std::map<std::string, std::string> load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw addrparse::IoError("cannot read config file " + path.string());
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto strip = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                                  s.back() == '\r')) {
                s.pop_back();
            }
        };
        strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw addrparse::Error("config line " + std::to_string(line_no) +
                                   ": expected key=value");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        strip(key);
        strip(value);
        values[key] = value;
    }
    return values;
}

void apply_config_file(const std::map<std::string, std::string>& file,
                       addrparse::RunConfig& config) {
    const auto get = [&](const char* key) -> std::optional<std::string> {
        const auto it = file.find(key);
        if (it == file.end()) return std::nullopt;
        return it->second;
    };
    if (const auto v = get("in")) {
        config.inputs.clear();
        std::size_t start = 0;
        while (start < v->size()) {
            auto end = v->find(',', start);
            if (end == std::string::npos) end = v->size();
            if (end > start) config.inputs.emplace_back(v->substr(start, end - start));
            start = end + 1;
        }
    }
    if (const auto v = get("out")) config.output = *v;
    if (const auto v = get("format")) {
        const auto format = addrparse::export_format_from_string(*v);
        if (!format) throw addrparse::Error("config: unknown format " + *v);
        config.format = *format;
    }
    if (const auto v = get("backend")) config.backend = *v;
    if (const auto v = get("endpoint")) config.endpoint = *v;
    if (const auto v = get("batch_size")) config.batch_size = std::stoul(*v);
    if (const auto v = get("second_parse")) config.second_parse = *v == "true";
    if (const auto v = get("retain_raw")) config.retain_raw = *v == "true";
    if (const auto v = get("seed")) config.decoding.seed = std::stoull(*v);
    if (const auto v = get("salt")) config.salt = *v;
    if (const auto v = get("parallelism")) config.parallelism = std::stoul(*v);
    if (const auto v = get("scaffold")) config.scaffold_path = *v;
    if (const auto v = get("lexica_dir")) config.lexica_dir = *v;
    if (const auto v = get("max_invalid_rate")) config.max_invalid_rate = std::stod(*v);
    if (const auto v = get("dedupe_threshold")) config.dedupe_threshold = std::stod(*v);
    if (const auto v = get("run_id")) config.run_id = *v;
}

addrparse::CorpusSpec parse_cohorts(const std::string& spec_text,
                                    addrparse::CorpusSpec spec) {
    std::size_t start = 0;
    while (start < spec_text.size()) {
        auto end = spec_text.find(',', start);
        if (end == std::string::npos) end = spec_text.size();
        const std::string item = spec_text.substr(start, end - start);
        start = end + 1;
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw addrparse::Error("--cohorts expects name=count pairs");
        }
        const std::string name = item.substr(0, eq);
        const std::size_t count = std::stoul(item.substr(eq + 1));
        if (name == "us_standard") spec.us_standard = count;
        else if (name == "puerto_rico") spec.puerto_rico = count;
        else if (name == "multilingual") spec.multilingual = count;
        else if (name == "noisy_synthetic") spec.noisy_synthetic = count;
        else throw addrparse::Error("unknown cohort \"" + name + "\"");
    }
    return spec;
}

std::string resolve_auth_token() {
    const char* token = std::getenv(kTokenEnvVar);
    return token ? token : "";
}

int run_parse_command(addrparse::RunConfig config) {
    if (config.inputs.empty()) {
        std::cerr << "parse: no inputs given (use --in)\n";
        return kExitUsage;
    }
    config.auth_token = resolve_auth_token();
    try {
        const addrparse::PipelineResult result = addrparse::run_parse(config);
        std::cerr << "parsed " << result.records.size() << " record(s) -> "
                  << config.output.string() << " (invalid-row rate "
                  << result.invalid_row_rate << ")\n";
        if (result.invalid_row_rate >= config.max_invalid_rate) {
            std::cerr << "invalid-row rate above threshold "
                      << config.max_invalid_rate << "\n";
            return kExitInvalidRate;
        }
        return kExitOk;
    } catch (const addrparse::EmptyInputError&) {
        std::cerr << "parse: no records found\n";
        return kExitUsage;
    }
}

int run_validate_command(const std::filesystem::path& input,
                         std::optional<addrparse::ExportFormat> format,
                         const std::optional<std::filesystem::path>& report_path) {
    if (!format) {
        format = input.extension() == ".csv" ? addrparse::ExportFormat::kCsv
                                             : addrparse::ExportFormat::kJsonl;
    }
    std::vector<addrparse::ExportedRecord> imported;
    try {
        imported = addrparse::import_records(input, *format);
    } catch (const addrparse::IoError&) {
        throw;
    } catch (const addrparse::Error& e) {
        std::cerr << "validate: " << e.what() << "\n";
        return kExitDataFormat;
    }

    const auto& lexica = addrparse::CanonicalLexica::builtin();
    nlohmann::json rows = nlohmann::json::array();
    std::map<std::string, std::size_t> status_counts;
    std::map<std::string, std::size_t> rule_counts;
    std::size_t findings_total = 0;
    for (const auto& exported : imported) {
        const auto outcome = addrparse::validate_record(exported.record, lexica);
        ++status_counts[std::string(to_string(outcome.status))];
        nlohmann::json findings = nlohmann::json::array();
        for (const auto& finding : outcome.findings) {
            ++rule_counts[finding.rule_id];
            ++findings_total;
            nlohmann::json entry = {
                {"rule_id", finding.rule_id},
                {"severity", std::string(to_string(finding.severity))},
                {"field", finding.field},
                {"message", finding.message},
            };
            if (finding.suggestion) entry["suggestion"] = *finding.suggestion;
            findings.push_back(std::move(entry));
        }
        rows.push_back({
            {"record_id", exported.record.record_id},
            {"status", std::string(to_string(outcome.status))},
            {"findings", std::move(findings)},
        });
    }
    const nlohmann::json report = {
        {"records", imported.size()},
        {"findings_total", findings_total},
        {"status_counts", status_counts},
        {"rule_counts", rule_counts},
        {"rows", std::move(rows)},
    };
    if (report_path) {
        std::ofstream out(*report_path, std::ios::binary | std::ios::trunc);
        if (!out) throw addrparse::IoError("cannot write " + report_path->string());
        out << report.dump(2) << '\n';
    } else {
        std::cout << report.dump(2) << '\n';
    }
    std::cerr << "validated " << imported.size() << " record(s), "
              << findings_total << " finding(s)\n";
    return kExitOk;
}

int run_eval_command(addrparse::EvalOptions options, bool print_report) {
    options.auth_token = resolve_auth_token();
    const addrparse::EvalRunResult result = addrparse::run_eval(options);
    if (print_report) std::cout << report_to_text(result.report);
    if (options.inject_rate > 0.0) {
        std::cout << "injected " << result.injected_count << " violation(s); "
                  << result.injected_flagged << " flagged, "
                  << result.injected_rejected << " rejected\n";
    }
    return kExitOk;
}

int run_gen_corpus_command(const addrparse::CorpusSpec& spec,
                           const std::filesystem::path& out_dir,
                           const std::string& salt) {
    addrparse::Corpus corpus = addrparse::generate_corpus(spec);
    addrparse::assign_gold_ids(corpus, addrparse::make_id_generator(salt));
    std::filesystem::create_directories(out_dir);
    addrparse::write_gold_jsonl(corpus, out_dir / "gold.jsonl");
    std::ofstream input(out_dir / "input.txt", std::ios::binary | std::ios::trunc);
    if (!input) throw addrparse::IoError("cannot write input.txt");
    input << corpus.input_text;
    std::cerr << "wrote " << corpus.records.size() << " gold record(s) to "
              << out_dir.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unstructured person/address text -> validated 17-field rows"};
    app.require_subcommand(1);

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "Run the pipeline over inputs");
    std::vector<std::string> parse_inputs;
    std::string parse_out = "out.jsonl";
    std::string parse_format;
    std::string parse_backend = "mock";
    std::string parse_endpoint;
    std::size_t parse_batch = addrparse::kDefaultBatchSize;
    bool parse_second = false;
    bool parse_retain = false;
    std::optional<std::uint64_t> parse_seed;
    std::string parse_salt = "addrparse";
    std::size_t parse_parallel = 0;
    std::string parse_scaffold;
    std::string parse_lexica;
    double parse_max_invalid = 1.01;
    std::optional<double> parse_dedupe;
    std::string parse_run_id = "run";
    std::string parse_config;
    parse_cmd->add_option("--in", parse_inputs, "Input file(s); '-' for stdin");
    parse_cmd->add_option("--out", parse_out, "Output path");
    parse_cmd->add_option("--format", parse_format, "jsonl|csv (default by extension)");
    parse_cmd->add_option("--backend", parse_backend, "mock|http");
    parse_cmd->add_option("--endpoint", parse_endpoint, "HTTP backend URL");
    parse_cmd->add_option("--batch-size", parse_batch, "Records per prompt batch");
    parse_cmd->add_flag("--second-parse", parse_second,
                        "Re-infer each batch for the agreement signal");
    parse_cmd->add_flag("--retain-raw", parse_retain,
                        "Keep raw input text in the export");
    parse_cmd->add_option("--seed", parse_seed, "Decoder seed (backend support varies)");
    parse_cmd->add_option("--salt", parse_salt, "Deployment salt for anonymized ids");
    parse_cmd->add_option("--parallel", parse_parallel,
                          "Batches in flight (default: cores, capped at 8)");
    parse_cmd->add_option("--scaffold", parse_scaffold, "Prompt scaffold template file");
    parse_cmd->add_option("--lexica", parse_lexica, "Lexica override directory");
    parse_cmd->add_option("--max-invalid-rate", parse_max_invalid,
                          "Exit 2 when the invalid-row rate reaches this");
    parse_cmd->add_option("--dedupe", parse_dedupe,
                          "Drop near-duplicate records at this threshold");
    parse_cmd->add_option("--run-id", parse_run_id, "Run identifier");
    parse_cmd->add_option("--config", parse_config, "key=value config file");

    // validate
    auto* validate_cmd =
        app.add_subcommand("validate", "Re-validate a previous export");
    std::string validate_in;
    std::string validate_format;
    std::string validate_out;
    validate_cmd->add_option("--in", validate_in, "Exported file")->required();
    validate_cmd->add_option("--format", validate_format, "jsonl|csv");
    validate_cmd->add_option("--out", validate_out, "Report path (default stdout)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Synthetic-corpus evaluation run");
    std::uint64_t eval_seed = 7;
    std::string eval_cohorts;
    std::optional<std::size_t> eval_records;
    bool eval_full = false;
    double eval_inject = 0.0;
    std::string eval_backend = "mock";
    std::string eval_endpoint;
    std::size_t eval_batch = addrparse::kDefaultBatchSize;
    bool eval_second = false;
    std::string eval_out = "eval-out";
    std::string eval_salt = "addrparse";
    std::size_t eval_parallel = 0;
    eval_cmd->add_option("--seed", eval_seed, "Corpus seed");
    eval_cmd->add_option("--cohorts", eval_cohorts,
                         "name=count pairs (us_standard, puerto_rico, "
                         "multilingual, noisy_synthetic)");
    eval_cmd->add_option("--records", eval_records,
                         "Proportionally scale cohorts to this total");
    eval_cmd->add_flag("--full", eval_full, "Full-scale corpus (1500 records)");
    eval_cmd->add_option("--inject-errors", eval_inject,
                         "Corrupt this share of response rows");
    eval_cmd->add_option("--backend", eval_backend, "mock|http");
    eval_cmd->add_option("--endpoint", eval_endpoint, "HTTP backend URL");
    eval_cmd->add_option("--batch-size", eval_batch, "Records per prompt batch");
    eval_cmd->add_flag("--second-parse", eval_second, "Enable the agreement signal");
    eval_cmd->add_option("--out", eval_out, "Artifact directory");
    eval_cmd->add_option("--salt", eval_salt, "Deployment salt for anonymized ids");
    eval_cmd->add_option("--parallel", eval_parallel, "Batches in flight");

    // gen-corpus
    auto* gen_cmd = app.add_subcommand("gen-corpus", "Write a synthetic corpus");
    std::uint64_t gen_seed = 7;
    std::string gen_cohorts;
    std::optional<std::size_t> gen_records;
    bool gen_full = false;
    std::string gen_out = "corpus-out";
    std::string gen_salt = "addrparse";
    gen_cmd->add_option("--seed", gen_seed, "Corpus seed");
    gen_cmd->add_option("--cohorts", gen_cohorts, "name=count pairs");
    gen_cmd->add_option("--records", gen_records, "Scale cohorts to this total");
    gen_cmd->add_flag("--full", gen_full, "Full-scale corpus (1500 records)");
    gen_cmd->add_option("--out", gen_out, "Output directory");
    gen_cmd->add_option("--salt", gen_salt, "Deployment salt for gold ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (parse_cmd->parsed()) {
            addrparse::RunConfig config;
            if (!parse_config.empty()) {
                apply_config_file(load_config_file(parse_config), config);
            }
            if (!parse_inputs.empty()) {
                config.inputs.assign(parse_inputs.begin(), parse_inputs.end());
            }
            if (parse_cmd->count("--out") || config.output.empty()) {
                config.output = parse_out;
            }
            if (!parse_format.empty()) {
                const auto format = addrparse::export_format_from_string(parse_format);
                if (!format) {
                    std::cerr << "parse: unknown format " << parse_format << "\n";
                    return kExitUsage;
                }
                config.format = *format;
            } else if (config.output.extension() == ".csv") {
                config.format = addrparse::ExportFormat::kCsv;
            }
            if (parse_cmd->count("--backend")) config.backend = parse_backend;
            if (parse_cmd->count("--endpoint")) config.endpoint = parse_endpoint;
            if (parse_cmd->count("--batch-size")) config.batch_size = parse_batch;
            if (parse_second) config.second_parse = true;
            if (parse_retain) config.retain_raw = true;
            if (parse_seed) config.decoding.seed = parse_seed;
            if (parse_cmd->count("--salt")) config.salt = parse_salt;
            if (parse_cmd->count("--parallel")) config.parallelism = parse_parallel;
            if (!parse_scaffold.empty()) config.scaffold_path = parse_scaffold;
            if (!parse_lexica.empty()) config.lexica_dir = parse_lexica;
            if (parse_cmd->count("--max-invalid-rate")) {
                config.max_invalid_rate = parse_max_invalid;
            }
            if (parse_dedupe) config.dedupe_threshold = parse_dedupe;
            if (parse_cmd->count("--run-id")) config.run_id = parse_run_id;
            return run_parse_command(std::move(config));
        }
        if (validate_cmd->parsed()) {
            std::optional<addrparse::ExportFormat> format;
            if (!validate_format.empty()) {
                format = addrparse::export_format_from_string(validate_format);
                if (!format) {
                    std::cerr << "validate: unknown format " << validate_format << "\n";
                    return kExitUsage;
                }
            }
            std::optional<std::filesystem::path> report;
            if (!validate_out.empty()) report = validate_out;
            return run_validate_command(validate_in, format, report);
        }
        if (eval_cmd->parsed()) {
            addrparse::EvalOptions options;
            options.spec.seed = eval_seed;
            if (!eval_cohorts.empty()) {
                options.spec = parse_cohorts(eval_cohorts, options.spec);
            }
            if (eval_full) options.spec = options.spec.scaled_to(1500);
            if (eval_records) options.spec = options.spec.scaled_to(*eval_records);
            options.spec.seed = eval_seed;
            options.inject_rate = eval_inject;
            options.backend = eval_backend;
            options.endpoint = eval_endpoint;
            options.batch_size = eval_batch;
            options.second_parse = eval_second;
            options.salt = eval_salt;
            options.parallelism = eval_parallel;
            options.out_dir = std::filesystem::path(eval_out);
            return run_eval_command(std::move(options), true);
        }
        if (gen_cmd->parsed()) {
            addrparse::CorpusSpec spec;
            spec.seed = gen_seed;
            if (!gen_cohorts.empty()) spec = parse_cohorts(gen_cohorts, spec);
            if (gen_full) spec = spec.scaled_to(1500);
            if (gen_records) spec = spec.scaled_to(*gen_records);
            spec.seed = gen_seed;
            return run_gen_corpus_command(spec, gen_out, gen_salt);
        }
    } catch (const addrparse::UnreadableInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const addrparse::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const addrparse::InputFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataFormat;
    } catch (const addrparse::UnsupportedFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const addrparse::BackendUnavailableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    } catch (const addrparse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return kExitUsage;
}
