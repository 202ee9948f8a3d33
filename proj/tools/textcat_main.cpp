#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "textcat/pipeline.hpp"
#include "textcat/report.hpp"

namespace fs = std::filesystem;
using namespace textcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

// Files created by the current command; removed again if emission fails.
class OutputTracker {
public:
    void write(const fs::path& path, const std::string& content) {
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write " + path.string());
        created_.push_back(path);
        out << content;
        if (!out) throw DataError("write failed: " + path.string());
    }
    void discard_all() {
        for (const fs::path& path : created_) {
            std::error_code ec;
            fs::remove(path, ec);
        }
        created_.clear();
    }

private:
    std::vector<fs::path> created_;
};

struct CommonOptions {
    RunConfig config;
    std::string algorithm_name = "rocchio";
    std::string format_name = "text";
    bool all_arms = false;
    std::string model_path;
};

void add_corpus_option(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--corpus", opts.config.corpus_dir, "Directory with reut2-*.sgm files")
        ->envname("TEXTCAT_CORPUS");
}

void add_pipeline_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--stoplist", opts.config.stoplist_path,
                    "Stopword file (default: built-in SMART list)");
    cmd->add_option("--expansion", opts.config.expansion_path,
                    "Category synonym expansion TSV");
    cmd->add_option("--k-terms", opts.config.k_terms, "Terms selected per category")
        ->check(CLI::PositiveNumber);
}

void add_training_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--algorithm", opts.algorithm_name, "rocchio | widrow-hoff")
        ->check(CLI::IsMember({"rocchio", "widrow-hoff"}));
    cmd->add_flag("--use-lexdb", opts.config.use_lexdb,
                  "Seed category vectors from the expansion file");
    cmd->add_option("--alpha", opts.config.alpha, "Initial-vector weight");
    cmd->add_option("--beta", opts.config.beta, "Positive-example weight");
    cmd->add_option("--gamma", opts.config.gamma, "Negative-example weight");
    cmd->add_option("--eta", opts.config.eta,
                    "Widrow-Hoff learning rate (default 1/(4X^2))");
}

void finalize(CommonOptions& opts) {
    if (auto algorithm = algorithm_from_string(opts.algorithm_name))
        opts.config.algorithm = *algorithm;
    if (auto format = format_from_string(opts.format_name))
        opts.config.format = *format;
    else
        throw ConfigError("unknown format: " + opts.format_name);
}

std::string arm_file_name(const std::string& arm_name) {
    std::string out = arm_name;
    for (char& c : out)
        if (c == '+') c = '_';
    return out;
}

int cmd_stats(CommonOptions& opts) {
    finalize(opts);
    if (opts.config.corpus_dir.empty()) throw ConfigError("no corpus directory given");
    CorpusSplit split = split_lewis(parse_corpus_dir(opts.config.corpus_dir));
    CorpusStats stats = compute_stats(split);
    if (opts.config.format == OutputFormat::kJson) {
        std::cout << stats_to_json(stats);
    } else {
        print_stats_table(stats, std::cout);
        std::cout << "Discarded (not used): " << split.discarded << "\n";
    }
    if (!opts.config.out_dir.empty()) {
        OutputTracker out;
        std::ostringstream table;
        print_stats_table(stats, table);
        try {
            out.write(fs::path(opts.config.out_dir) / "stats.txt", table.str());
            out.write(fs::path(opts.config.out_dir) / "stats.json", stats_to_json(stats));
        } catch (...) {
            out.discard_all();
            throw;
        }
    }
    return kExitOk;
}

int cmd_select_terms(CommonOptions& opts) {
    finalize(opts);
    PreparedCorpus prepared = prepare_corpus(opts.config);
    std::ostringstream csv;
    dump_selected_terms(prepared.vocab, prepared.index, opts.config.k_terms, csv);
    if (opts.config.out_dir.empty()) {
        std::cout << csv.str();
    } else {
        OutputTracker out;
        try {
            out.write(fs::path(opts.config.out_dir) / "selected_terms.csv", csv.str());
        } catch (...) {
            out.discard_all();
            throw;
        }
    }
    return kExitOk;
}

int cmd_expand(CommonOptions& opts) {
    finalize(opts);
    if (!opts.config.expansion_path) throw ConfigError("expand requires --expansion");
    PreparedCorpus prepared = prepare_corpus(opts.config);
    std::vector<ClosenessEntry> table =
        build_closeness_table(prepared.expansion, prepared.stoplist, prepared.vocab);
    std::ostringstream csv;
    dump_closeness_table(table, prepared.vocab, csv);
    if (opts.config.out_dir.empty()) {
        std::cout << csv.str();
    } else {
        OutputTracker out;
        try {
            out.write(fs::path(opts.config.out_dir) / "closeness.csv", csv.str());
        } catch (...) {
            out.discard_all();
            throw;
        }
    }
    return kExitOk;
}

int cmd_train(CommonOptions& opts) {
    finalize(opts);
    if (opts.model_path.empty()) throw ConfigError("train requires --model OUTPUT_PATH");
    ArmResult arm = run_experiment(opts.config);
    OutputTracker out;
    std::ostringstream model;
    save_model(arm.model, model);
    try {
        out.write(opts.model_path, model.str());
    } catch (...) {
        out.discard_all();
        throw;
    }
    std::cout << "model written: " << opts.model_path << " (" << arm.model.profiles.size()
              << " categories, " << arm.model.terms.size() << " terms)\n";
    return kExitOk;
}

void emit_results(const CommonOptions& opts, std::span<const ArmResult> arms) {
    std::string precision = precision_table_text(arms);
    std::string breakdown = breakdown_table_text(arms, opts.config.threshold);
    switch (opts.config.format) {
        case OutputFormat::kText:
            std::cout << precision << "\n" << breakdown;
            break;
        case OutputFormat::kJson:
            std::cout << results_json(arms, opts.config.threshold);
            break;
        case OutputFormat::kCsv:
            std::cout << results_csv(arms);
            break;
    }
    if (opts.config.out_dir.empty()) return;
    OutputTracker out;
    fs::path dir(opts.config.out_dir);
    try {
        out.write(dir / "precision.txt", precision);
        out.write(dir / "breakdown.txt", breakdown);
        out.write(dir / "results.json", results_json(arms, opts.config.threshold));
        out.write(dir / "results.csv", results_csv(arms));
    } catch (...) {
        out.discard_all();
        throw;
    }
}

int cmd_evaluate(CommonOptions& opts) {
    finalize(opts);
    if (opts.model_path.empty()) throw ConfigError("evaluate requires --model MODEL_PATH");
    if (opts.config.corpus_dir.empty()) throw ConfigError("no corpus directory given");
    std::ifstream in(opts.model_path);
    if (!in) throw DataError("cannot open model file: " + opts.model_path);
    Model model = load_model(in);
    CorpusSplit split = split_lewis(parse_corpus_dir(opts.config.corpus_dir));
    ArmResult arm = evaluate_model(model, split, std::string(to_string(model.algorithm)));
    arm.breakdown = frequency_breakdown(arm.results, opts.config.threshold);
    std::vector<ArmResult> arms;
    arms.push_back(std::move(arm));
    emit_results(opts, arms);
    return kExitOk;
}

int cmd_run(CommonOptions& opts) {
    finalize(opts);
    PreparedCorpus prepared = prepare_corpus(opts.config);

    std::vector<ArmResult> arms;
    if (opts.all_arms) {
        if (!opts.config.expansion_path)
            throw ConfigError("--all-arms requires --expansion for the lexdb arms");
        arms.push_back(run_arm(prepared, opts.config, Algorithm::kRocchio, false));
        arms.push_back(run_arm(prepared, opts.config, Algorithm::kWidrowHoff, false));
        arms.push_back(run_arm(prepared, opts.config, Algorithm::kRocchio, true));
        arms.push_back(run_arm(prepared, opts.config, Algorithm::kWidrowHoff, true));
    } else {
        arms.push_back(run_arm(prepared, opts.config, opts.config.algorithm,
                               opts.config.use_lexdb));
    }

    if (!opts.config.out_dir.empty()) {
        OutputTracker out;
        fs::path dir(opts.config.out_dir);
        try {
            std::ostringstream table;
            print_stats_table(prepared.stats, table);
            out.write(dir / "stats.txt", table.str());
            out.write(dir / "stats.json", stats_to_json(prepared.stats));

            std::ostringstream terms_csv;
            dump_selected_terms(prepared.vocab, prepared.index, opts.config.k_terms, terms_csv);
            out.write(dir / "selected_terms.csv", terms_csv.str());

            if (opts.config.expansion_path) {
                std::vector<ClosenessEntry> table2 = build_closeness_table(
                    prepared.expansion, prepared.stoplist, prepared.vocab);
                std::ostringstream closeness_csv;
                dump_closeness_table(table2, prepared.vocab, closeness_csv);
                out.write(dir / "closeness.csv", closeness_csv.str());
            }

            for (const ArmResult& arm : arms) {
                std::ostringstream model;
                save_model(arm.model, model);
                out.write(dir / ("model-" + arm_file_name(arm.name) + ".txt"), model.str());
            }
        } catch (...) {
            out.discard_all();
            throw;
        }
    }
    emit_results(opts, arms);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Text categorization with Rocchio / Widrow-Hoff category vectors"};
    app.require_subcommand(1);

    CommonOptions opts;

    CLI::App* stats = app.add_subcommand("stats", "Corpus statistics table");
    add_corpus_option(stats, opts);
    stats->add_option("--out", opts.config.out_dir, "Output directory");
    stats->add_option("--format", opts.format_name)->check(CLI::IsMember({"text", "json"}));

    CLI::App* select = app.add_subcommand("select-terms", "Dump per-category term selection");
    add_corpus_option(select, opts);
    add_pipeline_options(select, opts);
    select->add_option("--out", opts.config.out_dir, "Output directory");

    CLI::App* expand = app.add_subcommand("expand", "Dump the closeness table");
    add_corpus_option(expand, opts);
    add_pipeline_options(expand, opts);
    expand->add_option("--out", opts.config.out_dir, "Output directory");

    CLI::App* train = app.add_subcommand("train", "Train and persist one model");
    add_corpus_option(train, opts);
    add_pipeline_options(train, opts);
    add_training_options(train, opts);
    train->add_option("--model", opts.model_path, "Model output path")->required();

    CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate a persisted model");
    add_corpus_option(evaluate, opts);
    evaluate->add_option("--model", opts.model_path, "Model input path")->required();
    evaluate->add_option("--threshold", opts.config.threshold,
                         "Training-frequency group boundary");
    evaluate->add_option("--out", opts.config.out_dir, "Output directory");
    evaluate->add_option("--format", opts.format_name)
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* run = app.add_subcommand("run", "Full experiment pipeline");
    add_corpus_option(run, opts);
    add_pipeline_options(run, opts);
    add_training_options(run, opts);
    run->add_flag("--all-arms", opts.all_arms,
                  "Run rocchio/widrow-hoff, each with and without lexdb");
    run->add_option("--threshold", opts.config.threshold,
                    "Training-frequency group boundary");
    run->add_option("--out", opts.config.out_dir, "Output directory");
    run->add_option("--format", opts.format_name)
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats->parsed()) return cmd_stats(opts);
        if (select->parsed()) return cmd_select_terms(opts);
        if (expand->parsed()) return cmd_expand(opts);
        if (train->parsed()) return cmd_train(opts);
        if (evaluate->parsed()) return cmd_evaluate(opts);
        if (run->parsed()) return cmd_run(opts);
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
