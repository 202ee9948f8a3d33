#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "textcat/corpus.hpp"
#include "textcat/eval.hpp"
#include "textcat/lexdb.hpp"
#include "textcat/termselect.hpp"
#include "textcat/textpipe.hpp"
#include "textcat/training.hpp"
#include "textcat/types.hpp"
#include "textcat/vsm.hpp"

namespace textcat {

enum class OutputFormat { kText, kJson, kCsv };

std::optional<OutputFormat> format_from_string(std::string_view name);

struct RunConfig {
    std::string corpus_dir;
    std::optional<std::string> stoplist_path;
    std::optional<std::string> expansion_path;
    Algorithm algorithm = Algorithm::kRocchio;
    bool use_lexdb = false;
    std::uint32_t k_terms = 50;
    double alpha = 20.0;
    double beta = 16.0;
    double gamma = 4.0;
    std::optional<double> eta;
    std::uint32_t threshold = 10;
    std::string out_dir;
    OutputFormat format = OutputFormat::kText;
};

// Throws ConfigError on an unusable configuration (e.g. lexdb without an
// expansion file).
void validate(const RunConfig& config);

// Sorted (term id, occurrence count) pairs for one document.
using TermCounts = std::vector<std::pair<TermId, std::uint32_t>>;

// Corpus-derived state shared by every experimental arm.
struct PreparedCorpus {
    CorpusSplit split;
    CorpusStats stats;
    Vocabulary vocab;
    Stoplist stoplist;
    TrainingIndex index;                  // training memberships + doc terms
    std::vector<std::string> categories;  // sorted universe (training + test + expansion)
    std::map<std::string, std::vector<std::uint32_t>> test_memberships;
    std::vector<TermCounts> training_tf;     // per training doc
    std::vector<TermCounts> test_tf;         // per test doc
    std::vector<ExpansionEntry> expansion;   // empty unless an expansion file is configured
};

PreparedCorpus prepare_corpus(const RunConfig& config);

// A trained, persistable classifier: everything `evaluate` needs without
// reprocessing the training split.
struct ModelTerm {
    TermId id = 0;
    std::string term;
    double tw = 0.0;
};

struct Model {
    Algorithm algorithm = Algorithm::kRocchio;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double eta_used = 0.0;
    std::uint32_t training_doc_count = 0;  // P
    double max_doc_norm = 0.0;             // X
    std::vector<std::string> stopwords;
    std::vector<ModelTerm> terms;  // the selected terms, ascending id
    std::vector<CategoryProfile> profiles;
};

void save_model(const Model& model, std::ostream& os);
Model load_model(std::istream& is);

struct ArmResult {
    std::string name;  // e.g. "rocchio", "widrow-hoff+lex"
    Model model;
    std::vector<CategoryResult> results;  // categories with >= 1 test example
    PrecisionCurve overall;
    FrequencyBreakdown breakdown;
};

// Train one arm on a prepared corpus and evaluate it against the test split.
ArmResult run_arm(const PreparedCorpus& prepared, const RunConfig& config, Algorithm algorithm,
                  bool use_lexdb);

// The configured single arm: parse -> split -> vocab -> select -> train ->
// rank -> evaluate.
ArmResult run_experiment(const RunConfig& config);

// Evaluate a persisted model against the test split of a corpus.
ArmResult evaluate_model(const Model& model, const CorpusSplit& split,
                         const std::string& arm_name);

std::vector<TestDocVector> test_vectors_from_model(const Model& model,
                                                   const std::vector<RawDocument>& test_docs);

}  // namespace textcat
