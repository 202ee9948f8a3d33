#include "textcat/pipeline.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace textcat {

std::optional<OutputFormat> format_from_string(std::string_view name) {
    if (name == "text") return OutputFormat::kText;
    if (name == "json") return OutputFormat::kJson;
    if (name == "csv") return OutputFormat::kCsv;
    return std::nullopt;
}

void validate(const RunConfig& config) {
    if (config.corpus_dir.empty()) throw ConfigError("no corpus directory given");
    if (config.k_terms < 1) throw ConfigError("--k-terms must be at least 1");
    if (config.use_lexdb && !config.expansion_path)
        throw ConfigError("--use-lexdb requires --expansion");
    if (config.alpha < 0 || config.beta < 0 || config.gamma < 0)
        throw ConfigError("alpha, beta and gamma must be non-negative");
    if (config.eta && *config.eta <= 0) throw ConfigError("--eta must be positive");
}

namespace {

TermCounts count_terms(const RawDocument& doc, const Stoplist& stoplist,
                       const Vocabulary& vocab) {
    std::map<TermId, std::uint32_t> counts;
    for (const std::string& stem : pipeline_stems(doc.title + " " + doc.body, stoplist))
        if (auto id = vocab.lookup(stem)) ++counts[*id];
    return TermCounts(counts.begin(), counts.end());
}

SparseVector vector_from_counts(const TermCounts& counts,
                                const std::unordered_set<TermId>& selected,
                                const CollectionWeights& weights) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [id, tf] : counts) {
        if (!selected.contains(id)) continue;
        double w = tf * weights.tw(id);
        if (w != 0.0) entries.push_back({id, w});
    }
    return SparseVector::from_sorted(std::move(entries));
}

}  // namespace

PreparedCorpus prepare_corpus(const RunConfig& config) {
    validate(config);

    PreparedCorpus prepared;
    prepared.stoplist = config.stoplist_path ? Stoplist::from_file(*config.stoplist_path)
                                             : Stoplist::default_smart();

    ParserDiagnostics diagnostics;
    prepared.split = split_lewis(parse_corpus_dir(config.corpus_dir, &diagnostics));
    prepared.stats = compute_stats(prepared.split);
    prepared.vocab = build_vocabulary(prepared.split.training, prepared.stoplist);
    prepared.index =
        build_training_index(prepared.split.training, prepared.vocab, prepared.stoplist);

    prepared.training_tf.reserve(prepared.split.training.size());
    for (const RawDocument& doc : prepared.split.training)
        prepared.training_tf.push_back(count_terms(doc, prepared.stoplist, prepared.vocab));
    prepared.test_tf.reserve(prepared.split.test.size());
    for (std::uint32_t i = 0; i < prepared.split.test.size(); ++i) {
        const RawDocument& doc = prepared.split.test[i];
        prepared.test_tf.push_back(count_terms(doc, prepared.stoplist, prepared.vocab));
        for (const std::string& topic : doc.topics)
            prepared.test_memberships[topic].push_back(i);
    }

    if (config.expansion_path)
        prepared.expansion = load_expansion_file(*config.expansion_path);

    std::set<std::string> universe;
    for (const auto& [category, _] : prepared.index.category_docs) universe.insert(category);
    for (const auto& [category, _] : prepared.test_memberships) universe.insert(category);
    for (const ExpansionEntry& entry : prepared.expansion) universe.insert(entry.category);
    prepared.categories.assign(universe.begin(), universe.end());

    return prepared;
}

ArmResult run_arm(const PreparedCorpus& prepared, const RunConfig& config, Algorithm algorithm,
                  bool use_lexdb) {
    const auto P = static_cast<std::uint32_t>(prepared.split.training.size());
    CollectionWeights weights =
        P > 0 ? CollectionWeights::from_vocabulary(prepared.vocab, P)
              : CollectionWeights::with_size(prepared.vocab.size(), 0);

    std::unordered_set<TermId> selected =
        select_terms(prepared.vocab, prepared.index, config.k_terms);

    // expansion stems join the selected set so that initial vectors are
    // usable even where EMI did not pick the term
    std::vector<ClosenessEntry> closeness_table;
    if (use_lexdb) {
        closeness_table =
            build_closeness_table(prepared.expansion, prepared.stoplist, prepared.vocab);
        for (const ClosenessEntry& entry : closeness_table) selected.insert(entry.term);
    }

    std::vector<SparseVector> training_vectors;
    training_vectors.reserve(prepared.training_tf.size());
    for (const TermCounts& counts : prepared.training_tf)
        training_vectors.push_back(vector_from_counts(counts, selected, weights));

    const double X = max_doc_norm(training_vectors);
    double eta = config.eta ? *config.eta : (X > 0.0 ? 1.0 / (4.0 * X * X) : 0.0);

    std::map<std::string, SparseVector> initials;
    if (use_lexdb) {
        initials = initial_vectors_rocchio(closeness_table, weights);
        if (algorithm == Algorithm::kWidrowHoff)
            initials = initial_vectors_widrow_hoff(initials, X);
    }

    TrainingParams params;
    params.alpha = config.alpha;
    params.beta = config.beta;
    params.gamma = config.gamma;
    params.eta = eta;

    std::vector<CategoryProfile> profiles =
        train_all(training_vectors, prepared.index.category_docs, prepared.categories, initials,
                  algorithm, params, eta);

    ArmResult arm;
    arm.name = std::string(to_string(algorithm)) + (use_lexdb ? "+lex" : "");

    arm.model.algorithm = algorithm;
    arm.model.alpha = config.alpha;
    arm.model.beta = config.beta;
    arm.model.gamma = config.gamma;
    arm.model.eta_used = eta;
    arm.model.training_doc_count = P;
    arm.model.max_doc_norm = X;
    arm.model.stopwords = prepared.stoplist.sorted_words();
    std::vector<TermId> selected_sorted(selected.begin(), selected.end());
    std::sort(selected_sorted.begin(), selected_sorted.end());
    arm.model.terms.reserve(selected_sorted.size());
    for (TermId id : selected_sorted)
        arm.model.terms.push_back({id, prepared.vocab.term(id), weights.tw(id)});
    arm.model.profiles = std::move(profiles);

    std::vector<TestDocVector> test_vectors;
    test_vectors.reserve(prepared.test_tf.size());
    for (std::uint32_t i = 0; i < prepared.test_tf.size(); ++i)
        test_vectors.push_back({prepared.split.test[i].new_id,
                                vector_from_counts(prepared.test_tf[i], selected, weights)});

    for (const CategoryProfile& profile : arm.model.profiles) {
        auto it = prepared.test_memberships.find(profile.category);
        if (it == prepared.test_memberships.end()) continue;
        std::unordered_set<std::uint32_t> relevant;
        for (std::uint32_t idx : it->second) relevant.insert(prepared.split.test[idx].new_id);

        RankedList ranked = rank_documents(profile, test_vectors);
        CategoryResult result;
        result.category = profile.category;
        result.training_count = profile.positive_count;
        result.test_count = static_cast<std::uint32_t>(relevant.size());
        result.curve = interpolated_precision(ranked, relevant);
        arm.results.push_back(std::move(result));
    }

    if (!arm.results.empty()) {
        std::vector<PrecisionCurve> curves;
        curves.reserve(arm.results.size());
        for (const CategoryResult& r : arm.results) curves.push_back(r.curve);
        arm.overall = macro_average(curves);
        arm.breakdown = frequency_breakdown(arm.results, config.threshold);
    }
    return arm;
}

ArmResult run_experiment(const RunConfig& config) {
    PreparedCorpus prepared = prepare_corpus(config);
    return run_arm(prepared, config, config.algorithm, config.use_lexdb);
}

std::vector<TestDocVector> test_vectors_from_model(const Model& model,
                                                   const std::vector<RawDocument>& test_docs) {
    // Rebuild term lookup from the persisted term table; the persisted
    // stoplist is used, not the process default.
    std::unordered_map<std::string, std::pair<TermId, double>> term_map;
    term_map.reserve(model.terms.size());
    for (const ModelTerm& t : model.terms) term_map.emplace(t.term, std::make_pair(t.id, t.tw));
    std::unordered_set<std::string> stopset(model.stopwords.begin(), model.stopwords.end());

    std::vector<TestDocVector> vectors;
    vectors.reserve(test_docs.size());
    for (const RawDocument& doc : test_docs) {
        std::map<TermId, std::pair<std::uint32_t, double>> counts;  // id -> (tf, tw)
        for (std::string& token : tokenize(doc.title + " " + doc.body)) {
            if (stopset.contains(token)) continue;
            auto it = term_map.find(porter_stem(token));
            if (it == term_map.end()) continue;
            auto& slot = counts[it->second.first];
            ++slot.first;
            slot.second = it->second.second;
        }
        std::vector<SparseVector::Entry> entries;
        for (const auto& [id, tf_tw] : counts) {
            double w = tf_tw.first * tf_tw.second;
            if (w != 0.0) entries.push_back({id, w});
        }
        vectors.push_back({doc.new_id, SparseVector::from_sorted(std::move(entries))});
    }
    return vectors;
}

ArmResult evaluate_model(const Model& model, const CorpusSplit& split,
                         const std::string& arm_name) {
    std::vector<TestDocVector> test_vectors = test_vectors_from_model(model, split.test);

    std::map<std::string, std::unordered_set<std::uint32_t>> test_relevant;
    for (const RawDocument& doc : split.test)
        for (const std::string& topic : doc.topics) test_relevant[topic].insert(doc.new_id);

    ArmResult arm;
    arm.name = arm_name;
    arm.model = model;
    for (const CategoryProfile& profile : model.profiles) {
        auto it = test_relevant.find(profile.category);
        if (it == test_relevant.end()) continue;
        RankedList ranked = rank_documents(profile, test_vectors);
        CategoryResult result;
        result.category = profile.category;
        result.training_count = profile.positive_count;
        result.test_count = static_cast<std::uint32_t>(it->second.size());
        result.curve = interpolated_precision(ranked, it->second);
        arm.results.push_back(std::move(result));
    }
    if (!arm.results.empty()) {
        std::vector<PrecisionCurve> curves;
        curves.reserve(arm.results.size());
        for (const CategoryResult& r : arm.results) curves.push_back(r.curve);
        arm.overall = macro_average(curves);
    }
    return arm;
}

namespace {

void write_double(std::ostream& os, double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    os << buf;
}

}  // namespace

void save_model(const Model& model, std::ostream& os) {
    os << "textcat-model 1\n";
    os << "algorithm " << to_string(model.algorithm) << "\n";
    os << "alpha ";
    write_double(os, model.alpha);
    os << "\nbeta ";
    write_double(os, model.beta);
    os << "\ngamma ";
    write_double(os, model.gamma);
    os << "\neta ";
    write_double(os, model.eta_used);
    os << "\nP " << model.training_doc_count << "\nX ";
    write_double(os, model.max_doc_norm);
    os << "\nstopwords " << model.stopwords.size() << "\n";
    for (const std::string& w : model.stopwords) os << w << "\n";
    os << "terms " << model.terms.size() << "\n";
    for (const ModelTerm& t : model.terms) {
        os << t.id << ' ' << t.term << ' ';
        write_double(os, t.tw);
        os << "\n";
    }
    os << "categories " << model.profiles.size() << "\n";
    for (const CategoryProfile& p : model.profiles) {
        os << "category " << p.category << ' ' << p.positive_count << ' '
           << p.vector.entries().size() << "\n";
        for (const auto& e : p.vector.entries()) {
            os << e.id << ' ';
            write_double(os, e.weight);
            os << "\n";
        }
    }
}

namespace {

std::string read_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line)) throw DataError(std::string("model file: missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

template <typename T>
T parse_field(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string name;
    T value{};
    if (!(ss >> name >> value) || name != key)
        throw DataError("model file: expected '" + key + "', got '" + line + "'");
    return value;
}

}  // namespace

Model load_model(std::istream& is) {
    Model model;
    if (read_line(is, "header") != "textcat-model 1")
        throw DataError("model file: unrecognized header");

    std::string algorithm = parse_field<std::string>(read_line(is, "algorithm"), "algorithm");
    auto parsed = algorithm_from_string(algorithm);
    if (!parsed) throw DataError("model file: unknown algorithm '" + algorithm + "'");
    model.algorithm = *parsed;

    model.alpha = parse_field<double>(read_line(is, "alpha"), "alpha");
    model.beta = parse_field<double>(read_line(is, "beta"), "beta");
    model.gamma = parse_field<double>(read_line(is, "gamma"), "gamma");
    model.eta_used = parse_field<double>(read_line(is, "eta"), "eta");
    model.training_doc_count = parse_field<std::uint32_t>(read_line(is, "P"), "P");
    model.max_doc_norm = parse_field<double>(read_line(is, "X"), "X");

    auto n_stop = parse_field<std::size_t>(read_line(is, "stopwords"), "stopwords");
    model.stopwords.reserve(n_stop);
    for (std::size_t i = 0; i < n_stop; ++i) model.stopwords.push_back(read_line(is, "stopword"));

    auto n_terms = parse_field<std::size_t>(read_line(is, "terms"), "terms");
    model.terms.reserve(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) {
        std::istringstream ss(read_line(is, "term"));
        ModelTerm t;
        if (!(ss >> t.id >> t.term >> t.tw)) throw DataError("model file: bad term line");
        model.terms.push_back(std::move(t));
    }

    auto n_categories = parse_field<std::size_t>(read_line(is, "categories"), "categories");
    model.profiles.reserve(n_categories);
    for (std::size_t i = 0; i < n_categories; ++i) {
        std::istringstream ss(read_line(is, "category"));
        std::string keyword;
        CategoryProfile profile;
        std::size_t entry_count = 0;
        if (!(ss >> keyword >> profile.category >> profile.positive_count >> entry_count) ||
            keyword != "category")
            throw DataError("model file: bad category line");
        std::vector<SparseVector::Entry> entries;
        entries.reserve(entry_count);
        for (std::size_t j = 0; j < entry_count; ++j) {
            std::istringstream es(read_line(is, "weight"));
            SparseVector::Entry e{};
            if (!(es >> e.id >> e.weight)) throw DataError("model file: bad weight line");
            entries.push_back(e);
        }
        profile.vector = SparseVector::from_sorted(std::move(entries));
        model.profiles.push_back(std::move(profile));
    }
    return model;
}

}  // namespace textcat
