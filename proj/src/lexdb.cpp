#include "textcat/lexdb.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "textcat/porter.hpp"
#include "textcat/textpipe.hpp"

namespace textcat {

namespace {

std::uint32_t phrase_word_count(const std::string& phrase) {
    std::uint32_t count = 0;
    bool in_word = false;
    for (char c : phrase) {
        bool space = c == ' ' || c == '\t';
        if (!space && !in_word) ++count;
        in_word = !space;
    }
    return count;
}

}  // namespace

std::vector<ExpansionEntry> load_expansion_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open expansion file: " + path);

    std::vector<ExpansionEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 4)
            throw DataError("expansion file " + path + ":" + std::to_string(line_no) +
                            ": expected 4 tab-separated fields, got " +
                            std::to_string(fields.size()));

        ExpansionEntry entry;
        entry.category = fields[0];
        entry.category_phrase = fields[1];
        entry.synonym_term = fields[3];
        if (entry.category.empty() || entry.category_phrase.empty() ||
            entry.synonym_term.empty())
            throw DataError("expansion file " + path + ":" + std::to_string(line_no) +
                            ": empty field");

        try {
            entry.source_word_index = static_cast<std::uint32_t>(std::stoul(fields[2]));
        } catch (const std::exception&) {
            throw DataError("expansion file " + path + ":" + std::to_string(line_no) +
                            ": bad word index '" + fields[2] + "'");
        }
        if (entry.source_word_index > phrase_word_count(entry.category_phrase))
            throw DataError("expansion file " + path + ":" + std::to_string(line_no) +
                            ": word index " + std::to_string(entry.source_word_index) +
                            " exceeds phrase length");
        entries.push_back(std::move(entry));
    }
    return entries;
}

double closeness(const ExpansionEntry& entry) {
    if (entry.source_word_index == 0) return 1.0;
    return 1.0 / static_cast<double>(phrase_word_count(entry.category_phrase));
}

std::vector<ClosenessEntry> build_closeness_table(const std::vector<ExpansionEntry>& entries,
                                                  const Stoplist& stoplist,
                                                  const Vocabulary& vocab) {
    // (category, stem id) -> max closeness
    std::map<std::pair<std::string, TermId>, double> best;
    for (const ExpansionEntry& entry : entries) {
        const double value = closeness(entry);
        for (const std::string& word : tokenize(entry.synonym_term)) {
            if (stoplist.contains(word)) continue;
            auto id = vocab.lookup(porter_stem(word));
            if (!id) continue;  // stems unseen in training are deleted
            auto [it, inserted] = best.try_emplace({entry.category, *id}, value);
            if (!inserted && value > it->second) it->second = value;
        }
    }

    std::vector<ClosenessEntry> table;
    table.reserve(best.size());
    for (const auto& [key, value] : best) table.push_back({key.first, key.second, value});
    return table;
}

std::map<std::string, SparseVector> initial_vectors_rocchio(
    const std::vector<ClosenessEntry>& table, const CollectionWeights& weights) {
    std::map<std::string, std::vector<SparseVector::Entry>> per_category;
    for (const ClosenessEntry& entry : table) {
        if (entry.term >= weights.term_count())
            throw std::logic_error("closeness table term missing from collection weights");
        double w = entry.closeness * weights.tw(entry.term);
        if (w != 0.0) per_category[entry.category].push_back({entry.term, w});
    }
    std::map<std::string, SparseVector> initials;
    for (auto& [category, entries] : per_category)
        initials.emplace(category, SparseVector::from_unsorted(std::move(entries)));
    return initials;
}

std::map<std::string, SparseVector> initial_vectors_widrow_hoff(
    const std::map<std::string, SparseVector>& rocchio_initials, double X) {
    if (X <= 0.0)
        throw ConfigError("widrow-hoff initial vectors need a positive maximum document norm");
    std::map<std::string, SparseVector> scaled;
    for (const auto& [category, vector] : rocchio_initials) {
        std::vector<SparseVector::Entry> entries = vector.entries();
        for (auto& e : entries) e.weight /= X;
        scaled.emplace(category, SparseVector::from_sorted(std::move(entries)));
    }
    return scaled;
}

void dump_closeness_table(const std::vector<ClosenessEntry>& table, const Vocabulary& vocab,
                          std::ostream& os) {
    os << "category,term,closeness\n";
    char buf[48];
    for (const ClosenessEntry& entry : table) {
        std::snprintf(buf, sizeof(buf), "%.6f", entry.closeness);
        os << entry.category << ',' << vocab.term(entry.term) << ',' << buf << '\n';
    }
}

}  // namespace textcat
