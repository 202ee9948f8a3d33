#include "textcat/termselect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "textcat/corpus.hpp"
#include "textcat/textpipe.hpp"

namespace textcat {

double emi_score(const ContingencyCell& cell) {
    const double P = static_cast<double>(cell.n11) + cell.n10 + cell.n01 + cell.n00;
    if (P <= 0.0) return 0.0;
    const double row1 = (cell.n11 + cell.n10) / P;  // term present
    const double row0 = (cell.n01 + cell.n00) / P;
    const double col1 = (cell.n11 + cell.n01) / P;  // in category
    const double col0 = (cell.n10 + cell.n00) / P;

    auto plogp = [](double joint, double marginal_product) {
        if (joint <= 0.0) return 0.0;  // 0*log(0) = 0
        return joint * std::log2(joint / marginal_product);
    };
    double score = plogp(cell.n11 / P, row1 * col1) + plogp(cell.n10 / P, row1 * col0) +
                   plogp(cell.n01 / P, row0 * col1) + plogp(cell.n00 / P, row0 * col0);
    return score < 0.0 ? 0.0 : score;  // clamp float residue; MI >= 0
}

TrainingIndex build_training_index(const std::vector<RawDocument>& training_docs,
                                   const Vocabulary& vocab, const Stoplist& stoplist) {
    TrainingIndex index;
    index.doc_count = static_cast<std::uint32_t>(training_docs.size());
    index.doc_terms.reserve(training_docs.size());
    for (std::uint32_t i = 0; i < training_docs.size(); ++i) {
        const RawDocument& doc = training_docs[i];
        std::vector<TermId> ids;
        for (const std::string& stem : pipeline_stems(doc.title + " " + doc.body, stoplist)) {
            if (auto id = vocab.lookup(stem)) ids.push_back(*id);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        index.doc_terms.push_back(std::move(ids));
        for (const std::string& topic : doc.topics) index.category_docs[topic].push_back(i);
    }
    return index;
}

namespace {

// EMI of every vocabulary term against one category, as (score, id) pairs.
std::vector<std::pair<double, TermId>> score_category(const Vocabulary& vocab,
                                                      const TrainingIndex& index,
                                                      const std::vector<std::uint32_t>& members) {
    const std::uint32_t P = index.doc_count;
    const auto n_k = static_cast<std::uint32_t>(members.size());

    std::vector<std::uint32_t> n11(vocab.size(), 0);
    for (std::uint32_t doc : members)
        for (TermId id : index.doc_terms[doc]) ++n11[id];

    std::vector<std::pair<double, TermId>> scored;
    scored.reserve(vocab.size());
    for (TermId id = 0; id < vocab.size(); ++id) {
        ContingencyCell cell;
        cell.n11 = n11[id];
        cell.n10 = vocab.doc_freq(id) - n11[id];
        cell.n01 = n_k - n11[id];
        cell.n00 = P - cell.n11 - cell.n10 - cell.n01;
        scored.emplace_back(emi_score(cell), id);
    }
    return scored;
}

// Top-k by score, ties broken by ascending term id.
void take_top_k(std::vector<std::pair<double, TermId>>& scored, std::uint32_t k) {
    auto better = [](const std::pair<double, TermId>& a, const std::pair<double, TermId>& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    };
    if (scored.size() > k) {
        std::nth_element(scored.begin(), scored.begin() + k - 1, scored.end(), better);
        scored.resize(k);
    }
    std::sort(scored.begin(), scored.end(), better);
}

}  // namespace

std::unordered_set<TermId> select_terms(const Vocabulary& vocab, const TrainingIndex& index,
                                        std::uint32_t k) {
    std::unordered_set<TermId> selected;
    for (const auto& [category, members] : index.category_docs) {
        if (members.empty()) continue;
        auto scored = score_category(vocab, index, members);
        take_top_k(scored, k);
        for (const auto& [score, id] : scored) selected.insert(id);
    }
    return selected;
}

void dump_selected_terms(const Vocabulary& vocab, const TrainingIndex& index, std::uint32_t k,
                         std::ostream& os) {
    os << "category,term,score\n";
    char buf[64];
    for (const auto& [category, members] : index.category_docs) {
        if (members.empty()) continue;
        auto scored = score_category(vocab, index, members);
        take_top_k(scored, k);
        for (const auto& [score, id] : scored) {
            std::snprintf(buf, sizeof(buf), "%.6f", score);
            os << category << ',' << vocab.term(id) << ',' << buf << '\n';
        }
    }
}

}  // namespace textcat
