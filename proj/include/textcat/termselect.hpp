#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "textcat/types.hpp"

namespace textcat {

class Vocabulary;
struct RawDocument;
class Stoplist;

// Document counts over the training set by term presence x category
// membership. n11 + n10 + n01 + n00 = P.
struct ContingencyCell {
    std::uint32_t n11 = 0;  // term present, in category
    std::uint32_t n10 = 0;  // term present, not in category
    std::uint32_t n01 = 0;  // term absent, in category
    std::uint32_t n00 = 0;  // term absent, not in category
};

// Expected mutual information of the two indicator variables, in bits, with
// the 0*log(0) = 0 convention. Never negative.
double emi_score(const ContingencyCell& cell);

// Training doc indexes per category label, plus the per-term posting data
// needed for contingency counts. Built once, reused across categories.
struct TrainingIndex {
    std::uint32_t doc_count = 0;                        // P
    std::vector<std::vector<TermId>> doc_terms;         // distinct term ids per doc
    std::map<std::string, std::vector<std::uint32_t>> category_docs;  // sorted by label
};

TrainingIndex build_training_index(const std::vector<RawDocument>& training_docs,
                                   const Vocabulary& vocab, const Stoplist& stoplist);

// Per-category top-k terms by EMI (ties by ascending term id), unioned over
// all categories. Categories without training documents contribute nothing.
std::unordered_set<TermId> select_terms(const Vocabulary& vocab, const TrainingIndex& index,
                                        std::uint32_t k);

// CSV dump `category,term,score` of each category's top-k selection.
void dump_selected_terms(const Vocabulary& vocab, const TrainingIndex& index, std::uint32_t k,
                         std::ostream& os);

}  // namespace textcat
