#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "textcat/types.hpp"

namespace textcat {

class Vocabulary;

// Ordered (term id, weight) pairs, strictly ascending by id, no explicit
// zeros, all weights finite.
class SparseVector {
public:
    struct Entry {
        TermId id;
        double weight;
    };

    SparseVector() = default;

    // Sorts, merges duplicate ids by summing, drops zero weights.
    static SparseVector from_unsorted(std::vector<Entry> entries);
    // Entries must already satisfy the invariants (checked with assertions).
    static SparseVector from_sorted(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    double norm() const;
    bool valid() const;  // the class invariants, as a checkable predicate

private:
    std::vector<Entry> entries_;
};

double dot(const SparseVector& a, const SparseVector& b);

// dot(d,c) / (|d|*|c|); zero-norm inputs compare as 0 so empty documents rank
// last instead of failing.
double cosine(const SparseVector& d, const SparseVector& c);

// log2(P / tf_i). tf_i must be in [1, P].
double term_weight(std::uint32_t tf_i, std::uint32_t P);

// Per-term collection weights over the whole vocabulary.
class CollectionWeights {
public:
    CollectionWeights() = default;
    static CollectionWeights from_vocabulary(const Vocabulary& vocab, std::uint32_t P);

    double tw(TermId id) const { return tw_[id]; }
    std::uint32_t training_doc_count() const { return P_; }
    std::size_t term_count() const { return tw_.size(); }

    void set(TermId id, double tw);
    static CollectionWeights with_size(std::size_t n, std::uint32_t P);

private:
    std::vector<double> tw_;
    std::uint32_t P_ = 0;
};

// Entry (i, tf_ij * tw_i) for every selected term i occurring among the
// document's stems; tf_ij is the raw occurrence count. Terms with tw = 0 are
// omitted (zero weights are never stored).
SparseVector doc_vector(const std::vector<std::string>& stems,
                        const std::unordered_set<TermId>& selected_terms,
                        const Vocabulary& vocab, const CollectionWeights& weights);

// Maximum Euclidean norm over the given vectors; 0 for an empty set.
double max_doc_norm(std::span<const SparseVector> vectors);

// Debug dump: `term_id<TAB>term<TAB>weight` lines.
void dump_vector(const SparseVector& v, const Vocabulary& vocab, std::ostream& os);

}  // namespace textcat
