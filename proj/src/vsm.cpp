#include "textcat/vsm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <ostream>

#include "textcat/textpipe.hpp"

namespace textcat {

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.id < b.id; });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (const Entry& e : entries) {
        if (!merged.empty() && merged.back().id == e.id)
            merged.back().weight += e.weight;
        else
            merged.push_back(e);
    }
    std::erase_if(merged, [](const Entry& e) { return e.weight == 0.0; });
    SparseVector v;
    v.entries_ = std::move(merged);
    assert(v.valid());
    return v;
}

SparseVector SparseVector::from_sorted(std::vector<Entry> entries) {
    SparseVector v;
    v.entries_ = std::move(entries);
    assert(v.valid());
    return v;
}

double SparseVector::norm() const {
    double sum = 0.0;
    for (const Entry& e : entries_) sum += e.weight * e.weight;
    return std::sqrt(sum);
}

bool SparseVector::valid() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!std::isfinite(entries_[i].weight) || entries_[i].weight == 0.0) return false;
        if (i > 0 && entries_[i - 1].id >= entries_[i].id) return false;
    }
    return true;
}

double dot(const SparseVector& a, const SparseVector& b) {
    double sum = 0.0;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea && ib != eb) {
        if (ia->id < ib->id)
            ++ia;
        else if (ib->id < ia->id)
            ++ib;
        else
            sum += ia->weight * ib->weight, ++ia, ++ib;
    }
    return sum;
}

double cosine(const SparseVector& d, const SparseVector& c) {
    double nd = d.norm(), nc = c.norm();
    if (nd == 0.0 || nc == 0.0) return 0.0;
    return dot(d, c) / (nd * nc);
}

double term_weight(std::uint32_t tf_i, std::uint32_t P) {
    if (tf_i == 0) throw std::domain_error("term_weight: tf_i = 0 (term never trained)");
    if (tf_i > P) throw std::domain_error("term_weight: tf_i exceeds training document count");
    return std::log2(static_cast<double>(P) / static_cast<double>(tf_i));
}

CollectionWeights CollectionWeights::from_vocabulary(const Vocabulary& vocab, std::uint32_t P) {
    CollectionWeights w;
    w.P_ = P;
    w.tw_.resize(vocab.size());
    for (TermId id = 0; id < vocab.size(); ++id) w.tw_[id] = term_weight(vocab.doc_freq(id), P);
    return w;
}

CollectionWeights CollectionWeights::with_size(std::size_t n, std::uint32_t P) {
    CollectionWeights w;
    w.P_ = P;
    w.tw_.assign(n, 0.0);
    return w;
}

void CollectionWeights::set(TermId id, double tw) {
    if (id >= tw_.size()) tw_.resize(id + 1, 0.0);
    tw_[id] = tw;
}

SparseVector doc_vector(const std::vector<std::string>& stems,
                        const std::unordered_set<TermId>& selected_terms,
                        const Vocabulary& vocab, const CollectionWeights& weights) {
    std::map<TermId, std::uint32_t> tf;  // ordered: entries come out sorted
    for (const std::string& stem : stems) {
        auto id = vocab.lookup(stem);
        if (!id || !selected_terms.contains(*id)) continue;
        ++tf[*id];
    }
    std::vector<SparseVector::Entry> entries;
    entries.reserve(tf.size());
    for (const auto& [id, count] : tf) {
        double w = count * weights.tw(id);
        if (w != 0.0) entries.push_back({id, w});
    }
    return SparseVector::from_sorted(std::move(entries));
}

double max_doc_norm(std::span<const SparseVector> vectors) {
    double max_norm = 0.0;
    for (const SparseVector& v : vectors) max_norm = std::max(max_norm, v.norm());
    return max_norm;
}

void dump_vector(const SparseVector& v, const Vocabulary& vocab, std::ostream& os) {
    for (const auto& e : v.entries())
        os << e.id << '\t' << vocab.term(e.id) << '\t' << e.weight << '\n';
}

}  // namespace textcat
