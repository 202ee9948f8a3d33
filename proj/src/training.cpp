#include "textcat/training.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace textcat {

std::string_view to_string(Algorithm a) {
    return a == Algorithm::kRocchio ? "rocchio" : "widrow-hoff";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    if (name == "rocchio") return Algorithm::kRocchio;
    if (name == "widrow-hoff") return Algorithm::kWidrowHoff;
    return std::nullopt;
}

namespace {

// Dense scratch space over the term-id range touched by a training run.
class DenseAccumulator {
public:
    void ensure(TermId id) {
        if (id >= values_.size()) values_.resize(id + 1, 0.0);
    }
    void add(const SparseVector& v, double scale) {
        for (const auto& e : v.entries()) {
            ensure(e.id);
            values_[e.id] += scale * e.weight;
        }
    }
    double get(TermId id) const { return id < values_.size() ? values_[id] : 0.0; }
    void set(TermId id, double value) {
        ensure(id);
        values_[id] = value;
    }
    std::size_t size() const { return values_.size(); }

    SparseVector to_sparse() const {
        std::vector<SparseVector::Entry> entries;
        for (TermId id = 0; id < values_.size(); ++id)
            if (values_[id] != 0.0) entries.push_back({id, values_[id]});
        return SparseVector::from_sorted(std::move(entries));
    }

private:
    std::vector<double> values_;
};

}  // namespace

SparseVector rocchio(const SparseVector& initial, std::span<const SparseVector* const> positives,
                     std::span<const SparseVector* const> negatives,
                     const TrainingParams& params) {
    DenseAccumulator acc;
    acc.add(initial, params.alpha);
    if (!positives.empty()) {
        const double scale = params.beta / static_cast<double>(positives.size());
        for (const SparseVector* v : positives) acc.add(*v, scale);
    }
    if (!negatives.empty()) {
        const double scale = -params.gamma / static_cast<double>(negatives.size());
        for (const SparseVector* v : negatives) acc.add(*v, scale);
    }
    // negative components are turned to 0
    std::vector<SparseVector::Entry> entries;
    for (TermId id = 0; id < acc.size(); ++id)
        if (acc.get(id) > 0.0) entries.push_back({id, acc.get(id)});
    return SparseVector::from_sorted(std::move(entries));
}

SparseVector widrow_hoff(const SparseVector& initial,
                         std::span<const SparseVector* const> training_seq,
                         std::span<const std::uint8_t> labels, double eta) {
    DenseAccumulator w;
    w.add(initial, 1.0);
    for (std::size_t step = 0; step < training_seq.size(); ++step) {
        const SparseVector& d = *training_seq[step];
        double prediction = 0.0;
        for (const auto& e : d.entries()) prediction += e.weight * w.get(e.id);
        if (!std::isfinite(prediction))
            throw DivergenceError("widrow-hoff update diverged (eta too large?)", step);
        const double y = labels[step] ? 1.0 : 0.0;
        const double scale = -2.0 * eta * (prediction - y);
        if (scale != 0.0) w.add(d, scale);
    }
    return w.to_sparse();
}

std::vector<CategoryProfile> train_all(
    std::span<const SparseVector> training_vectors,
    const std::map<std::string, std::vector<std::uint32_t>>& memberships,
    const std::vector<std::string>& categories,
    const std::map<std::string, SparseVector>& initials, Algorithm algorithm,
    const TrainingParams& params, double eta) {
    static const SparseVector kEmpty;
    const std::size_t P = training_vectors.size();

    std::vector<CategoryProfile> profiles;
    profiles.reserve(categories.size());
    for (const std::string& category : categories) {
        auto members_it = memberships.find(category);
        static const std::vector<std::uint32_t> kNoMembers;
        const std::vector<std::uint32_t>& members =
            members_it != memberships.end() ? members_it->second : kNoMembers;

        auto initial_it = initials.find(category);
        const SparseVector& initial =
            initial_it != initials.end() ? initial_it->second : kEmpty;

        CategoryProfile profile;
        profile.category = category;
        profile.positive_count = static_cast<std::uint32_t>(members.size());

        if (algorithm == Algorithm::kRocchio) {
            std::vector<char> is_member(P, 0);
            for (std::uint32_t m : members) is_member[m] = 1;
            std::vector<const SparseVector*> positives, negatives;
            positives.reserve(members.size());
            negatives.reserve(P - members.size());
            for (std::size_t i = 0; i < P; ++i)
                (is_member[i] ? positives : negatives).push_back(&training_vectors[i]);
            profile.vector = rocchio(initial, positives, negatives, params);
        } else {
            std::vector<const SparseVector*> seq;
            seq.reserve(P);
            std::vector<std::uint8_t> labels(P, 0);
            for (std::size_t i = 0; i < P; ++i) seq.push_back(&training_vectors[i]);
            for (std::uint32_t m : members) labels[m] = 1;
            profile.vector = widrow_hoff(initial, seq, labels, eta);
        }
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

}  // namespace textcat
