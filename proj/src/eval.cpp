#include "textcat/eval.hpp"

#include <algorithm>
#include <cmath>

#include "textcat/training.hpp"

namespace textcat {

PrecisionCurve PrecisionCurve::from_levels(const std::array<double, kRecallLevels>& levels) {
    PrecisionCurve curve;
    curve.precision = levels;
    double sum = 0.0;
    for (double p : levels) sum += p;
    curve.average = sum / static_cast<double>(kRecallLevels);
    return curve;
}

RankedList rank_documents(const CategoryProfile& profile,
                          std::span<const TestDocVector> test_vectors) {
    RankedList ranked;
    ranked.category = profile.category;
    ranked.items.reserve(test_vectors.size());
    for (const TestDocVector& doc : test_vectors)
        ranked.items.emplace_back(doc.new_id, cosine(doc.vector, profile.vector));
    std::sort(ranked.items.begin(), ranked.items.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    return ranked;
}

PrecisionCurve interpolated_precision(const RankedList& ranked,
                                      const std::unordered_set<std::uint32_t>& relevant) {
    if (relevant.empty())
        throw std::invalid_argument(
            "interpolated_precision: empty relevant set; exclude such categories upstream");

    const std::size_t n = ranked.items.size();
    const double R = static_cast<double>(relevant.size());

    // precision/recall at every cutoff, then a suffix max of precision
    std::vector<double> recall(n), suffix_max_prec(n);
    {
        std::vector<double> precision(n);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (relevant.contains(ranked.items[i].first)) ++hits;
            precision[i] = static_cast<double>(hits) / static_cast<double>(i + 1);
            recall[i] = static_cast<double>(hits) / R;
        }
        double running = 0.0;
        for (std::size_t i = n; i-- > 0;) {
            running = std::max(running, precision[i]);
            suffix_max_prec[i] = running;
        }
    }

    std::array<double, kRecallLevels> levels{};
    for (std::size_t j = 0; j < kRecallLevels; ++j) {
        const double r = static_cast<double>(j) / 10.0;
        // first cutoff reaching recall r; recall is nondecreasing
        auto it = std::lower_bound(recall.begin(), recall.end(), r);
        levels[j] = it == recall.end() ? 0.0 : suffix_max_prec[it - recall.begin()];
    }
    return PrecisionCurve::from_levels(levels);
}

PrecisionCurve macro_average(std::span<const PrecisionCurve> curves) {
    if (curves.empty()) throw std::invalid_argument("macro_average: no curves");
    std::array<double, kRecallLevels> levels{};
    for (const PrecisionCurve& curve : curves)
        for (std::size_t j = 0; j < kRecallLevels; ++j) levels[j] += curve.precision[j];
    for (double& level : levels) level /= static_cast<double>(curves.size());
    return PrecisionCurve::from_levels(levels);
}

FrequencyBreakdown frequency_breakdown(std::span<const CategoryResult> results,
                                       std::uint32_t threshold) {
    std::vector<PrecisionCurve> low, high, all;
    for (const CategoryResult& r : results) {
        (r.training_count < threshold ? low : high).push_back(r.curve);
        all.push_back(r.curve);
    }
    FrequencyBreakdown breakdown;
    breakdown.low_count = low.size();
    breakdown.high_count = high.size();
    if (!low.empty()) breakdown.low = macro_average(low);
    if (!high.empty()) breakdown.high = macro_average(high);
    breakdown.total = macro_average(all);
    return breakdown;
}

}  // namespace textcat
