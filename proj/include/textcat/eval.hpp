#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "textcat/types.hpp"
#include "textcat/vsm.hpp"

namespace textcat {

struct CategoryProfile;

struct TestDocVector {
    std::uint32_t new_id = 0;
    SparseVector vector;
};

// Every test document exactly once, descending similarity, ties by ascending
// new_id.
struct RankedList {
    std::string category;
    std::vector<std::pair<std::uint32_t, double>> items;  // (new_id, similarity)
};

inline constexpr std::size_t kRecallLevels = 11;

// Interpolated precision at recall 0.0, 0.1, ..., 1.0 plus its mean.
struct PrecisionCurve {
    std::array<double, kRecallLevels> precision{};
    double average = 0.0;

    static PrecisionCurve from_levels(const std::array<double, kRecallLevels>& levels);
};

RankedList rank_documents(const CategoryProfile& profile,
                          std::span<const TestDocVector> test_vectors);

// P(r) = max over cutoffs with recall >= r of precision-at-cutoff. The
// relevant set must be nonempty; callers exclude categories without test
// examples.
PrecisionCurve interpolated_precision(const RankedList& ranked,
                                      const std::unordered_set<std::uint32_t>& relevant);

// Arithmetic mean per recall level; the average is recomputed from the
// averaged levels. Requires at least one curve.
PrecisionCurve macro_average(std::span<const PrecisionCurve> curves);

struct CategoryResult {
    std::string category;
    std::uint32_t training_count = 0;  // n_k
    std::uint32_t test_count = 0;
    PrecisionCurve curve;
};

// Macro averages over {n_k < threshold}, {n_k >= threshold} and everything.
// An empty group is reported as absent.
struct FrequencyBreakdown {
    std::optional<PrecisionCurve> low;
    std::optional<PrecisionCurve> high;
    PrecisionCurve total;
    std::size_t low_count = 0;
    std::size_t high_count = 0;
};

FrequencyBreakdown frequency_breakdown(std::span<const CategoryResult> results,
                                       std::uint32_t threshold);

}  // namespace textcat
