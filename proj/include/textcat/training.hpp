#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "textcat/types.hpp"
#include "textcat/vsm.hpp"

namespace textcat {

enum class Algorithm { kRocchio, kWidrowHoff };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

struct TrainingParams {
    double alpha = 20.0;
    double beta = 16.0;
    double gamma = 4.0;
    // Learning rate; when unset it is resolved to 1 / (4 * X^2) with X the
    // maximum training document norm.
    std::optional<double> eta;
};

struct CategoryProfile {
    std::string category;
    SparseVector vector;
    std::uint32_t positive_count = 0;  // n_k
};

// w_i = alpha*w0_i + beta*mean(positives_i) - gamma*mean(negatives_i), with
// empty means taken as 0, then negative components clipped to 0.
SparseVector rocchio(const SparseVector& initial, std::span<const SparseVector* const> positives,
                     std::span<const SparseVector* const> negatives, const TrainingParams& params);

// One sequential pass: w <- w - 2*eta*(wd.w - y)*wd per document, in the
// given order. No clipping; negative components are kept. Throws
// DivergenceError if an update produces a non-finite value.
SparseVector widrow_hoff(const SparseVector& initial,
                         std::span<const SparseVector* const> training_seq,
                         std::span<const std::uint8_t> labels, double eta);

// One profile per category label, including categories with no positive
// documents; a missing initial counts as the zero vector. `memberships` maps
// label -> sorted positive doc indexes into training_vectors.
std::vector<CategoryProfile> train_all(
    std::span<const SparseVector> training_vectors,
    const std::map<std::string, std::vector<std::uint32_t>>& memberships,
    const std::vector<std::string>& categories,
    const std::map<std::string, SparseVector>& initials, Algorithm algorithm,
    const TrainingParams& params, double eta);

}  // namespace textcat
