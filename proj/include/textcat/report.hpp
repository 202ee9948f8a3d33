#pragma once

#include <span>
#include <string>

#include "textcat/pipeline.hpp"

namespace textcat {

// 11 recall rows plus an Avg. row, one column per arm.
std::string precision_table_text(std::span<const ArmResult> arms);

// Per-arm macro averages for the <threshold / >=threshold / total groups.
std::string breakdown_table_text(std::span<const ArmResult> arms, std::uint32_t threshold);

// Machine-readable results: per-category curves, aggregates, group averages.
std::string results_json(std::span<const ArmResult> arms, std::uint32_t threshold);

// Flat rows: arm,category,n_train,n_test,p0..p10,average.
std::string results_csv(std::span<const ArmResult> arms);

}  // namespace textcat
