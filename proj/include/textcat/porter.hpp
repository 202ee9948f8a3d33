#pragma once

#include <string>
#include <string_view>

namespace textcat {

// Porter suffix-stripping stemmer, 1980 definition (the original five-step
// algorithm, including the ABLI -> ABLE rule that later revisions dropped).
// Expects a lowercase alphabetic token; words of length <= 2 are returned
// unchanged, as in the reference implementation.
std::string porter_stem(std::string_view word);

}  // namespace textcat
