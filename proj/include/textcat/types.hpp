#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace textcat {

// Dense identifier assigned to a stemmed term by the Vocabulary.
using TermId = std::uint32_t;

// Stage-tagged failures. The CLI maps these onto exit codes:
// ConfigError -> 1 (usage), DataError -> 2, everything else -> 3.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input stream; remembers where scanning stopped and how many
// documents had already been produced.
class ParseError : public DataError {
public:
    ParseError(const std::string& msg, std::size_t byte_offset, std::size_t docs_parsed)
        : DataError(msg + " (byte " + std::to_string(byte_offset) + ", after " +
                    std::to_string(docs_parsed) + " documents)"),
          byte_offset(byte_offset),
          docs_parsed(docs_parsed) {}

    std::size_t byte_offset;
    std::size_t docs_parsed;
};

// Widrow-Hoff update produced a non-finite component.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " at training step " + std::to_string(step)), step(step) {}

    std::size_t step;
};

}  // namespace textcat
