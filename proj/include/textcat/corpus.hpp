#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "textcat/types.hpp"

namespace textcat {

enum class LewisSplit { kTrain, kTest, kNotUsed };

std::string_view to_string(LewisSplit split);

// One parsed news story. Stories whose TOPICS attribute marks them as
// bypassed are folded into kNotUsed so that the split reproduces the
// 13,625/6,188 training/test partition.
struct RawDocument {
    std::uint32_t new_id = 0;
    std::optional<std::uint32_t> old_id;
    LewisSplit lewis_split = LewisSplit::kNotUsed;
    std::set<std::string> topics;  // lowercase labels
    std::string title;
    std::string body;
    std::string date;                 // opaque
    bool unknown_split_value = false;  // LEWISSPLIT was not TRAIN/TEST/NOT-USED
};

struct CorpusSplit {
    std::vector<RawDocument> training;
    std::vector<RawDocument> test;
    std::size_t discarded = 0;       // NOT-USED or bypassed
    std::size_t unknown_splits = 0;  // unrecognized LEWISSPLIT values, treated as NOT-USED
};

// Counts for one subcollection (Table-style statistics).
struct SubsetStats {
    std::size_t doc_count = 0;
    std::size_t word_occurrences = 0;
    std::size_t docs_with_topics = 0;
    std::size_t topic_occurrences = 0;

    double avg_words_per_doc() const {
        return doc_count == 0 ? 0.0 : static_cast<double>(word_occurrences) / doc_count;
    }
    double pct_with_topics() const {
        return doc_count == 0 ? 0.0 : 100.0 * static_cast<double>(docs_with_topics) / doc_count;
    }
    double avg_topics_per_doc() const {
        return doc_count == 0 ? 0.0 : static_cast<double>(topic_occurrences) / doc_count;
    }
};

struct CorpusStats {
    SubsetStats training;
    SubsetStats test;
    SubsetStats total;
};

struct ParserDiagnostics {
    // Entities passed through undecoded, recorded once per entity name.
    std::set<std::string> unknown_entities;
};

// Lenient streaming scanner for Reuters-21578-style SGML. One RawDocument per
// REUTERS element, in stream order. The four entities &amp; &lt; &gt; &quot;
// are decoded in title and body; anything else passes through literally.
// Throws ParseError on a REUTERS element without NEWID or without a closing
// tag.
std::vector<RawDocument> parse_sgml(std::string_view content,
                                    ParserDiagnostics* diagnostics = nullptr);
std::vector<RawDocument> parse_sgml_file(const std::string& path,
                                         ParserDiagnostics* diagnostics = nullptr);

// Every reut2-*.sgm file under dir, in filename order.
std::vector<RawDocument> parse_corpus_dir(const std::string& dir,
                                          ParserDiagnostics* diagnostics = nullptr);

// Writes a document back as a REUTERS element (used by fixtures and the
// round-trip tests).
void serialize_document(const RawDocument& doc, std::ostream& os);

CorpusSplit split_lewis(std::vector<RawDocument> docs);

// Word occurrences are counted after tokenization, before stoplist/stemming.
CorpusStats compute_stats(const CorpusSplit& split);

// Aligned text table of the statistics; averages are truncated the way the
// usual published tables print them.
void print_stats_table(const CorpusStats& stats, std::ostream& os);
std::string stats_to_json(const CorpusStats& stats);

}  // namespace textcat
