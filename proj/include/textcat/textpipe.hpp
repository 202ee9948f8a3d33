#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textcat/types.hpp"

namespace textcat {

struct RawDocument;

// Lowercase maximal runs of ASCII letters; digits and punctuation separate.
// Single-letter tokens are dropped.
std::vector<std::string> tokenize(std::string_view text);

class Stoplist {
public:
    Stoplist() = default;

    // One lowercase word per line, '#' starts a comment line.
    static Stoplist from_file(const std::string& path);
    // The bundled 571-word SMART list.
    static const Stoplist& default_smart();

    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }

    // Order-preserving removal of stoplist members.
    std::vector<std::string> remove_stopwords(std::vector<std::string> tokens) const;

    // FNV-1a over the sorted word list; used to detect model/stoplist drift.
    std::uint64_t content_hash() const;

    std::vector<std::string> sorted_words() const;

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::unordered_set<std::string, StringHash, std::equal_to<>> words_;
};

// Bidirectional stem <-> TermId map with per-term training document
// frequency (the number of distinct training documents containing the stem).
class Vocabulary {
public:
    std::size_t size() const { return id_to_term_.size(); }

    std::optional<TermId> lookup(std::string_view term) const;
    const std::string& term(TermId id) const { return id_to_term_[id]; }
    std::uint32_t doc_freq(TermId id) const { return doc_freq_[id]; }

    TermId intern(const std::string& term, std::uint32_t doc_freq);

    // Lines of `term<TAB>id<TAB>doc_freq`.
    void dump(std::ostream& os) const;

    std::uint64_t content_hash() const;

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::unordered_map<std::string, TermId, StringHash, std::equal_to<>> term_to_id_;
    std::vector<std::string> id_to_term_;
    std::vector<std::uint32_t> doc_freq_;
};

// tokenize -> remove stopwords -> stem, i.e. the indexing pipeline for one
// piece of text.
std::vector<std::string> pipeline_stems(std::string_view text, const Stoplist& stoplist);

// Registers every stem occurring in at least one training document; doc_freq
// counts distinct documents. Term ids are assigned in lexicographic stem
// order, which makes the whole vocabulary invariant to document order.
Vocabulary build_vocabulary(const std::vector<RawDocument>& training_docs,
                            const Stoplist& stoplist);

}  // namespace textcat
