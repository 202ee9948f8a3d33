#include "textcat/textpipe.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <ostream>
#include <unordered_map>

#include "textcat/corpus.hpp"
#include "textcat/porter.hpp"

namespace textcat {

namespace {

inline bool is_ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char to_lower_ascii(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_ascii_alpha(c)) {
            current.push_back(to_lower_ascii(c));
        } else if (!current.empty()) {
            if (current.size() >= 2) tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (current.size() >= 2) tokens.push_back(std::move(current));
    return tokens;
}

Stoplist Stoplist::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open stoplist file: " + path);
    Stoplist list;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        list.words_.insert(line);
    }
    return list;
}

bool Stoplist::contains(std::string_view word) const {
    return words_.find(word) != words_.end();
}

std::vector<std::string> Stoplist::remove_stopwords(std::vector<std::string> tokens) const {
    std::erase_if(tokens, [this](const std::string& t) { return contains(t); });
    return tokens;
}

std::vector<std::string> Stoplist::sorted_words() const {
    std::vector<std::string> out(words_.begin(), words_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t Stoplist::content_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (const std::string& w : sorted_words()) {
        h = fnv1a(w, h);
        h = fnv1a("\n", h);
    }
    return h;
}

namespace smart_stoplist_data {
extern const char* const kWords[];
extern const std::size_t kWordCount;
}  // namespace smart_stoplist_data

const Stoplist& Stoplist::default_smart() {
    static const Stoplist list = [] {
        Stoplist l;
        for (std::size_t i = 0; i < smart_stoplist_data::kWordCount; ++i)
            l.words_.insert(smart_stoplist_data::kWords[i]);
        return l;
    }();
    return list;
}

std::optional<TermId> Vocabulary::lookup(std::string_view term) const {
    auto it = term_to_id_.find(term);
    if (it == term_to_id_.end()) return std::nullopt;
    return it->second;
}

TermId Vocabulary::intern(const std::string& term, std::uint32_t doc_freq) {
    assert(term_to_id_.find(term) == term_to_id_.end());
    TermId id = static_cast<TermId>(id_to_term_.size());
    term_to_id_.emplace(term, id);
    id_to_term_.push_back(term);
    doc_freq_.push_back(doc_freq);
    return id;
}

void Vocabulary::dump(std::ostream& os) const {
    for (TermId id = 0; id < id_to_term_.size(); ++id)
        os << id_to_term_[id] << '\t' << id << '\t' << doc_freq_[id] << '\n';
}

std::uint64_t Vocabulary::content_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (TermId id = 0; id < id_to_term_.size(); ++id) {
        h = fnv1a(id_to_term_[id], h);
        h ^= doc_freq_[id];
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<std::string> pipeline_stems(std::string_view text, const Stoplist& stoplist) {
    std::vector<std::string> stems;
    for (std::string& token : tokenize(text)) {
        if (stoplist.contains(token)) continue;
        stems.push_back(porter_stem(token));
    }
    return stems;
}

Vocabulary build_vocabulary(const std::vector<RawDocument>& training_docs,
                            const Stoplist& stoplist) {
    std::unordered_map<std::string, std::uint32_t> df;
    std::vector<std::string> seen;  // per-document scratch
    for (const RawDocument& doc : training_docs) {
        std::string text = doc.title + " " + doc.body;
        seen = pipeline_stems(text, stoplist);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (const std::string& stem : seen) ++df[stem];
    }

    std::vector<std::string> terms;
    terms.reserve(df.size());
    for (const auto& [term, _] : df) terms.push_back(term);
    std::sort(terms.begin(), terms.end());

    Vocabulary vocab;
    for (const std::string& term : terms) vocab.intern(term, df[term]);
    return vocab;
}

}  // namespace textcat
