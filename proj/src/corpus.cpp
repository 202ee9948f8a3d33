#include "textcat/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "textcat/textpipe.hpp"
#include "json.hpp"

namespace textcat {

namespace {

struct TagAttributes {
    std::string lewis_split;
    std::string topics_attr;
    std::optional<std::uint32_t> new_id;
    std::optional<std::uint32_t> old_id;
};

std::optional<std::uint32_t> parse_uint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::uint64_t value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0xFFFFFFFFull) return std::nullopt;
    }
    return static_cast<std::uint32_t>(value);
}

// Attributes of the form NAME="value" between `begin` and the closing '>'.
TagAttributes parse_reuters_attributes(std::string_view tag) {
    TagAttributes attrs;
    std::size_t pos = 0;
    while (pos < tag.size()) {
        while (pos < tag.size() && std::isspace(static_cast<unsigned char>(tag[pos]))) ++pos;
        std::size_t name_start = pos;
        while (pos < tag.size() && tag[pos] != '=' &&
               !std::isspace(static_cast<unsigned char>(tag[pos])))
            ++pos;
        std::string_view name = tag.substr(name_start, pos - name_start);
        while (pos < tag.size() && std::isspace(static_cast<unsigned char>(tag[pos]))) ++pos;
        if (pos >= tag.size() || tag[pos] != '=') continue;
        ++pos;
        while (pos < tag.size() && std::isspace(static_cast<unsigned char>(tag[pos]))) ++pos;
        if (pos >= tag.size() || tag[pos] != '"') continue;
        std::size_t value_start = ++pos;
        while (pos < tag.size() && tag[pos] != '"') ++pos;
        std::string_view value = tag.substr(value_start, pos - value_start);
        if (pos < tag.size()) ++pos;  // closing quote

        if (name == "LEWISSPLIT")
            attrs.lewis_split = std::string(value);
        else if (name == "TOPICS")
            attrs.topics_attr = std::string(value);
        else if (name == "NEWID")
            attrs.new_id = parse_uint(value);
        else if (name == "OLDID")
            attrs.old_id = parse_uint(value);
    }
    return attrs;
}

// Inner text of the first ELEMENT in region, or nullopt. The element is
// assumed not to nest within itself (true for this format).
std::optional<std::string_view> element_content(std::string_view region, std::string_view name) {
    std::string open = "<" + std::string(name);
    std::size_t start = 0;
    while (true) {
        std::size_t pos = region.find(open, start);
        if (pos == std::string_view::npos) return std::nullopt;
        std::size_t after = pos + open.size();
        // reject partial matches like <TEXTFOO when looking for <TEXT
        if (after < region.size() && region[after] != '>' && region[after] != ' ' &&
            region[after] != '\t' && region[after] != '\n' && region[after] != '\r') {
            start = after;
            continue;
        }
        std::size_t tag_end = region.find('>', after);
        if (tag_end == std::string_view::npos) return std::nullopt;
        std::string close = "</" + std::string(name) + ">";
        std::size_t close_pos = region.find(close, tag_end + 1);
        if (close_pos == std::string_view::npos)
            return region.substr(tag_end + 1);  // lenient: run to end of region
        return region.substr(tag_end + 1, close_pos - tag_end - 1);
    }
}

// Drop anything between '<' and '>' but keep the text in between.
std::string strip_tags(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_tag = false;
    for (char c : text) {
        if (c == '<')
            in_tag = true;
        else if (c == '>')
            in_tag = false;
        else if (!in_tag)
            out.push_back(c);
    }
    return out;
}

std::string decode_entities(std::string_view text, ParserDiagnostics* diagnostics) {
    static constexpr std::array<std::pair<std::string_view, char>, 4> kKnown = {{
        {"amp", '&'},
        {"lt", '<'},
        {"gt", '>'},
        {"quot", '"'},
    }};
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out.push_back(text[i++]);
            continue;
        }
        std::size_t semi = text.find(';', i + 1);
        // entity names in this corpus are short; anything else is a bare '&'
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(text[i++]);
            continue;
        }
        std::string_view name = text.substr(i + 1, semi - i - 1);
        bool decoded = false;
        for (const auto& [known, ch] : kKnown) {
            if (name == known) {
                out.push_back(ch);
                decoded = true;
                break;
            }
        }
        if (!decoded) {
            if (diagnostics) diagnostics->unknown_entities.insert(std::string(name));
            out.append(text.substr(i, semi - i + 1));
        }
        i = semi + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::set<std::string> parse_topics(std::string_view topics_region) {
    std::set<std::string> topics;
    std::size_t pos = 0;
    while (true) {
        std::size_t open = topics_region.find("<D>", pos);
        if (open == std::string_view::npos) break;
        std::size_t close = topics_region.find("</D>", open + 3);
        if (close == std::string_view::npos) break;
        std::string label = to_lower(trim(topics_region.substr(open + 3, close - open - 3)));
        if (!label.empty()) topics.insert(label);
        pos = close + 4;
    }
    return topics;
}

void encode_entities(std::string_view text, std::ostream& os) {
    for (char c : text) {
        switch (c) {
            case '&': os << "&amp;"; break;
            case '<': os << "&lt;"; break;
            case '>': os << "&gt;"; break;
            case '"': os << "&quot;"; break;
            default: os << c;
        }
    }
}

}  // namespace

std::string_view to_string(LewisSplit split) {
    switch (split) {
        case LewisSplit::kTrain: return "TRAIN";
        case LewisSplit::kTest: return "TEST";
        case LewisSplit::kNotUsed: return "NOT-USED";
    }
    return "NOT-USED";
}

std::vector<RawDocument> parse_sgml(std::string_view content, ParserDiagnostics* diagnostics) {
    std::vector<RawDocument> docs;
    std::size_t pos = 0;
    while (true) {
        std::size_t open = content.find("<REUTERS", pos);
        if (open == std::string_view::npos) break;
        std::size_t tag_end = content.find('>', open);
        if (tag_end == std::string_view::npos)
            throw ParseError("unterminated REUTERS start tag", open, docs.size());

        TagAttributes attrs =
            parse_reuters_attributes(content.substr(open + 8, tag_end - open - 8));
        if (!attrs.new_id)
            throw ParseError("REUTERS element missing NEWID", open, docs.size());

        std::size_t close = content.find("</REUTERS>", tag_end);
        if (close == std::string_view::npos)
            throw ParseError("unclosed REUTERS element", open, docs.size());
        std::string_view inner = content.substr(tag_end + 1, close - tag_end - 1);

        RawDocument doc;
        doc.new_id = *attrs.new_id;
        doc.old_id = attrs.old_id;
        if (attrs.topics_attr == "BYPASS") {
            // bypassed stories are excluded from the 13,625/6,188 partition
            doc.lewis_split = LewisSplit::kNotUsed;
        } else if (attrs.lewis_split == "TRAIN") {
            doc.lewis_split = LewisSplit::kTrain;
        } else if (attrs.lewis_split == "TEST") {
            doc.lewis_split = LewisSplit::kTest;
        } else {
            doc.lewis_split = LewisSplit::kNotUsed;
            doc.unknown_split_value = attrs.lewis_split != "NOT-USED";
        }

        if (auto date = element_content(inner, "DATE")) doc.date = trim(*date);
        if (auto topics = element_content(inner, "TOPICS")) doc.topics = parse_topics(*topics);
        if (auto text = element_content(inner, "TEXT")) {
            if (auto title = element_content(*text, "TITLE"))
                doc.title = decode_entities(strip_tags(*title), diagnostics);
            if (auto body = element_content(*text, "BODY"))
                doc.body = decode_entities(strip_tags(*body), diagnostics);
        }

        docs.push_back(std::move(doc));
        pos = close + 10;
    }
    return docs;
}

std::vector<RawDocument> parse_sgml_file(const std::string& path,
                                         ParserDiagnostics* diagnostics) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_sgml(buffer.str(), diagnostics);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.byte_offset, e.docs_parsed);
    }
}

std::vector<RawDocument> parse_corpus_dir(const std::string& dir,
                                          ParserDiagnostics* diagnostics) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw DataError("corpus directory not found: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.size() > 4 && name.substr(name.size() - 4) == ".sgm") files.push_back(name);
    }
    if (files.empty()) throw DataError("no .sgm files under " + dir);
    std::sort(files.begin(), files.end());

    std::vector<RawDocument> docs;
    for (const std::string& name : files) {
        std::vector<RawDocument> parsed = parse_sgml_file(dir + "/" + name, diagnostics);
        docs.insert(docs.end(), std::make_move_iterator(parsed.begin()),
                    std::make_move_iterator(parsed.end()));
    }
    return docs;
}

void serialize_document(const RawDocument& doc, std::ostream& os) {
    os << "<REUTERS TOPICS=\"" << (doc.topics.empty() ? "NO" : "YES") << "\" LEWISSPLIT=\""
       << to_string(doc.lewis_split) << "\"";
    if (doc.old_id) os << " OLDID=\"" << *doc.old_id << "\"";
    os << " NEWID=\"" << doc.new_id << "\">\n";
    if (!doc.date.empty()) os << "<DATE>" << doc.date << "</DATE>\n";
    os << "<TOPICS>";
    for (const std::string& topic : doc.topics) os << "<D>" << topic << "</D>";
    os << "</TOPICS>\n<TEXT>\n<TITLE>";
    encode_entities(doc.title, os);
    os << "</TITLE>\n<BODY>";
    encode_entities(doc.body, os);
    os << "</BODY>\n</TEXT>\n</REUTERS>\n";
}

CorpusSplit split_lewis(std::vector<RawDocument> docs) {
    CorpusSplit split;
    for (RawDocument& doc : docs) {
        if (doc.unknown_split_value) ++split.unknown_splits;
        switch (doc.lewis_split) {
            case LewisSplit::kTrain: split.training.push_back(std::move(doc)); break;
            case LewisSplit::kTest: split.test.push_back(std::move(doc)); break;
            case LewisSplit::kNotUsed: ++split.discarded; break;
        }
    }
    return split;
}

namespace {

SubsetStats subset_stats(const std::vector<RawDocument>& docs) {
    SubsetStats stats;
    stats.doc_count = docs.size();
    for (const RawDocument& doc : docs) {
        stats.word_occurrences += tokenize(doc.title + " " + doc.body).size();
        if (!doc.topics.empty()) ++stats.docs_with_topics;
        stats.topic_occurrences += doc.topics.size();
    }
    return stats;
}

SubsetStats add(const SubsetStats& a, const SubsetStats& b) {
    SubsetStats sum;
    sum.doc_count = a.doc_count + b.doc_count;
    sum.word_occurrences = a.word_occurrences + b.word_occurrences;
    sum.docs_with_topics = a.docs_with_topics + b.docs_with_topics;
    sum.topic_occurrences = a.topic_occurrences + b.topic_occurrences;
    return sum;
}

}  // namespace

CorpusStats compute_stats(const CorpusSplit& split) {
    CorpusStats stats;
    stats.training = subset_stats(split.training);
    stats.test = subset_stats(split.test);
    stats.total = add(stats.training, stats.test);
    return stats;
}

void print_stats_table(const CorpusStats& stats, std::ostream& os) {
    auto row = [&os](const char* group, const char* what, std::size_t a, std::size_t b,
                     std::size_t c) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-22s %-12s %12zu %12zu %12zu\n", group, what, a, b,
                      c);
        os << line;
    };
    char header[160];
    std::snprintf(header, sizeof(header), "%-22s %-12s %12s %12s %12s\n", "", "", "Training",
                  "Test", "Total");
    os << header;
    row("Docs.", "Number", stats.training.doc_count, stats.test.doc_count,
        stats.total.doc_count);
    row("Words", "Occurrences", stats.training.word_occurrences, stats.test.word_occurrences,
        stats.total.word_occurrences);
    // published tables print these averages truncated, not rounded
    row("", "Doc. average", static_cast<std::size_t>(stats.training.avg_words_per_doc()),
        static_cast<std::size_t>(stats.test.avg_words_per_doc()),
        static_cast<std::size_t>(stats.total.avg_words_per_doc()));
    row("Docs. with 1+ Topics", "Number", stats.training.docs_with_topics,
        stats.test.docs_with_topics, stats.total.docs_with_topics);
    row("", "Percentage", static_cast<std::size_t>(stats.training.pct_with_topics()),
        static_cast<std::size_t>(stats.test.pct_with_topics()),
        static_cast<std::size_t>(stats.total.pct_with_topics()));
    row("Topics", "Occurrences", stats.training.topic_occurrences, stats.test.topic_occurrences,
        stats.total.topic_occurrences);
    char avg[160];
    std::snprintf(avg, sizeof(avg), "%-22s %-12s %12.2f %12.2f %12.2f\n", "", "Doc. average",
                  std::floor(stats.training.avg_topics_per_doc() * 100) / 100,
                  std::floor(stats.test.avg_topics_per_doc() * 100) / 100,
                  std::floor(stats.total.avg_topics_per_doc() * 100) / 100);
    os << avg;
}

std::string stats_to_json(const CorpusStats& stats) {
    auto subset = [](const SubsetStats& s) {
        nlohmann::ordered_json j;
        j["doc_count"] = s.doc_count;
        j["word_occurrences"] = s.word_occurrences;
        j["avg_words_per_doc"] = s.avg_words_per_doc();
        j["docs_with_topics"] = s.docs_with_topics;
        j["pct_with_topics"] = s.pct_with_topics();
        j["topic_occurrences"] = s.topic_occurrences;
        j["avg_topics_per_doc"] = s.avg_topics_per_doc();
        return j;
    };
    nlohmann::ordered_json j;
    j["training"] = subset(stats.training);
    j["test"] = subset(stats.test);
    j["total"] = subset(stats.total);
    return j.dump(2) + "\n";
}

}  // namespace textcat
