#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "textcat/types.hpp"
#include "textcat/vsm.hpp"

namespace textcat {

class Vocabulary;
class Stoplist;

// One recorded synonym for a category name, as produced by offline synset
// selection. source_word_index 0 means the synonym covers the whole phrase;
// 1..n names the phrase word it is a synonym of.
struct ExpansionEntry {
    std::string category;
    std::string category_phrase;
    std::uint32_t source_word_index = 0;
    std::string synonym_term;
};

// A (category, stem) closeness value in (0, 1].
struct ClosenessEntry {
    std::string category;
    TermId term = 0;
    double closeness = 0.0;
};

// TSV lines `category<TAB>category_phrase<TAB>source_word_index<TAB>synonym`;
// '#' starts a comment line. Throws DataError with the line number on bad
// input.
std::vector<ExpansionEntry> load_expansion_file(const std::string& path);

// 1 for a whole-phrase synonym, 1/nc for a synonym of one word of an nc-word
// phrase.
double closeness(const ExpansionEntry& entry);

// Tokenize multiword synonyms, drop stopwords, stem, drop stems not in the
// training vocabulary, and collapse duplicate (category, stem) pairs by
// maximum closeness. Output is sorted by (category, term).
std::vector<ClosenessEntry> build_closeness_table(const std::vector<ExpansionEntry>& entries,
                                                  const Stoplist& stoplist,
                                                  const Vocabulary& vocab);

// Initial category vectors for Rocchio: closeness plays the role of an
// occurrence count, so each entry weighs closeness * tw.
std::map<std::string, SparseVector> initial_vectors_rocchio(
    const std::vector<ClosenessEntry>& table, const CollectionWeights& weights);

// The same vectors scaled by 1/X for Widrow-Hoff. X must be positive.
std::map<std::string, SparseVector> initial_vectors_widrow_hoff(
    const std::map<std::string, SparseVector>& rocchio_initials, double X);

// CSV dump `category,term,closeness`.
void dump_closeness_table(const std::vector<ClosenessEntry>& table, const Vocabulary& vocab,
                          std::ostream& os);

}  // namespace textcat
