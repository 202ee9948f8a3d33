#include "textcat/porter.hpp"

#include <algorithm>
#include <array>
#include <cstddef>

namespace textcat {

namespace {

// A letter is a consonant unless it is a/e/i/o/u, or a 'y' preceded by a
// consonant. Word-initial 'y' counts as a consonant.
bool is_cons(const std::string& w, std::size_t i) {
    switch (w[i]) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_cons(w, i - 1);
        default:
            return true;
    }
}

// m in the [C](VC)^m[V] decomposition of w[0..len).
int measure(const std::string& w, std::size_t len) {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_cons(w, i)) ++i;  // optional leading C run
    while (i < len) {
        while (i < len && !is_cons(w, i)) ++i;  // V run
        if (i == len) break;
        while (i < len && is_cons(w, i)) ++i;  // C run
        ++m;
    }
    return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_cons(w, i)) return true;
    return false;
}

// *d: w[0..len) ends with a double consonant.
bool ends_double_cons(const std::string& w, std::size_t len) {
    return len >= 2 && w[len - 1] == w[len - 2] && is_cons(w, len - 1);
}

// *o: w[0..len) ends consonant-vowel-consonant where the final consonant is
// not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_cons(w, len - 3) || is_cons(w, len - 2) || !is_cons(w, len - 1)) return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Within a step only one rule fires: the one whose suffix is the longest
// match. If that rule's condition fails, the step does nothing.
const Rule* longest_match(const std::string& w, const Rule* rules, std::size_t count) {
    const Rule* best = nullptr;
    for (std::size_t i = 0; i < count; ++i) {
        const Rule& r = rules[i];
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    }
    return best;
}

void replace_suffix(std::string& w, const Rule& r) {
    w.resize(w.size() - r.suffix.size());
    w.append(r.replacement);
}

// SSES -> SS, IES -> I, SS -> SS, S -> ""
void step1a(std::string& w) {
    static constexpr Rule rules[] = {{"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"s", ""}};
    if (const Rule* r = longest_match(w, rules, 4)) replace_suffix(w, *r);
}

// (m>0) EED -> EE; (*v*) ED -> ""; (*v*) ING -> ""; plus the tidy-up rules
// that restore an E or undouble a consonant after ED/ING removal.
void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.pop_back();
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_cons(w, w.size())) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

// (*v*) Y -> I
void step1c(std::string& w) {
    if (w.back() == 'y' && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

void step2(std::string& w) {
    static constexpr Rule rules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
    };
    if (const Rule* r = longest_match(w, rules, std::size(rules)))
        if (measure(w, w.size() - r->suffix.size()) > 0) replace_suffix(w, *r);
}

void step3(std::string& w) {
    static constexpr Rule rules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    };
    if (const Rule* r = longest_match(w, rules, std::size(rules)))
        if (measure(w, w.size() - r->suffix.size()) > 0) replace_suffix(w, *r);
}

void step4(std::string& w) {
    static constexpr Rule rules[] = {
        {"al", ""},  {"ance", ""}, {"ence", ""}, {"er", ""},    {"ic", ""},
        {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
        {"ent", ""}, {"ion", ""},  {"ou", ""},   {"ism", ""},   {"ate", ""},
        {"iti", ""}, {"ous", ""},  {"ive", ""},  {"ize", ""},
    };
    const Rule* r = longest_match(w, rules, std::size(rules));
    if (!r) return;
    std::size_t stem = w.size() - r->suffix.size();
    if (measure(w, stem) <= 1) return;
    if (r->suffix == "ion" && !(stem >= 1 && (w[stem - 1] == 's' || w[stem - 1] == 't'))) return;
    replace_suffix(w, *r);
}

// (m>1) E -> ""; (m=1 and not *o) E -> ""
void step5a(std::string& w) {
    if (w.back() != 'e') return;
    int m = measure(w, w.size() - 1);
    if (m > 1 || (m == 1 && !ends_cvc(w, w.size() - 1))) w.pop_back();
}

// (m>1 and *d and *L) -> single letter
void step5b(std::string& w) {
    if (w.back() == 'l' && ends_double_cons(w, w.size()) && measure(w, w.size()) > 1)
        w.pop_back();
}

}  // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    step1a(w);
    if (!w.empty()) step1b(w);
    if (!w.empty()) step1c(w);
    if (!w.empty()) step2(w);
    if (!w.empty()) step3(w);
    if (!w.empty()) step4(w);
    if (!w.empty()) step5a(w);
    if (!w.empty()) step5b(w);
    return w;
}

}  // namespace textcat
