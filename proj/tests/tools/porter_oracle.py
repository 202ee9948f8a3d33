#!/usr/bin/env python3
"""Independent reference implementation of the 1980 Porter stemming algorithm.

Used offline to cross-check the C++ stemmer and to regenerate
tests/data/porter_vectors.tsv. Deliberately written table-first, from the
algorithm definition, so that it shares no structure with the C++ code.
"""
import sys

VOWELS = set("aeiou")


def classes(word):
    """Return the c/v class string for word, handling the y rule."""
    out = []
    for i, ch in enumerate(word):
        if ch in VOWELS:
            out.append("v")
        elif ch == "y":
            out.append("v" if (i > 0 and out[i - 1] == "c") else "c")
        else:
            out.append("c")
    return "".join(out)


def measure(stem):
    cls = classes(stem)
    # collapse runs, count VC pairs
    runs = []
    for c in cls:
        if not runs or runs[-1] != c:
            runs.append(c)
    return sum(1 for i in range(len(runs) - 1) if runs[i] == "v" and runs[i + 1] == "c")


def has_vowel(stem):
    return "v" in classes(stem)


def ends_double_consonant(stem):
    return len(stem) >= 2 and stem[-1] == stem[-2] and classes(stem)[-1] == "c"


def ends_cvc(stem):
    if len(stem) < 3:
        return False
    cls = classes(stem)
    return cls[-3:] == "cvc" and stem[-1] not in "wxy"


def apply_rule_list(word, rules):
    """rules: list of (suffix, replacement, condition) tried longest-suffix-first.

    Only the longest matching suffix is considered; if its condition fails the
    whole step is a no-op.
    """
    matching = [r for r in rules if word.endswith(r[0])]
    if not matching:
        return word
    suffix, repl, cond = max(matching, key=lambda r: len(r[0]))
    stem = word[: len(word) - len(suffix)]
    if cond is None or cond(stem):
        return stem + repl
    return word


def step1a(w):
    return apply_rule_list(
        w, [("sses", "ss", None), ("ies", "i", None), ("ss", "ss", None), ("s", "", None)]
    )


def step1b(w):
    if w.endswith("eed"):
        return w[:-1] if measure(w[:-3]) > 0 else w
    stripped = None
    if w.endswith("ed") and has_vowel(w[:-2]):
        stripped = w[:-2]
    elif w.endswith("ing") and has_vowel(w[:-3]):
        stripped = w[:-3]
    if stripped is None:
        return w
    w = stripped
    if w.endswith(("at", "bl", "iz")):
        return w + "e"
    if ends_double_consonant(w) and w[-1] not in "lsz":
        return w[:-1]
    if measure(w) == 1 and ends_cvc(w):
        return w + "e"
    return w


def step1c(w):
    if w.endswith("y") and has_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


STEP2 = [
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
]

STEP3 = [
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
]

STEP4 = [
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment",
    "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
]


def step2(w):
    rules = [(s, r, lambda stem: measure(stem) > 0) for s, r in STEP2]
    return apply_rule_list(w, rules)


def step3(w):
    rules = [(s, r, lambda stem: measure(stem) > 0) for s, r in STEP3]
    return apply_rule_list(w, rules)


def step4(w):
    def cond_plain(stem):
        return measure(stem) > 1

    def cond_ion(stem):
        return measure(stem) > 1 and stem.endswith(("s", "t"))

    rules = [(s, "", cond_ion if s == "ion" else cond_plain) for s in STEP4]
    return apply_rule_list(w, rules)


def step5a(w):
    if not w.endswith("e"):
        return w
    m = measure(w[:-1])
    if m > 1 or (m == 1 and not ends_cvc(w[:-1])):
        return w[:-1]
    return w


def step5b(w):
    if w.endswith("l") and ends_double_consonant(w) and measure(w) > 1:
        return w[:-1]
    return w


def stem(word):
    if len(word) <= 2:
        return word
    for step in (step1a, step1b, step1c, step2, step3, step4, step5a, step5b):
        word = step(word)
    return word


if __name__ == "__main__":
    for line in sys.stdin:
        word = line.strip().lower()
        if word:
            print(f"{word}\t{stem(word)}")
