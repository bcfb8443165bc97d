"""Porter stemmer, original 1980 algorithm.

Rules are transcribed from the published five-step suffix-stripping
algorithm (without the later maintenance-era departures: step 2 uses
``abli -> able`` and there is no ``logi`` rule). Within a step the
longest matching suffix wins; if its condition fails, no shorter suffix
from the same list is tried.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        # y is a vowel exactly when preceded by a consonant
        return True if i == 0 else not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel-consonant alternations: [C](VC)^m[V]."""
    shape = "".join("c" if _is_consonant(stem, i) else "v" for i in range(len(stem)))
    return shape.count("vc")


def _contains_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return len(word) >= 2 and word[-1] == word[-2] and _is_consonant(word, len(word) - 1)


def _ends_cvc(word: str) -> bool:
    """consonant-vowel-consonant ending where the final consonant is not w, x or y."""
    return (
        len(word) >= 3
        and _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


def _apply_first(word, rules):
    """Apply the first rule whose suffix matches; stop either way.

    Each rule is (suffix, replacement, condition-on-stem). The lists are
    ordered so that the first match is also the longest match.
    """
    for suffix, replacement, condition in rules:
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if condition is None or condition(stem):
                return stem + replacement
            return word
    return word


def _m_gt_0(stem: str) -> bool:
    return _measure(stem) > 0


def _m_gt_1(stem: str) -> bool:
    return _measure(stem) > 1


def _step1a(word: str) -> str:
    return _apply_first(
        word,
        [
            ("sses", "ss", None),
            ("ies", "i", None),
            ("ss", "ss", None),
            ("s", "", None),
        ],
    )


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        stem = word[:-3]
        return stem + "ee" if _measure(stem) > 0 else word

    stem = None
    for suffix in ("ed", "ing"):
        if word.endswith(suffix):
            candidate = word[: len(word) - len(suffix)]
            if _contains_vowel(candidate):
                stem = candidate
                break
    if stem is None:
        return word

    if stem.endswith("at"):
        return stem + "e"
    if stem.endswith("bl"):
        return stem + "e"
    if stem.endswith("iz"):
        return stem + "e"
    if _ends_double_consonant(stem) and stem[-1] not in "lsz":
        return stem[:-1]
    if _measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


def _step1c(word: str) -> str:
    return _apply_first(word, [("y", "i", _contains_vowel)])


def _step2(word: str) -> str:
    return _apply_first(
        word,
        [
            ("ational", "ate", _m_gt_0),
            ("tional", "tion", _m_gt_0),
            ("enci", "ence", _m_gt_0),
            ("anci", "ance", _m_gt_0),
            ("izer", "ize", _m_gt_0),
            ("abli", "able", _m_gt_0),
            ("alli", "al", _m_gt_0),
            ("entli", "ent", _m_gt_0),
            ("eli", "e", _m_gt_0),
            ("ousli", "ous", _m_gt_0),
            ("ization", "ize", _m_gt_0),
            ("ation", "ate", _m_gt_0),
            ("ator", "ate", _m_gt_0),
            ("alism", "al", _m_gt_0),
            ("iveness", "ive", _m_gt_0),
            ("fulness", "ful", _m_gt_0),
            ("ousness", "ous", _m_gt_0),
            ("aliti", "al", _m_gt_0),
            ("iviti", "ive", _m_gt_0),
            ("biliti", "ble", _m_gt_0),
        ],
    )


def _step3(word: str) -> str:
    return _apply_first(
        word,
        [
            ("icate", "ic", _m_gt_0),
            ("ative", "", _m_gt_0),
            ("alize", "al", _m_gt_0),
            ("iciti", "ic", _m_gt_0),
            ("ical", "ic", _m_gt_0),
            ("ful", "", _m_gt_0),
            ("ness", "", _m_gt_0),
        ],
    )


def _step4(word: str) -> str:
    return _apply_first(
        word,
        [
            ("al", "", _m_gt_1),
            ("ance", "", _m_gt_1),
            ("ence", "", _m_gt_1),
            ("er", "", _m_gt_1),
            ("ic", "", _m_gt_1),
            ("able", "", _m_gt_1),
            ("ible", "", _m_gt_1),
            ("ant", "", _m_gt_1),
            ("ement", "", _m_gt_1),
            ("ment", "", _m_gt_1),
            ("ent", "", _m_gt_1),
            ("ion", "", lambda stem: bool(stem) and stem[-1] in "st" and _measure(stem) > 1),
            ("ou", "", _m_gt_1),
            ("ism", "", _m_gt_1),
            ("ate", "", _m_gt_1),
            ("iti", "", _m_gt_1),
            ("ous", "", _m_gt_1),
            ("ive", "", _m_gt_1),
            ("ize", "", _m_gt_1),
        ],
    )


def _step5a(word: str) -> str:
    if word.endswith("e"):
        stem = word[:-1]
        m = _measure(stem)
        if m > 1:
            return stem
        if m == 1 and not _ends_cvc(stem):
            return stem
    return word


def _step5b(word: str) -> str:
    if _measure(word) > 1 and _ends_double_consonant(word) and word.endswith("l"):
        return word[:-1]
    return word


def porter_stem(word: str) -> str:
    """Stem a lowercase ASCII word; anything else is returned unchanged."""
    if not word.isascii() or not word.isalpha() or not word.islower():
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _step2(word)
    word = _step3(word)
    word = _step4(word)
    word = _step5a(word)
    word = _step5b(word)
    return word
