#!/usr/bin/env python3
"""Independent golden generator for the readability tests.

Implements the surface-statistics rules and the eight formulas from scratch
in Python, with no reference to the C++ sources. Run it to (re)compute the
expected values frozen in test_readability.cpp.
"""

import re
import sys
from pathlib import Path

EASY_WORDS_PATH = Path(__file__).resolve().parents[2] / "core/data/dale_chall_easy_words.txt"
EASY_WORDS = set(EASY_WORDS_PATH.read_text().split())

VOWELS = set("aeiouy")


def syllables(word: str) -> int:
    letters = [c.lower() for c in word if c.isalpha()]
    if not letters:
        return 1
    groups = 0
    in_group = False
    for c in letters:
        if c in VOWELS:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False
    if letters[-1] == "e":
        le_after_consonant = (
            len(letters) >= 3 and letters[-2] == "l" and letters[-3] not in VOWELS
        )
        if not le_after_consonant and groups > 0:
            groups -= 1
    return max(groups, 1)


def stats(text: str):
    # Sentences: segments closed by runs of [.!?] followed by whitespace/EOF,
    # counting only segments that contain a word.
    segments = re.split(r"[.!?]+(?=\s|$)", text)
    word_re = re.compile(r"[0-9A-Za-z'’-]+")

    def words_in(seg):
        return [w for w in word_re.findall(seg) if any(ch.isalnum() for ch in w)]

    sentence_count = sum(1 for seg in segments if words_in(seg))
    words = words_in(text)
    if words and sentence_count == 0:
        sentence_count = 1

    s = {
        "sentences": sentence_count,
        "words": len(words),
        "characters": sum(sum(ch.isalnum() for ch in w) for w in words),
        "letters": sum(sum(ch.isalpha() for ch in w) for w in words),
        "syllables": sum(syllables(w) for w in words),
        "complex_words": sum(1 for w in words if syllables(w) >= 3),
        "easy_words": sum(1 for w in words if syllables(w) <= 2),
        "long_words": sum(1 for w in words if sum(ch.isalpha() for ch in w) >= 7),
        "difficult_words": sum(1 for w in words if w.lower() not in EASY_WORDS),
    }
    return s


def scores(s):
    w, sen = s["words"], s["sentences"]
    wps = w / sen
    spw = s["syllables"] / w
    out = {}
    out["ari"] = 4.71 * (s["characters"] / w) + 0.5 * wps - 21.43
    L = 100.0 * s["letters"] / w
    S = 100.0 * sen / w
    out["coleman_liau"] = 0.0588 * L - 0.296 * S - 15.8
    out["flesch_reading"] = 206.835 - 1.015 * wps - 84.6 * spw
    out["flesch_kincaid"] = 0.39 * wps + 11.8 * spw - 15.59
    out["gunning_fog"] = 0.4 * (wps + 100.0 * s["complex_words"] / w)
    pct = 100.0 * s["difficult_words"] / w
    out["dale_chall"] = 0.1579 * pct + 0.0496 * wps + (3.6365 if pct > 5 else 0.0)
    r = (s["easy_words"] + 3.0 * s["complex_words"]) / sen
    out["linsear"] = r / 2.0 if r > 20.0 else (r - 2.0) / 2.0
    out["lix"] = wps + 100.0 * s["long_words"] / w
    return out


FIXTURES = [
    "Great pizza. So good!",
    "The waiter explained everything patiently. We ordered the grilled chicken "
    "and a wonderful chocolate cake. Unfortunately the restaurant was "
    "extraordinarily crowded! Would we return? Absolutely.",
    "Exquisite gastronomy demands considerable patience. Marvellous "
    "presentation, impeccable ingredients, memorable atmosphere.",
]


def main():
    for i, text in enumerate(FIXTURES, 1):
        s = stats(text)
        sc = scores(s)
        print(f"--- fixture {i}: {text!r}")
        print("   ", s)
        for k, v in sc.items():
            print(f"    {k:>15}: {v:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
