#!/usr/bin/env python3
"""Writes a synthetic gold corpus of Meetei Mayek words built from the
syllable grammar, one `word<TAB>syl/syl/...` entry per line.

    python3 tools/make_synthetic_gold.py > tests/data/synthetic_gold.tsv
"""
import argparse
import random

CONSONANTS = [c for c in range(0xABC0, 0xABDB) if c not in (0xABCE, 0xABCF, 0xABD1)]
VOWEL_LETTERS = [0xABCE, 0xABCF, 0xABD1]
FINALS = list(range(0xABDB, 0xABE3))
SIGNS = list(range(0xABE3, 0xABEB))
LUM = 0xABEC
APUN = 0xABED


def major(rng):
    return rng.choice(VOWEL_LETTERS) if rng.random() < 0.2 else rng.choice(CONSONANTS)


def syllable(rng, vowel_initial_ok):
    s = [major(rng) if vowel_initial_ok else rng.choice(CONSONANTS)]
    if rng.random() < 0.15:
        s += [APUN, major(rng)]
    tail = rng.randrange(5)
    if tail == 1:
        s.append(rng.choice(SIGNS))
    elif tail == 2:
        s.append(rng.choice(FINALS))
    elif tail == 3:
        s += [rng.choice(SIGNS), rng.choice(FINALS)]
    elif tail == 4:
        s += [rng.choice(SIGNS), rng.choice(VOWEL_LETTERS)]
    if rng.random() < 0.05:
        s.append(LUM)
    return s


def word(rng, max_syllables):
    syls = []
    prev_sign = False
    for _ in range(rng.randint(1, max_syllables)):
        # A bare-sign ending followed by a vowel letter reads as a semivowel coda.
        s = syllable(rng, not prev_sign)
        prev_sign = s[-1] in SIGNS
        syls.append(s)
    return syls


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=240)
    ap.add_argument("--seed", type=int, default=6000)
    ap.add_argument("--max-syllables", type=int, default=4)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    seen = set()
    print("# synthetic gold corpus: word<TAB>syllables separated by '/'")
    print(f"# generated by tools/make_synthetic_gold.py --count {args.count} --seed {args.seed}")
    while len(seen) < args.count:
        syls = word(rng, args.max_syllables)
        text = "".join(chr(c) for s in syls for c in s)
        if text in seen:
            continue
        seen.add(text)
        print(text + "\t" + "/".join("".join(chr(c) for c in s) for s in syls))


if __name__ == "__main__":
    main()
