"""Words over the alphabet {1, 2}: lexicographic order, Lyndon words, Shirshov splits."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Tuple

from .errors import DomainError

ALPHABET = (1, 2)


class Word(tuple):
    """An immutable word over {1, 2}.

    ``Word("11212")`` and ``Word([1, 1, 2, 1, 2])`` are the same word.  Words
    hash and compare like the underlying tuple, so they can be mixed freely
    with plain tuples as dictionary keys.
    """

    def __new__(cls, letters: Iterable[int] | str = ()):
        if isinstance(letters, str):
            letters = [int(ch) for ch in letters]
        letters = tuple(letters)
        for a in letters:
            if a not in ALPHABET:
                raise DomainError(f"letter {a!r} is not in the alphabet {ALPHABET}")
        return super().__new__(cls, letters)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> Tuple[int, int]:
        return (self.count(1), self.count(2))

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __getitem__(self, item):
        out = super().__getitem__(item)
        return Word(out) if isinstance(item, slice) else out

    def __mul__(self, k: int):
        return Word(tuple(self) * k)

    def __str__(self):
        return "".join(map(str, self))

    def __repr__(self):
        return f"Word('{self}')"


def lex_less(u, v) -> bool:
    """Strict lexicographic order: proper prefixes are smaller, else first difference decides."""
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return len(u) < len(v)


def is_lyndon(u) -> bool:
    """True iff u is strictly smaller than every rotation vw of a split u = wv."""
    if len(u) == 0:
        raise DomainError("the empty word is not a candidate for the Lyndon test")
    u = tuple(u)
    return all(lex_less(u, u[i:] + u[:i]) for i in range(1, len(u)))


def shirshov(u) -> Tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as u = wv, both Lyndon, with |w| minimal."""
    u = Word(u)
    if len(u) < 2 or not is_lyndon(u):
        raise DomainError(f"shirshov needs a Lyndon word of length >= 2, got {u}")
    for i in range(1, len(u)):
        w, v = u[:i], u[i:]
        if is_lyndon(w) and is_lyndon(v):
            return w, v
    raise AssertionError(f"no Lyndon split of the Lyndon word {u}")


def standard_factorization(u) -> Tuple[Word, Word]:
    """Classical split: v is the longest proper suffix of u that is Lyndon."""
    u = Word(u)
    if len(u) < 2 or not is_lyndon(u):
        raise DomainError(f"standard_factorization needs a Lyndon word of length >= 2, got {u}")
    for i in range(1, len(u)):
        if is_lyndon(u[i:]):
            return u[:i], u[i:]
    raise AssertionError(u)


def words_of_degree(a: int, b: int) -> List[Word]:
    """All words with a ones and b twos, in descending lexicographic order."""
    if a < 0 or b < 0:
        return []
    n = a + b
    out = []
    for pos in combinations(range(n), b):
        letters = [1] * n
        for p in pos:
            letters[p] = 2
        out.append(Word(letters))
    out.sort(reverse=True)
    return out


def lyndon_words_of_degree(a: int, b: int) -> List[Word]:
    """Lyndon words with a ones and b twos, ascending in lexicographic order."""
    if (a, b) == (0, 0):
        raise DomainError("degree (0, 0) contains only the empty word")
    return sorted(w for w in words_of_degree(a, b) if is_lyndon(w))


def power_root(u) -> Tuple[Word, int]:
    """Write u = v^k with k maximal; returns (v, k)."""
    u = Word(u)
    n = len(u)
    for d in range(1, n + 1):
        if n % d == 0 and u[:d] * (n // d) == u:
            return u[:d], n // d
    raise DomainError("empty word")
