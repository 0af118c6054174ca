"""Word combinatorics: the lexicographic order, Lyndon-Shirshov words and
their bracketings, partially commutative LS (PCLS) words, multidegrees.

Words are tuples of generator indices.  The order on words compares letters
from the left according to a `GeneratorOrder`; a proper prefix of a word is
*greater* than the word itself (the empty word dominates everything).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import OrderMismatchError, WordError
from .graph import CommutationGraph, adjacent_to_all

Word = tuple


class GeneratorOrder:
    """A linear order on the generators, given as names highest first.

    ``GeneratorOrder(("x", "y", "z"), (0, 1, 2))`` means x > y > z, where the
    second argument lists canonical indices from the greatest letter down.
    """

    __slots__ = ("names", "letters", "rank", "_hash")

    def __init__(self, names: Sequence[str], letters: Sequence[int]):
        names, letters = tuple(names), tuple(letters)
        if sorted(letters) != list(range(len(names))):
            raise OrderMismatchError(
                f"order {letters} is not a permutation of {len(names)} generators")
        self.names = names
        self.letters = letters
        rank = [0] * len(names)
        for pos, i in enumerate(letters):
            rank[i] = len(names) - 1 - pos
        self.rank = tuple(rank)
        self._hash = hash((names, letters))

    @classmethod
    def canonical(cls, names) -> "GeneratorOrder":
        """Declaration order: first declared generator is the greatest."""
        names = tuple(names)
        return cls(names, range(len(names)))

    @classmethod
    def from_names(cls, names, highest_first) -> "GeneratorOrder":
        names = tuple(names)
        index = {n: i for i, n in enumerate(names)}
        try:
            letters = [index[n] for n in highest_first]
        except KeyError as exc:
            from .errors import UnknownGeneratorError
            raise UnknownGeneratorError(exc.args[0]) from None
        return cls(names, letters)

    @classmethod
    def for_graph(cls, G: CommutationGraph, highest_first=None) -> "GeneratorOrder":
        if highest_first is None:
            return cls.canonical(G.names)
        return cls.from_names(G.names, highest_first)

    def restrict(self, names) -> "GeneratorOrder":
        """The induced order on a subset of generators (given by name)."""
        keep = set(names)
        sub_names = tuple(n for n in self.names if n in keep)
        highest = [self.names[i] for i in self.letters if self.names[i] in keep]
        return GeneratorOrder.from_names(sub_names, highest)

    def key(self, word: Word) -> tuple:
        """Sort key realising the word order with ordinary tuple comparison."""
        rank = self.rank
        return tuple(rank[c] for c in word) + (len(rank),)

    def check_graph(self, G: CommutationGraph):
        if G.names != self.names:
            raise OrderMismatchError(
                f"order is over {list(self.names)}, graph over {list(G.names)}")

    def __eq__(self, other):
        return (isinstance(other, GeneratorOrder) and self.names == other.names
                and self.letters == other.letters)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "GeneratorOrder(" + ">".join(self.names[i] for i in self.letters) + ")"


class Monomial:
    """A Lie monomial: a leaf generator or a bracket of two monomials.

    Monomials are order independent and compare structurally.  ``word`` is the
    flattened word, ``first`` its first letter.
    """

    __slots__ = ("left", "right", "letter", "word", "_tree", "_hash")

    def __init__(self, letter=None, left=None, right=None):
        if letter is not None:
            self.letter = letter
            self.left = self.right = None
            self.word = (letter,)
            self._tree = letter
        else:
            self.letter = None
            self.left, self.right = left, right
            self.word = left.word + right.word
            self._tree = (left._tree, right._tree)
        self._hash = hash(self._tree)

    @property
    def is_leaf(self) -> bool:
        return self.letter is not None

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def first(self) -> int:
        return self.word[0]

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._tree == other._tree

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self._tree!r})"

    def format(self, names) -> str:
        if self.is_leaf:
            return names[self.letter]
        return f"[{self.left.format(names)},{self.right.format(names)}]"

    def relabel(self, mapping) -> "Monomial":
        if self.is_leaf:
            return leaf(mapping[self.letter])
        return pair(self.left.relabel(mapping), self.right.relabel(mapping))


@lru_cache(maxsize=None)
def leaf(i: int) -> Monomial:
    return Monomial(letter=i)


def pair(left: Monomial, right: Monomial) -> Monomial:
    return Monomial(left=left, right=right)


def compare_words(O: GeneratorOrder, u: Word, v: Word) -> int:
    """-1, 0 or 1 as u <, =, > v."""
    ku, kv = O.key(u), O.key(v)
    return (ku > kv) - (ku < kv)


@lru_cache(maxsize=None)
def is_lsa(O: GeneratorOrder, u: Word) -> bool:
    if not u:
        raise WordError("the empty word is not a Lyndon-Shirshov word")
    ku = O.key(u)
    return all(O.key(u[i:] + u[:i]) < ku for i in range(1, len(u)))


@lru_cache(maxsize=None)
def bracket_word(O: GeneratorOrder, u: Word) -> Monomial:
    """The LS bracketing of an LSA word.

    The right factor is the greatest proper suffix of `u` that is itself LSA;
    both factors are bracketed recursively.
    """
    u = tuple(u)
    if not u or not is_lsa(O, u):
        raise WordError(f"{u!r} is not an LSA word")
    if len(u) == 1:
        return leaf(u[0])
    split = max((i for i in range(1, len(u)) if is_lsa(O, u[i:])),
                key=lambda i: O.key(u[i:]))
    m = pair(bracket_word(O, u[:split]), bracket_word(O, u[split:]))
    if __debug__ and not is_ls(O, m):
        raise AssertionError(f"bracketing of {u!r} is not LS")
    return m


@lru_cache(maxsize=None)
def is_ls(O: GeneratorOrder, m: Monomial) -> bool:
    if not is_lsa(O, m.word):
        return False
    if m.is_leaf:
        return True
    left, right = m.left, m.right
    if not (is_ls(O, left) and is_ls(O, right)):
        return False
    if not O.key(left.word) > O.key(right.word):
        return False
    if not left.is_leaf and O.key(right.word) < O.key(left.right.word):
        return False
    return True


def support(m: Monomial) -> frozenset:
    return frozenset(m.word)


def multidegree(m: Monomial, n: int) -> tuple:
    counts = [0] * n
    for c in m.word:
        counts[c] += 1
    return tuple(counts)


def is_pcls(O: GeneratorOrder, G: CommutationGraph, m: Monomial) -> bool:
    return _is_pcls(O, G, m)


@lru_cache(maxsize=None)
def _is_pcls(O, G, m):
    if m.is_leaf:
        return True
    if not is_ls(O, m):
        return False
    if not (_is_pcls(O, G, m.left) and _is_pcls(O, G, m.right)):
        return False
    return not adjacent_to_all(G, m.right.first, support(m.left))


@lru_cache(maxsize=None)
def lsa_words(O: GeneratorOrder, n: int) -> tuple:
    """All LSA words of length n, descending."""
    words = [w for w in product(range(len(O.names)), repeat=n) if is_lsa(O, w)]
    words.sort(key=O.key, reverse=True)
    return tuple(words)


def ls_monomials(O: GeneratorOrder, n: int) -> tuple:
    """LS basis of the free Lie algebra in degree n, descending."""
    return tuple(bracket_word(O, w) for w in lsa_words(O, n))


def enumerate_pcls(O: GeneratorOrder, G: CommutationGraph, dmax: int) -> dict:
    """PCLS monomials by degree ``1..dmax``, each list descending by word."""
    if dmax < 1:
        raise WordError("degree bound must be positive")
    O.check_graph(G)
    return {n: [m for m in ls_monomials(O, n) if _is_pcls(O, G, m)]
            for n in range(1, dmax + 1)}


def compare_multidegree(priority: Sequence[int], d1: Sequence[int], d2: Sequence[int]) -> int:
    """Compare multidegrees: listed generators first (in the given order),
    then the rest in canonical order."""
    if len(d1) != len(d2):
        raise ValueError(f"multidegree length mismatch: {len(d1)} vs {len(d2)}")
    if len(set(priority)) != len(priority):
        raise ValueError("priority generators must be distinct")
    rest = [i for i in range(len(d1)) if i not in set(priority)]
    for i in list(priority) + rest:
        if d1[i] != d2[i]:
            return 1 if d1[i] > d2[i] else -1
    return 0
