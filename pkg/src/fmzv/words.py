"""Exact noncommutative polynomial algebra on the two-letter alphabet {x, y}.

Words are plain Python strings over ``"x"`` and ``"y"``; the empty string is
the unit word.  Polynomials are finitely supported maps word -> integer
coefficient, with exact arbitrary-precision arithmetic throughout (every
expression this package manipulates has integer coefficients, so no
rationals and no tolerances are ever needed).

The subspace spanned by the empty word together with all words ending in
``y`` is closed under the harmonic product; words ending in ``y`` decompose
uniquely into blocks ``z_k = x^(k-1) y``, which is how words encode index
tuples (k_1, ..., k_r).
"""

from __future__ import annotations

import functools
from collections import Counter
from collections.abc import Iterable, Mapping

_LETTERS = frozenset("xy")
_SWAP = str.maketrans("xy", "yx")


def check_word(w: str) -> str:
    """Validate that ``w`` is a string over {x, y} and return it."""
    if not isinstance(w, str):
        raise TypeError(f"word must be a string, got {type(w).__name__}")
    if not _LETTERS.issuperset(w):
        bad = next(c for c in w if c not in _LETTERS)
        raise ValueError(f"word may only contain 'x' and 'y', got {bad!r} in {w!r}")
    return w


def in_h1(w: str) -> bool:
    """True if ``w`` is admissible for the harmonic product: empty or ending in y."""
    return w == "" or w.endswith("y")


def word_weight(w: str) -> int:
    return len(w)


def word_depth(w: str) -> int:
    return w.count("y")


def tau(w: str) -> str:
    """Letterwise swap x <-> y."""
    return check_word(w).translate(_SWAP)


def hoffman_dual_word(w: str) -> str:
    """Dual of a word ending in y: swap letters of everything before the final y.

    An involution on words ending in y.
    """
    check_word(w)
    if not w or not w.endswith("y"):
        raise ValueError(f"dual requires a nonempty word ending in 'y', got {w!r}")
    return w[:-1].translate(_SWAP) + "y"


def word_of_index(parts: Iterable[int]) -> str:
    """Encode an index (k_1, ..., k_r) as the word z_{k_1} ... z_{k_r}."""
    out = []
    for k in parts:
        if k < 1:
            raise ValueError(f"index parts must be >= 1, got {k}")
        out.append("x" * (k - 1) + "y")
    return "".join(out)


def index_of_word(w: str) -> tuple[int, ...]:
    """Decode a nonempty word ending in y back to its index tuple."""
    check_word(w)
    if not w or not w.endswith("y"):
        raise ValueError(f"only nonempty words ending in 'y' encode an index, got {w!r}")
    parts = []
    run = 0
    for c in w:
        if c == "x":
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return tuple(parts)


def reverse_word(w: str) -> str:
    """Reverse at the z-block level: z_{k_1} ... z_{k_r} -> z_{k_r} ... z_{k_1}."""
    return word_of_index(index_of_word(w)[::-1])


class NCPolynomial:
    """Finitely supported integer combination of words, kept with no zero terms.

    Instances are treated as immutable: every operation returns a new
    polynomial.  Term iteration and display are deterministic (words sorted
    by length, then lexicographically).
    """

    def __init__(self, terms: Mapping[str, int] | None = None):
        data: dict[str, int] = {}
        if terms:
            for w, c in terms.items():
                check_word(w)
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
                if c:
                    data[w] = c
        self.terms = data

    @classmethod
    def zero(cls) -> "NCPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NCPolynomial":
        return cls({"": 1})

    @classmethod
    def from_word(cls, w: str, coeff: int = 1) -> "NCPolynomial":
        return cls({w: coeff})

    def items(self) -> list[tuple[str, int]]:
        """Terms in deterministic order (length, then lexicographic)."""
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def support(self) -> list[str]:
        return [w for w, _ in self.items()]

    def coeff(self, w: str) -> int:
        return self.terms.get(w, 0)

    def in_h1(self) -> bool:
        return all(in_h1(w) for w in self.terms)

    def weight_range(self) -> tuple[int, int]:
        """(min, max) word length over the support; (0, 0) for the zero polynomial."""
        if not self.terms:
            return (0, 0)
        lengths = [len(w) for w in self.terms]
        return (min(lengths), max(lengths))

    def term_count(self) -> int:
        """Number of words counted with multiplicity (sum of |coefficients|)."""
        return sum(abs(c) for c in self.terms.values())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # mutable mapping inside; identity-free equality only

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            v = acc.get(w, 0) + c
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
        return _raw(acc)

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "NCPolynomial":
        return _raw({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return NCPolynomial.zero()
            return _raw({w: c * other for w, c in self.terms.items()})
        if isinstance(other, NCPolynomial):
            return concat(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            body = f"{abs(c)}*{w or '1'}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NCPolynomial<{self}>"


def _raw(data: dict[str, int]) -> NCPolynomial:
    # internal constructor skipping validation; data must already be clean
    p = NCPolynomial.__new__(NCPolynomial)
    p.terms = data
    return p


def _combine(pairs: Iterable[tuple[int, NCPolynomial]]) -> NCPolynomial:
    acc: Counter[str] = Counter()
    for coeff, poly in pairs:
        if not coeff:
            continue
        for w, c in poly.terms.items():
            acc[w] += coeff * c
    return _raw({w: c for w, c in acc.items() if c})


def concat(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    """Concatenation product, extended bilinearly."""
    acc: Counter[str] = Counter()
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            acc[w1 + w2] += c1 * c2
    return _raw({w: c for w, c in acc.items() if c})


def _split_leading_block(w: str) -> tuple[int, str]:
    # w must end in y; returns (k, rest) with w = x^(k-1) y rest
    i = w.index("y")
    return i + 1, w[i + 1 :]


@functools.lru_cache(maxsize=None)
def _harmonic_words(w1: str, w2: str) -> NCPolynomial:
    # no operand reordering: commutativity must emerge from the rules, so the
    # algebra-law tests exercise it rather than bake it in
    if not w1:
        return NCPolynomial.from_word(w2)
    if not w2:
        return NCPolynomial.from_word(w1)
    m, r1 = _split_leading_block(w1)
    n, r2 = _split_leading_block(w2)
    zm = "x" * (m - 1) + "y"
    zn = "x" * (n - 1) + "y"
    zmn = "x" * (m + n - 1) + "y"
    acc: Counter[str] = Counter()
    for prefix, rest in (
        (zm, _harmonic_words(r1, w2)),
        (zn, _harmonic_words(w1, r2)),
        (zmn, _harmonic_words(r1, r2)),
    ):
        for w, c in rest.terms.items():
            acc[prefix + w] += c
    return _raw(dict(acc))


def harmonic(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    """Harmonic (quasi-shuffle) product; operands must be supported on words
    that are empty or end in y."""
    for p in (a, b):
        if not p.in_h1():
            bad = next(w for w in p.terms if not in_h1(w))
            raise ValueError(f"harmonic operand contains inadmissible word {bad!r}")
    return _combine(
        (c1 * c2, _harmonic_words(w1, w2))
        for w1, c1 in a.terms.items()
        for w2, c2 in b.terms.items()
    )


@functools.lru_cache(maxsize=None)
def _shuffle_words(w1: str, w2: str) -> NCPolynomial:
    if not w1:
        return NCPolynomial.from_word(w2)
    if not w2:
        return NCPolynomial.from_word(w1)
    acc: Counter[str] = Counter()
    for w, c in _shuffle_words(w1[1:], w2).terms.items():
        acc[w1[0] + w] += c
    for w, c in _shuffle_words(w1, w2[1:]).terms.items():
        acc[w2[0] + w] += c
    return _raw(dict(acc))


def shuffle(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    """Shuffle (interleaving) product, extended bilinearly."""
    return _combine(
        (c1 * c2, _shuffle_words(w1, w2))
        for w1, c1 in a.terms.items()
        for w2, c2 in b.terms.items()
    )


def clear_product_caches() -> None:
    """Drop the memoized word-level product tables."""
    _harmonic_words.cache_clear()
    _shuffle_words.cache_clear()
