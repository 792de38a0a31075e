"""The tensor (word) algebra on integer letters: shuffle, the two stuffle
sign conventions, deconcatenation, and the exp/log isomorphism between the
shuffle and quasi-shuffle Hopf algebras.

A letter is a plain int: the exponent a of one nested-sum slot (the zeta
argument it denotes is -a). The bullet product of two letters adds their
values; in the weak ("-") convention every binary merge also flips the sign
of the coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .combinat import compositions, quasi_shuffles, shuffles
from .exactnum import as_rational

Word = tuple  # tuple of int letters; () is the unit word


def word_str(w) -> str:
    """Canonical form "a1,a2,...,ak" used by the CLI; the unit word is ""."""
    return ",".join(str(a) for a in w)


def parse_word(s: str) -> Word:
    s = s.strip()
    if not s:
        return ()
    return tuple(int(part) for part in s.split(","))


class TensorPoly:
    """Finite formal Q-linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Word, Fraction] = {}
        if terms:
            for w, c in dict(terms).items():
                c = as_rational(c)
                if c != 0:
                    data[tuple(w)] = c
        self.terms = data

    @classmethod
    def from_word(cls, w, coeff=1) -> "TensorPoly":
        return cls({tuple(w): coeff})

    @classmethod
    def zero(cls) -> "TensorPoly":
        return cls()

    @classmethod
    def unit(cls) -> "TensorPoly":
        return cls({(): 1})

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return TensorPoly(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        q = as_rational(scalar)
        return TensorPoly({w: c * q for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def apply(self, fn):
        """Linear extension of a word-level valuation: sum of c * fn(word)."""
        total = Fraction(0)
        for w, c in sorted(self.terms.items()):
            total += c * fn(w)
        return total

    def map_words(self, fn) -> "TensorPoly":
        """Linear extension of a word -> TensorPoly map."""
        out = TensorPoly.zero()
        for w, c in sorted(self.terms.items()):
            out = out + c * fn(w)
        return out

    def __repr__(self):
        if not self.terms:
            return "TensorPoly(0)"
        bits = [f"{c}*({word_str(w) or '1'})" for w, c in sorted(self.terms.items())]
        return "TensorPoly(" + " + ".join(bits) + ")"


def shuffle(u, w) -> TensorPoly:
    """Shuffle product of two words: the sum of all interleavings.

    >>> sorted(shuffle((1,), (2,)).terms.items())
    [((1, 2), Fraction(1, 1)), ((2, 1), Fraction(1, 1))]
    """
    u, w = tuple(u), tuple(w)
    if not u:
        return TensorPoly.from_word(w)
    if not w:
        return TensorPoly.from_word(u)
    out: dict[Word, Fraction] = {}
    for pattern in shuffles(len(u), len(w)):
        it_u, it_w = iter(u), iter(w)
        word = tuple(next(it_u) if side == 0 else next(it_w) for side in pattern)
        out[word] = out.get(word, Fraction(0)) + 1
    return TensorPoly(out)


def shuffle_poly(s: TensorPoly, t: TensorPoly) -> TensorPoly:
    """Bilinear extension of the shuffle product."""
    out = TensorPoly.zero()
    for u, cu in sorted(s.terms.items()):
        for w, cw in sorted(t.terms.items()):
            out = out + (cu * cw) * shuffle(u, w)
    return out


def stuffle(u, w, sign_mode: str = "strict") -> TensorPoly:
    """Stuffle (quasi-shuffle) product: interleavings plus merges, merged
    letters adding their values. In ``weak`` mode every type-r term carries
    the sign (-1)**r.

    >>> sorted(stuffle((1,), (2,)).terms)
    [(1, 2), (2, 1), (3,)]
    """
    if sign_mode not in ("strict", "weak"):
        raise ValueError("sign_mode must be 'strict' or 'weak'")
    u, w = tuple(u), tuple(w)
    if not u:
        return TensorPoly.from_word(w)
    if not w:
        return TensorPoly.from_word(u)
    letters = u + w
    out: dict[Word, Fraction] = {}
    for qs in quasi_shuffles(len(u), len(w)):
        merged = [0] * qs.target_size
        for pos, target in enumerate(qs.assignment):
            merged[target] += letters[pos]
        word = tuple(merged)
        coeff = Fraction(-1) ** qs.merges if sign_mode == "weak" else Fraction(1)
        out[word] = out.get(word, Fraction(0)) + coeff
    return TensorPoly(out)


def stuffle_poly(s: TensorPoly, t: TensorPoly, sign_mode: str = "strict") -> TensorPoly:
    out = TensorPoly.zero()
    for u, cu in sorted(s.terms.items()):
        for w, cw in sorted(t.terms.items()):
            out = out + (cu * cw) * stuffle(u, w, sign_mode)
    return out


def deconcat(w) -> list[tuple[Word, Word]]:
    """All |w|+1 splits (prefix, suffix), trivial ones included."""
    w = tuple(w)
    return [(w[:i], w[i:]) for i in range(len(w) + 1)]


def deconcat_reduced(w) -> list[tuple[Word, Word]]:
    """The splits with both parts nonempty (what Birkhoff recursions use)."""
    w = tuple(w)
    return [(w[:i], w[i:]) for i in range(1, len(w))]


def _contract(w: Word, parts, bullet_sign: str) -> tuple[Word, int]:
    """Contract consecutive packets of w by the bullet product.

    Returns the contracted word and the sign exponent: the weak bullet flips
    the sign once per binary merge, so a packet of size i contributes i-1.
    """
    word = []
    merges = 0
    i = 0
    for p in parts:
        word.append(sum(w[i : i + p]))
        merges += p - 1
        i += p
    sign = merges if bullet_sign == "-" else 0
    return tuple(word), sign


def _hoffman_word(w: Word, bullet_sign: str, mode: str) -> TensorPoly:
    n = len(w)
    if n == 0:
        return TensorPoly.unit()
    out: dict[Word, Fraction] = {}
    for parts in compositions(n):
        word, sign = _contract(w, parts, bullet_sign)
        if mode == "exp":
            coeff = Fraction(1, prod(_fact(p) for p in parts))
        else:
            coeff = Fraction((-1) ** (n - len(parts)), prod(parts))
        coeff *= (-1) ** sign
        out[word] = out.get(word, Fraction(0)) + coeff
    return TensorPoly(out)


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def hoffman_exp(t: TensorPoly, bullet_sign: str = "+") -> TensorPoly:
    """The composition-sum isomorphism from the shuffle to the quasi-shuffle
    Hopf algebra: sum over compositions with coefficients 1/(i_1! ... i_r!).

    >>> hoffman_exp(TensorPoly.from_word((1, 2)))
    TensorPoly(1*(1,2) + 1/2*(3))
    """
    if bullet_sign not in ("+", "-"):
        raise ValueError("bullet_sign must be '+' or '-'")
    return t.map_words(lambda w: _hoffman_word(w, bullet_sign, "exp"))


def hoffman_log(t: TensorPoly, bullet_sign: str = "+") -> TensorPoly:
    """Inverse of :func:`hoffman_exp`: coefficients (-1)^(n-r)/(i_1 ... i_r)."""
    if bullet_sign not in ("+", "-"):
        raise ValueError("bullet_sign must be '+' or '-'")
    return t.map_words(lambda w: _hoffman_word(w, bullet_sign, "log"))
