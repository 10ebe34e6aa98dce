"""Words in the free group on {x, y}, free reduction, evaluation under a
2x2 representation, and Fox free-derivative calculus.

A word is a tuple of nonzero ints: +1/-1 for x/x^-1, +2/-2 for y/y^-1,
always stored freely reduced.  The canonical text form is the compact
alphabet xyXY (uppercase = inverse); the caret syntax "x y^-1" is also
accepted on input.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import WordParseError
from .linalg import E2, mat2_inverse

X, Y = 1, 2
_CHAR = {X: "x", -X: "X", Y: "y", -Y: "Y"}
_LETTER = {"x": X, "X": -X, "y": Y, "Y": -Y}

IDENTITY: tuple[int, ...] = ()

_TOKEN = re.compile(r"\s*([xyXY])(?:\^(-?\d+))?\s*")


def reduce_word(letters) -> tuple[int, ...]:
    """Freely reduce a letter sequence (cancel adjacent g g^-1 pairs)."""
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse word text into a reduced word.

    "xYXy" and "x y^-1 x^-1 y" both parse to the same word; the empty
    string (or "1") is the identity.
    """
    text = text.strip()
    if text in ("", "1"):
        return IDENTITY
    letters: list[int] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordParseError(f"bad character at position {pos}: {text[pos]!r}")
        g = _LETTER[m.group(1)]
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([g if exp > 0 else -g] * abs(exp))
        pos = m.end()
    return reduce_word(letters)


def word_to_text(w) -> str:
    """Canonical compact text; identity prints as the empty string."""
    return "".join(_CHAR[a] for a in w)


def word_inverse(w) -> tuple[int, ...]:
    return tuple(-a for a in reversed(w))


def word_concat(a, b) -> tuple[int, ...]:
    return reduce_word(tuple(a) + tuple(b))


def evaluate_word(w, imgx: np.ndarray, imgy: np.ndarray) -> np.ndarray:
    """Image of w under the representation x -> imgx, y -> imgy."""
    imgs = {X: imgx, Y: imgy,
            -X: mat2_inverse(imgx), -Y: mat2_inverse(imgy)}
    out = E2.copy()
    for a in w:
        out = out @ imgs[a]
    return out


# ── group ring Z[F_2] ─────────────────────────────────────────────────

class GroupRingElement:
    """Integer-coefficient formal sum of reduced words.

    Just enough structure for Fox calculus: construction, addition of a
    single term, evaluation, and JSON round-trip.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for w, c in dict(terms).items():
                self.add_term(w, c)

    def add_term(self, w, coeff: int):
        if coeff == 0:
            return
        w = tuple(w)
        new = self.terms.get(w, 0) + coeff
        if new == 0:
            self.terms.pop(w, None)
        else:
            self.terms[w] = new

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        parts = [f"{c}*{word_to_text(w) or '1'}"
                 for w, c in sorted(self.terms.items())]
        return "GroupRingElement(" + " + ".join(parts) + ")"

    def to_json(self) -> list[dict]:
        return [{"word": word_to_text(w), "coeff": c}
                for w, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "GroupRingElement":
        el = cls()
        for item in data:
            el.add_term(parse_word(item["word"]), int(item["coeff"]))
        return el


def fox_derivative(w, g: int) -> GroupRingElement:
    """Free derivative d(w)/d(g) for g in {X, Y}.

    Satisfies dg/dg = 1, d(g^-1)/dg = -g^-1, dh/dg = 0 for the other
    generator, and the product rule d(uv)/dg = du/dg + u dv/dg.
    """
    out = GroupRingElement()
    prefix: tuple[int, ...] = IDENTITY
    for a in w:
        if a == g:
            out.add_term(prefix, 1)
        elif a == -g:
            out.add_term(word_concat(prefix, (a,)), -1)
        prefix = word_concat(prefix, (a,))
    return out


def evaluate_group_ring(e: GroupRingElement,
                        imgx: np.ndarray, imgy: np.ndarray) -> np.ndarray:
    """Linear extension of the representation to Z[F_2]."""
    out = np.zeros((2, 2), dtype=complex)
    for w, c in e.terms.items():
        out += c * evaluate_word(w, imgx, imgy)
    return out
