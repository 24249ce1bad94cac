"""
words: the textual word syntax, formatting, the beta family, and the bridge
to classical Artin generators.

Grammar (terms separated by '.' or whitespace, exponents optional integers):

    word := term (('.' | WS) term)*
    term := name ('^' int)?
    name := a12 | a13 | a14 | a23 | a24 | a34
          | c123 | c124 | c134 | c234 | p12-34 | p14-23
          | d | s1 | s2 | s3

'd' is the Garside element delta, and s1, s2, s3 are the classical Artin
generators, which coincide with the adjacent bands: s1 = a12, s2 = a23,
s3 = a34.  Parsing yields signed letters; a weight-2 name denotes its simple
element, i.e. it is interchangeable with the fixed atom factorization
(c123 = a12.a23, c234 = a23.a34, c134 = a34.a14, c124 = a14.a12,
p12-34 = a34.a12, p14-23 = a14.a23).

`format_braid` writes a normal form as 'd^p . f1 . f2 ...' using canonical
factor names; its output parses back to the same braid.

The beta family is the one-parameter stress family

    beta_k = a34.a23.a12.a13.a14.c124^(3k).a12^(-3k)

whose normal form is rigid with infimum 0 and canonical length 3k + 5.

`to_artin_letters` spells a signed band-generator word in the classical
generators (1, 2, 3 meaning sigma1, sigma2, sigma3; negatives are inverses)
using the band expansions

    a13 = s2^-1 . s1 . s2        a24 = s3^-1 . s2 . s3
    a14 = s3^-1 . s2^-1 . s1 . s2 . s3

so an independent permutation-braid implementation can audit this package.
"""

from __future__ import annotations

import re
from typing import Iterable

from bkl4.engine import GarsideBraid, braid_from_letters
from bkl4.simples import ATOMS, Simple, atom_spelling, name_of

__all__ = [
    "ParseError",
    "parse_word",
    "parse_braid",
    "format_braid",
    "format_braid_compact",
    "beta_word",
    "beta_braid",
    "to_artin_letters",
    "random_atom_word",
]

Letter = tuple[Simple, int]

_NAME_TO_LETTER: dict[str, Simple] = {
    "a12": Simple.A12,
    "a13": Simple.A13,
    "a14": Simple.A14,
    "a23": Simple.A23,
    "a24": Simple.A24,
    "a34": Simple.A34,
    "c123": Simple.C123,
    "c124": Simple.C124,
    "c134": Simple.C134,
    "c234": Simple.C234,
    "p12-34": Simple.P12_34,
    "p14-23": Simple.P14_23,
    "d": Simple.DELTA,
    "s1": Simple.A12,
    "s2": Simple.A23,
    "s3": Simple.A34,
}

_TOKEN_RE = re.compile(r"[^.\s]+")
_TERM_RE = re.compile(r"(?P<name>[^^]+)(?:\^(?P<exp>[+-]?\d+))?\Z")


class ParseError(ValueError):
    """A word syntax error, carrying the character offset of the bad term."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


def parse_word(text: str) -> list[Letter]:
    """Parse WordSyntax into signed letters [(simple, exponent), ...]."""
    letters: list[Letter] = []
    for match in _TOKEN_RE.finditer(text):
        token, position = match.group(), match.start()
        term = _TERM_RE.match(token)
        if term is None:
            raise ParseError(f"malformed term {token!r}", position)
        name = term.group("name")
        simple = _NAME_TO_LETTER.get(name)
        if simple is None:
            raise ParseError(f"unknown generator name {name!r}", position)
        exp = term.group("exp")
        letters.append((simple, int(exp) if exp is not None else 1))
    return letters


def parse_braid(text: str) -> GarsideBraid:
    """Parse WordSyntax and normalize to a braid."""
    return braid_from_letters(parse_word(text))


def format_braid(x: GarsideBraid) -> str:
    """Render a normal form as 'd^p . f1 . f2 ...'; parses back to x."""
    parts = [f"d^{x.power}"]
    parts.extend(name_of(f) for f in x.factors)
    return " . ".join(parts)


def format_braid_compact(x: GarsideBraid) -> str:
    """Compact one-token-per-run rendering for graph labels: 'd.a13^2'."""
    parts: list[str] = []
    if x.power == 1:
        parts.append("d")
    elif x.power:
        parts.append(f"d^{x.power}")
    run: Simple | None = None
    count = 0
    for f in (*x.factors, None):
        if f == run:
            count += 1
            continue
        if run is not None:
            parts.append(name_of(run) if count == 1 else f"{name_of(run)}^{count}")
        run, count = f, 1
    if not parts:
        return "1"
    return ".".join(parts)


def beta_word(k: int) -> str:
    """The beta family word for k >= 0."""
    if k < 0:
        raise ValueError("beta index must be >= 0")
    return f"a34.a23.a12.a13.a14.c124^{3 * k}.a12^{-3 * k}"


def beta_braid(k: int) -> GarsideBraid:
    """The normalized beta_k braid."""
    return parse_braid(beta_word(k))


_ARTIN_ATOM: dict[Simple, tuple[int, ...]] = {
    Simple.A12: (1,),
    Simple.A23: (2,),
    Simple.A34: (3,),
    Simple.A13: (-2, 1, 2),
    Simple.A24: (-3, 2, 3),
    Simple.A14: (-3, -2, 1, 2, 3),
}


def to_artin_letters(letters: Iterable[Letter]) -> list[int]:
    """Spell signed band-generator letters as signed Artin letters (1, 2, 3)."""
    out: list[int] = []
    for simple, exp in letters:
        expansion: list[int] = []
        for atom in atom_spelling(simple):
            expansion.extend(_ARTIN_ATOM[atom])
        if exp < 0:
            expansion = [-g for g in reversed(expansion)]
        for _ in range(abs(exp)):
            out.extend(expansion)
    return out


def random_atom_word(rng, count: int) -> list[Letter]:
    """A uniformly random signed band-generator word with `count` letters."""
    return [(rng.choice(ATOMS), rng.choice((1, -1))) for _ in range(count)]
