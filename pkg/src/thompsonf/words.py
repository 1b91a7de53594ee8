"""Words in the generators x_k of Thompson's group F.

A letter is a pair ``(k, s)`` with subscript ``k >= 0`` and sign
``s in {+1, -1}``, standing for ``x_k`` or ``x_k^-1``.  A word is a tuple
of letters; it need not be reduced.  The text format is whitespace
separated tokens ``x<k>`` and ``x<k>^-1`` and nothing else: exponent
sugar like ``x0^2`` is a parse error, not a convenience.
"""

from __future__ import annotations

import re
from typing import Tuple

Letter = Tuple[int, int]
GenWord = Tuple[Letter, ...]


class WordError(ValueError):
    """Malformed word text or an out-of-domain letter."""


_TOKEN = re.compile(r"x(0|[1-9][0-9]*)(\^-1)?\Z")


def parse_word(text: str) -> GenWord:
    """Parse a whitespace separated token string into a word.

    >>> parse_word("x0 x1^-1")
    ((0, 1), (1, -1))
    >>> parse_word("")
    ()
    """
    letters = []
    for pos, token in enumerate(text.split(), start=1):
        m = _TOKEN.match(token)
        if m is None:
            raise WordError(f"bad token {token!r} at position {pos}")
        letters.append((int(m.group(1)), -1 if m.group(2) else 1))
    return tuple(letters)


def format_word(w: GenWord) -> str:
    """Render a word in the token format accepted by parse_word."""
    return " ".join(f"x{k}" if s == 1 else f"x{k}^-1" for k, s in w)


def free_reduce(w: GenWord) -> GenWord:
    """Cancel adjacent x_k^s x_k^-s pairs until none remain.

    Only free cancellation: the group relations are never applied here.
    """
    out: list[Letter] = []
    for letter in w:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse_word(w: GenWord) -> GenWord:
    return tuple((k, -s) for k, s in reversed(w))
