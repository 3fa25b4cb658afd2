"""Color alphabets, words over them, and enumeration caps."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Sequence, Tuple

from .errors import CapExceededError, ColoredCircleError, UnknownColorError

NEG_INF = "-inf"
POS_INF = "+inf"

DEFAULT_MAX_N = 5
CAP_ENV_VAR = "COLORED_CIRCLE_MAX_N"

_FORBIDDEN_CHARS = set(" \t\r\n,:#")


@dataclass(frozen=True)
class ColorSet:
    """An ordered, non-empty alphabet of distinct color tokens.

    The order given at construction drives every deterministic iteration in
    the library (table rows, canonical numbering, enumeration order).
    """

    colors: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if not colors:
            raise ColoredCircleError("a color set needs at least one color")
        for c in colors:
            if not isinstance(c, str) or not c:
                raise ColoredCircleError(f"invalid color token {c!r}")
            if _FORBIDDEN_CHARS & set(c):
                raise ColoredCircleError(f"color token {c!r} contains a reserved character")
            if c in (NEG_INF, POS_INF):
                raise ColoredCircleError(f"{c!r} is reserved for the line endpoints")
        if len(set(colors)) != len(colors):
            raise ColoredCircleError(f"duplicate colors in {colors!r}")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(colors)})

    @classmethod
    def parse(cls, text: str) -> "ColorSet":
        """Build from ``"a,b,c"`` (commas) or ``"a b c"`` (whitespace)."""
        sep = "," if "," in text else None
        return cls(tuple(tok.strip() for tok in text.split(sep) if tok.strip()))

    @classmethod
    def letters(cls, n: int) -> "ColorSet":
        """The first ``n`` lowercase letters."""
        if not 1 <= n <= 26:
            raise ColoredCircleError("letters() supports 1 <= n <= 26")
        return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))

    @property
    def n(self) -> int:
        return len(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self) -> Iterator[str]:
        return iter(self.colors)

    def __contains__(self, color) -> bool:
        return color in self._index

    def index(self, color: str) -> int:
        try:
            return self._index[color]
        except KeyError:
            raise UnknownColorError(f"unknown color {color!r}; expected one of {list(self.colors)}") from None

    def single_char(self) -> bool:
        return all(len(c) == 1 for c in self.colors)

    def words(self, length: int) -> Iterator["Word"]:
        """All words of exactly ``length`` letters, in lexicographic color order."""
        for letters in itertools.product(self.colors, repeat=length):
            yield Word(letters)

    def words_up_to(self, max_len: int) -> Iterator["Word"]:
        for length in range(max_len + 1):
            yield from self.words(length)

    def parse_word(self, text: str) -> "Word":
        """Parse a word: comma separated, or concatenated when every color is one character."""
        text = text.strip()
        if not text:
            return Word(())
        if "," in text or not self.single_char():
            letters = tuple(tok.strip() for tok in text.split(","))
        else:
            letters = tuple(text)
        for c in letters:
            self.index(c)
        return Word(letters)

    def format_word(self, word: Sequence[str]) -> str:
        if self.single_char():
            return "".join(word)
        return ",".join(word)


class Word(tuple):
    """A finite word over a color alphabet, possibly empty.

    Ordinary tuple indexing is 0-based. The ``closed``/``half_open``/
    ``open_closed`` helpers use the 1-based subword notation ``w[i,j]``,
    ``w[i,j)`` and ``w(i,j]``; an empty range gives the empty word.
    """

    def __new__(cls, letters: Iterable[str] = ()):
        return super().__new__(cls, letters)

    def __repr__(self) -> str:
        return f"Word({''.join(self) if all(len(c) == 1 for c in self) else ','.join(self)!r})"

    def closed(self, i: int, j: int) -> "Word":
        """``w[i,j] = w_i ... w_j``."""
        if j < i:
            return Word(())
        return Word(tuple.__getitem__(self, slice(i - 1, j)))

    def half_open(self, i: int, j: int) -> "Word":
        """``w[i,j) = w_i ... w_{j-1}``."""
        return self.closed(i, j - 1)

    def open_closed(self, i: int, j: int) -> "Word":
        """``w(i,j] = w_{i+1} ... w_j``."""
        return self.closed(i + 1, j)

    def __add__(self, other) -> "Word":
        return Word(tuple(self) + tuple(other))


def enumeration_cap(default: int = DEFAULT_MAX_N, allow_large: bool = False) -> int:
    """Largest alphabet size an enumeration accepts.

    ``allow_large`` raises the cap by one. The environment variable
    ``COLORED_CIRCLE_MAX_N`` overrides both.
    """
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ColoredCircleError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return default + 1 if allow_large else default


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceededError(f"{what} with n={n} exceeds the cap n <= {cap}")
