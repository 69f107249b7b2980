"""Words over the generators ``x_1..x_n``, stored as tuples of indices."""
from __future__ import annotations

from .errors import WordError

Word = tuple  # tuple[int, ...]; the empty tuple is the identity

IDENTITY: Word = ()


def parse_word(text: str, n: int | None = None) -> Word:
    """Read ``"3 1 2"`` (or ``"e"`` for the identity) into a word."""
    tokens = text.replace(",", " ").split()
    if tokens in ([], ["e"]):
        return IDENTITY
    try:
        word = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise WordError(f"cannot parse word {text!r}") from None
    check_word(word, n)
    return word


def check_word(word, n=None):
    for letter in word:
        if letter < 1 or (n is not None and letter > n):
            bound = f"1..{n}" if n is not None else ">= 1"
            raise WordError(f"letter {letter} outside generator range {bound}")
    return tuple(word)


def format_word(word) -> str:
    return " ".join(str(i) for i in word) if word else "e"


def shortlex_key(word):
    return (len(word), tuple(word))


def relabel(word, mapping):
    """Apply a vertex relabelling ``mapping[old] = new`` to every letter."""
    return tuple(mapping[i] for i in word)
