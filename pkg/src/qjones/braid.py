"""Braid words: parsing, validation, writhe and closure data, Markov moves.

Two input forms are accepted: whitespace-separated generator tokens
("s1 s2^-1 s1") and the compact signed-integer list ("[1,-2,1]", negative
means inverse generator). The list form is the canonical JSON encoding
{"strands": n, "word": [±i, ...]}.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import BraidSyntaxError, LetterRangeError

Letter = tuple[int, int]  # (generator index >= 1, sign ±1)

_TOKEN_RE = re.compile(r"^s(\d+)(\^-1)?$")


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for pos, (index, sign) in enumerate(self.letters):
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be ±1, got {sign}")
            if not 1 <= index <= self.strands - 1:
                raise LetterRangeError(sign * index, self.strands, pos)

    @property
    def writhe(self) -> int:
        """Sum of crossing signs."""
        return sum(sign for _, sign in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[k] = exit position of the strand entering at position k (0-based)."""
        out = [0] * self.strands
        for k in range(self.strands):
            pos = k
            for index, _ in self.letters:
                if pos == index - 1:
                    pos = index
                elif pos == index:
                    pos = index - 1
            out[k] = pos
        return tuple(out)

    def permutation_cycles(self) -> tuple[tuple[int, ...], ...]:
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = []
        for start in range(self.strands):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = perm[k]
            cycles.append(tuple(cycle))
        return tuple(cycles)

    def signed_letters(self) -> list[int]:
        return [sign * index for index, sign in self.letters]

    def render(self, style: str = "text") -> str:
        if style == "list":
            return "[" + ",".join(str(v) for v in self.signed_letters()) + "]"
        if style == "text":
            return " ".join(
                f"s{index}" if sign > 0 else f"s{index}^-1" for index, sign in self.letters
            )
        raise ValueError(f"unknown render style {style!r}")

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": self.signed_letters()}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(
            data["strands"],
            tuple((abs(v), 1 if v > 0 else -1) for v in data["word"]),
        )


@dataclass(frozen=True)
class ClosureClass:
    """Component data of the braid closure."""

    is_knot: bool
    component_count: int


def parse(text: str, strands: int) -> BraidWord:
    """Parse braid-word text in either the token or the list form."""
    if strands < 1:
        raise ValueError("a braid needs at least one strand")
    src = text.strip()
    if src.startswith("["):
        return _parse_list(text, strands)
    return _parse_tokens(text, strands)


def _parse_list(text: str, strands: int) -> BraidWord:
    src = text.strip()
    if not src.endswith("]"):
        raise BraidSyntaxError("unterminated list form", len(text.rstrip()))
    inner = src[1:-1].strip()
    letters: list[Letter] = []
    if inner:
        offset = text.index("[") + 1
        for piece in inner.split(","):
            stripped = piece.strip()
            position = offset + piece.index(stripped) if stripped else offset
            if not re.fullmatch(r"-?\d+", stripped):
                raise BraidSyntaxError(f"bad list entry {stripped!r}", position)
            value = int(stripped)
            if value == 0:
                raise BraidSyntaxError("list entries must be nonzero", position)
            index, sign = abs(value), (1 if value > 0 else -1)
            if not 1 <= index <= strands - 1:
                raise LetterRangeError(value, strands, len(letters))
            letters.append((index, sign))
            offset += len(piece) + 1
    return BraidWord(strands, tuple(letters))


def _parse_tokens(text: str, strands: int) -> BraidWord:
    letters: list[Letter] = []
    offset = 0
    for token in text.split():
        position = text.index(token, offset)
        offset = position + len(token)
        match = _TOKEN_RE.match(token)
        if match is None:
            raise BraidSyntaxError(f"bad letter token {token!r}", position)
        index = int(match.group(1))
        sign = -1 if match.group(2) else 1
        if not 1 <= index <= strands - 1:
            raise LetterRangeError(sign * index, strands, len(letters))
        letters.append((index, sign))
    return BraidWord(strands, tuple(letters))


def writhe(word: BraidWord) -> int:
    """Sum of the crossings' signs."""
    return word.writhe


def closure_class(word: BraidWord) -> ClosureClass:
    """Component count of the closure; a knot iff the permutation is an n-cycle."""
    cycles = word.permutation_cycles()
    return ClosureClass(is_knot=len(cycles) == 1, component_count=len(cycles))


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain. Never applied silently."""
    stack: list[Letter] = []
    for letter in word.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(word.strands, tuple(stack))


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord(
        word.strands, tuple((i, -s) for i, s in reversed(word.letters))
    )


def mirror(word: BraidWord) -> BraidWord:
    """Flip every crossing in place; the closure is the mirror knot."""
    return BraidWord(word.strands, tuple((i, -s) for i, s in word.letters))


def concatenate(first: BraidWord, second: BraidWord) -> BraidWord:
    if first.strands != second.strands:
        raise ValueError("cannot concatenate words on different strand counts")
    return BraidWord(first.strands, first.letters + second.letters)


def conjugate(word: BraidWord, gamma: BraidWord) -> BraidWord:
    """gamma · word · gamma^{-1} on the same strand count."""
    return concatenate(concatenate(gamma, word), inverse(gamma))


def stabilize(word: BraidWord, sign: int) -> BraidWord:
    """Append σ_n^{±1} on strands+1 strands."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be ±1")
    return BraidWord(word.strands + 1, word.letters + ((word.strands, sign),))


def markov_moves(word: BraidWord, seed: int) -> BraidWord:
    """A word Markov-related to the input: random conjugation or stabilization.

    Deterministic in the seed. Conjugations are freely reduced before they are
    returned; stabilizations are returned verbatim.
    """
    rng = random.Random(seed)
    moves = ["stabilize+", "stabilize-"]
    if word.strands >= 2:
        moves.append("conjugate")
    move = rng.choice(moves)
    if move == "conjugate":
        gamma = random_word(word.strands, rng.randint(1, 3), rng)
        return free_reduce(conjugate(word, gamma))
    return stabilize(word, 1 if move.endswith("+") else -1)


def random_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    """A uniform random word; requires strands >= 2 when length > 0."""
    if length > 0 and strands < 2:
        raise ValueError("no generators exist on fewer than two strands")
    letters = tuple(
        (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(strands, letters)


def random_knot_word(strands: int, length: int, rng: random.Random, max_tries: int = 1000) -> BraidWord:
    """A random word whose closure is a knot, by rejection sampling.

    An n-cycle is a product of at least n-1 transpositions and its parity is
    fixed, so the requested length is bumped to the nearest feasible value
    (>= strands-1, congruent to strands-1 mod 2) before sampling.
    """
    if strands == 1:
        return BraidWord(1, ())
    length = max(length, strands - 1)
    if (length - (strands - 1)) % 2:
        length += 1
    for _ in range(max_tries):
        word = random_word(strands, length, rng)
        if closure_class(word).is_knot:
            return word
    raise RuntimeError(
        f"no knot closure found in {max_tries} samples (strands={strands}, length={length})"
    )
