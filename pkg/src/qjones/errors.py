"""Exception types shared across the package."""

from __future__ import annotations


class BraidSyntaxError(ValueError):
    """Malformed braid-word text. Carries the character position of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LetterRangeError(ValueError):
    """A braid letter references a generator index outside [1, strands-1]."""

    def __init__(self, letter: int, strands: int, position: int):
        super().__init__(
            f"letter {letter:+d} out of range for {strands} strands "
            f"(valid indices 1..{strands - 1}, at position {position})"
        )
        self.letter = letter
        self.position = position


class NonKnotClosureError(ValueError):
    """The braid closure has more than one component. Carries the cycles."""

    def __init__(self, cycles: tuple[tuple[int, ...], ...]):
        super().__init__(
            f"braid closure is a {len(cycles)}-component link, not a knot; "
            f"permutation cycles (0-based strands): {list(map(list, cycles))}"
        )
        self.cycles = cycles


class ConventionError(RuntimeError):
    """An internal exponent-convention assertion failed.

    This never indicates bad user input: it means an inverse braiding block
    failed to clear to Laurent form, i.e. the hard-coded exponent conventions
    are wrong.
    """
