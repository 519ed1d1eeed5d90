"""Text format for monomial ideal input.

Generators are comma-separated products of factors like ``x1^3`` or
``x4``, with ``*`` between factors and ``#`` starting a comment that
runs to the end of the line.  ``a``..``d`` alias ``x1``..``x4`` and a
bare ``1`` denotes the unit monomial.  Repeated variables multiply, so
``x1*x1`` means ``x1^2``.
"""

from .errors import ExponentCapExceeded, ParseError, VariableOutOfRange
from .monomials import NUM_VARS, MonomialIdeal, minimalize

DEFAULT_EXP_CAP = 64

_ALIASES = {"a": 1, "b": 2, "c": 3, "d": 4}


def _parse_monomial(chunk, base, max_exp):
    """One generator.  base is the chunk's offset inside the full input,
    so every error position refers to the original text."""
    exps = [0] * NUM_VARS
    i = 0
    n = len(chunk)

    def skip_ws(i):
        while i < n and chunk[i].isspace():
            i += 1
        return i

    def read_int(i):
        start = i
        while i < n and chunk[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected a number", base + start)
        return int(chunk[start:i]), i

    expect_factor = True
    saw_factor = False
    while True:
        i = skip_ws(i)
        if i >= n:
            break
        ch = chunk[i]
        if not expect_factor:
            if ch != "*":
                raise ParseError(f"expected '*' before {ch!r}", base + i)
            i += 1
            expect_factor = True
            continue
        if ch == "1" and (i + 1 >= n or not chunk[i + 1].isdigit()):
            # the unit monomial as a factor; legal but contributes nothing
            i += 1
            expect_factor = False
            saw_factor = True
            continue
        if ch == "x":
            value, j = read_int(i + 1)
            if not 1 <= value <= NUM_VARS or j - i > 2:
                raise VariableOutOfRange(
                    f"variable x{chunk[i + 1:j]} is outside x1..x{NUM_VARS}", base + i
                )
            var = value
            i = j
        elif ch in _ALIASES:
            var = _ALIASES[ch]
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", base + i)
        exp = 1
        i = skip_ws(i)
        if i < n and chunk[i] == "^":
            at = i
            i = skip_ws(i + 1)
            exp, i = read_int(i)
            if exp == 0:
                raise ParseError("exponent must be positive", base + at + 1)
        exps[var - 1] += exp
        if exps[var - 1] > max_exp:
            raise ExponentCapExceeded(
                f"exponent {exps[var - 1]} exceeds the cap of {max_exp}", base + i - 1
            )
        expect_factor = False
        saw_factor = True
    if expect_factor:
        if saw_factor:
            raise ParseError("dangling '*'", base + n)
        raise ParseError("empty generator", base + skip_ws(0))
    return tuple(exps)


def parse_ideal(text, max_exp=DEFAULT_EXP_CAP):
    """Parse a generator list into a MonomialIdeal, minimalizing as needed.

    An input that is only whitespace or comments denotes the zero ideal.
    """
    stripped = []
    for line in text.splitlines(keepends=True) or [""]:
        cut = line.find("#")
        # blank comments out rather than deleting them, so error
        # positions keep pointing into the caller's original text
        stripped.append(line if cut < 0 else line[:cut] + " " * (len(line) - cut))
    clean = "".join(stripped)
    if not clean.strip():
        return MonomialIdeal(())
    gens = []
    base = 0
    for chunk in clean.split(","):
        gens.append(_parse_monomial(chunk, base, max_exp))
        base += len(chunk) + 1
    return MonomialIdeal(minimalize(gens))
