"""Text, JSON and Macaulay2 formats for ideals, complexes and degrees.

Ideal text:  ``n=8; x1*x2, x2^2*x3``  (``0`` / ``1`` for the zero / unit ideal).
Everything user-facing is 1-based; the models are 0-based.
"""
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from models.complex import Kind, SimplicialComplex
from models.errors import DimensionMismatchError, ParseError
from models.monomial import MonomialIdeal, minimalize
from models.vertices import MAX_VARIABLES, to_mask

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<index>\d+))|(?P<num>\d+)|(?P<op>[n=;,*^]))")


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: List[Tuple[str, str, int]] = []
        offset = 0
        stripped = re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)
        while offset < len(stripped):
            if stripped[offset:].strip() == "":
                break
            match = _TOKEN.match(stripped, offset)
            if not match:
                start = len(stripped) - len(stripped[offset:].lstrip())
                raise ParseError(f"unexpected character {stripped[start]!r}", *_position(text, start))
            start = match.start(match.lastgroup if match.lastgroup != "index" else "var")
            if match.group("var"):
                self.items.append(("var", match.group("index"), start))
            elif match.group("num"):
                self.items.append(("num", match.group("num"), start))
            else:
                self.items.append(("op", match.group("op"), start))
            offset = match.end()
        self.pos = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.items[self.pos] if self.pos < len(self.items) else None

    def take(self) -> Tuple[str, str, int]:
        item = self.peek()
        if item is None:
            raise ParseError("unexpected end of input", *_position(self.text, len(self.text)))
        self.pos += 1
        return item

    def expect(self, kind: str, value: Optional[str] = None) -> Tuple[str, str, int]:
        item = self.take()
        if item[0] != kind or (value is not None and item[1] != value):
            wanted = value or kind
            raise ParseError(f"expected {wanted!r}, found {item[1]!r}", *_position(self.text, item[2]))
        return item

    def error(self, message: str, item: Tuple[str, str, int]) -> ParseError:
        return ParseError(message, *_position(self.text, item[2]))


def parse_ideal(text: str, n: Optional[int] = None) -> MonomialIdeal:
    """Parse the ideal text format; `n` is used when the text has no ``n=`` header."""
    tokens = _Tokens(text)
    first = tokens.peek()
    if first is None:
        raise ParseError("empty ideal text")
    if first == ("op", "n", first[2]):
        tokens.take()
        tokens.expect("op", "=")
        _, value, offset = tokens.expect("num")
        declared = int(value)
        if declared > MAX_VARIABLES:
            raise ParseError(f"at most {MAX_VARIABLES} variables are supported", *_position(text, offset))
        if n is not None and n != declared:
            raise DimensionMismatchError(f"ideal declares n={declared}, expected {n}")
        n = declared
        tokens.expect("op", ";")

    constant = tokens.peek()
    if constant and constant[0] == "num" and tokens.pos + 1 == len(tokens.items):
        tokens.take()
        if n is None:
            raise tokens.error("the constant ideals need an n= header", constant)
        if constant[1] == "0":
            return MonomialIdeal.zero(n)
        if constant[1] == "1":
            return MonomialIdeal.unit(n)
        raise tokens.error(f"constant ideal must be 0 or 1, not {constant[1]}", constant)

    monomials: List[Dict[int, int]] = []
    highest = 0
    while True:
        exponents: Dict[int, int] = {}
        while True:
            item = tokens.take()
            if item[0] == "num" and item[1] == "1":
                pass
            elif item[0] == "var":
                index = int(item[1])
                if index < 1:
                    raise tokens.error("variables are numbered from x1", item)
                if n is not None and index > n:
                    raise tokens.error(f"variable x{index} outside x1..x{n}", item)
                exponent = 1
                nxt = tokens.peek()
                if nxt and nxt[:2] == ("op", "^"):
                    tokens.take()
                    _, value, offset = tokens.expect("num")
                    exponent = int(value)
                    if exponent < 1:
                        raise ParseError("exponents must be at least 1", *_position(text, offset))
                exponents[index - 1] = exponents.get(index - 1, 0) + exponent
                highest = max(highest, index)
            else:
                raise tokens.error(f"expected a variable, found {item[1]!r}", item)
            nxt = tokens.peek()
            if nxt and nxt[:2] == ("op", "*"):
                tokens.take()
                continue
            break
        monomials.append(exponents)
        nxt = tokens.peek()
        if nxt is None:
            break
        tokens.expect("op", ",")

    if n is None:
        n = highest
    return minimalize([tuple(m.get(i, 0) for i in range(n)) for m in monomials], n=n)


def format_monomial(exponents: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(exponents):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) or "1"


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero:
        body = "0"
    elif I.is_unit:
        body = "1"
    else:
        body = ", ".join(format_monomial(g) for g in I.generators)
    return f"n={I.n}; {body}"


def parse_gamma(text: str, n: Optional[int] = None) -> Tuple[int, ...]:
    """Comma-separated integers, e.g. ``0,2,-1,0``."""
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    values = []
    for column, part in enumerate(parts, start=1):
        try:
            values.append(int(part))
        except ValueError:
            raise ParseError(f"degree entry {part!r} is not an integer", 1, column)
    if n is not None and len(values) != n:
        raise DimensionMismatchError(f"degree has {len(values)} entries, ring has {n} variables")
    return tuple(values)


def one_based_mask(vertices: Sequence[int]) -> int:
    return to_mask(v - 1 for v in vertices)


def complex_to_dict(complex_: SimplicialComplex) -> Dict[str, Any]:
    return {"n": complex_.n, "kind": complex_.kind.value, "facets": complex_.facet_lists()}


def complex_from_dict(data: Dict[str, Any]) -> SimplicialComplex:
    try:
        n = int(data["n"])
        kind = Kind(data["kind"])
        facets = data.get("facets", [])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed complex JSON: {e}")
    if kind is Kind.VOID:
        return SimplicialComplex.void(n)
    if kind is Kind.IRRELEVANT:
        return SimplicialComplex.irrelevant(n)
    if not facets:
        raise ParseError("a proper complex needs at least one facet")
    for facet in facets:
        if not facet or any(not 1 <= v <= n for v in facet):
            raise ParseError(f"facet {facet} is empty or outside 1..{n}")
    return SimplicialComplex.from_faces(n, [one_based_mask(f) for f in facets])


def dumps(data: Any) -> str:
    """Canonical JSON: sorted keys, stable separators."""
    return json.dumps(data, sort_keys=True)


def macaulay2_ring(n: int) -> str:
    return f"S = QQ[x_1..x_{n}]"


def to_macaulay2(complex_: SimplicialComplex) -> str:
    """The complex in SimplicialComplexes constructor syntax over S = QQ[x_1..x_n]."""
    if complex_.is_void:
        return "simplicialComplex monomialIdeal 1_S"
    if complex_.is_irrelevant:
        return "simplicialComplex {1_S}"
    monomials = ["*".join(f"x_{v}" for v in facet) for facet in complex_.facet_lists()]
    return "simplicialComplex {" + ", ".join(monomials) + "}"


@dataclass(frozen=True)
class Macaulay2Fixture:
    """A checked-in Macaulay2 transcript: `-- ideal:` and `-- gamma:` headers, then code lines."""

    name: str
    ideal: Optional[MonomialIdeal]
    gamma: Optional[Tuple[int, ...]]
    lines: Tuple[str, ...]


def read_macaulay2_fixture(path: Union[str, Path]) -> Macaulay2Fixture:
    path = Path(path)
    ideal = gamma = None
    lines = []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if line.startswith("-- ideal:"):
            ideal = parse_ideal(line[len("-- ideal:"):])
        elif line.startswith("-- gamma:"):
            gamma = parse_gamma(line[len("-- gamma:"):])
        elif line and not line.startswith("--"):
            lines.append(line)
    if gamma is not None and ideal is not None and len(gamma) != ideal.n:
        raise DimensionMismatchError(f"{path.name}: degree has {len(gamma)} entries, ring has {ideal.n} variables")
    return Macaulay2Fixture(path.stem, ideal, gamma, tuple(lines))
