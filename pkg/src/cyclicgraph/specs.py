"""Construction expressions naming a semigroup on the command line.

Grammar::

    spec := monogenic:M,R | cyclic:N | leftzero:N | table:PATH | rees:PATH
          | product:(spec)x(spec)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import SpecParseError
from .fileio import read_rees_file, read_table_file
from .semigroup import FiniteSemigroup, cyclic_group, direct_product, left_zero_band, monogenic


@dataclass(frozen=True)
class Monogenic:
    m: int
    r: int

    def render(self) -> str:
        return f"monogenic:{self.m},{self.r}"

    def build(self) -> FiniteSemigroup:
        return monogenic(self.m, self.r)


@dataclass(frozen=True)
class Cyclic:
    n: int

    def render(self) -> str:
        return f"cyclic:{self.n}"

    def build(self) -> FiniteSemigroup:
        return cyclic_group(self.n)


@dataclass(frozen=True)
class LeftZero:
    n: int

    def render(self) -> str:
        return f"leftzero:{self.n}"

    def build(self) -> FiniteSemigroup:
        return left_zero_band(self.n)


@dataclass(frozen=True)
class TableFile:
    path: str

    def render(self) -> str:
        return f"table:{self.path}"

    def build(self) -> FiniteSemigroup:
        return read_table_file(self.path)


@dataclass(frozen=True)
class ReesFile:
    path: str

    def render(self) -> str:
        return f"rees:{self.path}"

    def build(self) -> FiniteSemigroup:
        return read_rees_file(self.path)


@dataclass(frozen=True)
class Product:
    left: "SemigroupSpec"
    right: "SemigroupSpec"

    def render(self) -> str:
        return f"product:({self.left.render()})x({self.right.render()})"

    def build(self) -> FiniteSemigroup:
        return direct_product(self.left.build(), self.right.build())


SemigroupSpec = Union[Monogenic, Cyclic, LeftZero, TableFile, ReesFile, Product]


def _positive_ints(body: str, count: int, text: str) -> list[int]:
    parts = body.split(",")
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise SpecParseError(f"{text!r}: expected {count} comma-separated positive integers")
    values = [int(p) for p in parts]
    if any(v < 1 for v in values):
        raise SpecParseError(f"{text!r}: parameters must be >= 1")
    return values


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for k in range(start, len(text)):
        if text[k] == "(":
            depth += 1
        elif text[k] == ")":
            depth -= 1
            if depth == 0:
                return k
    raise SpecParseError(f"{text!r}: unbalanced parentheses")


def parse_spec(text: str) -> SemigroupSpec:
    kind, sep, body = text.partition(":")
    if not sep:
        raise SpecParseError(f"{text!r}: expected kind:arguments")
    if kind == "monogenic":
        return Monogenic(*_positive_ints(body, 2, text))
    if kind == "cyclic":
        return Cyclic(*_positive_ints(body, 1, text))
    if kind == "leftzero":
        return LeftZero(*_positive_ints(body, 1, text))
    if kind in ("table", "rees"):
        if not body:
            raise SpecParseError(f"{text!r}: missing path")
        return TableFile(body) if kind == "table" else ReesFile(body)
    if kind == "product":
        if not body.startswith("("):
            raise SpecParseError(f"{text!r}: expected product:(A)x(B)")
        end = _matching_paren(body, 0)
        if body[end + 1:end + 3] != "x(" or not body.endswith(")"):
            raise SpecParseError(f"{text!r}: expected product:(A)x(B)")
        if _matching_paren(body, end + 2) != len(body) - 1:
            raise SpecParseError(f"{text!r}: trailing text after product")
        return Product(parse_spec(body[1:end]), parse_spec(body[end + 3:-1]))
    raise SpecParseError(f"{text!r}: unknown semigroup kind {kind!r}")


def build_spec(text: str) -> FiniteSemigroup:
    return parse_spec(text).build()
