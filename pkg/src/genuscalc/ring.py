"""Truncated polynomial rings modelling rational cohomology.

A `RingPresentation` fixes finitely many generators, each with a positive
even degree and a nilpotency exponent, together with a top degree beyond
which everything is truncated.  Because all generators sit in even degree,
the ring is honestly commutative and elements are plain dictionaries from
exponent vectors to Fractions.  Quotient relations (g^nilpotency = 0 and
degree > top_degree) are applied on every construction, so elements are
always reduced.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .formatting import signed_sum

__all__ = ["RingElement", "RingPresentation"]


class RingPresentation:
    """Generators-and-truncation presentation Q[g_1, ..., g_r]/(g_i^{n_i}, deg > top)."""

    __slots__ = ("_gens", "_top")

    def __init__(self, generators: Iterable[tuple[str, int, int]], top_degree: int):
        gens: list[tuple[str, int, int]] = []
        seen: set[str] = set()
        for name, degree, nilpotency in generators:
            name = str(name)
            degree = int(degree)
            nilpotency = int(nilpotency)
            if not name or name in seen:
                raise ValueError(f"generator names must be unique and nonempty, got {name!r}")
            if degree <= 0 or degree % 2:
                raise ValueError(
                    f"generator {name!r} must have positive even degree, got {degree}"
                )
            if nilpotency < 1:
                raise ValueError(f"generator {name!r} needs nilpotency >= 1, got {nilpotency}")
            seen.add(name)
            gens.append((name, degree, nilpotency))
        top = int(top_degree)
        if top < 0:
            raise ValueError(f"top degree must be >= 0, got {top}")
        self._gens = tuple(gens)
        self._top = top

    @property
    def generators(self) -> tuple[tuple[str, int, int], ...]:
        return self._gens

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g[0] for g in self._gens)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g[1] for g in self._gens)

    @property
    def nilpotencies(self) -> tuple[int, ...]:
        return tuple(g[2] for g in self._gens)

    @property
    def top_degree(self) -> int:
        return self._top

    @property
    def ngens(self) -> int:
        return len(self._gens)

    def monomial_degree(self, exponents: tuple[int, ...]) -> int:
        return sum(e * g[1] for e, g in zip(exponents, self._gens))

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def one(self) -> RingElement:
        return RingElement(self, {(0,) * self.ngens: Fraction(1)})

    def gen(self, name: str) -> RingElement:
        for i, (gname, _, _) in enumerate(self._gens):
            if gname == name:
                exps = [0] * self.ngens
                exps[i] = 1
                return RingElement(self, {tuple(exps): Fraction(1)})
        raise ValueError(f"no generator named {name!r}")

    def element(self, terms: Mapping[tuple[int, ...], Fraction | int]) -> RingElement:
        return RingElement(self, terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingPresentation)
            and self._gens == other._gens
            and self._top == other._top
        )

    def __hash__(self) -> int:
        return hash((self._gens, self._top))

    def __repr__(self) -> str:
        gens = ", ".join(f"{n}(deg {d}, nil {p})" for n, d, p in self._gens)
        return f"RingPresentation([{gens}], top_degree={self._top})"


class RingElement:
    """Element of a truncated graded-commutative ring, stored fully reduced."""

    __slots__ = ("_pres", "_terms")

    def __init__(self, presentation: RingPresentation, terms: Mapping[tuple[int, ...], Fraction | int]):
        self._pres = presentation
        ngens = presentation.ngens
        nils = presentation.nilpotencies
        top = presentation.top_degree
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in dict(terms).items():
            key = tuple(int(e) for e in exps)
            if len(key) != ngens:
                raise ValueError(f"exponent vector {key} does not match {ngens} generators")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            c = Fraction(coeff)
            if not c:
                continue
            if any(e >= n for e, n in zip(key, nils)):
                continue  # generator power collapses to zero
            if presentation.monomial_degree(key) > top:
                continue  # beyond the truncation degree
            clean[key] = clean.get(key, Fraction(0)) + c
            if not clean[key]:
                del clean[key]
        self._terms = clean

    @property
    def presentation(self) -> RingPresentation:
        return self._pres

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def coefficient(self, exponents: tuple[int, ...]) -> Fraction:
        key = tuple(int(e) for e in exponents)
        if len(key) != self._pres.ngens:
            raise ValueError(f"exponent vector {key} does not match {self._pres.ngens} generators")
        return self._terms.get(key, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._pres.ngens, Fraction(0))

    def homogeneous_part(self, degree: int) -> RingElement:
        """The sum of terms of exactly the given degree."""
        if degree < 0 or degree > self._pres.top_degree:
            raise ValueError(
                f"degree {degree} is outside 0..{self._pres.top_degree}"
            )
        picked = {
            e: c for e, c in self._terms.items() if self._pres.monomial_degree(e) == degree
        }
        return RingElement(self._pres, picked)

    def _check_same_ring(self, other: RingElement) -> None:
        if self._pres != other._pres:
            raise ValueError("ring elements come from different presentations")

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self._pres == other._pres
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other):
        if isinstance(other, RingElement):
            self._check_same_ring(other)
            out = dict(self._terms)
            for e, c in other._terms.items():
                out[e] = out.get(e, Fraction(0)) + c
            return RingElement(self._pres, out)
        if isinstance(other, (int, Fraction)):
            return self + self._pres.one() * other
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + other
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, (RingElement, int, Fraction)):
            return self + (-other if isinstance(other, RingElement) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __neg__(self) -> RingElement:
        return RingElement(self._pres, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElement):
            self._check_same_ring(other)
            out: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return RingElement(self._pres, out)
        if isinstance(other, (int, Fraction)):
            return RingElement(self._pres, {e: c * other for e, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> RingElement:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"ring exponent must be a nonnegative integer, got {exponent!r}")
        result = self._pres.one()
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> RingElement:
        """Multiplicative inverse of a unit (nonzero constant term).

        With a = c(1 + x) and x in the augmentation ideal, the inverse is
        the finite geometric series (1/c) * sum_k (-x)^k, which terminates
        because x is nilpotent under the truncation.
        """
        c = self.constant_term()
        if not c:
            raise ValueError("element with zero constant term is not invertible")
        one = self._pres.one()
        minus_x = one - self * (1 / c)
        acc = one
        power = one
        degrees = self._pres.degrees
        steps = self._pres.top_degree // min(degrees) + 1 if degrees else 0
        for _ in range(steps):
            power = power * minus_x
            if not power:
                break
            acc = acc + power
        return acc * (1 / c)

    def _monomial_str(self, exps: tuple[int, ...]) -> str:
        pieces = []
        for name, e in zip(self._pres.names, exps):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "*".join(pieces)

    def __str__(self) -> str:
        ordered = sorted(self._terms.items())
        return signed_sum((c, self._monomial_str(e)) for e, c in ordered)

    def __repr__(self) -> str:
        return f"<RingElement {self}>"
