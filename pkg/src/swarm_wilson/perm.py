"""Finite permutations of vertex ids and symbolic product-group descriptors."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial
from typing import Iterable


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection on vertex ids; only moved points are stored."""

    pairs: tuple = ()  # sorted (v, image) with v != image

    @classmethod
    def from_mapping(cls, mapping: dict) -> "VertexPermutation":
        pairs = tuple(sorted((v, w) for v, w in mapping.items() if v != w))
        if sorted(v for v, _ in pairs) != sorted(w for _, w in pairs):
            raise ValueError(f"not a bijection: {mapping}")
        return cls(pairs)

    @classmethod
    def cycle(cls, *vertices: int) -> "VertexPermutation":
        """The cyclic permutation v1 -> v2 -> ... -> vr -> v1."""
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"repeated vertex in cycle {vertices}")
        r = len(vertices)
        return cls.from_mapping({vertices[i]: vertices[(i + 1) % r] for i in range(r)})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]]) -> "VertexPermutation":
        p = identity()
        for c in cycles:
            p = compose(p, cls.cycle(*c))
        return p

    def __call__(self, v: int) -> int:
        return self.as_dict().get(v, v)

    def as_dict(self) -> dict:
        d = self.__dict__.get("_d")
        if d is None:
            d = dict(self.pairs)
            object.__setattr__(self, "_d", d)
        return d

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.pairs)

    def is_identity(self) -> bool:
        return not self.pairs

    def inverse(self) -> "VertexPermutation":
        return VertexPermutation(tuple(sorted((w, v) for v, w in self.pairs)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, sorted."""
        d = self.as_dict()
        seen = set()
        out = []
        for v, _ in self.pairs:
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = d[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = d[w]
            out.append(tuple(cyc))
        return sorted(out)

    def restrict(self, vertices) -> dict:
        return {v: self(v) for v in vertices}

    def __str__(self):
        if not self.pairs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def identity() -> VertexPermutation:
    return VertexPermutation(())


def compose(a: VertexPermutation, b: VertexPermutation) -> VertexPermutation:
    """``a o b``: apply ``b`` first, then ``a``."""
    da, db = a.as_dict(), b.as_dict()
    pts = set(da) | set(db)
    return VertexPermutation.from_mapping({v: da.get(db.get(v, v), db.get(v, v)) for v in pts})


def compose_all(perms: Iterable[VertexPermutation]) -> VertexPermutation:
    out = identity()
    for p in perms:
        out = compose(out, p)
    return out


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


def parity(p: VertexPermutation) -> Parity:
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return Parity(transpositions % 2)


# ---------------------------------------------------------- descriptors

class Kind(enum.Enum):
    CYCLIC = "Cyclic"
    ALTERNATING = "Alt"
    SYMMETRIC = "Sym"


@dataclass(frozen=True)
class Factor:
    kind: Kind
    support: tuple  # CYCLIC: generating rotation order; otherwise sorted

    def order(self) -> int:
        m = len(self.support)
        if self.kind is Kind.CYCLIC:
            return m
        if self.kind is Kind.SYMMETRIC:
            return factorial(m)
        return factorial(m) // 2

    def __str__(self):
        if self.kind is Kind.CYCLIC:
            return "Cyclic[" + ">".join(map(str, self.support)) + "]"
        return f"{self.kind.value}{{" + ",".join(map(str, self.support)) + "}"


@dataclass(frozen=True)
class GroupDescriptor:
    """Direct product of cyclic/alternating/symmetric factors on disjoint vertex
    sets, trivial on ``fixed``, times the full symmetric group on ``empty_support``."""

    factors: tuple
    fixed: frozenset
    empty_support: frozenset

    @classmethod
    def build(cls, factors, fixed, empty_support) -> "GroupDescriptor":
        fixed = set(fixed)
        kept = []
        for f in factors:
            small = (f.kind is Kind.CYCLIC and len(f.support) < 3) or \
                (f.kind is Kind.SYMMETRIC and len(f.support) < 2) or \
                (f.kind is Kind.ALTERNATING and len(f.support) < 3)
            if small:
                fixed.update(f.support)
            else:
                kept.append(f)
        kept.sort(key=lambda f: min(f.support))
        d = cls(tuple(kept), frozenset(fixed), frozenset(empty_support))
        d._check()
        return d

    def _check(self):
        seen: set[int] = set()
        for part in [f.support for f in self.factors] + [self.fixed, self.empty_support]:
            part = set(part)
            if seen & part:
                raise ValueError(f"descriptor parts overlap on {sorted(seen & part)}")
            seen |= part

    @property
    def vertices(self) -> frozenset:
        out = set(self.fixed) | set(self.empty_support)
        for f in self.factors:
            out.update(f.support)
        return frozenset(out)

    def label_order(self) -> int:
        """Order of the action on occupied vertices (the empty-vertex factor divided out)."""
        out = 1
        for f in self.factors:
            out *= f.order()
        return out

    def __str__(self):
        parts = [str(f) for f in self.factors]
        if self.empty_support:
            parts.append("Sym{∅:" + ",".join(map(str, sorted(self.empty_support))) + "}")
        return " * ".join(parts) if parts else "Id"


def order(d: GroupDescriptor) -> int:
    return d.label_order() * factorial(len(d.empty_support))


def contains(d: GroupDescriptor, p: VertexPermutation) -> bool:
    if not p.support <= d.vertices:
        return False
    if any(p(v) != v for v in d.fixed):
        return False
    if {p(v) for v in d.empty_support} != set(d.empty_support):
        return False
    for f in d.factors:
        sup = f.support
        if {p(v) for v in sup} != set(sup):
            return False
        if f.kind is Kind.CYCLIC:
            r = len(sup)
            pos = {v: i for i, v in enumerate(sup)}
            shift = (pos[p(sup[0])] - 0) % r
            if any(pos[p(v)] != (pos[v] + shift) % r for v in sup):
                return False
        elif f.kind is Kind.ALTERNATING:
            part = VertexPermutation.from_mapping({v: p(v) for v in sup})
            if parity(part) is not Parity.EVEN:
                return False
    return True


def orbits(d: GroupDescriptor) -> list[frozenset]:
    out = [frozenset(f.support) for f in d.factors]
    out.extend(frozenset([v]) for v in d.fixed)
    if d.empty_support:
        out.append(d.empty_support)
    return sorted(out, key=min)
