"""Seeds, cluster A- and X-mutations, the p map, seed isomorphisms, the
coordinate-inverting involution, and replayable transformation plans.

All values are exact rational functions; assignments are immutable and
every operation returns a new object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    FrozenVertex,
    NotSeedIsomorphism,
    SeedMismatch,
    UnknownVertex,
)
from .exactalg import RatFunc


class Seed:
    """A finite vertex set with a skew-symmetric integer exchange matrix,
    plus a frozen subset that rejects mutation."""

    __slots__ = ("vertices", "frozen", "_eps")

    def __init__(self, vertices, eps: Mapping[tuple[int, int], int], frozen=()):
        self.vertices: tuple[int, ...] = tuple(sorted(vertices))
        self.frozen: frozenset[int] = frozenset(frozen)
        vset = set(self.vertices)
        if not self.frozen <= vset:
            raise UnknownVertex(f"frozen vertices {self.frozen - vset} not in seed")
        table: dict[tuple[int, int], int] = {}
        for (i, j), v in eps.items():
            if not v:
                continue
            if i not in vset or j not in vset:
                raise UnknownVertex(f"exchange entry ({i},{j}) references unknown vertex")
            table[(i, j)] = table.get((i, j), 0) + v
        for (i, j), v in table.items():
            if table.get((j, i), 0) != -v or i == j:
                raise ValueError(f"exchange matrix is not skew-symmetric at ({i},{j})")
        self._eps = {k: v for k, v in table.items() if v}

    def eps(self, i: int, j: int) -> int:
        return self._eps.get((i, j), 0)

    def eps_items(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted((i, j, v) for (i, j), v in self._eps.items()))

    def arrows(self) -> tuple[tuple[int, int, int], ...]:
        """Positive-direction arrows (i, j, multiplicity) with eps_ij > 0."""
        return tuple(sorted((i, j, v) for (i, j), v in self._eps.items() if v > 0))

    def restrict(self, keep) -> Seed:
        keep = set(keep)
        eps = {(i, j): v for (i, j), v in self._eps.items() if i in keep and j in keep}
        return Seed(keep, eps, self.frozen & keep)

    def negated(self) -> Seed:
        return Seed(self.vertices, {k: -v for k, v in self._eps.items()}, self.frozen)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Seed)
                and self.vertices == other.vertices
                and self.frozen == other.frozen
                and self._eps == other._eps)

    def __repr__(self) -> str:
        return f"Seed(vertices={self.vertices}, frozen={sorted(self.frozen)}, arrows={self.arrows()})"


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Matrix mutation at an unfrozen vertex k; involutive and
    skew-symmetry preserving."""
    if k not in set(seed.vertices):
        raise UnknownVertex(f"vertex {k} not in seed")
    if k in seed.frozen:
        raise FrozenVertex(f"vertex {k} is frozen")
    eps: dict[tuple[int, int], int] = {}
    for i in seed.vertices:
        for j in seed.vertices:
            if i == j:
                continue
            v = seed.eps(i, j)
            if k in (i, j):
                nv = -v
            else:
                a, b = seed.eps(i, k), seed.eps(k, j)
                nv = v + abs(a) * b if a * b > 0 else v
            if nv:
                eps[(i, j)] = nv
    return Seed(seed.vertices, eps, seed.frozen)


@dataclass(frozen=True)
class ClusterAssignment:
    """Per-vertex symbolic coordinates of one kind ("A" or "X") on a seed."""

    seed: Seed
    kind: str
    values: Mapping[int, RatFunc]

    def __post_init__(self):
        if self.kind not in ("A", "X"):
            raise ValueError(f"kind must be 'A' or 'X', got {self.kind!r}")
        if set(self.values) != set(self.seed.vertices):
            raise UnknownVertex("assignment domain differs from the seed's vertex set")
        object.__setattr__(self, "values", dict(self.values))

    def value(self, i: int) -> RatFunc:
        return self.values[i]

    def restrict(self, keep) -> ClusterAssignment:
        keep = set(keep)
        return ClusterAssignment(self.seed.restrict(keep), self.kind,
                                 {i: v for i, v in self.values.items() if i in keep})


def mutate_A(a: ClusterAssignment, k: int) -> ClusterAssignment:
    """Cluster A-mutation: the exchange relation replaces A_k by
    (prod of A_j over arrows out of k + prod over arrows into k) / A_k."""
    if a.kind != "A":
        raise ValueError("mutate_A needs an A-type assignment")
    seed = a.seed
    if k not in set(seed.vertices):
        raise UnknownVertex(f"vertex {k} not in seed")
    if k in seed.frozen:
        raise FrozenVertex(f"vertex {k} is frozen")
    plus = RatFunc.one()
    minus = RatFunc.one()
    for j in seed.vertices:
        e = seed.eps(k, j)
        if e > 0:
            plus = plus * a.values[j] ** e
        elif e < 0:
            minus = minus * a.values[j] ** (-e)
    values = dict(a.values)
    values[k] = (plus + minus) / a.values[k]
    return ClusterAssignment(mutate_seed(seed, k), "A", values)


def mutate_X(x: ClusterAssignment, k: int) -> ClusterAssignment:
    """Cluster X-mutation: X_k inverts, every neighbor picks up the factor
    (1 + X_k^{-sign eps_ik})^{-eps_ik}."""
    if x.kind != "X":
        raise ValueError("mutate_X needs an X-type assignment")
    seed = x.seed
    if k not in set(seed.vertices):
        raise UnknownVertex(f"vertex {k} not in seed")
    if k in seed.frozen:
        raise FrozenVertex(f"vertex {k} is frozen")
    xk = x.values[k]
    values: dict[int, RatFunc] = {}
    one = RatFunc.one()
    for i in seed.vertices:
        if i == k:
            values[i] = xk.inverse()
            continue
        e = seed.eps(i, k)
        if e == 0:
            values[i] = x.values[i]
        else:
            sign = 1 if e > 0 else -1
            values[i] = x.values[i] * (one + xk ** (-sign)) ** (-e)
    return ClusterAssignment(mutate_seed(seed, k), "X", values)


def p_map(a: ClusterAssignment) -> ClusterAssignment:
    """The monomial map from A- to X-coordinates on the same seed:
    X_i = prod_j A_j^{eps_ij}."""
    if a.kind != "A":
        raise ValueError("p_map needs an A-type assignment")
    seed = a.seed
    values: dict[int, RatFunc] = {}
    for i in seed.vertices:
        acc = RatFunc.one()
        for j in seed.vertices:
            e = seed.eps(i, j)
            if e:
                acc = acc * a.values[j] ** e
        values[i] = acc
    return ClusterAssignment(seed, "X", values)


def iso_seed(seed: Seed, sigma: Mapping[int, int]) -> Seed:
    """Relabel a seed's vertices along a bijection."""
    vset = set(seed.vertices)
    if set(sigma) != vset or len(set(sigma.values())) != len(vset):
        raise NotSeedIsomorphism("sigma is not a bijection on the vertex set")
    eps = {(sigma[i], sigma[j]): v for (i, j), v in
           ((key, seed.eps(*key)) for key in [(i, j) for i in seed.vertices for j in seed.vertices if i != j])
           if v}
    return Seed([sigma[i] for i in seed.vertices], eps, [sigma[i] for i in seed.frozen])


def apply_iso(x: ClusterAssignment, sigma: Mapping[int, int],
              target: Seed | None = None) -> ClusterAssignment:
    """Relabel an assignment along a seed isomorphism; the value at i
    moves to sigma(i).  If ``target`` is given, the relabeled seed must
    equal it exactly."""
    relabeled = iso_seed(x.seed, sigma)
    if target is not None and relabeled != target:
        raise NotSeedIsomorphism("sigma does not carry the seed onto the target")
    values = {sigma[i]: v for i, v in x.values.items()}
    return ClusterAssignment(relabeled, x.kind, values)


def x_involution(x: ClusterAssignment) -> ClusterAssignment:
    """The coordinate-inverting involution: every X inverts and the seed's
    exchange matrix negates."""
    if x.kind != "X":
        raise ValueError("x_involution needs an X-type assignment")
    return ClusterAssignment(x.seed.negated(), "X",
                             {i: v.inverse() for i, v in x.values.items()})


@dataclass(frozen=True)
class TransformationPlan:
    """An ordered list of mutations and seed isomorphisms, replayable on
    any assignment whose seed matches ``source``."""

    steps: tuple
    source: Seed
    target: Seed

    def mutation_count(self) -> int:
        return sum(1 for s in self.steps if s[0] == "mutate")

    def to_obj(self) -> list:
        out = []
        for step in self.steps:
            if step[0] == "mutate":
                out.append({"mutate": step[1]})
            else:
                out.append({"iso": {str(a): b for a, b in sorted(dict(step[1]).items())}})
        return out


def run_plan(x: ClusterAssignment, plan: TransformationPlan) -> ClusterAssignment:
    """Fold a plan's steps over an assignment, left to right."""
    if x.seed != plan.source:
        raise SeedMismatch("assignment seed differs from the plan's source seed")
    cur = x
    for step in plan.steps:
        if step[0] == "mutate":
            cur = mutate_X(cur, step[1]) if cur.kind == "X" else mutate_A(cur, step[1])
        elif step[0] == "iso":
            cur = apply_iso(cur, dict(step[1]))
        else:
            raise ValueError(f"unknown plan step {step!r}")
    if cur.seed != plan.target:
        raise SeedMismatch("plan did not land on its declared target seed")
    return cur
