"""The Donaldson-Thomas pipeline on double Bruhat cells: amalgamation,
face minors, the induced X-coordinates, the Gaussian-decomposition
closed form, equivalence modulo diagonal scaling, the tilting mutation
plan, and the tropical degree certificate.

Three independent realizations of the same transformation live here:

* ``dt_pullback`` runs the coordinate pipeline (amalgamate, take face
  minors, push through the monomial map);
* ``dt_closed_form`` evaluates the one-line group formula;
* ``plan_dt_sequence`` realizes it as cluster mutations plus one final
  seed isomorphism.

Disagreement between routes is a hard failure, never reconciled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import cluster
from .cluster import ClusterAssignment, Seed, TransformationPlan
from .errors import (
    InapplicableMove,
    NonGenericPoint,
    PlanVerificationFailed,
    SingularMatrix,
    ZeroFaceValue,
)
from .exactalg import (
    LaurentPoly,
    RatFunc,
    RFMatrix,
    gauss_decompose,
    generator,
    lift_weyl,
    top_degree,
)
from .plabic import BipartiteGraph, build_graph
from .weyl import (
    BRAID,
    MIXED_SWAP,
    SAME_INDEX_SWAP,
    SignedWord,
    WordMove,
    apply_move,
)


def _graph_of(word_or_graph) -> BipartiteGraph:
    if isinstance(word_or_graph, BipartiteGraph):
        return word_or_graph
    return build_graph(word_or_graph)


def symbolic_values(g: BipartiteGraph, boundary_one: bool = True) -> dict[int, RatFunc]:
    """Face values X_f as fresh symbols; boundary faces pinned to 1 when
    ``boundary_one`` (the cheap lift from the double quotient)."""
    out: dict[int, RatFunc] = {}
    for f in g.faces:
        if boundary_one and f.boundary:
            out[f.id] = RatFunc.one()
        else:
            out[f.id] = RatFunc.var(f.id)
    return out


def factor_sequence(g: BipartiteGraph) -> tuple[tuple, ...]:
    """The amalgamation factors in canonical left-to-right order: the
    leading diagonal factor of every spacing, then per column its edge
    factor followed by the next diagonal factor of that spacing."""
    factors: list[tuple] = [("h", s, g.face_id(s, 0)) for s in range(g.n + 1)]
    counters = {s: 0 for s in range(g.n + 1)}
    for p, s, positive, _ in g.columns:
        factors.append(("e", s if positive else -s))
        counters[s] += 1
        factors.append(("h", s, g.face_id(s, counters[s])))
    return tuple(factors)


def amalgamate(word, values: Mapping[int, RatFunc | int | Fraction],
               order: tuple[tuple, ...] | None = None) -> RFMatrix:
    """The ordered product of diagonal factors h^s(X_f) and elementary
    factors e_{+-s} read off the wire diagram.  ``order`` overrides the
    factor sequence (used to exercise well-definedness; any order that
    respects each spacing's internal sequence gives the same matrix).
    """
    g = _graph_of(word)
    vals = {fid: RatFunc.const(v) if not isinstance(v, RatFunc) else v
            for fid, v in values.items()}
    for f in g.faces:
        if f.id not in vals:
            raise ZeroFaceValue(f"face {f.id} has no value")
        if vals[f.id].is_zero():
            raise ZeroFaceValue(f"face {f.id} has value zero")
    out = RFMatrix.identity(g.n)
    for factor in (order if order is not None else factor_sequence(g)):
        if factor[0] == "h":
            _, s, fid = factor
            if s == 0:
                continue
            out = out @ generator("h", s, g.n, vals[fid])
        else:
            _, letter = factor
            kind = "e_plus" if letter > 0 else "e_minus"
            out = out @ generator(kind, abs(letter), g.n)
    return out


def face_minors(word, x: RFMatrix) -> ClusterAssignment:
    """A-type coordinates: the minor of x cut out by each face's
    dominating sets.  Raises NonGenericPoint naming the first face whose
    minor vanishes."""
    g = _graph_of(word)
    values: dict[int, RatFunc] = {}
    for f in g.faces:
        m = x.minor(f.I, f.J)
        if m.is_zero():
            raise NonGenericPoint(f.id)
        values[f.id] = m
    return ClusterAssignment(g.seed_full(), "A", values)


def x_coords(word, x: RFMatrix) -> ClusterAssignment:
    """X-type coordinates on the boundary-removed quiver: push the face
    minors through the monomial map and drop the boundary faces."""
    g = _graph_of(word)
    a = face_minors(g, x)
    full = cluster.p_map(a)
    return full.restrict(g.interior_ids)


def dt_closed_form(word, x: RFMatrix) -> RFMatrix:
    """The one-line realization of the transformation on the cell:
    ([ubar^-1 x]_-^-1  ubar^-1 x vibar  [x vibar]_+^-1)^t  with
    ubar the lift of u and vibar the lift of v^-1."""
    g = _graph_of(word)
    u, v = g.word.pair()
    ubar_inv = lift_weyl(u).inverse()
    vibar = lift_weyl(v.inverse())
    g1 = ubar_inv @ x
    g2 = x @ vibar
    l1, _, _ = gauss_decompose(g1)
    _, _, u2 = gauss_decompose(g2)
    middle = ubar_inv @ x @ vibar
    return (l1.inverse() @ middle @ u2.inverse()).transpose()


def equal_up_to_diagonals(m1: RFMatrix, m2: RFMatrix) -> bool:
    """Whether m1 = D m2 D' for some invertible diagonal D, D'.  Decided
    by zero-pattern equality plus cross-ratio consistency over all index
    quadruples with nonzero entries."""
    if m1.n != m2.n:
        return False
    if not m1.is_invertible() or not m2.is_invertible():
        raise SingularMatrix("equivalence test needs invertible matrices")
    n = m1.n
    z1 = [[m1.rows[i][j].is_zero() for j in range(n)] for i in range(n)]
    z2 = [[m2.rows[i][j].is_zero() for j in range(n)] for i in range(n)]
    if z1 != z2:
        return False
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                for l in range(j + 1, n):
                    if z1[i][j] or z1[k][l] or z1[i][l] or z1[k][j]:
                        continue
                    lhs = m1.rows[i][j] * m1.rows[k][l] * m2.rows[i][l] * m2.rows[k][j]
                    rhs = m1.rows[i][l] * m1.rows[k][j] * m2.rows[i][j] * m2.rows[k][l]
                    if lhs != rhs:
                        return False
    return True


@dataclass(frozen=True)
class CellPoint:
    """A point of a double Bruhat cell carried with its word."""

    word: SignedWord
    matrix: RFMatrix

    def validate(self) -> None:
        face_minors(self.word, self.matrix)


_ATOM_BASE = 10 ** 6


def pipeline_alpha(word) -> RFMatrix:
    """The group image of the coordinate pipeline with each face minor
    kept as an opaque atom variable (id = face id + a large offset).
    Substituting the atoms by the actual minors of a cell point x gives
    the matrix the pipeline produces from x; keeping them atomic keeps
    every entry a short Laurent polynomial."""
    g = _graph_of(word)
    seed = g.seed_full()
    vals: dict[int, RatFunc] = {}
    for f in g.faces:
        exps = {_ATOM_BASE + h: seed.eps(f.id, h)
                for h in seed.vertices if seed.eps(f.id, h)}
        vals[f.id] = RatFunc(LaurentPoly.monomial(exps))
    return amalgamate(g, vals)


def closed_form_matches_pipeline(word, x: RFMatrix | None = None) -> bool:
    """Whether the closed form agrees with the coordinate pipeline modulo
    diagonal scaling on both sides, at the cell point x (default: the
    fully symbolic amalgamation point).  Cross-ratio identities are
    verified exactly, expanding minor products only inside each factored
    comparison."""
    g = _graph_of(word)
    if x is None:
        x = amalgamate(g, symbolic_values(g, boundary_one=False))
    cf = dt_closed_form(g, x)
    alpha = pipeline_alpha(g)
    atoms = {_ATOM_BASE + fid: v for fid, v in face_minors(g, x).values.items()}
    n = g.n
    z1 = [[cf.rows[i][j].is_zero() for j in range(n)] for i in range(n)]
    z2 = [[alpha.rows[i][j].is_zero() for j in range(n)] for i in range(n)]
    if z1 != z2:
        return False
    cache: dict = {}
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                for l in range(j + 1, n):
                    if z1[i][j] or z1[k][l] or z1[i][l] or z1[k][j]:
                        continue
                    a = (alpha.rows[i][j] * alpha.rows[k][l]).substitute(atoms, cache)
                    b = (alpha.rows[i][l] * alpha.rows[k][j]).substitute(atoms, cache)
                    c = cf.rows[i][j] * cf.rows[k][l]
                    d = cf.rows[i][l] * cf.rows[k][j]
                    if a * d != b * c:
                        return False
    return True


# ----------------------------------------------------------------------
# The transformation as a coordinate pullback, and its tropical shadow


def dt_pullback(word) -> dict[int, RatFunc]:
    """The transformation's pullback on X-coordinates: amalgamate symbolic
    interior face values (boundary pinned to 1) and read the resulting
    X-coordinates back off the matrix."""
    g = _graph_of(word)
    x = amalgamate(g, symbolic_values(g))
    return dict(x_coords(g, x).values)


@dataclass(frozen=True)
class DegreeMatrix:
    """Integer matrix deg_{X_f} T*(X_g) over the interior faces; rows are
    indexed by g, columns by f."""

    ids: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def is_minus_identity(self) -> bool:
        return all(e == (-1 if i == j else 0)
                   for i, row in enumerate(self.entries)
                   for j, e in enumerate(row))

    def to_obj(self) -> dict:
        return {"ids": list(self.ids), "entries": [list(r) for r in self.entries]}


def tropical_dt_check(word) -> DegreeMatrix:
    """Degrees deg_{X_f} of each pulled-back coordinate, computed
    additively from the face minors (degree is additive on products, so
    no expanded product is ever formed)."""
    g = _graph_of(word)
    x = amalgamate(g, symbolic_values(g))
    minors = face_minors(g, x)
    seed = g.seed_full()
    ids = g.interior_ids
    deg: dict[tuple[int, int], int] = {}
    for h in seed.vertices:
        mh = minors.values[h]
        for f in ids:
            deg[(h, f)] = top_degree(mh, f)
    entries = []
    for gv in ids:
        row = []
        for f in ids:
            row.append(sum(seed.eps(gv, h) * deg[(h, f)] for h in seed.vertices))
        entries.append(tuple(row))
    return DegreeMatrix(ids, tuple(entries))


# ----------------------------------------------------------------------
# Scaling invariance helper


def scaled_symbolically(word) -> tuple[ClusterAssignment, ClusterAssignment]:
    """X-coordinates of x and of D x D' with fresh symbolic diagonal
    entries; the two must agree (constancy along the torus fibers)."""
    g = _graph_of(word)
    base = max(f.id for f in g.faces) + 1
    x = amalgamate(g, symbolic_values(g, boundary_one=False))
    d_left = RFMatrix.diagonal([RatFunc.var(base + i) for i in range(g.n)])
    d_right = RFMatrix.diagonal([RatFunc.var(base + g.n + i) for i in range(g.n)])
    return x_coords(g, x), x_coords(g, d_left @ x @ d_right)


# ----------------------------------------------------------------------
# Word-move commuting diagrams


def _braid_data(word: SignedWord, move: WordMove):
    """Face bookkeeping for a braid rewrite: the mutated face in the old
    graph, its image in the new graph, and the full face bijection."""
    p = move.position
    letters = word.letters
    a, b = letters[p], letters[p + 1]
    sa, sb = abs(a), abs(b)
    ka = sum(1 for q in range(p) if abs(letters[q]) == sa)
    kb = sum(1 for q in range(p) if abs(letters[q]) == sb)
    g_old = build_graph(word)
    g_new = build_graph(apply_move(word, move))
    f0 = g_old.face_id(sa, ka + 1)
    f0_new = g_new.face_id(sb, kb + 1)
    sigma: dict[int, int] = {}
    for f in g_old.faces:
        s, k = f.spacing, f.index
        if s == sa and k == ka + 1:
            sigma[f.id] = f0_new
        elif s == sa and k >= ka + 2:
            sigma[f.id] = g_new.face_id(s, k - 1)
        elif s == sb and k >= kb + 1:
            sigma[f.id] = g_new.face_id(s, k + 1)
        else:
            sigma[f.id] = g_new.face_id(s, k)
    return g_old, g_new, f0, sigma


def verify_move_diagrams(word: SignedWord, move: WordMove) -> bool:
    """Check that the word move commutes with amalgamation and with the
    face minors: the X-side diagram certifies the elementary matrix
    identities, the A-side diagram the minor exchange relations."""
    w2 = apply_move(word, move)
    if move.kind == MIXED_SWAP:
        g_old, g_new = build_graph(word), build_graph(w2)
        f0, sigma = None, {f.id: f.id for f in g_old.faces}
    elif move.kind == SAME_INDEX_SWAP:
        g_old, g_new = build_graph(word), build_graph(w2)
        p = move.position
        s = abs(word.letters[p])
        k = sum(1 for q in range(p) if abs(word.letters[q]) == s)
        f0 = g_old.face_id(s, k + 1)
        sigma = {f.id: f.id for f in g_old.faces}
    else:
        g_old, g_new, f0, sigma = _braid_data(word, move)

    # seed side: the new quiver is the (relabeled) mutation of the old one
    seed_old = g_old.seed_full()
    seed_target = g_new.seed_full()
    seed_moved = cluster.mutate_seed(seed_old, f0) if f0 is not None else seed_old
    if cluster.iso_seed(seed_moved, sigma) != seed_target:
        return False

    # X side: amalgamation matrices agree after the mutation
    x_old = ClusterAssignment(seed_old, "X", symbolic_values(g_old, boundary_one=False))
    x_moved = cluster.mutate_X(x_old, f0) if f0 is not None else x_old
    x_new = cluster.apply_iso(x_moved, sigma, target=seed_target)
    if amalgamate(g_new, dict(x_new.values)) != amalgamate(g_old, dict(x_old.values)):
        return False

    # A side: face minors of a generic cell point satisfy the exchange
    x_pt = amalgamate(g_old, symbolic_values(g_old, boundary_one=False))
    a_old = face_minors(g_old, x_pt)
    a_moved = cluster.mutate_A(a_old, f0) if f0 is not None else a_old
    a_new = cluster.apply_iso(a_moved, sigma, target=seed_target)
    if dict(a_new.values) != dict(face_minors(g_new, x_pt).values):
        return False
    return True


# ----------------------------------------------------------------------
# The tilting realization as a mutation plan


def _split_by_free_moves(letters: list[int]) -> list[int]:
    """Bubble every negative letter to the front using distinct-index
    swaps only; raises when a same-index pair blocks the way."""
    out = list(letters)
    for i in range(1, len(out)):
        j = i
        while j > 0 and out[j] < 0 and out[j - 1] > 0:
            if out[j - 1] == -out[j]:
                raise InapplicableMove(
                    "word cannot be brought to split form by free moves alone")
            out[j - 1], out[j] = out[j], out[j - 1]
            j -= 1
    return out


def plan_dt_sequence(word: SignedWord, verify: str = "symbolic",
                     seed: int = 20201,
                     specializations: int = 3) -> TransformationPlan:
    """The mutation-sequence realization: flip each negative letter at the
    front and bubble it right past the remaining negatives, then flip each
    positive letter at the back and bubble it left past the positives;
    same-index swaps mutate at the face between the two columns, and one
    final transposition isomorphism closes the loop.

    ``verify`` is "symbolic", "specialize", or "none".
    """
    g0 = build_graph(word)
    seed0 = g0.seed_reduced()
    work = _split_by_free_moves(list(word.letters))
    m = sum(1 for l in work if l < 0)
    l = len(work) - m
    counts = g0.spacing_counts()
    steps: list[tuple] = []

    def mutate_at(spacing: int, rank: int) -> None:
        steps.append(("mutate", g0.face_id(spacing, rank)))

    for _ in range(m):
        assert work[0] < 0
        work[0] = -work[0]
        q = 0
        while q + 1 < len(work) and work[q + 1] < 0:
            s, t = work[q], -work[q + 1]
            if s == t:
                mutate_at(s, sum(1 for p in range(q) if abs(work[p]) == s) + 1)
            work[q], work[q + 1] = work[q + 1], work[q]
            q += 1
    for _ in range(l):
        assert work[-1] > 0
        work[-1] = -work[-1]
        q = len(work) - 1
        while q - 1 >= 0 and work[q - 1] > 0:
            s, t = -work[q], work[q - 1]
            if s == t:
                mutate_at(s, sum(1 for p in range(q - 1) if abs(work[p]) == s) + 1)
            work[q - 1], work[q] = work[q], work[q - 1]
            q -= 1

    expected_final = [-x for x in reversed(_split_by_free_moves(list(word.letters)))]
    if work != expected_final:
        raise PlanVerificationFailed(f"bubbling ended on {work}, expected {expected_final}")

    # transposition: reverse the word and negate every letter (a left-right
    # mirror plus color swap); spacings persist, so face (s, k) of the final
    # word lands on face (s, c_s - k) of the initial one
    sigma: dict[int, int] = {}
    for fid in g0.interior_ids:
        f = g0.faces[fid]
        sigma[fid] = g0.face_id(f.spacing, counts[f.spacing] - f.index)
    steps.append(("iso", tuple(sorted(sigma.items()))))

    plan = TransformationPlan(tuple(steps), seed0, seed0)
    if verify != "none":
        _verify_plan(g0, plan, verify, seed, specializations)
    return plan


def _verify_plan(g0: BipartiteGraph, plan: TransformationPlan, mode: str,
                 seed: int, specializations: int) -> None:
    expected = dt_pullback(g0)
    seed0 = g0.seed_reduced()
    sym = ClusterAssignment(seed0, "X", {fid: RatFunc.var(fid) for fid in seed0.vertices})
    if mode == "symbolic":
        try:
            got = cluster.run_plan(sym, plan)
        except Exception as exc:  # seed mismatch, frozen vertex, bad iso
            raise PlanVerificationFailed(str(exc)) from exc
        for fid in seed0.vertices:
            if got.values[fid] != expected[fid]:
                raise PlanVerificationFailed(f"coordinate {fid} disagrees with the pullback")
    elif mode == "specialize":
        rng = random.Random(seed)
        for _ in range(specializations):
            point = {fid: Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
                     for fid in seed0.vertices}
            numeric = ClusterAssignment(
                seed0, "X", {fid: RatFunc.const(point[fid]) for fid in seed0.vertices})
            try:
                got = cluster.run_plan(numeric, plan)
            except Exception as exc:
                raise PlanVerificationFailed(str(exc)) from exc
            for fid in seed0.vertices:
                want = expected[fid].eval_fraction(point)
                have = got.values[fid].eval_fraction({})
                if want != have:
                    raise PlanVerificationFailed(
                        f"coordinate {fid} disagrees with the pullback at {point}")
    else:
        raise ValueError(f"unknown verification mode {mode!r}")


# ----------------------------------------------------------------------
# The inverting involution composed with the transformation


def twist_pullback(word) -> dict[int, RatFunc]:
    """Pullback of the composite (transform, then invert coordinates):
    the opposite-seed coordinate X_g pulls back to 1 / T*(X_g)."""
    return {fid: v.inverse() for fid, v in dt_pullback(word).items()}


def _mirror_map(g: BipartiteGraph, g_op: BipartiteGraph) -> dict[int, int]:
    """Face bijection between a word's diagram and its reversal's:
    (s, k) maps to (s, c_s - k)."""
    counts = g.spacing_counts()
    return {f.id: g_op.face_id(f.spacing, counts[f.spacing] - f.index)
            for f in g.faces}


def twist_squared_is_identity(word, symbolic: bool = True, seed: int = 811,
                              specializations: int = 3) -> bool:
    """Whether the inverting twist is an involution.  The twist lands in
    the opposite seed's chart, so its second leg is the opposite word's
    transformation transported back along the mirror face bijection."""
    g = _graph_of(word)
    g_op = build_graph(g.word.opposite())
    mirror = _mirror_map(g, g_op)
    ids = list(g.interior_ids)
    first = dt_pullback(g)
    back = {v: k for k, v in mirror.items()}
    second = {fid: dt_pullback(g_op)[mirror[fid]].rename(back) for fid in ids}
    # involution <=> second_g evaluated at (X_f -> 1/first_f) equals 1/X_g
    sub = {fid: first[fid].inverse() for fid in ids}
    if symbolic:
        cache: dict = {}
        for fid in ids:
            if second[fid].substitute(sub, cache) != RatFunc.var(fid).inverse():
                return False
        return True
    rng = random.Random(seed)
    for _ in range(specializations):
        point = {fid: Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
                 for fid in ids}
        mid = {fid: Fraction(1) / first[fid].eval_fraction(point) for fid in ids}
        for fid in ids:
            if second[fid].eval_fraction(mid) * point[fid] != 1:
                return False
    return True
