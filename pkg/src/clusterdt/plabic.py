"""Bipartite wire diagrams built from signed words: faces with their
dominating sets, zig-zag strands, the two quivers (with and without
boundary faces), the perfect orientation, and path-family sums.

The geometry is purely combinatorial: a graph is a sequence of columns
interleaved with wire segments, and faces are identified by
(spacing, index).  Face ids number the faces in (spacing, index) order,
so they double as variable identifiers for the exact algebra layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cluster import Seed
from .errors import NotGreedyWord
from .exactalg import LaurentPoly
from .weyl import SignedWord

_ANGLE = {"E": 0, "N": 90, "W": 180, "S": 270}


@dataclass
class _Vtx:
    """One graph vertex on a wire; 2-valent unless it ends a column."""

    wire: int
    x: Fraction
    color: str                      # "b" | "w"
    vid: int = -1
    column: int | None = None       # word position, for column endpoints
    vert: "_Vtx | None" = None
    vert_ray: str | None = None     # "N" or "S"
    west: "_Vtx | None" = None
    east: "_Vtx | None" = None

    def rays(self) -> list[str]:
        out = ["E", "W"]
        if self.vert_ray:
            out.append(self.vert_ray)
        return out


def _next_ray(rays: list[str], incoming: str, ccw: bool) -> str:
    angles = sorted(_ANGLE[r] for r in rays)
    a = _ANGLE[incoming]
    if ccw:
        bigger = [b for b in angles if b > a]
        pick = bigger[0] if bigger else angles[0]
    else:
        smaller = [b for b in angles if b < a]
        pick = smaller[-1] if smaller else angles[-1]
    return {v: k for k, v in _ANGLE.items()}[pick]


@dataclass(frozen=True)
class Face:
    """A face of the diagram with its dominating sets.

    ``spacing`` runs 0..n (0 above the top wire, n below the bottom);
    ``index`` counts same-spacing columns to the face's left.  ``I`` and
    ``J`` hold the indices of the right-going and left-going strands
    that dominate the face.
    """

    id: int
    spacing: int
    index: int
    boundary: bool
    left: Fraction | None
    right: Fraction | None
    I: tuple[int, ...]
    J: tuple[int, ...]


@dataclass(frozen=True)
class ZigZag:
    """One zig-zag strand: its starting external edge index, direction,
    and the horizontal stretches (wire, x_from, x_to) it travels."""

    index: int
    direction: str                  # "right" | "left"
    segments: tuple[tuple[int, Fraction, Fraction], ...]

    def dominates(self, face: Face) -> bool:
        for wire, a, b in self.segments:
            if wire <= face.spacing:
                continue
            lo = a if face.left is None else max(a, face.left)
            hi = b if face.right is None else min(b, face.right)
            if lo < hi:
                return False
        return True


@dataclass(frozen=True)
class PathFamily:
    """A family of pairwise vertex-disjoint paths in the perfect
    orientation, with the monomial it contributes."""

    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    segments: tuple[tuple[tuple[int, Fraction, Fraction], ...], ...]
    monomial: LaurentPoly


@dataclass(frozen=True)
class _Path:
    end_wire: int
    segments: tuple[tuple[int, Fraction, Fraction], ...]
    vertex_ids: frozenset[int]
    monomial: LaurentPoly


class BipartiteGraph:
    """The wire diagram of a signed word; immutable after construction."""

    def __init__(self, word: SignedWord):
        self.word = word
        self.n = word.n
        self.letters = word.letters
        self._build_vertices()
        self._build_faces()
        self._trace_strands()
        self._fill_dominating_sets()
        self._build_quiver()
        self._path_cache: dict[int, tuple[_Path, ...]] = {}

    # ------------------------------------------------------------------
    def _build_vertices(self) -> None:
        n, letters = self.n, self.letters
        self.columns = [(p, abs(l), l > 0, Fraction(2 * (p + 1))) for p, l in enumerate(letters)]
        wires: list[list[_Vtx]] = [[] for _ in range(n + 1)]  # index 1..n
        for p, s, positive, x in self.columns:
            top = _Vtx(s, x, "w" if positive else "b", column=p, vert_ray="S")
            bot = _Vtx(s + 1, x, "b" if positive else "w", column=p, vert_ray="N")
            top.vert, bot.vert = bot, top
            wires[s].append(top)
            wires[s + 1].append(bot)
        for w in range(1, n + 1):
            row = sorted(wires[w], key=lambda v: v.x)
            # separate equal-colored neighbors with a 2-valent vertex
            filled: list[_Vtx] = []
            for v in row:
                if filled and filled[-1].color == v.color:
                    mid = (filled[-1].x + v.x) / 2
                    filled.append(_Vtx(w, mid, "w" if v.color == "b" else "b"))
                filled.append(v)
            # each wire end must be white
            if not filled:
                filled = [_Vtx(w, Fraction(1), "w")]
            if filled[0].color == "b":
                filled.insert(0, _Vtx(w, filled[0].x - 1, "w"))
            if filled[-1].color == "b":
                filled.append(_Vtx(w, filled[-1].x + 1, "w"))
            for a, b in zip(filled, filled[1:]):
                a.east, b.west = b, a
            wires[w] = filled
        self.wires = wires
        vid = 0
        for w in range(1, n + 1):
            for v in wires[w]:
                v.vid = vid
                vid += 1
        xs = [v.x for row in wires[1:] for v in row]
        self._xL = min(xs) - 1
        self._xR = max(xs) + 1

    # ------------------------------------------------------------------
    def _build_faces(self) -> None:
        self._spacing_columns: dict[int, list[Fraction]] = {s: [] for s in range(self.n + 1)}
        for _, s, _, x in self.columns:
            self._spacing_columns[s].append(x)
        skeleton: list[tuple[int, int, Fraction | None, Fraction | None]] = []
        for s in range(self.n + 1):
            cols = sorted(self._spacing_columns[s])
            bounds: list[Fraction | None] = [None] + cols + [None]
            for k in range(len(cols) + 1):
                skeleton.append((s, k, bounds[k], bounds[k + 1]))
        self._face_skeleton = skeleton
        self._face_index = {(s, k): fid for fid, (s, k, _, _) in enumerate(skeleton)}

    def face_id(self, spacing: int, index: int) -> int:
        return self._face_index[(spacing, index)]

    def spacing_counts(self) -> dict[int, int]:
        """Number of columns per spacing."""
        return {s: len(cols) for s, cols in self._spacing_columns.items()}

    # ------------------------------------------------------------------
    def _trace_strand(self, start_wire: int, direction: str) -> ZigZag:
        segs: list[tuple[int, Fraction, Fraction]] = []
        if direction == "right":
            cur = self.wires[start_wire][0]
            segs.append((cur.wire, self._xL, cur.x))
            incoming = "W"
        else:
            cur = self.wires[start_wire][-1]
            segs.append((cur.wire, cur.x, self._xR))
            incoming = "E"
        for _ in range(16 * sum(len(r) for r in self.wires[1:]) + 16):
            out = _next_ray(cur.rays(), incoming, ccw=(cur.color == "b"))
            if out == "E":
                nxt = cur.east
                if nxt is None:
                    segs.append((cur.wire, cur.x, self._xR))
                    break
                segs.append((cur.wire, cur.x, nxt.x))
                cur, incoming = nxt, "W"
            elif out == "W":
                nxt = cur.west
                if nxt is None:
                    segs.append((cur.wire, self._xL, cur.x))
                    break
                segs.append((cur.wire, nxt.x, cur.x))
                cur, incoming = nxt, "E"
            else:
                cur, incoming = cur.vert, ("S" if out == "N" else "N")
        else:
            raise RuntimeError("zig-zag strand failed to terminate")
        return ZigZag(start_wire, direction, tuple(segs))

    def _trace_strands(self) -> None:
        rights = [self._trace_strand(i, "right") for i in range(1, self.n + 1)]
        lefts = [self._trace_strand(i, "left") for i in range(1, self.n + 1)]
        self.strands: tuple[ZigZag, ...] = tuple(rights + lefts)

    def _fill_dominating_sets(self) -> None:
        faces: list[Face] = []
        for fid, (s, k, left, right) in enumerate(self._face_skeleton):
            cols = self._spacing_columns[s]
            boundary = (s == 0 or s == self.n or k == 0 or k == len(cols))
            probe = Face(fid, s, k, boundary, left, right, (), ())
            I = tuple(z.index for z in self.strands if z.direction == "right" and z.dominates(probe))
            J = tuple(z.index for z in self.strands if z.direction == "left" and z.dominates(probe))
            faces.append(Face(fid, s, k, boundary, left, right, I, J))
        self.faces: tuple[Face, ...] = tuple(faces)
        self.boundary_ids = tuple(f.id for f in faces if f.boundary)
        self.interior_ids = tuple(f.id for f in faces if not f.boundary)

    # ------------------------------------------------------------------
    def _build_quiver(self) -> None:
        eps: dict[tuple[int, int], int] = {}

        def arrow(a: int, b: int) -> None:
            eps[(a, b)] = eps.get((a, b), 0) + 1
            eps[(b, a)] = eps.get((b, a), 0) - 1

        spacing_rank: dict[int, int] = {}
        counters: dict[int, int] = {s: 0 for s in range(self.n + 1)}
        for p, s, _, _ in self.columns:
            spacing_rank[p] = counters[s]
            counters[s] += 1
        for p, s, positive, x in self.columns:
            k = spacing_rank[p]
            west = self.face_id(s, k)
            east = self.face_id(s, k + 1)
            if positive:
                # black endpoint below, vertical edge points up from it
                below_sp = s + 1
                m = sum(1 for xc in self._spacing_columns[below_sp] if xc < x)
                other = self.face_id(below_sp, m)
                arrow(east, west)
                arrow(west, other)
                arrow(other, east)
            else:
                # black endpoint above, vertical edge hangs down from it
                above_sp = s - 1
                m = sum(1 for xc in self._spacing_columns[above_sp] if xc < x)
                other = self.face_id(above_sp, m)
                arrow(other, west)
                arrow(west, east)
                arrow(east, other)
        self._eps_full = {k: v for k, v in eps.items() if v}

    def seed_full(self) -> Seed:
        """The quiver on all faces, boundary faces frozen."""
        return Seed([f.id for f in self.faces], self._eps_full, self.boundary_ids)

    def seed_reduced(self) -> Seed:
        """The boundary-removed quiver."""
        return self.seed_full().restrict(self.interior_ids)

    # ------------------------------------------------------------------
    # perfect orientation: horizontal edges point east, vertical edges
    # point from the white endpoint to the black endpoint
    def _paths_from(self, source_wire: int) -> tuple[_Path, ...]:
        cached = self._path_cache.get(source_wire)
        if cached is not None:
            return cached
        out: list[_Path] = []
        start = self.wires[source_wire][0]

        def monomial_for(segs: tuple[tuple[int, Fraction, Fraction], ...]) -> LaurentPoly:
            exps: dict[int, int] = {}
            for f in self.faces:
                if ZigZag(0, "right", segs).dominates(f):
                    exps[f.id] = 1
            return LaurentPoly.monomial(exps)

        def walk(v: _Vtx, segs: list, vids: set) -> None:
            vids.add(v.vid)
            if v.color == "w" and v.vert is not None:
                walk(v.vert, list(segs), set(vids))
            if v.east is None:
                full = tuple(segs + [(v.wire, v.x, self._xR)])
                out.append(_Path(v.wire, full, frozenset(vids), monomial_for(full)))
                return
            segs = segs + [(v.wire, v.x, v.east.x)]
            walk(v.east, segs, vids)

        walk(start, [(start.wire, self._xL, start.x)], set())
        result = tuple(out)
        self._path_cache[source_wire] = result
        return result

    def boundary_measurement(self, i: int, j: int) -> LaurentPoly:
        """Sum over directed paths from left wire i to right wire j of the
        product of face variables below the path; equals the (i, j) entry
        of the amalgamation matrix."""
        acc = LaurentPoly.zero()
        for p in self._paths_from(i):
            if p.end_wire == j:
                acc = acc + p.monomial
        return acc

    def _disjoint_families(self, I, J):
        I = tuple(sorted(set(I)))
        J = tuple(sorted(set(J)))
        if len(I) != len(J):
            raise ValueError("source and sink sets must have equal size")
        lists = [tuple(p for p in self._paths_from(i) if p.end_wire == j)
                 for i, j in zip(I, J)]
        found: list[tuple[_Path, ...]] = []

        def rec(r: int, used: frozenset[int], chosen: tuple[_Path, ...]) -> None:
            if r == len(lists):
                found.append(chosen)
                return
            for p in lists[r]:
                if p.vertex_ids & used:
                    continue
                rec(r + 1, used | p.vertex_ids, chosen + (p,))

        rec(0, frozenset(), ())
        return I, J, found

    def lgv_minor(self, I, J) -> LaurentPoly:
        """Sum over families of pairwise vertex-disjoint path systems from
        left wires I to right wires J; all coefficients nonnegative."""
        I, J, families = self._disjoint_families(I, J)
        acc = LaurentPoly.one() if not I else LaurentPoly.zero()
        if not I:
            return acc
        for fam in families:
            mono = LaurentPoly.one()
            for p in fam:
                mono = mono * p.monomial
            acc = acc + mono
        return acc

    def max_path_family(self, I, J) -> PathFamily:
        """The unique disjoint family whose monomial maximizes every face
        degree simultaneously; raises NotGreedyWord when it fails to exist
        or is not unique."""
        I, J, families = self._disjoint_families(I, J)
        if not I:
            return PathFamily((), (), (), LaurentPoly.one())
        if not families:
            raise NotGreedyWord(f"no disjoint family joins {I} to {J}")
        vecs = []
        for fam in families:
            mono = LaurentPoly.one()
            for p in fam:
                mono = mono * p.monomial
            (m, _), = mono.terms.items()
            vecs.append((dict(m), mono, fam))
        face_ids = [f.id for f in self.faces]
        best = None
        for vec, mono, fam in vecs:
            if all(vec.get(g, 0) >= other.get(g, 0) for other, _, _ in vecs for g in face_ids):
                if best is not None:
                    raise NotGreedyWord(f"two families attain the maximal degrees for {I} -> {J}")
                best = (vec, mono, fam)
        if best is None:
            raise NotGreedyWord(f"no family dominates every face degree for {I} -> {J}")
        _, mono, fam = best
        return PathFamily(I, J, tuple(p.segments for p in fam), mono)

    # ------------------------------------------------------------------
    def to_obj(self) -> dict:
        def frac(x):
            return None if x is None else str(x)
        return {
            "schema": "clusterdt.graph/1",
            "n": self.n,
            "letters": list(self.letters),
            "faces": [
                {"id": f.id, "spacing": f.spacing, "index": f.index,
                 "boundary": f.boundary, "I": list(f.I), "J": list(f.J)}
                for f in self.faces
            ],
            "strands": [
                {"index": z.index, "direction": z.direction,
                 "segments": [[w, str(a), str(b)] for w, a, b in z.segments]}
                for z in self.strands
            ],
        }

    def quiver_obj(self, boundary_removed: bool = False) -> dict:
        seed = self.seed_reduced() if boundary_removed else self.seed_full()
        return {
            "schema": "clusterdt.quiver/1",
            "n": self.n,
            "letters": list(self.letters),
            "boundary_removed": boundary_removed,
            "vertices": list(seed.vertices),
            "frozen": sorted(seed.frozen),
            "arrows": [[i, j, m] for i, j, m in seed.arrows()],
        }

    def to_dot(self) -> str:
        lines = ["graph wires {", "  rankdir=LR;", "  node [shape=circle];"]
        for w in range(1, self.n + 1):
            for v in self.wires[w]:
                fill = "black" if v.color == "b" else "white"
                lines.append(
                    f'  v{v.vid} [label="", style=filled, fillcolor={fill}, '
                    f'pos="{float(v.x)},{self.n - v.wire}!"];')
        for w in range(1, self.n + 1):
            for v in self.wires[w]:
                if v.east is not None:
                    lines.append(f"  v{v.vid} -- v{v.east.vid};")
                if v.vert_ray == "S":
                    lines.append(f"  v{v.vid} -- v{v.vert.vid};")
        lines.append("}")
        return "\n".join(lines)

    def quiver_dot(self, boundary_removed: bool = False) -> str:
        seed = self.seed_reduced() if boundary_removed else self.seed_full()
        lines = ["digraph quiver {"]
        for v in seed.vertices:
            shape = "box" if v in seed.frozen else "ellipse"
            lines.append(f'  f{v} [label="X{v}", shape={shape}];')
        for i, j, m in seed.arrows():
            label = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  f{i} -> f{j}{label};")
        lines.append("}")
        return "\n".join(lines)


def build_graph(word: SignedWord) -> BipartiteGraph:
    """Build the wire diagram of a signed word."""
    return BipartiteGraph(word)


def dominating_sets(g: BipartiteGraph) -> dict[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Per-face (I, J) labels."""
    return {f.id: (f.I, f.J) for f in g.faces}


def build_quivers(g: BipartiteGraph) -> tuple[Seed, Seed]:
    """The full quiver (boundary faces frozen) and the boundary-removed one."""
    return g.seed_full(), g.seed_reduced()


def boundary_measurement(g: BipartiteGraph, i: int, j: int) -> LaurentPoly:
    return g.boundary_measurement(i, j)


def lgv_minor(g: BipartiteGraph, I, J) -> LaurentPoly:
    return g.lgv_minor(I, J)


def max_path_family(g: BipartiteGraph, I, J) -> PathFamily:
    return g.max_path_family(I, J)
