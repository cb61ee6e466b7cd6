"""General-position PL drawings in the plane with exact rational coordinates.

Crossing-parity and signed-crossing matrices, the canonical convex drawing,
finger-move generators, and the decision procedure for compatibility
modulo 2 with witness construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    Point,
    DegeneracyError,
    classify_segments,
    crossing_sign,
    strictly_inside_segment,
    winding_number,
)
from .gf2 import BitMatrix, in_affine_span
from .graph import Graph, independent_pairs
from .intmat import IntMatrix


class GeneralPositionError(ValueError):
    pass


class IncompatibleTargetError(ValueError):
    pass


class RealizationError(RuntimeError):
    """Internal bug guard: a constructed drawing failed post-verification."""


class PlanarDrawing:
    """A drawing of a graph: rational vertex points plus per-edge polylines.

    Polylines run from the point of the lower-index endpoint to the
    higher-index one; edge_orientations[i] = +1 keeps that direction for
    signed crossings, -1 reverses it.
    """

    __slots__ = ("graph", "vertex_points", "edge_polylines", "edge_orientations", "_crossings")

    def __init__(self, graph: Graph, vertex_points, edge_polylines, edge_orientations=None):
        self.graph = graph
        self.vertex_points = [(Fraction(x), Fraction(y)) for x, y in vertex_points]
        self.edge_polylines = [[(Fraction(x), Fraction(y)) for x, y in pl] for pl in edge_polylines]
        if edge_orientations is None:
            edge_orientations = [1] * graph.edge_count
        self.edge_orientations = list(edge_orientations)
        if len(self.vertex_points) != graph.vertex_count:
            raise GeneralPositionError("vertex point count mismatch")
        if len(self.edge_polylines) != graph.edge_count:
            raise GeneralPositionError("polyline count mismatch")
        if any(o not in (1, -1) for o in self.edge_orientations):
            raise GeneralPositionError("orientations must be +1/-1")
        self._crossings = None

    def crossings(self):
        """All proper crossings by edge pair; validates general position."""
        if self._crossings is None:
            self._crossings = _compute_crossings(self)
        return self._crossings

    def with_polyline(self, edge: int, polyline) -> "PlanarDrawing":
        pls = [list(pl) for pl in self.edge_polylines]
        pls[edge] = list(polyline)
        return PlanarDrawing(self.graph, self.vertex_points, pls, self.edge_orientations)


def _polyline_segments(pl):
    return [(pl[k], pl[k + 1]) for k in range(len(pl) - 1)]


def _check_polyline_shape(d: PlanarDrawing, i: int):
    u, v = d.graph.edges[i]
    pl = d.edge_polylines[i]
    if len(pl) < 2:
        raise GeneralPositionError(f"edge {i}: polyline too short")
    if pl[0] != d.vertex_points[u] or pl[-1] != d.vertex_points[v]:
        raise GeneralPositionError(f"edge {i}: polyline does not join its endpoints")
    for a, b in _polyline_segments(pl):
        if a == b:
            raise GeneralPositionError(f"edge {i}: zero-length segment")


def _pair_crossings(d: PlanarDrawing, i: int, j: int, point_log=None):
    """Proper crossings of edges i < j, enforcing general position locally.

    Returns a list of (point, sign) with sign relative to stored polyline
    directions.  point_log, when given, maps crossing point -> count for the
    concurrence check.
    """
    g = d.graph
    shared = set(g.edges[i]) & set(g.edges[j])
    shared_pt = d.vertex_points[next(iter(shared))] if shared else None
    pli = d.edge_polylines[i]
    plj = d.edge_polylines[j]
    out = []
    for si, (a, b) in enumerate(_polyline_segments(pli)):
        for sj, (c, e) in enumerate(_polyline_segments(plj)):
            kind, p = classify_segments(a, b, c, e)
            if kind == "none":
                continue
            if kind == "overlap":
                raise GeneralPositionError(
                    f"edges {i},{j}: overlapping segments {si},{sj}"
                )
            if kind == "touch":
                ok = (
                    shared_pt is not None
                    and p == shared_pt
                    and p in (pli[0], pli[-1])
                    and p in (plj[0], plj[-1])
                    and p in (a, b)
                    and p in (c, e)
                )
                if not ok:
                    raise GeneralPositionError(
                        f"edges {i},{j}: non-transversal contact at segments {si},{sj}"
                    )
                continue
            # proper
            sgn = crossing_sign(a, b, c, e)
            out.append((p, sgn))
            if point_log is not None:
                point_log[p] = point_log.get(p, 0) + 1
    return out


def _check_self(d: PlanarDrawing, i: int, point_log):
    pl = d.edge_polylines[i]
    segs = _polyline_segments(pl)
    for si in range(len(segs)):
        for sj in range(si + 1, len(segs)):
            a, b = segs[si]
            c, e = segs[sj]
            kind, p = classify_segments(a, b, c, e)
            if kind == "none":
                continue
            if kind == "overlap":
                raise GeneralPositionError(f"edge {i}: self-overlap")
            if kind == "touch":
                if sj == si + 1 and p == b:
                    continue  # joint of consecutive segments
                raise GeneralPositionError(f"edge {i}: self-tangency")
            point_log[p] = point_log.get(p, 0) + 1


def _check_vertices(d: PlanarDrawing):
    pts = d.vertex_points
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("coincident vertex points")
    for w, p in enumerate(pts):
        for i, pl in enumerate(d.edge_polylines):
            incident = w in d.graph.edges[i]
            for a, b in _polyline_segments(pl):
                if strictly_inside_segment(p, a, b):
                    raise GeneralPositionError(f"vertex {w} inside edge {i}")
            interior_pts = pl[1:-1]
            if p in interior_pts:
                raise GeneralPositionError(f"vertex {w} at a bend of edge {i}")
            if not incident and p in (pl[0], pl[-1]):
                raise GeneralPositionError(f"vertex {w} at endpoint of non-incident edge {i}")


def _compute_crossings(d: PlanarDrawing):
    m = d.graph.edge_count
    for i in range(m):
        _check_polyline_shape(d, i)
    _check_vertices(d)
    point_log: dict[Point, int] = {}
    for i in range(m):
        _check_self(d, i, point_log)
    table = {}
    for i in range(m):
        for j in range(i + 1, m):
            table[(i, j)] = _pair_crossings(d, i, j, point_log)
    for p, cnt in point_log.items():
        if cnt > 1:
            raise GeneralPositionError(f"multiple crossings through one point {p}")
    return table


@dataclass
class ParityMatrix:
    """Symmetric GF(2) matrix over edges; only independent-pair slots matter."""

    graph: Graph
    values: BitMatrix

    def __post_init__(self):
        m = self.graph.edge_count
        if self.values.rows != m or self.values.cols != m:
            raise ValueError("parity matrix must be |E| x |E|")
        if not self.values.is_symmetric():
            raise ValueError("parity matrix must be symmetric")

    def get(self, i: int, j: int) -> int:
        return self.values.get(i, j)

    def pair_vector(self, pairs) -> int:
        """Bits packed in the order of the given independent-pair list."""
        acc = 0
        for k, pr in enumerate(pairs):
            if self.values.get(pr.i, pr.j):
                acc |= 1 << k
        return acc

    @classmethod
    def from_pair_vector(cls, graph: Graph, pairs, vec: int) -> "ParityMatrix":
        m = graph.edge_count
        b = BitMatrix(m, m)
        for k, pr in enumerate(pairs):
            if (vec >> k) & 1:
                b.set(pr.i, pr.j, 1)
                b.set(pr.j, pr.i, 1)
        return cls(graph, b)

    def equal_on_independent_pairs(self, other: "ParityMatrix") -> bool:
        pairs = independent_pairs(self.graph)
        return self.pair_vector(pairs) == other.pair_vector(pairs)


def crossing_parity_matrix(d: PlanarDrawing) -> ParityMatrix:
    g = d.graph
    m = g.edge_count
    b = BitMatrix(m, m)
    table = d.crossings()
    for pr in independent_pairs(g):
        parity = len(table[(pr.i, pr.j)]) & 1
        if parity:
            b.set(pr.i, pr.j, 1)
            b.set(pr.j, pr.i, 1)
    return ParityMatrix(g, b)


def signed_crossing_matrix(d: PlanarDrawing) -> IntMatrix:
    g = d.graph
    m = g.edge_count
    out = IntMatrix(m, m)
    table = d.crossings()
    for pr in independent_pairs(g):
        total = sum(s for _, s in table[(pr.i, pr.j)])
        total *= d.edge_orientations[pr.i] * d.edge_orientations[pr.j]
        out.data[pr.i][pr.j] = total
        out.data[pr.j][pr.i] = -total
    return out


def convex_drawing(g: Graph, order=None, attempt: int = 0) -> PlanarDrawing:
    """Straight-chord drawing with vertices in convex position on a parabola.

    order[k] is the vertex placed at position k along the curve; two chords
    cross exactly when their position pairs interleave, as on a circle.
    Integer coordinates keep the exact geometry fast.  Retries with a
    deterministic perturbation when chords concur.
    """
    n = g.vertex_count
    if order is None:
        order = list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    for k in range(attempt, attempt + 64):
        pts = [None] * n
        for pos, w in enumerate(order):
            x = 101 * pos + (k * (pos * pos + 1)) % 101
            pts[w] = (x, x * x)
        polylines = [[pts[u], pts[v]] for u, v in g.edges]
        d = PlanarDrawing(g, pts, polylines)
        try:
            d.crossings()
            return d
        except GeneralPositionError:
            continue
    raise GeneralPositionError("could not reach general position by perturbation")


def canonical_drawing(g: Graph) -> PlanarDrawing:
    return convex_drawing(g)


def finger_move_labels(g: Graph) -> list[tuple[int, int]]:
    """(edge, vertex) pairs with the vertex not an endpoint of the edge."""
    out = []
    for e in range(g.edge_count):
        ends = set(g.edges[e])
        for v in range(g.vertex_count):
            if v not in ends:
                out.append((e, v))
    return out


def finger_move_generators(g: Graph) -> list[int]:
    """Parity-change vectors over the independent-pair index set.

    Rerouting edge e around vertex v flips the crossing parity with every
    edge incident to v and independent of e.
    """
    pairs = independent_pairs(g)
    index = {(p.i, p.j): k for k, p in enumerate(pairs)}
    out = []
    for e, v in finger_move_labels(g):
        vec = 0
        for f in g.incident_edges(v):
            key = (min(e, f), max(e, f))
            if key in index:
                vec |= 1 << index[key]
        out.append(vec)
    return out


@dataclass
class CompatibilityClass:
    """The affine family of realizable crossing-parity vectors of a graph."""

    graph: Graph
    base: ParityMatrix
    generators: list[int]

    @classmethod
    def compute(cls, g: Graph) -> "CompatibilityClass":
        base = crossing_parity_matrix(canonical_drawing(g))
        return cls(g, base, finger_move_generators(g))

    def membership(self, target: ParityMatrix):
        pairs = independent_pairs(self.graph)
        return in_affine_span(
            target.pair_vector(pairs),
            self.base.pair_vector(pairs),
            self.generators,
            len(pairs),
        )


def is_compatible_mod2(g: Graph, target: ParityMatrix):
    """Coefficient certificate over finger moves, or None when incompatible."""
    if target.graph.edges != g.edges:
        raise ValueError("target indexed by a different edge set")
    return CompatibilityClass.compute(g).membership(target)


def _loop_start(u: Point, vecs) -> int:
    """Index of the first corner direction strictly counterclockwise of u.

    vecs are corner offsets in ccw order with angular gaps below pi.
    Raises when u is parallel to a corner direction; callers retry.
    """
    for v in vecs:
        if u[0] * v[1] - u[1] * v[0] == 0:
            raise DegeneracyError("direction aligned with a loop corner")
    n = len(vecs)
    for k in range(n):
        w = vecs[(k - 1) % n]
        v = vecs[k]
        if w[0] * u[1] - w[1] * u[0] > 0 and u[0] * v[1] - u[1] * v[0] > 0:
            return k
    raise DegeneracyError("no corner strictly counterclockwise of direction")


def finger_polyline(polyline, vpt: Point, shrink: int, attempt: int):
    """Reroute a polyline with a finger around the point vpt.

    Splits the first segment at p- / p+ and inserts a detour that walks a
    small square loop around vpt.  Purely geometric; the caller checks the
    parity effect and general position and retries with other parameters.
    """
    s0, t0 = polyline[0], polyline[1]
    lam = Fraction(1 + attempt, 3 + 2 * attempt)
    delta = Fraction(1, 64 + 8 * attempt)
    pm = (s0[0] + (lam - delta) * (t0[0] - s0[0]), s0[1] + (lam - delta) * (t0[1] - s0[1]))
    pp = (s0[0] + (lam + delta) * (t0[0] - s0[0]), s0[1] + (lam + delta) * (t0[1] - s0[1]))
    pc = (s0[0] + lam * (t0[0] - s0[0]), s0[1] + lam * (t0[1] - s0[1]))
    u = (pc[0] - vpt[0], pc[1] - vpt[1])
    if u == (Fraction(0), Fraction(0)):
        raise DegeneracyError("finger base point at the vertex")
    side = Fraction(1, 8) / (2 ** shrink)
    alpha = side / max(abs(u[0]), abs(u[1]))
    mouth = (vpt[0] + alpha * Fraction(17, 16) * u[0], vpt[1] + alpha * Fraction(17, 16) * u[1])
    rho = alpha / 16
    b1 = (mouth[0] - rho * u[1], mouth[1] + rho * u[0])
    b2 = (mouth[0] + rho * u[1], mouth[1] - rho * u[0])
    # Rectangle around vpt; the aspect ratio varies with the attempt so a
    # corner cannot stay aligned with any fixed line through vpt.
    w = side * Fraction(9, 8)
    h = w * (1 + Fraction(attempt, attempt + 8))
    vecs = [(w, h), (-w, h), (-w, -h), (w, -h)]
    start = _loop_start(u, vecs)
    corners = [
        (vpt[0] + vecs[(start + k) % 4][0], vpt[1] + vecs[(start + k) % 4][1])
        for k in range(4)
    ]
    detour = [pm, b1, *corners, b2, pp]
    loop = list(detour)  # closed by the segment pp -> pm along the old edge
    return [s0, *detour, *polyline[1:]], loop


def _parities_with_edge(d: PlanarDrawing, e: int) -> dict[int, int]:
    """Crossing parity of edge e with every independent edge; local checks only."""
    g = d.graph
    out = {}
    for f in range(g.edge_count):
        if f == e or g.edges_adjacent(e, f):
            continue
        i, j = min(e, f), max(e, f)
        out[f] = len(_pair_crossings(d, i, j)) & 1
    return out


def apply_finger_move(d: PlanarDrawing, e: int, v: int, shrink: int = 0) -> PlanarDrawing:
    """Reroute edge e around vertex v, flipping parities per the move vector.

    The parity effect is re-verified exactly; geometric parameters are
    retried deterministically until the drawing is valid and the effect is
    exactly the finger-move vector.
    """
    g = d.graph
    if v in g.edges[e]:
        raise ValueError("vertex must not be an endpoint of the edge")
    before = _parities_with_edge(d, e)
    incident = set(g.incident_edges(v))
    expected = {f: p ^ (1 if f in incident else 0) for f, p in before.items()}
    last_err = None
    for attempt in range(24):
        try:
            newpl, _loop = finger_polyline(d.edge_polylines[e], d.vertex_points[v], shrink + attempt, attempt)
            cand = d.with_polyline(e, newpl)
            # Localized validation: the new polyline against everything.
            _check_polyline_shape(cand, e)
            _check_vertices(cand)
            point_log: dict[Point, int] = {}
            _check_self(cand, e, point_log)
            for f in range(g.edge_count):
                if f != e:
                    i, j = min(e, f), max(e, f)
                    _pair_crossings(cand, i, j, point_log)
            if any(c > 1 for c in point_log.values()):
                raise GeneralPositionError("finger created a multiple point")
            if _parities_with_edge(cand, e) != expected:
                raise GeneralPositionError("finger parity effect mismatched")
            return cand
        except (GeneralPositionError, DegeneracyError) as err:
            last_err = err
            continue
    raise RealizationError(f"finger move failed for edge {e}, vertex {v}: {last_err}")


def realize_parity(g: Graph, target: ParityMatrix) -> PlanarDrawing:
    """A drawing whose parity matrix equals the target on independent pairs."""
    cls = CompatibilityClass.compute(g)
    cert = cls.membership(target)
    if cert is None:
        raise IncompatibleTargetError("target parity matrix is not compatible")
    d = canonical_drawing(g)
    labels = finger_move_labels(g)
    nesting: dict[int, int] = {}
    for k, c in enumerate(cert):
        if not c:
            continue
        e, v = labels[k]
        d = apply_finger_move(d, e, v, shrink=nesting.get(v, 0))
        nesting[v] = nesting.get(v, 0) + 1
    got = crossing_parity_matrix(d)
    if not got.equal_on_independent_pairs(target):
        raise RealizationError("post-verification mismatch in realize_parity")
    return d


def parse_drawing(text: str, graph: Graph = None) -> PlanarDrawing:
    """Parse the drawing text format.

    When no graph is given, edges are inferred by matching each polyline's
    first and last points against the vertex points.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "drawing":
        raise ValueError("bad drawing header")
    vpts: dict[int, Point] = {}
    polys: dict[int, list[Point]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "vertex":
            vid = int(parts[1])
            vpts[vid] = (_parse_rat(parts[2]), _parse_rat(parts[3]))
        elif parts[0] == "edge":
            eid = int(parts[1])
            if parts[2] != ":":
                raise ValueError(f"bad edge line: {ln!r}")
            coords = parts[3:]
            if len(coords) % 2:
                raise ValueError(f"odd coordinate count: {ln!r}")
            polys[eid] = [
                (_parse_rat(coords[k]), _parse_rat(coords[k + 1]))
                for k in range(0, len(coords), 2)
            ]
        else:
            raise ValueError(f"unknown drawing line: {ln!r}")
    if graph is None:
        n = len(vpts)
        if sorted(vpts) != list(range(n)):
            raise ValueError("vertex ids must be 0..n-1")
        locate = {p: i for i, p in vpts.items()}
        if len(locate) != n:
            raise ValueError("coincident vertex points")
        edges = []
        for eid in sorted(polys):
            pl = polys[eid]
            if len(pl) < 2 or pl[0] not in locate or pl[-1] not in locate:
                raise ValueError(f"edge {eid} does not join two vertex points")
            edges.append((locate[pl[0]], locate[pl[-1]]))
        graph = Graph(n, edges)
    if sorted(vpts) != list(range(graph.vertex_count)):
        raise ValueError("vertex lines do not match the graph")
    if sorted(polys) != list(range(graph.edge_count)):
        raise ValueError("edge lines do not match the graph")
    return PlanarDrawing(
        graph,
        [vpts[i] for i in range(graph.vertex_count)],
        [polys[i] for i in range(graph.edge_count)],
    )


def serialize_drawing(d: PlanarDrawing) -> str:
    lines = ["drawing"]
    for i, (x, y) in enumerate(d.vertex_points):
        lines.append(f"vertex {i} {_fmt_rat(x)} {_fmt_rat(y)}")
    for i, pl in enumerate(d.edge_polylines):
        coords = " ".join(f"{_fmt_rat(x)} {_fmt_rat(y)}" for x, y in pl)
        lines.append(f"edge {i} : {coords}")
    return "\n".join(lines) + "\n"


def _parse_rat(s: str) -> Fraction:
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def _fmt_rat(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
