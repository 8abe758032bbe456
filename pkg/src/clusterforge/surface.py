"""Tagged arcs, flips, triangulation quivers, laminates, and shear
coordinates on three marked-surface families: the unpunctured disc, the
once-punctured disc, and the annulus.

Everything is computed in the universal cover of the surface minus the
puncture/core: a horizontal strip whose top line carries the outer marked
points and whose bottom line is either the inner boundary (annulus), the
puncture collar (punctured disc), or absent (disc).  Curves are exact
rational polylines; crossings are counted by transversal segment
intersection against all relevant deck translates.  No floating point.

Orientation conventions (fixed once): boundary marks are numbered so that
their positions increase along the cover's horizontal axis; a laminate
endpoint sits on the boundary segment immediately after the corresponding
marked point in that numbering; spiralling "plain" means the spiral tail
runs toward decreasing positions.  These choices are pinned by the
requirement that the elementary laminate of an arc of the triangulation has
shear vector minus-one at that arc, and by the agreement of annulus data
with the rank-2 double-arrow quiver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .quiver import Quiver

PLAIN = 0
NOTCHED = 1


class UnsupportedSurface(ValueError):
    pass


class DifferentSurface(ValueError):
    pass


class ArcNotInTriangulation(ValueError):
    pass


class NotExceptional(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


class DegenerateGeometry(AssertionError):
    pass


# ---------------------------------------------------------------------------
# Surfaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MarkedSurface:
    """Disc(m): family="disc", outer=m, m >= 4.
    PuncturedDisc(m): family="punctured_disc", outer=m, m >= 2 (the
    once-punctured monogon is excluded).
    Annulus(p, q): family="annulus", outer=p, inner=q, p, q >= 1."""

    family: str
    outer: int
    inner: int = 0

    def __post_init__(self):
        if self.family == "disc":
            if self.outer < 4 or self.inner != 0:
                raise UnsupportedSurface("disc needs >= 4 boundary marks (smaller polygons are excluded)")
        elif self.family == "punctured_disc":
            if self.outer < 2 or self.inner != 0:
                raise UnsupportedSurface("once-punctured disc needs >= 2 boundary marks "
                                         "(the punctured monogon is excluded)")
        elif self.family == "annulus":
            if self.outer < 1 or self.inner < 1:
                raise UnsupportedSurface("annulus needs >= 1 mark on each boundary circle")
        else:
            raise UnsupportedSurface(f"unknown family {self.family!r}")

    @property
    def rank(self) -> int:
        if self.family == "disc":
            return self.outer - 3
        if self.family == "punctured_disc":
            return self.outer
        return self.outer + self.inner

    @property
    def punctured(self) -> bool:
        return self.family == "punctured_disc"


def disc(m: int) -> MarkedSurface:
    return MarkedSurface("disc", m)


def punctured_disc(m: int) -> MarkedSurface:
    return MarkedSurface("punctured_disc", m)


def annulus(p: int, q: int) -> MarkedSurface:
    return MarkedSurface("annulus", p, q)


# ---------------------------------------------------------------------------
# Arcs and laminates
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class TaggedArc:
    """key is one of
      ("chord", s, d): boundary arc from mark s to mark s+d, running along
          the marks s+1..s+d-1 (on the disc the representation with the
          smaller d is canonical; on the punctured disc the traversed side
          is the puncture-free side);
      ("radial", i): from boundary mark i to the puncture;
      ("bridge", i, j, w): outer mark i to inner mark j with winding w;
      ("ocap", i, d) / ("icap", j, d): boundary arc on the outer/inner
          circle from mark i to mark i+d (d = number of marks cut off;
          d equal to the circle size gives the loop around the hole).
    tag is the puncture tag (plain/notched) and only meaningful on radials.
    """

    surface: MarkedSurface
    key: tuple
    tag: int = PLAIN

    def __post_init__(self):
        S = self.surface
        k = self.key
        if k[0] == "chord":
            _, s, d = k
            if S.family == "disc":
                if not (1 <= s <= S.outer and 2 <= d <= S.outer - 2):
                    raise ValueError(f"invalid disc chord {k}")
                if d > S.outer - d or (2 * d == S.outer and s > _chord_mate(S, s, d)[1]):
                    raise ValueError(f"non-canonical disc chord {k}")
            elif S.family == "punctured_disc":
                if not (1 <= s <= S.outer and 2 <= d <= S.outer - 1):
                    raise ValueError(f"invalid chord {k}")
            else:
                raise ValueError("chords live on disc families")
            if self.tag != PLAIN:
                raise ValueError("chord ends are on the boundary: tagged plain")
        elif k[0] == "radial":
            if S.family != "punctured_disc":
                raise ValueError("radial arcs need the puncture")
            if not 1 <= k[1] <= S.outer:
                raise ValueError(f"invalid radial {k}")
            if self.tag not in (PLAIN, NOTCHED):
                raise ValueError("bad tag")
        elif k[0] == "bridge":
            _, i, j, w = k
            if S.family != "annulus" or not (1 <= i <= S.outer and 1 <= j <= S.inner):
                raise ValueError(f"invalid bridge {k}")
            if self.tag != PLAIN:
                raise ValueError("bridge ends are on the boundary: tagged plain")
        elif k[0] in ("ocap", "icap"):
            size = self.surface.outer if k[0] == "ocap" else self.surface.inner
            _, i, d = k
            if S.family != "annulus" or not (1 <= i <= size):
                raise ValueError(f"invalid cap {k}")
            # d = size is the loop around the hole (needs a second mark to
            # avoid cutting out an unpunctured digon); the traversed side is
            # part of the arc's identity, so no complementary dedup applies
            if not (2 <= d <= size) or (d == size and size < 2):
                raise ValueError(f"invalid cap span {k}")
            if self.tag != PLAIN:
                raise ValueError("cap ends are on the boundary: tagged plain")
        else:
            raise ValueError(f"unknown arc kind {k[0]}")

    @property
    def underlying(self) -> tuple:
        return self.key


def _chord_mate(S: MarkedSurface, s: int, d: int) -> tuple[int, int]:
    m = S.outer
    s2 = (s + d - 1) % m + 1
    return (s2, m - d)


def disc_chord(S: MarkedSurface, a: int, b: int) -> TaggedArc:
    """The unique disc arc between marks a and b, in canonical form."""
    m = S.outer
    d = (b - a) % m
    s = a
    if d > m - d:
        s, d = b, m - d
    elif 2 * d == m:
        s2 = (s + d - 1) % m + 1
        s = min(s, s2)
    return TaggedArc(S, ("chord", s, d))


@dataclass(frozen=True, order=True)
class Laminate:
    """kind "elementary" (runs along `of`), "exceptional" (punctured disc:
    anchored at boundary segment `anchor`, enclosing the puncture), or
    "core" (annulus: `copies` parallel copies of the core curve)."""

    surface: MarkedSurface
    kind: str
    of: Optional[TaggedArc] = None
    anchor: int = 0
    copies: int = 1

    def __post_init__(self):
        if self.kind == "elementary":
            if self.of is None:
                raise ValueError("elementary laminate needs an arc")
        elif self.kind == "exceptional":
            if self.surface.family != "punctured_disc":
                raise ValueError("exceptional laminates need exactly one puncture")
            if not 1 <= self.anchor <= self.surface.outer:
                raise ValueError("anchor segment out of range")
        elif self.kind == "core":
            if self.surface.family != "annulus":
                raise ValueError("core laminates live on the annulus")
            if self.copies < 1:
                raise ValueError("copies must be >= 1")
        else:
            raise ValueError(f"unknown laminate kind {self.kind}")


def elementary(arc: TaggedArc) -> Laminate:
    return Laminate(arc.surface, "elementary", of=arc)


def exceptional(S: MarkedSurface, segment: int) -> Laminate:
    return Laminate(S, "exceptional", anchor=segment)


def closed_core(S: MarkedSurface, copies: int = 1) -> Laminate:
    return Laminate(S, "core", copies=copies)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_tagged_arcs(S: MarkedSurface, winding_bound: int = 0) -> list[TaggedArc]:
    out: list[TaggedArc] = []
    if S.family == "disc":
        m = S.outer
        for s in range(1, m + 1):
            for d in range(2, m - 1):
                try:
                    out.append(TaggedArc(S, ("chord", s, d)))
                except ValueError:
                    pass
    elif S.family == "punctured_disc":
        m = S.outer
        for i in range(1, m + 1):
            out.append(TaggedArc(S, ("radial", i), PLAIN))
            out.append(TaggedArc(S, ("radial", i), NOTCHED))
        for s in range(1, m + 1):
            for d in range(2, m):
                out.append(TaggedArc(S, ("chord", s, d)))
    else:
        p, q = S.outer, S.inner
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                for w in range(-winding_bound, winding_bound + 1):
                    out.append(TaggedArc(S, ("bridge", i, j, w)))
        for i in range(1, p + 1):
            for d in range(2, p + 1):
                try:
                    out.append(TaggedArc(S, ("ocap", i, d)))
                except ValueError:
                    pass
        for j in range(1, q + 1):
            for d in range(2, q + 1):
                try:
                    out.append(TaggedArc(S, ("icap", j, d)))
                except ValueError:
                    pass
    return sorted(out)


def enumerate_laminates(S: MarkedSurface, winding_bound: int = 0) -> list[Laminate]:
    out = [elementary(a) for a in enumerate_tagged_arcs(S, winding_bound)]
    if S.family == "punctured_disc":
        out.extend(exceptional(S, s) for s in range(1, S.outer + 1))
    if S.family == "annulus":
        out.append(closed_core(S))
    return sorted(out)


# ---------------------------------------------------------------------------
# Exact strip geometry
# ---------------------------------------------------------------------------

# Calibrated orientation constants (see module docstring): pinned by the
# identities b_T(e(gamma)) = -e_gamma and the agreement of the annulus core
# with the rank-2 fan direction.
SPIRAL_PLAIN_DIR = -1   # plain spirals run toward decreasing positions
INNER_DISP_SIGN = -1    # inner-boundary endpoints displace against the numbering
SHEAR_SIGN = -1         # sign of the (after, after) quadrilateral pattern
ARROW_FORWARD = True    # triangle arrows follow the oriented face cycle


class _Scene:
    """Exact-coordinate model of one surface: mark positions, depth scale,
    and polyline builders for arcs and laminates."""

    def __init__(self, S: MarkedSurface, wmax: int = 2):
        self.S = S
        self.wmax = max(2, wmax)
        p = S.outer
        self.sp_out = Fraction(1, p)
        if S.family == "annulus":
            q = S.inner
            self.sp_in = Fraction(1, q)
            self.eps_in = Fraction(1, 4 * p * q)
        else:
            self.sp_in = Fraction(0)
            self.eps_in = Fraction(0)
        xs = set()
        for i in range(1, p + 1):
            xs.add(self.out_pos(i))
            xs.add(self.out_pos(i) + self.sp_out / 3)
            xs.add(self.out_pos(i) + self.sp_out * Fraction(5, 12))
            xs.add(self.out_pos(i) + self.sp_out * Fraction(7, 12))
        if S.family == "annulus":
            for j in range(1, S.inner + 1):
                xs.add(self.in_pos(j))
                xs.add(self.in_pos(j) + INNER_DISP_SIGN * self.sp_in / 3)
        gaps = []
        pts = sorted(x % 1 for x in xs)
        for a, b in zip(pts, pts[1:] + [pts[0] + 1]):
            if b > a:
                gaps.append(b - a)
        self.gap = min(gaps)
        self.rho = self.gap / (16 * (self.wmax + 2))

    def out_pos(self, i: int) -> Fraction:
        return Fraction(i - 1, self.S.outer)

    def in_pos(self, j: int) -> Fraction:
        return Fraction(j - 1, self.S.inner) + self.eps_in

    def out_segment_of(self, x: Fraction) -> tuple[int, int]:
        """Boundary segment (mark index, lift offset) containing position x."""
        k = 0
        xx = x
        while xx < 0:
            xx += 1
            k -= 1
        while xx >= 1:
            xx -= 1
            k += 1
        i = int(xx * self.S.outer) + 1
        return i, k

    def _tent(self, u: Fraction, v: Fraction, top: bool):
        # depth quadratic in width: tents sharing an endpoint then have
        # distinct slopes, so nested tents never overlap collinearly
        w = v - u
        d = self.rho * w * w
        mid = (u + v) / 2
        if top:
            return [(u, Fraction(1)), (mid, 1 - d), (v, Fraction(1))]
        return [(u, Fraction(0)), (mid, d), (v, Fraction(0))]

    def arc_polyline(self, key: tuple) -> list[tuple[Fraction, Fraction]]:
        S = self.S
        kind = key[0]
        if kind == "chord":
            _, s, d = key
            u = self.out_pos(s)
            return self._tent(u, u + d * self.sp_out, top=True)
        if kind == "radial":
            x = self.out_pos(key[1])
            return [(x, Fraction(1)), (x, Fraction(0))]
        if kind == "loop":
            # punctured disc only: loop at mark i enclosing the puncture
            x = self.out_pos(key[1])
            return self._tent(x, x + 1, top=True)
        if kind == "bridge":
            _, i, j, w = key
            return [(self.out_pos(i), Fraction(1)), (self.in_pos(j) + w, Fraction(0))]
        if kind == "ocap":
            _, i, d = key
            u = self.out_pos(i)
            return self._tent(u, u + d * self.sp_out, top=True)
        if kind == "icap":
            _, j, d = key
            u = self.in_pos(j)
            return self._tent(u, u + d * self.sp_in, top=False)
        raise ValueError(f"unknown arc kind {kind}")

    def laminate_polyline(self, lam: Laminate, reverse_spirals: bool = False):
        """One lift of the laminate; the core is handled separately."""
        S = self.S
        off_out = self.sp_out / 3
        if lam.kind == "elementary":
            key = lam.of.key
            if key[0] in ("chord", "ocap"):
                d = key[2]
                u = self.out_pos(key[1]) + off_out
                return self._tent(u, u + d * self.sp_out, top=True)
            if key[0] == "icap":
                d = key[2]
                u = self.in_pos(key[1]) + INNER_DISP_SIGN * self.sp_in / 3
                return self._tent(u, u + d * self.sp_in, top=False)
            if key[0] == "bridge":
                _, i, j, w = key
                return [(self.out_pos(i) + off_out, Fraction(1)),
                        (self.in_pos(j) + INNER_DISP_SIGN * self.sp_in / 3 + w, Fraction(0))]
            if key[0] == "radial":
                x = self.out_pos(key[1]) + off_out
                dirs = SPIRAL_PLAIN_DIR if lam.of.tag == PLAIN else -SPIRAL_PLAIN_DIR
                if reverse_spirals:
                    dirs = -dirs
                reach = self.wmax + 4
                return [(x, Fraction(1)), (x + dirs * reach, Fraction(1, 8))]
            raise ValueError(f"unknown arc kind {key[0]}")
        if lam.kind == "exceptional":
            s = lam.anchor
            u = self.out_pos(s) + self.sp_out * Fraction(7, 12)
            v = self.out_pos(s) + 1 + self.sp_out * Fraction(5, 12)
            return self._tent(u, v, top=True)
        raise ValueError("core laminates have no single polyline")


def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    """r collinear with pq assumed; is r within the closed segment?"""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and \
        min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def _cross_param(p, q, r, s) -> Fraction:
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    num = (r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]
    return Fraction(num, den)


def _branches_at(poly, pt) -> list[tuple]:
    """Directions of the polyline away from the point pt (0, 1 or 2 rays)."""
    out = []
    for i in range(len(poly) - 1):
        a, b = poly[i], poly[i + 1]
        if a == pt:
            out.append((b[0] - a[0], b[1] - a[1]))
        elif b == pt:
            out.append((a[0] - b[0], a[1] - b[1]))
        elif _orient(a, b, pt) == 0 and _on_segment(a, b, pt):
            out.append((b[0] - a[0], b[1] - a[1]))
            out.append((a[0] - b[0], a[1] - b[1]))
    # dedupe (consecutive segments both report the shared vertex)
    uniq = []
    for d in out:
        if d not in uniq:
            uniq.append(d)
    return uniq


def _rays_interleave(a1, a2, b1, b2) -> bool:
    """Do rays b1, b2 separate rays a1, a2 in the cyclic order around the
    origin?  All four directions pairwise non-parallel."""
    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    def less(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu < hv
        return u[0] * v[1] - u[1] * v[0] > 0

    rays = [(a1, "a"), (a2, "a"), (b1, "b"), (b2, "b")]
    # cyclic angular sort
    order = sorted(rays, key=_AngKey)
    labels = [lab for _d, lab in order]
    return labels in (["a", "b", "a", "b"], ["b", "a", "b", "a"])


class _AngKey:
    __slots__ = ("d",)

    def __init__(self, item):
        self.d = item[0]

    def _half(self):
        dx, dy = self.d
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def __lt__(self, other):
        h1, h2 = self._half(), other._half()
        if h1 != h2:
            return h1 < h2
        ax, ay = self.d
        bx, by = other.d
        cross = ax * by - ay * bx
        if cross == 0:
            raise DegenerateGeometry(f"parallel rays {self.d} / {other.d}")
        return cross > 0


def _point_on_poly_param(poly, pt):
    for i in range(len(poly) - 1):
        a, b = poly[i], poly[i + 1]
        if _orient(a, b, pt) == 0 and _on_segment(a, b, pt):
            dx, dy = b[0] - a[0], b[1] - a[1]
            if dx != 0:
                t = Fraction(pt[0] - a[0], dx)
            elif dy != 0:
                t = Fraction(pt[1] - a[1], dy)
            else:
                t = Fraction(0)
            return i + t
    return None


def _poly_crossings(pa, pb) -> list[Fraction]:
    """Parameters along pa of its transversal crossings with pb.  Touching
    contacts (shared vertices, endpoint-on-segment, apex-on-side) count only
    when the curves genuinely pass through each other there."""
    params = []
    contacts = set()
    for i in range(len(pa) - 1):
        p, q = pa[i], pa[i + 1]
        for j in range(len(pb) - 1):
            r, s = pb[j], pb[j + 1]
            o1 = _orient(p, q, r)
            o2 = _orient(p, q, s)
            o3 = _orient(r, s, p)
            o4 = _orient(r, s, q)
            if o1 * o2 < 0 and o3 * o4 < 0:
                params.append(i + _cross_param(p, q, r, s))
                continue
            if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
                lo1, hi1 = sorted((p, q))
                lo2, hi2 = sorted((r, s))
                if hi1 > lo2 and hi2 > lo1:
                    raise DegenerateGeometry(
                        f"overlapping collinear segments {p}-{q} / {r}-{s}")
                continue
            for pt in (r, s):
                if _orient(p, q, pt) == 0 and _on_segment(p, q, pt):
                    contacts.add(pt)
            for pt in (p, q):
                if _orient(r, s, pt) == 0 and _on_segment(r, s, pt):
                    contacts.add(pt)
    for pt in contacts:
        ba = _branches_at(pa, pt)
        bb = _branches_at(pb, pt)
        if len(ba) != 2 or len(bb) != 2:
            continue  # an endpoint touch can always be isotoped off
        if _rays_interleave(ba[0], ba[1], bb[0], bb[1]):
            t = _point_on_poly_param(pa, pt)
            assert t is not None
            params.append(t)
    return sorted(params)


def _shift(poly, k: int):
    return [(x + k, y) for (x, y) in poly]


def _poly_span(poly):
    xs = [x for (x, _y) in poly]
    return min(xs), max(xs)


def _cross_translates(pa, pb) -> int:
    """Crossings of polyline pa with all integer translates of pb."""
    a0, a1 = _poly_span(pa)
    b0, b1 = _poly_span(pb)
    kmin = int(a0 - b1) - 2
    kmax = int(a1 - b0) + 2
    total = 0
    for k in range(kmin, kmax + 1):
        total += len(_poly_crossings(pa, _shift(pb, k)))
    return total


# ---------------------------------------------------------------------------
# Crossing numbers and compatibility
# ---------------------------------------------------------------------------


def _check_same_surface(a, b):
    if a.surface != b.surface:
        raise DifferentSurface("objects live on different surfaces")


def _max_winding(*keys) -> int:
    w = 0
    for k in keys:
        if k and k[0] == "bridge":
            w = max(w, abs(k[3]))
    return w


def arc_crossing_number(a: TaggedArc, b: TaggedArc) -> int:
    """Minimal crossing number of the underlying ideal arcs."""
    _check_same_surface(a, b)
    if a.key == b.key:
        return 0
    scene = _Scene(a.surface, wmax=_max_winding(a.key, b.key) + 1)
    return _cross_translates(scene.arc_polyline(a.key), scene.arc_polyline(b.key))


def _arc_endpoints(a: TaggedArc) -> list[tuple]:
    k = a.key
    S = a.surface
    if k[0] == "chord":
        m = S.outer
        return [("out", k[1]), ("out", (k[1] + k[2] - 1) % m + 1)]
    if k[0] == "radial":
        return [("out", k[1]), ("P",)]
    if k[0] == "bridge":
        return [("out", k[1]), ("in", k[2])]
    if k[0] == "ocap":
        p = S.outer
        return [("out", k[1]), ("out", (k[1] + k[2] - 1) % p + 1)]
    if k[0] == "icap":
        q = S.inner
        return [("in", k[1]), ("in", (k[1] + k[2] - 1) % q + 1)]
    raise ValueError(k)


def compatible(a: TaggedArc, b: TaggedArc) -> bool:
    """Tagged-arc compatibility: underlying arcs do not cross; equal
    underlying arcs must be equal or a conjugate pair; tags agree at shared
    puncture endpoints."""
    _check_same_surface(a, b)
    if a.key == b.key:
        return True  # equal or conjugate pair
    if arc_crossing_number(a, b) != 0:
        return False
    shared = {e for e in _arc_endpoints(a) if e in _arc_endpoints(b)}
    if ("P",) in shared and a.tag != b.tag:
        return False
    return True


def laminate_crossing_number(l1: Laminate, l2: Laminate) -> int:
    _check_same_surface(l1, l2)
    if l1 == l2:
        return 0  # parallel copies of one laminate never cross
    s1 = l1.of.key if l1.kind == "elementary" else None
    s2 = l2.of.key if l2.kind == "elementary" else None

    def is_spiral(l):
        return l.kind == "elementary" and l.of.key[0] == "radial"

    if l1.kind == "core" or l2.kind == "core":
        if l1.kind == "core" and l2.kind == "core":
            return 0
        core, other = (l1, l2) if l1.kind == "core" else (l2, l1)
        if other.kind == "core":
            return 0
        if other.kind == "elementary" and other.of.key[0] == "bridge":
            return core.copies
        return 0
    if is_spiral(l1) and is_spiral(l2):
        # parallel spirals never cross; opposite spirals around the same
        # puncture always do
        return 0 if l1.of.tag == l2.of.tag else 1
    scene = _Scene(l1.surface, wmax=_max_winding(s1, s2) + 1)
    return _cross_translates(scene.laminate_polyline(l1), scene.laminate_polyline(l2))


def laminates_compatible(l1: Laminate, l2: Laminate) -> bool:
    return laminate_crossing_number(l1, l2) == 0


# ---------------------------------------------------------------------------
# Triangulations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Triangulation:
    surface: MarkedSurface
    arcs: tuple[TaggedArc, ...]

    def __post_init__(self):
        if len(self.arcs) != self.surface.rank:
            raise ValueError(f"a triangulation of this surface has {self.surface.rank} arcs")
        for a in self.arcs:
            if a.surface != self.surface:
                raise DifferentSurface("arc on a different surface")
        for a, b in itertools.combinations(self.arcs, 2):
            if a == b:
                raise ValueError("repeated arc")
            if not compatible(a, b):
                raise ValueError(f"incompatible arcs {a.key}/{a.tag} and {b.key}/{b.tag}")

    def index_of(self, arc: TaggedArc) -> int:
        return self.arcs.index(arc)


def initial_triangulation(S: MarkedSurface) -> Triangulation:
    if S.family == "disc":
        # fan of diagonals out of mark 1
        arcs = [disc_chord(S, 1, j) for j in range(3, S.outer)]
    elif S.family == "punctured_disc":
        arcs = [TaggedArc(S, ("radial", i), PLAIN) for i in range(1, S.outer + 1)]
    else:
        arcs = []
        for cand in enumerate_tagged_arcs(S, winding_bound=1):
            if len(arcs) == S.rank:
                break
            if all(compatible(cand, a) for a in arcs):
                arcs.append(cand)
    return Triangulation(S, tuple(arcs))


def flip(T: Triangulation, arc: TaggedArc, _bound_extra: int = 2) -> Triangulation:
    """Replace `arc` by the unique other tagged arc completing the rest to a
    triangulation."""
    if arc not in T.arcs:
        raise ArcNotInTriangulation(f"{arc.key} not in triangulation")
    rest = [a for a in T.arcs if a != arc]
    wmax = max((_max_winding(a.key) for a in T.arcs), default=0) + _bound_extra
    candidates = []
    for cand in enumerate_tagged_arcs(T.surface, winding_bound=wmax):
        if cand == arc or cand in rest:
            continue
        if all(compatible(cand, a) for a in rest):
            candidates.append(cand)
    if len(candidates) != 1:
        raise AssertionError(
            f"flip of {arc.key} expected exactly one replacement, got "
            f"{[c.key for c in candidates]}")
    new = list(T.arcs)
    new[new.index(arc)] = candidates[0]
    return Triangulation(T.surface, tuple(new))


# ---------------------------------------------------------------------------
# Ideal form of a tagged triangulation (punctured disc bookkeeping)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _IdealForm:
    """scene arcs (keys may include a synthetic "loop"), plus for every
    tagged arc of T the recipe to read off its shear coordinate:
      mode "plain": coordinate of its own scene arc;
      mode "loop": coordinate of the loop arc (notched member of the pair);
      mode "self_folded": loop coordinate of the spiral-reversed laminate.
    reverse_all: compute all coordinates with spirals reversed (all-notched
    triangulations)."""

    scene_keys: tuple[tuple, ...]
    recipe: tuple[tuple[str, int], ...]  # per T-arc: (mode, scene index)
    reverse_all: bool


def _ideal_form(T: Triangulation) -> _IdealForm:
    S = T.surface
    if S.family != "punctured_disc":
        keys = tuple(a.key for a in T.arcs)
        recipe = tuple(("plain", i) for i in range(len(keys)))
        return _IdealForm(keys, recipe, False)
    radials = [a for a in T.arcs if a.key[0] == "radial"]
    tags = {a.tag for a in radials}
    pair_marks = {a.key[1] for a in radials if
                  sum(1 for b in radials if b.key[1] == a.key[1]) == 2}
    if pair_marks:
        assert len(pair_marks) == 1 and len(radials) == 2
        i = next(iter(pair_marks))
        scene = []
        recipe = []
        loop_idx = None
        rad_idx = None
        for a in T.arcs:
            if a.key == ("radial", i):
                if a.tag == NOTCHED:
                    scene.append(("loop", i))
                    recipe.append(("loop", len(scene) - 1))
                    loop_idx = len(scene) - 1
                else:
                    scene.append(("radial", i))
                    recipe.append(("self_folded", len(scene) - 1))
                    rad_idx = len(scene) - 1
            else:
                scene.append(a.key)
                recipe.append(("plain", len(scene) - 1))
        # the self-folded coordinate reads the loop, not the inner radial
        recipe = tuple(("self_folded", loop_idx) if mode == "self_folded" else (mode, idx)
                       for (mode, idx) in recipe)
        return _IdealForm(tuple(scene), recipe, False)
    if tags == {NOTCHED}:
        keys = tuple(a.key for a in T.arcs)
        recipe = tuple(("plain", i) for i in range(len(keys)))
        return _IdealForm(keys, recipe, True)
    assert tags == {PLAIN}, f"mixed radial tags without a conjugate pair: {tags}"
    keys = tuple(a.key for a in T.arcs)
    recipe = tuple(("plain", i) for i in range(len(keys)))
    return _IdealForm(keys, recipe, False)


# ---------------------------------------------------------------------------
# Faces of the ideal triangulation (rotation-system traversal)
# ---------------------------------------------------------------------------


@dataclass
class _Edge:
    eid: int
    kind: str          # "arc" | "boundary"
    key: tuple | None  # arc key for arcs, ("btop", i) / ("bbot", j) for boundary
    poly: list
    ends: list         # [(vertex, point, direction)] for end 0 (start), 1 (end)


@dataclass
class _Face:
    sides: list        # half-edges (eid, dir) around the face
    offsets: list      # lift offset of each side relative to the face
    wrap: int = 0      # nonzero when the face's lift wraps the cylinder


class _TriScene:
    """Strip model of one ideal triangulation: edges, rotation systems,
    faces with lift offsets."""

    def __init__(self, S: MarkedSurface, keys: Sequence[tuple]):
        self.S = S
        self.keys = tuple(keys)
        self.scene = _Scene(S, wmax=_max_winding(*keys) + 2)
        self.edges: list[_Edge] = []
        for a, key in enumerate(keys):
            poly = self.scene.arc_polyline(key)
            self.edges.append(_Edge(a, "arc", key, poly, ends=[]))
        p = S.outer
        self.first_boundary = len(self.edges)
        for i in range(1, p + 1):
            u = self.scene.out_pos(i)
            v = self.scene.out_pos(i % p + 1) + (1 if i == p else 0)
            self.edges.append(_Edge(len(self.edges), "boundary", ("btop", i),
                                    [(u, Fraction(1)), (v, Fraction(1))], ends=[]))
        if S.family == "annulus":
            q = S.inner
            for j in range(1, q + 1):
                u = self.scene.in_pos(j)
                v = self.scene.in_pos(j % q + 1) + (1 if j == q else 0)
                self.edges.append(_Edge(len(self.edges), "boundary", ("bbot", j),
                                        [(u, Fraction(0)), (v, Fraction(0))], ends=[]))
        self._fill_ends()
        self.faces = self._trace_faces()

    # -- vertices and rotations ---------------------------------------------

    def _vertex_of_point(self, pt) -> tuple:
        x, y = pt
        if y == 1:
            i = (x % 1) * self.S.outer
            assert i == int(i), f"arc end at non-mark position {pt}"
            return ("out", int(i) + 1)
        assert y == 0
        if self.S.family == "annulus":
            j = ((x - self.scene.eps_in) % 1) * self.S.inner
            assert j == int(j), f"arc end at non-mark position {pt}"
            return ("in", int(j) + 1)
        return ("P",)

    def _fill_ends(self):
        for e in self.edges:
            start, nxt = e.poly[0], e.poly[1]
            end, prv = e.poly[-1], e.poly[-2]
            d0 = (nxt[0] - start[0], nxt[1] - start[1])
            d1 = (prv[0] - end[0], prv[1] - end[1])
            e.ends = [(self._vertex_of_point(start), start, d0),
                      (self._vertex_of_point(end), end, d1)]

    def _rotations(self) -> dict:
        incidences: dict[tuple, list] = {}
        for e in self.edges:
            for endix in (0, 1):
                v, pt, d = e.ends[endix]
                incidences.setdefault(v, []).append((e.eid, endix, pt, d))
        rot = {}
        for v, ends in incidences.items():
            if v == ("P",):
                # the puncture is the collapsed bottom circle: the plane-ccw
                # sweep around it runs through collar positions in
                # decreasing order
                ends.sort(key=lambda t: -(t[2][0] % 1))
                rot[v] = [(eid, endix) for (eid, endix, pt, d) in ends]
                continue

            def cmp_key(item):
                eid, endix, pt, d = item
                return _angle_sort_key(d)

            ends.sort(key=cmp_key)
            rot[v] = [(eid, endix) for (eid, endix, pt, d) in ends]
        return rot

    # -- face traversal -------------------------------------------------------

    def _trace_faces(self) -> list[_Face]:
        rot = self._rotations()
        pos_in_rot = {}
        for v, ends in rot.items():
            for idx, end in enumerate(ends):
                pos_in_rot[end] = (v, idx)
        seen = set()
        faces = []
        # half-edge (eid, d): d = 0 travels start->end, d = 1 end->start
        for eid0 in range(len(self.edges)):
            for d0 in (0, 1):
                if (eid0, d0) in seen:
                    continue
                cycle = []
                h = (eid0, d0)
                while h not in seen:
                    seen.add(h)
                    cycle.append(h)
                    eid, d = h
                    arrival_end = (eid, 1) if d == 0 else (eid, 0)
                    v, idx = pos_in_rot[arrival_end]
                    ends = rot[v]
                    nxt_end = ends[(idx + 1) % len(ends)]
                    h = (nxt_end[0], 0 if nxt_end[1] == 0 else 1)
                if all(self.edges[e].kind == "boundary" for (e, _d) in cycle):
                    continue
                faces.append(self._with_offsets(cycle))
        return faces

    def _with_offsets(self, cycle) -> _Face:
        offsets = [0]
        at_p = False
        for idx in range(1, len(cycle) + 1):
            peid, pd = cycle[idx - 1]
            ceid, cd = cycle[idx % len(cycle)]
            pe, ce = self.edges[peid], self.edges[ceid]
            arrive = pe.poly[-1] if pd == 0 else pe.poly[0]
            depart = ce.poly[0] if cd == 0 else ce.poly[-1]
            ax = arrive[0] + offsets[idx - 1]
            if arrive[1] == 0 and self.S.family == "punctured_disc":
                # faces open leftward around the collar: place the next
                # radial's lift immediately left of the arrival position
                at_p = True
                k = 0
                while depart[0] + k >= ax:
                    k -= 1
                while depart[0] + k < ax - 1:
                    k += 1
                offsets.append(k)
                continue
            delta = ax - depart[0]
            assert delta == int(delta), "face walk broke lift alignment"
            offsets.append(int(delta))
        # the final entry is the closure back to side 0: a nonzero value
        # means the face's lift wraps the cylinder (the innermost disc face)
        wrap = 0 if at_p else offsets[-1]
        return _Face(list(cycle), offsets[:-1], wrap)

    # -- face lookups ----------------------------------------------------------

    def faces_with_arc(self, eid: int) -> list[tuple[int, int]]:
        """(face index, side position) of every occurrence of the arc."""
        out = []
        for fi, f in enumerate(self.faces):
            for si, (e, _d) in enumerate(f.sides):
                if e == eid:
                    out.append((fi, si))
        return out

    def is_self_folded_face(self, f: _Face) -> bool:
        eids = [e for (e, _d) in f.sides]
        return len(eids) != len(set(eids))


def _angle_sort_key(d):
    dx, dy = d
    upper = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    class _K:
        __slots__ = ("d", "u")

        def __init__(self, d, u):
            self.d = d
            self.u = u

        def __lt__(self, other):
            if self.u != other.u:
                return self.u < other.u
            ax, ay = self.d
            bx, by = other.d
            cross = ax * by - ay * bx
            return cross > 0

    return _K((dx, dy), upper)


# ---------------------------------------------------------------------------
# Quiver of a triangulation
# ---------------------------------------------------------------------------


def quiver_of_triangulation(T: Triangulation) -> Quiver:
    """Vertices are the arcs of T (in T's order); arrows come from the angles
    of each triangle, with both members of a conjugate pair inheriting the
    loop's arrows; 2-cycles cancel."""
    form = _ideal_form(T)
    ts = _TriScene(T.surface, form.scene_keys)
    # scene index -> list of tagged-arc indices that inherit its arrows
    inherit: dict[int, list[int]] = {}
    for tidx, (mode, sidx) in enumerate(form.recipe):
        if mode == "plain":
            inherit.setdefault(sidx, []).append(tidx)
        else:
            # both pair members ride on the loop's incidences
            inherit.setdefault(sidx, []).append(tidx)
    count: dict[tuple[int, int], int] = {}
    for f in ts.faces:
        if ts.is_self_folded_face(f):
            continue
        sides = f.sides
        for pos in range(len(sides)):
            a_eid = sides[pos][0]
            b_eid = sides[(pos + 1) % len(sides)][0]
            if ts.edges[a_eid].kind != "arc" or ts.edges[b_eid].kind != "arc":
                continue
            for ta in inherit.get(a_eid, []):
                for tb in inherit.get(b_eid, []):
                    key = (ta + 1, tb + 1) if ARROW_FORWARD else (tb + 1, ta + 1)
                    count[key] = count.get(key, 0) + 1
    net: dict[tuple[int, int], int] = {}
    for (i, j) in {(min(i, j), max(i, j)) for (i, j) in count}:
        d = count.get((i, j), 0) - count.get((j, i), 0)
        if d > 0:
            net[(i, j)] = d
        elif d < 0:
            net[(j, i)] = -d
    arrows = tuple((i, j, m) for (i, j), m in sorted(net.items()))
    return Quiver(len(T.arcs), arrows)


# ---------------------------------------------------------------------------
# Shear coordinates
# ---------------------------------------------------------------------------


def _events_along(ts: _TriScene, lam_poly) -> list[tuple]:
    """Ordered crossing events of the laminate polyline with all edge-lift
    translates: (t, eid, lift offset)."""
    events = []
    a0, a1 = _poly_span(lam_poly)
    for e in ts.edges:
        if e.kind != "arc":
            continue
        b0, b1 = _poly_span(e.poly)
        kmin = int(a0 - b1) - 2
        kmax = int(a1 - b0) + 2
        for k in range(kmin, kmax + 1):
            for t in _poly_crossings(lam_poly, _shift(e.poly, k)):
                events.append((t, e.eid, k))
    # start/end boundary pseudo-events
    events.sort(key=lambda ev: ev[0])
    out = []
    start = lam_poly[0]
    if start[1] == 1:
        i, k = ts.scene.out_segment_of(start[0])
        out.append((Fraction(-1), ts.first_boundary + i - 1, k))
    for ev in events:
        out.append(ev)
    end = lam_poly[-1]
    if end[1] == 1:
        i, k = ts.scene.out_segment_of(end[0])
        out.append((Fraction(len(lam_poly)), ts.first_boundary + i - 1, k))
    elif end[1] == 0 and ts.S.family == "annulus":
        x = (end[0] - ts.scene.eps_in)
        j = int((x % 1) * ts.S.inner)
        kk = int(x - (x % 1))
        out.append((Fraction(len(lam_poly)),
                    ts.first_boundary + ts.S.outer + j, kk))
    return out


def _face_side_instances(ts: _TriScene, fi: int, si: int, k: int):
    """Absolute (eid, offset, wrap) of the two sides adjacent to side si of
    face fi, for the lift of that side at offset k."""
    f = ts.faces[fi]
    base = k - f.offsets[si]
    nsides = len(f.sides)
    after = (si + 1) % nsides
    before = (si - 1) % nsides
    return ((f.sides[after][0], base + f.offsets[after], f.wrap),
            (f.sides[before][0], base + f.offsets[before], f.wrap))


def _inst_match(inst: tuple[int, int], cand: tuple[int, int, int]) -> bool:
    eid, k = inst
    ceid, ck, wrap = cand
    if eid != ceid:
        return False
    if wrap == 0:
        return k == ck
    return (k - ck) % wrap == 0


def _arc_contribution(ts: _TriScene, eid: int, lam_poly) -> int:
    """Signed crossing contributions of the laminate through the
    quadrilateral of arc eid."""
    occurrences = ts.faces_with_arc(eid)
    events = _events_along(ts, lam_poly)
    total = 0
    for idx, (t, ev_eid, k) in enumerate(events):
        if ev_eid != eid:
            continue
        if idx == 0 or idx == len(events) - 1:
            continue
        prev_ev = events[idx - 1]
        next_ev = events[idx + 1]
        total += _quad_sign(ts, eid, k, occurrences,
                            (prev_ev[1], prev_ev[2]), (next_ev[1], next_ev[2]))
    return total


def _quad_sign(ts: _TriScene, eid: int, k: int, occurrences, prev_inst, next_inst) -> int:
    after_sides = []
    before_sides = []
    for (fi, si) in occurrences:
        a, b = _face_side_instances(ts, fi, si, k)
        after_sides.append(a)
        before_sides.append(b)
    prev_after = any(_inst_match(prev_inst, c) for c in after_sides)
    prev_before = any(_inst_match(prev_inst, c) for c in before_sides)
    next_after = any(_inst_match(next_inst, c) for c in after_sides)
    next_before = any(_inst_match(next_inst, c) for c in before_sides)
    if prev_after and next_after and not (prev_before or next_before):
        return SHEAR_SIGN
    if prev_before and next_before and not (prev_after or next_after):
        return -SHEAR_SIGN
    return 0


def shear_coordinates(T: Triangulation, lam: Laminate) -> tuple[int, ...]:
    """Shear coordinate vector of a laminate with respect to T, indexed by
    T's arcs."""
    if lam.surface != T.surface:
        raise DifferentSurface("laminate on a different surface")
    form = _ideal_form(T)
    ts = _TriScene(T.surface, form.scene_keys)
    if lam.kind == "core":
        return tuple(lam.copies * c for c in _core_coordinates(T, form, ts))
    out = []
    polys: dict[bool, list] = {}

    def poly(reverse: bool):
        if reverse not in polys:
            polys[reverse] = ts.scene.laminate_polyline(lam, reverse_spirals=reverse)
        return polys[reverse]

    for (mode, sidx) in form.recipe:
        if mode == "plain":
            out.append(_arc_contribution(ts, sidx, poly(form.reverse_all)))
        elif mode == "loop":
            out.append(_arc_contribution(ts, sidx, poly(False)))
        elif mode == "self_folded":
            out.append(_arc_contribution(ts, sidx, poly(True)))
        else:
            raise AssertionError(mode)
    return tuple(out)


def _core_coordinates(T: Triangulation, form: _IdealForm, ts: _TriScene) -> tuple[int, ...]:
    """Core-curve coordinates: the core crosses each bridge once; its
    contribution pattern is computed with a long horizontal segment at
    mid-height standing in for one period of the closed curve."""
    y = Fraction(1, 2)
    seg = [(Fraction(-1, 7), y), (Fraction(1) - Fraction(1, 7), y)]
    out = []
    for (mode, sidx) in form.recipe:
        assert mode == "plain"
        events = []
        for other in ts.edges:
            if other.kind != "arc":
                continue
            b0, b1 = _poly_span(other.poly)
            for k in range(int(seg[0][0] - b1) - 2, int(seg[1][0] - b0) + 2):
                for t in _poly_crossings(seg, _shift(other.poly, k)):
                    events.append((t, other.eid, k))
        events.sort(key=lambda ev: ev[0])
        total = 0
        occurrences = ts.faces_with_arc(sidx)
        for idx, (t, ev_eid, k) in enumerate(events):
            if ev_eid != sidx:
                continue
            prev_ev = events[idx - 1] if idx > 0 else events[-1]
            next_ev = events[idx + 1] if idx < len(events) - 1 else events[0]
            # wrap period offsets when borrowing events across the seam
            pk = prev_ev[2] + (-1 if idx == 0 else 0)
            nk = next_ev[2] + (1 if idx == len(events) - 1 else 0)
            total += _quad_sign(ts, sidx, k, occurrences, (prev_ev[1], pk), (next_ev[1], nk))
        out.append(total)
    return tuple(out)


# ---------------------------------------------------------------------------
# pq-split and inverse shear
# ---------------------------------------------------------------------------


def pq_split(lam: Laminate) -> tuple[Laminate, Laminate]:
    """Split an exceptional laminate into its two elementary spirals; their
    arcs form a conjugate pair."""
    if lam.kind != "exceptional":
        raise NotExceptional("pq-split applies to exceptional laminates")
    S = lam.surface
    i = lam.anchor
    return (elementary(TaggedArc(S, ("radial", i), PLAIN)),
            elementary(TaggedArc(S, ("radial", i), NOTCHED)))


def shear_of_lamination(T: Triangulation, lams: Sequence[Laminate]) -> tuple[int, ...]:
    n = len(T.arcs)
    acc = [0] * n
    for l in lams:
        v = shear_coordinates(T, l)
        acc = [a + b for a, b in zip(acc, v)]
    return tuple(acc)


def verify_arc_gvector_correspondence(T: Triangulation, budget: int = 6,
                                      exhaustive: bool = False) -> dict:
    """Walk flips of T in parallel with seed mutations of its quiver,
    checking at every node that
      * the quiver of the flipped triangulation equals the mutated quiver,
      * minus the initial-T shear vector of each arc's elementary laminate
        equals the grading g-vector of the matching cluster variable.
    With exhaustive=True the walk runs until no new triangulations appear
    (finite types only); otherwise to the given flip depth.

    Returns a report dict with the matched arc/variable counts.
    """
    from .cluster import initial_seed, mutate_seed, g_vector_of
    from .quiver import b_matrix, mutate as mutate_quiver

    q0 = quiver_of_triangulation(T)
    B0 = b_matrix(q0)
    s0 = initial_seed(q0)
    matched: dict = {}
    seen = {tuple(sorted(T.arcs))}
    frontier = [(T, s0)]
    depth = 0
    checked_nodes = 0
    while frontier and (exhaustive or depth < budget):
        nxt = []
        for (cur, seed) in frontier:
            checked_nodes += 1
            if quiver_of_triangulation(cur) != seed_mutable_quiver(seed):
                raise AssertionError("triangulation quiver drifted from seed quiver")
            for i, arc in enumerate(cur.arcs):
                g = g_vector_of(seed.cluster[i], B0)
                b = shear_coordinates(T, elementary(arc))
                if tuple(-x for x in b) != g:
                    raise AssertionError(
                        f"arc {arc.key}/{arc.tag}: -b_T = {tuple(-x for x in b)} "
                        f"but g = {g}")
                key = (arc.key, arc.tag)
                if key not in matched:
                    matched[key] = g
            for i, arc in enumerate(cur.arcs):
                T2 = flip(cur, arc)
                sig = tuple(sorted(T2.arcs))
                if sig in seen:
                    continue
                seen.add(sig)
                nxt.append((T2, mutate_seed(seed, i + 1)))
        frontier = nxt
        depth += 1
    return {
        "arcs_matched": len(matched),
        "triangulations_seen": len(seen),
        "nodes_checked": checked_nodes,
        "g_vectors": matched,
    }


def seed_mutable_quiver(seed) -> Quiver:
    """The mutable part of a seed's framed quiver."""
    n = seed.n
    arrows = [(i, j, m) for (i, j, m) in seed.framed_quiver.arrows if i <= n and j <= n]
    return Quiver.from_arrows(n, arrows)


def laminate_of_vector(T: Triangulation, v: Sequence[int], max_bound: int = 12,
                       max_size: int | None = None):
    """The unique lamination (multiset of pairwise compatible laminates)
    with shear vector v, found by bounded search; enumeration bounds grow
    geometrically up to max_bound."""
    target = tuple(v)
    if len(target) != len(T.arcs):
        raise ValueError("vector length must match the triangulation")
    if all(x == 0 for x in target):
        return ()
    if max_size is None:
        max_size = 2 * sum(abs(x) for x in target) + 4
    bound = 2
    while bound <= max_bound:
        cands = enumerate_laminates(T.surface, winding_bound=bound)
        vecs = [shear_coordinates(T, l) for l in cands]
        keep = [i for i, vec in enumerate(vecs) if any(x != 0 for x in vec)]
        order = sorted(keep, key=lambda i: (vecs[i], i))
        compat = {}

        def ok(i: int, j: int) -> bool:
            key = (min(i, j), max(i, j))
            if key not in compat:
                compat[key] = laminates_compatible(cands[i], cands[j])
            return compat[key]

        peak = max(max(abs(x) for x in vecs[i]) for i in keep)

        def dfs(pos: int, rem, chosen):
            if all(x == 0 for x in rem):
                return list(chosen)
            if len(chosen) >= max_size:
                return None
            if max(abs(x) for x in rem) > (max_size - len(chosen)) * peak:
                return None
            for oi in range(pos, len(order)):
                i = order[oi]
                if any(not ok(i, j) for j in set(chosen)):
                    continue
                nrem = tuple(a - b for a, b in zip(rem, vecs[i]))
                chosen.append(i)
                got = dfs(oi, nrem, chosen)
                chosen.pop()
                if got is not None:
                    return got
            return None

        got = dfs(0, target, [])
        if got is not None:
            return tuple(sorted(cands[i] for i in got))
        bound *= 2
    raise SearchExhausted(f"no lamination with shear vector {target} within bound {max_bound}")
