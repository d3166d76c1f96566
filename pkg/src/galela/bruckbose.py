"""Star model of PG(r-1, p^h) inside PG((r-1)d' , p^n), d' = h/n.

Coordinates of the big space are ordered (X00, X11..X1d', ..., X(r-1)1..
X(r-1)d'): a leading entry followed by r-1 blocks of d' small-field entries,
one block per big-field coordinate.  An affine point (1, x1, ..., x(r-1))
maps to the concatenation of the coords() blocks of the xi; a point at
infinity maps to the d'-dimensional rowspace swept out by its big-field
scalar multiples.  Those rowspaces form a spread of the hyperplane at
infinity X00 = 0, and the member coming from the center z = (0,...,0,1)
is cut out by all coordinates outside the last block.

The checks in this module verify the two orbit-geometry facts that make the
model useful for elation groups: the star image of an orbit x^E is the
affine part of the span of x* and the center section of E, all such spans
meet the center's spread element in that same section, and E acts trivially
on the hyperplane at infinity.
"""

from __future__ import annotations

import itertools
import random
from math import gcd

from . import combinat, elation, linalg, pspace
from .errors import VerificationError
from .gf import make_field

EXHAUSTIVE_LIMIT = 4096
SAMPLE_SIZE = 256


class StarFrame:
    """Fixed star representation of PG(r-1, p^h) over the subfield GF(p^n)."""

    def __init__(self, r: int, p: int, h: int, n: int):
        if r < 2:
            raise ValueError(f"need r >= 2, got {r}")
        if n < 1 or h % n != 0:
            raise ValueError(f"n = {n} does not divide h = {h}")
        self.r = r
        self.p = p
        self.h = h
        self.n = n
        self.tower = make_field(p, h)
        self.q = p**n
        self.dprime = h // n
        self.vecdim = (r - 1) * self.dprime + 1

        unit = [[1 if j == i else 0 for j in range(self.vecdim)] for i in range(self.vecdim)]
        self.astar = pspace.Subspace(self.q, tuple(tuple(row) for row in unit[1:]))

        infinite = [(0,) + pt for pt in pspace.enumerate_points(r - 1, self.tower.order)]
        self.spread = tuple(star_infinite(P, self) for P in infinite)
        assert len(self.spread) == combinat.theta(r - 1, self.tower.order)
        tally: dict[tuple, int] = {}
        for S in self.spread:
            for pt in pspace.subspace_points(S):
                tally[pt] = tally.get(pt, 0) + 1
        astar_points = set(pspace.subspace_points(self.astar))
        assert set(tally) == astar_points and all(c == 1 for c in tally.values()), \
            "field reduction did not give a spread of the hyperplane at infinity"

        self.zstar = star_infinite((0,) * (r - 1) + (1,), self)
        pad = (0,) * (1 + (r - 2) * self.dprime)
        # the center's spread element is the last coordinate block
        assert self.zstar.basis == tuple(
            pad + tuple(1 if k == j else 0 for k in range(self.dprime)) for j in range(self.dprime))
        assert self.zstar in set(self.spread)

    @property
    def affine_count(self) -> int:
        return self.tower.order ** (self.r - 1)

    def __repr__(self):
        return f"StarFrame(r={self.r}, p={self.p}, h={self.h}, n={self.n})"


def star_point(x, frame: StarFrame) -> tuple:
    """Image of an affine point (leading coordinate 1) in the big space."""
    x = tuple(x)
    if len(x) != frame.r:
        raise ValueError(f"point has {len(x)} coordinates, ambient needs {frame.r}")
    if x[0] != 1:
        raise ValueError("affine points carry a leading 1; use star_infinite at infinity")
    out = [1]
    for xi in x[1:]:
        out.extend(frame.tower.coords(xi, frame.n))
    return tuple(out)


def star_point_inverse(pt, frame: StarFrame) -> tuple:
    """Inverse of star_point on affine points of the big space."""
    pt = tuple(pt)
    if len(pt) != frame.vecdim or pt[0] != 1:
        raise ValueError("not an affine point of the star space")
    d = frame.dprime
    blocks = [pt[1 + i * d:1 + (i + 1) * d] for i in range(frame.r - 1)]
    return (1,) + tuple(frame.tower.from_coords(b, frame.n) for b in blocks)


def star_infinite(P, frame: StarFrame) -> pspace.Subspace:
    """Spread element of a point at infinity of PG(r-1, p^h).

    The big-field multiples c*P, c running over a coords basis of GF(p^h)
    over GF(p^n), span the element; any other multiple is a GF(p^n)-combo
    of these, so the result does not depend on the normalization of P.
    """
    tower = frame.tower
    P = pspace.normalize_point(P, tower.order)
    if P[0] != 0:
        raise ValueError("point is affine; use star_point")
    rows = []
    c = 1
    for _ in range(frame.dprime):
        row = [0]
        for xi in P[1:]:
            row.extend(tower.coords(tower.mul(c, xi), frame.n))
        rows.append(tuple(row))
        c = tower.mul(c, tower.mu)
    X = pspace.span(rows, frame.q)
    assert X.t == frame.dprime
    return X


def embed_center_section(X: pspace.Subspace, frame: StarFrame) -> pspace.Subspace:
    """Place a subspace of GF(p^n)^d' into the last coordinate block."""
    if X.q != frame.q or X.s != frame.dprime:
        raise ValueError("subspace does not live in the center's coordinate block")
    pad = (0,) * (1 + (frame.r - 2) * frame.dprime)
    return pspace.Subspace(frame.q, tuple(pad + row for row in X.basis))


def translation_matrix(lam: int, frame: StarFrame) -> tuple:
    """Star-space collineation induced by the elation with parameter lam."""
    tower = frame.tower
    rows = [[1 if i == j else 0 for j in range(frame.vecdim)] for i in range(frame.vecdim)]
    block = tower.coords(lam, frame.n)
    start = 1 + (frame.r - 2) * frame.dprime
    for j, v in enumerate(block):
        rows[start + j][0] = v
    return tuple(tuple(row) for row in rows)


def _shifted(x, lam, tower):
    # the elation with parameter lam adds lam to the last coordinate of an
    # affine point (1, x1, ..., x(r-1))
    return x[:-1] + (tower.add(x[-1], lam),)


def orbit_image(x, E: elation.ElationGroup, frame: StarFrame):
    """Star image of the orbit of an affine point x under the group of E.

    Returns (closure, affine): the projective closure of the image points in
    canonical form, and whether the image is exactly the affine part of that
    closure.  The closure is asserted equal to the span of x* and the
    embedded center section of E, which is the model's central identity.
    """
    if E.tower is not frame.tower:
        raise ValueError("subgroup and frame use different fields")
    prof = elation.dimension_profile(E)
    if frame.n not in {nn for nn, _ in prof.admissible}:
        raise ValueError(f"subgroup is not a GF({frame.p}^{frame.n})-space")
    x = tuple(x)
    if len(x) != frame.r or x[0] != 1:
        raise ValueError("orbit base point must be affine and normalized")
    tower = frame.tower
    images = {star_point(_shifted(x, lam, tower), frame) for lam in E.elements()}
    assert len(images) == tower.p ** E.m
    closure = pspace.span(sorted(images), frame.q)
    d = E.m // frame.n
    assert closure.t == d + 1
    section = embed_center_section(elation.subspace_of_center(E, frame.n), frame)
    expected = pspace.span([star_point(x, frame)] + list(section.basis), frame.q)
    assert closure == expected, "orbit closure differs from the span of x* and the center section"
    affine = {pt for pt in pspace.subspace_points(closure) if pt[0] != 0} == images
    return closure, affine


def _intersection_failure(E, frame, sample):
    tower = frame.tower
    small = pspace.field_for(frame.q)
    section = embed_center_section(elation.subspace_of_center(E, frame.n), frame)
    for x in sample:
        closure, affine = orbit_image(x, E, frame)
        got = pspace.subspace_intersection(closure, frame.zstar)
        if got != section:
            return {"kind": "center section differs", "point": list(x),
                    "expected": [list(r) for r in section.basis],
                    "got": None if got is None else [list(r) for r in got.basis]}
        if not affine:
            return {"kind": "orbit image is not an affine subspace", "point": list(x)}
    astar_points = pspace.subspace_points(frame.astar)
    for lam in E.elements():
        T = translation_matrix(lam, frame)
        for a in astar_points:
            if pspace.normalize_point(linalg.matvec(T, a, small), frame.q) != a:
                return {"kind": "hyperplane at infinity moved", "lam": lam, "point": list(a)}
        for x in sample:
            lhs = star_point(_shifted(x, lam, tower), frame)
            rhs = pspace.normalize_point(linalg.matvec(T, star_point(x, frame), small), frame.q)
            if lhs != rhs:
                return {"kind": "star map does not commute with the elation",
                        "lam": lam, "point": list(x)}
    return None


def common_intersection_check(E: elation.ElationGroup, frame: StarFrame, sample) -> bool:
    """Every sampled orbit closure meets zstar in the center section of E.

    Also confirms the induced star collineations fix the hyperplane at
    infinity pointwise and commute with star_point on the sample.
    """
    sample = list(sample)
    if not sample:
        raise ValueError("empty sample")
    return _intersection_failure(E, frame, sample) is None


def _incidence_failure(frame, sample):
    tower = frame.tower
    bigq = tower.order
    for spec in sample:
        x, y = spec
        x = pspace.normalize_point(x, bigq)
        y = pspace.normalize_point(y, bigq)
        if x == y:
            raise ValueError("degenerate line spec: the two points coincide")
        line = pspace.span([x, y], bigq)
        pts = pspace.subspace_points(line)
        affine = [P for P in pts if P[0] != 0]
        infinite = [P for P in pts if P[0] == 0]
        if affine:
            if len(infinite) != 1:
                return {"kind": "line off the hyperplane has several infinite points",
                        "spec": [list(x), list(y)]}
            S = star_infinite(infinite[0], frame)
            stars = {star_point(P, frame) for P in affine}
            closure = pspace.span(sorted(stars) + list(S.basis), frame.q)
            if closure.t != frame.dprime + 1:
                return {"kind": "affine line image has wrong rank",
                        "spec": [list(x), list(y)], "rank": closure.t}
            if pspace.subspace_intersection(closure, frame.astar) != S:
                return {"kind": "affine line image does not cut a spread element",
                        "spec": [list(x), list(y)]}
            if {pt for pt in pspace.subspace_points(closure) if pt[0] != 0} != stars:
                return {"kind": "line image has extra affine points",
                        "spec": [list(x), list(y)]}
        else:
            closure = pspace.subspace_sum(star_infinite(x, frame), star_infinite(y, frame))
            if closure.t != 2 * frame.dprime:
                return {"kind": "infinite line span has wrong rank",
                        "spec": [list(x), list(y)], "rank": closure.t}
            for P in pts:
                SP = star_infinite(P, frame)
                if not all(pspace.contains(closure, row) for row in SP.basis):
                    return {"kind": "spread element escapes the infinite line span",
                            "spec": [list(x), list(y)], "point": list(P)}
    return None


def incidence_check(frame: StarFrame, sample) -> bool:
    """Star images of sampled lines behave like lines of the model.

    A line with affine points maps onto a (d')-rank subspace whose affine
    part is the image point set and whose infinite section is a spread
    element; a line inside the hyperplane at infinity maps into the span of
    two spread elements.
    """
    return _incidence_failure(frame, list(sample)) is None


def sample_affine_points(frame: StarFrame, size: int = SAMPLE_SIZE, seed: int = 0,
                         force: bool = False) -> list:
    """All affine points when few enough (or forced), otherwise a seeded sample."""
    tower = frame.tower
    if force or frame.affine_count <= EXHAUSTIVE_LIMIT:
        return [(1,) + rest for rest in itertools.product(range(tower.order), repeat=frame.r - 1)]
    rng = random.Random(seed)
    seen: dict[tuple, None] = {}
    while len(seen) < size:
        seen[(1,) + tuple(rng.randrange(tower.order) for _ in range(frame.r - 1))] = None
    return list(seen)


def sample_line_specs(frame: StarFrame, size: int = SAMPLE_SIZE, seed: int = 0,
                      force: bool = False) -> list:
    """Distinct point pairs of PG(r-1, p^h): all of them when few, else sampled."""
    pts = pspace.enumerate_points(frame.r, frame.tower.order)
    pairs = list(itertools.combinations(pts, 2))
    if force or len(pairs) <= EXHAUSTIVE_LIMIT:
        return pairs
    rng = random.Random(seed)
    return rng.sample(pairs, size)


def admissible_orders(h: int, n: int) -> list:
    """Subgroup ranks m for which GF(p^n)-closed subgroups of GF(p^h) exist."""
    return [m for m in range(1, h + 1) if m % n == 0]


def verify_star_model(r: int, p: int, h: int, n: int, m=None, seed: int = 0,
                       exhaustive: bool = False) -> dict:
    """Full orbit-geometry verification for one frame; raises on any failure.

    Sweeps every GF(p^n)-closed subgroup of each admissible order (or just
    order p^m when m is given), checks all orbit images against the span
    identity and the common center section, then checks line incidences.
    """
    frame = StarFrame(r, p, h, n)
    sample = sample_affine_points(frame, seed=seed, force=exhaustive)
    orders = [m] if m is not None else admissible_orders(h, n)
    tower = frame.tower
    per_order = []
    for mm in orders:
        if mm % n != 0 or not 1 <= mm <= h:
            raise ValueError(f"order exponent {mm} is not admissible for n = {n}")
        groups = [H for H in elation.enumerate_subgroups(p, h, mm, r=r)
                  if n in {nn for nn, _ in elation.dimension_profile(H).admissible}]
        for H in groups:
            failure = _intersection_failure(H, frame, sample)
            if failure is not None:
                failure.update({"params": [r, p, h, n], "m": mm,
                                "subgroup": [list(row) for row in H.rows]})
                raise VerificationError("orbit geometry check failed", failure)
        per_order.append({
            "m": mm,
            "d": mm // n,
            "subgroups": len(groups),
            "orbits_checked": len(groups) * len(sample),
        })
    specs = sample_line_specs(frame, seed=seed, force=exhaustive)
    failure = _incidence_failure(frame, specs)
    if failure is not None:
        failure["params"] = [r, p, h, n]
        raise VerificationError("incidence check failed", failure)
    return {
        "params": {"r": r, "p": p, "h": h, "n": n},
        "ambient": {"vecdim": frame.vecdim, "q": frame.q,
                    "spread_size": len(frame.spread)},
        "sample": {"affine_points": len(sample),
                   "exhaustive": exhaustive or frame.affine_count <= EXHAUSTIVE_LIMIT,
                   "line_specs": len(specs), "seed": seed},
        "orders": per_order,
        "ok": True,
    }
