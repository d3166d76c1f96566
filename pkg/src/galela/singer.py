"""Singer cyclic groups of PG(s-1, q) and their subspace orbit censuses.

The generator is the companion matrix of the minimal polynomial over GF(q)
of the designated generator mu of GF(q^s).  Acting on coordinate columns in
the power basis 1, mu, ..., mu^(s-1), that matrix is exactly multiplication
by mu, which is what ties the orbit structure here to the scalar action on
additive subgroups in the elation module.

Each orbit record carries the stabilizer parameter u: the orbit has length
theta(s,q)/theta(u,q) and its members sweep out a cover in which every point
of PG(s-1,q) lies on exactly theta(t,q)/theta(u,q) members.  Both facts are
re-verified for every orbit of every census rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import combinat, linalg, pspace
from .errors import CapExceeded
from .gf import FIELD_ORDER_CAP, make_field

DEFAULT_CENSUS_CAP = 10**6

_CENSUS_MEMO: dict[tuple[int, int, int], "OrbitCensus"] = {}


class SingerGroup:
    """Cyclic collineation group acting transitively on the points of PG(s-1,q)."""

    def __init__(self, s, q, generator, projective_order, field):
        self.s = s
        self.q = q
        self.generator = generator
        self.projective_order = projective_order
        self.field = field
        self._powers = {0: linalg.identity(s), 1: generator}

    def matrix_power(self, k: int):
        k %= self.projective_order
        if k not in self._powers:
            self._powers[k] = linalg.mat_pow(self.generator, k, self.field)
        return self._powers[k]

    def __repr__(self):
        return f"SingerGroup(s={self.s}, q={self.q})"


def singer_generator(s: int, q: int) -> SingerGroup:
    """Canonical Singer group of PG(s-1, q), invariants verified on the spot."""
    if s < 2:
        raise ValueError(f"need ambient dimension s >= 2, got {s}")
    p, n = combinat.prime_power(q)
    if q**s > FIELD_ORDER_CAP:
        raise CapExceeded(f"GF({q}^{s}) exceeds the field order cap")
    big = make_field(p, n * s)
    small = make_field(p, n)
    mpoly = big.minimal_polynomial(big.mu, n)
    assert len(mpoly) == s + 1, "designated generator is not primitive over the subfield"
    coeffs = [big.to_subfield(c, n) for c in mpoly[:-1]]
    gen = [[0] * s for _ in range(s)]
    for j in range(s - 1):
        gen[j + 1][j] = 1
    for i in range(s):
        gen[i][s - 1] = small.neg(coeffs[i])
    gen = tuple(tuple(r) for r in gen)

    # projective order: first power that is a scalar matrix
    order = combinat.theta(s, q)
    mat = gen
    k = 1
    while not _is_scalar(mat):
        mat = linalg.matmul(mat, gen, small)
        k += 1
        assert k <= order, "projective order overshot theta(s,q)"
    assert k == order, f"projective order {k} != theta={order}"
    scalar = mat[0][0]
    assert small.element_order(scalar) * order == q**s - 1, "linear order is not q^s - 1"

    group = SingerGroup(s, q, gen, order, small)

    # point transitivity
    start = (1,) + (0,) * (s - 1)
    pt = start
    seen = set()
    while True:
        seen.add(pt)
        pt = pspace.normalize_point(linalg.matvec(gen, pt, small), q)
        if pt == start:
            break
    assert len(seen) == order, "point action is not transitive"
    return group


def _is_scalar(mat):
    d = mat[0][0]
    if d == 0:
        return False
    k = len(mat)
    return all(mat[i][j] == (d if i == j else 0) for i in range(k) for j in range(k))


def act(S: SingerGroup, X: pspace.Subspace, k: int = 1) -> pspace.Subspace:
    """Image of X under the k-th power of the Singer generator."""
    if X.q != S.q or X.s != S.s:
        raise ValueError(f"subspace of PG({X.s - 1},{X.q}) fed to {S!r}")
    mat = S.matrix_power(k)
    rows = [linalg.matvec(mat, row, S.field) for row in X.basis]
    return pspace.canonicalize(rows, S.q)


@dataclass(frozen=True)
class OrbitRecord:
    representative: pspace.Subspace
    size: int
    u: int


class OrbitCensus:
    """All Singer orbits on t-dimensional subspaces, sorted by (u, representative)."""

    def __init__(self, s, t, q, orbits, members):
        self.s = s
        self.t = t
        self.q = q
        self.orbits = orbits
        self._members = members
        self._index = {X.basis: i for i, mem in enumerate(members) for X in mem}

    def orbit_index(self, X: pspace.Subspace) -> int:
        try:
            return self._index[X.basis]
        except KeyError:
            raise ValueError("subspace not covered by this census") from None

    def orbit_members(self, i: int):
        return self._members[i]

    def __len__(self):
        return len(self.orbits)


def _walk_orbit(S: SingerGroup, X: pspace.Subspace):
    members = [X]
    Y = act(S, X, 1)
    while Y.basis != X.basis:
        members.append(Y)
        Y = act(S, Y, 1)
    return members


def orbit(S: SingerGroup, X: pspace.Subspace) -> OrbitRecord:
    """Orbit of X with its stabilizer parameter u, cross-checked two ways."""
    members = _walk_orbit(S, X)
    return _record_for(S, X.t, members)


def _record_for(S: SingerGroup, t: int, members) -> OrbitRecord:
    size = len(members)
    q = S.q
    theta_u = combinat.exact_div(combinat.theta(S.s, q), size)
    u = next((d for d in combinat.divisors(_gcd(t, S.s))
              if combinat.theta(d, q) == theta_u), None)
    assert u is not None, f"orbit size {size} fits no divisor of gcd({t},{S.s})"
    rep = min(members, key=lambda m: m.basis)
    fixed = act(S, rep, combinat.exact_div(combinat.theta(S.s, q), combinat.theta(u, q)))
    assert fixed.basis == rep.basis, "stabilizer power does not fix the representative"
    return OrbitRecord(rep, size, u)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def orbit_census(s: int, t: int, q: int, cap=None) -> OrbitCensus:
    """Partition all t-dimensional subspaces of PG(s-1,q) into Singer orbits.

    Verifies, per orbit: the u-derivation, the fixing property, and the
    cover property (every point on exactly theta(t)/theta(u) members); and
    globally: sizes sum to the Gaussian binomial, and a spread orbit exists
    and is unique exactly when t divides s.
    """
    key = (s, t, q)
    if cap is None and key in _CENSUS_MEMO:
        return _CENSUS_MEMO[key]
    limit = DEFAULT_CENSUS_CAP if cap is None else int(cap)
    total = combinat.gaussian_binomial(s, t, q)
    if total > limit:
        raise CapExceeded(f"{total} subspaces exceed census cap {limit}")
    fam = pspace.enumerate_subspaces(s, t, q, cap=max(limit, total))
    S = singer_generator(s, q)
    visited = set()
    raw = []
    for X in fam:
        if X.basis in visited:
            continue
        members = _walk_orbit(S, X)
        visited.update(m.basis for m in members)
        raw.append((_record_for(S, t, members), tuple(members)))

    assert sum(rec.size for rec, _ in raw) == total, "orbit sizes do not sum to the subspace count"
    for rec, members in raw:
        degree = combinat.exact_div(combinat.theta(t, q), combinat.theta(rec.u, q))
        assert pspace.is_cover(members, degree), \
            f"orbit of {rec.representative.basis} is not a (t-1,{degree})-cover"
    spreads = [rec for rec, _ in raw if rec.u == t]
    if s % t == 0:
        assert len(spreads) == 1, f"expected a unique spread orbit, found {len(spreads)}"
    else:
        assert not spreads, "spread orbit found although t does not divide s"

    raw.sort(key=lambda pair: (pair[0].u, pair[0].representative.basis))
    census = OrbitCensus(s, t, q,
                         tuple(rec for rec, _ in raw),
                         tuple(mem for _, mem in raw))
    if cap is None:
        _CENSUS_MEMO[key] = census
    return census


def predicted_orbit_count(s: int, d: int, q: int) -> int:
    """Closed-form number of Singer orbits on d-dimensional subspaces."""
    if not 1 <= d <= s:
        raise ValueError(f"bad subspace dimension {d} in ambient {s}")
    total = 0
    for t in combinat.divisors(_gcd(d, s)):
        inner = sum(combinat.moebius(t // u) * combinat.theta(u, q)
                    for u in combinat.divisors(t))
        total += combinat.gaussian_binomial(s // t, d // t, q**t) * inner
    return combinat.exact_div(total, combinat.theta(s, q))


def predicted_free_orbit_count(s: int, d: int, q: int) -> int:
    """Closed-form number of orbits with trivial stabilizer (u = 1)."""
    if not 1 <= d <= s:
        raise ValueError(f"bad subspace dimension {d} in ambient {s}")
    total = 0
    for t in combinat.divisors(_gcd(d, s)):
        total += combinat.moebius(t) * combinat.gaussian_binomial(s // t, d // t, q**t)
    return combinat.exact_div(total, combinat.theta(s, q))


def spread_orbit(s: int, t: int, q: int, cap=None) -> OrbitRecord:
    """The unique orbit that partitions the points, for t | s.

    Also samples 2t-dimensional subspaces spanned by member pairs and checks
    the spread fills each of them (members inside or disjoint).
    """
    if s % t != 0:
        raise ValueError(f"no spread of {t}-subspaces in PG({s - 1},{q}) since {t} does not divide {s}")
    census = orbit_census(s, t, q, cap=cap)
    hits = [i for i, rec in enumerate(census.orbits) if rec.u == t]
    assert len(hits) == 1
    idx = hits[0]
    rec = census.orbits[idx]
    members = census.orbit_members(idx)
    assert pspace.is_spread(members), "spread orbit fails the partition check"
    if 2 * t <= s:
        pool = sorted(members, key=lambda m: m.basis)[:5]
        pairs = [(a, b) for i, a in enumerate(pool) for b in pool[i + 1:]][:10]
        for a, b in pairs:
            W = pspace.subspace_sum(a, b)
            assert W.t == 2 * t
            assert pspace.fills(members, W), "spread does not fill a member-pair span"
    return rec
