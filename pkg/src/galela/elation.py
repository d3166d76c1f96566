"""Elation groups of PG(r-1, p^h) with fixed center and axis.

Convention: the center is z = (0,...,0,1) and the axis is the hyperplane
X0 = 0.  The elation with parameter lam is the identity matrix with lam in
the lower-left corner, and lam -> M_lam is an isomorphism from the additive
group of GF(p^h) onto the full (z, axis)-elation group.  A subgroup of order
p^m is therefore the same thing as an m-dimensional GF(p)-subspace H of the
field, carried here by the RREF basis of its coefficient vectors.

Two subgroups give PGL-conjugate elation groups exactly when one is a
GF(p^h)-scalar multiple of the other, so classification means partitioning
subgroups into orbits under multiplication by the designated generator mu.
The subfield structure of a subgroup (the largest GF(p^n) it is a vector
space over) is scalar-invariant and refines the classification; the
correspondence checker maps each class through coords() onto a subspace of
PG(h/n - 1, p^n) and confirms the classes biject with Singer orbits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import combinat, linalg, pspace, singer
from .errors import CapExceeded, VerificationError
from .gf import FieldTower, make_field

PGL_CAP = 10**7


@dataclass(frozen=True)
class ElationGroup:
    """Additive subgroup of GF(p^h) presented by an RREF coefficient basis."""

    tower: FieldTower
    r: int
    rows: tuple  # m rows of h base-p digits, reduced echelon, pivots ascending

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def basis_elements(self) -> tuple:
        return tuple(self.tower.from_coeffs(row) for row in self.rows)

    def elements(self) -> tuple:
        """All p^m members as field encodings, sorted."""
        tower = self.tower
        out = [0]
        for b in self.basis_elements:
            shifts = [tower.mul(c, b) for c in range(tower.p)]
            out = [tower.add(x, s) for s in shifts for x in out]
        assert len(set(out)) == tower.p ** self.m
        return tuple(sorted(out))

    def matrices(self) -> tuple:
        return tuple(elation_matrix(self.tower, lam, self.r) for lam in self.elements())

    def contains(self, lam: int) -> bool:
        tower = self.tower
        p = tower.p
        v = list(tower.coeffs(lam))
        for row in self.rows:
            c = next(j for j, x in enumerate(row) if x)
            f = v[c]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return not any(v)


@dataclass(frozen=True)
class DimensionProfile:
    admissible: tuple  # (n, dimension over GF(p^n)) pairs, n ascending
    minimal_n: int
    minimal_d: int


@dataclass(frozen=True)
class EquivalenceClass:
    representative: ElationGroup
    members: tuple
    witness_scalars: tuple  # alpha with alpha * representative == member, aligned
    profile: DimensionProfile

    @property
    def size(self) -> int:
        return len(self.members)


def elation_matrix(tower: FieldTower, lam: int, r: int):
    """r x r elation matrix: identity plus lam at position (r-1, 0)."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if not 0 <= lam < tower.order:
        raise ValueError(f"{lam} is not an element of {tower!r}")
    rows = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    rows[r - 1][0] = lam
    return tuple(tuple(row) for row in rows)


def _group_from_rows(tower, r, raw_rows):
    prime = make_field(tower.p, 1)
    red, _ = linalg.rref(raw_rows, prime)
    return ElationGroup(tower, r, red)


def group_from_elements(tower: FieldTower, elems, r: int = 3) -> ElationGroup:
    """Subgroup generated (as a GF(p)-space) by the given field elements."""
    rows = [tower.coeffs(e) for e in elems]
    return _group_from_rows(tower, r, rows)


def enumerate_subgroups(p: int, h: int, m: int, r: int = 3, cap=None) -> list[ElationGroup]:
    """All additive subgroups of GF(p^h) of order p^m, sorted canonically."""
    if not 1 <= m <= h:
        raise ValueError(f"bad subgroup rank {m} for GF({p}^{h})")
    tower = make_field(p, h)
    fam = pspace.enumerate_subspaces(h, m, p, cap=cap)
    return [ElationGroup(tower, r, X.basis) for X in fam]


def scalar_multiple(H: ElationGroup, alpha: int) -> ElationGroup:
    """The subgroup alpha * H."""
    tower = H.tower
    if alpha == 0:
        raise ValueError("zero is not a valid scalar for a subgroup")
    rows = [tower.coeffs(tower.mul(alpha, e)) for e in H.basis_elements]
    return _group_from_rows(tower, H.r, rows)


def dimension_profile(H: ElationGroup) -> DimensionProfile:
    """Admissible subfields: n with H closed under GF(p^n)-scalars.

    Closure under the canonical subfield generator suffices, since the whole
    subfield is its GF(p)-span of powers.  Candidates are the divisors of
    gcd(m, h), and the admissible set is closed under lcm, so it has a
    unique maximum: the field over which H has minimal dimension.
    """
    tower = H.tower
    admissible = []
    for n in combinat.divisors(gcd(H.m, tower.h)):
        gamma = tower.subfield_generator(n)
        if all(H.contains(tower.mul(gamma, b)) for b in H.basis_elements):
            admissible.append((n, H.m // n))
    assert admissible and admissible[0] == (1, H.m)
    minimal_n = max(n for n, _ in admissible)
    return DimensionProfile(tuple(admissible), minimal_n, H.m // minimal_n)


def scalar_equivalent(H1: ElationGroup, H2: ElationGroup):
    """Least mu-power alpha with alpha * H1 == H2, else None.

    Prime-field scalars fix every subgroup, so the search covers the coset
    representatives mu^k, 0 <= k < (p^h - 1)/(p - 1), of GF(p^h)* over GF(p)*.
    """
    tower = H1.tower
    if H2.tower is not tower or H1.m != H2.m:
        raise ValueError("subgroups live in different settings")
    for k in range(combinat.theta(tower.h, tower.p)):
        alpha = tower.exp[k]
        if scalar_multiple(H1, alpha).rows == H2.rows:
            return alpha
    return None


def equivalence_classes(p: int, h: int, m: int, r: int = 3, cap=None) -> list[EquivalenceClass]:
    """Partition all order-p^m subgroups into scalar-multiplication classes.

    Classes come back sorted by representative (the lexicographically least
    RREF basis in the class); each member carries a witness scalar mapping
    the representative onto it.  The dimension profile is computed for the
    representative and asserted constant across the class.
    """
    subs = enumerate_subgroups(p, h, m, r=r, cap=cap)
    tower = make_field(p, h)
    mu = tower.mu
    period = tower.order - 1
    visited = set()
    classes = []
    for H in subs:
        if H.rows in visited:
            continue
        walk = [H]
        exps = [0]
        cur = scalar_multiple(H, mu)
        k = 1
        while cur.rows != H.rows:
            walk.append(cur)
            exps.append(k)
            cur = scalar_multiple(cur, mu)
            k += 1
        rep_pos = min(range(len(walk)), key=lambda i: walk[i].rows)
        rep = walk[rep_pos]
        tagged = sorted(
            ((member, tower.pow(mu, (e - exps[rep_pos]) % period))
             for member, e in zip(walk, exps)),
            key=lambda pair: pair[0].rows)
        profile = dimension_profile(rep)
        for member, alpha in tagged:
            assert scalar_multiple(rep, alpha).rows == member.rows
            assert dimension_profile(member) == profile, "profile varies inside a class"
        classes.append(EquivalenceClass(
            rep, tuple(mb for mb, _ in tagged), tuple(al for _, al in tagged), profile))
        visited.update(member.rows for member in walk)
    classes.sort(key=lambda c: c.representative.rows)
    return classes


def conjugator(H1: ElationGroup, H2: ElationGroup, r: int):
    """Diagonal matrix conjugating the elation group of H1 onto that of H2.

    Requires scalar equivalence alpha * H1 == H2; the returned matrix is the
    identity with alpha in the last diagonal slot, and the projective
    identity g M_lam g^-1 == M_(alpha lam) is checked for every lam in H1.
    """
    alpha = scalar_equivalent(H1, H2)
    if alpha is None:
        raise ValueError("subgroups are not scalar-equivalent; no diagonal conjugator exists")
    tower = H1.tower
    g = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    g[r - 1][r - 1] = alpha
    g = tuple(tuple(row) for row in g)
    ginv = linalg.mat_inverse(g, tower)
    for lam in H1.elements():
        lhs = linalg.matmul(linalg.matmul(g, elation_matrix(tower, lam, r), tower), ginv, tower)
        rhs = elation_matrix(tower, tower.mul(alpha, lam), r)
        assert linalg.scale_projective(lhs, tower) == linalg.scale_projective(rhs, tower)
    return g


def pgl_order(r: int, q: int) -> int:
    num = 1
    for i in range(r):
        num *= q**r - q**i
    return combinat.exact_div(num, q - 1)


def _grow_span(spanned, v, tower):
    out = set(spanned)
    for c in range(1, tower.order):
        cv = tuple(tower.mul(c, x) for x in v)
        for w in spanned:
            out.add(tuple(tower.add(a, b) for a, b in zip(w, cv)))
    return out


def _iterate_pgl(r: int, tower: FieldTower):
    """All of PGL(r, q), one matrix per projective class.

    The first row is a normalized projective point, later rows are arbitrary
    vectors outside the span of the earlier ones.
    """
    q = tower.order
    nonzero = [v for v in itertools.product(range(q), repeat=r) if any(v)]

    def extend(rows, spanned):
        if len(rows) == r:
            yield tuple(rows)
            return
        for v in nonzero:
            if v not in spanned:
                yield from extend(rows + [v], _grow_span(spanned, v, tower))

    origin = {(0,) * r}
    for fr in pspace.enumerate_points(r, q):
        yield from extend([fr], _grow_span(origin, fr, tower))


def no_conjugation_witness(H1: ElationGroup, H2: ElationGroup, r: int, cap: int = PGL_CAP) -> bool:
    """Exhaustively confirm no g in PGL(r, p^h) conjugates E(H1) onto E(H2).

    Conjugating the matrix set of E(H1) onto that of E(H2) means equality of
    the projective sets {g M g^-1} and {N}, which is the same as equality of
    {g M} and {N g}; the sweep tests the latter so no inverses are needed.
    Returns True when no witness exists, False as soon as one is found.
    """
    tower = H1.tower
    if H2.tower is not tower:
        raise ValueError("subgroups live in different fields")
    size = pgl_order(r, tower.order)
    if size > cap:
        raise CapExceeded(f"|PGL({r},{tower.order})| = {size} exceeds cap {cap}")
    mats1 = [elation_matrix(tower, lam, r) for lam in H1.elements() if lam]
    mats2 = [elation_matrix(tower, lam, r) for lam in H2.elements()]
    count = 0
    for g in _iterate_pgl(r, tower):
        count += 1
        right = {linalg.scale_projective(linalg.matmul(N, g, tower), tower) for N in mats2}
        # lam = 0 always matches through N = identity, so it is skipped
        if len(mats1) + 1 == len(right) and all(
                linalg.scale_projective(linalg.matmul(g, M, tower), tower) in right
                for M in mats1):
            return False
    assert count == size
    return True


def subspace_of_center(H: ElationGroup, n: int) -> pspace.Subspace:
    """Image of H under coords(., n): an (m/n)-subspace of PG(h/n - 1, p^n)."""
    tower = H.tower
    prof = dimension_profile(H)
    if n not in {nn for nn, _ in prof.admissible}:
        raise ValueError(f"subgroup is not a GF({tower.p}^{n})-space")
    vecs = [tower.coords(b, n) for b in H.basis_elements]
    X = pspace.span(vecs, tower.p**n)
    assert X.t == H.m // n
    return X


def group_from_subspace(X: pspace.Subspace, h: int, r: int = 3) -> ElationGroup:
    """Inverse of subspace_of_center: rebuild the subgroup from its subspace."""
    p, n = combinat.prime_power(X.q)
    tower = make_field(p, h)
    gamma = tower.subfield_generator(n)
    raw = []
    for row in X.basis:
        e = tower.from_coords(row, n)
        g = 1
        for _ in range(n):
            raw.append(tower.coeffs(tower.mul(g, e)))
            g = tower.mul(g, gamma)
    H = _group_from_rows(tower, r, raw)
    assert H.m == n * X.t
    return H


def count_classes(p: int, h: int, m: int, n: int, minimal: bool = False) -> int:
    """Closed-form count of classes of order-p^m subgroups that are GF(p^n)-spaces.

    With minimal=True, counts only the classes whose largest admissible
    subfield is exactly GF(p^n).
    """
    if not combinat.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= m <= h:
        raise ValueError(f"bad subgroup rank {m} for GF({p}^{h})")
    if n < 1 or gcd(m, h) % n != 0:
        raise ValueError(f"n = {n} does not divide gcd({m}, {h})")
    if minimal:
        return singer.predicted_free_orbit_count(h // n, m // n, p**n)
    return singer.predicted_orbit_count(h // n, m // n, p**n)


def subgroup_count(p: int, h: int, m: int, n: int = 1) -> int:
    """Raw number of GF(p^n)-closed subgroups of order p^m (not classes)."""
    if n < 1 or gcd(m, h) % n != 0:
        raise ValueError(f"n = {n} does not divide gcd({m}, {h})")
    return combinat.gaussian_binomial(h // n, m // n, p**n)


def verify_correspondence(p: int, h: int, m: int, n: int, cap=None) -> dict:
    """Check that classes of GF(p^n)-closed subgroups biject with Singer orbits.

    subspace_of_center must send each class into a single orbit of
    (m/n)-subspaces of PG(h/n - 1, p^n), hitting every orbit exactly once,
    and the classes of minimal dimension must land exactly on the free
    orbits (u = 1).  Raises VerificationError with a counterexample if any
    part fails; returns a summary dict when everything holds.
    """
    if n < 1 or gcd(m, h) % n != 0:
        raise ValueError(f"n = {n} does not divide gcd({m}, {h})")
    classes = [c for c in equivalence_classes(p, h, m, cap=cap)
               if n in {nn for nn, _ in c.profile.admissible}]
    census = singer.orbit_census(h // n, m // n, p**n, cap=cap)

    class_orbit = []
    for c in classes:
        idxs = {census.orbit_index(subspace_of_center(H, n)) for H in c.members}
        if len(idxs) != 1:
            raise VerificationError(
                "class scatters over several orbits",
                {"params": [p, h, m, n],
                 "class_representative": [list(r) for r in c.representative.rows],
                 "orbit_indices": sorted(idxs)})
        class_orbit.append(idxs.pop())

    if len(set(class_orbit)) != len(classes):
        raise VerificationError("class-to-orbit map is not injective",
                                {"params": [p, h, m, n], "orbit_indices": class_orbit})
    if set(class_orbit) != set(range(len(census.orbits))):
        raise VerificationError("class-to-orbit map is not surjective",
                                {"params": [p, h, m, n],
                                 "hit": sorted(set(class_orbit)),
                                 "orbits": len(census.orbits)})

    minimal_classes = 0
    for c, oi in zip(classes, class_orbit):
        is_minimal = c.profile.minimal_n == n
        minimal_classes += is_minimal
        if is_minimal != (census.orbits[oi].u == 1):
            raise VerificationError(
                "minimal-dimension refinement mismatch",
                {"params": [p, h, m, n],
                 "class_representative": [list(r) for r in c.representative.rows],
                 "minimal_n": c.profile.minimal_n, "orbit_u": census.orbits[oi].u})

    return {
        "params": {"p": p, "h": h, "m": m, "n": n},
        "classes": len(classes),
        "orbits": len(census.orbits),
        "bijection": True,
        "minimal_classes": minimal_classes,
        "free_orbits": sum(1 for rec in census.orbits if rec.u == 1),
        "minimal_match": True,
        "predicted_classes": count_classes(p, h, m, n),
        "predicted_minimal": count_classes(p, h, m, n, minimal=True),
    }
