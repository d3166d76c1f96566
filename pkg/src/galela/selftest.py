"""Built-in verification matrix.

Each report function sweeps one family of cross-checks, raises
VerificationError on the first failure, and returns a JSON-ready summary
whose content is fully determined by the inputs (no timestamps, no floats,
no environment dependence), so two runs must serialize identically.
"""

from __future__ import annotations

from math import gcd

from . import bruckbose, combinat, elation, pspace, singer
from .errors import VerificationError

CENSUS_CASES = (
    (2, 1, 2), (3, 1, 2), (4, 2, 2), (4, 2, 3), (6, 2, 2),
    (6, 3, 2), (4, 2, 4), (2, 1, 8), (2, 1, 9),
)

CLASSIFICATION_PRIMES = (2, 3)
CLASSIFICATION_DEGREES = (2, 3, 4, 6)
CLASSIFICATION_LIMIT = 10**5

# known class counts, cross-checked against the closed forms
CLASSIFICATION_SPOT = {
    (2, 4, 2, 1): {"classes": 3, "minimal": 2},
    (2, 4, 2, 2): {"classes": 1},
    (2, 6, 2, 1): {"classes": 11},
}

CORRESPONDENCE_CASES = (
    (2, 4, 2, 1), (2, 4, 2, 2), (2, 6, 2, 1), (2, 6, 3, 1), (3, 2, 1, 1),
)

LEMMA1_CASES = ((2, 2, 2), (3, 2, 2))  # (r, p, h)

STAR_CASES = ((2, 2, 4, 1), (2, 2, 4, 2), (3, 2, 4, 2), (2, 3, 2, 1))  # (r, p, h, n)


def census_report(cases=CENSUS_CASES) -> list:
    """Orbit censuses against the closed-form counts and cover structure."""
    out = []
    for s, t, q in cases:
        census = singer.orbit_census(s, t, q)
        observed = len(census.orbits)
        free_observed = sum(1 for rec in census.orbits if rec.u == 1)
        predicted = singer.predicted_orbit_count(s, t, q)
        predicted_free = singer.predicted_free_orbit_count(s, t, q)
        if observed != predicted or free_observed != predicted_free:
            raise VerificationError(
                "orbit count differs from the closed form",
                {"case": [s, t, q], "observed": [observed, free_observed],
                 "predicted": [predicted, predicted_free]})
        theta_s = combinat.theta(s, q)
        spreads = 0
        for idx, rec in enumerate(census.orbits):
            members = census.orbit_members(idx)
            if gcd(t, s) % rec.u:
                raise VerificationError("stabilizer parameter does not divide gcd(t,s)",
                                        {"case": [s, t, q], "orbit": idx, "u": rec.u})
            if rec.size * combinat.theta(rec.u, q) != theta_s:
                raise VerificationError("orbit size does not match its stabilizer",
                                        {"case": [s, t, q], "orbit": idx,
                                         "size": rec.size, "u": rec.u})
            degree = combinat.exact_div(q**t - 1, q**rec.u - 1)
            if not pspace.is_cover(members, degree):
                raise VerificationError("orbit is not a uniform cover",
                                        {"case": [s, t, q], "orbit": idx,
                                         "expected_degree": degree})
            spreads += rec.u == t
        if (spreads == 1) != (s % t == 0) or spreads > 1:
            raise VerificationError("spread orbit count is wrong",
                                    {"case": [s, t, q], "spreads": spreads})
        out.append({"s": s, "t": t, "q": q, "orbits": observed,
                    "free_orbits": free_observed,
                    "sizes": [rec.size for rec in census.orbits],
                    "spread": s % t == 0})
    return out


def classification_report(primes=CLASSIFICATION_PRIMES, degrees=CLASSIFICATION_DEGREES,
                          limit=CLASSIFICATION_LIMIT) -> list:
    """Observed equivalence-class counts against the closed forms."""
    out = []
    for p in primes:
        for h in degrees:
            for m in range(1, h + 1):
                total = combinat.gaussian_binomial(h, m, p)
                if total > limit:
                    continue
                classes = elation.equivalence_classes(p, h, m)
                if sum(c.size for c in classes) != total:
                    raise VerificationError(
                        "class sizes do not add up to the subgroup count",
                        {"case": [p, h, m], "total": total,
                         "sizes": [c.size for c in classes]})
                for n in combinat.divisors(gcd(m, h)):
                    observed = sum(1 for c in classes
                                   if n in {nn for nn, _ in c.profile.admissible})
                    observed_min = sum(1 for c in classes if c.profile.minimal_n == n)
                    predicted = elation.count_classes(p, h, m, n)
                    predicted_min = elation.count_classes(p, h, m, n, minimal=True)
                    if observed != predicted or observed_min != predicted_min:
                        raise VerificationError(
                            "class count differs from the closed form",
                            {"case": [p, h, m, n],
                             "observed": [observed, observed_min],
                             "predicted": [predicted, predicted_min]})
                    out.append({"p": p, "h": h, "m": m, "n": n,
                                "classes": observed, "minimal": observed_min})
    rows = {(row["p"], row["h"], row["m"], row["n"]): row for row in out}
    for key, want in CLASSIFICATION_SPOT.items():
        row = rows.get(key)
        if row is None or row["classes"] != want["classes"] or \
                ("minimal" in want and row["minimal"] != want["minimal"]):
            raise VerificationError("spot value mismatch",
                                    {"case": list(key), "want": want, "row": row})
    return out


def correspondence_report(cases=CORRESPONDENCE_CASES) -> list:
    return [elation.verify_correspondence(p, h, m, n) for p, h, m, n in cases]


def lemma1_report(cases=LEMMA1_CASES) -> list:
    """Both directions of the conjugacy criterion over all subgroup pairs.

    Scalar-equivalent pairs must admit the diagonal conjugator (checked by
    the explicit projective identity inside conjugator); all other pairs
    must survive the exhaustive projective-group sweep with no witness.
    """
    out = []
    for r, p, h in cases:
        subs = [H for m in range(1, h + 1)
                for H in elation.enumerate_subgroups(p, h, m, r=r)]
        equivalent = 0
        inequivalent = 0
        for i, H1 in enumerate(subs):
            for H2 in subs[i:]:
                alpha = elation.scalar_equivalent(H1, H2) if H1.m == H2.m else None
                if alpha is not None:
                    elation.conjugator(H1, H2, r)
                    equivalent += 1
                elif elation.no_conjugation_witness(H1, H2, r):
                    inequivalent += 1
                else:
                    raise VerificationError(
                        "conjugation witness found for an inequivalent pair",
                        {"case": [r, p, h],
                         "first": [list(row) for row in H1.rows],
                         "second": [list(row) for row in H2.rows]})
        out.append({"r": r, "p": p, "h": h, "subgroups": len(subs),
                    "equivalent_pairs": equivalent,
                    "inequivalent_pairs": inequivalent,
                    "group_order": elation.pgl_order(r, p**h)})
    return out


def star_report(cases=STAR_CASES, seed: int = 0) -> list:
    return [bruckbose.verify_star_model(r, p, h, n, seed=seed)
            for r, p, h, n in cases]


def run_selftest() -> dict:
    return {
        "census": census_report(),
        "classification": classification_report(),
        "correspondence": correspondence_report(),
        "lemma1": lemma1_report(),
        "star": star_report(),
        "ok": True,
    }
