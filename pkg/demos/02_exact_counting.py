"""
Exact counting in projective geometry
=====================================

"""

# all counts here are exact integers; nothing is floating point
from galela import (
    divisors,
    gaussian_binomial,
    moebius,
    predicted_free_orbit_count,
    predicted_orbit_count,
    theta,
)

# theta(t, q) counts the points of a (t-1)-dimensional projective space
print("points of PG(3,2):", theta(4, 2))
print("points of PG(2,4):", theta(3, 4))

# the Gaussian binomial counts subspaces the way the ordinary binomial
# counts subsets
print("lines of PG(3,2):", gaussian_binomial(4, 2, 2))
print("planes of PG(5,2):", gaussian_binomial(6, 3, 2))

# setting q = 1 in spirit: the Gaussian binomial at small q already
# dwarfs the binomial coefficient it deforms
print([gaussian_binomial(6, k, 2) for k in range(7)])

# Moebius inversion underlies the free-orbit count; the defining property
# is that the divisor sums collapse
for n in (1, 6, 12, 30):
    print(n, [moebius(d) for d in divisors(n)], sum(moebius(d) for d in divisors(n)))

# the two closed forms: total orbit count and free orbit count of
# t-subspaces under the cyclic point-transitive group
for s, t, q in [(4, 2, 2), (6, 2, 2), (6, 3, 2)]:
    print(
        f"s={s} t={t} q={q}:",
        predicted_orbit_count(s, t, q),
        "orbits,",
        predicted_free_orbit_count(s, t, q),
        "free",
    )
