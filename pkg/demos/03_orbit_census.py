"""
Orbit census under the cyclic collineation group
================================================

"""

# a single matrix of full projective order acts on PG(s-1, q); the census
# partitions all t-subspaces into its orbits
from galela import (
    is_spread,
    orbit_census,
    predicted_orbit_count,
    singer_generator,
    theta,
)

S = singer_generator(4, 2)
print("generator matrix:", S.generator)
print("projective order:", S.projective_order)

# the 35 lines of PG(3,2) split into three orbits
census = orbit_census(4, 2, 2)
for rec in census.orbits:
    print(f"orbit: size {rec.size}, periodicity u = {rec.u}")

# the short orbit is special: its 5 lines partition the point set
short = min(range(len(census.orbits)), key=lambda i: census.orbits[i].size)
members = census.orbit_members(short)
print("short orbit is a spread:", is_spread(members))
print(
    "spread size matches point count ratio:",
    len(members) == theta(4, 2) // theta(2, 2),
)

# observed counts always agree with the closed form
for s, t, q in [(4, 2, 2), (6, 2, 2), (6, 3, 2), (4, 2, 3)]:
    census = orbit_census(s, t, q)
    assert len(census.orbits) == predicted_orbit_count(s, t, q)
    print(f"s={s} t={t} q={q}: {len(census.orbits)} orbits, as predicted")
