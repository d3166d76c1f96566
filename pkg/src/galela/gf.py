"""Arithmetic in GF(p^h) and its lattice of subfields.

Field elements are plain ints in [0, p**h): the base-p digits of the int are
the coefficients, ascending degree, of the polynomial representative modulo
the field's irreducible modulus.  A FieldTower owns the tables for one field
and exposes arithmetic as methods; the int encoding keeps elements hashable
and cheap to move through orbit enumerations.

Construction is deterministic.  The modulus is the first monic irreducible of
degree h in ascending integer-encoding order (for h = 1 this lands on the
polynomial x), and the designated generator mu is the first element, in the
same order, of full multiplicative order p^h - 1.  For every n | h the
subfield GF(p^n) sits inside the field as the fixed points of x -> x^(p^n),
generated by mu**((p^h-1)/(p^n-1)); conversion to the standalone canonical
GF(p^n) goes through the smallest root of that generator's minimal
polynomial, which makes the conversion a field isomorphism rather than a
mere relabeling.
"""

from __future__ import annotations

import itertools

from . import combinat, linalg

FIELD_ORDER_CAP = 1 << 20
_TABLE_ORDER_CAP = 512

_CACHE: dict[tuple[int, int], "FieldTower"] = {}


def make_field(p: int, h: int) -> "FieldTower":
    """Canonical (cached) tower for GF(p^h)."""
    key = (p, h)
    if key not in _CACHE:
        _CACHE[key] = FieldTower(p, h)
    return _CACHE[key]


def parse_field_spec(spec: str) -> tuple[int, int]:
    """Parse "p^h" (or a plain prime power) into (p, h)."""
    s = spec.strip()
    if "^" in s:
        base, _, exp = s.partition("^")
        p, h = int(base), int(exp)
        if not combinat.is_prime(p) or h < 1:
            raise ValueError(f"bad field spec {spec!r}")
        return p, h
    return combinat.prime_power(int(s))


def format_field_spec(p: int, h: int) -> str:
    return str(p) if h == 1 else f"{p}^{h}"


class FieldTower:
    """One field GF(p^h) with tables, plus canonical subfield structure."""

    def __init__(self, p: int, h: int):
        if not combinat.is_prime(p):
            raise ValueError(f"{p} is not prime")
        if h < 1:
            raise ValueError(f"bad extension degree {h}")
        order = p**h
        if order > FIELD_ORDER_CAP:
            raise ValueError(f"field order {order} exceeds cap {FIELD_ORDER_CAP}")
        self.p = p
        self.h = h
        self.order = order
        self._digit_cache = [self._digits_of(a) for a in range(order)] if order <= 1 << 16 else None
        self.modulus = self._smallest_irreducible()
        self.mu = self._smallest_primitive()
        self._build_tables()
        self.subfield_generators = {}
        for n in combinat.divisors(h):
            g = self.exp[(order - 1) // (p**n - 1)] if order > 2 else 1
            assert self.pow(g, p**n) == g, "subfield generator not fixed by its Frobenius"
            self.subfield_generators[n] = g
        self._subfield_sets: dict[int, frozenset] = {}
        self._subfield_maps: dict[int, tuple[dict, dict]] = {}
        self._coords_ctx: dict[int, tuple] = {}
        self._coords_cache: dict[tuple[int, int], tuple] = {}
        self._mul_table = None
        self._add_table = None

    def __repr__(self):
        return f"GF({self.p}^{self.h})"

    # -- encoding ---------------------------------------------------------

    def _digits_of(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.h):
            a, d = divmod(a, p)
            out.append(d)
        return tuple(out)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of a, ascending degree, length h."""
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of {self!r}")
        if self._digit_cache is not None:
            return self._digit_cache[a]
        return self._digits_of(a)

    def from_coeffs(self, cs) -> int:
        if len(cs) != self.h or any(not 0 <= c < self.p for c in cs):
            raise ValueError(f"bad coefficient vector {cs!r} for {self!r}")
        a = 0
        for c in reversed(cs):
            a = a * self.p + c
        return a

    def elements(self):
        return range(self.order)

    # -- construction -----------------------------------------------------

    def _poly_divmod(self, num, den):
        # dense coefficient lists over GF(p), ascending degree
        p = self.p
        num = list(num)
        dd = len(den) - 1
        lead_inv = pow(den[-1], -1, p)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i] * lead_inv % p
            if c:
                for j, dc in enumerate(den):
                    num[i - dd + j] = (num[i - dd + j] - c * dc) % p
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        return num

    def _is_irreducible(self, poly) -> bool:
        p = self.p
        deg = len(poly) - 1
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                den = list(tail) + [1]
                rem = self._poly_divmod(poly, den)
                if rem == [0]:
                    return False
        return True

    def _smallest_irreducible(self) -> tuple[int, ...]:
        p, h = self.p, self.h
        for enc in range(p**h):
            poly = list(self._digits_of(enc)) + [1]
            if self._is_irreducible(poly):
                return tuple(poly)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _raw_mul(self, a: int, b: int) -> int:
        p, h = self.p, self.h
        da = self.coeffs(a)
        db = self.coeffs(b)
        prod = [0] * (2 * h - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    if cb:
                        prod[i + j] = (prod[i + j] + ca * cb) % p
        mod = self.modulus
        for i in range(2 * h - 2, h - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(h):
                    if mod[j]:
                        prod[i - h + j] = (prod[i - h + j] - c * mod[j]) % p
        return self.from_coeffs(prod[:h])

    def _raw_pow(self, a: int, k: int) -> int:
        result = 1
        base = a
        while k:
            if k & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            k >>= 1
        return result

    def _smallest_primitive(self) -> int:
        target = self.order - 1
        fac = combinat.prime_factors(target)
        for a in range(1, self.order):
            if all(self._raw_pow(a, target // f) != 1 for f in fac):
                return a
        raise AssertionError("no primitive element found")  # unreachable

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * (2 * n if n > 0 else 1)
        log = [-1] * self.order
        cur = 1
        for k in range(n):
            exp[k] = cur
            exp[k + n] = cur
            log[cur] = k
            cur = self._raw_mul(cur, self.mu)
        assert cur == 1, "designated generator does not have full order"
        self.exp = exp
        self.log = log

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += (da + db) % p * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            a, d = divmod(a, p)
            out += (p - d) % p * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.exp[self.order - 1 - self.log[a]]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError(f"0**{k} in {self!r}")
        n = self.order - 1
        return self.exp[(self.log[a] * k) % n] if n else 1

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.order - 1
        for f in combinat.prime_factors(n) if n > 1 else []:
            while n % f == 0 and self.pow(a, n // f) == 1:
                n //= f
        return n

    def mul_table(self):
        if self._mul_table is None:
            if self.order > _TABLE_ORDER_CAP:
                raise ValueError(f"no dense tables above order {_TABLE_ORDER_CAP}")
            self._mul_table = [[self.mul(a, b) for b in range(self.order)] for a in range(self.order)]
        return self._mul_table

    def add_table(self):
        if self._add_table is None:
            if self.order > _TABLE_ORDER_CAP:
                raise ValueError(f"no dense tables above order {_TABLE_ORDER_CAP}")
            self._add_table = [[self.add(a, b) for b in range(self.order)] for a in range(self.order)]
        return self._add_table

    # -- subfields ----------------------------------------------------------

    def _check_subfield_degree(self, n: int):
        if n < 1 or self.h % n != 0:
            raise ValueError(f"GF({self.p}^{n}) is not a subfield of {self!r}")

    def subfield_elements(self, n: int) -> tuple[int, ...]:
        """Elements of the subfield GF(p^n), ascending by encoding."""
        self._check_subfield_degree(n)
        sub = self._subfield_set(n)
        return tuple(sorted(sub))

    def _subfield_set(self, n: int) -> frozenset:
        if n not in self._subfield_sets:
            e = (self.order - 1) // (self.p**n - 1)
            members = {0} | {self.exp[(e * k) % (self.order - 1)] for k in range(self.p**n - 1)} \
                if self.order > 2 else {0, 1}
            self._subfield_sets[n] = frozenset(members)
        return self._subfield_sets[n]

    def subfield_generator(self, n: int) -> int:
        self._check_subfield_degree(n)
        return self.subfield_generators[n]

    def minimal_polynomial(self, a: int, n: int) -> tuple[int, ...]:
        """Minimal polynomial of a over the subfield GF(p^n).

        Coefficients come back ascending and monic, as elements of this field
        (they land in the subfield; use to_subfield to move them to the
        canonical GF(p^n)).
        """
        self._check_subfield_degree(n)
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of {self!r}")
        conj = [a]
        qn = self.p**n
        c = self.pow(a, qn)
        while c != a:
            conj.append(c)
            c = self.pow(c, qn)
        poly = [1]
        for c in conj:
            nc = self.neg(c)
            nxt = [0] * (len(poly) + 1)
            for i, co in enumerate(poly):
                nxt[i + 1] = self.add(nxt[i + 1], co)
                nxt[i] = self.add(nxt[i], self.mul(co, nc))
            poly = nxt
        sub = self._subfield_set(n)
        assert all(co in sub for co in poly), "minimal polynomial escaped the subfield"
        assert (self.h // n) % len(conj) == 0
        return tuple(poly)

    # -- canonical subfield isomorphism -------------------------------------

    def _subfield_map(self, n: int):
        if n not in self._subfield_maps:
            small = make_field(self.p, n)
            if n == self.h:
                ident = {a: a for a in range(self.order)}
                self._subfield_maps[n] = (ident, dict(ident))
            else:
                gamma = self.subfield_generators[n]
                mpoly = self.minimal_polynomial(gamma, 1)
                # coefficients over GF(p) are scalars, valid in the small field as-is
                coeffs = [int(c) for c in mpoly]
                assert all(c < self.p for c in coeffs)
                roots = [b for b in range(small.order)
                         if self._eval_small(coeffs, b, small) == 0]
                assert roots, "minimal polynomial has no root in the canonical subfield"
                rho = min(roots)
                down = {0: 0}
                up = {0: 0}
                e = (self.order - 1) // (small.order - 1)
                big_el = 1
                small_el = 1
                for _ in range(small.order - 1):
                    down[big_el] = small_el
                    up[small_el] = big_el
                    big_el = self.mul(big_el, self.exp[e])
                    small_el = small.mul(small_el, rho)
                assert len(down) == small.order
                # spot-check additivity of the transfer map
                sample = sorted(down)[: min(len(down), 16)]
                for x in sample:
                    for y in sample:
                        assert down[self.add(x, y)] == small.add(down[x], down[y])
                self._subfield_maps[n] = (down, up)
        return self._subfield_maps[n]

    @staticmethod
    def _eval_small(coeffs, b, small):
        acc = 0
        power = 1
        for c in coeffs:
            if c:
                acc = small.add(acc, small.mul(c, power))
            power = small.mul(power, b)
        return acc

    def subfield(self, n: int) -> "FieldTower":
        self._check_subfield_degree(n)
        return make_field(self.p, n)

    def to_subfield(self, a: int, n: int) -> int:
        """Move a subfield element to its canonical GF(p^n) encoding."""
        self._check_subfield_degree(n)
        down, _ = self._subfield_map(n)
        try:
            return down[a]
        except KeyError:
            raise ValueError(f"{a} does not lie in the GF({self.p}^{n}) subfield") from None

    def from_subfield(self, b: int, n: int) -> int:
        self._check_subfield_degree(n)
        _, up = self._subfield_map(n)
        try:
            return up[b]
        except KeyError:
            raise ValueError(f"{b} is not an element of GF({self.p}^{n})") from None

    # -- coordinates over a subfield -----------------------------------------

    def _coords_context(self, n: int):
        if n not in self._coords_ctx:
            p, h = self.p, self.h
            dprime = h // n
            small = make_field(p, n)
            gamma = self.subfield_generators[n]
            rho = self.to_subfield(gamma, n)
            cols = []
            for i in range(dprime):
                mi = self.pow(self.mu, i)
                for j in range(n):
                    cols.append(self.coeffs(self.mul(mi, self.pow(gamma, j))))
            mat = tuple(tuple(cols[c][r] for c in range(h)) for r in range(h))
            prime = make_field(p, 1)
            minv = linalg.mat_inverse(mat, prime)
            rho_pows = [1]
            for _ in range(n - 1):
                rho_pows.append(small.mul(rho_pows[-1], rho))
            self._coords_ctx[n] = (minv, small, tuple(rho_pows))
        return self._coords_ctx[n]

    def coords(self, a: int, n: int) -> tuple[int, ...]:
        """Coordinates of a in the power basis 1, mu, ..., mu^(h/n - 1) over GF(p^n).

        Entries are canonical GF(p^n) encodings, so they can feed straight
        into subspace machinery over the small field.
        """
        self._check_subfield_degree(n)
        key = (a, n)
        cached = self._coords_cache.get(key)
        if cached is not None:
            return cached
        if n == self.h:
            out = (self.to_subfield(a, n),)
        else:
            minv, small, rho_pows = self._coords_context(n)
            digits = self.coeffs(a)
            p = self.p
            x = [sum(mr * d for mr, d in zip(row, digits)) % p for row in minv]
            out = []
            for i in range(self.h // n):
                acc = 0
                for j in range(n):
                    c = x[i * n + j]
                    if c:
                        acc = small.add(acc, small.mul(c, rho_pows[j]))
                out.append(acc)
            out = tuple(out)
        self._coords_cache[key] = out
        return out

    def from_coords(self, cs, n: int) -> int:
        """Inverse of coords: assemble sum(c_i * mu^i) from GF(p^n) encodings."""
        self._check_subfield_degree(n)
        dprime = self.h // n
        if len(cs) != dprime:
            raise ValueError(f"expected {dprime} coordinates, got {len(cs)}")
        acc = 0
        for i, c in enumerate(cs):
            if c:
                acc = self.add(acc, self.mul(self.from_subfield(c, n), self.pow(self.mu, i)))
        return acc
