"""Buchberger's algorithm with Gebauer-Möller pair elimination.

Works on raw term dictionaries (packed monomial key -> coefficient) for speed;
:mod:`linecong.algebra.ideal` wraps it in the public Ideal API.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from heapq import heapify, heappop, heappush

from .ring import PolyRing, ResourceError


def _env_int(name: str) -> int | None:
    v = os.environ.get(name)
    return int(v) if v else None


@dataclass
class GBConfig:
    """Resource caps; ``None`` means unbounded.  Environment overrides:
    LINECONG_MAX_DEGREE, LINECONG_MAX_PAIRS, LINECONG_COEFF_BITS."""

    max_degree: int | None = field(default_factory=lambda: _env_int("LINECONG_MAX_DEGREE"))
    max_pairs: int | None = field(default_factory=lambda: _env_int("LINECONG_MAX_PAIRS"))
    coeff_bits: int = field(default_factory=lambda: _env_int("LINECONG_COEFF_BITS") or 4096)
    # homogeneous input only: stop once every pair of degree <= truncate is done
    truncate: int | None = None


@dataclass
class GBStats:
    pairs: int = 0
    zero_reductions: int = 0
    basis_size: int = 0


def _monic(f: dict, p: int) -> dict:
    lk = max(f)
    c = f[lk]
    if p:
        if c == 1:
            return f
        inv = pow(c, -1, p)
        return {k: v * inv % p for k, v in f.items()}
    if c == 1:
        return f
    return {k: v / c for k, v in f.items()}


class _Reducers:
    """Active reducer set with precomputed divisibility masks."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.items: list[tuple[int, int, list]] = []  # (masked lead, lead, tail items)

    def add(self, lead: int, poly: dict):
        tail = [(k, c) for k, c in poly.items() if k != lead]
        entry = (lead | self.ring.guard_all, lead, tail)
        # short reducers first: fewer terms, less fill-in
        pos = len(self.items)
        while pos > 0 and len(self.items[pos - 1][2]) > len(tail):
            pos -= 1
        self.items.insert(pos, entry)

    def remove(self, lead: int):
        self.items = [e for e in self.items if e[1] != lead]

    def find(self, k: int):
        gv = self.ring.guard_vars
        if self.ring.complemented:
            for lg, lead, tail in self.items:
                if (lg - k) & gv == gv:
                    return lead, tail
        else:
            kg = k | self.ring.guard_all
            for lg, lead, tail in self.items:
                if (kg - lead) & gv == gv:
                    return lead, tail
        return None


def reduce_full(f: dict, reducers: _Reducers, p: int, coeff_bits: int | None = None) -> dict:
    """Remainder of ``f`` after full reduction (no term divisible by a reducer lead)."""
    f = dict(f)
    heap = [-k for k in f]
    heapify(heap)
    rem: dict = {}
    find = reducers.find
    while heap:
        k = -heappop(heap)
        c = f.pop(k, None)
        if c is None:
            continue
        hit = find(k)
        if hit is None:
            rem[k] = c
            continue
        lead, tail = hit
        s = k - lead
        if p:
            for t, a in tail:
                nk = t + s
                v = f.get(nk)
                if v is None:
                    f[nk] = (-c * a) % p
                    heappush(heap, -nk)
                else:
                    v = (v - c * a) % p
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
        else:
            for t, a in tail:
                nk = t + s
                v = f.get(nk)
                if v is None:
                    v = -c * a
                    if coeff_bits and max(v.numerator.bit_length(), v.denominator.bit_length()) > coeff_bits:
                        raise ResourceError(f"coefficient exceeds {coeff_bits} bits")
                    f[nk] = v
                    heappush(heap, -nk)
                else:
                    v = v - c * a
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
    return rem


def _sugar(ring: PolyRing, f: dict) -> int:
    return max(ring.degree_of(k) for k in f)


def buchberger(
    ring: PolyRing, polys: list[dict], config: GBConfig | None = None, stats: GBStats | None = None
) -> list[dict]:
    """Reduced Gröbner basis of the ideal generated by ``polys`` (term dicts in ``ring``).

    Returns monic polynomials sorted by increasing leading monomial.
    """
    config = config or GBConfig()
    stats = stats if stats is not None else GBStats()
    p = ring.p
    bits = config.coeff_bits if not p else None
    decode, encode, divides, degree_of = ring.decode, ring.encode, ring.divides, ring.degree_of

    basis: list[dict] = []
    leads: list[int] = []
    lexps: list[tuple] = []
    sugars: list[int] = []
    active: list[int] = []  # indices with minimal leads
    reducers = _Reducers(ring)
    pairs: list[tuple[int, int, int, int]] = []  # (sugar, lcm key, i, j)

    def lcm_of(i: int, j: int) -> tuple[int, tuple]:
        e = tuple(max(a, b) for a, b in zip(lexps[i], lexps[j]))
        return encode(e), e

    def coprime(i: int, j: int) -> bool:
        return not any(a and b for a, b in zip(lexps[i], lexps[j]))

    def insert(f: dict, sugar: int):
        nonlocal active, pairs
        f = _monic(f, p)
        h = len(basis)
        lk = max(f)
        basis.append(f)
        leads.append(lk)
        lexps.append(decode(lk))
        sugars.append(sugar)
        if lk == ring.one_key:
            raise _UnitIdeal
        # Gebauer-Möller update
        lcms = {g: lcm_of(g, h) for g in active}
        C = list(active)
        D: list[int] = []
        while C:
            g1 = C.pop()
            L1 = lcms[g1][0]
            if coprime(h, g1) or not any(divides(lcms[g2][0], L1) for g2 in C + D):
                D.append(g1)
        E = [g for g in D if not coprime(h, g)]
        kept = []
        for s, L, i, j in pairs:
            if divides(lk, L) and lcm_of(i, h)[0] != L and lcm_of(j, h)[0] != L:
                continue
            kept.append((s, L, i, j))
        dh = degree_of(lk)
        for g in E:
            L, e = lcms[g]
            dL = sum(a * w for a, w in zip(e, ring.weights))
            s = max(sugars[g] + dL - degree_of(leads[g]), sugar + dL - dh)
            kept.append((s, L, g, h))
        pairs = kept
        new_active = []
        for g in active:
            if divides(lk, leads[g]):
                reducers.remove(leads[g])
            else:
                new_active.append(g)
        active = new_active + [h]
        reducers.add(lk, f)

    try:
        # seed with generators in increasing order, reduced against earlier ones
        seeds = sorted((g for g in polys if g), key=lambda g: (_sugar(ring, g), max(g)))
        for g in seeds:
            r = reduce_full(g, reducers, p, bits)
            if r:
                insert(r, _sugar(ring, g))
        while pairs:
            idx = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
            s, L, i, j = pairs.pop(idx)
            if config.truncate is not None and s > config.truncate:
                pairs.append((s, L, i, j))
                break
            if config.max_degree is not None and s > config.max_degree:
                raise ResourceError(
                    f"degree cap {config.max_degree} exceeded at pair ({i},{j}) of sugar {s}"
                )
            stats.pairs += 1
            if config.max_pairs is not None and stats.pairs > config.max_pairs:
                raise ResourceError(f"pair cap {config.max_pairs} exceeded at pair ({i},{j})")
            fi, fj = basis[i], basis[j]
            si, sj = L - leads[i], L - leads[j]
            spoly: dict = {}
            li, lj = leads[i], leads[j]
            for k, c in fi.items():
                if k != li:
                    spoly[k + si] = c
            for k, c in fj.items():
                if k != lj:
                    nk = k + sj
                    v = spoly.get(nk)
                    if v is None:
                        spoly[nk] = (-c) % p if p else -c
                    else:
                        v = (v - c) % p if p else v - c
                        if v:
                            spoly[nk] = v
                        else:
                            del spoly[nk]
            try:
                r = reduce_full(spoly, reducers, p, bits) if spoly else {}
            except ResourceError as exc:
                raise ResourceError(f"{exc} while reducing pair ({i},{j})") from None
            if r:
                insert(r, s)
            else:
                stats.zero_reductions += 1
    except _UnitIdeal:
        stats.basis_size = 1
        return [{ring.one_key: 1 if p else Fraction(1)}]

    # interreduce the minimal basis
    final = sorted(active, key=lambda g: leads[g])
    result = []
    for g in final:
        others = _Reducers(ring)
        for h in final:
            if h != g:
                others.add(leads[h], basis[h])
        lead = leads[g]
        tail = {k: c for k, c in basis[g].items() if k != lead}
        r = reduce_full(tail, others, p, bits)
        r[lead] = basis[g][lead]
        result.append(r)
    stats.basis_size = len(result)
    return result


class _UnitIdeal(Exception):
    pass


def normal_form_dict(f: dict, basis: list[dict], ring: PolyRing) -> dict:
    red = _Reducers(ring)
    for g in basis:
        red.add(max(g), g)
    return reduce_full(f, red, ring.p, None)
