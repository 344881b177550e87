"""Seeded self-checks of the Gröbner kernel, used by the certificate suite.

Each property is evaluated on small random homogeneous ideals in four
variables; every entry of the returned dict is True when the property held
on all samples.
"""

from __future__ import annotations

import random

from .ideal import Ideal, macaulay_rank, normal_form, random_form, saturate_by_element
from .poly import Polynomial
from .ring import PolyRing, make_ring


def random_ideal(ring: PolyRing, rng: random.Random, degrees=(2, 2, 3), sparsity: int = 4) -> Ideal:
    gens = []
    for d in degrees:
        f = random_form(ring, d, rng)
        keep = sorted(f.terms)[:: max(1, len(f.terms) // sparsity)]
        gens.append(Polynomial(ring, {k: f.terms[k] for k in keep}))
    return Ideal(ring, gens)


def kernel_property_suite(seed: int, characteristic: int, samples: int = 4) -> dict[str, bool]:
    from ..homology import euler_numerator_matches, free_resolution

    ring = make_ring(["x", "y", "z", "w"], characteristic)
    rng = random.Random(seed)
    result = {k: True for k in ("gb_idempotent", "gb_canonical", "membership_roundtrip",
                                "saturation_fixed_point", "hilbert_matches_macaulay",
                                "resolution_exact", "resolution_minimal")}
    w = ring("w")
    for _ in range(samples):
        I = random_ideal(ring, rng)
        G = [g.terms for g in I.gb()]
        result["gb_idempotent"] &= [g.terms for g in Ideal(ring, I.gb()).gb()] == G
        mixed = [I.gens[0] + I.gens[1].scale(rng.randrange(1, ring.p))] + list(I.gens[1:])
        result["gb_canonical"] &= [g.terms for g in Ideal(ring, list(reversed(mixed))).gb()] == G

        combo = Polynomial.zero(ring)
        for g in I.gens:
            combo = combo + g * random_form(ring, 4 - g.degree(), rng)
        f = random_form(ring, 4, rng)
        r = normal_form(f, I)
        result["membership_roundtrip"] &= I.contains(combo) and I.contains(f - r) and (
            r.is_zero() or not I.contains(r))

        J = saturate_by_element(I, w)
        result["saturation_fixed_point"] &= saturate_by_element(J, w) == J

        result["hilbert_matches_macaulay"] &= all(
            I.graded_dim(d) == macaulay_rank(I, d) for d in range(0, 5))

        res = free_resolution(I, rng.randrange(1 << 30))
        result["resolution_exact"] &= euler_numerator_matches(I, res) and all(
            res.matrices[i].compose(res.matrices[i + 1]).is_zero() for i in range(res.length - 1))
        result["resolution_minimal"] &= not any(M.has_unit_entry() for M in res.matrices)
    return {k: bool(v) for k, v in result.items()}
