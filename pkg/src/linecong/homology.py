"""Minimal graded free resolutions, Betti tables, Fitting minors and Ext.

The minimal resolution of R/I is built one homological step at a time and,
inside a step, one internal degree at a time: the kernel of the previous
map in degree t is computed by linear algebra over GF(p), the part already
generated by lower-degree syzygies is split off, and whatever remains is a
set of new minimal generators.  Which degrees can carry generators is read
off a Schreyer frame (the lead-term skeleton of the Schreyer resolution of a
Gröbner basis), which bounds every graded Betti number from above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .algebra.hilbert import hilbert_numerator
from .algebra.ideal import Ideal, monomials_of_degree
from .algebra.linalg import nullspace, rank, rref
from .algebra.poly import Polynomial
from .algebra.ring import PolyRing, UsageError


@dataclass
class GradedMatrix:
    """Matrix of polynomials ``entries[row][col]`` mapping ⊕R(-source) -> ⊕R(-target)."""

    ring: PolyRing
    entries: list[list[Polynomial]]
    source: list[int]  # degree of the basis element behind each column
    target: list[int]  # degree of the basis element behind each row

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target), len(self.source)

    def is_homogeneous(self) -> bool:
        for r, row in enumerate(self.entries):
            for c, f in enumerate(row):
                if f and (not f.is_homogeneous() or f.degree() != self.source[c] - self.target[r]):
                    return False
        return True

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self ∘ other."""
        rows, inner = self.shape
        if inner != other.shape[0]:
            raise UsageError("shape mismatch in composition")
        cols = other.shape[1]
        zero = Polynomial.zero(self.ring)
        out = []
        for r in range(rows):
            row = []
            for c in range(cols):
                acc = zero
                for k in range(inner):
                    a, b = self.entries[r][k], other.entries[k][c]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.ring, out, list(other.source), list(self.target))

    def is_zero(self) -> bool:
        return all(not f for row in self.entries for f in row)

    def has_unit_entry(self) -> bool:
        return any(f and f.is_constant() for row in self.entries for f in row)

    def transpose(self) -> "GradedMatrix":
        rows, cols = self.shape
        ent = [[self.entries[r][c] for r in range(rows)] for c in range(cols)]
        return GradedMatrix(self.ring, ent, [-d for d in self.target], [-d for d in self.source])


@dataclass
class BettiTable:
    """Graded ranks: (homological step, internal twist) -> rank, for the resolution of R/I."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def ranks(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [sum(r for (i, _), r in self.entries.items() if i == k) for k in range(top + 1)]

    def twists(self, step: int) -> list[int]:
        return sorted({j for (i, j), r in self.entries.items() if i == step and r})

    def to_json(self) -> list[dict]:
        return [{"step": i, "twist": j, "rank": r} for (i, j), r in sorted(self.entries.items()) if r]

    @classmethod
    def from_json(cls, data: list[dict]) -> "BettiTable":
        return cls({(d["step"], d["twist"]): d["rank"] for d in data})

    def numerator(self) -> list[int]:
        """Alternating sum Σ (-1)^i β_ij t^j (the Hilbert series numerator of R/I)."""
        if not self.entries:
            return [0]
        top = max(j for _, j in self.entries)
        out = [0] * (top + 1)
        for (i, j), r in self.entries.items():
            out[j] += (-1) ** i * r
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def __str__(self):
        if not self.entries:
            return "(empty)"
        steps = max(i for i, _ in self.entries) + 1
        rows = sorted({j - i for i, j in self.entries})
        lines = ["      " + " ".join(f"{i:>4}" for i in range(steps))]
        lines.append("total:" + " ".join(f"{r:>4}" for r in self.ranks()))
        for s in rows:
            cells = []
            for i in range(steps):
                r = self.entries.get((i, i + s), 0)
                cells.append(f"{r if r else '.':>4}")
            lines.append(f"{s:>5}:" + " ".join(cells))
        return "\n".join(lines)


@dataclass
class Resolution:
    ring: PolyRing
    degrees: list[list[int]]  # generator degrees of F_0, F_1, ...
    matrices: list[GradedMatrix]  # matrices[i]: F_{i+1} -> F_i
    betti: BettiTable

    @property
    def length(self) -> int:
        return len(self.matrices)


# ------------------------------------------------------------------- frames
def _lex_key(m: tuple[int, ...]):
    return tuple(-e for e in m)


def _minimal_monomials(ms: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ms = sorted(set(ms), key=sum)
    out: list[tuple[int, ...]] = []
    for m in ms:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def schreyer_frame(leads: Sequence[tuple[int, ...]], degrees: Sequence[int]) -> list[dict[int, int]]:
    """Graded ranks of the Schreyer frame of a Gröbner basis with the given leads.

    Level k of the result maps degree -> number of frame elements (level 1 is
    the basis itself).  Elements of one component are sorted lex-descending,
    so the frame has length at most the number of variables.
    """
    level = [(0, tuple(m), d) for m, d in zip(leads, degrees)]
    out: list[dict[int, int]] = []
    while level:
        counts: dict[int, int] = {}
        for _, _, d in level:
            counts[d] = counts.get(d, 0) + 1
        out.append(counts)
        by_comp: dict[int, list[int]] = {}
        for idx, (comp, m, d) in enumerate(level):
            by_comp.setdefault(comp, []).append(idx)
        nxt = []
        for comp, idxs in by_comp.items():
            idxs.sort(key=lambda a: _lex_key(level[a][1]))
            for pos, a in enumerate(idxs):
                ma = level[a][1]
                quots = [tuple(max(x, y) - x for x, y in zip(ma, level[b][1])) for b in idxs[pos + 1:]]
                for q in _minimal_monomials(quots):
                    nxt.append((a, q, level[a][2] + sum(q)))
        level = nxt
    return out


# -------------------------------------------------------------- resolutions
class _Basis:
    """Monomial basis of the degree-t piece of a free module ⊕ R(-degs[k])."""

    def __init__(self, ring: PolyRing, degs: Sequence[int], t: int):
        self.items: list[tuple[int, int]] = []  # (component, monomial key)
        self.index: dict[tuple[int, int], int] = {}
        for k, d in enumerate(degs):
            if t - d < 0:
                continue
            for m in monomials_of_degree(ring.nvars, t - d):
                key = (k, ring.encode(m))
                self.index[key] = len(self.items)
                self.items.append(key)

    def __len__(self):
        return len(self.items)


def _vector(elem: dict[int, Polynomial], shift_key: int, basis: _Basis, p: int, size: int) -> np.ndarray:
    v = np.zeros(size, dtype=np.int64)
    for comp, f in elem.items():
        for k, c in f.terms.items():
            v[basis.index[(comp, k + shift_key)]] = c
    return v


def _to_element(vec, basis: _Basis, ring: PolyRing) -> dict[int, Polynomial]:
    out: dict[int, dict] = {}
    for i in np.flatnonzero(vec):
        comp, k = basis.items[int(i)]
        out.setdefault(comp, {})[k] = int(vec[i])
    return {c: Polynomial(ring, t, _trusted=True) for c, t in out.items()}


def _new_generators(kernel: np.ndarray, generated: list[np.ndarray], p: int) -> np.ndarray:
    """Rows of ``kernel`` completing span(generated) to span(kernel), echelonized."""
    if kernel.shape[0] == 0:
        return kernel
    if generated:
        G, piv = rref(np.vstack(generated), p)
        K = kernel.copy() % p
        for r, c in enumerate(piv):
            col = K[:, c].copy()
            hit = np.flatnonzero(col)
            if hit.size:
                K[hit] = (K[hit] - np.outer(col[hit], G[r])) % p
    else:
        K = kernel % p
    R, _ = rref(K, p)
    return R


def _multiples(elems, ring: PolyRing, t: int, basis: _Basis, p: int):
    rows = []
    one = ring.one_key
    for deg, elem in elems:
        if deg >= t:
            continue
        for m in monomials_of_degree(ring.nvars, t - deg):
            rows.append(_vector(elem, ring.encode(m) - one, basis, p, len(basis)))
    return rows


def _frame_bounds(I: Ideal, seed: int) -> list[set[int]]:
    """Per-level degree sets that may carry minimal generators (intersection of two frames)."""
    ring = I.ring
    G = I.gb()
    frames = [schreyer_frame([g.lead_exponents for g in G], [g.degree() for g in G])]
    rng = random.Random(seed)
    n = ring.nvars
    p = ring.p
    images = []
    for i in range(n):
        terms = {ring.var_key(j): rng.randrange(1, p) for j in range(n)}
        images.append(Polynomial(ring, terms))
    J = Ideal(ring, [g.substitute(ring, images) for g in I.gens])
    H = J.gb()
    frames.append(schreyer_frame([g.lead_exponents for g in H], [g.degree() for g in H]))
    levels = min(len(f) for f in frames)
    return [set.intersection(*(set(f[k]) for f in frames)) for k in range(levels)]


def free_resolution(I: Ideal, seed: int = 0) -> Resolution:
    """Minimal graded free resolution of R/I (I homogeneous, prime characteristic)."""
    ring = I.ring
    p = ring.p
    if not p:
        raise UsageError("resolutions are implemented over prime fields")
    if not I.is_homogeneous():
        raise UsageError("free_resolution needs a homogeneous ideal")
    if I.is_unit():
        return Resolution(ring, [[]], [], BettiTable({}))
    degrees: list[list[int]] = [[0]]
    matrices: list[GradedMatrix] = []
    betti = BettiTable({(0, 0): 1})
    if I.is_zero():
        return Resolution(ring, degrees, matrices, betti)
    bounds = _frame_bounds(I, seed)
    one = ring.one_key

    # step 1: minimal generators of I
    gens: list[tuple[int, Polynomial]] = []
    for t in sorted({g.degree() for g in I.gens}):
        basis = _Basis(ring, [0], t)
        span = [_vector({0: g}, ring.encode(m) - one, basis, p, len(basis))
                for g in I.gens if g.degree() <= t
                for m in monomials_of_degree(ring.nvars, t - g.degree())]
        Kt = rref(np.vstack(span), p)[0]
        prev = _multiples([(d, {0: f}) for d, f in gens], ring, t, basis, p)
        for row in _new_generators(Kt, prev, p):
            gens.append((t, _to_element(row, basis, ring)[0]))
    cur_elems = [(d, {0: f}) for d, f in gens]
    cur_degs = [d for d, _ in gens]

    step = 1
    while cur_elems:
        degrees.append(cur_degs)
        for d in cur_degs:
            betti.entries[(step, d)] = betti.entries.get((step, d), 0) + 1
        prev_degs = degrees[step - 1]
        ent = [[cur_elems[c][1].get(r, Polynomial.zero(ring)) for c in range(len(cur_elems))]
               for r in range(len(prev_degs))]
        matrices.append(GradedMatrix(ring, ent, list(cur_degs), list(prev_degs)))
        # syzygies of the current generators
        cand = sorted(bounds[step]) if step < len(bounds) else []
        found: list[tuple[int, dict[int, Polynomial]]] = []
        for t in cand:
            if t <= min(cur_degs):
                continue
            src = _Basis(ring, cur_degs, t)
            tgt = _Basis(ring, prev_degs, t)
            if not len(src):
                continue
            A = np.zeros((len(tgt), len(src)), dtype=np.int64)
            for col, (k, mk) in enumerate(src.items):
                d_k, elem = cur_elems[k]
                shift = mk - one
                for comp, f in elem.items():
                    for key, c in f.terms.items():
                        A[tgt.index[(comp, key + shift)], col] = c
            K = nullspace(A, p) if len(tgt) else np.eye(len(src), dtype=np.int64)
            if K.shape[0] == 0:
                continue
            prev = _multiples(found, ring, t, src, p)
            for row in _new_generators(K, prev, p):
                found.append((t, _to_element(row, src, ring)))
        cur_elems = found
        cur_degs = [d for d, _ in found]
        step += 1
    return Resolution(ring, degrees, matrices, betti)


# -------------------------------------------------------------- Fitting ideals
def iter_minors(M: GradedMatrix, k: int, seed: int | None = None) -> Iterator[Polynomial]:
    """All k×k minors (row subsets in seeded random order when ``seed`` is given)."""
    rows, cols = M.shape
    if not 1 <= k <= min(rows, cols):
        raise UsageError(f"minor size {k} out of range for a {rows}x{cols} matrix")
    row_sets = list(combinations(range(rows), k))
    if seed is not None:
        random.Random(seed).shuffle(row_sets)
    ring = M.ring
    for rs in row_sets:
        # minors of the chosen rows for every column subset, by expansion along the last row
        table: dict[tuple[int, ...], Polynomial] = {(): Polynomial.one(ring)}
        for level in range(1, k + 1):
            r = rs[level - 1]
            new = {}
            for cs in combinations(range(cols), level):
                acc = Polynomial.zero(ring)
                for pos, c in enumerate(cs):
                    a = M.entries[r][c]
                    if not a:
                        continue
                    sub = table.get(cs[:pos] + cs[pos + 1:])
                    if sub is None or not sub:
                        continue
                    term = a * sub
                    acc = acc + term if (level - 1 - pos) % 2 == 0 else acc - term
                new[cs] = acc
            table = new
        for cs in combinations(range(cols), k):
            f = table[cs]
            if f:
                yield f


def fitting_minors(M: GradedMatrix, k: int) -> Ideal:
    return Ideal(M.ring, list(iter_minors(M, k)))


def minors_irrelevant(M: GradedMatrix, k: int, seed: int = 0) -> tuple[bool, int]:
    """Decide whether the k×k minors generate an ideal whose saturation is the unit ideal.

    Minors are all homogeneous of one degree e; they are accumulated into an
    echelon basis of J_e and the scan stops early once J_e is all of R_e.
    Returns (answer, number of minors examined).
    """
    ring = M.ring
    p = ring.p
    seen = 0
    basis_rows = None
    pivots: list[int] = []
    mons = None
    index = None
    e = None
    for f in iter_minors(M, k, seed):
        seen += 1
        if e is None:
            e = f.degree()
            mons = monomials_of_degree(ring.nvars, e)
            index = {ring.encode(m): i for i, m in enumerate(mons)}
        v = np.zeros(len(mons), dtype=np.int64)
        for key, c in f.terms.items():
            v[index[key]] = c
        stack = v[None, :] if basis_rows is None else np.vstack([basis_rows, v])
        R, piv = rref(stack, p)
        basis_rows, pivots = R, piv
        if len(pivots) == len(mons):
            return True, seen
    if basis_rows is None:
        return False, seen
    gens = [Polynomial(ring, {ring.encode(mons[i]): int(c) for i, c in enumerate(row) if c})
            for row in basis_rows]
    J = Ideal(ring, gens)
    return J.dimension() < 0, seen


# ------------------------------------------------------------------ Ext
def _degree_piece_matrix(Mx: GradedMatrix, src_shifts, tgt_shifts, d: int):
    """Matrix of a map ⊕R(src_shifts) -> ⊕R(tgt_shifts) in degree d."""
    ring = Mx.ring
    src = _Basis(ring, [-s for s in src_shifts], d)
    tgt = _Basis(ring, [-s for s in tgt_shifts], d)
    A = np.zeros((len(tgt), len(src)), dtype=np.int64)
    one = ring.one_key
    for col, (k, mk) in enumerate(src.items):
        for r in range(len(tgt_shifts)):
            f = Mx.entries[r][k]
            if not f:
                continue
            for key, c in f.terms.items():
                A[tgt.index[(r, key + mk - one)], col] = (A[tgt.index[(r, key + mk - one)], col] + c) % ring.p
    return A, len(src), len(tgt)


def ext_graded_dim(I: Ideal, j: int, d: int, resolution: Resolution | None = None) -> int:
    """dim_k Ext^j(R/I, R(-n))_d, n = number of variables, via the dualized resolution."""
    res = resolution or free_resolution(I)
    n = I.ring.nvars
    if j < 0 or j >= len(res.degrees):
        return 0
    p = I.ring.p
    # Hom(F_j, R(-n)) = ⊕ R(a - n) for generator degrees a of F_j
    shifts = [[a - n for a in degs] for degs in res.degrees]
    dim_j = sum(comb(d + s + n - 1, n - 1) if d + s >= 0 else 0 for s in shifts[j])
    if dim_j == 0:
        return 0
    # kernel of the dual of F_{j+1} -> F_j
    if j + 1 < len(res.degrees):
        D = res.matrices[j].transpose()
        A, ns, nt = _degree_piece_matrix(D, shifts[j], shifts[j + 1], d)
        ker = ns - (rank(A, p) if nt and ns else 0)
    else:
        ker = dim_j
    if j >= 1:
        D = res.matrices[j - 1].transpose()
        A, ns, nt = _degree_piece_matrix(D, shifts[j - 1], shifts[j], d)
        img = rank(A, p) if nt and ns else 0
    else:
        img = 0
    return ker - img


def is_saturated(res: Resolution) -> bool:
    """R/I has positive depth iff its projective dimension is below the number of variables."""
    return res.length < res.ring.nvars


def h1_ideal_sheaf(I: Ideal, twist: int, resolution: Resolution | None = None) -> int:
    """h^1(I_X(twist)) = dim H^1_m(R/I)_twist = dim Ext^{n-1}(R/I, R(-n))_{-twist}."""
    res = resolution or free_resolution(I)
    if not is_saturated(res):
        raise UsageError("h1_ideal_sheaf needs a saturated ideal")
    return ext_graded_dim(I, I.ring.nvars - 1, -twist, res)


def euler_numerator_matches(I: Ideal, res: Resolution) -> bool:
    G = I.gb()
    expected = hilbert_numerator([g.lead_exponents for g in G], I.ring.nvars)
    return res.betti.numerator() == expected
