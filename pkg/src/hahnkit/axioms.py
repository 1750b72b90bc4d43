"""Checkers for first-order axiom schemes and sampling probes.

The regularity scheme says: if [a, b] holds n elements of G, then it holds
a multiple n*c.  For a Hahn sum of subgroups of Q both clauses reduce to
coordinate arithmetic, so single instances are decided exactly; the
sampler draws many instances and collects the failures.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Optional

from .errors import DomainError
from .hahn.field import FieldDescriptor, root_expansion, s_inv
from .hahn.series import Series
from .oag.element import Element
from .oag.group import GroupDescriptor
from .oag.sampling import approximations, denominator_ladder, random_coordinate, random_element

INFINITE = float("inf")


# ---------------------------------------------------------------------------
# regularity scheme


def count_between(G: GroupDescriptor, a: Element, b: Element) -> float:
    """Number of elements of G in [a, b] (``inf`` when infinite)."""
    if b < a:
        return 0
    if a == b:
        return 1
    d = b - a
    j = d.nat_val
    if G.kind != "lex_sum" or j != G.last_index:
        return INFINITE
    L = G.component(j)
    if L.is_dense:
        return INFINITE
    return floor(d[j]) + 1


def multiple_between(G: GroupDescriptor, n: int, a: Element, b: Element) -> Optional[Element]:
    """Some c in G with a <= n*c <= b, or None.

    Every point of [a, b] agrees with a before j = v(b - a), so c is forced
    there; at index j it is enough to hit [a_j, b_j], and the ends are
    repaired with one coordinate at j + 1.
    """
    if a == b:
        c = a / n
        return c if G.contains(c) else None
    j = (b - a).nat_val
    head = a.truncate(j) / n
    if not G.contains(head):
        return None
    L = G.component(j)
    lo, hi = a[j], b[j]
    if L.is_dense:
        for den in denominator_ladder(L, reach=ceil(2 * n / (hi - lo)) + 1):
            x = Fraction(floor(lo * den / n) + 1, den)
            if n * x < hi:
                return head + Element({j: x})
        return None  # pragma: no cover - the ladder always gets fine enough
    k = ceil(lo / n)
    if n * k > hi:
        return None
    c = head + Element({j: Fraction(k)})
    if G.has_index(j + 1):
        if n * k == lo:
            c = c + Element({j + 1: floor(abs(a[j + 1])) + 1})
        elif n * k == hi:
            c = c - Element({j + 1: floor(abs(b[j + 1])) + 1})
    return c


@dataclass
class RegularityInstance:
    n: int
    a: Element
    b: Element
    antecedent: bool
    consequent: bool
    witness: Optional[Element] = None

    @property
    def holds(self) -> bool:
        return not self.antecedent or self.consequent

    def to_json(self):
        return {"n": self.n, "a": self.a.to_json(), "b": self.b.to_json(),
                "antecedent": self.antecedent, "consequent": self.consequent,
                "holds": self.holds, "witness": self.witness.to_json() if self.witness else None}


def check_regularity_instance(G: GroupDescriptor, n: int, a: Element, b: Element) -> RegularityInstance:
    if not isinstance(n, int) or n < 1:
        raise DomainError("n must be a positive integer")
    G.check(a)
    G.check(b)
    if b < a:
        raise DomainError("need a <= b")
    ante = count_between(G, a, b) >= n
    c = multiple_between(G, n, a, b)
    return RegularityInstance(n, a, b, ante, c is not None, c)


def n_points_between(G: GroupDescriptor, n: int, a: Element, b: Element) -> list:
    """Explicit distinct elements of [a, b], at most n of them."""
    if a == b:
        return [a]
    j = (b - a).nat_val
    if G.kind == "lex_sum" and j == G.last_index:
        L = G.component(j)
        step = Fraction(1)
        if L.is_dense:
            den = denominator_ladder(L, reach=ceil(n / (b - a)[j]) + 1)[-1]
            step = Fraction(1, den)
        pts, k = [], 0
        while len(pts) < n and a + Element({j: step * k}) <= b:
            pts.append(a + Element({j: step * k}))
            k += 1
        return pts
    # later indices give infinitely many points just above a
    return [a + Element({j + 1: k}) for k in range(n)]


def verify_counterexample(G: GroupDescriptor, inst: RegularityInstance, search: int = 2000) -> bool:
    """Recheck a failure directly: n explicit points exist and no candidate c passes."""
    pts = n_points_between(G, inst.n, inst.a, inst.b)
    if len(set(pts)) < inst.n or not all(G.contains(p) and inst.a <= p <= inst.b for p in pts):
        return False
    tried = 0
    for target in (inst.a / inst.n, inst.b / inst.n, (inst.a + inst.b) / (2 * inst.n)):
        for c, _ in approximations(G, target, horizon=6):
            tried += 1
            if G.contains(c) and inst.a <= c * inst.n <= inst.b:
                return False
            if tried > search:
                break
    # the coordinate argument: either a prefix coordinate of a/n leaves G, or index j has no multiple
    j = (inst.b - inst.a).nat_val if inst.a != inst.b else None
    if j is None:
        return not G.contains(inst.a / inst.n)
    if not G.contains(inst.a.truncate(j) / inst.n):
        return True
    L = G.component(j)
    lo, hi = inst.a[j], inst.b[j]
    return not L.is_dense and ceil(lo / inst.n) * inst.n > hi


@dataclass
class SchemeReport:
    scheme: str
    subject: dict
    params: dict
    all_hold: bool
    counterexamples: list = field(default_factory=list)
    seed: int = 0
    note: str = ""

    def to_json(self):
        return {"scheme": self.scheme, "group" if "kind" in self.subject else "field": self.subject,
                "params": self.params, "all_hold": self.all_hold,
                "counterexamples": self.counterexamples, "seed": self.seed, "note": self.note}


def _random_interval(G: GroupDescriptor, rng: random.Random, horizon: int = 5):
    a = random_element(G, rng, horizon=horizon, max_terms=3, size=5)
    idx = list(G.indices(horizon))
    j = rng.choice(idx)
    delta = Element({j: abs(random_coordinate(G.component(j), rng, size=4))})
    later = [i for i in idx if i > j]
    if later and rng.random() < 0.5:
        k = rng.choice(later)
        delta = delta + Element({k: random_coordinate(G.component(k), rng, size=4)})
    return a, a + delta


def sample_regularity(G: GroupDescriptor, n_max: int = 7, samples: int = 500, seed: int = 0,
                      keep: int = 5) -> SchemeReport:
    rng = random.Random(seed)
    found = []
    verified = True
    if not G.is_trivial:
        for _ in range(samples):
            a, b = _random_interval(G, rng)
            for n in range(1, n_max + 1):
                inst = check_regularity_instance(G, n, a, b)
                if not inst.holds:
                    ok = verify_counterexample(G, inst)
                    verified = verified and ok
                    if len(found) < keep:
                        d = inst.to_json()
                        d["reverified"] = ok
                        found.append(d)
                    break
            if len(found) >= keep:
                break
    return SchemeReport("regularity", G.to_json(), {"n_max": n_max, "samples": samples},
                        not found, found, seed,
                        "" if verified else "a counterexample failed re-verification")


# ---------------------------------------------------------------------------
# density of the field in its real closure


def poly_eval(coeffs, z: Series) -> Series:
    """``coeffs[0] + coeffs[1] z + ...`` by Horner's rule."""
    out = Series()
    for c in reversed(coeffs):
        out = out * z + c
    return out


def poly_derivative(coeffs):
    return [c * k for k, c in enumerate(coeffs)][1:]


@dataclass
class DensityResult:
    z: Optional[Series]
    steps: int
    note: str


def check_density_axiom(F: FieldDescriptor, coeffs, a: Series, b: Series, eps: Series,
                        bound: Optional[Element] = None, budget: int = 64) -> DensityResult:
    """Look for z in (a, b) with |P(z)| < eps, P given by ``coeffs`` (constant term first).

    Each step tries a Newton update truncated below ``bound`` and keeps it
    when it stays inside the current bracket; otherwise it bisects.  Plain
    bisection alone only ever produces dyadic combinations of a and b, which
    never reach infinitesimal scale.
    """
    F.require_arithmetic()
    coeffs = [c if isinstance(c, Series) else Series.constant(c) for c in coeffs]
    for s in list(coeffs) + [a, b, eps]:
        F.check(s)
    if not a < b:
        raise DomainError("need a < b")
    if eps.sign <= 0:
        raise DomainError("eps must be positive")
    fa, fb = poly_eval(coeffs, a), poly_eval(coeffs, b)
    if (fa * fb).sign >= 0:
        raise DomainError("P(a) and P(b) must have opposite signs")
    if bound is None:
        bound = eps.vmin * 2
    dcoeffs = poly_derivative(coeffs)
    lo, hi = a, b
    s_lo = fa.sign
    z = (lo + hi) * Fraction(1, 2)
    for step in range(1, budget + 1):
        fz = poly_eval(coeffs, z)
        if _abs(fz) < eps:
            return DensityResult(z, step, "found")
        if fz.sign == s_lo:
            lo = z
        else:
            hi = z
        nxt = None
        dz = poly_eval(dcoeffs, z)
        if dz:
            try:
                inv = s_inv(F, dz, bound)
                cand = (z - fz * inv.body).truncate(bound)
                if lo < cand < hi and cand != z:
                    nxt = cand
            except Exception:
                nxt = None
        z = nxt if nxt is not None else ((lo + hi) * Fraction(1, 2)).truncate(bound)
    fz = poly_eval(coeffs, z)
    if _abs(fz) < eps:
        return DensityResult(z, budget, "found")
    return DensityResult(None, budget, "no witness at this budget")


def _abs(x: Series) -> Series:
    return -x if x.sign < 0 else x


# ---------------------------------------------------------------------------
# zero as a limit point, root support growth


def limit_point_zero_sample(G: GroupDescriptor, g: Element, seed: int = 0, budget: int = 500) -> Optional[Element]:
    """Some h in G with 0 < h < g, or None when the search budget runs out."""
    G.check(g)
    if g.sign <= 0:
        raise DomainError("g must be positive")
    cands = []
    for k in (2, 3, 5, 7, 11, 13):
        cands.append(g / k)
    j = g.nat_val
    cands.extend(Element({i: 1}) for i in G.indices(4) if i > j)
    cands.append(g.truncate(max(g.support)))
    rng = random.Random(seed)
    tried = 0
    for h in cands:
        tried += 1
        if G.contains(h) and h.sign > 0 and h < g:
            return h
    while tried < budget:
        tried += 1
        h = random_element(G, rng, horizon=4, size=3)
        if h.sign > 0 and h < g:
            return h
    return None


def root_support_probe(F: FieldDescriptor, base: Series, p: int, N: int) -> int:
    """Number of terms of the p-th root of ``base`` expanded through N powers of its tail."""
    if N < 0:
        raise DomainError("N must be non-negative")
    g, c = base.leading
    u_min = None
    for e, _ in base.terms[1:]:
        u_min = e - g
        break
    if u_min is None:
        return len(root_expansion(F, base, p, None).body)
    precision = g / p + u_min * (N + 1)
    return len(root_expansion(F, base, p, precision).body)
