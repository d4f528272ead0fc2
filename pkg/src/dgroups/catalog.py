"""Builders for the example groups the classifier is exercised on.

Every builder returns an explicit permutation group together with a
description of the action it realizes, and the catalog attaches the
expected metadata (degree, order, class, per-system shapes) from a data
table shipped alongside the code, so corrections to expected values are
data edits, not code edits.

Projective entries are restricted to prime q; the degree-28 entry runs
a subgroup search whose failure is a reported outcome with a transcript
rather than a crash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .actions import CosetAction
from .chain import PermGroup
from .gf import Field, is_prime
from .perms import Perm
from .regular import GroupClass, find_regular_dihedral, group_class, verify_witness

__all__ = [
    "BadParams",
    "SearchFailed",
    "CatalogEntry",
    "CheckResult",
    "catalog_ids",
    "param_schema",
    "describe",
    "build",
    "verify_entry",
    "CORPUS",
    "corpus_entries",
    "expectations_table",
    "entry_key",
]


class BadParams(ValueError):
    """A builder was given parameters outside its domain."""


class SearchFailed(RuntimeError):
    """The degree-28 subgroup search exhausted its budget."""

    def __init__(self, message: str, transcript: dict):
        super().__init__(message)
        self.transcript = transcript


@dataclass
class CatalogEntry:
    id: str
    params: dict[str, int]
    key: str
    group: PermGroup
    description: str
    classification: GroupClass
    expected: dict | None
    extras: dict = field(default_factory=dict)
    transcript: dict | None = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


# -- shared constructions ----------------------------------------------------


def _cycle(points: list[int], degree: int) -> Perm:
    return Perm.from_cycles([points], degree)


def _sym_gens(points: list[int], degree: int) -> list[Perm]:
    """Generators of the symmetric group on ``points`` inside S_degree."""
    if len(points) == 1:
        return []
    gens = [Perm.from_cycles([points[:2]], degree)]
    if len(points) > 2:
        gens.append(Perm.from_cycles([points], degree))
    return gens


def _alt_gens(points: list[int], degree: int) -> list[Perm]:
    """Generators of the alternating group on ``points`` inside S_degree."""
    k = len(points)
    if k < 3:
        return []
    gens = [Perm.from_cycles([points[:3]], degree)]
    if k > 3:
        long = points if k % 2 == 1 else points[1:]
        gens.append(Perm.from_cycles([long], degree))
    return gens


def _pgl_line_gens(q: int, extra: int = 0) -> tuple[list[Perm], Perm, Perm, Perm, int]:
    """PGL(2,q) on the projective line, with ``extra`` fixed tail points.

    Points 0..q-1 are the field, point q is infinity.  Returns the
    generator list [t, m, w] plus the individual maps and the total
    degree: t is x+1, m is multiplication by a primitive element, w is
    x -> -1/x.
    """
    f = Field(q)
    g = f.primitive_element()
    n = q + 1 + extra
    inf = q

    def mk(fun) -> Perm:
        return Perm([fun(x) for x in range(q + 1)] + list(range(q + 1, n)))

    t = mk(lambda x: inf if x == inf else f.add(x, 1))
    m = mk(lambda x: inf if x == inf else f.mul(g, x))

    def w_map(x: int) -> int:
        if x == inf:
            return 0
        if x == 0:
            return inf
        return f.neg(f.inv(x))

    w = mk(w_map)
    return [t, m, w], t, m, w, n


# -- individual builders -----------------------------------------------------


def _build_sym(n: int) -> tuple[PermGroup, str, dict]:
    if n < 2:
        raise BadParams("n must be at least 2")
    pts = list(range(n))
    return (
        PermGroup(_sym_gens(pts, n), n),
        f"symmetric group on {n} points, natural action",
        {},
    )


def _build_alt(n: int) -> tuple[PermGroup, str, dict]:
    if n < 3:
        raise BadParams("n must be at least 3")
    pts = list(range(n))
    return (
        PermGroup(_alt_gens(pts, n), n),
        f"alternating group on {n} points, natural action",
        {},
    )


def _build_psl27() -> tuple[PermGroup, str, dict]:
    gens, t, m, w, n = _pgl_line_gens(7)
    s = m * m
    return (
        PermGroup([t, s, w], n),
        "PSL(2,7) on the 8 points of the projective line over GF(7)",
        {},
    )


def _build_psl2q_line(q: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(q) or q < 5 or q == 2:
        raise BadParams("q must be an odd prime >= 5")
    gens, t, m, w, n = _pgl_line_gens(q)
    s = m * m
    return (
        PermGroup([t, s, w], n),
        f"PSL(2,{q}) on the {q + 1} points of the projective line",
        {},
    )


def _build_pgl2q_line(q: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(q) or q < 5:
        raise BadParams("q must be an odd prime >= 5")
    gens, t, m, w, n = _pgl_line_gens(q)
    return (
        PermGroup(gens, n),
        f"PGL(2,{q}) on the {q + 1} points of the projective line",
        {},
    )


def _build_m11() -> tuple[PermGroup, str, dict]:
    a = Perm.from_cycles([[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]], 11)
    b = Perm.from_cycles([[2, 6, 10, 7], [3, 9, 4, 5]], 11)
    return (
        PermGroup([a, b], 11),
        "Mathieu group M11 on 11 points",
        {},
    )


def _build_agl1p(p: int, l: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(p) or p == 2:
        raise BadParams("p must be prime")
    if l < 2 or l % 2 != 0:
        raise BadParams("l must be even and at least 2")
    if (p - 1) % l != 0:
        raise BadParams("l must divide p-1")
    f = Field(p)
    g = f.primitive_element()
    h = f.pow(g, (p - 1) // l)  # multiplier of order l
    amb = p
    a = Perm([f.add(x, 1) for x in range(p)])
    b = Perm([f.mul(h, x) for x in range(p)])
    ambient = PermGroup([a, b], amb)
    sub = PermGroup([b * b], amb)
    ca = CosetAction(ambient, sub)
    return (
        ca.image,
        f"Z_{p} : Z_{l} inside AGL(1,{p}), on the {2 * p} cosets of the "
        f"index-2 point stabilizer part",
        {"coset_action": ca},
    )


def _build_pgl2q_cosets(q: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(q) or q % 4 != 3:
        raise BadParams("q must be a prime congruent to 3 mod 4")
    gens, t, m, w, n = _pgl_line_gens(q)
    ambient = PermGroup(gens, n)
    s = m * m
    sub = PermGroup([t, s], n)
    ca = CosetAction(ambient, sub)
    return (
        ca.image,
        f"PGL(2,{q}) on the {2 * (q + 1)} cosets of the index-2 subgroup of "
        f"a point stabilizer",
        {"coset_action": ca},
    )


def _build_pgl2q_times2(q: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(q) or q % 4 != 3:
        raise BadParams("q must be a prime congruent to 3 mod 4")
    gens, t, m, w, n = _pgl_line_gens(q, extra=2)
    c = Perm(list(range(q + 1)) + [q + 2, q + 1])
    ambient = PermGroup(gens + [c], n)
    s = m * m
    half = (q - 1) // 2
    z = m ** half  # multiplication by -1
    sub = PermGroup([t, s, z * c], n)
    ca = CosetAction(ambient, sub)
    return (
        ca.image,
        f"PGL(2,{q}) x Z2 on {2 * (q + 1)} points, cosets of a diagonally "
        f"twisted stabilizer",
        {"coset_action": ca},
    )


def _build_symxz2_4p(p: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(p) or p == 2:
        raise BadParams("p must be an odd prime")
    amb = p + 2
    sym_part = _sym_gens(list(range(p)), amb)
    c = Perm.from_cycles([[p, p + 1]], amb)
    ambient = PermGroup(sym_part + [c], amb)
    sub = PermGroup(_alt_gens(list(range(1, p)), amb), amb)
    ca = CosetAction(ambient, sub)
    return (
        ca.image,
        f"Sym({p}) x Z2 on the {4 * p} cosets of Alt({p - 1})",
        {"coset_action": ca},
    )


def _lift_top(tau: list[int], n: int, k: int) -> Perm:
    imgs = [0] * (n * k)
    for fiber in range(n):
        for d in range(k):
            imgs[fiber * k + d] = tau[fiber] * k + d
    return Perm(imgs)


def _build_wreath(k: int, n: int) -> tuple[PermGroup, str, dict]:
    if k < 2:
        raise BadParams("k must be at least 2")
    if n < 4 or n % 2 != 0:
        raise BadParams("n must be even and at least 4")
    m = n // 2
    degree = n * k
    h0 = Perm(
        [(x % k + 1) % k if x < k else x for x in range(degree)]
    )
    rho_top = [0] * n
    for j in range(m):
        rho_top[j] = m + j
        rho_top[m + j] = (j + 1) % m
    b_top = [n - 1 - i for i in range(n)]
    rho = _lift_top(rho_top, n, k)
    b = _lift_top(b_top, n, k)
    group = PermGroup([h0, rho, b], degree)

    a_top = [0] * n
    for j in range(m):
        a_top[j] = (j + 1) % m
        a_top[m + j] = m + (j + 1) % m
    a_hat = _lift_top(a_top, n, k)
    # the reflection b maps fiber a(0) = 1 to fiber n-2, so the twist
    # components must sit on fibers 0 and n-2 for b to invert y
    x_imgs = list(range(degree))
    for d in range(k):
        x_imgs[d] = (d + 1) % k
        x_imgs[(n - 2) * k + d] = (n - 2) * k + (d - 1) % k
    x = Perm(x_imgs)
    y = x * a_hat
    return (
        group,
        f"cyclic group of order {k} in {n} fibers under a transitive "
        f"dihedral top group of order {2 * n}",
        {"y": y, "b": b, "x": x},
    )


def _build_biprim_pgl(q: int) -> tuple[PermGroup, str, dict]:
    if not is_prime(q) or q % 4 != 3:
        raise BadParams("q must be a prime congruent to 3 mod 4")
    # two copies of the projective line; PGL acts diagonally, c swaps copies
    line = q + 1
    degree = 2 * line
    gens, t, m, w, n = _pgl_line_gens(q)

    def diag(p: Perm) -> Perm:
        return Perm(list(p.images) + [x + line for x in p.images])

    c = Perm(list(range(line, degree)) + list(range(line)))
    group = PermGroup([diag(t), diag(m), diag(w), c], degree)
    return (
        group,
        f"PGL(2,{q}) x Z2 on two copies of the projective line, "
        f"{degree} points",
        {},
    )


def _build_biprim_alt(m: int) -> tuple[PermGroup, str, dict]:
    if m < 1:
        raise BadParams("m must be at least 1")
    deg0 = 4 * m + 1
    degree = 2 * deg0

    def diag(p: Perm) -> Perm:
        return Perm(list(p.images) + [x + deg0 for x in p.images])

    c = Perm(list(range(deg0, degree)) + list(range(deg0)))
    gens = [diag(p) for p in _alt_gens(list(range(deg0)), deg0)] + [c]
    group = PermGroup(gens, degree)
    return (
        group,
        f"Alt({deg0}) x Z2 on two copies of the natural {deg0}-point "
        f"action, {degree} points",
        {},
    )


def _build_s4_biprim() -> tuple[PermGroup, str, dict]:
    ambient = PermGroup(_sym_gens(list(range(4)), 4), 4)
    sub = PermGroup([Perm.from_cycles([[0, 1, 2]], 4)], 4)
    ca = CosetAction(ambient, sub)
    return (
        ca.image,
        "Sym(4) on the 8 cosets of a subgroup of order 3",
        {"coset_action": ca},
    )


# -- the degree-28 search ----------------------------------------------------


def _all_4dim_subspaces_of_64() -> list[list[int]]:
    """Echelon bases for every 4-dimensional GF(2)-subspace of GF(64).

    Vectors are field elements as 6-bit masks.  Bases are row reduced:
    one pivot bit per row, descending, with free entries only at lower
    non-pivot positions.
    """
    from itertools import combinations, product

    out = []
    for pivots in combinations(range(5, -1, -1), 4):
        pivot_set = set(pivots)
        free = [
            (r, c)
            for r, p in enumerate(pivots)
            for c in range(p - 1, -1, -1)
            if c not in pivot_set
        ]
        for bits in product((0, 1), repeat=len(free)):
            rows = [1 << p for p in pivots]
            for (r, c), bit in zip(free, bits):
                if bit:
                    rows[r] |= 1 << c
            out.append(rows)
    return out


def _span16(basis: list[int]) -> frozenset[int]:
    span = {0}
    for b in basis:
        span |= {x ^ b for x in span}
    return frozenset(span)


def _build_gammaL164_deg28(fallback_cap: int = 2000) -> tuple[PermGroup, str, dict]:
    if fallback_cap < 0:
        raise BadParams("fallback_cap must be nonnegative")
    f = Field(64)
    w = f.primitive_element()
    a = f.pow(w, 9)  # multiplicative order 7

    t1 = Perm([x ^ 1 for x in range(64)])
    tw = Perm([x ^ w for x in range(64)])
    ma = Perm([f.mul(a, x) for x in range(64)])
    fr = Perm([f.mul(x, x) for x in range(64)])
    group = PermGroup([t1, tw, ma, fr], 64)

    order14 = sum(1 for e in group.elements() if e.order() == 14)
    transcript: dict = {
        "group_order": group.order(),
        "order14_elements": order14,
        "seeded": {
            "subspaces": 0,
            "invariant_pairs": 0,
            "order96_subgroups": 0,
            "faithful_degree28_actions": 0,
            "dihedral_witnesses": 0,
        },
        "fallback": {
            "cap": fallback_cap,
            "pairs_tried": 0,
            "order96_subgroups": 0,
            "dihedral_witnesses": 0,
        },
    }
    seeded = transcript["seeded"]
    fallback = transcript["fallback"]

    def try_subgroup(sub: PermGroup, counter: dict) -> tuple | None:
        ca = CosetAction(group, sub)
        if ca.degree != 28 or not ca.is_faithful():
            return None
        counter["faithful_degree28_actions"] = (
            counter.get("faithful_degree28_actions", 0) + 1
        )
        witness = find_regular_dihedral(ca.image)
        if witness is None:
            return None
        counter["dihedral_witnesses"] += 1
        return ca, witness

    # seeded phase: subgroups 2^4 . 6 built from an invariant 4-space of
    # translations and an affine-semilinear part x -> a^i x^2 + v
    subspaces = _all_4dim_subspaces_of_64()
    seeded["subspaces"] = len(subspaces)
    mu_maps = [
        [f.mul(f.pow(a, i), f.mul(x, x)) for x in range(64)] for i in range(7)
    ]
    for basis in subspaces:
        span = _span16(basis)
        for i in range(7):
            mu = mu_maps[i]
            if any(mu[b] not in span for b in basis):
                continue
            seeded["invariant_pairs"] += 1
            reps, seen = [], set()
            for x in range(64):
                if x not in seen:
                    reps.append(x)
                    seen |= {x ^ s for s in span}
            trans = [Perm([y ^ b for y in range(64)]) for b in basis]
            for v in reps:
                g = Perm([mu[x] ^ v for x in range(64)])
                sub = PermGroup(trans + [g], 64)
                if sub.order() != 96:
                    continue
                seeded["order96_subgroups"] += 1
                hit = try_subgroup(sub, seeded)
                if hit is not None:
                    ca, witness = hit
                    transcript["status"] = "found"
                    return (
                        ca.image,
                        "semilinear group of order 2688 over GF(64) on the "
                        "28 cosets of an order-96 subgroup",
                        {"coset_action": ca, "witness": witness,
                         "transcript": transcript},
                    )

    # fallback phase: generic two-generator subgroups in a fixed element
    # order, capped; orders not dividing 96 cannot occur in the target
    small = [e for e in group.elements() if 96 % e.order() == 0]
    done = False
    for idx1 in range(len(small)):
        if done:
            break
        for idx2 in range(idx1 + 1, len(small)):
            if fallback["pairs_tried"] >= fallback_cap:
                done = True
                break
            fallback["pairs_tried"] += 1
            sub = PermGroup([small[idx1], small[idx2]], 64)
            if sub.order() != 96:
                continue
            fallback["order96_subgroups"] += 1
            hit = try_subgroup(sub, fallback)
            if hit is not None:
                ca, witness = hit
                transcript["status"] = "found"
                return (
                    ca.image,
                    "semilinear group of order 2688 over GF(64) on the "
                    "28 cosets of an order-96 subgroup",
                    {"coset_action": ca, "witness": witness,
                     "transcript": transcript},
                )

    transcript["status"] = "search-failed"
    raise SearchFailed(
        "no order-96 subgroup yielded a faithful 28-point action with a "
        "regular dihedral subgroup",
        transcript,
    )


# -- registry and public API -------------------------------------------------

_BUILDERS: dict[str, tuple[dict[str, str], object, str]] = {
    "sym": ({"n": "number of points, at least 2"}, _build_sym,
            "symmetric group, natural action"),
    "alt": ({"n": "number of points, at least 3"}, _build_alt,
            "alternating group, natural action"),
    "psl27": ({}, _build_psl27, "PSL(2,7) on the projective line, degree 8"),
    "psl2q_line": ({"q": "odd prime, at least 5"}, _build_psl2q_line,
                   "PSL(2,q) on the projective line"),
    "pgl2q_line": ({"q": "odd prime, at least 5"}, _build_pgl2q_line,
                   "PGL(2,q) on the projective line"),
    "m11": ({}, _build_m11, "Mathieu group M11 on 11 points"),
    "agl1p": ({"p": "odd prime", "l": "even divisor of p-1"}, _build_agl1p,
              "one-dimensional affine group on 2p points"),
    "pgl2q_cosets": ({"q": "prime congruent to 3 mod 4"}, _build_pgl2q_cosets,
                     "PGL(2,q) on 2(q+1) cosets"),
    "pgl2q_times2": ({"q": "prime congruent to 3 mod 4"}, _build_pgl2q_times2,
                     "PGL(2,q) x Z2 on 2(q+1) points"),
    "symxz2_4p": ({"p": "odd prime"}, _build_symxz2_4p,
                  "Sym(p) x Z2 on 4p cosets"),
    "wreath": ({"k": "fiber size, at least 2",
                "n": "even fiber count, at least 4"}, _build_wreath,
               "cyclic fibers under a dihedral top group"),
    "biprim_pgl": ({"q": "prime congruent to 3 mod 4"}, _build_biprim_pgl,
                   "PGL(2,q) x Z2 on two projective lines"),
    "biprim_alt": ({"m": "positive integer, degree 2(4m+1)"},
                   _build_biprim_alt,
                   "Alt(4m+1) x Z2 on two copies of the natural action"),
    "s4_biprim": ({}, _build_s4_biprim, "Sym(4) on 8 cosets, degree 8"),
    "gammaL164_deg28": ({"fallback_cap": "generic search budget, optional"},
                        _build_gammaL164_deg28,
                        "degree-28 search over the order-2688 semilinear "
                        "group (search may fail; reported with transcript)"),
}

_OPTIONAL_PARAMS = {"gammaL164_deg28": {"fallback_cap"}}


def catalog_ids() -> list[str]:
    return sorted(_BUILDERS)


def param_schema(entry_id: str) -> dict[str, str]:
    if entry_id not in _BUILDERS:
        raise BadParams(f"unknown catalog id {entry_id!r}")
    return dict(_BUILDERS[entry_id][0])


def describe(entry_id: str) -> str:
    if entry_id not in _BUILDERS:
        raise BadParams(f"unknown catalog id {entry_id!r}")
    return _BUILDERS[entry_id][2]


def entry_key(entry_id: str, params: dict[str, int]) -> str:
    inner = ",".join(f"{k}={params[k]}" for k in sorted(params))
    return f"{entry_id}({inner})"


_EXPECTATIONS: dict | None = None


def expectations_table() -> dict:
    global _EXPECTATIONS
    if _EXPECTATIONS is None:
        path = resources.files("dgroups").joinpath("data/expectations.json")
        _EXPECTATIONS = json.loads(path.read_text())
    return _EXPECTATIONS


def build(entry_id: str, cap_order: int = 10 ** 6, **params: int) -> CatalogEntry:
    if entry_id not in _BUILDERS:
        raise BadParams(f"unknown catalog id {entry_id!r}")
    schema, fn, _summary = _BUILDERS[entry_id]
    optional = _OPTIONAL_PARAMS.get(entry_id, set())
    for name in params:
        if name not in schema:
            raise BadParams(f"unknown parameter {name!r} for {entry_id}")
    for name in schema:
        if name not in params and name not in optional:
            raise BadParams(f"missing parameter {name!r} for {entry_id}")
    for name, value in params.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise BadParams(f"parameter {name!r} must be an integer")

    group, description, extras = fn(**params)
    classification = group_class(group, cap_order=cap_order)
    key = entry_key(entry_id, params)
    expected = expectations_table().get(key)
    transcript = extras.pop("transcript", None)
    return CatalogEntry(
        id=entry_id,
        params=dict(params),
        key=key,
        group=group,
        description=description,
        classification=classification,
        expected=expected,
        extras=extras,
        transcript=transcript,
    )


# corpus shipped with the toolkit: every entry of degree at most 28,
# built and classified deterministically
CORPUS: list[tuple[str, dict[str, int]]] = [
    ("sym", {"n": 4}),
    ("alt", {"n": 4}),
    ("sym", {"n": 6}),
    ("pgl2q_line", {"q": 5}),
    ("psl27", {}),
    ("alt", {"n": 8}),
    ("s4_biprim", {}),
    ("pgl2q_line", {"q": 7}),
    ("biprim_alt", {"m": 1}),
    ("m11", {}),
    ("pgl2q_line", {"q": 11}),
    ("psl2q_line", {"q": 11}),
    ("symxz2_4p", {"p": 3}),
    ("wreath", {"k": 3, "n": 4}),
    ("agl1p", {"p": 7, "l": 6}),
    ("pgl2q_cosets", {"q": 7}),
    ("pgl2q_times2", {"q": 7}),
    ("biprim_pgl", {"q": 7}),
    ("wreath", {"k": 3, "n": 6}),
    ("wreath", {"k": 5, "n": 4}),
]


def corpus_entries(cap_order: int = 10 ** 6):
    for entry_id, params in CORPUS:
        yield build(entry_id, cap_order=cap_order, **params)


def _check_wreath_identities(entry: CatalogEntry) -> list[CheckResult]:
    k = entry.params["k"]
    n = entry.params["n"]
    m = n // 2
    y = entry.extras["y"]
    b = entry.extras["b"]
    out = []
    out.append(CheckResult(
        "wreath-inversion", y.conjugate(b) == y.inverse(),
        "b inverts y" if y.conjugate(b) == y.inverse() else "b does not invert y"))
    out.append(CheckResult(
        "wreath-rotation-order", y.order() == k * m,
        f"|y| = {y.order()}, want {k * m}"))
    half_twist = list(range(n * k))
    for fiber in range(n):
        for d in range(k):
            shift = 1 if fiber < m else -1
            half_twist[fiber * k + d] = fiber * k + (d + shift) % k
    ok = y ** m == Perm(half_twist)
    out.append(CheckResult(
        "wreath-half-turn", ok,
        "y^m is the expected half-turn translation" if ok
        else "y^m is not the expected half-turn translation"))
    dih = PermGroup([y, b], entry.group.degree)
    ok = dih.order() == k * n
    out.append(CheckResult(
        "wreath-witness-order", ok, f"|<y,b>| = {dih.order()}, want {k * n}"))
    from .actions import is_regular

    ok = is_regular(dih)
    out.append(CheckResult(
        "wreath-witness-regular", ok,
        "<y,b> is regular" if ok else "<y,b> is not regular"))
    return out


def verify_entry(entry: CatalogEntry, cap_order: int = 10 ** 6) -> list[CheckResult]:
    """Check a built entry against its expected metadata.

    Returns one result per check; an entry with no expectations row gets
    a single failing result so gaps in the table are visible.
    """
    from .actions import is_primitive, minimal_block_systems
    from .classify import classify_case

    exp = entry.expected
    if exp is None:
        return [CheckResult("expectations", False,
                            f"no expectations row for {entry.key}")]
    out = []
    out.append(CheckResult(
        "degree", entry.group.degree == exp["degree"],
        f"degree {entry.group.degree}, want {exp['degree']}"))
    out.append(CheckResult(
        "order", entry.group.order() == exp["order"],
        f"order {entry.group.order()}, want {exp['order']}"))
    out.append(CheckResult(
        "class", entry.classification.verdict == exp["class"],
        f"class {entry.classification.verdict}, want {exp['class']}"))

    for kind, witness in (("cyclic", entry.classification.cyclic),
                          ("dihedral", entry.classification.dihedral)):
        if witness is not None:
            ok, problems = verify_witness(entry.group, witness)
            out.append(CheckResult(
                f"witness-{kind}", ok,
                "verified" if ok else "; ".join(problems)))

    primitive = is_primitive(entry.group)
    out.append(CheckResult(
        "primitivity", primitive == exp["primitive"],
        f"primitive is {primitive}, want {exp['primitive']}"))

    if not primitive:
        systems = minimal_block_systems(entry.group)
        got = []
        for system in systems:
            kernel = None
            matches = None
            from .actions import InducedAction

            kernel = InducedAction(entry.group, system).kernel
            if entry.classification.dihedral is not None:
                evidence = classify_case(
                    entry.group, entry.classification.dihedral, system,
                    cap_order=cap_order)
                matches = [int(c) for c in evidence.matches]
            got.append({
                "num_blocks": system.num_blocks,
                "block_size": system.block_size,
                "kernel_order": kernel.order(),
                "matches": matches,
            })
        ok = got == exp["minimal_systems"]
        out.append(CheckResult(
            "minimal-systems", ok,
            f"{len(got)} minimal systems match expected shapes" if ok
            else f"got {got}, want {exp['minimal_systems']}"))

    if entry.id == "wreath":
        out.extend(_check_wreath_identities(entry))
    return out
