"""Case analysis for imprimitive groups with a regular dihedral subgroup.

Given such a group, a minimal block system, and the witness subgroup D,
the kernel K of the block action falls into a small number of shapes,
and each shape pins the group against one of six structural cases.  The
six case predicates are evaluated independently per system; each one
reports holds / fails / not-applicable with reason strings, so a system
matching no case (or several) surfaces as an explicit warning instead
of a forced answer.

The supporting checks mirror that structure: a lemma suite re-verifies
the size and cyclicity constraints on D∩K and the block restrictions, a
trichotomy places the kernel against any one connected orbital graph,
and two-block systems with primitive halves get a separate bi-primitive
report.  ``analyze_group`` strings all of it into one document.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .actions import (
    BlockSystem,
    InducedAction,
    IntransitiveGroup,
    action_on_blocks,
    block_stabilizer_restriction,
    block_systems,
    is_primitive,
    is_transitive,
    is_two_transitive,
    minimal_block_systems,
    orbits,
    point_stabilizer,
    restrict,
)
from .chain import PermGroup
from .orbital import (
    OrbitalGraph,
    circulant_components_check,
    complete_bipartite_parts,
    lex_blowup_quotient,
    orbital_graphs,
)
from .perms import Perm, format_perm
from .regular import (
    GroupClass,
    RegularWitness,
    find_regular_cyclic,
    find_regular_dihedral,
    group_class,
)

__all__ = [
    "NotDGroup",
    "PrimitiveInput",
    "DisconnectedGraph",
    "CaseFlag",
    "CaseEvidence",
    "LemmaCheck",
    "BiprimitivePart",
    "SystemAnalysis",
    "AnalysisReport",
    "primitive_verdict",
    "kernel_trichotomy",
    "classify_case",
    "lemma_suite",
    "biprimitive_report",
    "analyze_group",
]


class NotDGroup(ValueError):
    """Case analysis needs a regular dihedral witness."""


class PrimitiveInput(ValueError):
    """Case analysis needs a nontrivial block system."""


class DisconnectedGraph(ValueError):
    """The kernel trichotomy is stated for connected orbital graphs."""


# -- small structural helpers ----------------------------------------------


def _is_cyclic(group: PermGroup) -> bool:
    order = group.order()
    return any(g.order() == order for g in group.elements())


def _elementary_abelian_prime(group: PermGroup) -> int | None:
    """The prime p if the group is nontrivial elementary abelian, else None."""
    order = group.order()
    if order == 1:
        return None
    p = min(d for d in range(2, order + 1) if order % d == 0)
    q = order
    while q % p == 0:
        q //= p
    if q != 1:
        return None
    if not group.is_abelian():
        return None
    if any(g.order() != p for g in group.generators):
        return None
    return p


def _intersection_with_small(small: PermGroup, big: PermGroup) -> PermGroup:
    """small ∩ big, by filtering the elements of the small group."""
    kept = [g for g in small.elements() if not g.is_identity() and g in big]
    return PermGroup(kept, small.degree)


def _restriction_to_block(kernel: PermGroup, block: tuple[int, ...]) -> PermGroup:
    return PermGroup(
        [restrict(g, block) for g in kernel.generators], len(block)
    )


def primitive_verdict(group: PermGroup) -> str:
    """Type of a primitive group: 2-transitive, agl1p-subgroup, or neither.

    The agl1p shape means prime degree p with a normal regular Sylow
    p-subgroup, certified by counting elements of order p: exactly p−1
    of them forces a unique (hence normal) regular Z_p.
    """
    if is_two_transitive(group):
        return "2-transitive"
    n = group.degree
    from .gf import is_prime

    if is_prime(n) and (n * (n - 1)) % group.order() == 0:
        count = sum(1 for g in group.elements() if g.order() == n)
        if count == n - 1:
            return "agl1p-subgroup"
    return "neither"


def kernel_trichotomy(
    group: PermGroup, system: BlockSystem, graph: OrbitalGraph
) -> dict:
    """Place the block-action kernel against one connected orbital graph.

    Exactly one of three situations applies: the kernel is trivial (the
    block image is a faithful copy), the kernel acts faithfully and
    transitively on every block, or the graph is a lex blowup of the
    system.  A connected graph fitting none of them would contradict
    the kernel's normality, so that case raises.
    """
    if not graph.is_connected():
        raise DisconnectedGraph("trichotomy applies to connected orbital graphs")
    induced = action_on_blocks(group, system)
    kernel = induced.kernel
    k_order = kernel.order()
    if k_order == 1:
        return {"branch": "isomorphic-image", "kernel_order": 1}
    block = system.blocks[0]
    on_block = _restriction_to_block(kernel, block)
    if on_block.order() == k_order and len(orbits(on_block)) == 1:
        return {
            "branch": "faithful-on-block",
            "kernel_order": k_order,
            "block_restriction_order": on_block.order(),
        }
    quotient = lex_blowup_quotient(graph, system)
    if quotient is not None:
        return {
            "branch": "lex-blowup",
            "kernel_order": k_order,
            "quotient_arcs": sorted(quotient),
        }
    raise RuntimeError(
        "connected orbital graph fits no kernel branch; invariant broken"
    )


# -- case evidence -----------------------------------------------------------


@dataclass(frozen=True)
class CaseFlag:
    status: str  # holds | fails | not-applicable
    reasons: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"status": self.status, "reasons": list(self.reasons)}


@dataclass
class CaseEvidence:
    """Everything the six case predicates measured on one system."""

    system: BlockSystem
    kernel_order: int
    image_order: int
    block_size: int
    num_blocks: int
    dk_order: int
    dk_cyclic: bool
    kernel_on_block: str
    flags: dict[int, CaseFlag]
    matches: tuple[int, ...]
    split_over_kernel: bool | None = None
    centralizer_split: bool | None = None
    lex_witness_arc: tuple[int, int] | None = None
    centralizer_order: int | None = None
    kh_index: int | None = None
    small_block_branch: str | None = None
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "blocks": self.system.one_based(),
            "block_size": self.block_size,
            "num_blocks": self.num_blocks,
            "kernel_order": self.kernel_order,
            "image_order": self.image_order,
            "dk_order": self.dk_order,
            "dk_cyclic": self.dk_cyclic,
            "kernel_on_block": self.kernel_on_block,
            "cases": {str(i): f.to_dict() for i, f in sorted(self.flags.items())},
            "matches": list(self.matches),
            "split_over_kernel": self.split_over_kernel,
            "centralizer_split": self.centralizer_split,
            "lex_witness_arc": (
                [self.lex_witness_arc[0] + 1, self.lex_witness_arc[1] + 1]
                if self.lex_witness_arc is not None
                else None
            ),
            "centralizer_order": self.centralizer_order,
            "kh_index": self.kh_index,
            "small_block_branch": self.small_block_branch,
            "warnings": list(self.warnings),
        }


def _power_map_exponents(group: PermGroup, k0: Perm, p: int) -> tuple[set[int], int]:
    """Image of the conjugation action on <k0> ≅ Z_p as exponents mod p.

    Returns the exponent subgroup of (Z/p)* and one generator of it,
    certifying the quotient by the centralizer is cyclic.
    """
    powers = {}
    x = k0
    for e in range(1, p):
        powers[x] = e
        x = x * k0
    exps = set()
    for g in group.generators:
        conj = k0.conjugate(g)
        exps.add(powers[conj])
    closure = {1}
    frontier = list(exps)
    while frontier:
        e = frontier.pop()
        for f in list(closure):
            prod = (e * f) % p
            if prod not in closure:
                closure.add(prod)
                frontier.append(prod)
    gen = next(
        e for e in sorted(closure) if _mod_order(e, p) == len(closure)
    )
    return closure, gen


def _mod_order(e: int, p: int) -> int:
    order = 1
    x = e % p
    while x != 1:
        x = (x * e) % p
        order += 1
    return order


def classify_case(
    group: PermGroup,
    witness: RegularWitness | None,
    system: BlockSystem,
    graphs: list[OrbitalGraph] | None = None,
    cap_order: int = 10**6,
) -> CaseEvidence:
    """Evaluate all six case predicates on one minimal block system."""
    if witness is None or witness.kind != "dihedral":
        raise NotDGroup("case analysis needs a regular dihedral witness")
    if system.is_trivial:
        raise PrimitiveInput("case analysis needs a nontrivial block system")
    n = group.degree
    b = system.block_size
    m = system.num_blocks
    induced = action_on_blocks(group, system)
    kernel, image = induced.kernel, induced.image
    k_order = kernel.order()
    dsub = witness.subgroup()
    dk = _intersection_with_small(dsub, kernel)
    dk_order = dk.order()
    dk_cyclic = _is_cyclic(dk)
    if graphs is None:
        graphs = orbital_graphs(group)

    if k_order == 1:
        kernel_on_block = "trivial"
    else:
        on_block = _restriction_to_block(kernel, system.blocks[0])
        faithful = on_block.order() == k_order
        if is_primitive(on_block):
            kernel_on_block = "primitive-faithful" if faithful else "primitive-unfaithful"
        else:
            kernel_on_block = "imprimitive"

    flags: dict[int, CaseFlag] = {}
    warnings: list[str] = []
    split_over_kernel = None
    centralizer_split = None
    lex_witness_arc = None
    centralizer_order = None
    kh_index = None

    # case 1: trivial kernel, blocks of 2, cyclic block image
    reasons = []
    if k_order != 1:
        reasons.append(f"kernel has order {k_order}, not trivial")
    if b != 2:
        reasons.append(f"block size {b}, not 2")
    if reasons:
        flags[1] = CaseFlag("not-applicable", tuple(reasons))
    else:
        cyc = find_regular_cyclic(image, cap_order)
        if cyc is None:
            flags[1] = CaseFlag(
                "fails",
                ("kernel trivial and blocks have size 2",
                 f"block image of degree {m} has no regular cyclic subgroup"),
            )
        else:
            flags[1] = CaseFlag(
                "holds",
                ("kernel trivial, so the group is a faithful copy on blocks",
                 f"block image of degree {m} has regular cyclic witness "
                 f"{format_perm(cyc.rotation)}"),
            )

    # case 2: kernel restricts primitively but unfaithfully; lex blowup orbital
    reasons = []
    if k_order == 1:
        reasons.append("kernel is trivial")
    elif kernel_on_block != "primitive-unfaithful":
        reasons.append(
            f"kernel on a block is {kernel_on_block}, not primitive-unfaithful"
        )
    if reasons:
        flags[2] = CaseFlag("not-applicable", tuple(reasons))
    else:
        hit = None
        for graph in graphs:
            if lex_blowup_quotient(graph, system) is not None:
                hit = graph
                break
        if hit is None:
            flags[2] = CaseFlag(
                "fails",
                ("kernel on a block is primitive-unfaithful",
                 "no orbital graph is a lex blowup of this system"),
            )
        else:
            lex_witness_arc = hit.base_pair
            flags[2] = CaseFlag(
                "holds",
                ("kernel on a block is primitive-unfaithful",
                 f"orbital graph of base arc "
                 f"({hit.base_pair[0] + 1}, {hit.base_pair[1] + 1}) "
                 f"is a lex blowup of this system"),
            )

    # case 3: kernel faithful and primitive per block; centralizer complement
    reasons = []
    if k_order == 1:
        reasons.append("kernel is trivial")
    elif kernel_on_block != "primitive-faithful":
        reasons.append(
            f"kernel on a block is {kernel_on_block}, not primitive-faithful"
        )
    if reasons:
        flags[3] = CaseFlag("not-applicable", tuple(reasons))
    else:
        cent = group.centralizer(kernel, cap=cap_order)
        centralizer_order = cent.order()
        meet = _intersection_with_small(kernel, cent) if kernel.order() <= cent.order() \
            else _intersection_with_small(cent, kernel)
        kh = PermGroup(list(kernel.generators) + list(cent.generators), n)
        kh_index = group.order() // kh.order()
        sub_reasons = [
            f"kernel of order {k_order} acts faithfully and primitively per block",
            f"centralizer of the kernel has order {centralizer_order}",
        ]
        ok = True
        if meet.order() != 1:
            ok = False
            sub_reasons.append(
                f"kernel meets its centralizer in order {meet.order()}, not 1"
            )
        else:
            sub_reasons.append("kernel meets its centralizer trivially")
        if not kh.is_normal_in(group):
            ok = False
            sub_reasons.append("product of kernel and centralizer is not normal")
        else:
            sub_reasons.append(
                f"product of kernel and centralizer is normal of index {kh_index}"
            )
        flags[3] = CaseFlag("holds" if ok else "fails", tuple(sub_reasons))

    # case 4: central kernel of order 2, blocks of 2, dihedral image, non-split
    reasons = []
    if k_order != 2:
        reasons.append(f"kernel has order {k_order}, not 2")
    if b != 2:
        reasons.append(f"block size {b}, not 2")
    if not reasons:
        center = group.center(cap=cap_order)
        if not (center.order() == 2 and kernel.same_group_as(center)):
            reasons.append(
                f"kernel is not the center (center has order {center.order()})"
            )
    if reasons:
        flags[4] = CaseFlag("not-applicable", tuple(reasons))
    else:
        sub_reasons = [f"kernel of order 2 equals the center; blocks have size 2"]
        ok = True
        dih = None
        if m % 2 == 0 and m >= 4:
            dih = find_regular_dihedral(image, cap_order)
        if dih is None:
            ok = False
            sub_reasons.append(
                f"block image of degree {m} has no regular dihedral subgroup"
            )
        else:
            sub_reasons.append(f"block image of degree {m} is a d-group")
        z = next(g for g in kernel.generators if not g.is_identity())
        split_over_kernel = group.splits_over_central_prime(z, 2)
        if split_over_kernel:
            ok = False
            sub_reasons.append("the extension over the kernel splits")
            warnings.append(
                "central order-2 kernel is a split extension; the non-split "
                "requirement excludes case (4)"
            )
        else:
            sub_reasons.append("the extension over the kernel does not split")
        flags[4] = CaseFlag("holds" if ok else "fails", tuple(sub_reasons))

    # case 5: kernel Z_p (p odd), cyclic power action of doubled odd order,
    # centralizer non-split over the kernel
    from .gf import is_prime as _prime

    reasons = []
    if not (_prime(k_order) and k_order % 2 == 1):
        reasons.append(f"kernel order {k_order} is not an odd prime")
    if reasons:
        flags[5] = CaseFlag("not-applicable", tuple(reasons))
    else:
        p = k_order
        cent = group.centralizer(kernel, cap=cap_order)
        centralizer_order = cent.order()
        t = group.order() // cent.order()
        k0 = next(g for g in kernel.elements() if not g.is_identity())
        exponents, gen = _power_map_exponents(group, k0, p)
        sub_reasons = [
            f"kernel is cyclic of odd prime order {p}",
            f"conjugation acts on the kernel through exponents of order {t}, "
            f"generated by the power map x -> x^{gen}",
        ]
        ok = True
        if len(exponents) != t:
            ok = False
            sub_reasons.append(
                f"exponent subgroup has order {len(exponents)}, expected {t}"
            )
        if t % 2 != 0 or (t // 2) % 2 != 1:
            ok = False
            sub_reasons.append(
                f"quotient by the centralizer has order {t}, not twice an odd number"
            )
        elif (p - 1) % t != 0:
            ok = False
            sub_reasons.append(f"{t} does not divide {p - 1}")
        else:
            sub_reasons.append(
                f"quotient by the centralizer is cyclic of order {t} = 2*{t // 2} "
                f"with {t // 2} odd, dividing {p - 1}"
            )
        centralizer_split = cent.splits_over_central_prime(k0, p)
        if centralizer_split:
            ok = False
            sub_reasons.append("the centralizer splits over the kernel")
            warnings.append(
                "odd-prime kernel splits off inside its centralizer; the "
                "non-split requirement excludes case (5)"
            )
        else:
            sub_reasons.append("the centralizer does not split over the kernel")
        flags[5] = CaseFlag("holds" if ok else "fails", tuple(sub_reasons))

    # case 6: blocks of 4 over an elementary abelian 2-kernel, cyclic image
    reasons = []
    ea_prime = _elementary_abelian_prime(kernel) if k_order > 1 else None
    if b != 4:
        reasons.append(f"block size {b}, not 4")
    if ea_prime != 2:
        reasons.append("kernel is not a nontrivial elementary abelian 2-group")
    if not reasons:
        cyc = find_regular_cyclic(image, cap_order)
        if cyc is None:
            reasons.append(f"block image of degree {m} has no regular cyclic subgroup")
    if reasons:
        flags[6] = CaseFlag("not-applicable", tuple(reasons))
    else:
        sub_reasons = [
            f"blocks of size 4 over an elementary abelian 2-kernel of order {k_order}",
            f"block image of degree {m} has a regular cyclic subgroup",
        ]
        if dk_order == 2:
            sub_reasons.append("witness subgroup meets the kernel in order 2")
            flags[6] = CaseFlag("holds", tuple(sub_reasons))
        else:
            sub_reasons.append(
                f"witness subgroup meets the kernel in order {dk_order}, not 2"
            )
            flags[6] = CaseFlag("fails", tuple(sub_reasons))

    # small-block structure, recorded for any system with blocks of 2
    small_block_branch = None
    if b == 2:
        img_class = group_class(image, cap_order)
        if k_order == 1:
            small_block_branch = "K = 1, image isomorphic to the group"
        elif k_order == 2:
            if dk_order == 1:
                tag = "c-group" if img_class.cyclic else "NOT c-group (unexpected)"
                small_block_branch = f"K = Z2, D∩K = 1, block image {tag}"
                if img_class.cyclic is None:
                    warnings.append(
                        "small-block shape violated: trivial D∩K needs a cyclic "
                        "block image"
                    )
            else:
                tag = "d-group" if img_class.dihedral else "NOT d-group (unexpected)"
                small_block_branch = f"K = Z2, D∩K = Z2, block image {tag}"
                if img_class.dihedral is None:
                    warnings.append(
                        "small-block shape violated: full D∩K needs a dihedral "
                        "block image"
                    )
        elif ea_prime == 2:
            has_lex = any(
                lex_blowup_quotient(graph, system) is not None for graph in graphs
            )
            small_block_branch = (
                "K elementary abelian of order >= 4, lex-blowup orbital graph "
                + ("present" if has_lex else "absent")
            )
        else:
            small_block_branch = "unrecognized small-block kernel shape"
            warnings.append(
                "blocks of size 2 with a kernel that is neither trivial nor an "
                "elementary abelian 2-group"
            )

    matches = tuple(i for i in range(1, 7) if flags[i].status == "holds")
    if not matches:
        warnings.append("no case of the classification holds for this system")
    elif len(matches) > 1:
        warnings.append(
            "multiple cases hold simultaneously: " + ", ".join(map(str, matches))
        )

    return CaseEvidence(
        system=system,
        kernel_order=k_order,
        image_order=image.order(),
        block_size=b,
        num_blocks=m,
        dk_order=dk_order,
        dk_cyclic=dk_cyclic,
        kernel_on_block=kernel_on_block,
        flags=flags,
        matches=matches,
        split_over_kernel=split_over_kernel,
        centralizer_split=centralizer_split,
        lex_witness_arc=lex_witness_arc,
        centralizer_order=centralizer_order,
        kh_index=kh_index,
        small_block_branch=small_block_branch,
        warnings=tuple(warnings),
    )


# -- lemma suite -------------------------------------------------------------


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    status: str  # pass | fail | not-applicable
    details: str

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


def lemma_suite(
    group: PermGroup,
    witness: RegularWitness,
    system: BlockSystem,
    minimal: bool = True,
) -> list[LemmaCheck]:
    """Re-verify the structural constraints one system must satisfy."""
    if witness.kind != "dihedral":
        raise NotDGroup("lemma suite needs a regular dihedral witness")
    checks: list[LemmaCheck] = []
    b = system.block_size
    induced = action_on_blocks(group, system)
    kernel = induced.kernel
    dsub = witness.subgroup()
    dk = _intersection_with_small(dsub, kernel)
    dk_order = dk.order()

    if dk_order == b:
        block = system.blocks[0]
        on_block = _restriction_to_block(dk, block)
        regular = on_block.order() == b and len(orbits(on_block)) == 1
        checks.append(
            LemmaCheck(
                "kernel-intersection-size",
                "pass" if regular else "fail",
                f"|D∩K| = {dk_order} = block size; restriction to a block is "
                + ("regular" if regular else "NOT regular"),
            )
        )
    elif 2 * dk_order == b:
        block = system.blocks[0]
        on_block = _restriction_to_block(dk, block)
        halves = orbits(on_block)
        semi = (
            on_block.order() == dk_order
            and len(halves) == 2
            and all(len(h) == b // 2 for h in halves)
        )
        checks.append(
            LemmaCheck(
                "kernel-intersection-size",
                "pass" if semi else "fail",
                f"|D∩K| = {dk_order} = half the block size; restriction is "
                + ("semiregular with 2 orbits" if semi else "NOT semiregular with 2 orbits"),
            )
        )
    else:
        checks.append(
            LemmaCheck(
                "kernel-intersection-size",
                "fail",
                f"|D∩K| = {dk_order} is neither {b} nor {b // 2}",
            )
        )

    if system.num_blocks > 2:
        cyc = _is_cyclic(dk)
        checks.append(
            LemmaCheck(
                "kernel-intersection-cyclic",
                "pass" if cyc else "fail",
                f"more than 2 blocks; D∩K of order {dk_order} is "
                + ("cyclic" if cyc else "NOT cyclic"),
            )
        )
    else:
        checks.append(
            LemmaCheck(
                "kernel-intersection-cyclic",
                "not-applicable",
                "only 2 blocks",
            )
        )

    block = system.blocks[0]
    block_set = set(block)
    d_setwise = [
        g for g in dsub.elements() if all(g.images[x] in block_set for x in block)
    ]
    d_on_block = PermGroup([restrict(g, block) for g in d_setwise], b)
    d_regular = d_on_block.order() == b and len(orbits(d_on_block)) == 1
    checks.append(
        LemmaCheck(
            "witness-block-restriction-regular",
            "pass" if d_regular else "fail",
            f"setwise stabilizer of a block inside D restricts to order "
            f"{d_on_block.order()} on {b} points; "
            + ("regular" if d_regular else "NOT regular"),
        )
    )

    gbb = block_stabilizer_restriction(group, system)
    gclass = group_class(gbb)
    checks.append(
        LemmaCheck(
            "block-group-class",
            "pass" if gclass.verdict != "neither" else "fail",
            f"induced group on a block has order {gbb.order()} and class "
            f"{gclass.verdict}",
        )
    )

    if minimal:
        verdict = primitive_verdict(gbb)
        checks.append(
            LemmaCheck(
                "block-group-primitive-type",
                "pass" if verdict != "neither" else "fail",
                f"induced group on a block is {verdict}",
            )
        )
    else:
        checks.append(
            LemmaCheck(
                "block-group-primitive-type",
                "not-applicable",
                "system is not minimal",
            )
        )

    k_order = kernel.order()
    if k_order > 1:
        on_block = _restriction_to_block(kernel, block)
        p_block = _elementary_abelian_prime(on_block)
        if p_block is None:
            checks.append(
                LemmaCheck(
                    "kernel-elementary-abelian-inheritance",
                    "not-applicable",
                    "kernel on a block is not elementary abelian",
                )
            )
        else:
            p_kernel = _elementary_abelian_prime(kernel)
            ok = p_kernel == p_block
            checks.append(
                LemmaCheck(
                    "kernel-elementary-abelian-inheritance",
                    "pass" if ok else "fail",
                    f"kernel on a block is elementary abelian for p = {p_block}; "
                    f"the kernel itself is "
                    + (f"elementary abelian for p = {p_kernel}" if p_kernel else "NOT elementary abelian"),
                )
            )
    else:
        checks.append(
            LemmaCheck(
                "kernel-elementary-abelian-inheritance",
                "not-applicable",
                "kernel is trivial",
            )
        )

    return checks


# -- bi-primitive reports ----------------------------------------------------


@dataclass(frozen=True)
class BiprimitivePart:
    part: int
    status: str  # holds | fails
    details: str

    def to_dict(self) -> dict:
        return {"part": self.part, "status": self.status, "details": self.details}


def _conjugacy_class_reps(group: PermGroup, members: list[Perm]) -> list[Perm]:
    """One representative per conjugacy class among ``members``."""
    remaining = set(members)
    reps = []
    while remaining:
        g = next(iter(sorted(remaining, key=lambda x: x.images)))
        reps.append(g)
        cls = {g}
        queue = [g]
        while queue:
            x = queue.pop()
            for s in group.generators:
                y = x.conjugate(s)
                if y not in cls:
                    cls.add(y)
                    queue.append(y)
        remaining -= cls
    return reps


def _minimal_normal_subgroups(group: PermGroup) -> list[PermGroup]:
    """Inclusion-minimal nontrivial normal subgroups.

    Each one is the normal closure of a prime-order element, so closing
    one representative per prime-order conjugacy class and keeping the
    inclusion-minimal results is exhaustive.
    """
    from .gf import is_prime as _prime

    prime_elements = [g for g in group.elements() if _prime(g.order())]
    reps = _conjugacy_class_reps(group, prime_elements)
    closures = [group.normal_closure([r]) for r in reps]
    minimal = []
    for i, n_i in enumerate(closures):
        if any(
            j != i
            and closures[j].order() < n_i.order()
            and closures[j].is_subgroup_of(n_i)
            for j in range(len(closures))
        ):
            continue
        if not any(n_i.same_group_as(m) for m in minimal):
            minimal.append(n_i)
    return minimal


def _is_simple_nonabelian(group: PermGroup) -> bool:
    from .gf import is_prime as _prime

    if group.order() == 1 or group.is_abelian():
        return False
    prime_elements = [g for g in group.elements() if _prime(g.order())]
    reps = _conjugacy_class_reps(group, prime_elements)
    return all(
        group.normal_closure([r]).order() == group.order() for r in reps
    )


def biprimitive_report(
    group: PermGroup,
    witness: RegularWitness,
    system: BlockSystem,
    graphs: list[OrbitalGraph] | None = None,
    cap_order: int = 10**6,
) -> list[BiprimitivePart]:
    """Check the stated shapes for two-block systems with primitive halves."""
    if system.num_blocks != 2:
        raise ValueError("bi-primitive reports need a system with exactly 2 blocks")
    if graphs is None:
        graphs = orbital_graphs(group)
    n = group.degree
    m = system.block_size
    induced = action_on_blocks(group, system)
    plus = induced.kernel  # index-2 subgroup fixing both blocks
    parts: list[BiprimitivePart] = []

    hit = None
    for graph in graphs:
        two_parts = complete_bipartite_parts(graph)
        if two_parts is not None:
            hit = (graph, two_parts)
            break
    if hit is None:
        parts.append(
            BiprimitivePart(1, "fails", "no orbital graph is complete bipartite")
        )
    else:
        graph, _ = hit
        parts.append(
            BiprimitivePart(
                1,
                "holds",
                f"orbital graph of base arc ({graph.base_pair[0] + 1}, "
                f"{graph.base_pair[1] + 1}) is complete bipartite K_{{{m},{m}}}",
            )
        )

    center = group.center(cap=cap_order)
    central_inv = [
        z
        for z in center.elements()
        if z.order() == 2 and z not in plus
    ]
    if central_inv and 2 * plus.order() == group.order():
        z = min(central_inv, key=lambda x: x.images)
        parts.append(
            BiprimitivePart(
                2,
                "holds",
                f"central involution {format_perm(z)} outside the block "
                f"stabilizer splits the group as a direct product",
            )
        )
    else:
        parts.append(
            BiprimitivePart(
                2,
                "fails",
                "no central involution lies outside the block stabilizer",
            )
        )

    from .gf import is_prime as _prime

    stab = point_stabilizer(group, 0)
    k = stab.order()
    order_cond = group.order() == 2 * m * k
    if _prime(m) and order_cond and k % 2 == 1 and _is_cyclic(stab):
        count = sum(1 for g in group.elements(cap_order) if g.order() == m)
        if count == m - 1:
            parts.append(
                BiprimitivePart(
                    3,
                    "holds",
                    f"degree 2p for p = {m}; order 2pk with k = {k} odd; point "
                    f"stabilizer cyclic of order {k}; unique regular Sylow "
                    f"p-subgroup",
                )
            )
        else:
            parts.append(
                BiprimitivePart(
                    3,
                    "fails",
                    f"{count} elements of order {m}, expected {m - 1}",
                )
            )
    else:
        parts.append(
            BiprimitivePart(
                3,
                "fails",
                "shape |G| = 2pk with p prime, k odd, cyclic point stabilizer "
                "does not hold",
            )
        )

    if (
        group.order() == 24
        and center.order() == 1
        and plus.order() == 12
        and plus.derived_subgroup().order() == 4
    ):
        parts.append(
            BiprimitivePart(
                4,
                "holds",
                "order 24 with trivial center and an index-2 block stabilizer "
                "whose derived subgroup has order 4",
            )
        )
    else:
        parts.append(
            BiprimitivePart(4, "fails", "order-24 shape does not hold")
        )

    minimals = _minimal_normal_subgroups(group)
    if len(minimals) == 1 and _is_simple_nonabelian(minimals[0]):
        parts.append(
            BiprimitivePart(
                5,
                "holds",
                f"unique minimal normal subgroup of order "
                f"{minimals[0].order()} is nonabelian simple",
            )
        )
    else:
        detail = (
            f"{len(minimals)} minimal normal subgroups of orders "
            f"{sorted(nm.order() for nm in minimals)}"
        )
        parts.append(BiprimitivePart(5, "fails", detail))

    return parts


# -- full pipeline -----------------------------------------------------------


@dataclass
class SystemAnalysis:
    """One minimal system's evidence, lemma checks and side reports."""

    evidence: CaseEvidence
    lemmas: list[LemmaCheck]
    trichotomy: dict | None
    trichotomy_note: str | None
    biprimitive: list[BiprimitivePart] | None

    def to_dict(self) -> dict:
        return {
            "evidence": self.evidence.to_dict(),
            "lemmas": [c.to_dict() for c in self.lemmas],
            "trichotomy": self.trichotomy,
            "trichotomy_note": self.trichotomy_note,
            "biprimitive": (
                [p.to_dict() for p in self.biprimitive]
                if self.biprimitive is not None
                else None
            ),
        }


@dataclass
class OrbitalSummary:
    base_pair: tuple[int, int]
    arc_count: int
    connected: bool
    self_paired: bool
    lex_blowup_of: list[list[int]] | None
    complete_bipartite: tuple[int, int] | None
    circulant_components: list[dict] | None

    def to_dict(self) -> dict:
        return {
            "base_pair": [self.base_pair[0] + 1, self.base_pair[1] + 1],
            "arc_count": self.arc_count,
            "connected": self.connected,
            "self_paired": self.self_paired,
            "lex_blowup_of": self.lex_blowup_of,
            "complete_bipartite": (
                list(self.complete_bipartite) if self.complete_bipartite else None
            ),
            "circulant_components": self.circulant_components,
        }


@dataclass
class AnalysisReport:
    input_id: str
    degree: int
    order: int
    group_class: GroupClass
    primitive: bool
    primitivity: str | None
    systems: list[SystemAnalysis]
    orbitals: list[OrbitalSummary]
    undirectedness: dict | None
    warnings: list[str]

    def to_dict(self) -> dict:
        witness = {}
        for kind, w in (("cyclic", self.group_class.cyclic),
                        ("dihedral", self.group_class.dihedral)):
            witness[kind] = (
                None
                if w is None
                else {
                    "a": format_perm(w.rotation),
                    "z": format_perm(w.reflection) if w.reflection else None,
                    "subgroup_order": w.subgroup_order,
                }
            )
        return {
            "input_id": self.input_id,
            "degree": self.degree,
            "order": self.order,
            "class": self.group_class.verdict,
            "witness": witness,
            "primitive": self.primitive,
            "primitivity": self.primitivity,
            "systems": [s.to_dict() for s in self.systems],
            "orbitals": [o.to_dict() for o in self.orbitals],
            "undirectedness": self.undirectedness,
            "warnings": self.warnings,
        }


def analyze_group(
    group: PermGroup,
    input_id: str = "group",
    cap_order: int = 10**6,
    require_dgroup: bool = False,
) -> AnalysisReport:
    """Full pipeline: class detection, case analysis, orbital survey."""
    if not is_transitive(group):
        raise IntransitiveGroup("analysis needs a transitive action")
    gclass = group_class(group, cap_order)
    if require_dgroup and gclass.dihedral is None:
        raise NotDGroup(f"group of degree {group.degree} is a {gclass.verdict}")
    warnings: list[str] = []
    primitive = is_primitive(group)
    primitivity = None
    systems: list[SystemAnalysis] = []
    graphs = orbital_graphs(group)
    witness = gclass.dihedral

    if primitive:
        if gclass.verdict != "neither":
            primitivity = primitive_verdict(group)
        else:
            warnings.append(
                "primitive input with neither a regular cyclic nor a regular "
                "dihedral subgroup; no verdict attempted"
            )
    elif witness is not None:
        for system in minimal_block_systems(group):
            evidence = classify_case(group, witness, system, graphs, cap_order)
            lemmas = lemma_suite(group, witness, system, minimal=True)
            trich = None
            note = None
            connected = next((g for g in graphs if g.is_connected()), None)
            if connected is None:
                note = "no connected orbital graph; trichotomy skipped"
            else:
                trich = kernel_trichotomy(group, system, connected)
                trich = dict(trich)
                trich["graph_base_pair"] = [
                    connected.base_pair[0] + 1,
                    connected.base_pair[1] + 1,
                ]
                if "quotient_arcs" in trich:
                    trich["quotient_arcs"] = [
                        [u + 1, v + 1] for u, v in trich["quotient_arcs"]
                    ]
            bi = None
            if system.num_blocks == 2:
                bi = biprimitive_report(group, witness, system, graphs, cap_order)
            systems.append(SystemAnalysis(evidence, lemmas, trich, note, bi))
    else:
        warnings.append(
            f"imprimitive {gclass.verdict}; case analysis needs a regular "
            "dihedral subgroup and was skipped"
        )

    orbitals: list[OrbitalSummary] = []
    undirected_violations: list[list[int]] = []
    min_systems = [s.evidence.system for s in systems]
    witness_sub = witness.subgroup() if witness is not None else None
    for graph in graphs:
        connected = graph.is_connected()
        self_paired = graph.is_self_paired()
        lex_of = None
        for system in min_systems:
            if lex_blowup_quotient(graph, system) is not None:
                lex_of = system.one_based()
                break
        parts = complete_bipartite_parts(graph)
        certs = None
        if not connected:
            certs = [
                {
                    "component": [x + 1 for x in c.component],
                    "cyclic_element": format_perm(c.element) if c.element else None,
                    "ok": c.ok,
                }
                for c in circulant_components_check(
                    graph, group, witness_sub, cap_order
                )
            ]
        if witness is not None and connected and not self_paired:
            undirected_violations.append(
                [graph.base_pair[0] + 1, graph.base_pair[1] + 1]
            )
        orbitals.append(
            OrbitalSummary(
                base_pair=graph.base_pair,
                arc_count=graph.num_arcs,
                connected=connected,
                self_paired=self_paired,
                lex_blowup_of=lex_of,
                complete_bipartite=(
                    (len(parts[0]), len(parts[1])) if parts is not None else None
                ),
                circulant_components=certs,
            )
        )
    undirectedness = None
    if witness is not None:
        undirectedness = {
            "checked": True,
            "violations": undirected_violations,
        }
        if undirected_violations:
            warnings.append(
                "connected orbital graph that is not self-paired: "
                + ", ".join(map(str, undirected_violations))
            )
    for s in systems:
        for w in s.evidence.warnings:
            warnings.append(
                f"system {s.evidence.system.one_based()}: {w}"
            )

    return AnalysisReport(
        input_id=input_id,
        degree=group.degree,
        order=group.order(),
        group_class=gclass,
        primitive=primitive,
        primitivity=primitivity,
        systems=systems,
        orbitals=orbitals,
        undirectedness=undirectedness,
        warnings=warnings,
    )
