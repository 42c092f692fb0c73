"""Verifiers for the degree-divisibility statements: height-zero
matchings across the Brauer correspondence, block dimension
divisibility, the Glauberman lift, Sylow-normalizer index divisibility,
regular-character covering, Fong's block lemma, Fong-Reynolds
induction, and the exploratory decomposition-number compatibility
search.

Every verifier returns plain dict records with stable key order so
reports serialize byte-identically for a fixed seed.  Pass verdicts,
wherever they assert a theorem, are backed by an explicit certificate
in the record (a matching, an integer quotient, or an equality
witness).
"""

import random

from .arith import p_part, vp
from .blocks import (
    block_data,
    brauer_correspondent,
    covered_blocks,
    p_regular_classes,
)
from .chartab import (
    character_table,
    constituents,
    induce,
    inertia_group,
    inner_product,
    irr_over,
    restrict,
)
from .cyclotomic import rational
from .errors import DomainError, InternalCheckError
from .matching import divisibility_matching
from .modular import modular_data
from .permgroup import (
    PermutationGroup,
    are_conjugate_subgroups,
    centralizer_of_group,
    conjugate_subgroup,
    intersection,
    is_normal_in,
    is_p_solvable,
    normal_subgroups,
    normalizer,
    p_core,
    p_prime_core,
    sylow_subgroup,
)

MATCHING_PAIR_CAP = 10**6
NAVARRO_TARGET = 200
NAVARRO_MAX_DRAWS = 4000


def _try_modular(G, p, conductor):
    try:
        return modular_data(G, p, conductor)
    except DomainError:
        return None


def _matching_fields(prefix, left, right):
    outcome = divisibility_matching(left, right)
    fields = {
        f"{prefix}_left": list(left),
        f"{prefix}_right": list(right),
    }
    if outcome.ok:
        fields[f"{prefix}_matching"] = [
            [left[i], right[j]] for i, j in outcome.pairs
        ]
    else:
        fields[f"{prefix}_violator"] = {
            "side": outcome.violator_side,
            "degrees": list(outcome.violator),
            "reason": outcome.reason,
        }
    return outcome.ok, fields


def block_section(G, p):
    """Per-block records covering the height-zero matchings on both
    character levels and the dimension divisibilities."""
    bs = block_data(G, p)
    md_big = _try_modular(G, p, None)
    records = []
    all_matched = True
    all_dims_divide = True
    for B in bs.blocks:
        b = brauer_correspondent(B)
        H = b.blockset.group
        md_small = _try_modular(H, p, bs.rmap.e)
        rec = {
            "id": B.index,
            "degrees": list(B.degrees()),
            "defect": B.defect,
            "defect_group_order": p**B.defect,
            "correspondent": {
                "group_order": H.order(),
                "id": b.index,
                "degrees": list(b.degrees()),
                "defect": b.defect,
            },
        }
        ord_ok, ord_fields = _matching_fields(
            "irr0", list(B.height_zero_degrees()), list(b.height_zero_degrees())
        )
        rec.update(ord_fields)
        if md_big is None or md_small is None:
            rec["ibr0_left"] = None
            rec["ibr0_right"] = None
            rec["ibr0_unavailable"] = "no Brauer character data"
            brauer_ok = False
        else:
            brauer_ok, brauer_fields = _matching_fields(
                "ibr0",
                list(md_big.height_zero_brauer_degrees(B)),
                list(md_small.height_zero_brauer_degrees(b)),
            )
            rec.update(brauer_fields)
        rec["dim_B"] = B.dim
        rec["dim_b"] = b.dim
        rec["dim_divides"] = B.dim % b.dim == 0
        rec["dim_p_part_divides"] = (
            p_part(B.dim, p) % p_part(b.dim, p) == 0
        )
        records.append(rec)
        all_matched = all_matched and ord_ok and brauer_ok
        all_dims_divide = all_dims_divide and rec["dim_divides"]
        if not rec["dim_p_part_divides"]:
            all_dims_divide = False
    return records, all_matched, all_dims_divide


# --- Glauberman correspondence and its lift -------------------------


def glauberman_correspondent(L, Q, theta, p):
    """The unique constituent of theta restricted to the fixed-point
    centralizer whose multiplicity is not divisible by p."""
    if Q.order() != p ** vp(Q.order(), p):
        raise DomainError("the acting group is not a p-group")
    if theta.group != L:
        raise DomainError("character does not live on the acted-on group")
    from math import gcd

    if gcd(L.order(), Q.order()) != 1:
        raise DomainError("the action is not coprime")
    for q in Q.generators:
        if theta.conjugate_by(q) != theta:
            raise DomainError("character is not invariant under the action")
    C = centralizer_of_group(L, Q)
    pieces = constituents(restrict(theta, C))
    survivors = [xi for xi, m in pieces if m % p != 0]
    if len(survivors) != 1:
        raise InternalCheckError(
            f"expected one constituent of multiplicity prime to {p},"
            f" found {len(survivors)}"
        )
    f = survivors[0]
    if theta.degree() % f.degree():
        raise InternalCheckError(
            "correspondent degree does not divide the original degree"
        )
    return f


def coprime_setup(G, p):
    """The canonical coprime pair for this group and prime: the odd
    core acted on by a Sylow p-subgroup when their product is normal,
    by the p-core otherwise."""
    L = p_prime_core(G, p)
    S = sylow_subgroup(G, p)
    product = PermutationGroup(G.degree, L.generators + S.generators)
    if is_normal_in(product, G):
        return L, S
    return L, p_core(G, p)


def _is_invariant(G, theta):
    return all(theta.conjugate_by(g) == theta for g in G.generators)


def _brauer_indices_over(md, K, theta):
    """Positions of the Brauer characters whose restriction to the
    p'-subgroup K contains theta."""
    G = md.group
    regular = p_regular_classes(G, p=md.prime)
    position = {k: i for i, k in enumerate(regular)}
    out = []
    for j, phi in enumerate(md.brauer_characters):
        total = rational(0)
        for c in K.conjugacy_classes():
            value = phi.values[position[G.class_index(c.representative)]]
            total = total + value * theta.values[c.index].conj() * c.size
        m = total / K.order()
        if not m.is_rational() or m.rational_value().denominator != 1:
            raise InternalCheckError(
                "Brauer restriction multiplicity is not an integer"
            )
        if m.integer_value() < 0:
            raise InternalCheckError(
                "Brauer restriction multiplicity is negative"
            )
        if not m.is_zero():
            out.append(j)
    return tuple(out)


def verify_glauberman_lift(G, L, Q, theta, p):
    """One lift instance: character sets over theta and over its
    correspondent, their cardinalities, and divisibility matchings on
    the full sets and on the p'-degree subsets."""
    if L.order() % p == 0:
        raise DomainError("the normal subgroup is not a p'-group")
    if not is_normal_in(L, G):
        raise DomainError("the acted-on subgroup is not normal")
    product = PermutationGroup(G.degree, L.generators + Q.generators)
    if not is_normal_in(product, G):
        raise DomainError("the product subgroup is not normal")
    rec = {
        "l_order": L.order(),
        "q_order": Q.order(),
        "theta_degree": theta.degree(),
        "hypothesis_met": True,
    }
    if not _is_invariant(G, theta):
        rec["hypothesis_met"] = False
        rec["reason"] = "character is not invariant"
        rec["verdict"] = "hypothesis not met"
        return rec
    f = glauberman_correspondent(L, Q, theta, p)
    H = normalizer(G, Q)
    C = f.group
    rec["correspondent_degree"] = f.degree()
    left = [chi.degree() for chi in irr_over(G, L, theta)]
    right = [chi.degree() for chi in irr_over(H, C, f)]
    rec["counts_equal"] = len(left) == len(right)
    ok_full, fields = _matching_fields("ordinary", left, right)
    rec.update(fields)
    left_reg = [d for d in left if d % p]
    right_reg = [d for d in right if d % p]
    ok_reg, fields = _matching_fields("prime_regular", left_reg, right_reg)
    rec.update(fields)
    ok_brauer = True
    if is_p_solvable(G, p):
        md_big = modular_data(G, p, G.exponent())
        md_small = modular_data(H, p, G.exponent())
        bleft = [
            md_big.brauer_characters[j].degree()
            for j in _brauer_indices_over(md_big, L, theta)
        ]
        bright = [
            md_small.brauer_characters[j].degree()
            for j in _brauer_indices_over(md_small, C, f)
        ]
        rec["brauer_counts_equal"] = len(bleft) == len(bright)
        ok_brauer, fields = _matching_fields("brauer", bleft, bright)
        rec.update(fields)
        ok_brauer = ok_brauer and rec["brauer_counts_equal"]
    passed = rec["counts_equal"] and ok_full and ok_reg and ok_brauer
    rec["verdict"] = "pass" if passed else "fail"
    return rec


def glauberman_instances(G, p, name):
    L, Q = coprime_setup(G, p)
    records = []
    for theta in character_table(L).irreducibles:
        rec = {"group": name, "prime": p}
        rec.update(verify_glauberman_lift(G, L, Q, theta, p))
        records.append(rec)
    return records


# --- Sylow normalizer index divisibility ----------------------------


def verify_sylow_normalizer_divisibility(G, p, U, P):
    """Index of the intersection's normalizer in U against the index
    of the p-subgroup's normalizer in G."""
    I = intersection(P, U)
    reasons = []
    if not is_p_solvable(G, p):
        reasons.append("group is not p-solvable")
    if I.order() != p_part(U.order(), p):
        reasons.append("intersection is not a Sylow p-subgroup of U")
    if P.order() != p_part(G.order(), p):
        reasons.append("P is not a Sylow p-subgroup of G")
    index_sub = U.order() // normalizer(U, I).order()
    index_big = G.order() // normalizer(G, P).order()
    divides = index_big % index_sub == 0
    met = not reasons
    return {
        "subgroup_order": U.order(),
        "p_subgroup_order": P.order(),
        "hypothesis_met": met,
        "reasons": reasons,
        "index_in_subgroup": index_sub,
        "index_in_group": index_big,
        "divides": divides,
        "verdict": (
            "pass" if met and divides
            else "fail" if met
            else "hypothesis not met"
        ),
    }


def navarro_instances(G, p, name, seed, fixed):
    """Sampled subgroup/Sylow pairs plus any fixed instances from the
    catalog.  Sampling is skipped when the group is not p-solvable."""
    records = []
    if is_p_solvable(G, p):
        rng = random.Random(f"{seed}:{name}:{p}:navarro")
        elements = sorted(G.element_set())
        base_sylow = sylow_subgroup(G, p)
        met = 0
        drawn = 0
        violations = 0
        while met < NAVARRO_TARGET and drawn < NAVARRO_MAX_DRAWS:
            drawn += 1
            gens = tuple(
                rng.choice(elements) for _ in range(rng.randrange(1, 4))
            )
            U = PermutationGroup(G.degree, gens)
            P = conjugate_subgroup(base_sylow, rng.choice(elements))
            I = intersection(P, U)
            if I.order() != p_part(U.order(), p):
                continue
            met += 1
            index_sub = U.order() // normalizer(U, I).order()
            index_big = G.order() // normalizer(G, P).order()
            if index_big % index_sub:
                violations += 1
        records.append(
            {
                "group": name,
                "prime": p,
                "kind": "sampled",
                "pairs_drawn": drawn,
                "pairs_hypothesis_met": met,
                "violations": violations,
                "verdict": "pass" if violations == 0 else "fail",
            }
        )
    for u_gens, p_gens in fixed:
        U = PermutationGroup(G.degree, [tuple(g) for g in u_gens])
        P = PermutationGroup(G.degree, [tuple(g) for g in p_gens])
        rec = {"group": name, "prime": p, "kind": "fixed"}
        rec.update(verify_sylow_normalizer_divisibility(G, p, U, P))
        records.append(rec)
    return records


# --- regular character covering -------------------------------------


def _block_regular_part(block):
    chars = block.characters()
    rho = chars[0] * chars[0].degree()
    for chi in chars[1:]:
        rho = rho + chi * chi.degree()
    return rho


def verify_regular_covering(G, N, p):
    """Per covered orbit: the restriction of the block's weighted
    regular part against the orbit sum on the normal subgroup."""
    bs = block_data(G, p)
    records = []
    for B in bs.blocks:
        covered = covered_blocks(B, N)
        orbit_sum = _block_regular_part(covered[0])
        for b in covered[1:]:
            orbit_sum = orbit_sum + _block_regular_part(b)
        restricted = restrict(_block_regular_part(B), N)
        total = orbit_sum.degree()
        n, remainder = divmod(B.dim, total)
        holds = remainder == 0 and restricted == orbit_sum * n
        dim_small = covered[0].dim
        rec = {
            "normal_order": N.order(),
            "block": B.index,
            "covered_blocks": len(covered),
            "n": n if holds else None,
            "holds": holds,
            "dim_divides": B.dim % dim_small == 0,
            "verdict": "pass" if holds and B.dim % dim_small == 0 else "fail",
        }
        records.append(rec)
    return records


def regular_covering_instances(G, p, name):
    records = []
    for N in sorted(
        normal_subgroups(G), key=lambda H: (H.order(), sorted(H.element_set()))
    ):
        for rec in verify_regular_covering(G, N, p):
            full = {"group": name, "prime": p}
            full.update(rec)
            records.append(full)
    return records


# --- Fong's block lemma ----------------------------------------------


def fong_block_instances(G, p, name):
    """For each invariant character of the p'-core: the characters
    over it must be exactly one block, with Sylow defect.

    The lemma presupposes p-solvability, so other groups contribute
    no instances.
    """
    if not is_p_solvable(G, p):
        return []
    K = p_prime_core(G, p)
    bs = block_data(G, p)
    table = bs.table
    sylow_defect = vp(G.order(), p)
    records = []
    for theta in character_table(K).irreducibles:
        if not _is_invariant(G, theta):
            continue
        over = {
            i
            for i, chi in enumerate(table.irreducibles)
            if not inner_product(restrict(chi, K), theta).is_zero()
        }
        owner = next(
            (b for b in bs.blocks if set(b.char_indices) == over), None
        )
        is_one_block = owner is not None
        has_sylow_defect = owner is not None and owner.defect == sylow_defect
        records.append(
            {
                "group": name,
                "prime": p,
                "theta_degree": theta.degree(),
                "characters_over": len(over),
                "is_one_block": is_one_block,
                "sylow_defect": has_sylow_defect,
                "verdict": (
                    "pass" if is_one_block and has_sylow_defect else "fail"
                ),
            }
        )
    return records


# --- Fong-Reynolds ---------------------------------------------------


def _fong_reynolds_data(B, theta):
    G = B.blockset.group
    p = B.blockset.prime
    L = theta.group
    T = inertia_group(G, L, theta)
    table = B.blockset.table
    over_theta = irr_over(T, L, theta)
    inductions = []
    for psi in over_theta:
        ind = induce(psi, G)
        try:
            idx = table.index_of(ind)
        except DomainError:
            idx = None
        inductions.append((psi, idx))
    members = [
        (psi, idx)
        for psi, idx in inductions
        if idx is not None and idx in B.char_indices
    ]
    return T, members


def verify_fong_reynolds(B, theta):
    """Induction from the inertia group of a good character must hit
    the block bijectively, preserving heights and the defect group."""
    G = B.blockset.group
    p = B.blockset.prime
    T, members = _fong_reynolds_data(B, theta)
    induced_indices = sorted(idx for _, idx in members)
    bijective = induced_indices == sorted(B.char_indices)
    local = block_data(T, p, B.blockset.rmap.e)
    owners = {local.block_of(local.table.index_of(psi)) for psi, _ in members}
    single_block = len(owners) == 1
    heights_ok = False
    defect_ok = False
    if single_block and bijective:
        B_theta = owners.pop()
        height_in_T = dict(
            zip(B_theta.char_indices, B_theta.heights)
        )
        height_in_G = dict(zip(B.char_indices, B.heights))
        heights_ok = all(
            height_in_T[local.table.index_of(psi)] == height_in_G[idx]
            for psi, idx in members
        )
        D_local = B_theta.defect_group()
        D = B.defect_group()
        defect_ok = D_local.order() == D.order() and (
            D.order() == 1 or are_conjugate_subgroups(G, D_local, D)
        )
    verdict = bijective and single_block and heights_ok and defect_ok
    return {
        "theta_degree": theta.degree(),
        "inertia_index": G.order() // T.order(),
        "characters": len(B.char_indices),
        "bijective": bijective,
        "single_block": single_block,
        "heights_preserved": heights_ok,
        "defect_preserved": defect_ok,
        "verdict": "pass" if verdict else "fail",
    }


def find_good_character(B, L):
    """A constituent of the block's restriction to the normal
    p'-subgroup over which the whole block lives and whose
    Fong-Reynolds block keeps the defect group."""
    G = B.blockset.group
    p = B.blockset.prime
    if L.order() % p == 0 or not is_normal_in(L, G):
        raise DomainError("need a normal p'-subgroup")
    local_table = character_table(L)
    candidate_indices = []
    for chi in B.characters():
        for theta, _ in constituents(restrict(chi, L)):
            idx = local_table.index_of(theta)
            if idx not in candidate_indices:
                candidate_indices.append(idx)
    block_set = set(B.char_indices)
    table = B.blockset.table
    for idx in sorted(candidate_indices):
        theta = local_table.irreducibles[idx]
        over = {
            i
            for i, chi in enumerate(table.irreducibles)
            if not inner_product(restrict(chi, L), theta).is_zero()
        }
        if not block_set <= over:
            continue
        outcome = verify_fong_reynolds(B, theta)
        if outcome["verdict"] == "pass":
            return theta
    raise InternalCheckError("no good character over the p'-core")


def fong_reynolds_instances(G, p, name):
    K = p_prime_core(G, p)
    bs = block_data(G, p)
    records = []
    for B in bs.blocks:
        theta = find_good_character(B, K)
        rec = {"group": name, "prime": p, "block": B.index}
        rec.update(verify_fong_reynolds(B, theta))
        records.append(rec)
    return records


# --- Question 3.5 exploration ----------------------------------------


def _perfect_matchings(left, right, cap):
    """All assignments of distinct right positions to left positions
    with the divisibility constraint, capped."""
    n = len(left)
    out = []

    def extend(i, used, acc):
        if len(out) > cap:
            return
        if i == n:
            out.append(tuple(acc))
            return
        for j in range(n):
            if j not in used and left[i] % right[j] == 0:
                used.add(j)
                acc.append(j)
                extend(i + 1, used, acc)
                acc.pop()
                used.discard(j)

    extend(0, set(), [])
    return out


def question35_instances(G, p, name):
    """Search for a pair of height-zero matchings compatible with the
    decomposition numbers.  Exploratory: results are data points."""
    if not is_p_solvable(G, p):
        return [
            {
                "group": name,
                "prime": p,
                "result": "skipped",
                "reason": "group is not p-solvable",
            }
        ]
    bs = block_data(G, p)
    md_big = modular_data(G, p)
    records = []
    for B in bs.blocks:
        b = brauer_correspondent(B)
        H = b.blockset.group
        md_small = modular_data(H, p, bs.rmap.e)
        rec = {"group": name, "prime": p, "block": B.index}
        left0 = B.height_zero
        right0 = b.height_zero
        lbr = md_big.height_zero_brauer(B)
        rbr = md_small.height_zero_brauer(b)
        if len(left0) != len(right0) or len(lbr) != len(rbr):
            rec["result"] = "none"
            rec["reason"] = "height-zero sets have different sizes"
            records.append(rec)
            continue
        ldeg = [bs.table.irreducibles[i].degree() for i in left0]
        rdeg = [b.blockset.table.irreducibles[i].degree() for i in right0]
        lbdeg = [md_big.brauer_characters[j].degree() for j in lbr]
        rbdeg = [md_small.brauer_characters[j].degree() for j in rbr]
        omegas = _perfect_matchings(ldeg, rdeg, MATCHING_PAIR_CAP)
        psis = _perfect_matchings(lbdeg, rbdeg, MATCHING_PAIR_CAP)
        pairs = len(omegas) * len(psis)
        rec["ordinary_matchings"] = len(omegas)
        rec["brauer_matchings"] = len(psis)
        if pairs > MATCHING_PAIR_CAP:
            rec["result"] = "inconclusive"
            rec["reason"] = "search space exceeds the pair cap"
            records.append(rec)
            continue
        witness = None
        for omega in omegas:
            for psi in psis:
                if _compatible(
                    md_big, md_small, left0, right0, lbr, rbr, omega, psi
                ):
                    witness = (omega, psi)
                    break
            if witness:
                break
        if witness:
            omega, psi = witness
            rec["result"] = "found"
            rec["ordinary_witness"] = [
                [ldeg[i], rdeg[omega[i]]] for i in range(len(ldeg))
            ]
            rec["brauer_witness"] = [
                [lbdeg[i], rbdeg[psi[i]]] for i in range(len(lbdeg))
            ]
        else:
            rec["result"] = "none"
        records.append(rec)
    return records


def _compatible(md_big, md_small, left0, right0, lbr, rbr, omega, psi):
    for a, i in enumerate(left0):
        for c, j in enumerate(lbr):
            big = md_big.decomposition[i][j]
            small = md_small.decomposition[right0[omega[a]]][rbr[psi[c]]]
            if big != small:
                return False
    return True
