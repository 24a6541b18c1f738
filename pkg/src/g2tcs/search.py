"""Enumeration drivers that discover admissible matchings over the catalog.

Two closed-form searches cover rank-1 x rank-1 gluings (where the cross
term is determined up to sign by the generator squares), and a brute-force
driver enumerates bounded integer cross-blocks for higher ranks.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from .catalog import BuildingBlock, Catalog
from .configuration import (
    COS_SQUARED,
    Configuration,
    ConfigurationError,
    d_theta,
    feasibility_cone_check,
    is_pure_angle,
    make_configuration,
    parse_theta,
    rank1_pushout,
    validate_configuration,
)
from .exact import RationalMatrix
from .invariants import InvariantReport, UnsupportedAngle, full_report

__all__ = [
    "MatchCandidate",
    "rank1_pi4_search",
    "rank1_pi6_search",
    "rank1_candidate_count",
    "cross_term_search",
]


@dataclass(frozen=True)
class MatchCandidate:
    """One admissible matching: blocks, angle, pushout and its invariants."""

    plus_id: str
    minus_id: str
    theta: Fraction
    pushout: Tuple[Tuple[int, ...], ...]
    rank1_decomposition: Optional[Tuple[int, int, int]]
    report: InvariantReport


def _involution_rank1(catalog: Catalog) -> List[BuildingBlock]:
    return [b for b in catalog.blocks
            if b.kind == "involution" and b.rank == 1]


def _ordinary_role_rank1(catalog: Catalog) -> List[BuildingBlock]:
    """Rank-1 blocks usable on the untwisted side of a gluing."""
    return [b for b in catalog.blocks if b.rank == 1
            and (b.kind == "ordinary" or b.ordinary_ok)]


def _candidate(plus: BuildingBlock, minus: BuildingBlock,
               theta_text: str) -> Optional[MatchCandidate]:
    """Build the rank-1 pushout match for one ordered pair, if it exists."""
    n_plus = plus.N.gram[0][0]
    n_minus = minus.N.gram[0][0]
    push = rank1_pushout(n_plus, n_minus, theta_text)
    if push is None:
        return None
    cfg = make_configuration(plus, minus, theta_text,
                             [list(r) for r in push.gram])
    report = full_report(cfg)
    decomposition = None
    if push.m is not None:
        decomposition = (push.m, push.q_plus, push.q_minus)
    return MatchCandidate(plus_id=plus.id, minus_id=minus.id,
                          theta=report.theta, pushout=push.gram,
                          rank1_decomposition=decomposition, report=report)


def rank1_candidate_count(catalog: Catalog, theta) -> int:
    """Number of ordered rank-1 block pairs scanned at the given angle."""
    if isinstance(theta, str):
        theta, _ = parse_theta(theta)
    theta = abs(Fraction(theta))
    plus = _involution_rank1(catalog)
    if theta == Fraction(1, 6):
        return len(plus) * len(plus)
    return len(plus) * len(_ordinary_role_rank1(catalog))


def rank1_pi4_search(catalog: Catalog) -> List[MatchCandidate]:
    """All quarter-turn matchings of rank-1 blocks in the catalog.

    Scans involution x ordinary-role rank-1 pairs; a pair matches exactly
    when 2 n+ n- is a perfect square. Output is sorted by
    (b3, plus_id, minus_id).
    """
    out = []
    for plus in _involution_rank1(catalog):
        for minus in _ordinary_role_rank1(catalog):
            cand = _candidate(plus, minus, "1/4pi")
            if cand is not None:
                out.append(cand)
    out.sort(key=lambda c: (c.report.b3, c.plus_id, c.minus_id))
    return out


def rank1_pi6_search(catalog: Catalog) -> List[MatchCandidate]:
    """All sixth-turn matchings of ordered rank-1 involution pairs.

    A pair matches exactly when 3 n+ n- is a perfect square (equivalently
    3 n+ n- / 4 with both squares even). Output is sorted by
    (b3, plus_id, minus_id).
    """
    out = []
    inv = _involution_rank1(catalog)
    for plus in inv:
        for minus in inv:
            cand = _candidate(plus, minus, "1/6pi")
            if cand is not None:
                out.append(cand)
    out.sort(key=lambda c: (c.report.b3, c.plus_id, c.minus_id))
    return out


def _gram_permutations(gram: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Basis permutations preserving a Gram matrix (hence the ample cone)."""
    n = len(gram)
    keep = []
    for perm in permutations(range(n)):
        if all(gram[perm[i]][perm[j]] == gram[i][j]
               for i in range(n) for j in range(n)):
            keep.append(perm)
    return keep


def _canonical_gram(rows: Sequence[Sequence[int]], rho_plus: int,
                    perms_plus: Sequence[Tuple[int, ...]],
                    perms_minus: Sequence[Tuple[int, ...]]):
    """Least relabelling of a pushout Gram under block-wise permutations."""
    n = len(rows)
    best = None
    for pp in perms_plus:
        for pm in perms_minus:
            order = list(pp) + [rho_plus + j for j in pm]
            key = tuple(tuple(rows[order[i]][order[j]] for j in range(n))
                        for i in range(n))
            if best is None or key < best:
                best = key
    return best


def _cross_blocks(rho_plus: int, rho_minus: int,
                  bound: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    cells = rho_plus * rho_minus
    values = range(-bound, bound + 1)
    for flat in product(values, repeat=cells):
        yield tuple(flat[i * rho_minus:(i + 1) * rho_minus]
                    for i in range(rho_plus))


def cross_term_search(plus: BuildingBlock, minus: BuildingBlock, theta,
                      bound: int, pure: bool = False) -> List[MatchCandidate]:
    """Enumerate pushouts with integer cross-blocks of bounded entries.

    Every cross-block with entries in [-bound, bound] is screened: the
    assembled pushout must pass structural validation, the gluing angle
    must occur in the configuration's angle spectrum (or the configuration
    must have pure angle when the flag is set), and the ample-cone
    compatibility system must be feasible. Equal Grams that differ only by
    basis permutations preserving both ample cones are deduplicated.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if plus.rank > 3 or minus.rank > 3:
        raise ValueError("cross-term search supports blocks of rank <= 3")
    if isinstance(theta, str):
        theta_text = theta
    else:
        f = Fraction(theta)
        sign = "-" if f < 0 else ""
        theta_text = f"{sign}{abs(f).numerator}/{abs(f).denominator}pi"
    theta_frac, _ = parse_theta(theta_text)
    cos2 = COS_SQUARED[theta_frac]
    rp, rm = plus.rank, minus.rank
    gp = RationalMatrix(plus.N.gram)
    gm = RationalMatrix(minus.N.gram)
    gp_inv = gp.inverse()
    gm_inv = gm.inverse()
    perms_plus = _gram_permutations(plus.N.gram)
    perms_minus = _gram_permutations(minus.N.gram)
    target = RationalMatrix.identity(rp).scaled(cos2)
    seen = set()
    out: List[MatchCandidate] = []
    for cross in _cross_blocks(rp, rm, bound):
        C = RationalMatrix(cross)
        m_plus = gp_inv * C * gm_inv * C.transpose()
        # Cheap screen: theta must be an eigen-angle of the composition.
        if pure:
            if m_plus != target:
                continue
        else:
            if (m_plus - target).det() != 0:
                continue
        rows = [list(plus.N.gram[i]) + list(cross[i]) for i in range(rp)]
        rows += [[cross[i][j] for i in range(rp)] + list(minus.N.gram[j])
                 for j in range(rm)]
        cfg = make_configuration(plus, minus, theta_text, rows)
        if not validate_configuration(cfg).ok:
            continue
        if not pure and d_theta(cfg) < 1:
            continue
        feasible, _witness = feasibility_cone_check(cfg)
        if not feasible:
            continue
        key = _canonical_gram(rows, rp, perms_plus, perms_minus)
        if key in seen:
            continue
        try:
            report = full_report(cfg)
        except (ConfigurationError, UnsupportedAngle):
            continue
        seen.add(key)
        out.append(MatchCandidate(
            plus_id=plus.id, minus_id=minus.id, theta=report.theta,
            pushout=tuple(tuple(r) for r in rows),
            rank1_decomposition=None, report=report))
    return out
