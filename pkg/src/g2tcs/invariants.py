"""Topological invariants of a glued 7-manifold from its configuration.

Implements the invariant pipeline: Betti numbers, the boundary
presentation of H^4-torsion with its linking form (general route and the
pure-angle shortcut), divisibility of the spin characteristic class
p(M), the nu_bar invariant from the configuration angles, and the
comparison decision procedure for 2-connected results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .configuration import (
    AngleSpectrum,
    Configuration,
    configuration_angles,
    d_theta,
    is_pure_angle,
    validate_configuration,
)
from .exact import RationalMatrix, lattice_intersection
from .lattices import (
    DiscriminantForm,
    FiniteAbelianGroup,
    GramLattice,
    cokernel_presentation,
    discriminant_form,
    even_dual_kernel,
    quotient_by_2torsion,
    radical_and_quotient,
    saturated_sum,
)

TORSION_ANGLES = (Fraction(1, 2), Fraction(3, 4))  # cos^2 of pi/4, pi/6


class UnsupportedAngle(ValueError):
    """Raised when torsion computation is requested for an angle outside
    the implemented pi/4 and pi/6 families."""


def _require_torsion_angle(cfg: Configuration) -> Fraction:
    c2 = cfg.angle.cos_squared
    if c2 not in TORSION_ANGLES:
        raise UnsupportedAngle(
            f"torsion computation supports only angles with cos^2 in "
            f"{{1/2, 3/4}}; got theta = {cfg.angle.describe()}")
    return c2


# ----------------------------------------------------------------- betti

def betti(cfg: Configuration) -> Tuple[int, int]:
    """(b2, b3) of the glued 7-manifold.

    b2 is the rank of the radical of the pushout presentation (the
    intersection of the two polarising lattices); b3 combines the block
    contributions, with a side entering through b3+ whenever it is used
    in its involution role.
    """
    if cfg.pi1() != "simply_connected":
        raise ValueError(
            f"Betti formula applies to simply connected gluings; this "
            f"configuration has pi1 class {cfg.pi1()!r}")
    _radical, reduced = radical_and_quotient(cfg.pushout)
    b2 = cfg.pushout.rank - reduced.rank

    def side_b3(block, b_flag: int) -> int:
        involution_role = (cfg.angle.family == "hexagonal" or b_flag == 1)
        return block.b3plus if involution_role else block.b3

    b3 = (23 - cfg.rho_plus - cfg.rho_minus + b2
          + side_b3(cfg.plus, cfg.angle.b_plus)
          + side_b3(cfg.minus, cfg.angle.b_minus)
          + d_theta(cfg))
    return b2, b3


# -------------------------------------------------------------- boundary

@dataclass(frozen=True)
class BoundaryData:
    """The boundary map presenting the torsion of H^4.

    matrix columns are indexed by the domain generators (a basis of the
    even-dual sublattice of N+ followed by a basis of N- or its
    even-dual sublattice); rows by the dual bases of N+* and N-*.
    domain_embedding expresses domain vectors in plain N+ (+) N-
    coordinates, which is what the linking pairing contracts against.
    """

    matrix: Tuple[Tuple[int, ...], ...]
    p_class: Tuple[int, ...]
    domain_labels: Tuple[str, ...]
    codomain_labels: Tuple[str, ...]
    domain_embedding: Tuple[Tuple[int, ...], ...]


def boundary_data(cfg: Configuration) -> BoundaryData:
    """Boundary presentation of the torsion of H^4 with the p(M) class.

    For theta = pi/4 the domain is the even-dual sublattice of N+ plus
    all of N-, and p(M) maps to (c2bar+/2, -c2bar-); for pi/6 both
    sides contribute their even-dual sublattices and p(M) maps to
    (c2bar+/2, -c2bar-/2).
    """
    c2 = _require_torsion_angle(cfg)
    rp, rm = cfg.rho_plus, cfg.rho_minus
    if cfg.plus.kind != "involution":
        raise ValueError("the plus block must carry an involution")
    if c2 == Fraction(3, 4) and cfg.minus.kind != "involution":
        raise ValueError("hexagonal gluing needs involution blocks on "
                         "both sides")
    Gp = cfg.plus.N.matrix()
    Gm = cfg.minus.N.matrix()
    C = cfg.cross_block()
    Bp = even_dual_kernel(cfg.plus.N)  # rows: domain basis in N+ coords
    if c2 == Fraction(1, 2):
        minus_rows = [[int(i == j) for j in range(rm)] for i in range(rm)]
        minus_scale = Fraction(1)
        p_minus = [-v for v in cfg.minus.c2bar]
    else:
        minus_rows = even_dual_kernel(cfg.minus.N)
        minus_scale = Fraction(3, 2)
        p_minus = [-v // 2 for v in cfg.minus.c2bar]
    cols: List[List[Fraction]] = []
    embed: List[List[int]] = []
    labels: List[str] = []
    for j, x in enumerate(Bp):
        top = [v / 2 for v in Gp.mul_vector(x)]
        bottom = C.transpose().mul_vector(x)
        cols.append(top + bottom)
        embed.append(list(x) + [0] * rm)
        labels.append(f"x{j + 1}")
    for j, y in enumerate(minus_rows):
        top = C.mul_vector(y)
        bottom = [v * minus_scale for v in Gm.mul_vector(y)]
        cols.append(top + bottom)
        embed.append([0] * rp + list(y))
        labels.append(f"y{j + 1}")
    matrix_rows: List[List[int]] = []
    for i in range(rp + rm):
        row = []
        for col in cols:
            v = col[i]
            if v.denominator != 1:
                raise ArithmeticError(
                    "boundary matrix entry is not integral; invariant "
                    "violation")
            row.append(int(v))
        matrix_rows.append(row)
    p_class = tuple([v // 2 for v in cfg.plus.c2bar] + list(p_minus))
    codomain = tuple([f"a{i + 1}*" for i in range(rp)]
                     + [f"n{i + 1}*" for i in range(rm)])
    return BoundaryData(
        matrix=tuple(tuple(r) for r in matrix_rows),
        p_class=p_class,
        domain_labels=tuple(labels),
        codomain_labels=codomain,
        domain_embedding=tuple(tuple(r) for r in embed),
    )


@dataclass(frozen=True)
class TorsionReport:
    group: FiniteAbelianGroup
    linking: Tuple[Tuple[Fraction, ...], ...]


def torsion_report(cfg: Configuration) -> TorsionReport:
    """Torsion of H^4 with its linking form, via the boundary map.

    The torsion is the torsion of the cokernel of the boundary matrix;
    the linking of two torsion generators is obtained by solving the
    minimal integer multiple of one back through the matrix and pairing
    the solution against the other.
    """
    bd = boundary_data(cfg)
    pres = cokernel_presentation([list(r) for r in bd.matrix])
    gens = pres.generator_vectors()
    E = bd.domain_embedding
    n_dom = len(E)
    pairing: List[List[Fraction]] = []
    solved = []
    for z in gens:
        m, v = pres.minimal_multiple_preimage(z)
        lattice_vec = [sum(E[k][i] * v[k] for k in range(n_dom))
                       for i in range(len(z))]
        solved.append((m, lattice_vec))
    for i, z1 in enumerate(gens):
        m, vec = solved[i]
        row = []
        for z2 in gens:
            val = Fraction(sum(a * b for a, b in zip(z2, vec)), m)
            row.append(val % 1)
        pairing.append(row)
    for i in range(len(gens)):
        for j in range(len(gens)):
            if pairing[i][j] != pairing[j][i]:
                raise ArithmeticError("linking form is not symmetric; "
                                      "invariant violation")
    group = FiniteAbelianGroup(pres.group.invariant_factors, 0)
    return TorsionReport(group, tuple(tuple(r) for r in pairing))


# ------------------------------------------------------------ pure route

@dataclass(frozen=True)
class PureTorsion:
    group: FiniteAbelianGroup
    linking: Tuple[Tuple[Fraction, ...], ...]
    d_free: int
    p_values: Tuple[int, ...]


def pure_angle_torsion(cfg: Configuration) -> PureTorsion:
    """Torsion, linking and free p-divisor via the pure-angle shortcut.

    The discriminant group of the overlattice N+ + 2 pi+ N- modulo its
    2-torsion carries the doubled discriminant pairing and equals the
    torsion of H^4; the free part of the boundary cokernel is the dual
    of pi- N+ intersect N- (pi/4) or (2/3) pi- N+ intersect N- (pi/6),
    where p(M) evaluates through the block c2bar classes.
    """
    c2 = _require_torsion_angle(cfg)
    if not is_pure_angle(cfg):
        raise ValueError("pure-angle shortcut requires a pure angle")
    rp, rm = cfg.rho_plus, cfg.rho_minus
    C = cfg.cross_block()
    pi_plus = cfg.plus.N.matrix().inverse() * C
    pi_minus = cfg.minus.N.matrix().inverse() * C.transpose()
    gens = [[Fraction(int(i == j)) for j in range(rp)] for i in range(rp)]
    for j in range(rm):
        gens.append([2 * pi_plus.rows[i][j] for i in range(rp)])
    lam = saturated_sum(cfg.plus.N, gens)
    delta = discriminant_form(GramLattice.from_rows(lam.gram))
    quotient = quotient_by_2torsion(delta)
    # Free part: (s pi- N+) intersect N-, s = 1 (pi/4) or 2/3 (pi/6).
    scale = Fraction(1) if c2 == Fraction(1, 2) else Fraction(2, 3)
    image_rows = []
    denom = 1
    for i in range(rp):
        row = [scale * pi_minus.rows[j][i] for j in range(rm)]
        for x in row:
            denom = lcm(denom, x.denominator)
        image_rows.append(row)
    int_rows = [[int(x * denom) for x in row] for row in image_rows]
    scaled_identity = [[denom * int(i == j) for j in range(rm)]
                       for i in range(rm)]
    inter = lattice_intersection(int_rows, scaled_identity)
    basis = [[x // denom for x in row] for row in inter]
    minus_factor = Fraction(1) if c2 == Fraction(1, 2) else Fraction(1, 2)
    p_values = []
    for f in basis:
        pf = pi_plus.mul_vector(f)
        val = (sum(Fraction(c) * x for c, x in zip(cfg.plus.c2bar, pf))
               + minus_factor * sum(c * x for c, x
                                    in zip(cfg.minus.c2bar, f)))
        if val.denominator != 1:
            raise ArithmeticError("p(M) evaluation is not integral; "
                                  "invariant violation")
        p_values.append(int(val))
    d_free = gcd(24, *(abs(v) for v in p_values)) if p_values else 24
    return PureTorsion(quotient.group, quotient.pairing, d_free,
                       tuple(p_values))


# -------------------------------------------------------------- p divisor

def p_divisor(cfg: Configuration) -> Tuple[int, int, bool]:
    """(d_free, d_full, clean): divisibility of p(M), gcd'd with 24.

    d_free is the greatest divisor of the image of p(M) in the free
    quotient of the boundary cokernel; d_full the greatest divisor in
    the full cokernel (torsion included); clean reports whether the two
    agree, i.e. whether p(M) can be moved entirely into the free
    summand.
    """
    bd = boundary_data(cfg)
    pres = cokernel_presentation([list(r) for r in bd.matrix])
    coords = pres.snf_coordinates(list(bd.p_class))
    free_vals = [coords[i] for i in pres.free_indices]
    d_free = gcd(24, *(abs(v) for v in free_vals)) if free_vals else 24

    def divisible_by(m: int) -> bool:
        for i in pres.torsion_indices:
            if coords[i] % gcd(m, pres.diagonal(i)) != 0:
                return False
        return all(v % m == 0 for v in free_vals)

    d_full = max(m for m in range(1, 25) if 24 % m == 0
                 and divisible_by(m))
    return d_free, d_full, d_free == d_full


# ----------------------------------------------------------------- nu_bar

def nu_bar(angles: AngleSpectrum, theta: Fraction,
           orientation: int = 1) -> int:
    """The integer refinement of the nu invariant from the angle data.

    With rho = pi - 2 theta, counts the minus-type configuration angles
    on the boundary and interior of (pi - |rho|, pi]; interval
    membership is decided by exact cosine comparison. The result
    changes sign with the orientation flag.
    """
    theta = abs(Fraction(theta))
    rho = 1 - 2 * theta  # as a fraction of pi
    if rho == 0:
        return 0
    base = -72 * rho
    if base.denominator != 1:
        raise ValueError(f"unsupported theta {theta}*pi")
    sign_rho = 1 if rho > 0 else -1
    # cos(pi - |rho|) = -cos(|rho| * pi), rational for all our angles.
    COS = {Fraction(1, 2): Fraction(0), Fraction(1, 3): Fraction(1, 2),
           Fraction(2, 3): Fraction(-1, 2)}
    cstar = -COS[abs(rho)]
    boundary = 0
    interior = 0
    for cos_a, s in angles.alpha_minus:
        if s == -1:
            continue  # each +- pair is counted once, at its + member
        if (cos_a, s) == (Fraction(-1), 0):
            boundary += 1
        elif s == 1:
            if cos_a == cstar:
                boundary += 1
            elif -1 < cos_a < cstar:
                interior += 1
    value = int(base) + 3 * sign_rho * (boundary - 1 + 2 * interior)
    return orientation * value


# -------------------------------------------------------- linking compare

def _automorphism_images(factors: Sequence[int]):
    """All automorphisms of a finite abelian group, as generator images.

    Yields tuples of image vectors (one per generator, coordinates mod
    the invariant factors). Practical for groups of small order.
    """
    k = len(factors)
    if k == 0:
        yield ()
        return
    elements = list(itertools.product(*[range(d) for d in factors]))

    def generates(images) -> bool:
        seen = {(0,) * k}
        frontier = [(0,) * k]
        while frontier:
            cur = frontier.pop()
            for img in images:
                nxt = tuple((a + b) % d for a, b, d
                            in zip(cur, img, factors))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == len(elements)

    for images in itertools.product(elements, repeat=k):
        # The map g_j -> images[j] must respect the generator orders.
        ok = True
        for j in range(k):
            for i in range(k):
                if (factors[j] * images[j][i]) % factors[i] != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok and generates(images):
            yield images


def linking_forms_equivalent(factors: Sequence[int],
                             b1: Sequence[Sequence[Fraction]],
                             b2: Sequence[Sequence[Fraction]]) -> bool:
    """Equality of two linking forms up to group automorphism.

    Both forms are given as pairing matrices of the invariant-factor
    generators of the same group.
    """
    factors = tuple(factors)
    k = len(factors)
    if k == 0:
        return True

    def pair(images, i, j) -> Fraction:
        total = Fraction(0)
        for a in range(k):
            for b in range(k):
                total += images[i][a] * images[j][b] * b2[a][b]
        return total % 1

    for images in _automorphism_images(factors):
        if all(pair(images, i, j) == (b1[i][j] % 1)
               for i in range(k) for j in range(k)):
            return True
    return False


def _negate_pairing(b: Sequence[Sequence[Fraction]]):
    return tuple(tuple((-x) % 1 for x in row) for row in b)


# ------------------------------------------------------------ full report

@dataclass(frozen=True)
class InvariantReport:
    pi1: str
    b2: int
    b3: int
    theta: Fraction
    orientation: int
    pure: bool
    torsion_supported: bool
    torsion: Optional[FiniteAbelianGroup]
    linking: Optional[Tuple[Tuple[Fraction, ...], ...]]
    d_free: Optional[int]
    d_full: Optional[int]
    p_torsion_clean: Optional[bool]
    angles: AngleSpectrum
    nu_bar: int
    nu: int

    @property
    def nu_signed(self) -> int:
        """nu in the symmetric range (-24, 24]."""
        return self.nu if self.nu <= 24 else self.nu - 48

    @property
    def torsion_order(self) -> Optional[int]:
        return self.torsion.torsion_order if self.torsion else None


def full_report(cfg: Configuration) -> InvariantReport:
    """Complete invariant suite of a configuration.

    Cross-checks the two torsion routes on pure-angle configurations and
    asserts the parity relation between nu and the Betti numbers.
    """
    v = validate_configuration(cfg)
    if not v.ok:
        raise ValueError("invalid configuration: " + "; ".join(v.problems))
    pi1 = cfg.pi1()
    if pi1 == "inadmissible":
        raise ValueError("inadmissible block/angle combination")
    if pi1 != "simply_connected":
        raise ValueError(
            f"invariant pipeline covers simply connected gluings; got "
            f"{pi1}")
    b2, b3 = betti(cfg)
    angles = configuration_angles(cfg)
    nb = nu_bar(angles, cfg.angle.theta, cfg.angle.orientation)
    pure = is_pure_angle(cfg)
    supported = cfg.angle.cos_squared in TORSION_ANGLES
    torsion = linking = d_free = d_full = clean = None
    if supported:
        tr = torsion_report(cfg)
        torsion = tr.group
        linking = tr.linking
        d_free, d_full, clean = p_divisor(cfg)
        if pure:
            shortcut = pure_angle_torsion(cfg)
            if shortcut.group.invariant_factors != \
                    torsion.invariant_factors:
                raise ArithmeticError(
                    "pure-angle shortcut disagrees with the boundary "
                    "route on the torsion group")
            if not linking_forms_equivalent(
                    torsion.invariant_factors, linking, shortcut.linking):
                raise ArithmeticError(
                    "pure-angle shortcut disagrees with the boundary "
                    "route on the linking form")
            if shortcut.d_free != d_free:
                raise ArithmeticError(
                    "pure-angle shortcut disagrees with the boundary "
                    "route on the free p-divisor")
        if cfg.angle.orientation == -1:
            linking = _negate_pairing(linking)
    nu = (nb + 24) % 48
    if (nb + 24) % 2 != (1 + b2 + b3) % 2:
        raise ArithmeticError("parity relation between nu and the Betti "
                              "numbers violated")
    return InvariantReport(
        pi1=pi1, b2=b2, b3=b3, theta=cfg.angle.theta,
        orientation=cfg.angle.orientation, pure=pure,
        torsion_supported=supported, torsion=torsion, linking=linking,
        d_free=d_free, d_full=d_full, p_torsion_clean=clean,
        angles=angles, nu_bar=nb, nu=nu,
    )


# ------------------------------------------------------------- comparison

@dataclass(frozen=True)
class Comparison:
    verdict: str  # "distinct" or "diffeo_candidate"
    caveats: Tuple[str, ...]
    orientation_reversal_match: bool
    detail: str


def compare_2connected(r1: InvariantReport,
                       r2: InvariantReport) -> Comparison:
    """Decide whether two 2-connected results are distinguishable.

    The classifying data are b3, the torsion group with its linking
    form (up to group automorphism) and the divisibility of p(M).
    When everything matches the verdict is a candidate for
    diffeomorphism, with caveats naming the invariants that the
    pipeline does not compute (quadratic refinement for 2-torsion,
    Eells-Kuiper when 8 divides the p-divisor, xi when the p-divisor
    does not divide 112).
    """
    for r in (r1, r2):
        if r.pi1 != "simply_connected" or r.b2 != 0:
            raise ValueError("comparison requires 2-connected results "
                             "(trivial pi1 and b2 = 0)")
        if not r.torsion_supported:
            raise ValueError("comparison requires torsion data")
    reversal = _reversal_match(r1, r2)
    if r1.b3 != r2.b3:
        return Comparison("distinct", (), reversal, "b3 differs")
    if r1.torsion.invariant_factors != r2.torsion.invariant_factors:
        return Comparison("distinct", (), reversal,
                          "torsion group differs")
    if (r1.d_free, r1.d_full) != (r2.d_free, r2.d_full):
        return Comparison("distinct", (), reversal,
                          "p(M) divisibility differs")
    if not linking_forms_equivalent(r1.torsion.invariant_factors,
                                    r1.linking, r2.linking):
        return Comparison("distinct", (), reversal,
                          "no group automorphism matches the linking "
                          "forms")
    caveats = []
    if any(d % 2 == 0 for d in r1.torsion.invariant_factors):
        caveats.append("q")
    if r1.d_free % 8 == 0:
        caveats.append("mu")
    if 112 % r1.d_free != 0:
        caveats.append("xi")
    return Comparison("diffeo_candidate", tuple(caveats), reversal,
                      "all computed classifying invariants agree")


def _reversal_match(r1: InvariantReport, r2: InvariantReport) -> bool:
    """Whether r2 matches r1 after reversing r2's orientation."""
    if (r1.b3, r1.d_free, r1.d_full) != (r2.b3, r2.d_free, r2.d_full):
        return False
    if r1.torsion.invariant_factors != r2.torsion.invariant_factors:
        return False
    return linking_forms_equivalent(r1.torsion.invariant_factors,
                                    r1.linking,
                                    _negate_pairing(r2.linking))
