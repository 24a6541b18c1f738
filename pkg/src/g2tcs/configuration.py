"""Gluing configurations: pushout lattices, angles, feasibility.

A configuration glues two building blocks along their K3 fibres after a
torus rotation by an angle theta. Lattice-theoretically it is a pair of
primitive embeddings of the polarising lattices N+ and N- into the K3
lattice, recorded here by the Gram matrix of the (possibly degenerate)
pushout presentation on the concatenated bases of N+ and N-.

All angles are exact rational multiples of pi; cosines enter only
through the rational values cos^2(theta) and cos(2 psi).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import List, Optional, Sequence, Tuple

from .catalog import BuildingBlock
from .exact import (
    RationalMatrix,
    integer_kernel,
    palindromic_quadratic_split,
    sturm_count_roots,
)
from .lattices import (
    GramLattice,
    radical_and_quotient,
    rational_eigenstructure,
    signature,
)

# cos^2(q*pi) for the seven admissible angle fractions q.
COS_SQUARED = {
    Fraction(1, 6): Fraction(3, 4),
    Fraction(1, 4): Fraction(1, 2),
    Fraction(1, 3): Fraction(1, 4),
    Fraction(1, 2): Fraction(0),
    Fraction(2, 3): Fraction(1, 4),
    Fraction(3, 4): Fraction(1, 2),
    Fraction(5, 6): Fraction(3, 4),
}

SQUARE = "square"
HEXAGONAL = "hexagonal"


class ConfigurationError(ValueError):
    """Raised for malformed or inadmissible configuration input."""


def parse_theta(text: str) -> Tuple[Fraction, int]:
    """Parse an exact angle string like "1/4pi" or "-pi/6".

    Returns (theta, orientation) with theta a positive fraction of pi in
    (0, 1) and orientation -1 when the input was negative.
    """
    s = text.replace(" ", "").replace("*", "")
    orientation = 1
    if s.startswith("-"):
        orientation = -1
        s = s[1:]
    m = re.fullmatch(r"(?:(\d+)/(\d+))?pi(?:/(\d+))?", s)
    if not m:
        raise ConfigurationError(f"cannot parse angle {text!r}; use forms "
                                 f"like '1/4pi' or 'pi/4'")
    if m.group(1) and m.group(3):
        raise ConfigurationError(f"ambiguous angle {text!r}")
    if m.group(1):
        theta = Fraction(int(m.group(1)), int(m.group(2)))
    elif m.group(3):
        theta = Fraction(1, int(m.group(3)))
    else:
        theta = Fraction(1)
    if theta not in COS_SQUARED:
        raise ConfigurationError(f"angle {text!r} is not one of the seven "
                                 f"admissible fractions of pi")
    return theta, orientation


def infer_family(theta: Fraction) -> str:
    """Default angle family for a fraction of pi (pi/2 defaults to square)."""
    return SQUARE if theta.denominator in (2, 4) else HEXAGONAL


@dataclass(frozen=True)
class GluingAngle:
    """Exact gluing angle with its family and torus gluing flags.

    theta is a fraction of pi in (0, 1); orientation records a negated
    input angle (it flips the sign of nu_bar only); b_plus/b_minus are
    the torus double-cover flags of the two sides.
    """

    family: str
    theta: Fraction
    b_plus: int
    b_minus: int
    orientation: int = 1

    def __post_init__(self):
        if self.family not in (SQUARE, HEXAGONAL):
            raise ConfigurationError(f"unknown family {self.family!r}")
        if self.theta not in COS_SQUARED:
            raise ConfigurationError(f"inadmissible theta {self.theta}*pi")
        # theta = k*pi/2 (square) or k*pi/3 (hexagonal) with k in (1/2)Z
        # and k = (b_plus + b_minus)/2 mod Z.
        k = self.theta * (2 if self.family == SQUARE else 3)
        if k.denominator not in (1, 2):
            raise ConfigurationError(
                f"theta {self.theta}*pi is not a half-integer multiple of "
                f"pi/{2 if self.family == SQUARE else 3}")
        if (2 * k - self.b_plus - self.b_minus) % 2 != 0:
            raise ConfigurationError(
                "angle parity violated: 2k and b_plus + b_minus must have "
                "equal parity")
        if self.orientation not in (1, -1):
            raise ConfigurationError("orientation must be +1 or -1")

    @property
    def cos_squared(self) -> Fraction:
        return COS_SQUARED[self.theta]

    @property
    def epsilon(self) -> int:
        """Sign of cos(theta)."""
        if self.theta < Fraction(1, 2):
            return 1
        return 0 if self.theta == Fraction(1, 2) else -1

    @property
    def cos_double(self) -> Fraction:
        """cos(2 theta) = 2 cos^2(theta) - 1 (rational for all angles)."""
        return 2 * self.cos_squared - 1

    def describe(self) -> str:
        sign = "-" if self.orientation < 0 else ""
        return f"{sign}{self.theta.numerator}/{self.theta.denominator}pi"


def _role_flags(kind_plus: str, kind_minus: str, family: str,
                theta: Fraction) -> Optional[Tuple[int, int]]:
    """Default torus flags (b+, b-) for the given block kinds, or None."""
    if family == SQUARE:
        if theta == Fraction(1, 2):
            both = kind_plus == kind_minus == "involution"
            return (1, 1) if both else (0, 0)
        # A quarter-turn gluing twists only the plus side; the minus block
        # is used in its ordinary role even when it carries an involution.
        if kind_plus != "involution":
            return None
        return (1, 0)
    # Hexagonal gluings need involution blocks on both sides.
    if kind_plus != "involution" or kind_minus != "involution":
        return None
    if theta in (Fraction(1, 3), Fraction(2, 3)):
        return (1, 1)
    return (1, 0)


_PI1_TABLE = {
    (SQUARE, 1, 0, Fraction(1, 4)): "simply_connected",
    (SQUARE, 1, 0, Fraction(3, 4)): "simply_connected",
    (SQUARE, 0, 0, Fraction(1, 2)): "simply_connected",
    (SQUARE, 1, 1, Fraction(1, 2)): "pi1_Z2",
    (HEXAGONAL, 1, 1, Fraction(1, 3)): "simply_connected",
    (HEXAGONAL, 1, 1, Fraction(2, 3)): "simply_connected",
    (HEXAGONAL, 1, 0, Fraction(1, 6)): "simply_connected",
    (HEXAGONAL, 1, 0, Fraction(5, 6)): "simply_connected",
    (HEXAGONAL, 1, 0, Fraction(1, 2)): "pi1_Z2",
    (HEXAGONAL, 0, 0, Fraction(1, 3)): "pi1_Z3",
    (HEXAGONAL, 0, 0, Fraction(2, 3)): "pi1_Z3",
}


def admissible_angle(kind_plus: str, kind_minus: str, family: str,
                     theta: Fraction, b_plus: Optional[int] = None,
                     b_minus: Optional[int] = None) -> str:
    """Fundamental-group class of a gluing, or "inadmissible".

    Looks up the case table of admissible (family, b+, b-, theta)
    combinations. When the torus flags are not given they default to the
    maximal-symmetry choice for the block kinds.
    """
    theta = abs(theta)
    if b_plus is None or b_minus is None:
        flags = _role_flags(kind_plus, kind_minus, family, theta)
        if flags is None:
            return "inadmissible"
        b_plus, b_minus = flags
    # A flagged side needs an involution block; an unflagged square side
    # needs the block in its ordinary role; an unflagged hexagonal side
    # still needs an involution block.
    for b, kind in ((b_plus, kind_plus), (b_minus, kind_minus)):
        if b == 1 and kind != "involution":
            return "inadmissible"
        if b == 0 and family == HEXAGONAL and kind != "involution":
            return "inadmissible"
    return _PI1_TABLE.get((family, b_plus, b_minus, theta), "inadmissible")


@dataclass(frozen=True)
class Configuration:
    """A gluing configuration: two blocks, an angle, a pushout Gram.

    The pushout is the (rho+ + rho-)-dimensional Gram matrix of the
    concatenated bases of N+ and N- inside the K3 lattice; it may be
    degenerate when the two sublattices intersect.
    """

    plus: BuildingBlock
    minus: BuildingBlock
    angle: GluingAngle
    pushout: GramLattice

    @property
    def rho_plus(self) -> int:
        return self.plus.rank

    @property
    def rho_minus(self) -> int:
        return self.minus.rank

    def cross_block(self) -> RationalMatrix:
        """The rho+ x rho- cross pairing block C of the pushout."""
        rp = self.rho_plus
        return RationalMatrix([
            [self.pushout.gram[i][rp + j] for j in range(self.rho_minus)]
            for i in range(rp)
        ])

    def projections(self) -> Tuple[RationalMatrix, RationalMatrix]:
        """(pi_plus, pi_minus): orthogonal projections between the sides.

        pi_plus = G+^{-1} C maps N- coordinates to N+ coordinates and
        vice versa for pi_minus = G-^{-1} C^T.
        """
        C = self.cross_block()
        Gp = self.plus.N.matrix()
        Gm = self.minus.N.matrix()
        return Gp.inverse() * C, Gm.inverse() * C.transpose()

    def side_compositions(self) -> Tuple[RationalMatrix, RationalMatrix]:
        """(pi+ o pi-, pi- o pi+) acting on N+ resp. N- coordinates."""
        pp, pm = self.projections()
        return pp * pm, pm * pp

    def pi1(self) -> str:
        return admissible_angle(self.plus.kind, self.minus.kind,
                                self.angle.family, self.angle.theta,
                                self.angle.b_plus, self.angle.b_minus)


def make_configuration(plus: BuildingBlock, minus: BuildingBlock,
                       theta, pushout_rows: Sequence[Sequence[int]],
                       family: Optional[str] = None,
                       orientation: Optional[int] = None) -> Configuration:
    """Build a configuration from blocks, an angle and a full pushout Gram.

    theta may be a string ("1/4pi") or a Fraction of pi (negative for the
    reversed orientation).
    """
    if isinstance(theta, str):
        theta, parsed_orientation = parse_theta(theta)
        if orientation is None:
            orientation = parsed_orientation
    else:
        theta = Fraction(theta)
        if orientation is None:
            orientation = 1 if theta > 0 else -1
        theta = abs(theta)
    family = family or infer_family(theta)
    flags = _role_flags(plus.kind, minus.kind, family, theta)
    if flags is None:
        raise ConfigurationError(
            f"blocks ({plus.kind}, {minus.kind}) admit no torus flags for "
            f"the {family} family")
    angle = GluingAngle(family=family, theta=theta, b_plus=flags[0],
                        b_minus=flags[1], orientation=orientation)
    gram = GramLattice.from_rows(pushout_rows)
    return Configuration(plus=plus, minus=minus, angle=angle, pushout=gram)


def pushout_from_glue(base_gram: Sequence[Sequence[int]],
                      plus_basis: Sequence[Sequence],
                      minus_basis: Sequence[Sequence]) -> List[List[int]]:
    """Full pushout Gram from rational bases inside a common base lattice.

    The rows of plus_basis and minus_basis are rational coordinates in
    the base lattice; their pairwise pairings under the base Gram must be
    integers.
    """
    B = RationalMatrix(base_gram)
    vs = [[Fraction(x) for x in row] for row in plus_basis]
    vs += [[Fraction(x) for x in row] for row in minus_basis]
    n = len(vs)
    out: List[List[int]] = []
    for i in range(n):
        bv = B.mul_vector(vs[i])
        row = []
        for j in range(n):
            v = sum(a * b for a, b in zip(vs[j], bv))
            if v.denominator != 1:
                raise ConfigurationError(
                    "glue presentation has a non-integral pairing")
            row.append(int(v))
        out.append(row)
    return out


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: Tuple[str, ...]
    flags: Tuple[str, ...]


def _eigenvalues_in_unit_interval(M: RationalMatrix) -> bool:
    """True when all real roots of charpoly(M) lie in [0, 1]."""
    p = M.charpoly()
    bound = 1 + max((abs(c) for c in p), default=Fraction(1))
    above = sturm_count_roots(p, Fraction(1), bound)
    # Sturm counts roots in (a, b]; drop an allowed root at exactly 0.
    below = sturm_count_roots(p, -bound, Fraction(0))
    if below and p[-1] == 0:
        below -= 1
    return above == 0 and below == 0


def validate_configuration(cfg: Configuration) -> ValidationReport:
    """Structural checks of a configuration's pushout presentation.

    Verifies block-diagonal agreement with N+/N-, even integrality,
    signature (2, rk-2) of the nondegenerate quotient, eigenvalues of
    pi+ pi- inside [0, 1], and the embedding bound rk <= 11 (flagged,
    not failed, when exceeded).
    """
    problems: List[str] = []
    flags: List[str] = []
    rp, rm = cfg.rho_plus, cfg.rho_minus
    W = cfg.pushout
    if W.rank != rp + rm:
        return ValidationReport(False, (
            f"pushout rank {W.rank} != rho+ + rho- = {rp + rm}",), ())
    for i in range(rp):
        for j in range(rp):
            if W.gram[i][j] != cfg.plus.N.gram[i][j]:
                problems.append("leading diagonal block differs from N+")
                break
        else:
            continue
        break
    for i in range(rm):
        for j in range(rm):
            if W.gram[rp + i][rp + j] != cfg.minus.N.gram[i][j]:
                problems.append("trailing diagonal block differs from N-")
                break
        else:
            continue
        break
    if not W.is_even():
        problems.append("pushout must be an even lattice")
    if not problems:
        _radical, reduced = radical_and_quotient(W)
        pos, neg, zero = signature(reduced)
        if (pos, neg) != (2, reduced.rank - 2) or zero:
            problems.append(
                f"signature must be (2, rk-2); quotient has "
                f"({pos}, {neg}, {zero})")
        Mp, _Mm = cfg.side_compositions()
        if not _eigenvalues_in_unit_interval(Mp):
            problems.append("eigenvalues of pi+ pi- must lie in [0, 1]")
        if reduced.rank > 11:
            flags.append("rank > 11: primitive embedding into the K3 "
                         "lattice not guaranteed")
    return ValidationReport(not problems, tuple(problems), tuple(flags))


def angle_eigenspaces(cfg: Configuration, cos_squared: Fraction):
    """Eigenspace bases of the side compositions for one eigenvalue.

    Returns (plus_basis, minus_basis, multiplicity): exact rational bases
    of the cos^2(psi)-eigenspaces of pi+ pi- on N+ and of pi- pi+ on N-,
    and the plus-side dimension (the two agree for nonzero cos^2(psi)).
    """
    c = Fraction(cos_squared)
    Mp, Mm = cfg.side_compositions()
    plus = (Mp - RationalMatrix.identity(Mp.nrows).scaled(c)).nullspace()
    minus = (Mm - RationalMatrix.identity(Mm.nrows).scaled(c)).nullspace()
    return plus, minus, len(plus)


def is_pure_angle(cfg: Configuration) -> bool:
    """True when both side compositions equal cos^2(theta) times identity."""
    c = cfg.angle.cos_squared
    Mp, Mm = cfg.side_compositions()
    return (Mp == RationalMatrix.identity(Mp.nrows).scaled(c)
            and Mm == RationalMatrix.identity(Mm.nrows).scaled(c))


def d_theta(cfg: Configuration) -> int:
    """Multiplicity term of the third Betti number for the gluing angle.

    For nonzero cos(theta) this is the dimension of the cos^2(theta)
    eigenspace; for theta = pi/2 it is the number of N+ directions
    orthogonal to all of N- plus the number of N- directions orthogonal
    to all of N+.
    """
    if cfg.angle.cos_squared == 0:
        C = cfg.cross_block()
        return ((cfg.rho_plus - C.rank())
                + (cfg.rho_minus - C.transpose().rank()))
    plus, _minus, mult = angle_eigenspaces(cfg, cfg.angle.cos_squared)
    return mult


# ------------------------------------------------------------------ angles

ANGLE_ZERO = (Fraction(1), 0)
ANGLE_PI = (Fraction(-1), 0)


@dataclass(frozen=True)
class AngleSpectrum:
    """Configuration angles: 3 plus-type and 19 minus-type entries.

    Each entry is (cos(alpha), sign) with sign 0 reserved for the exact
    angles 0 (cos = 1) and pi (cos = -1).
    """

    alpha_plus: Tuple[Tuple[Fraction, int], ...]
    alpha_minus: Tuple[Tuple[Fraction, int], ...]

    def minus_cosines(self) -> List[Fraction]:
        return [c for c, _s in self.alpha_minus]


def _restricted_signature(G: RationalMatrix,
                          basis: Sequence[Sequence[Fraction]]):
    """Signature of a form restricted to the span of rational vectors."""
    k = len(basis)
    rows = []
    for u in basis:
        gu = G.mul_vector(u)
        rows.append([sum(a * b for a, b in zip(v, gu)) for v in basis])
    # Clear denominators so the integer signature routine applies.
    denom = 1
    for row in rows:
        for x in row:
            denom = lcm(denom, x.denominator)
    int_rows = [[int(x * denom) for x in row] for row in rows]
    return signature(GramLattice.from_rows(int_rows))


def configuration_angles(cfg: Configuration) -> AngleSpectrum:
    """The 3 + 19 configuration angles of the composed reflections.

    Works on the nondegenerate quotient of the pushout: the product of
    the two reflections A± = 2 pi± - Id decomposes the space into
    rational eigenspaces (angles 0 and pi) and invariant 2-planes
    (conjugate angle pairs); each piece is assigned to the plus or minus
    list by the sign of the form on it. The orthogonal complement of the
    pushout in the K3 lattice contributes angle 0 with signature
    (1, 21 - rk).
    """
    _radical, reduced = radical_and_quotient(cfg.pushout)
    r = reduced.rank
    Ghat = reduced.matrix()
    # Images of the N+/N- bases in quotient coordinates: express each
    # standard basis vector in the (complement + radical) basis and keep
    # the complement coordinates.
    n = cfg.pushout.rank
    comp = [list(row) for row in (reduced.basis or [])]
    rad = _radical
    full = RationalMatrix.from_columns([list(map(Fraction, v))
                                        for v in comp + rad])
    inv = full.inverse()
    imgs = [inv.mul_vector([Fraction(int(i == j)) for i in range(n)])[:r]
            for j in range(n)]
    Bp = RationalMatrix.from_columns(imgs[:cfg.rho_plus])
    Bm = RationalMatrix.from_columns(imgs[cfg.rho_plus:])

    def reflection(B: RationalMatrix) -> RationalMatrix:
        BtGB = B.transpose() * Ghat * B
        P = B * BtGB.inverse() * B.transpose() * Ghat
        return P.scaled(2) - RationalMatrix.identity(r)

    M = reflection(Bp) * reflection(Bm)
    roots, remainder = rational_eigenstructure(M)
    alpha_plus: List[Tuple[Fraction, int]] = []
    alpha_minus: List[Tuple[Fraction, int]] = []
    accounted = 0
    for value, mult in roots:
        if value not in (1, -1):
            raise ArithmeticError(
                "composed reflection has a rational eigenvalue other than "
                "+-1; invariant violation")
        I = RationalMatrix.identity(r)
        space = (M - I.scaled(value)).nullspace()
        if len(space) != mult:
            raise ArithmeticError("composed reflection is not semisimple")
        pos, neg, zero = _restricted_signature(Ghat, space)
        if zero:
            raise ArithmeticError("degenerate eigenspace; invariant "
                                  "violation")
        token = ANGLE_ZERO if value == 1 else ANGLE_PI
        alpha_plus.extend([token] * pos)
        alpha_minus.extend([token] * neg)
        accounted += mult
    # Quadratic factors x^2 - t x + 1 give conjugate pairs with cos = t/2.
    if remainder and len(remainder) > 1:
        factors, leftover = palindromic_quadratic_split(remainder)
        if leftover and len(leftover) > 1:
            raise ArithmeticError("algebraic angles unsupported")
        for t, mult in factors:
            cos_a = t / 2
            I = RationalMatrix.identity(r)
            plane = (M * M - M.scaled(t) + I).nullspace()
            if len(plane) != 2 * mult:
                raise ArithmeticError("composed reflection is not "
                                      "semisimple")
            pos, neg, zero = _restricted_signature(Ghat, plane)
            if zero or pos % 2 or neg % 2:
                raise ArithmeticError("indefinite invariant 2-plane; "
                                      "invariant violation")
            alpha_plus.extend([(cos_a, 1), (cos_a, -1)] * (pos // 2))
            alpha_minus.extend([(cos_a, 1), (cos_a, -1)] * (neg // 2))
            accounted += 2 * mult
    if accounted != r:
        raise ArithmeticError("eigenstructure does not fill the space")
    # Complement of the pushout in the K3 lattice: identity, angle 0,
    # signature (3 - 2, 19 - (r - 2)) = (1, 21 - r).
    alpha_plus.extend([ANGLE_ZERO] * (3 - len(alpha_plus)))
    alpha_minus.extend([ANGLE_ZERO] * (19 - len(alpha_minus)))
    if len(alpha_plus) != 3 or len(alpha_minus) != 19:
        raise ArithmeticError("angle spectrum has wrong size")
    return AngleSpectrum(tuple(alpha_plus), tuple(alpha_minus))


# ----------------------------------------------------------------- rank 1

@dataclass(frozen=True)
class Rank1Pushout:
    """Cross-term data of a rank-1 x rank-1 pushout."""

    gram: Tuple[Tuple[int, int], Tuple[int, int]]
    w: int
    m: Optional[int] = None
    q_plus: Optional[int] = None
    q_minus: Optional[int] = None


def rank1_pushout(n_plus: int, n_minus: int,
                  theta) -> Optional[Rank1Pushout]:
    """Cross-term of a rank-1 pushout at the given angle, if one exists.

    The generators have squares n+ and n-; the required cross pairing is
    cos(theta) * sqrt(n+ n-), which is an integer exactly when
    2 n+ n- (theta = pi/4) resp. 3 n+ n- / 4 (theta = pi/6) is a perfect
    square. For pi/4 the unique decomposition n+ = 2 m q+^2,
    n- = m q-^2 with coprime q± is returned as well.
    """
    if isinstance(theta, str):
        theta, _orient = parse_theta(theta)
    theta = abs(Fraction(theta))
    if n_plus <= 0 or n_minus <= 0 or n_plus % 2 or n_minus % 2:
        raise ValueError("generator squares must be positive even")
    c2 = COS_SQUARED[theta]
    eps = 1 if theta < Fraction(1, 2) else -1
    if c2 == 0:
        return Rank1Pushout(((n_plus, 0), (0, n_minus)), 0)
    w2 = c2 * n_plus * n_minus
    if w2.denominator != 1:
        return None
    w = isqrt(int(w2))
    if w * w != int(w2):
        return None
    out = Rank1Pushout(((n_plus, eps * w), (eps * w, n_minus)), w)
    if c2 == Fraction(1, 2):
        s, t = n_plus // 2, n_minus
        m = gcd(s, t)
        out = Rank1Pushout(out.gram, w, m=m, q_plus=isqrt(s // m),
                           q_minus=isqrt(t // m))
    return out


# ------------------------------------------------------------- feasibility

def _fourier_motzkin_strict(rows: List[List[Fraction]]) -> Optional[List[Fraction]]:
    """A solution of the strict system (row . t) > 0 for all rows, or None.

    Eliminates the last variable repeatedly, then back-substitutes with
    interval midpoints.
    """
    if not rows:
        return []
    k = len(rows[0])
    if k == 0:
        return None
    if k == 1:
        if all(r[0] > 0 for r in rows):
            return [Fraction(1)]
        if all(r[0] < 0 for r in rows):
            return [Fraction(-1)]
        return None
    # Normalize on the last variable: a . t' + c * t_k > 0.
    lower, upper, rest = [], [], []
    for r in rows:
        c = r[-1]
        if c > 0:
            lower.append([-x / c for x in r[:-1]])   # t_k > lower(t')
        elif c < 0:
            upper.append([-x / c for x in r[:-1]])   # t_k < upper(t')
        else:
            rest.append(r[:-1])
    projected = list(rest)
    for lo in lower:
        for up in upper:
            # up(t') - lo(t') > 0
            projected.append([u - l for u, l in zip(up, lo)])
    if not projected:
        # Any t' works; recurse on a trivial system of one dimension less.
        tprime = [Fraction(0)] * (k - 1)
    else:
        tprime = _fourier_motzkin_strict(projected)
        if tprime is None:
            return None
    los = [sum(a * b for a, b in zip(lo, tprime)) for lo in lower]
    ups = [sum(a * b for a, b in zip(up, tprime)) for up in upper]
    lo_val = max(los) if los else None
    up_val = min(ups) if ups else None
    if lo_val is not None and up_val is not None:
        if lo_val >= up_val:
            return None
        tk = (lo_val + up_val) / 2
    elif lo_val is not None:
        tk = lo_val + 1
    elif up_val is not None:
        tk = up_val - 1
    else:
        tk = Fraction(1)
    return tprime + [tk]


def feasibility_cone_check(cfg: Configuration):
    """Decide the ample-cone compatibility condition of the matching.

    A common positive direction must exist: a vector of the
    cos^2(theta)-eigenspace on the plus side with positive coordinates
    whose (sign cos theta)-scaled projection to the minus side also has
    positive coordinates. Returns (feasible, witness in N+ coordinates).
    """
    if cfg.angle.cos_squared == 0:
        # Orthogonal gluing: the two ample cones impose no joint
        # condition; any ample class works on each side.
        return True, [Fraction(1)] * cfg.rho_plus
    plus, _minus, _m = angle_eigenspaces(cfg, cfg.angle.cos_squared)
    if not plus:
        return False, None
    eps = cfg.angle.epsilon
    _pp, pm = cfg.projections()
    S_cols = plus
    rows: List[List[Fraction]] = []
    for i in range(cfg.rho_plus):
        rows.append([v[i] for v in S_cols])
    for j in range(cfg.rho_minus):
        rows.append([eps * sum(pm.rows[j][i] * v[i]
                               for i in range(cfg.rho_plus))
                     for v in S_cols])
    t = _fourier_motzkin_strict(rows)
    if t is None:
        return False, None
    witness = [sum(v[i] * c for v, c in zip(S_cols, t))
               for i in range(cfg.rho_plus)]
    return True, witness


# -------------------------------------------------------------- sublattices

def _saturate_span(vectors: List[List[Fraction]], n: int) -> List[List[int]]:
    """Integer basis of (rational span of ``vectors``) intersect Z^n."""
    span = RationalMatrix([[v[i] for i in range(n)] for v in vectors])
    ann = span.nullspace()  # columns x with (vectors) . x = 0
    if not ann:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    rows = []
    for a in ann:
        denom = 1
        for x in a:
            denom = lcm(denom, x.denominator)
        rows.append([int(x * denom) for x in a])
    return integer_kernel(rows)


def lambda_lattices(cfg: Configuration) -> Tuple[GramLattice, GramLattice]:
    """The two auxiliary overlattices controlling block embeddings.

    Lambda+ is the primitive closure inside the pushout of N+ together
    with the part of N- orthogonal to the angle eigenspace (and
    symmetrically for Lambda-). For a pure angle both equal N+-.
    """
    rp, rm = cfg.rho_plus, cfg.rho_minus
    n = rp + rm
    plus_eig, minus_eig, _m = angle_eigenspaces(cfg, cfg.angle.cos_squared)

    def off_eigen_part(eig: List[List[Fraction]], G: RationalMatrix,
                       rho: int) -> List[List[int]]:
        """Integer basis of the orthogonal complement of the eigenspace."""
        if not eig:
            return [[int(i == j) for j in range(rho)] for i in range(rho)]
        rows = []
        for v in eig:
            gv = G.mul_vector(v)
            denom = 1
            for x in gv:
                denom = lcm(denom, x.denominator)
            rows.append([int(x * denom) for x in gv])
        return integer_kernel(rows)

    def build(own_first: bool) -> GramLattice:
        if own_first:
            own_rho, other_rho = rp, rm
            eig = minus_eig
            G = cfg.minus.N.matrix()
        else:
            own_rho, other_rho = rm, rp
            eig = plus_eig
            G = cfg.plus.N.matrix()
        gens: List[List[Fraction]] = []
        base = 0 if own_first else rp
        for i in range(own_rho):
            v = [Fraction(0)] * n
            v[base + i] = Fraction(1)
            gens.append(v)
        for vec in off_eigen_part(eig, G, other_rho):
            v = [Fraction(0)] * n
            for i, x in enumerate(vec):
                v[(rp if own_first else 0) + i] = Fraction(x)
            gens.append(v)
        basis = _saturate_span(gens, n)
        Wm = cfg.pushout.matrix()
        gram = []
        for u in basis:
            gu = Wm.mul_vector(u)
            gram.append([int(sum(a * b for a, b in zip(v, gu)))
                         for v in basis])
        return GramLattice.from_rows(
            gram, basis=[[Fraction(x) for x in row] for row in basis])

    return build(True), build(False)
