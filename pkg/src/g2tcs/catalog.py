"""Building-block catalog: loading, validation, and derivation formulas.

A building block is a closed Kaehler 3-fold Z with an anticanonical K3
divisor, summarised here by the data the gluing construction consumes:
the polarising lattice N (Gram matrix of the restriction of the
intersection form), the reduced second Chern class c2bar in the basis
dual to the rows of N, the third Betti number b3(Z), and -- for blocks
carrying an anti-holomorphic involution -- the invariant part b3plus and
the Euler characteristic of the fixed curve.

The shipped catalog (data/catalog.json) stores each block together with
the raw input data of the formula that produced its derived fields, so
``verify_catalog`` can recompute every derived value independently.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .lattices import GramLattice, signature

DEFAULT_CATALOG_ENV = "G2TCS_CATALOG"


class CatalogError(ValueError):
    """Raised when a catalog document fails structural validation."""


@dataclass(frozen=True)
class BuildingBlock:
    """One building block of the gluing construction."""

    id: str
    kind: str  # "ordinary" or "involution"
    rank: int
    N: GramLattice
    c2bar: Tuple[int, ...]
    b3: int
    provenance: str
    pleasant: bool = True
    k_trivial: bool = True
    b3plus: Optional[int] = None
    chiC: Optional[int] = None
    ordinary_ok: bool = True
    derivation: Optional[Mapping] = None

    @property
    def is_involution(self) -> bool:
        return self.kind == "involution"

    def validate(self) -> List[str]:
        """Return a list of invariant violations (empty when valid)."""
        problems: List[str] = []
        G = self.N
        if G.rank != self.rank:
            problems.append(f"{self.id}: rank field {self.rank} != Gram "
                            f"size {G.rank}")
        if not G.is_even():
            problems.append(f"{self.id}: Gram diagonal must be even")
        pos, neg, zero = signature(G)
        if (pos, neg, zero) != (1, self.rank - 1, 0):
            problems.append(f"{self.id}: signature {(pos, neg, zero)} is "
                            f"not (1, rank-1, 0)")
        if len(self.c2bar) != self.rank:
            problems.append(f"{self.id}: c2bar length != rank")
        if any(v % 2 for v in self.c2bar):
            problems.append(f"{self.id}: c2bar entries must be even")
        if self.b3 < 0:
            problems.append(f"{self.id}: negative b3")
        if self.is_involution:
            if self.b3plus is None or self.chiC is None:
                problems.append(f"{self.id}: involution block needs "
                                f"b3plus and chiC")
            else:
                if self.b3plus % 2:
                    problems.append(f"{self.id}: b3plus must be even")
                if not 0 <= self.b3plus <= self.b3:
                    problems.append(f"{self.id}: b3plus outside [0, b3]")
            rows = G.gram
            if any(v % 2 for row in rows for v in row):
                problems.append(f"{self.id}: involution Gram must have "
                                f"all entries even")
        return problems


@dataclass(frozen=True)
class Catalog:
    """An ordered collection of building blocks, indexed by id."""

    blocks: Tuple[BuildingBlock, ...]
    source: str = "<memory>"
    _index: Dict[str, BuildingBlock] = field(default_factory=dict,
                                             repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index",
                           {b.id: b for b in self.blocks})

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __contains__(self, block_id: str) -> bool:
        return block_id in self._index

    def get(self, block_id: str) -> BuildingBlock:
        try:
            return self._index[block_id]
        except KeyError:
            raise KeyError(f"unknown building block id {block_id!r}") \
                from None

    def ordinary(self) -> List[BuildingBlock]:
        return [b for b in self.blocks if not b.is_involution]

    def involution(self) -> List[BuildingBlock]:
        return [b for b in self.blocks if b.is_involution]


def _block_from_record(rec: Mapping) -> BuildingBlock:
    required = ["id", "kind", "rank", "N", "c2bar", "b3", "provenance",
                "pleasant", "k_trivial"]
    missing = [k for k in required if k not in rec]
    if missing:
        raise CatalogError(f"record {rec.get('id', '<no id>')!r} missing "
                           f"fields {missing}")
    if rec["kind"] not in ("ordinary", "involution"):
        raise CatalogError(f"{rec['id']}: unknown kind {rec['kind']!r}")
    try:
        gram = GramLattice.from_rows(rec["N"])
    except ValueError as exc:
        raise CatalogError(f"{rec['id']}: bad Gram matrix: {exc}") from None
    return BuildingBlock(
        id=str(rec["id"]),
        kind=rec["kind"],
        rank=int(rec["rank"]),
        N=gram,
        c2bar=tuple(int(v) for v in rec["c2bar"]),
        b3=int(rec["b3"]),
        provenance=str(rec["provenance"]),
        pleasant=bool(rec["pleasant"]),
        k_trivial=bool(rec["k_trivial"]),
        b3plus=rec.get("b3plus"),
        chiC=rec.get("chiC"),
        ordinary_ok=bool(rec.get("ordinary_ok", True)),
        derivation=rec.get("derivation"),
    )


def default_catalog_path() -> str:
    """Path of the catalog to load: env override, else the packaged file."""
    env = os.environ.get(DEFAULT_CATALOG_ENV)
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data", "catalog.json")


def load_catalog(path: Optional[str] = None) -> Catalog:
    """Load and validate a block catalog from a JSON document.

    Raises CatalogError for structural problems (bad schema, duplicate
    ids, or violated block invariants).
    """
    path = path or default_catalog_path()
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {path!r} is not valid JSON: "
                           f"{exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != \
            "g2tcs-block-catalog":
        raise CatalogError(f"{path!r} is not a block-catalog document")
    records = doc.get("blocks")
    if not isinstance(records, list):
        raise CatalogError(f"{path!r}: 'blocks' must be a list")
    blocks = [_block_from_record(rec) for rec in records]
    seen = set()
    problems: List[str] = []
    for block in blocks:
        if block.id in seen:
            problems.append(f"duplicate block id {block.id!r}")
        seen.add(block.id)
        problems.extend(block.validate())
    if problems:
        raise CatalogError("catalog validation failed:\n  " +
                           "\n  ".join(problems))
    return Catalog(blocks=tuple(blocks), source=path)


# --------------------------------------------------------------------------
# Derivation formulas.  Each returns the derived topological data from the
# raw classification inputs, raising ValueError for inconsistent inputs.
# --------------------------------------------------------------------------

def derive_rank1_fano(r: int, minusK3: int, b3Y: int) -> Dict[str, int]:
    """Block data for a rank-one (Picard rank 1) Fano 3-fold of index r.

    Blowing up the base locus of a generic anticanonical pencil of the
    Fano Y gives a block with N generated by the pullback of the
    primitive ample class: the generator has square -K^3 / r^2, the
    pairing of c2bar with it is (24 - K^3)/r, and
    b3(Z) = b3(Y) - K^3 + 2.
    """
    if not 1 <= r <= 4:
        raise ValueError("inconsistent Fano data: index must be 1..4")
    if minusK3 <= 0 or b3Y < 0:
        raise ValueError("inconsistent Fano data: -K^3 must be positive")
    if minusK3 % (r ** 2) != 0 or (24 + minusK3) % r != 0:
        raise ValueError("inconsistent Fano data: divisibility by the "
                         "index fails")
    return {
        "n": minusK3 // r ** 2,
        "c2bar": (24 + minusK3) // r,
        "b3": b3Y + minusK3 + 2,
    }


def derive_lemma_blowup(b3Y: int, minusK3: int) -> int:
    """b3 of an anticanonical-pencil blow-up block: b3(Y) - K^3 + 2."""
    if b3Y < 0 or minusK3 < 0:
        raise ValueError("b3(Y) and -K^3 must be nonnegative")
    return b3Y + minusK3 + 2


def derive_double_cover(b3X: int, b1C: int, rho: int) -> Tuple[int, int]:
    """(b3, b3plus) of an anti-holomorphic double cover block.

    X is the quotient block, C the branch curve, rho the Picard rank of
    the polarising lattice: b3(Z) = b1(C) + 2 b3(X) + 22 - 2 rho and
    b3plus(Z) = b1(C) + b3(X).
    """
    if b3X < 0 or b1C < 0 or rho < 1:
        raise ValueError("invalid double-cover data")
    b3 = b1C + 2 * b3X + 22 - 2 * rho
    return b3, b1C + b3X


def derive_c2bar_cover(c2barX: Sequence[int],
                       minus_k_row: Sequence[int]) -> Tuple[int, ...]:
    """c2bar of a double cover: 2 c2bar(X) - 3 b(-K_Y, .) componentwise."""
    if len(c2barX) != len(minus_k_row):
        raise ValueError("c2bar and -K pairing rows have different length")
    return tuple(2 * c - 3 * k for c, k in zip(c2barX, minus_k_row))


@dataclass(frozen=True)
class NonSymplecticType:
    """Nikulin invariants (r, a, delta) of a K3 non-symplectic involution.

    r is the rank of the invariant lattice, 2^a the order of its
    discriminant group, delta in {0, 1} the parity of the discriminant
    form.
    """

    r: int
    a: int
    delta: int

    def __post_init__(self):
        if not 1 <= self.r <= 20:
            raise ValueError("invariant rank must be in 1..20")
        if not 0 <= self.a <= min(self.r, 22 - self.r):
            raise ValueError("discriminant exponent out of range")
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")
        if (self.r - self.a) % 2:
            raise ValueError("r - a must be even")

    @property
    def fixed_curve_genus(self) -> int:
        """Genus of the largest component of the fixed curve."""
        return (22 - self.r - self.a) // 2

    @property
    def fixed_curve_rational_components(self) -> int:
        """Number of rational components of the fixed curve."""
        return (self.r - self.a) // 2


def derive_kovalev_lee(t: NonSymplecticType) -> Dict[str, int]:
    """Betti data of the block built from a non-symplectic involution.

    Returns b2, b3 and the rank of the kernel of restriction to the K3
    fibre, in terms of the Nikulin invariants of the involution.
    """
    return {
        "b2": 2 * t.r - t.a + 3,
        "b3": 44 - 2 * t.r - 2 * t.a,
        "rkK": t.r - t.a + 2,
    }


def derive_smoothed(r: int) -> Tuple[int, int]:
    """(b3, b3plus) of a smoothed anti-holomorphic cone block.

    r is the rank of the polarising lattice of the underlying singular
    quotient: b3 = 12 (10 - r), b3plus = 40 - 4 r.
    """
    if not 1 <= r <= 9:
        raise ValueError("rank must be in 1..9")
    return 12 * (10 - r), 40 - 4 * r


# --------------------------------------------------------------------------
# Independent re-derivation of the shipped catalog.
# --------------------------------------------------------------------------

def _derived_fields(block: BuildingBlock) -> Dict[str, object]:
    """Recompute derivable fields of a block from its derivation record."""
    der = block.derivation
    out: Dict[str, object] = {}
    method = der.get("method")
    if method == "rank1_fano":
        data = derive_rank1_fano(der["r"], der["minusK3"], der["b3Y"])
        out["b3"] = data["b3"]
        out["c2bar"] = (data["c2bar"],)
        out["N"] = ((data["n"],),)
    elif method == "lemma_blowup":
        out["b3"] = derive_lemma_blowup(der["b3Y"], der["minusK3"])
    elif method == "double_cover":
        b3, b3plus = derive_double_cover(der["b3X"], der["b1C"],
                                         der["rho"])
        out["b3"] = b3
        out["b3plus"] = b3plus
        c2 = der.get("c2")
        if c2 and c2.get("method") == "rank1_fano":
            out["c2bar"] = (derive_rank1_fano(
                c2["r"], c2["minusK3"], 0)["c2bar"],)
        elif c2 and c2.get("method") == "cover_c2":
            out["c2bar"] = derive_c2bar_cover(c2["c2barX"],
                                              c2["minus_k_row"])
    elif method == "smoothed":
        b3, b3plus = derive_smoothed(der["r"])
        out["b3"] = b3
        out["b3plus"] = b3plus
        out["c2bar"] = tuple(3 * v for v in der["minus_k_row"])
    else:
        raise CatalogError(f"{block.id}: unknown derivation method "
                           f"{method!r}")
    return out


@dataclass(frozen=True)
class CatalogMismatch:
    block_id: str
    field: str
    stored: object
    derived: object


def verify_catalog(catalog: Catalog) -> List[CatalogMismatch]:
    """Recompute derived fields of every block that carries derivation
    data and report all disagreements with the stored values.

    Blocks without a derivation record are skipped. An empty report
    means the catalog is self-consistent.
    """
    mismatches: List[CatalogMismatch] = []
    for block in catalog:
        if not block.derivation:
            continue
        derived = _derived_fields(block)
        stored = {
            "b3": block.b3,
            "b3plus": block.b3plus,
            "c2bar": block.c2bar,
            "N": block.N.gram,
        }
        for name, value in derived.items():
            if stored[name] != value:
                mismatches.append(CatalogMismatch(
                    block_id=block.id, field=name,
                    stored=stored[name], derived=value))
    return mismatches
