from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from hodge_atlas.exceptions import (
    DegenerateSpec,
    GradingMismatch,
    NegativeBidegree,
    PoincareDualityViolation,
    SymmetryViolation,
)

Bidegree = Tuple[int, int]


class Sign(str, Enum):
    """
    Eigenvalue of an involution on a graded piece, or NONE when no involution is tracked.
    """

    PLUS = "+"
    MINUS = "-"
    NONE = "none"

    def __str__(self) -> str:
        return self.value

    def __mul__(self, other: "Sign") -> "Sign":
        if self is Sign.NONE or other is Sign.NONE:
            return Sign.NONE
        return Sign.PLUS if self is other else Sign.MINUS


PieceKey = Tuple[int, Sign]


def _clean(dims: Dict[Bidegree, int]) -> Dict[Bidegree, int]:
    return {(int(p), int(q)): int(h) for (p, q), h in sorted(dims.items()) if h != 0}


@dataclass(frozen=True)
class Grading:
    """
    Splitting of a Hodge structure by a Z/m character index and an involution sign.

    A pure involution grading uses m = 1 with every piece at index 0.
    """

    m: int
    pieces: Dict[PieceKey, Dict[Bidegree, int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1:
            raise GradingMismatch(f"character modulus must be positive, got {self.m}")
        cleaned: Dict[PieceKey, Dict[Bidegree, int]] = {}
        for (j, sign), dims in self.pieces.items():
            key = (int(j) % self.m, Sign(sign))
            merged = dict(cleaned.get(key, {}))
            for bideg, h in dims.items():
                if h < 0:
                    raise GradingMismatch(f"negative dimension {h} in piece {key} at {bideg}")
                merged[bideg] = merged.get(bideg, 0) + h
            cleaned[key] = merged
        cleaned = {key: _clean(dims) for key, dims in sorted(cleaned.items(), key=lambda kv: (kv[0][0], kv[0][1].value))}
        object.__setattr__(self, "pieces", {key: dims for key, dims in cleaned.items() if dims})

    @property
    def has_signs(self) -> bool:
        return bool(self.pieces) and all(sign is not Sign.NONE for _, sign in self.pieces)

    def totals(self) -> Dict[Bidegree, int]:
        out: Dict[Bidegree, int] = {}
        for dims in self.pieces.values():
            for bideg, h in dims.items():
                out[bideg] = out.get(bideg, 0) + h
        return _clean(out)

    def lifted(self, m: int) -> "Grading":
        """Re-index the characters into Z/m, m a multiple of the current modulus."""
        if m % self.m:
            raise GradingMismatch(f"cannot lift Z/{self.m} grading to Z/{m}")
        factor = m // self.m
        return Grading(m, {(j * factor, s): dict(d) for (j, s), d in self.pieces.items()})

    def to_dict(self) -> Dict:
        return {
            "m": self.m,
            "pieces": [
                [j, sign.value, p, q, h]
                for (j, sign), dims in self.pieces.items()
                for (p, q), h in sorted(dims.items())
            ],
        }


@dataclass(frozen=True)
class GradedHodgeStructure:
    """
    Hodge numbers of a weight-k rational Hodge structure, optionally split by a grading.

    Construction validates Hodge symmetry, the bidegree weights and, when a grading is
    present, that its pieces add up to the totals and are swapped by conjugation.
    """

    weight: int
    dims: Dict[Bidegree, int] = field(default_factory=dict)
    grading: Optional[Grading] = None

    def __post_init__(self):
        if self.weight < 0:
            raise NegativeBidegree(f"weight must be non-negative, got {self.weight}")
        for (p, q), h in self.dims.items():
            if p + q != self.weight:
                raise GradingMismatch(f"bidegree ({p},{q}) does not have weight {self.weight}")
            if p < 0 or q < 0:
                raise NegativeBidegree(f"bidegree ({p},{q}) is negative")
            if h < 0:
                raise SymmetryViolation(f"h^{{{p},{q}}} = {h} is negative", "dimensions are non-negative")
        dims = _clean(self.dims)
        for (p, q), h in dims.items():
            if dims.get((q, p), 0) != h:
                raise SymmetryViolation(f"h^{{{p},{q}}} = {h} but h^{{{q},{p}}} = {dims.get((q, p), 0)}")
        object.__setattr__(self, "dims", dims)
        if self.grading is not None:
            self._check_grading(dims, self.grading)

    def _check_grading(self, dims: Dict[Bidegree, int], grading: Grading) -> None:
        for (j, sign), piece in grading.pieces.items():
            for (p, q) in piece:
                if p + q != self.weight:
                    raise GradingMismatch(f"piece ({j},{sign}) has bidegree ({p},{q}) off weight {self.weight}")
        if grading.totals() != dims:
            raise GradingMismatch(f"graded pieces sum to {grading.totals()} but totals are {dims}")
        for (j, sign), piece in grading.pieces.items():
            partner = grading.pieces.get(((-j) % grading.m, sign), {})
            for (p, q), h in piece.items():
                if partner.get((q, p), 0) != h:
                    raise SymmetryViolation(
                        f"piece ({j},{sign}) has {h} at ({p},{q}) but its conjugate piece has "
                        f"{partner.get((q, p), 0)} at ({q},{p})",
                        "conjugation swaps eigenspaces j and m-j",
                    )

    def h(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    @property
    def is_zero(self) -> bool:
        return not self.dims

    def hodge_numbers(self) -> Tuple[int, ...]:
        """(h^{k,0}, h^{k-1,1}, ..., h^{0,k})."""
        return tuple(self.h(p, self.weight - p) for p in range(self.weight, -1, -1))

    def piece(self, j: Optional[int] = None, sign: Optional[Sign] = None) -> "GradedHodgeStructure":
        """Sub-structure of the pieces matching the given index and/or sign."""
        if self.grading is None:
            if j is None and sign is None:
                return self
            raise GradingMismatch("structure carries no grading")
        dims: Dict[Bidegree, int] = {}
        kept: Dict[PieceKey, Dict[Bidegree, int]] = {}
        for key, piece in self.grading.pieces.items():
            if (j is None or key[0] == j % self.grading.m) and (sign is None or key[1] is sign):
                kept[key] = piece
                for bideg, h in piece.items():
                    dims[bideg] = dims.get(bideg, 0) + h
        return GradedHodgeStructure(self.weight, dims, Grading(self.grading.m, kept))

    def twisted(self, n: int) -> "GradedHodgeStructure":
        """Bidegree shift by (n, n); raises NegativeBidegree if a class would leave the quadrant."""
        if n == 0:
            return self
        if self.weight + 2 * n < 0 or any(p + n < 0 or q + n < 0 for p, q in self.dims):
            raise NegativeBidegree(f"twist by {n} moves a class of weight {self.weight} to a negative bidegree")
        dims = {(p + n, q + n): h for (p, q), h in self.dims.items()}
        grading = None
        if self.grading is not None:
            grading = Grading(
                self.grading.m,
                {key: {(p + n, q + n): h for (p, q), h in piece.items()} for key, piece in self.grading.pieces.items()},
            )
        return GradedHodgeStructure(self.weight + 2 * n, dims, grading)

    def without_grading(self) -> "GradedHodgeStructure":
        return GradedHodgeStructure(self.weight, dict(self.dims))

    def to_dict(self) -> Dict:
        out: Dict = {
            "weight": self.weight,
            "dims": [[p, q, h] for (p, q), h in sorted(self.dims.items())],
        }
        if self.grading is not None:
            out["grading"] = self.grading.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: Dict) -> "GradedHodgeStructure":
        dims = {(int(p), int(q)): int(h) for p, q, h in data.get("dims", [])}
        grading = None
        if data.get("grading") is not None:
            pieces: Dict[PieceKey, Dict[Bidegree, int]] = {}
            for j, sign, p, q, h in data["grading"]["pieces"]:
                piece = pieces.setdefault((int(j), Sign(sign)), {})
                piece[(int(p), int(q))] = piece.get((int(p), int(q)), 0) + int(h)
            grading = Grading(int(data["grading"]["m"]), pieces)
        return cls(int(data["weight"]), dims, grading)


@dataclass(frozen=True)
class FiltrationSignature:
    f: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.f) - 1

    @property
    def total(self) -> int:
        return self.f[0] if self.f else 0

    def hodge_numbers(self) -> Tuple[int, ...]:
        """Graded dimensions h^{p,k-p} = f^p - f^{p+1}, listed p = 0..k."""
        padded = self.f + (0,)
        return tuple(padded[p] - padded[p + 1] for p in range(len(self.f)))


class CMState(str, Enum):
    CM = "CM"
    NOT_CM = "NotCM"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CMStatus:
    state: CMState = CMState.UNKNOWN
    provenance: Tuple[str, ...] = ()

    @classmethod
    def asserted(cls, state: CMState, label: str = "leaf") -> "CMStatus":
        return cls(state, (f"leaf assertion {label}: {state.value}",))

    def to_dict(self) -> Dict:
        return {"state": self.state.value, "provenance": list(self.provenance)}


@dataclass(frozen=True)
class HodgeDiamondFamily:
    """
    Cohomology of a smooth projective variety of dimension ``dim`` level by level.

    With ``poincare_dual`` set only the levels 0..dim are stored and the upper half is derived
    through the Lefschetz isomorphism H^{2n-k} = H^k(-(n-k)), which carries any grading along.
    ``primitive`` marks the primitive parts P^k (k <= dim) returned by primitive_part.
    """

    dim: int
    levels: Tuple[GradedHodgeStructure, ...]
    poincare_dual: bool = True
    connected: bool = True
    primitive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        expected = self.dim + 1 if (self.poincare_dual or self.primitive) else 2 * self.dim + 1
        if self.dim < 0 or len(self.levels) != expected:
            raise GradingMismatch(f"dimension {self.dim} needs {expected} stored levels, got {len(self.levels)}")
        for k, level in enumerate(self.levels):
            if level.weight != k:
                raise GradingMismatch(f"level {k} has weight {level.weight}")
        if self.connected and not self.primitive and self.levels[0].h(0, 0) != 1:
            raise GradingMismatch(f"connected family needs h^{{0,0}} = 1, got {self.levels[0].h(0, 0)}")
        if not self.poincare_dual and not self.primitive:
            for k in range(self.dim):
                lower, upper = self.levels[k], self.levels[2 * self.dim - k]
                if lower.twisted(self.dim - k).dims != upper.dims:
                    raise PoincareDualityViolation(f"level {2 * self.dim - k} is not dual to level {k}")

    def level(self, k: int) -> GradedHodgeStructure:
        n = self.dim
        if k < 0 or k > 2 * n:
            return GradedHodgeStructure(max(k, 0))
        if k < len(self.levels):
            return self.levels[k]
        if self.primitive:
            return GradedHodgeStructure(k)
        return self.levels[2 * n - k].twisted(k - n)

    def all_levels(self) -> List[GradedHodgeStructure]:
        return [self.level(k) for k in range(2 * self.dim + 1)]

    @property
    def is_empty(self) -> bool:
        return all(level.is_zero for level in self.levels)

    def to_dict(self) -> Dict:
        return {
            "dim": self.dim,
            "connected": self.connected,
            "primitive": self.primitive,
            "levels": [level.to_dict() for level in self.levels],
        }


@dataclass(frozen=True)
class CYWithInvolution:
    """
    Calabi-Yau n-fold with an involution: sign-graded levels 0..n, the Hodge data of the
    fixed divisor R (dimension n-1, possibly empty) and a CM status per level.
    """

    name: str
    dim: int
    levels: Tuple[GradedHodgeStructure, ...]
    ramification: HodgeDiamondFamily
    cm: Tuple[CMStatus, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        if not self.cm:
            object.__setattr__(self, "cm", tuple(CMStatus() for _ in self.levels))
        else:
            object.__setattr__(self, "cm", tuple(self.cm))

    def diamond(self) -> HodgeDiamondFamily:
        return HodgeDiamondFamily(self.dim, self.levels, poincare_dual=True, connected=True)

    def level(self, k: int) -> GradedHodgeStructure:
        return self.diamond().level(k)

    def cm_at(self, k: int) -> CMStatus:
        if k <= self.dim:
            return self.cm[k]
        # upper levels are Tate twists of lower ones
        return self.cm[2 * self.dim - k]

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "levels": [level.to_dict() for level in self.levels],
            "ramification": self.ramification.to_dict(),
            "cm": [status.to_dict() for status in self.cm],
        }


@dataclass(frozen=True)
class BVStepReport:
    output: CYWithInvolution
    kunneth: Tuple[GradedHodgeStructure, ...]
    invariant: Tuple[GradedHodgeStructure, ...]
    exceptional: Tuple[GradedHodgeStructure, ...]
    cm_trace: Tuple[CMStatus, ...]

    def to_dict(self) -> Dict:
        return {
            "output": self.output.to_dict(),
            "kunneth": [level.to_dict() for level in self.kunneth],
            "invariant": [level.to_dict() for level in self.invariant],
            "exceptional": [level.to_dict() for level in self.exceptional],
            "cm_trace": [status.to_dict() for status in self.cm_trace],
        }


@dataclass(frozen=True)
class CyclicCoverSpec:
    """
    The cover y^m = prod (x - a_i)^{d_i} of P^1, the point at infinity included among the d_i.
    """

    m: int
    branch_exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "branch_exponents", tuple(int(d) for d in self.branch_exponents))
        if self.m < 2:
            raise DegenerateSpec(f"cover degree must be at least 2, got {self.m}")
        if any(d < 1 or d > self.m for d in self.branch_exponents):
            raise DegenerateSpec(f"branch exponents must lie in 1..{self.m}, got {self.branch_exponents}")
        if sum(self.branch_exponents) % self.m:
            raise DegenerateSpec(f"branch exponents {self.branch_exponents} do not sum to 0 mod {self.m}")
        if len(self.effective_exponents) < 3:
            raise DegenerateSpec(f"need at least 3 effective branch points, got {self.effective_exponents}")

    @property
    def effective_exponents(self) -> Tuple[int, ...]:
        return tuple(d for d in self.branch_exponents if d % self.m)


@dataclass(frozen=True)
class EigenTable:
    """
    Per character index j = 1..m-1 the pair (h^{1,0}_j, h^{0,1}_j) of a curve with a Z/m action.
    """

    m: int
    entries: Tuple[Tuple[int, int], ...]

    def h10(self, j: int) -> int:
        j %= self.m
        return 0 if j == 0 else self.entries[j - 1][0]

    def h01(self, j: int) -> int:
        j %= self.m
        return 0 if j == 0 else self.entries[j - 1][1]

    @property
    def genus(self) -> int:
        return sum(h10 for h10, _ in self.entries)

    @property
    def is_zero(self) -> bool:
        return all(h10 == 0 and h01 == 0 for h10, h01 in self.entries)

    def r_values(self) -> Tuple[int, ...]:
        """r_n = h^{1,0}_{m-n} for n = 1..m-1."""
        return tuple(self.h10(self.m - n) for n in range(1, self.m))

    def as_hodge(self) -> GradedHodgeStructure:
        """The Z/m-graded weight-1 structure the table describes."""
        pieces = {(j, Sign.NONE): {(1, 0): self.h10(j), (0, 1): self.h01(j)} for j in range(1, self.m)}
        return GradedHodgeStructure(1, {(1, 0): self.genus, (0, 1): self.genus}, Grading(self.m, pieces))

    def to_dict(self) -> Dict:
        return {
            "m": self.m,
            "genus": self.genus,
            "entries": [[j, h10, h01] for j, (h10, h01) in enumerate(self.entries, start=1)],
            "r_values": list(self.r_values()),
        }


@dataclass(frozen=True)
class DescentReport:
    total: FiltrationSignature
    summands: Tuple[FiltrationSignature, ...]
    summand_hodge_numbers: Tuple[Tuple[int, ...], ...]
    feasible: bool = True


@dataclass(frozen=True)
class SurfaceAssembly:
    """
    Core weight-2 structure of a Viehweg-Zuo step and its (1,1) correction c = dim W - dim W'.
    """

    core: GradedHodgeStructure
    correction: Optional[int] = None
    final: Optional[GradedHodgeStructure] = None

    def to_dict(self) -> Dict:
        return {
            "core": self.core.to_dict(),
            "correction": self.correction,
            "final": self.final.to_dict() if self.final is not None else None,
        }


@dataclass(frozen=True)
class FermatClass:
    """
    The one-dimensional character (a, b) of H^1 of the Fermat curve of degree m.
    """

    m: int
    a: int
    b: int

    @property
    def holomorphic(self) -> bool:
        return self.a + self.b < self.m

    @property
    def bidegree(self) -> Bidegree:
        return (1, 0) if self.holomorphic else (0, 1)

    @property
    def diagonal_character(self) -> int:
        return (self.a + self.b) % self.m

    @property
    def second_character(self) -> int:
        return (self.m - self.b) % self.m

    def beta_exponents(self) -> Tuple[Fraction, Fraction]:
        return Fraction(self.a, self.m), Fraction(self.b, self.m)


@dataclass(frozen=True)
class VZTowerReport:
    """
    One run of the Viehweg-Zuo bookkeeping for degree m: the first-step curve, the Fermat
    curve, the surface assembly checked against the hypersurface oracle and, from n = 2 on,
    the threefold assembly.
    """

    spec: CyclicCoverSpec
    n: int
    base: EigenTable
    fermat: EigenTable
    surface: SurfaceAssembly
    surface_oracle: Tuple[int, ...]
    threefold: Optional[GradedHodgeStructure] = None

    @property
    def m(self) -> int:
        return self.spec.m

    def to_dict(self) -> Dict:
        return {
            "m": self.m,
            "n": self.n,
            "branch_exponents": list(self.spec.branch_exponents),
            "base": self.base.to_dict(),
            "fermat": self.fermat.to_dict(),
            "surface": self.surface.to_dict(),
            "surface_oracle": list(self.surface_oracle),
            "threefold": self.threefold.to_dict() if self.threefold is not None else None,
        }
