"""
Randomized self-check of the descent lemmas against brute-force elimination.
"""

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

from loguru import logger

from hodge_atlas.config.hodge_constants import CyclotomicDefaults
from hodge_atlas.exceptions import HodgeAtlasException, NotElementary
from hodge_atlas.linalg.cyclotomic import CyclotomicNumber, euler_phi
from hodge_atlas.linalg.hermitian import HermitianForm, tensor_hermitian
from hodge_atlas.linalg.lemmas import (
    gram_schmidt,
    hodge_basis_descent,
    ortho_complement_descend,
    rank1_factor,
    summand_basis_extract,
)
from hodge_atlas.linalg.matrices import (
    SubspaceBasis,
    Vector,
    add,
    conj_transpose,
    in_span,
    kron_vector,
    matmul,
    outer,
    rank,
    same_span,
    scale,
    zero_vector,
)


class SelftestFailure(Exception):
    pass


def _expect(condition: bool, detail: str) -> None:
    if not condition:
        raise SelftestFailure(detail)


class RandomField:
    """Small random elements, vectors and forms over Q(zeta_m)."""

    def __init__(self, m: int, rng: random.Random, spread: int = 3):
        self.m = m
        self.rng = rng
        self.spread = spread

    def element(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.m, [self.rng.randint(-self.spread, self.spread) for _ in range(euler_phi(self.m))])

    def nonzero(self) -> CyclotomicNumber:
        while True:
            x = self.element()
            if not x.is_zero:
                return x

    def vector(self, n: int) -> Vector:
        return tuple(self.element() for _ in range(n))

    def independent(self, count: int, n: int) -> List[Vector]:
        while True:
            vs = [self.vector(n) for _ in range(count)]
            if rank(vs) == count:
                return vs

    def positive_form(self, n: int) -> HermitianForm:
        """B B^* for a random invertible B."""
        b = self.independent(n, n)
        return HermitianForm(matmul(b, conj_transpose(b)))


@dataclass
class SelftestReport:
    seed: int
    passed: Dict[str, int] = field(default_factory=dict)
    failures: List[Tuple[str, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "passed": dict(sorted(self.passed.items())),
            "failures": [{"lemma": name, "conductor": m, "detail": detail} for name, m, detail in self.failures],
            "ok": self.ok,
        }


def _check_rank1(f: RandomField, n: int) -> None:
    alpha = (f.nonzero(),) + f.vector(n - 1)
    beta = (f.nonzero(),) + f.vector(n - 1)
    a = outer(alpha, beta)
    x, y = rank1_factor(a)
    _expect(outer(x, y) == a, "outer product of the factors differs from the input")
    if n >= 2:
        u, v = f.independent(2, n)
        p, q = f.independent(2, n)
        wide = tuple(add(r1, r2) for r1, r2 in zip(outer(u, p), outer(v, q)))
        _expect(rank(wide) == 2, "oracle rank of u p^T + v q^T is not 2")
        try:
            rank1_factor(wide)
        except NotElementary:
            return
        raise SelftestFailure("rank-2 matrix accepted as elementary")


def _check_gram_schmidt(f: RandomField, n: int) -> None:
    h = f.positive_form(n)
    count = f.rng.randint(1, n)
    xs = f.independent(count, n)
    vs = gram_schmidt(SubspaceBasis(tuple(xs), n), h).vectors
    for i in range(count):
        for j in range(i):
            _expect(h.evaluate(vs[i], vs[j]).is_zero, "output is not orthogonal")
        # unitriangular: v_i - x_i lies in span(x_1..x_{i-1})
        _expect(in_span(xs[:i], add(vs[i], scale(-1, xs[i]))), "change of basis is not unitriangular")


def _check_complement(f: RandomField, n: int) -> None:
    h = f.positive_form(n)
    d = f.rng.randint(0, n)
    u1 = gram_schmidt(SubspaceBasis(tuple(f.independent(d, n)), n), h) if d else SubspaceBasis((), n)
    out = ortho_complement_descend(SubspaceBasis.standard(n), u1, h)
    _expect(out.dim + u1.dim == n, "dimensions do not add up")
    for v in out.vectors:
        for u in u1.vectors:
            _expect(h.evaluate(v, u).is_zero, "complement is not orthogonal to U1")
    _expect(rank(list(out.vectors) + list(u1.vectors)) == n, "complement and U1 do not span")


def _check_summands(f: RandomField, n: int) -> None:
    n1 = f.rng.randint(0, n)
    n2 = n - n1
    d1 = f.rng.randint(0, n1)
    d2 = f.rng.randint(0, n2)
    p1 = f.independent(d1, n1) if d1 else []
    p2 = f.independent(d2, n2) if d2 else []
    vectors = [tuple(v) + zero_vector(n2) for v in p1] + [zero_vector(n1) + tuple(v) for v in p2]
    first, second, splits = summand_basis_extract((n1, n2), SubspaceBasis(tuple(vectors), n))
    _expect(splits, "split subspace reported as non-split")
    _expect(same_span(first.vectors, p1) and same_span(second.vectors, p2), "projections differ from the summands")


def _check_descent(f: RandomField, n: int) -> None:
    h = f.positive_form(n)
    orthogonal = gram_schmidt(SubspaceBasis(tuple(f.independent(n, n)), n), h).vectors
    weight = f.rng.randint(0, min(n - 1, 3))
    cuts = sorted(f.rng.sample(range(1, n), weight)) if weight else []
    bounds = [0] + cuts + [n]
    # piece (p, k-p) holds orthogonal[bounds[k-p]:bounds[k-p+1]]
    pieces = {(weight - i, i): list(orthogonal[bounds[i]:bounds[i + 1]]) for i in range(weight + 1)}
    filtration = []
    for p in range(weight + 1):
        span = [v for q in range(p, weight + 1) for v in pieces[(q, weight - q)]]
        mixed = [span[0]] + [add(v, scale(f.element(), span[0])) for v in span[1:]] if span else []
        filtration.append(SubspaceBasis.spanned_by(mixed, n))
    result = hodge_basis_descent(filtration, h, weight)
    for bideg, expected in pieces.items():
        _expect(same_span(result[bideg].vectors, expected), f"piece {bideg} differs")


def _check_tensor_form(f: RandomField, n: int) -> None:
    n1 = max(1, n // 2)
    n2 = max(1, n - n1)
    h1, h2 = f.positive_form(n1), f.positive_form(n2)
    h = tensor_hermitian(h1, h2)
    u1, v1, u2, v2 = f.vector(n1), f.vector(n1), f.vector(n2), f.vector(n2)
    lhs = h.evaluate(kron_vector(u1, u2), kron_vector(v1, v2))
    _expect(lhs == h1.evaluate(u1, v1) * h2.evaluate(u2, v2), "tensor form is not multiplicative")


CHECKS: Dict[str, Callable[[RandomField, int], None]] = {
    "rank1_factor": _check_rank1,
    "gram_schmidt": _check_gram_schmidt,
    "ortho_complement_descend": _check_complement,
    "summand_basis_extract": _check_summands,
    "hodge_basis_descent": _check_descent,
    "tensor_hermitian": _check_tensor_form,
}


def run_selftest(
    instances: int,
    seed: int = 0,
    conductors: Sequence[int] = CyclotomicDefaults.SELFTEST_CONDUCTORS,
    max_dim: int = CyclotomicDefaults.SELFTEST_MAX_DIM,
) -> SelftestReport:
    """
    Run ``instances`` random checks per lemma and conductor.

    Returns:
        Pass counts per lemma and a list of (lemma, conductor, detail) failures
    """
    rng = random.Random(seed)
    report = SelftestReport(seed=seed, passed={name: 0 for name in CHECKS})
    for m in conductors:
        field_ = RandomField(m, rng)
        for name, check in CHECKS.items():
            for _ in range(instances):
                n = rng.randint(1, max_dim)
                try:
                    check(field_, n)
                    report.passed[name] += 1
                except (SelftestFailure, HodgeAtlasException) as e:
                    logger.warning(f"{name} over Q(zeta_{m}), n={n}: {e}")
                    report.failures.append((name, m, str(e)))
    logger.info(f"lemma self-check seed={seed}: {sum(report.passed.values())} passed, {len(report.failures)} failed")
    return report
