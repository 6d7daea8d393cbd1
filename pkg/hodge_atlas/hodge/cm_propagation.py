"""
CM-flag propagation through sums, tensor products and Tate twists of Hodge structures.

Rules, applied bottom-up:

* a structure concentrated in one bidegree (p, p), or zero, is CM whatever was asserted;
* a sum or tensor product is NotCM if some part is NotCM, CM if every part is CM,
  and Unknown otherwise;
* a Tate twist keeps the status of its argument.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Tuple

from loguru import logger

from hodge_atlas.hodge.hodge_calculus import direct_sum, is_pp_concentrated, tate_twist, tensor
from hodge_atlas.models.domain_models import CMState, CMStatus, GradedHodgeStructure


class HodgeExpression(ABC):
    """Node of a composition tree whose leaves carry asserted CM statuses."""

    label: str = ""

    @abstractmethod
    def structure(self) -> GradedHodgeStructure:
        pass

    @abstractmethod
    def children(self) -> Tuple["HodgeExpression", ...]:
        pass


@dataclass(frozen=True)
class Leaf(HodgeExpression):
    hs: GradedHodgeStructure
    status: CMStatus
    label: str = "leaf"

    def structure(self) -> GradedHodgeStructure:
        return self.hs

    def children(self) -> Tuple[HodgeExpression, ...]:
        return ()


@dataclass(frozen=True)
class Sum(HodgeExpression):
    terms: Tuple[HodgeExpression, ...]
    label: str = "sum"

    def structure(self) -> GradedHodgeStructure:
        return direct_sum(*(t.structure() for t in self.terms))

    def children(self) -> Tuple[HodgeExpression, ...]:
        return self.terms


@dataclass(frozen=True)
class Tensor(HodgeExpression):
    factors: Tuple[HodgeExpression, ...]
    label: str = "tensor"

    def structure(self) -> GradedHodgeStructure:
        out = self.factors[0].structure()
        for f in self.factors[1:]:
            out = tensor(out.without_grading(), f.structure().without_grading())
        return out

    def children(self) -> Tuple[HodgeExpression, ...]:
        return self.factors


@dataclass(frozen=True)
class Twist(HodgeExpression):
    child: HodgeExpression
    n: int = 1
    label: str = "twist"

    def structure(self) -> GradedHodgeStructure:
        return tate_twist(self.child.structure(), self.n)

    def children(self) -> Tuple[HodgeExpression, ...]:
        return (self.child,)


def _combine(kind: str, label: str, statuses: Tuple[CMStatus, ...]) -> CMStatus:
    states = [s.state for s in statuses]
    provenance = tuple(p for s in statuses for p in s.provenance)
    if CMState.NOT_CM in states:
        return CMStatus(CMState.NOT_CM, provenance + (f"{kind} {label}: a part is NotCM",))
    if all(state is CMState.CM for state in states):
        return CMStatus(CMState.CM, provenance + (f"{kind} {label}: all parts CM",))
    return CMStatus(CMState.UNKNOWN, provenance + (f"{kind} {label}: undetermined part",))


def cm_propagate(expr: HodgeExpression) -> CMStatus:
    """Propagate CM statuses from the leaves of ``expr`` to its root."""
    hs = expr.structure()
    if is_pp_concentrated(hs):
        where = "zero structure" if hs.is_zero else f"bidegree ({next(iter(hs.dims))[0]},{next(iter(hs.dims))[1]})"
        return CMStatus(CMState.CM, (f"bidegree-(p,p) rule at {expr.label}: {where}",))
    if isinstance(expr, Leaf):
        if not expr.status.provenance and expr.status.state is not CMState.UNKNOWN:
            return CMStatus.asserted(expr.status.state, expr.label)
        return expr.status
    if isinstance(expr, Twist):
        inner = cm_propagate(expr.child)
        return CMStatus(inner.state, inner.provenance + (f"twist {expr.label} by {expr.n}: unchanged",))
    kind = "tensor" if isinstance(expr, Tensor) else "sum"
    status = _combine(kind, expr.label, tuple(cm_propagate(c) for c in expr.children()))
    logger.debug(f"{kind} {expr.label} -> {status.state.value}")
    return status
