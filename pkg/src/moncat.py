"""
WHQ Engine - Morphism Engine

Linear maps H^⊗m -> H^⊗n of the strict symmetric monoidal category of
finite-dimensional vector spaces, with composition, tensor product, the
swap braiding, convolution and idempotent splitting.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import TYPE_CHECKING

from .errors import ArityMismatch, MixedFields, NotIdempotent, PositionOutOfRange
from .exact import Field
from .matrix import ExactMatrix

if TYPE_CHECKING:
    from .structure import WeakStructure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mor:
    """A map H^⊗src_arity -> H^⊗dst_arity over an H of dimension ``dim``."""

    src_arity: int
    dst_arity: int
    dim: int
    matrix: ExactMatrix

    def __post_init__(self):
        expected = (self.dim ** self.dst_arity, self.dim ** self.src_arity)
        if self.matrix.shape != expected:
            raise ArityMismatch(
                f"matrix {self.matrix.shape} does not fit arity {self.src_arity}->{self.dst_arity} at d={self.dim}"
            )

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def arity(self) -> str:
        return f"{self.src_arity}->{self.dst_arity}"

    def __repr__(self):
        return f"Mor({self.arity}, d={self.dim}, nnz={len(self.matrix.entries)})"


@dataclass(frozen=True)
class Splitting:
    """Factorization nabla = inj ∘ proj with proj ∘ inj = id_rank."""

    nabla: ExactMatrix
    rank: int
    inj: ExactMatrix
    proj: ExactMatrix


def identity(n: int, dim: int, field: Field) -> Mor:
    return Mor(n, n, dim, ExactMatrix.identity(dim ** n, field))


def zero(src: int, dst: int, dim: int, field: Field) -> Mor:
    return Mor(src, dst, dim, ExactMatrix.zeros(dim ** dst, dim ** src, field))


def swap(total_arity: int, pos: int, dim: int, field: Field) -> Mor:
    """Exchange tensor factors ``pos`` and ``pos + 1`` (1-based) of H^⊗total_arity."""
    if not 1 <= pos < total_arity:
        raise PositionOutOfRange(f"swap position {pos} outside 1..{total_arity - 1}")
    images = []
    for index in range(dim ** total_arity):
        digits = []
        rest = index
        for _ in range(total_arity):
            rest, digit = divmod(rest, dim)
            digits.append(digit)
        digits.reverse()
        digits[pos - 1], digits[pos] = digits[pos], digits[pos - 1]
        images.append(reduce(lambda acc, x: acc * dim + x, digits, 0))
    return Mor(total_arity, total_arity, dim, ExactMatrix.permutation(images, field))


def _compose2(f: Mor, g: Mor) -> Mor:
    if f.dim != g.dim:
        raise ArityMismatch(f"dimension {f.dim} vs {g.dim}")
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    if g.dst_arity != f.src_arity:
        raise ArityMismatch(f"cannot compose {f.arity} after {g.arity}")
    return Mor(g.src_arity, f.dst_arity, f.dim, f.matrix @ g.matrix)


def compose(*maps: Mor) -> Mor:
    """maps[0] ∘ maps[1] ∘ ... (rightmost applied first)."""
    if not maps:
        raise ArityMismatch("empty composite")
    return reduce(_compose2, maps)


def _tensor2(f: Mor, g: Mor) -> Mor:
    if f.dim != g.dim:
        raise ArityMismatch(f"dimension {f.dim} vs {g.dim}")
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    return Mor(f.src_arity + g.src_arity, f.dst_arity + g.dst_arity, f.dim, f.matrix.kron(g.matrix))


def tensor(*maps: Mor) -> Mor:
    if not maps:
        raise ArityMismatch("empty tensor product")
    return reduce(_tensor2, maps)


def transpose(f: Mor) -> Mor:
    return Mor(f.dst_arity, f.src_arity, f.dim, f.matrix.transpose())


def convolve(S: "WeakStructure", f: Mor, g: Mor) -> Mor:
    """f ∗ g = μ ∘ (f ⊗ g) ∘ δ."""
    for m in (f, g):
        if (m.src_arity, m.dst_arity) != (1, 1):
            raise ArityMismatch(f"convolution needs endomorphisms of H, got {m.arity}")
    return compose(S.mu, tensor(f, g), S.delta)


def mor_equal(f: Mor, g: Mor) -> bool:
    return (
        f.src_arity == g.src_arity
        and f.dst_arity == g.dst_arity
        and f.dim == g.dim
        and f.matrix == g.matrix
    )


def invert(f: Mor, label: str = "map") -> Mor:
    if f.src_arity != f.dst_arity:
        raise ArityMismatch(f"cannot invert non-square {f.arity}")
    return Mor(f.dst_arity, f.src_arity, f.dim, f.matrix.inverse(label))


def split_matrix(nabla: ExactMatrix) -> Splitting:
    """Split an idempotent square matrix through its image."""
    if nabla.rows != nabla.cols:
        raise NotIdempotent(f"{nabla.rows}x{nabla.cols} is not square")
    if nabla @ nabla != nabla:
        raise NotIdempotent("map is not idempotent")
    inj, proj = nabla.rank_factorization()
    logger.debug(f"split idempotent of size {nabla.rows}: rank {inj.cols}")
    return Splitting(nabla=nabla, rank=inj.cols, inj=inj, proj=proj)


def split_idempotent(nabla: Mor) -> Splitting:
    if nabla.src_arity != nabla.dst_arity:
        raise NotIdempotent(f"{nabla.arity} is not an endomorphism")
    return split_matrix(nabla.matrix)
