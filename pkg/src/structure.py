"""
WHQ Engine - Structure Model

The quintuple (H, η, μ, ε, δ) with optional antipode λ, validation of the
antipode-free premises, the example builders (group, groupoid and IP-loop
algebras), dualization and seeded single-entry perturbation.
"""
import itertools
import logging
import random
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .checks import equation, evaluate
from .errors import ArityMismatch, MixedFields, NotAGroup, NotAGroupoid, NotAUnitalMagma, NotIPLoop
from .exact import QQ, Field, Scalar
from .matrix import ExactMatrix
from .models import PremiseReport
from .moncat import Mor, compose, identity, swap, tensor, transpose

logger = logging.getLogger(__name__)

SYMMETRIC_BASE_NOTE = "symmetric base: c⁻¹ is evaluated as the swap c"


class Mode(str, Enum):
    QUASIGROUP = "quasigroup"
    COQUASIGROUP = "coquasigroup"

    @property
    def opposite(self) -> "Mode":
        return Mode.COQUASIGROUP if self is Mode.QUASIGROUP else Mode.QUASIGROUP


@dataclass(frozen=True)
class WeakStructure:
    """Structure constants of a candidate weak Hopf (co)quasigroup."""

    dim: int
    eta: Mor
    mu: Mor
    eps: Mor
    delta: Mor
    antipode: Optional[Mor] = None
    mode: Mode = Mode.QUASIGROUP
    basis: Optional[Tuple[str, ...]] = None
    name: str = ""

    def __post_init__(self):
        expected = {"eta": (0, 1), "mu": (2, 1), "eps": (1, 0), "delta": (1, 2), "antipode": (1, 1)}
        field = self.eta.field
        for attr, (src, dst) in expected.items():
            m = getattr(self, attr)
            if m is None:
                continue
            if (m.src_arity, m.dst_arity) != (src, dst) or m.dim != self.dim:
                raise ArityMismatch(f"{attr} must be {src}->{dst} at d={self.dim}, got {m.arity} at d={m.dim}")
            if m.field != field:
                raise MixedFields(f"{attr} over {m.field}, eta over {field}")
        if self.basis is not None and len(self.basis) != self.dim:
            raise ValueError(f"{len(self.basis)} basis labels for dimension {self.dim}")

    @property
    def field(self) -> Field:
        return self.eta.field

    def id(self, n: int = 1) -> Mor:
        return identity(n, self.dim, self.field)

    def swap(self, total: int = 2, pos: int = 1) -> Mor:
        return swap(total, pos, self.dim, self.field)

    @cached_property
    def H(self) -> Mor:
        return self.id(1)

    @cached_property
    def c(self) -> Mor:
        return self.swap(2, 1)

    @cached_property
    def unit_pair(self) -> Mor:
        """δ∘η : K -> H⊗H."""
        return compose(self.delta, self.eta)

    @cached_property
    def counit_pair(self) -> Mor:
        """ε∘μ : H⊗H -> K."""
        return compose(self.eps, self.mu)

    @cached_property
    def eta_eps(self) -> Mor:
        return compose(self.eta, self.eps)

    def with_antipode(self, antipode: Optional[Mor]) -> "WeakStructure":
        return replace(self, antipode=antipode)

    def label(self, index: int) -> str:
        return self.basis[index] if self.basis else f"e{index}"

    def __repr__(self):
        return f"WeakStructure({self.name or 'unnamed'}, d={self.dim}, {self.mode.value}, {self.field})"


# ---------------------------------------------------------------------------
# Premises
# ---------------------------------------------------------------------------

DUAL_PREMISE_LINES = {
    "unit-left": "counit-left",
    "unit-right": "counit-right",
    "counit-left": "unit-left",
    "counit-right": "unit-right",
    "coassociative": "associative",
    "associative": "coassociative",
    "a1": "b1",
    "b1": "a1",
    "a2-assoc": "b3-coassoc",
    "a2-delta": "b3-mu",
    "a2-delta-c": "b3-mu-c",
    "a3-mu": "b2-delta",
    "a3-mu-c": "b2-delta-c",
    "b3-coassoc": "a2-assoc",
    "b3-mu": "a2-delta",
    "b3-mu-c": "a2-delta-c",
    "b2-delta": "a3-mu",
    "b2-delta-c": "a3-mu-c",
}


def dual_premise_line(line_id: str) -> str:
    return DUAL_PREMISE_LINES[line_id]


def premise_identities(S: WeakStructure) -> list:
    H, c, mu, delta, eta, eps = S.H, S.c, S.mu, S.delta, S.eta, S.eps
    u, e = S.unit_pair, S.counit_pair

    def multiplicative_delta():
        return compose(tensor(mu, mu), tensor(H, c, H), tensor(delta, delta))

    lines = [
        equation("unit-left", lambda: compose(mu, tensor(eta, H)), lambda: H),
        equation("unit-right", lambda: compose(mu, tensor(H, eta)), lambda: H),
        equation("counit-left", lambda: compose(tensor(eps, H), delta), lambda: H),
        equation("counit-right", lambda: compose(tensor(H, eps), delta), lambda: H),
    ]
    eps_assoc = lambda: compose(e, tensor(mu, H))
    eps_split = lambda: compose(tensor(e, e), tensor(H, delta, H))
    eps_split_c = lambda: compose(tensor(e, e), tensor(H, compose(c, delta), H))
    delta_unit = lambda: compose(tensor(delta, H), u)
    mu_unit = lambda: compose(tensor(H, mu, H), tensor(u, u))
    mu_unit_c = lambda: compose(tensor(H, compose(mu, c), H), tensor(u, u))

    if S.mode is Mode.QUASIGROUP:
        lines += [
            equation("coassociative", lambda: compose(tensor(delta, H), delta), lambda: compose(tensor(H, delta), delta)),
            equation("a1", lambda: compose(delta, mu), multiplicative_delta),
            equation("a2-assoc", eps_assoc, lambda: compose(e, tensor(H, mu))),
            equation("a2-delta", eps_assoc, eps_split),
            equation("a2-delta-c", eps_assoc, eps_split_c),
            equation("a3-mu", delta_unit, mu_unit),
            equation("a3-mu-c", delta_unit, mu_unit_c),
        ]
    else:
        lines += [
            equation("associative", lambda: compose(mu, tensor(mu, H)), lambda: compose(mu, tensor(H, mu))),
            equation("b1", lambda: compose(delta, mu), multiplicative_delta),
            equation("b2-delta", eps_assoc, eps_split),
            equation("b2-delta-c", eps_assoc, eps_split_c),
            equation("b3-coassoc", delta_unit, lambda: compose(tensor(H, delta), u)),
            equation("b3-mu", delta_unit, mu_unit),
            equation("b3-mu-c", delta_unit, mu_unit_c),
        ]
    return lines


def validate_premises(S: WeakStructure, max_workers: Optional[int] = None) -> PremiseReport:
    """Exact verdicts for the magma/comonoid laws and (a1)-(a3) or (b1)-(b3)."""
    report = PremiseReport(
        suite="premises",
        mode=S.mode.value,
        notes=[SYMMETRIC_BASE_NOTE],
        lines=evaluate(premise_identities(S), max_workers),
    )
    if not report.passed:
        logger.warning(f"{S!r}: premises fail at {', '.join(report.failures())}")
    return report


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def _hopf_like(
    dim: int,
    products: Dict[Tuple[int, int], int],
    units: Sequence[int],
    inverse: Optional[Sequence[int]],
    field: Field,
    labels: Optional[Sequence[str]],
    name: str,
) -> WeakStructure:
    """Algebra with group-like basis: δ(x) = x⊗x, ε(x) = 1, λ(x) = inverse[x] when given."""
    one = field.one
    eta = ExactMatrix(dim, 1, field, {(x, 0): one for x in units})
    mu = ExactMatrix(dim, dim * dim, field, {(z, a * dim + b): one for (a, b), z in products.items()})
    eps = ExactMatrix(1, dim, field, {(0, x): one for x in range(dim)})
    delta = ExactMatrix(dim * dim, dim, field, {(x * dim + x, x): one for x in range(dim)})
    lam = Mor(1, 1, dim, ExactMatrix.permutation(inverse, field)) if inverse is not None else None
    return WeakStructure(
        dim=dim,
        eta=Mor(0, 1, dim, eta),
        mu=Mor(2, 1, dim, mu),
        eps=Mor(1, 0, dim, eps),
        delta=Mor(1, 2, dim, delta),
        antipode=lam,
        mode=Mode.QUASIGROUP,
        basis=tuple(labels) if labels else None,
        name=name,
    )


def _check_square_table(table: Sequence[Sequence[int]], error) -> int:
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise error("table must be a non-empty square")
    if any(not 0 <= x < n for row in table for x in row):
        raise error("table entries out of range")
    return n


def _two_sided_identity(table: Sequence[Sequence[int]]) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def group_algebra(
    table: Sequence[Sequence[int]],
    field: Field = QQ,
    labels: Optional[Sequence[str]] = None,
    name: str = "group",
) -> WeakStructure:
    """k[G] from the multiplication table table[a][b] = a·b."""
    n = _check_square_table(table, NotAGroup)
    e = _two_sided_identity(table)
    if e is None:
        raise NotAGroup("no two-sided identity")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"not associative at ({a}, {b}, {c})")
    inverse = []
    for a in range(n):
        inv = next((b for b in range(n) if table[a][b] == e and table[b][a] == e), None)
        if inv is None:
            raise NotAGroup(f"element {a} has no inverse")
        inverse.append(inv)
    products = {(a, b): table[a][b] for a in range(n) for b in range(n)}
    logger.info(f"group algebra of order {n} built")
    return _hopf_like(n, products, [e], inverse, field, labels, name)


def loop_algebra(
    latin: Sequence[Sequence[int]],
    field: Field = QQ,
    labels: Optional[Sequence[str]] = None,
    name: str = "loop",
) -> WeakStructure:
    """k[L] for an inverse-property loop given by its Latin square."""
    n = _check_square_table(latin, lambda m: NotIPLoop("latin-square", m))
    for i in range(n):
        if sorted(latin[i]) != list(range(n)):
            raise NotIPLoop("latin-square", f"row {i} repeats an element")
        if sorted(latin[j][i] for j in range(n)) != list(range(n)):
            raise NotIPLoop("latin-square", f"column {i} repeats an element")
    e = _two_sided_identity(latin)
    if e is None:
        raise NotIPLoop("identity")
    inverse = []
    for x in range(n):
        inv = next((y for y in range(n) if latin[x][y] == e), None)
        if inv is None or latin[inv][x] != e:
            raise NotIPLoop("two-sided-inverse", f"element {x}")
        for y in range(n):
            if latin[inv][latin[x][y]] != y or latin[latin[y][x]][inv] != y:
                raise NotIPLoop("inverse-property", f"x={x}, y={y}")
        inverse.append(inv)
    products = {(a, b): latin[a][b] for a in range(n) for b in range(n)}
    logger.info(f"IP loop algebra of order {n} built")
    return _hopf_like(n, products, [e], inverse, field, labels, name)


def magma_algebra(
    table: Sequence[Sequence[int]],
    field: Field = QQ,
    labels: Optional[Sequence[str]] = None,
    name: str = "magma",
) -> WeakStructure:
    """k[M] for a unital magma M, group-like coalgebra, no antipode.

    Always passes the quasigroup premises; whether an antipode exists is
    left to synthesis.
    """
    n = _check_square_table(table, NotAUnitalMagma)
    e = _two_sided_identity(table)
    if e is None:
        raise NotAUnitalMagma("no two-sided identity")
    products = {(a, b): table[a][b] for a in range(n) for b in range(n)}
    return _hopf_like(n, products, [e], None, field, labels, name)


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    name: str = ""


def groupoid_algebra(
    objects: int,
    arrows: Sequence[Arrow],
    composition: Sequence[Sequence[Optional[int]]],
    field: Field = QQ,
    name: str = "groupoid",
) -> WeakStructure:
    """k[G] for a finite groupoid; composition[g][h] is the index of g∘h or None."""
    n = len(arrows)
    if n == 0 or len(composition) != n or any(len(row) != n for row in composition):
        raise NotAGroupoid("composition must be an n x n table over the arrows")
    if any(not 0 <= a.source < objects or not 0 <= a.target < objects for a in arrows):
        raise NotAGroupoid("arrow endpoint outside the object range")
    for g, h in itertools.product(range(n), repeat=2):
        gh = composition[g][h]
        composable = arrows[g].source == arrows[h].target
        if composable != (gh is not None):
            raise NotAGroupoid(f"composition of {g} after {h} defined iff source(g) = target(h)")
        if gh is not None and (arrows[gh].source, arrows[gh].target) != (arrows[h].source, arrows[g].target):
            raise NotAGroupoid(f"{g}∘{h} has wrong endpoints")
    for g, h, k in itertools.product(range(n), repeat=3):
        gh, hk = composition[g][h], composition[h][k]
        if gh is not None and hk is not None and composition[gh][k] != composition[g][hk]:
            raise NotAGroupoid(f"not associative at ({g}, {h}, {k})")
    units = []
    for x in range(objects):
        unit = next(
            (
                i
                for i, a in enumerate(arrows)
                if a.source == a.target == x
                and all(composition[i][h] == h for h in range(n) if arrows[h].target == x)
                and all(composition[g][i] == g for g in range(n) if arrows[g].source == x)
            ),
            None,
        )
        if unit is None:
            raise NotAGroupoid(f"object {x} has no identity arrow")
        units.append(unit)
    inverse = []
    for g, a in enumerate(arrows):
        inv = next(
            (
                h
                for h in range(n)
                if composition[g][h] == units[a.target] and composition[h][g] == units[a.source]
            ),
            None,
        )
        if inv is None:
            raise NotAGroupoid(f"arrow {g} has no inverse")
        inverse.append(inv)
    products = {
        (g, h): composition[g][h] for g in range(n) for h in range(n) if composition[g][h] is not None
    }
    labels = [a.name for a in arrows] if all(a.name for a in arrows) else None
    logger.info(f"groupoid algebra with {objects} objects and {n} arrows built")
    return _hopf_like(n, products, units, inverse, field, labels, name)


def pair_groupoid(n: int) -> Tuple[List[Arrow], List[List[Optional[int]]]]:
    """Arrows e_ij (target i, source j) of the pair groupoid on n objects."""
    pairs = [(i, j) for i in range(n) for j in range(n)]
    arrows = [Arrow(source=j, target=i, name=f"e{i + 1}{j + 1}") for i, j in pairs]
    index = {p: k for k, p in enumerate(pairs)}
    composition = [
        [index[(i, l)] if j == k else None for (k, l) in pairs]
        for (i, j) in pairs
    ]
    return arrows, composition


def cyclic_group_table(n: int) -> List[List[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(n: int) -> Tuple[List[List[int]], List[str]]:
    """Table of S_n with (p·q)(i) = p(q(i)); identity first."""
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(i + 1) for i in p) for p in perms]
    return table, labels


def steiner_loop_table(triples: Sequence[Sequence[int]]) -> List[List[int]]:
    """Steiner loop of a Steiner triple system on points 1..v; 0 is the identity."""
    points = sorted({p for t in triples for p in t})
    if points != list(range(1, len(points) + 1)):
        raise NotIPLoop("steiner-triples", "points must be numbered 1..v")
    n = len(points) + 1
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        table[0][x] = table[x][0] = x
    third = {}
    for t in triples:
        a, b, c = t
        for x, y, z in ((a, b, c), (b, a, c), (a, c, b), (c, a, b), (b, c, a), (c, b, a)):
            if (x, y) in third:
                raise NotIPLoop("steiner-triples", f"pair {x},{y} lies on two triples")
            third[(x, y)] = z
    for x in range(1, n):
        for y in range(1, n):
            if x == y:
                table[x][y] = 0
            elif (x, y) in third:
                table[x][y] = third[(x, y)]
            else:
                raise NotIPLoop("steiner-triples", f"pair {x},{y} lies on no triple")
    return table


def trivial_structure(field: Field = QQ) -> WeakStructure:
    """H = K with every structure map equal to [1]."""
    return _hopf_like(1, {(0, 0): 0}, [0], [0], field, ["1"], "trivial")


# ---------------------------------------------------------------------------
# Dualization and perturbation
# ---------------------------------------------------------------------------

def _dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def dualize(S: WeakStructure) -> WeakStructure:
    """Structure on the dual space: every map transposed, roles swapped."""
    return WeakStructure(
        dim=S.dim,
        eta=transpose(S.eps),
        mu=transpose(S.delta),
        eps=transpose(S.eta),
        delta=transpose(S.mu),
        antipode=transpose(S.antipode) if S.antipode is not None else None,
        mode=S.mode.opposite,
        basis=tuple(_dual_label(x) for x in S.basis) if S.basis else None,
        name=_dual_label(S.name) if S.name else "",
    )


TARGETS = {
    "mult": "mu",
    "mu": "mu",
    "comult": "delta",
    "delta": "delta",
    "unit": "eta",
    "eta": "eta",
    "counit": "eps",
    "eps": "eps",
}


def _target_attr(target: str) -> str:
    try:
        return TARGETS[target]
    except KeyError:
        raise ValueError(f"unknown perturbation target {target!r}; use mult, comult, unit or counit") from None


def set_entry(S: WeakStructure, target: str, index: Tuple[int, int], value) -> WeakStructure:
    """Copy of S with one structure-constant entry replaced."""
    attr = _target_attr(target)
    old: Mor = getattr(S, attr)
    entries = dict(old.matrix.entries)
    i, j = index
    if not (0 <= i < old.matrix.rows and 0 <= j < old.matrix.cols):
        raise IndexError(f"entry {index} outside {old.matrix.shape}")
    v = S.field.coerce(value)
    if v:
        entries[(i, j)] = v
    else:
        entries.pop((i, j), None)
    matrix = ExactMatrix(old.matrix.rows, old.matrix.cols, S.field, entries)
    return replace(S, **{attr: Mor(old.src_arity, old.dst_arity, S.dim, matrix)})


def perturbation_site(S: WeakStructure, target: str, seed: int) -> Tuple[Tuple[int, int], Scalar, Scalar]:
    """Deterministic (index, old value, new value) chosen by ``seed``."""
    matrix = getattr(S, _target_attr(target)).matrix
    rng = random.Random(seed)
    flat = rng.randrange(matrix.rows * matrix.cols)
    index = divmod(flat, matrix.cols)
    shifts = [k for k in (1, 2, 3, -1, -2, -3) if S.field.coerce(k)]
    old = matrix[index]
    return index, old, old + S.field.coerce(rng.choice(shifts))


def perturb(S: WeakStructure, target: str, seed: int) -> WeakStructure:
    """Copy of S with a single seeded structure-constant entry changed."""
    index, old, new = perturbation_site(S, target, seed)
    logger.info(f"perturbing {target}{index}: {old} -> {new} (seed {seed})")
    out = set_entry(S, target, index, new)
    return replace(out, name=f"{S.name}~{target}{seed}" if S.name else "")
