"""
WHQ Engine - Structure Files

Load and save structures in the JSON exchange format. Saving is canonical
(sparse entries ordered by (i, j, k), exact literals in lowest terms), so a
load followed by a save reproduces the file byte for byte.
"""
import json
import logging
from dataclasses import replace
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .errors import StructureFormatError
from .exact import QQ, Field as ScalarField, PrimeField
from .matrix import ExactMatrix
from .moncat import Mor
from .structure import Mode, WeakStructure

logger = logging.getLogger(__name__)


class FieldSpec(BaseModel):
    """Base field of the structure."""

    kind: Literal["rational", "prime"] = "rational"
    p: Optional[int] = Field(None, description="Characteristic for kind 'prime'")

    @model_validator(mode="after")
    def check_prime(self) -> "FieldSpec":
        if self.kind == "prime" and self.p is None:
            raise ValueError("prime field needs p")
        if self.kind == "rational" and self.p is not None:
            raise ValueError("rational field takes no p")
        return self

    def build(self) -> ScalarField:
        return QQ if self.kind == "rational" else PrimeField(self.p)

    @classmethod
    def of(cls, field: ScalarField) -> "FieldSpec":
        return cls(kind="prime", p=field.p) if isinstance(field, PrimeField) else cls(kind="rational")


class TensorEntry(BaseModel):
    """One structure constant; see StructureFile for the index meaning."""

    i: int = Field(..., ge=0)
    j: int = Field(..., ge=0)
    k: int = Field(..., ge=0)
    v: str

    @field_validator("v", mode="before")
    @classmethod
    def literal_as_string(cls, v: Union[str, int]) -> str:
        return str(v)


class StructureFile(BaseModel):
    """JSON exchange format.

    mult: μ(e_i ⊗ e_j) = Σ_k v·e_k.  comult: δ(e_k) = Σ v·e_i ⊗ e_j.
    """

    field: FieldSpec = Field(default_factory=FieldSpec)
    dim: int = Field(..., ge=1)
    basis: Optional[List[str]] = None
    unit: List[str]
    counit: List[str]
    mult: List[TensorEntry] = Field(default_factory=list)
    comult: List[TensorEntry] = Field(default_factory=list)
    antipode: Optional[List[List[str]]] = None
    mode: Mode = Mode.QUASIGROUP

    @field_validator("unit", "counit", mode="before")
    @classmethod
    def literals_as_strings(cls, v):
        return [str(x) for x in v]

    @model_validator(mode="after")
    def check_shapes(self) -> "StructureFile":
        d = self.dim
        if len(self.unit) != d or len(self.counit) != d:
            raise ValueError(f"unit and counit need {d} entries")
        if self.basis is not None and len(self.basis) != d:
            raise ValueError(f"basis needs {d} labels")
        for e in self.mult + self.comult:
            if max(e.i, e.j, e.k) >= d:
                raise ValueError(f"entry index ({e.i}, {e.j}, {e.k}) out of range for dim {d}")
        if self.antipode is not None and (len(self.antipode) != d or any(len(r) != d for r in self.antipode)):
            raise ValueError(f"antipode must be {d}x{d}")
        return self


def to_structure(data: StructureFile) -> WeakStructure:
    field = data.field.build()
    d = data.dim
    try:
        eta = ExactMatrix.from_entries(d, 1, field, {(i, 0): v for i, v in enumerate(data.unit)})
        eps = ExactMatrix.from_entries(1, d, field, {(0, i): v for i, v in enumerate(data.counit)})
        mu, delta = {}, {}
        for e in data.mult:
            key = (e.k, e.i * d + e.j)
            if key in mu:
                raise StructureFormatError(f"duplicate mult entry ({e.i}, {e.j}, {e.k})")
            mu[key] = e.v
        for e in data.comult:
            key = (e.i * d + e.j, e.k)
            if key in delta:
                raise StructureFormatError(f"duplicate comult entry ({e.i}, {e.j}, {e.k})")
            delta[key] = e.v
        antipode = None
        if data.antipode is not None:
            antipode = Mor(1, 1, d, ExactMatrix.from_rows(data.antipode, field))
        return WeakStructure(
            dim=d,
            eta=Mor(0, 1, d, eta),
            mu=Mor(2, 1, d, ExactMatrix.from_entries(d, d * d, field, mu)),
            eps=Mor(1, 0, d, eps),
            delta=Mor(1, 2, d, ExactMatrix.from_entries(d * d, d, field, delta)),
            antipode=antipode,
            mode=data.mode,
            basis=tuple(data.basis) if data.basis else None,
        )
    except ValueError as e:
        raise StructureFormatError(str(e)) from e


def from_structure(S: WeakStructure) -> StructureFile:
    field, d = S.field, S.dim
    fmt = field.format
    mult = sorted(
        ((col // d, col % d, row, v) for (row, col), v in S.mu.matrix.entries.items()),
        key=lambda t: t[:3],
    )
    comult = sorted(
        ((row // d, row % d, col, v) for (row, col), v in S.delta.matrix.entries.items()),
        key=lambda t: t[:3],
    )
    return StructureFile(
        field=FieldSpec.of(field),
        dim=d,
        basis=list(S.basis) if S.basis else None,
        unit=[fmt(S.eta.matrix[(i, 0)]) for i in range(d)],
        counit=[fmt(S.eps.matrix[(0, i)]) for i in range(d)],
        mult=[TensorEntry(i=i, j=j, k=k, v=fmt(v)) for i, j, k, v in mult],
        comult=[TensorEntry(i=i, j=j, k=k, v=fmt(v)) for i, j, k, v in comult],
        antipode=matrix_literals(S.antipode.matrix) if S.antipode is not None else None,
        mode=S.mode,
    )


def matrix_literals(m: ExactMatrix) -> List[List[str]]:
    return [[m.field.format(x) for x in row] for row in m.to_rows()]


def dumps(S: WeakStructure) -> str:
    data = from_structure(S).model_dump(mode="json", exclude_none=True)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> WeakStructure:
    try:
        data = StructureFile.model_validate_json(text)
    except ValidationError as e:
        raise StructureFormatError(f"invalid structure file: {e.error_count()} error(s): {e.errors()[0]['msg']}") from e
    return to_structure(data)


def load_structure(path: Union[str, Path]) -> WeakStructure:
    path = Path(path)
    logger.info(f"loading structure from {path}")
    S = loads(path.read_text(encoding="utf-8"))
    return replace(S, name=path.stem)


def save_structure(S: WeakStructure, path: Union[str, Path]) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(S), encoding="utf-8")
    logger.info(f"saved {S!r} to {path}")
    return path
