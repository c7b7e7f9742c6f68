"""JSON interchange documents for Steenrod modules."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from stable_sections.algebra.f2linalg import F2Matrix
from stable_sections.errors import InvalidInputError, ModuleParseError
from stable_sections.thom.module import SteenrodModule


class ActionRecord(BaseModel):
    """Matrix of Sq^k out of one degree, as 0/1 rows."""

    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=1)
    from_degree: int
    matrix: list[list[int]]

    @field_validator("matrix")
    @classmethod
    def _entries_are_bits(cls, rows: list[list[int]]) -> list[list[int]]:
        for row in rows:
            if any(v not in (0, 1) for v in row):
                raise ValueError("matrix entries must be 0 or 1")
        return rows


class ModuleDocument(BaseModel):
    """Serialized form of a ``SteenrodModule``."""

    model_config = ConfigDict(extra="forbid")

    degree_range: tuple[int, int]
    basis: dict[int, list[str]]
    actions: list[ActionRecord] = Field(default_factory=list)
    truncated: bool = False

    @classmethod
    def from_module(cls, m: SteenrodModule) -> ModuleDocument:
        return cls(
            degree_range=m.degree_range,
            basis={t: list(labels) for t, labels in m.basis.items()},
            actions=[
                ActionRecord(k=k, from_degree=t, matrix=matrix.to_rows())
                for (k, t), matrix in sorted(m.actions.items(), key=lambda item: item[0][::-1])
            ],
            truncated=m.truncated,
        )

    def to_module(self) -> SteenrodModule:
        basis = {t: tuple(labels) for t, labels in self.basis.items()}
        actions: dict[tuple[int, int], F2Matrix] = {}
        for record in self.actions:
            key = (record.k, record.from_degree)
            if key in actions:
                raise ModuleParseError(f"Duplicate action Sq^{record.k} from degree {key[1]}")
            cols = len(basis.get(record.from_degree, ()))
            try:
                actions[key] = F2Matrix.from_rows(record.matrix, cols=cols)
            except InvalidInputError as e:
                raise ModuleParseError(f"Sq^{record.k} from degree {key[1]}: {e}") from e
        try:
            return SteenrodModule(self.degree_range, basis, actions, self.truncated)
        except InvalidInputError as e:
            raise ModuleParseError(str(e)) from e


def render_module(m: SteenrodModule) -> str:
    """Deterministic JSON text for a module."""
    return ModuleDocument.from_module(m).model_dump_json(indent=2) + "\n"


def parse_module(text: str) -> SteenrodModule:
    """Parse JSON text produced by :func:`render_module`.

    Raises:
        ModuleParseError: If the document is malformed or inconsistent.
    """
    try:
        document = ModuleDocument.model_validate_json(text)
    except ValidationError as e:
        raise ModuleParseError(f"Invalid module document: {e.error_count()} error(s)\n{e}") from e
    return document.to_module()


def read_module(path: Path) -> SteenrodModule:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ModuleParseError(f"Cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise ModuleParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    return parse_module(text)


def write_module(m: SteenrodModule, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_module(m), encoding="utf-8")
    return path
