"""Loading of SAMOD scenario suites from a JSON manifest."""

import json
from pathlib import Path
from typing import List, Optional, Union
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from ..exceptions import SuiteError, SyntaxDiagnosticsError
from ..models.enums import ZamoModule
from ..models.schemas import Row
from ..query.parser import Query, parse_query
from ..rdf.graph import Graph
from ..serialization.parser import parse_turtle_file
from ..utils.helpers import read_text
from ..utils.logger import get_logger

logger = get_logger(__name__)


# Manifest layout

class QueryEntry(BaseModel):
    """One competency question as written in the manifest."""
    file: Union[str, List[str]]
    text: str
    expected: str

    @property
    def files(self) -> List[str]:
        return [self.file] if isinstance(self.file, str) else list(self.file)

    @field_validator('file')
    @classmethod
    def at_least_one_file(cls, v):
        if isinstance(v, list) and not v:
            raise ValueError('a competency question needs at least one query file')
        return v


class IterationEntry(BaseModel):
    id: int = Field(ge=1)
    title: str
    modelet: str
    dataset: str
    queries: List[QueryEntry] = Field(default_factory=list)


class Manifest(BaseModel):
    module: ZamoModule
    iterations: List[IterationEntry]

    @field_validator('iterations')
    @classmethod
    def ordered_ids(cls, v):
        """Iteration ids are unique and ascending."""
        ids = [it.id for it in v]
        if not ids:
            raise ValueError('a suite needs at least one iteration')
        if ids != sorted(set(ids)):
            raise ValueError(f'iteration ids must be unique and ascending, got {ids}')
        return v


# Resolved suite

class CompetencyQuestion(BaseModel):
    """A parsed CQ: its queries and the expected rows of their union."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    text: str
    files: List[Path]
    queries: List[Query]
    expected: List[Row]


class Iteration(BaseModel):
    """One SAMOD iteration: modelet, dataset and competency questions."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    id: int
    title: str
    modelet: Graph
    dataset: Graph
    questions: List[CompetencyQuestion] = Field(default_factory=list)


class ScenarioSuite(BaseModel):
    """All iterations of one ZAMO module."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    module: ZamoModule
    iterations: List[Iteration]
    path: Optional[Path] = None

    def iteration(self, iteration_id: int) -> Iteration:
        """
        Look up an iteration by id.

        Raises:
            KeyError: if the suite has no such iteration
        """
        for it in self.iterations:
            if it.id == iteration_id:
                return it
        raise KeyError(f"{self.module.value} suite has no iteration {iteration_id}")

    @property
    def ids(self) -> List[int]:
        return [it.id for it in self.iterations]

    @property
    def question_count(self) -> int:
        return sum(len(it.questions) for it in self.iterations)


class SuiteLoader:
    """
    Resolves a manifest into a ``ScenarioSuite``.

    Paths in the manifest are relative to the manifest's directory. Every
    problem (missing file, malformed JSON or Turtle, a query that does not
    parse, an expected table whose columns do not match the query header)
    is reported as a ``SuiteError``.
    """

    def __init__(self, manifest_path: Union[str, Path]):
        self.manifest_path = Path(manifest_path)
        self.root = self.manifest_path.parent

    def load(self) -> ScenarioSuite:
        """
        Read the manifest and every file it names.

        Returns:
            ScenarioSuite with frozen modelets and datasets

        Raises:
            SuiteError: If the manifest or a referenced file is missing or malformed
        """
        manifest = self._read_manifest()
        iterations = [self._load_iteration(entry) for entry in manifest.iterations]
        suite = ScenarioSuite(module=manifest.module, iterations=iterations, path=self.manifest_path)
        logger.info(
            f"Loaded {suite.module.value} suite: {len(iterations)} iterations, "
            f"{suite.question_count} competency questions"
        )
        return suite

    def _read_manifest(self) -> Manifest:
        text = self._read(self.manifest_path)
        try:
            return Manifest.model_validate_json(text)
        except ValidationError as e:
            raise SuiteError(f"malformed manifest {self.manifest_path}: {e}") from e

    def _read(self, path: Path) -> str:
        try:
            return read_text(path)
        except OSError as e:
            raise SuiteError(f"cannot read {path}: {e.strerror or e}") from e

    def _graph(self, name: str) -> Graph:
        path = self.root / name
        if not path.is_file():
            raise SuiteError(f"missing file {path}")
        try:
            graph, _ = parse_turtle_file(path)
        except SyntaxDiagnosticsError as e:
            raise SuiteError(f"{path}: {e.diagnostics[0]}") from e
        return graph.freeze()

    def _load_iteration(self, entry: IterationEntry) -> Iteration:
        questions = [
            self._load_question(entry.id, index, q)
            for index, q in enumerate(entry.queries, start=1)
        ]
        return Iteration(
            id=entry.id,
            title=entry.title,
            modelet=self._graph(entry.modelet),
            dataset=self._graph(entry.dataset),
            questions=questions,
        )

    def _load_question(self, iteration_id: int, index: int, entry: QueryEntry) -> CompetencyQuestion:
        files = [self.root / name for name in entry.files]
        queries = []
        for path in files:
            try:
                queries.append(parse_query(self._read(path)))
            except SyntaxDiagnosticsError as e:
                raise SuiteError(f"{path}: {e.diagnostics[0]}") from e

        expected_path = self.root / entry.expected
        try:
            expected = json.loads(self._read(expected_path))
        except json.JSONDecodeError as e:
            raise SuiteError(f"{expected_path}: invalid JSON ({e.msg})") from e
        rows = self._check_rows(expected_path, expected, queries)

        return CompetencyQuestion(
            name=f"{iteration_id}.{index}",
            text=entry.text,
            files=files,
            queries=queries,
            expected=rows,
        )

    @staticmethod
    def _check_rows(path: Path, expected, queries: List[Query]) -> List[Row]:
        if not isinstance(expected, list) or not expected:
            raise SuiteError(f"{path}: expected table must be a non-empty array of objects")
        headers = [set(q.projection) for q in queries]
        rows: List[Row] = []
        for position, row in enumerate(expected, start=1):
            if not isinstance(row, dict) or not all(isinstance(v, str) for v in row.values()):
                raise SuiteError(f"{path}: row {position} must map variable names to strings")
            if set(row) not in headers:
                raise SuiteError(
                    f"{path}: row {position} has columns {sorted(row)}, "
                    f"which match no query header {[sorted(h) for h in headers]}"
                )
            rows.append(dict(row))
        return rows


def load_suite(manifest_path: Union[str, Path]) -> ScenarioSuite:
    """
    Load and resolve a SAMOD suite.

    Args:
        manifest_path: Path to manifest.json

    Returns:
        Fully parsed ScenarioSuite

    Raises:
        SuiteError: on any missing or malformed input
    """
    return SuiteLoader(manifest_path).load()
