"""SAMOD model, data and query tests over scenario suites."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional
from ..exceptions import SchemaConflict
from ..inference.pitfalls import scan_pitfalls
from ..inference.reasoner import Reasoner, RuleSet
from ..inference.validator import validate_instances
from ..models.enums import ZamoModule
from ..models.schemas import (
    DataTestResult,
    Diagnostic,
    IterationReport,
    ModelTestResult,
    QueryTestResult,
    Row,
    TestReport,
)
from ..ontology.schema import OntologySchema, extract_schema
from ..ontology.vocabulary import controlled_vocabulary, full_vocabulary
from ..query.evaluator import evaluate
from ..rdf.graph import Graph
from ..rdf.namespaces import RDF_TYPE
from ..rdf.terms import IRI
from ..utils.helpers import multiset_diff
from ..utils.logger import get_logger
from .suite import CompetencyQuestion, Iteration, ScenarioSuite

logger = get_logger(__name__)

STANDALONE = "standalone"
CUMULATIVE = "cumulative"


def default_imports(module: ZamoModule) -> Graph:
    """Shipped vocabularies of the other two modules plus the controlled vocabulary."""
    others = [m for m in ZamoModule if m != ZamoModule(module)]
    return full_vocabulary(others, include_controlled=True)


def _declared(modelet: Graph) -> set:
    return {t.subject.value for t in modelet.match(None, IRI(RDF_TYPE), None) if isinstance(t.subject, IRI)}


class SamodRunner:
    """
    Replays the SAMOD tests of a suite.

    Each iteration is checked three ways:
    - model test: schema diagnostics of modelet + imports, and pitfalls on
      the modelet's own declarations
    - data test: the dataset (with the controlled vocabulary) is saturated
      and validated against the schema
    - query test: every CQ is evaluated on the saturated data and compared
      with its expected rows as an unordered multiset

    Failures are report content; nothing here raises for a failing test.
    """

    def __init__(
        self,
        suite: ScenarioSuite,
        imports: Optional[Graph] = None,
        rules: Optional[RuleSet] = None,
        max_workers: int = 1
    ):
        """
        Args:
            suite: Loaded scenario suite
            imports: Imported vocabulary (default_imports of the suite's module when None)
            rules: Enabled inference rules (all when None)
            max_workers: Iterations checked in parallel
        """
        self.suite = suite
        self.imports = imports if imports is not None else default_imports(suite.module)
        self.rules = rules if rules is not None else RuleSet.all()
        self.max_workers = max(1, max_workers)

    def run_iteration(
        self,
        iteration_id: int,
        modelet: Optional[Graph] = None,
        mode: str = STANDALONE
    ) -> IterationReport:
        """
        Run the model, data and query tests of one iteration.

        Args:
            iteration_id: Iteration to check
            modelet: Modelet to test against (the iteration's own when None)
            mode: Label stored in the report

        Returns:
            IterationReport
        """
        iteration = self.suite.iteration(iteration_id)
        modelet = modelet if modelet is not None else iteration.modelet
        report = IterationReport(iteration=iteration.id, title=iteration.title, mode=mode)

        try:
            schema, diagnostics = extract_schema(modelet.merge(self.imports))
        except SchemaConflict as e:
            logger.warning(f"Iteration {iteration.id} ({mode}): {e}")
            report.model_test = ModelTestResult(diagnostics=[Diagnostic(message=str(e))])
            report.query_tests = [
                QueryTestResult(name=q.name, question=q.text, expected=q.expected, error="schema extraction failed")
                for q in iteration.questions
            ]
            return report

        own = _declared(modelet)
        pitfalls = [p for p in scan_pitfalls(schema) if p.subject in own]
        report.model_test = ModelTestResult(diagnostics=diagnostics, pitfalls=pitfalls)

        data = self._saturated(iteration, schema)
        report.data_test = DataTestResult(
            violations=validate_instances(data, schema),
            inferred=len(data) - len(iteration.dataset.merge(controlled_vocabulary())),
        )
        report.query_tests = [self._query_test(question, data) for question in iteration.questions]

        logger.info(
            f"{self.suite.module.value} iteration {iteration.id} ({mode}): "
            f"model {'ok' if report.model_test.passed else 'FAILED'}, "
            f"data {'ok' if report.data_test.passed else 'FAILED'}, "
            f"{report.cq_passed}/{len(report.query_tests)} CQs"
        )
        return report

    def _saturated(self, iteration: Iteration, schema: OntologySchema) -> Graph:
        data = iteration.dataset.merge(controlled_vocabulary())
        return Reasoner(schema, self.rules).saturate(data)

    @staticmethod
    def _query_test(question: CompetencyQuestion, data: Graph) -> QueryTestResult:
        actual: List[Row] = []
        for query in question.queries:
            actual.extend(evaluate(query, data).compact_rows())
        missing, unexpected = multiset_diff(question.expected, actual)
        if missing or unexpected:
            logger.debug(f"CQ {question.name}: missing {missing}, unexpected {unexpected}")
        return QueryTestResult(
            name=question.name,
            question=question.text,
            expected=question.expected,
            actual=sorted(actual, key=lambda row: sorted(row.items())),
            missing=missing,
            unexpected=unexpected,
        )

    def _map(self, fn: Callable[[int], IterationReport], ids: List[int]) -> List[IterationReport]:
        if self.max_workers == 1 or len(ids) < 2:
            return [fn(i) for i in ids]
        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            return list(pool.map(fn, ids))

    def run_suite(self) -> TestReport:
        """Run every iteration standalone."""
        reports = self._map(self.run_iteration, self.suite.ids)
        return TestReport(module=self.suite.module, iterations=reports)

    def run_regression(self, up_to: int) -> TestReport:
        """
        Run the bag of test cases of iterations 1..up_to.

        Every iteration is tested against the merge of the modelets up to
        ``up_to`` and also re-run standalone; the milestone is reached only
        when all of them pass.

        Args:
            up_to: Last iteration id to include

        Returns:
            TestReport with ``regression`` set
        """
        self.suite.iteration(up_to)
        ids = [i for i in self.suite.ids if i <= up_to]

        cumulative = Graph()
        for i in ids:
            cumulative.insert_all(self.suite.iteration(i).modelet)
        cumulative.freeze()

        merged = self._map(lambda i: self.run_iteration(i, modelet=cumulative, mode=CUMULATIVE), ids)
        standalone = self._map(self.run_iteration, ids)
        report = TestReport(
            module=self.suite.module,
            regression=True,
            up_to=up_to,
            iterations=merged,
            standalone=standalone,
        )
        logger.info(
            f"{self.suite.module.value} regression up to {up_to}: "
            f"{report.cq_passed}/{report.cq_total} CQs, milestone {'reached' if report.milestone else 'not reached'}"
        )
        return report


def run_iteration(
    suite: ScenarioSuite,
    iteration_id: int,
    imports: Optional[Graph] = None,
    rules: Optional[RuleSet] = None
) -> IterationReport:
    """Model, data and query tests of one iteration in isolation."""
    return SamodRunner(suite, imports, rules).run_iteration(iteration_id)


def run_regression(
    suite: ScenarioSuite,
    up_to: int,
    imports: Optional[Graph] = None,
    rules: Optional[RuleSet] = None,
    max_workers: int = 1
) -> TestReport:
    """Cumulative regression of iterations 1..up_to."""
    return SamodRunner(suite, imports, rules, max_workers).run_regression(up_to)


def run_suite(
    suite: ScenarioSuite,
    imports: Optional[Graph] = None,
    rules: Optional[RuleSet] = None,
    max_workers: int = 1
) -> TestReport:
    """Every iteration of a suite, standalone."""
    return SamodRunner(suite, imports, rules, max_workers).run_suite()
