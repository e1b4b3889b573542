"""Conversions between engine objects and documents, and text rendering

Exact values are written as fractions when the denominator is small and
always carry a decimal rendering next to them.
"""
from fractions import Fraction

from .common import DecisionError, LearningError, to_fraction
from .decision import RawQuery, UtilityFunction
from .documents import (
    CheckReportDocument,
    DecisionReportDocument,
    LotteryDocument,
    RateSnapshotDocument,
    SimilarityDumpDocument,
)
from .featurespace import Problem, SubspaceSelector
from .learning import RateModel, WaitScenario
from .memory import feature_from_document

try:
    from typing import List, Optional, Tuple
except ImportError:  # pragma: no cover
    pass


FRACTION_LIMIT = 100
DECIMALS = 6


def format_number(value, fraction_limit=FRACTION_LIMIT):
    # type: (object, int) -> str
    """p/q when q <= fraction_limit, a decimal otherwise"""
    if isinstance(value, float):
        return "{:.{}g}".format(value, DECIMALS)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if value.denominator <= fraction_limit:
        return "{}/{}".format(value.numerator, value.denominator)
    return "{:.{}f}".format(float(value), DECIMALS)


def _decimal(value):
    return round(float(value), DECIMALS)


def _coordinates(problem, space=None):
    if space is None:
        return dict(problem.items())
    return dict((f.id, problem[f.id]) for f in space if f.id in problem)


def utility_from_document(document):
    # type: (object) -> Optional[UtilityFunction]
    """UtilityFunction of a UtilityDocument, None when it is unset"""
    if document is None:
        return None
    choice = document.choice
    if choice == "affine":
        return UtilityFunction.affine(
            to_fraction(document.affine.scale),
            to_fraction(document.affine.shift),
        )
    if choice == "table":
        return UtilityFunction.table(
            dict(
                (to_fraction(e.result), to_fraction(e.utility))
                for e in document.table
            )
        )
    return UtilityFunction.identity()


def _new_values(document):
    return [(e.feature, e.value, e.position) for e in document.new_values]


def _new_features(document):
    return [feature_from_document(f) for f in document.new_features]


def query_from_document(document):
    # type: (object) -> Tuple[RawQuery, Optional[SubspaceSelector], Optional[Fraction], Optional[UtilityFunction]]
    """RawQuery, selector, delta and utility of a QueryDocument"""
    raw_query = RawQuery(
        document.problem, _new_values(document), _new_features(document)
    )
    selector = None
    if document.subspace is not None:
        selector = SubspaceSelector(document.subspace)
    delta = None
    if document.delta is not None:
        delta = to_fraction(document.delta)
    if (selector is None) != (delta is None):
        raise DecisionError(
            "an aspect restricted query needs both subspace and delta"
        )
    return (
        raw_query,
        selector,
        delta,
        utility_from_document(document.get("utility")),
    )


def rates_from_document(document):
    # type: (RateSnapshotDocument) -> RateModel
    return RateModel(
        lambda_values=dict(
            (r.feature, to_fraction(r.rate)) for r in document.values
        ),
        lambda_features=to_fraction(document.features),
        batch_size=document.batch_size,
        observations=document.observations,
        lambda_default=(
            None if document.default is None else to_fraction(document.default)
        ),
        pending_values=dict(
            (r.feature, int(to_fraction(r.rate)))
            for r in document.pending_values
        ),
        pending_features=document.pending_features,
        pending_problems=document.pending_problems,
    )


def rates_to_document(model):
    # type: (RateModel) -> RateSnapshotDocument
    document = RateSnapshotDocument(
        features=model.lambda_features,
        default=model.lambda_default,
        batch_size=model.batch_size,
        observations=model.observations,
        pending_features=model.pending_features,
        pending_problems=model.pending_problems,
    )
    for feature_id in sorted(model.lambda_values):
        document.values.rate(feature_id, model.lambda_values[feature_id])
    for feature_id in sorted(model.pending_values):
        document.pending_values.rate(
            feature_id, model.pending_values[feature_id]
        )
    return document


def scenario_from_document(document):
    # type: (object) -> Tuple[WaitScenario, Optional[RateModel], Optional[UtilityFunction]]
    """WaitScenario, embedded rates and utility of a ScenarioDocument"""
    try:
        scenario = WaitScenario(
            document.now,
            document.wait_until,
            to_fraction(document.discount),
            Problem(document.anticipated_problem),
            query=Problem(document.query),
            new_values=_new_values(document),
            new_features=_new_features(document),
            mode=document.mode,
            action=document.action,
        )
    except (TypeError, ValueError) as err:
        raise LearningError("scenario: {}".format(err))
    rates = document.get("rates")
    if rates is not None:
        rates = rates_from_document(rates)
    return scenario, rates, utility_from_document(document.get("utility"))


def _similarity_entries(entries, table, space):
    for problem, distance, s in table.rows():
        entries.entry(
            problem=_coordinates(problem, space),
            distance=distance,
            similarity=s,
            decimal=_decimal(s),
        )


def decision_to_document(report, space):
    # type: (object, object) -> DecisionReportDocument
    """DecisionReportDocument of a DecisionReport; space orders the
    coordinates"""
    document = DecisionReportDocument(
        query=_coordinates(report.query, space),
        diameter=report.similarity.diameter_used,
        degenerate=report.degenerate,
        subspace=None if report.subspace is None else list(report.subspace),
        delta=report.delta,
        chosen=report.chosen,
        ties=list(report.ties),
        restricted_history=(
            None
            if report.restricted_history is None
            else [_coordinates(q, space) for q in report.restricted_history]
        ),
        fallback_used=report.fallback_used,
    )
    _similarity_entries(document.similarities, report.similarity, space)
    for action, score in report.scores.items():
        document.scores.score(action, score, _decimal(score))
    return document


def lottery_to_document(valuation):
    # type: (object) -> LotteryDocument
    future = valuation.future_report
    document = LotteryDocument(
        horizon=valuation.horizon,
        mode=valuation.mode,
        action_now=valuation.action_now,
        action_later=valuation.action_later,
        act_now_value=valuation.act_now_value,
        future_value=valuation.future_value,
        event_probability=valuation.event_probability,
        wait_value=float(valuation.wait_value),
        threshold_discount=valuation.threshold_discount,
        hypothetical_diameter=future.similarity.diameter_used,
        recommendation=valuation.recommendation,
    )
    _similarity_entries(document.similarities, future.similarity, None)
    return document


def checks_to_document(results, seed=0, space=None):
    # type: (List[object], int, object) -> CheckReportDocument
    document = CheckReportDocument(seed=seed)
    for result in results:
        check = document.checks.add(
            id=result.check_name,
            instances_tested=result.instances_tested,
            passed=result.passed,
            expected_failure=result.expected_failure,
        )
        for failure in result.failures:
            check.failures.failure(
                witness=[_coordinates(w, space) for w in failure.witness],
                relation=failure.relation,
                observed=failure.observed,
            )
    return document


def similarity_to_document(distance_report, space, query=None):
    # type: (object, object, Optional[Problem]) -> SimilarityDumpDocument
    document = SimilarityDumpDocument(
        diameter=distance_report.diameter,
        degenerate=distance_report.degenerate,
        query=None if query is None else _coordinates(query, space),
    )
    for _, _, p, q, d, s in distance_report.pairwise:
        document.pairs.entry(
            problem=_coordinates(p, space),
            other=_coordinates(q, space),
            distance=d,
            similarity=s,
            decimal=_decimal(s),
        )
    for problem, d in distance_report.query_distances.items():
        s = (
            Fraction(1)
            if distance_report.degenerate
            else 1 - Fraction(d, distance_report.diameter)
        )
        document.to_query.entry(
            problem=_coordinates(problem, space),
            distance=d,
            similarity=s,
            decimal=_decimal(s),
        )
    return document


def _problem_text(problem, space=None):
    pairs = _coordinates(problem, space).items()
    return "({})".format(", ".join("{}={}".format(k, v) for k, v in pairs))


def text_table(header, rows):
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = [
        "  ".join(c.ljust(w) for c, w in zip(header, widths)).rstrip()
    ]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append(
            "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
        )
    return lines


def render_decision(report, space=None, fraction_limit=FRACTION_LIMIT):
    # type: (object, object, int) -> str
    """Similarity and score tables of a decision"""
    lines = ["query {}".format(_problem_text(report.query, space))]
    diameter = report.similarity.diameter_used
    if diameter == 0:
        lines.append("diameter 0 (degenerate, every similarity is 1)")
    else:
        lines.append("diameter {}".format(diameter))
    if report.subspace is not None:
        lines.append(
            "subspace {} delta {}".format(
                ", ".join(report.subspace), format_number(report.delta)
            )
        )
    lines.append("")
    kept = None
    if report.restricted_history is not None:
        kept = set(report.restricted_history)
    rows = []
    for problem, distance, s in report.similarity.rows():
        row = [
            _problem_text(problem, space),
            str(distance),
            format_number(s, fraction_limit),
            "{:.{}f}".format(float(s), DECIMALS),
        ]
        if kept is not None:
            row.append("yes" if problem in kept else "no")
        rows.append(row)
    header = ["problem", "distance", "similarity", "decimal"]
    if kept is not None:
        header.append("kept")
    lines.extend(text_table(header, rows))
    lines.append("")
    rows = [
        [
            action,
            format_number(score, fraction_limit),
            "{:.{}f}".format(float(score), DECIMALS),
        ]
        for action, score in report.scores.items()
    ]
    lines.extend(text_table(["action", "score", "decimal"], rows))
    lines.append("")
    if report.fallback_used:
        lines.append("no case passed the threshold, entire history used")
    if len(report.ties) > 1:
        lines.append("tied: {}".format(", ".join(report.ties)))
    lines.append("chosen {}".format(report.chosen))
    return "\n".join(lines)


def render_lottery(valuation, fraction_limit=FRACTION_LIMIT):
    # type: (object, int) -> str
    threshold = valuation.threshold_discount
    rows = [
        [
            "act now ({})".format(valuation.action_now),
            format_number(valuation.act_now_value, fraction_limit),
        ],
        [
            "future utility ({})".format(valuation.action_later),
            format_number(valuation.future_value, fraction_limit),
        ],
        ["event probability", format_number(valuation.event_probability)],
        ["wait value", format_number(float(valuation.wait_value))],
        [
            "threshold discount",
            "-" if threshold is None else format_number(threshold),
        ],
    ]
    lines = [
        "horizon {} ({} discount)".format(valuation.horizon, valuation.mode)
    ]
    lines.extend(text_table(["quantity", "value"], rows))
    lines.append("")
    lines.append("recommendation {}".format(valuation.recommendation))
    return "\n".join(lines)


def render_checks(results, space=None):
    # type: (List[object], object) -> str
    rows = []
    for result in results:
        if result.passed:
            status = "pass"
        elif result.expected_failure:
            status = "expected failure"
        else:
            status = "FAIL"
        rows.append(
            [result.check_name, str(result.instances_tested), status]
        )
    lines = text_table(["check", "instances", "status"], rows)
    for result in results:
        for failure in result.failures:
            lines.append(
                "{}: {} violated, {} at {}".format(
                    result.check_name,
                    failure.relation,
                    failure.observed,
                    ", ".join(
                        _problem_text(w, space) for w in failure.witness
                    ),
                )
            )
    return "\n".join(lines)


def render_similarity(
    distance_report, space=None, fraction_limit=FRACTION_LIMIT
):
    # type: (object, object, int) -> str
    lines = ["diameter {}".format(distance_report.diameter), ""]
    rows = [
        ["q{}".format(i + 1), _problem_text(p, space)]
        for i, p in enumerate(distance_report.problems)
    ]
    lines.extend(text_table(["case", "problem"], rows))
    lines.append("")
    rows = [
        [
            "q{}".format(i + 1),
            "q{}".format(j + 1),
            str(d),
            format_number(s, fraction_limit),
        ]
        for i, j, _, _, d, s in distance_report.pairwise
    ]
    lines.extend(text_table(["i", "j", "distance", "similarity"], rows))
    if len(distance_report.query_distances) > 0:
        lines.append("")
        rows = []
        for i, p in enumerate(distance_report.problems):
            d = distance_report.query_distances[p]
            s = (
                Fraction(1)
                if distance_report.degenerate
                else 1 - Fraction(d, distance_report.diameter)
            )
            rows.append(
                ["q{}".format(i + 1), str(d), format_number(s, fraction_limit)]
            )
        lines.extend(
            text_table(["to query", "distance", "similarity"], rows)
        )
    return "\n".join(lines)
