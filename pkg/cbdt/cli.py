"""cbdt command line

Exit status is 0 on success, 1 when the engine rejects the input and 2 on
usage errors. Reports go to stdout, logs to stderr.
"""
import functools
import io
import logging
import os

import click

from .api import api
from .common import CbdtError, to_fraction
from .decision import UtilityFunction
from .documents import QueryDocument, RateSnapshotDocument
from .documents import ScenarioDocument
from .featurespace import Feature, FeatureSpace, Problem
from .learning import RateModel
from .memory import Case, Memory
from . import report

LOGLEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def _pairs(ctx, param, values):
    pairs = []
    for text in values:
        if "=" not in text:
            raise click.BadParameter(
                "expected FEATURE=VALUE, got {!r}".format(text)
            )
        key, value = text.split("=", 1)
        if key == "" or value == "":
            raise click.BadParameter(
                "expected FEATURE=VALUE, got {!r}".format(text)
            )
        pairs.append((key, value))
    return pairs


def _coordinates(ctx, param, values):
    pairs = _pairs(ctx, param, values)
    coordinates = dict(pairs)
    if len(coordinates) != len(pairs):
        raise click.BadParameter("a feature is given more than once")
    return coordinates


def _new_values(ctx, param, values):
    extensions = []
    for feature_id, value in _pairs(ctx, param, values):
        position = None
        if "@" in value:
            value, text = value.rsplit("@", 1)
            try:
                position = int(text)
            except ValueError:
                raise click.BadParameter(
                    "position {!r} is not an integer".format(text)
                )
        extensions.append((feature_id, value, position))
    return extensions


def _features(ctx, param, values):
    """FEATURE=V1,V2,... with an optional :DEFAULT suffix"""
    features = []
    for feature_id, text in _pairs(ctx, param, values):
        default = None
        if ":" in text:
            text, default = text.rsplit(":", 1)
        labels = text.split(",")
        default_rank = 0
        if default is not None:
            if default not in labels:
                raise click.BadParameter(
                    "default {} is not one of {}".format(default, labels)
                )
            default_rank = labels.index(default)
        features.append((feature_id, labels, default_rank))
    return features


def _read(path):
    with io.open(path, "r", encoding="utf-8") as fid:
        return fid.read()


def _write(path, text):
    with io.open(path, "w", encoding="utf-8") as fid:
        fid.write(text)


def _emit(ctx, text, document):
    if ctx.obj["machine"]:
        click.echo(document.serialize(ctx.obj["encoding"]), nl=False)
    else:
        click.echo(text)


def _domain_errors(command):
    """Report engine errors on stderr and exit with status 1"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (CbdtError, TypeError, ValueError) as err:
            click.echo("error: {}".format(err), err=True)
            click.get_current_context().exit(1)

    return wrapper


def _load(ctx, path):
    return ctx.obj["api"].load_memory(_read(path))


def _save(ctx, memory, source, output, in_place):
    if in_place and output is not None:
        raise click.UsageError("--output and --in-place exclude each other")
    if not in_place and output is None:
        raise click.UsageError("give --output PATH or --in-place")
    target = source if in_place else output
    if not in_place and os.path.abspath(target) == os.path.abspath(source):
        raise click.UsageError(
            "--output names the input memory, use --in-place to overwrite it"
        )
    _write(target, ctx.obj["api"].save_memory(memory))
    ctx.obj["api"].logger.info("wrote {}".format(target))


def _query_document(query_path, coords, new_values, new_features):
    if query_path is not None:
        if len(coords) > 0:
            raise click.UsageError("--query and --coord exclude each other")
        return QueryDocument().deserialize(_read(query_path))
    if len(coords) == 0:
        raise click.UsageError("give the query with --coord or --query")
    document = QueryDocument(problem=coords)
    for feature_id, value, position in new_values:
        document.new_values.extension(feature_id, value, position)
    for feature_id, labels, default_rank in new_features:
        document.new_features.feature(
            id=feature_id, values=labels, default_rank=default_rank
        )
    return document


memory_option = click.option(
    "--memory",
    "memory_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Memory document",
)
coord_option = click.option(
    "--coord",
    "coords",
    multiple=True,
    callback=_coordinates,
    help="Query coordinate FEATURE=VALUE, repeat per feature",
)
output_option = click.option(
    "--output",
    type=click.Path(dir_okay=False),
    help="Write the resulting memory here",
)
in_place_option = click.option(
    "--in-place",
    is_flag=True,
    help="Overwrite the input memory",
)


@click.group()
@click.option(
    "--loglevel",
    type=click.Choice(LOGLEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
)
@click.option(
    "--machine",
    is_flag=True,
    help="Print structured documents instead of text tables",
)
@click.option(
    "--encoding",
    type=click.Choice(["yaml", "json"]),
    default="yaml",
    show_default=True,
    help="Document encoding used with --machine",
)
@click.pass_context
def cli(ctx, loglevel, machine, encoding):
    """Case based decisions on a discrete feature lattice"""
    ctx.ensure_object(dict)
    ctx.obj["api"] = api(loglevel=getattr(logging, loglevel.upper()))
    ctx.obj["machine"] = machine
    ctx.obj["encoding"] = encoding


@cli.command()
@click.option(
    "--memory",
    "memory_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="Memory document to create",
)
@click.option(
    "--feature",
    "features",
    multiple=True,
    required=True,
    callback=_features,
    help="FEATURE=V1,V2,... in rank order, optional :DEFAULT",
)
@click.option("--action", "actions", multiple=True, required=True)
@click.pass_context
@_domain_errors
def init(ctx, memory_path, features, actions):
    """Create an empty memory"""
    if os.path.exists(memory_path):
        raise click.UsageError("{} already exists".format(memory_path))
    space = FeatureSpace(
        [Feature(i, labels, default_rank=r) for i, labels, r in features]
    )
    memory = Memory(space, actions)
    _write(memory_path, ctx.obj["api"].save_memory(memory))
    ctx.obj["api"].logger.info("wrote {}".format(memory_path))


@cli.command("add-case")
@memory_option
@coord_option
@click.option("--action", required=True)
@click.option("--result", required=True, help="Number or p/q fraction")
@output_option
@in_place_option
@click.pass_context
@_domain_errors
def add_case(ctx, memory_path, coords, action, result, output, in_place):
    """Append a case to a memory"""
    memory = _load(ctx, memory_path)
    memory = ctx.obj["api"].add_case(
        memory, Case(Problem(coords), action, result)
    )
    _save(ctx, memory, memory_path, output, in_place)


@cli.command()
@memory_option
@coord_option
@click.option(
    "--query",
    "query_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Query document",
)
@click.option(
    "--new-value",
    "new_values",
    multiple=True,
    callback=_new_values,
    help="FEATURE=VALUE[@POSITION] the query introduces",
)
@click.option(
    "--new-feature",
    "new_features",
    multiple=True,
    callback=_features,
    help="FEATURE=V1,V2,...[:DEFAULT] the query introduces",
)
@output_option
@click.pass_context
@_domain_errors
def decide(
    ctx, memory_path, coords, query_path, new_values, new_features, output
):
    """Choose the action for a new problem

    With --output the memory, evolved to the query's values and features,
    is written as well.
    """
    a = ctx.obj["api"]
    memory = _load(ctx, memory_path)
    document = _query_document(query_path, coords, new_values, new_features)
    evolved, decision = a.answer(memory, document)
    _emit(
        ctx,
        report.render_decision(decision, evolved.space, a.fraction_limit),
        report.decision_to_document(decision, evolved.space),
    )
    if output is not None:
        _save(ctx, evolved, memory_path, output, False)


@cli.command("decide-restricted")
@memory_option
@coord_option
@click.option(
    "--query",
    "query_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Query document carrying subspace and delta",
)
@click.option("--subspace", "subspace", multiple=True)
@click.option("--delta", help="Similarity threshold in [0, 1]")
@click.pass_context
@_domain_errors
def decide_restricted(ctx, memory_path, coords, query_path, subspace, delta):
    """Decide on the cases similar enough on a subset of features"""
    a = ctx.obj["api"]
    memory = _load(ctx, memory_path)
    document = _query_document(query_path, coords, [], [])
    if len(subspace) > 0:
        document.subspace = list(subspace)
    if delta is not None:
        document.delta = delta
    if document.subspace is None or document.delta is None:
        raise click.UsageError("decide-restricted needs a subspace and delta")
    evolved, decision = a.answer(memory, document)
    _emit(
        ctx,
        report.render_decision(decision, evolved.space, a.fraction_limit),
        report.decision_to_document(decision, evolved.space),
    )


@cli.command("extend-value")
@memory_option
@click.option("--feature", "feature_id", required=True)
@click.option("--value", required=True)
@click.option(
    "--position", type=int, help="Rank of the new value, default last"
)
@output_option
@in_place_option
@click.pass_context
@_domain_errors
def extend_value(
    ctx, memory_path, feature_id, value, position, output, in_place
):
    """Add a value to a feature's range"""
    memory = _load(ctx, memory_path)
    memory = ctx.obj["api"].extend_value(memory, feature_id, value, position)
    _save(ctx, memory, memory_path, output, in_place)


@cli.command("extend-feature")
@memory_option
@click.option(
    "--feature",
    "features",
    required=True,
    multiple=True,
    callback=_features,
    help="FEATURE=V1,V2,...[:DEFAULT]",
)
@output_option
@in_place_option
@click.pass_context
@_domain_errors
def extend_feature(ctx, memory_path, features, output, in_place):
    """Add features; past problems take each feature's default value"""
    memory = _load(ctx, memory_path)
    for feature_id, labels, default_rank in features:
        memory = ctx.obj["api"].extend_feature(
            memory, Feature(feature_id, labels, default_rank=default_rank)
        )
    _save(ctx, memory, memory_path, output, in_place)


def _render_rates(model):
    rows = [
        [feature_id, report.format_number(model.lambda_values[feature_id])]
        for feature_id in sorted(model.lambda_values)
    ]
    rows.append(["new features", report.format_number(model.lambda_features)])
    if model.lambda_default is not None:
        rows.append(["default", report.format_number(model.lambda_default)])
    lines = ["{} problems observed".format(model.observations)]
    lines.extend(report.text_table(["rate", "per problem"], rows))
    return "\n".join(lines)


@cli.command()
@memory_option
@click.option(
    "--since",
    "since_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Earlier memory; default the empty memory",
)
@click.option("--batch-size", type=click.IntRange(min=1), default=None)
@click.option(
    "--model",
    "model_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Rate snapshot to continue from",
)
@click.option("--output", type=click.Path(dir_okay=False))
@click.pass_context
@_domain_errors
def rates(ctx, memory_path, since_path, batch_size, model_path, output):
    """Estimate arrival rates of new values and features"""
    a = ctx.obj["api"]
    new = _load(ctx, memory_path)
    if since_path is None:
        old = Memory(FeatureSpace(), new.actions)
    else:
        old = _load(ctx, since_path)
    model = None
    if model_path is not None:
        model = report.rates_from_document(
            RateSnapshotDocument().deserialize(_read(model_path))
        )
        if batch_size is not None and batch_size != model.batch_size:
            raise click.UsageError(
                "--batch-size differs from the snapshot's batch size"
            )
    elif batch_size is not None:
        model = RateModel.initial(batch_size)
    model = a.learn_rates(old, new, model=model)
    document = report.rates_to_document(model)
    _emit(ctx, _render_rates(model), document)
    if output is not None:
        _write(output, document.serialize(ctx.obj["encoding"]))
        a.logger.info("wrote {}".format(output))


@cli.command()
@memory_option
@click.option(
    "--scenario",
    "scenario_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
)
@click.option(
    "--rates",
    "rates_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Rate snapshot, overrides the scenario's rates",
)
@click.option(
    "--probability", help="Use this event probability instead of rates"
)
@click.pass_context
@_domain_errors
def wait(ctx, memory_path, scenario_path, rates_path, probability):
    """Compare acting now with waiting for an anticipated problem"""
    a = ctx.obj["api"]
    memory = _load(ctx, memory_path)
    scenario, model, u = report.scenario_from_document(
        ScenarioDocument().deserialize(_read(scenario_path))
    )
    if rates_path is not None:
        model = report.rates_from_document(
            RateSnapshotDocument().deserialize(_read(rates_path))
        )
    if probability is not None:
        probability = to_fraction(probability)
    valuation = a.evaluate_wait(
        memory, scenario, u=u, rates=model, probability=probability
    )
    _emit(
        ctx,
        report.render_lottery(valuation, a.fraction_limit),
        report.lottery_to_document(valuation),
    )


@cli.command()
@memory_option
@coord_option
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=1000,
    show_default=True,
    help="Random instances per check",
)
@click.pass_context
@_domain_errors
def verify(ctx, memory_path, coords, seed, samples):
    """Run the property checks on a memory

    Exits 1 when a check other than an expected failure finds a violation.
    """
    memory = _load(ctx, memory_path)
    query = Problem(coords) if len(coords) > 0 else None
    results = ctx.obj["api"].verify(
        memory, query, UtilityFunction.identity(), samples, seed
    )
    _emit(
        ctx,
        report.render_checks(results, memory.space),
        report.checks_to_document(results, seed, memory.space),
    )
    if any(not r.passed and not r.expected_failure for r in results):
        ctx.exit(1)


@cli.command("dump-similarity")
@memory_option
@coord_option
@click.pass_context
@_domain_errors
def dump_similarity(ctx, memory_path, coords):
    """Pairwise distances and similarities of the history"""
    a = ctx.obj["api"]
    memory = _load(ctx, memory_path)
    query = Problem(coords) if len(coords) > 0 else None
    distances = a.pairwise_similarity(memory, query)
    _emit(
        ctx,
        report.render_similarity(distances, memory.space, a.fraction_limit),
        report.similarity_to_document(distances, memory.space, query),
    )


def main():
    cli(prog_name="cbdt")


if __name__ == "__main__":
    main()
