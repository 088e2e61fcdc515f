"""
CLI entry point for rhs-tool.

Solution lines go to standard output, statistics and diagnostics to
standard error. Exit codes: 0 completed (including "no" answers), 1 usage
or input error, 2 size guard exceeded or trivial instance refused.
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional

import click

from . import __version__
from .characterize import (
    explain_extension_witness,
    explain_minimal_rdf,
    explain_minimal_rhf,
    explain_minimal_rhs,
)
from .cli import (
    RhsGroup,
    current_config,
    emit_answer,
    emit_assignment,
    emit_optimum,
    emit_pair,
    emit_set,
    emit_stats,
    guarded,
    split_tokens,
)
from .config import get_config
from .core.hypergraph import RhsPair, RomanAssignment
from .core.instance import (
    GraphInstance,
    HypergraphInstance,
    load_graph_instance,
    load_hypergraph_instance,
    load_instance,
    save_instance,
    serialize_instance,
    validate_instance_file,
)
from .enumeration import brute_enumerate_minimal_rhf, brute_enumerate_minimal_rhs, enumerate_minimal_rhs
from .extend import (
    STRATEGIES,
    bounded_ext_rd,
    ext_ds_split,
    ext_rhf_general,
    ext_rhf_surjective,
    ext_rhs,
)
from .generators import gen_random, gen_tight
from .optimize import (
    brute_min_rhf,
    brute_min_rhs,
    exact_min_rhf,
    exact_min_rhs,
    greedy_rhf,
    greedy_rhs,
    rec_min,
    rvc_decide,
    rvc_enumerate,
    rvc_min,
)
from .reductions import (
    REDUCTIONS,
    ReductionOutput,
    bounded_rd_to_rhf,
    ds_split_to_rhs,
    edge_cover_hypergraph,
    find_split_partition,
    rd_to_rhf,
    rhf_to_rd_gadget,
    rhf_to_rhs,
    rhs_to_rhf,
    two_section,
    vc_to_rvc,
    vertex_cover_hypergraph,
)
from .report import (
    generate_report,
    parse_assignment_spec,
    parse_pair_spec,
    parse_witness_spec,
)
from .utils.errors import ExitCode

logger = logging.getLogger(__name__)


@click.group(cls=RhsGroup)
@click.version_option(version=__version__, prog_name='rhs-tool')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging on stderr')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              default=None, help='Solver YAML file (config: section)')
@click.option('--jobs', '-j', type=click.IntRange(min=1), default=None,
              help='Worker processes for partitioned brute-force sweeps')
@click.option('--json', 'json_out', is_flag=True, default=None,
              help='One JSON object per solution')
@click.option('--stats/--no-stats', default=None, help='key=value statistics on stderr')
@click.pass_context
def cli(ctx, verbose, config_path, jobs, json_out, stats):
    """rhs-tool - Roman hitting sets and functions: check, extend, enumerate, optimize, reduce."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        cli_args = {'jobs': jobs, 'json': json_out, 'stats': stats,
                    'verbose': verbose or None}
        config = get_config(cli_args=cli_args,
                            config_path=Path(config_path) if config_path else None)
    except (ValueError, OSError) as e:
        click.echo(f"ERROR {e}", err=True)
        sys.exit(ExitCode.INPUT_ERROR)
    logger.debug("resolved %s", config.summary())
    ctx.obj = config


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@guarded
def validate(file):
    """Validate an instance file."""
    result = validate_instance_file(file)
    if not result['valid']:
        click.echo(f"ERROR {Path(file).name}: {len(result['errors'])} errors", err=True)
        for error in result['errors']:
            click.echo(f"  - {error}", err=True)
        sys.exit(ExitCode.INPUT_ERROR)
    instance = result['instance']
    if isinstance(instance, HypergraphInstance):
        h = instance.hypergraph
        click.echo(f"valid: {h.describe()}")
        click.echo(f"  tau: {'complete' if instance.tau else 'none'}")
        click.echo(f"  simple: {str(h.is_simple()).lower()}")
    else:
        click.echo(f"valid: {instance.graph.describe()}")


@cli.command()
@click.argument('kind', type=click.Choice(['min-rhs', 'min-rhf', 'min-rdf', 'po-min-rdf', 'witness']))
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--pair', 'pair_spec', default=None, help='Pair "R1=1,2;R2=c" (default: file preset)')
@click.option('--assign', 'assign_spec', default=None,
              help='Assignment "b=2,e=1" (default: file assignment)')
@click.option('--witness', 'witness_spec', default=None, help='Witness "R2=c;rho=c:5"')
@guarded
def check(kind, file, pair_spec, assign_spec, witness_spec):
    """Check minimality of a pair or assignment, or an extensibility witness."""
    if kind in ('min-rdf', 'po-min-rdf'):
        inst = load_graph_instance(file)
        g = inst.graph
        f = parse_assignment_spec(g.vertices, assign_spec) if assign_spec is not None else inst.f
        violated = explain_minimal_rdf(g, f, po=kind == 'po-min-rdf')
    else:
        inst = load_hypergraph_instance(file)
        h = inst.hypergraph
        if kind == 'min-rhs':
            r = parse_pair_spec(h, pair_spec) if pair_spec is not None else inst.preset
            violated = explain_minimal_rhs(h, r)
        else:
            tau = inst.require_tau()
            f = parse_assignment_spec(h.vertices, assign_spec) if assign_spec is not None else inst.f
            if kind == 'min-rhf':
                violated = explain_minimal_rhf(h, tau, f)
            else:
                if witness_spec is None:
                    raise click.UsageError("check witness needs --witness")
                violated = explain_extension_witness(h, tau, f, parse_witness_spec(h, witness_spec))
                click.echo(f"witness: {'valid' if violated is None else 'invalid'}")
                if violated:
                    click.echo(f"violated: {violated}")
                return
    click.echo(f"minimal: {'true' if violated is None else 'false'}")
    if violated:
        click.echo(f"violated: {violated}")


@cli.command('ext-rhs')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--pair', 'pair_spec', default=None, help='Pre-solution (default: file preset)')
@guarded
def ext_rhs_cmd(file, pair_spec):
    """Decide whether a minimal rhs lies above the pre-solution."""
    inst = load_hypergraph_instance(file)
    h = inst.hypergraph
    u = parse_pair_spec(h, pair_spec) if pair_spec is not None else inst.preset
    answer = ext_rhs(h, u)
    emit_answer(answer.decision, answer.reason)
    if answer.decision:
        emit_pair(h, answer.witness)


@cli.command('ext-rhf')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--assign', 'assign_spec', default=None,
              help='Pre-solution (default: file assignment)')
@click.option('--general', is_flag=True, help='No precondition: sweep or witness search')
@click.option('--strategy', type=click.Choice(STRATEGIES), default='sweep',
              help='Strategy of --general')
@guarded
def ext_rhf_cmd(file, assign_spec, general, strategy):
    """Decide whether a minimal rhf lies above the pre-solution."""
    inst = load_hypergraph_instance(file)
    h, tau = inst.hypergraph, inst.require_tau()
    f = parse_assignment_spec(h.vertices, assign_spec) if assign_spec is not None else inst.f
    if general:
        config = current_config()
        answer = ext_rhf_general(h, tau, f, strategy, config.guards, config.search.jobs)
    else:
        answer = ext_rhf_surjective(h, tau, f)
    emit_answer(answer.decision, answer.reason)
    if answer.witness is not None:
        emit_assignment(h.vertices, answer.witness)
    elif answer.certificate is not None:
        w = answer.certificate
        rho = ','.join(f"{h.vertices[x]}:{h.edge_names[i]}" for x, i in sorted(w.rho.items()))
        click.echo(f"witness R2={{{','.join(h.vertex_tokens(w.r2))}}} rho={rho}")


@cli.command('ext-rd-bounded')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@guarded
def ext_rd_bounded_cmd(file):
    """Decide whether a minimal rdf lies between the file's assign (f) and upper (h)."""
    inst = load_graph_instance(file)
    answer = bounded_ext_rd(inst.bounded())
    emit_answer(answer.decision, answer.reason)
    if answer.decision:
        emit_assignment(inst.graph.vertices, answer.witness)


@cli.command('ext-ds-split')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--clique', default=None, help='Clique side "a,b" (default: recognized)')
@click.option('--set', 'set_spec', default=None,
              help='Pre-solution U "a,c" (default: vertices the file assigns non-zero)')
@guarded
def ext_ds_split_cmd(file, clique, set_spec):
    """Decide whether a minimal dominating set contains U on a split graph."""
    inst = load_graph_instance(file)
    g = inst.graph
    if clique is None:
        c, i = find_split_partition(g)
    else:
        c = g.vertex_mask(split_tokens(clique))
        i = g.all_vertices & ~c
    u = g.vertex_mask(split_tokens(set_spec)) if set_spec is not None else inst.f.support
    answer = ext_ds_split(g, c, i, u)
    emit_answer(answer.decision, answer.reason)
    if answer.decision:
        emit_set(g, answer.witness)


@cli.command('enum-rhs')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--cap', type=click.IntRange(min=0), default=None, help='Only weight <= CAP')
@click.option('--report', 'report_path', type=click.Path(dir_okay=False), default=None,
              help='Write a JSON run report')
@guarded
def enum_rhs(file, cap, report_path):
    """Enumerate all minimal rhs with polynomial delay."""
    h = load_hypergraph_instance(file).hypergraph
    stats = enumerate_minimal_rhs(h, cap, lambda r: emit_pair(h, r),
                                  check_measure=current_config().search.check_measure)
    emit_stats(stats.to_dict())
    if report_path:
        generate_report(stats.to_dict(), Path(report_path), 'enum-rhs', Path(file).name)


@cli.command('min-rhs')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--method', type=click.Choice(['greedy', 'exact', 'brute']), default='exact')
@click.option('--report', 'report_path', type=click.Path(dir_okay=False), default=None,
              help='Write a JSON run report')
@guarded
def min_rhs(file, method, report_path):
    """Minimum-weight rhs."""
    h = load_hypergraph_instance(file).hypergraph
    stats = {'method': method}
    if method == 'greedy':
        r, weight = greedy_rhs(h)
    elif method == 'exact':
        result = exact_min_rhs(h)
        r, weight = result.witness, result.weight
        stats['nodes'] = result.nodes
    else:
        result = brute_min_rhs(h, current_config().guards)
        r, weight = result.witness, result.weight
    stats['weight'] = weight
    emit_optimum(h, r)
    emit_stats(stats)
    if report_path:
        generate_report(stats, Path(report_path), 'min-rhs', Path(file).name)


@cli.command('min-rhf')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--method', type=click.Choice(['greedy', 'exact', 'brute']), default='exact')
@guarded
def min_rhf(file, method):
    """Minimum-weight rhf; a graph file gives minimum Roman domination."""
    inst = load_instance(file)
    if isinstance(inst, GraphInstance):
        inst = rd_to_rhf(inst.graph).target
    h, tau = inst.hypergraph, inst.require_tau()
    stats = {'method': method}
    if method == 'greedy':
        f, weight = greedy_rhf(h, tau)
    elif method == 'exact':
        result = exact_min_rhf(h, tau)
        f, weight = result.witness, result.weight
        stats['nodes'] = result.nodes
    else:
        result = brute_min_rhf(h, tau, current_config().guards)
        f, weight = result.witness, result.weight
    stats['weight'] = weight
    emit_assignment(h.vertices, f)
    emit_stats(stats)


@cli.command()
@click.argument('mode', type=click.Choice(['decide', 'enum', 'min']))
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('-k', 'k', type=int, default=None, help='Weight bound (decide, enum)')
@guarded
def rvc(mode, file, k):
    """Roman vertex cover: decide or enumerate at weight <= k, or minimize."""
    g = load_graph_instance(file).graph
    h = vertex_cover_hypergraph(g)
    if mode == 'min':
        result = rvc_min(g)
        emit_optimum(h, result.witness)
        emit_stats({'nodes': result.nodes, 'weight': result.weight})
        return
    if k is None:
        raise click.UsageError(f"rvc {mode} needs -k")
    if mode == 'decide':
        click.echo('yes' if rvc_decide(g, k) else 'no')
    else:
        stats = rvc_enumerate(g, k, lambda r: emit_pair(h, r))
        emit_stats(stats.to_dict())


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@guarded
def rec(file):
    """Minimum Roman edge cover."""
    g = load_graph_instance(file).graph
    result = rec_min(g)
    emit_optimum(edge_cover_hypergraph(g), result.witness)


def _build_reduction(name: str, inst, k: Optional[int]) -> ReductionOutput:
    if name in ('rd-to-rhf', 'vc-to-rvc', 'ds-split', 'bounded-rd'):
        if not isinstance(inst, GraphInstance):
            raise click.UsageError(f"{name} needs a graph instance")
        g = inst.graph
        if name == 'rd-to-rhf':
            return rd_to_rhf(g)
        if name == 'vc-to-rvc':
            return vc_to_rvc(g)
        if name == 'ds-split':
            clique, independent = find_split_partition(g)
            return ds_split_to_rhs(g, clique, independent, inst.f.support)
        return bounded_rd_to_rhf(inst.bounded())
    if not isinstance(inst, HypergraphInstance):
        raise click.UsageError(f"{name} needs a hypergraph instance")
    h = inst.hypergraph
    if name == 'rhs-to-rhf':
        if k is None:
            raise click.UsageError("rhs-to-rhf needs --k")
        return rhs_to_rhf(h, k)
    if name == 'rhf-to-rhs':
        return rhf_to_rhs(h, inst.require_tau())
    return rhf_to_rd_gadget(h, inst.require_tau())


def _map_solution(reduction: ReductionOutput, source, spec: str) -> None:
    """Parse a target solution, map it back and print it in the source's terms."""
    target = reduction.target
    if isinstance(target, GraphInstance):
        if reduction.name == 'vc-to-rvc':
            solution = parse_pair_spec(vertex_cover_hypergraph(target.graph), spec)
        else:
            solution = parse_assignment_spec(target.graph.vertices, spec)
    elif target.tau is not None:
        solution = parse_assignment_spec(target.hypergraph.vertices, spec)
    else:
        solution = parse_pair_spec(target.hypergraph, spec)

    mapped = reduction.backward(solution)
    if isinstance(mapped, RhsPair):
        emit_pair(source.hypergraph, mapped)
    elif isinstance(mapped, RomanAssignment):
        vertices = source.graph.vertices if isinstance(source, GraphInstance) else source.hypergraph.vertices
        emit_assignment(vertices, mapped)
    else:
        emit_set(source.graph, mapped)


@cli.command()
@click.argument('name', type=click.Choice(sorted(REDUCTIONS)))
@click.argument('infile', type=click.Path(exists=True, dir_okay=False))
@click.argument('outfile', type=click.Path(dir_okay=False))
@click.option('--k', 'k', type=int, default=None, help='Budget for rhs-to-rhf')
@click.option('--map-solution', 'solution_spec', default=None,
              help='Map a target solution back to the source and print it')
@guarded
def reduce(name, infile, outfile, k, solution_spec):
    """Write the target of a reduction; optionally map a target solution back."""
    inst = load_instance(infile)
    if name == 'two-section':
        if not isinstance(inst, HypergraphInstance):
            raise click.UsageError("two-section needs a hypergraph instance")
        graph = two_section(inst.hypergraph)
        save_instance(GraphInstance(graph), outfile)
        click.echo(f"wrote {outfile}: {graph.describe()}", err=True)
        return
    reduction = _build_reduction(name, inst, k)
    save_instance(reduction.target, outfile)
    click.echo(f"wrote {outfile}: offset={reduction.offset}", err=True)
    if solution_spec is not None:
        _map_solution(reduction, inst, solution_spec)


@cli.group()
def gen():
    """Generate instances."""


@gen.command('tight')
@click.argument('n', type=click.IntRange(min=1))
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None,
              help='Output file (default: stdout)')
@guarded
def gen_tight_cmd(n, out):
    """n disjoint 2-edges with 3^n minimal rhs."""
    _write_instance(HypergraphInstance(gen_tight(n)), out)


@gen.command('random')
@click.argument('nv', type=click.IntRange(min=0))
@click.argument('ne', type=click.IntRange(min=0))
@click.argument('density', type=float)
@click.option('--seed', type=int, default=None, help='Random seed (default: config seed, else 0)')
@click.option('--tau', is_flag=True, help='Add a random correspondence')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None,
              help='Output file (default: stdout)')
@guarded
def gen_random_cmd(nv, ne, density, seed, tau, out):
    """Random hypergraph with independent incidences."""
    if seed is None:
        seed = current_config().seed or 0
    _write_instance(gen_random(nv, ne, density, seed, tau), out)


def _write_instance(instance: HypergraphInstance, out: Optional[str]) -> None:
    if out:
        save_instance(instance, out)
        click.echo(f"wrote {out}: {instance.hypergraph.describe()}", err=True)
    else:
        click.echo(serialize_instance(instance), nl=False)


@cli.command()
@click.argument('kind', type=click.Choice(['rhs', 'rhf']))
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@guarded
def oracle(kind, file):
    """Brute-force enumeration of all minimal rhs or rhf (small instances only)."""
    inst = load_hypergraph_instance(file)
    h = inst.hypergraph
    guards = current_config().guards
    if kind == 'rhs':
        found = brute_enumerate_minimal_rhs(h, guards)
        for r in found:
            emit_pair(h, r)
    else:
        found = brute_enumerate_minimal_rhf(h, inst.require_tau(), guards)
        for f in found:
            emit_assignment(h.vertices, f)
    emit_stats({'solutions': len(found)})


def main(argv: Optional[List[str]] = None):
    """Main entry point."""
    cli.main(args=argv, prog_name='rhs-tool')


if __name__ == '__main__':
    main()
