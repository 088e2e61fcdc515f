"""
Click plumbing shared by the rhs-tool commands.

The commands themselves live in __main__.py. This module holds the group
class that maps usage errors to exit code 1, the ``guarded`` decorator that
turns library errors into ``ERROR``/``REFUSED`` lines, and the writers for
solution lines (text or JSON, chosen by the resolved Config).
"""

import functools
import sys
from typing import Callable, List, Optional, Sequence

import click

from .config import Config
from .core.graph import Graph
from .core.hypergraph import Hypergraph, RhsPair, RomanAssignment
from .report import (
    assignment_to_json,
    dumps,
    format_assignment,
    format_optimum,
    format_pair,
    format_stats,
    pair_to_json,
)
from .utils.errors import ExitCode, RhsError


class RhsGroup(click.Group):
    """Click group whose usage errors exit with ``INPUT_ERROR`` instead of click's 2."""

    def main(self, args=None, prog_name=None, **extra):
        extra.pop('standalone_mode', None)
        try:
            return super().main(args=args, prog_name=prog_name, standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            sys.exit(ExitCode.INPUT_ERROR)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(ExitCode.INPUT_ERROR)


def guarded(func: Callable) -> Callable:
    """Report library errors on stderr and exit with their code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except RhsError as e:
            click.echo(f"{e.label} {e}", err=True)
            sys.exit(e.exit_code)
        except (ValueError, OSError) as e:
            click.echo(f"ERROR {e}", err=True)
            sys.exit(ExitCode.INPUT_ERROR)

    return wrapper


def current_config() -> Config:
    """Config resolved by the group callback, or defaults outside a run."""
    ctx = click.get_current_context(silent=True)
    config = ctx.find_object(Config) if ctx else None
    return config or Config()


def emit_stats(stats: dict) -> None:
    if current_config().output.stats:
        for line in format_stats(stats):
            click.echo(line, err=True)


def emit_pair(h: Hypergraph, r: RhsPair) -> None:
    if current_config().output.json:
        click.echo(dumps(pair_to_json(h, r)))
    else:
        click.echo(format_pair(h, r))


def emit_optimum(h: Hypergraph, r: RhsPair) -> None:
    if current_config().output.json:
        click.echo(dumps(pair_to_json(h, r)))
    else:
        click.echo(format_optimum(h, r))


def emit_assignment(vertices: Sequence[str], f: RomanAssignment) -> None:
    if current_config().output.json:
        click.echo(dumps(assignment_to_json(vertices, f)))
    else:
        click.echo(format_assignment(vertices, f))


def emit_set(g: Graph, d: int) -> None:
    tokens = g.vertex_tokens(d)
    if current_config().output.json:
        click.echo(dumps({'D': tokens, 'size': len(tokens)}))
    else:
        click.echo('D={' + ','.join(tokens) + '}')


def emit_answer(decision: bool, reason: Optional[str]) -> None:
    """Print yes/no on stdout; a no carries its reason on stderr."""
    click.echo('yes' if decision else 'no')
    if not decision and reason:
        click.echo(f"reason: {reason}", err=True)


def split_tokens(text: Optional[str]) -> List[str]:
    return [t.strip() for t in (text or '').split(',') if t.strip()]


__all__ = [
    'RhsGroup',
    'current_config',
    'emit_answer',
    'emit_assignment',
    'emit_optimum',
    'emit_pair',
    'emit_set',
    'emit_stats',
    'guarded',
    'split_tokens',
]
