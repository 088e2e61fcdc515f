"""Solution lines, JSON objects, run reports and command-line solution specs."""

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .characterize import ExtensionWitness
from .core.hypergraph import Hypergraph, RhsPair, RomanAssignment
from .utils.errors import InstanceError


def _braces(tokens: Sequence[str]) -> str:
    return '{' + ','.join(tokens) + '}'


def format_pair(h: Hypergraph, r: RhsPair) -> str:
    """``R1={1,2} R2={c} w=4``, tokens in id order."""
    return (f"R1={_braces(h.edge_tokens(r.r1))} "
            f"R2={_braces(h.vertex_tokens(r.r2))} w={r.weight}")


def format_optimum(h: Hypergraph, r: RhsPair) -> str:
    """Optimizer line: ``w=3 R1={5} R2={b}``."""
    return (f"w={r.weight} R1={_braces(h.edge_tokens(r.r1))} "
            f"R2={_braces(h.vertex_tokens(r.r2))}")


def format_assignment(vertices: Sequence[str], f: RomanAssignment) -> str:
    """``f: b=2 e=2 w=4`` with zeros omitted."""
    parts = [f"{vertices[x]}={v}" for x, v in enumerate(f.values) if v]
    return ' '.join(['f:'] + parts + [f"w={f.weight}"])


def pair_to_json(h: Hypergraph, r: RhsPair) -> Dict[str, Any]:
    return {'R1': h.edge_tokens(r.r1), 'R2': h.vertex_tokens(r.r2), 'w': r.weight}


def pair_from_json(h: Hypergraph, data: Dict[str, Any]) -> RhsPair:
    """
    Parse a pair object written by ``pair_to_json``.

    Raises:
        InstanceError: missing keys or unknown tokens
    """
    try:
        return RhsPair(h.edge_mask(data['R1']), h.vertex_mask(data['R2']))
    except KeyError as exc:
        raise InstanceError(f"pair object lacks key {exc}") from None


def assignment_to_json(vertices: Sequence[str], f: RomanAssignment) -> Dict[str, Any]:
    return {'f': {vertices[x]: v for x, v in enumerate(f.values) if v}, 'w': f.weight}


def assignment_from_json(vertices: Sequence[str], data: Dict[str, Any]) -> RomanAssignment:
    if 'f' not in data:
        raise InstanceError("assignment object lacks key 'f'")
    return RomanAssignment.from_names(vertices, data['f'])


def dumps(data: Any) -> str:
    """One compact JSON line with sorted keys."""
    return json.dumps(data, sort_keys=True, separators=(',', ':'))


def format_stats(stats: Dict[str, Any]) -> List[str]:
    """``key=value`` lines in key order."""
    return [f"{key}={stats[key]}" for key in sorted(stats)]


def generate_report(stats: Dict[str, Any], output_path: Optional[Path] = None,
                    command: str = '', instance: str = '') -> Dict[str, Any]:
    """Generate a JSON report from run statistics.

    Args:
        stats: Counters of the run (enumeration stats, node counts, optimum)
        output_path: Optional path to save the JSON report
        command: Subcommand that produced the statistics
        instance: Instance file name

    Returns:
        Report dictionary
    """
    report = {
        'timestamp': datetime.now(timezone.utc).isoformat(),
        'command': command,
        'instance': instance,
        'stats': dict(stats),
    }

    if output_path:
        output_path = Path(output_path)
        with open(output_path, 'w') as f:
            json.dump(report, f, indent=2, sort_keys=True)

    return report


def load_report(path: Path) -> Dict[str, Any]:
    with open(path) as f:
        return json.load(f)


# ---------------------------------------------------------------------------
# Command-line specs
# ---------------------------------------------------------------------------

def _sections(text: str, allowed: Sequence[str]) -> Dict[str, List[str]]:
    sections: Dict[str, List[str]] = {}
    for part in filter(None, (p.strip() for p in text.split(';'))):
        key, sep, value = part.partition('=')
        key = key.strip()
        if not sep or key not in allowed:
            raise InstanceError(f"bad spec part '{part}': expected one of "
                                + ', '.join(f"{k}=..." for k in allowed))
        if key in sections:
            raise InstanceError(f"'{key}' given twice in spec")
        sections[key] = [t.strip() for t in value.split(',') if t.strip()]
    return sections


def parse_pair_spec(h: Hypergraph, text: str) -> RhsPair:
    """
    ``R1=1,2,3;R2=c``; either part may be omitted or empty.

    Raises:
        InstanceError: unknown keys or tokens
    """
    sections = _sections(text, ('R1', 'R2'))
    return RhsPair(h.edge_mask(sections.get('R1', [])), h.vertex_mask(sections.get('R2', [])))


def parse_assignment_spec(vertices: Sequence[str], text: str) -> RomanAssignment:
    """
    ``b=2,e=2``; absent vertices are 0.

    Raises:
        InstanceError: malformed entries, unknown vertices or bad values
    """
    mapping: Dict[str, int] = {}
    errors = []
    for entry in filter(None, (e.strip() for e in text.split(','))):
        token, sep, value = entry.partition('=')
        if not sep or value.strip() not in ('0', '1', '2'):
            errors.append(f"bad entry '{entry}': expected <vertex>=<0|1|2>")
        elif token.strip() in mapping:
            errors.append(f"vertex '{token.strip()}' given twice")
        else:
            mapping[token.strip()] = int(value)
    if errors:
        raise InstanceError.from_errors("Assignment spec", errors)
    return RomanAssignment.from_names(vertices, mapping)


def parse_witness_spec(h: Hypergraph, text: str) -> ExtensionWitness:
    """
    ``R2=c;rho=c:5`` with one ``vertex:index`` entry per R2 vertex.

    Raises:
        InstanceError: unknown keys, tokens or malformed rho entries
    """
    sections = _sections(text, ('R2', 'rho'))
    r2 = h.vertex_mask(sections.get('R2', []))
    rho: Dict[int, int] = {}
    for entry in sections.get('rho', []):
        vertex, sep, index = entry.partition(':')
        if not sep:
            raise InstanceError(f"bad rho entry '{entry}': expected <vertex>:<index>")
        rho[h.vertex_id(vertex.strip())] = h.edge_id(index.strip())
    return ExtensionWitness(r2, rho)


__all__ = [
    'format_pair',
    'format_optimum',
    'format_assignment',
    'pair_to_json',
    'pair_from_json',
    'assignment_to_json',
    'assignment_from_json',
    'dumps',
    'format_stats',
    'generate_report',
    'load_report',
    'parse_pair_spec',
    'parse_assignment_spec',
    'parse_witness_spec',
]
