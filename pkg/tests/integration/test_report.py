"""Tests for solution formatting, solution specs and run reports."""

import json
import tempfile
from pathlib import Path

import pytest

from rhstool.core.hypergraph import RhsPair, RomanAssignment
from rhstool.report import (
    assignment_from_json,
    assignment_to_json,
    dumps,
    format_assignment,
    format_optimum,
    format_pair,
    format_stats,
    generate_report,
    load_report,
    pair_from_json,
    pair_to_json,
    parse_assignment_spec,
    parse_pair_spec,
    parse_witness_spec,
)
from rhstool.utils.errors import InstanceError


class TestFormatting:
    """Test text and JSON renderings."""

    def test_pair_line(self, ex1):
        """Test the enumeration line layout."""
        r = RhsPair.of(ex1, ['1', '2', '3'], ['c'])
        assert format_pair(ex1, r) == 'R1={1,2,3} R2={c} w=5'

    def test_optimum_line(self, ex2):
        """Test the optimizer line puts the weight first."""
        r = RhsPair.of(ex2, ['5'], ['b'])
        assert format_optimum(ex2, r) == 'w=3 R1={5} R2={b}'

    def test_empty_sets(self, ex1):
        """Test empty parts print as {}."""
        assert format_pair(ex1, RhsPair(0, 0)) == 'R1={} R2={} w=0'

    def test_assignment_line(self, ex2):
        """Test zeros are omitted."""
        f = RomanAssignment.from_names(ex2.vertices, {'b': 2, 'e': 2})
        assert format_assignment(ex2.vertices, f) == 'f: b=2 e=2 w=4'

    def test_pair_json(self, ex2):
        """Test the JSON object parses back to the same pair."""
        r = RhsPair.of(ex2, ['5'], ['b'])
        line = dumps(pair_to_json(ex2, r))
        assert line == '{"R1":["5"],"R2":["b"],"w":3}'
        assert pair_from_json(ex2, json.loads(line)) == r

    def test_assignment_json(self, ex2):
        """Test the assignment object parses back."""
        f = RomanAssignment.from_names(ex2.vertices, {'a': 1, 'd': 2})
        data = json.loads(dumps(assignment_to_json(ex2.vertices, f)))
        assert data == {'f': {'a': 1, 'd': 2}, 'w': 3}
        assert assignment_from_json(ex2.vertices, data) == f

    def test_json_missing_keys(self, ex2):
        """Test objects without their keys are rejected."""
        with pytest.raises(InstanceError):
            pair_from_json(ex2, {'R1': []})
        with pytest.raises(InstanceError):
            assignment_from_json(ex2.vertices, {'w': 0})

    def test_stats_lines(self):
        """Test statistics print as sorted key=value lines."""
        assert format_stats({'visited': 7, 'solutions': 3}) == ['solutions=3', 'visited=7']


class TestSpecs:
    """Test command-line solution specs."""

    def test_pair_spec(self, ex1):
        """Test R1 and R2 parts in either order."""
        expected = RhsPair.of(ex1, ['1', '2', '3'], ['c'])
        assert parse_pair_spec(ex1, 'R1=1,2,3;R2=c') == expected
        assert parse_pair_spec(ex1, 'R2=c; R1=1, 2, 3') == expected
        assert parse_pair_spec(ex1, 'R2=') == RhsPair(0, 0)

    def test_pair_spec_errors(self, ex1):
        """Test unknown keys, repeated keys and unknown tokens."""
        with pytest.raises(InstanceError):
            parse_pair_spec(ex1, 'R3=1')
        with pytest.raises(InstanceError):
            parse_pair_spec(ex1, 'R1=1;R1=2')
        with pytest.raises(InstanceError) as exc_info:
            parse_pair_spec(ex1, 'R2=z')
        assert "'z'" in str(exc_info.value)

    def test_assignment_spec(self, ex2):
        """Test absent vertices are 0."""
        f = parse_assignment_spec(ex2.vertices, 'b=2, e=1')
        assert f.to_names(ex2.vertices) == {'b': 2, 'e': 1}
        assert parse_assignment_spec(ex2.vertices, '') == RomanAssignment.zeros(ex2.n)

    def test_assignment_spec_errors(self, ex2):
        """Test every malformed entry is reported at once."""
        with pytest.raises(InstanceError) as exc_info:
            parse_assignment_spec(ex2.vertices, 'b=3,c,b=1,b=2')
        assert len(exc_info.value.errors) == 3

    def test_witness_spec(self, ex2):
        """Test R2 with one rho entry."""
        w = parse_witness_spec(ex2, 'R2=d;rho=d:5')
        assert w.r2 == ex2.vertex_mask(['d'])
        assert w.rho == {ex2.vertex_id('d'): ex2.edge_id('5')}

    def test_witness_spec_errors(self, ex2):
        """Test a rho entry without a colon."""
        with pytest.raises(InstanceError):
            parse_witness_spec(ex2, 'R2=d;rho=d5')


class TestGenerateReport:
    """Test report generation."""

    def test_basic_report(self):
        """Test basic report generation."""
        stats = {'solutions': 27, 'visited': 40, 'max_delay': 5}

        report = generate_report(stats, command='enum-rhs', instance='tight3.hg')

        assert 'timestamp' in report
        assert report['command'] == 'enum-rhs'
        assert report['instance'] == 'tight3.hg'
        assert report['stats']['solutions'] == 27

    def test_save_and_load(self):
        """Test a saved report loads back unchanged."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'report.json'
            report = generate_report({'weight': 3}, output_path=path, command='min-rhs')

            assert path.exists()
            loaded = load_report(path)
            assert loaded == report
