"""Tests for error types and exit codes."""

import pytest

from rhstool.utils.errors import (
    ExitCode,
    GuardRefusal,
    InfeasibleError,
    InstanceError,
    PreconditionError,
    RhsError,
    SearchInvariantError,
    TrivialInstanceError,
    check_guard,
)


@pytest.mark.unit
class TestExitCode:
    """Test ExitCode enum."""

    def test_exit_codes(self):
        """Test exit code values."""
        assert ExitCode.OK == 0
        assert ExitCode.INPUT_ERROR == 1
        assert ExitCode.REFUSED == 2


@pytest.mark.unit
class TestErrorHierarchy:
    """Test the exception hierarchy and the codes it carries."""

    @pytest.mark.parametrize('cls', [InstanceError, PreconditionError, InfeasibleError,
                                     SearchInvariantError])
    def test_input_errors(self, cls):
        """Test input-side errors exit with 1."""
        assert issubclass(cls, RhsError)
        assert cls.exit_code == ExitCode.INPUT_ERROR

    def test_guard_refusal(self):
        """Test a refusal carries size, limit and exit code 2."""
        exc = GuardRefusal('brute rhs oracle', 9, 5)
        assert exc.size == 9
        assert exc.limit == 5
        assert exc.exit_code == ExitCode.REFUSED
        assert exc.label == 'REFUSED'
        assert 'size 9 exceeds guard 5' in str(exc)

    def test_trivial_instance(self):
        """Test a trivial instance is refused with its own message."""
        exc = TrivialInstanceError('k=5 >= |I|=5')
        assert isinstance(exc, GuardRefusal)
        assert exc.exit_code == ExitCode.REFUSED
        assert str(exc) == 'k=5 >= |I|=5'

    def test_from_errors(self):
        """Test aggregated errors keep each message."""
        exc = InstanceError.from_errors('Hypergraph', ['first', 'second'])
        assert exc.errors == ['first', 'second']
        assert 'Hypergraph validation failed with 2 errors' in str(exc)
        assert '  - second' in str(exc)

    def test_single_message(self):
        """Test a plain message becomes its own error list."""
        assert InstanceError('bad').errors == ['bad']

    def test_subclass_from_errors(self):
        """Test from_errors builds the subclass it is called on."""
        exc = PreconditionError.from_errors('Pre-solution', ['x'])
        assert isinstance(exc, PreconditionError)


@pytest.mark.unit
class TestCheckGuard:
    """Test the guard helper."""

    def test_within_limit(self):
        """Test sizes up to the limit pass."""
        check_guard('sweep', 5, 5)
        check_guard('sweep', 0, 0)

    def test_over_limit(self):
        """Test a size above the limit raises."""
        with pytest.raises(GuardRefusal) as exc_info:
            check_guard('sweep', 6, 5)
        assert exc_info.value.size == 6
        assert str(exc_info.value).startswith('sweep:')
