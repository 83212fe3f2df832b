"""
Tests for the command-line interface
"""

import json

import pytest

from semitop import cli
from semitop.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from semitop.verification.oracle import OracleReport


def run_json(capsys, *argv):
    code = main(['--json', *argv])
    return code, json.loads(capsys.readouterr().out)


class TestQueries:
    """Test cases for the query commands."""

    def test_classify_point(self, capsys):
        code, data = run_json(capsys, 'classify', 'fig2_top_left', '--point', '1')
        assert code == EXIT_OK
        row = data['points'][0]
        assert row['intertwined'] == ['0', '1', '2']
        assert row['regular'] is False
        assert row['weakly_regular'] is True
        assert row['unconflicted'] is False

    def test_classify_table_text(self, capsys):
        assert main(['classify', 'sierpinski']) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith('point')
        assert len(out.splitlines()) == 3

    def test_partition(self, capsys):
        code, data = run_json(capsys, 'partition', 'square')
        assert code == EXIT_OK
        assert data['topens'] == []
        assert data['residue'] == ['0', '1', '2', '3']

    def test_parametric_fixture(self, capsys):
        code, data = run_json(capsys, 'partition', 'supermajority', '--params', '4')
        assert code == EXIT_OK
        assert data['topens'] == [['0', '1', '2', '3']]

    def test_closure_and_interior(self, capsys):
        assert main(['closure', 'sierpinski', '--set', '0']) == EXIT_OK
        assert capsys.readouterr().out.strip() == '{0}'
        assert main(['interior', 'fig2_top_left', '--set', '0,1']) == EXIT_OK
        assert capsys.readouterr().out.strip() == '{0}'

    def test_propagate(self, capsys):
        code, data = run_json(capsys, 'propagate', 'fig2_top_left', '--seed', '0')
        assert code == EXIT_OK
        assert data['grade2'] == ['0']
        assert data['grade1'] == ['1']
        assert data['value'] == 'A'

    def test_propagate_closed_seed(self, capsys):
        code, data = run_json(capsys, 'propagate', 'fig2_top_left', '--seed', '0,1')
        assert code == EXIT_USAGE
        assert data['error']['type'] == 'SeedNotOpen'

    def test_document_source(self, capsys, tmp_path):
        path = tmp_path / "tiny.json"
        path.write_text(json.dumps({"points": ["a", "b"], "basis": [["a"]]}), encoding='utf-8')
        code, data = run_json(capsys, 'partition', str(path))
        assert code == EXIT_OK
        assert data['topens'] == [['a', 'b']]


class TestCheck:
    """Test cases for the theorem suite command."""

    def test_check_passes(self, capsys):
        assert main(['check', 'fig2_lower_right']) == EXIT_OK
        assert 'passed' in capsys.readouterr().out

    def test_check_single_theorem(self, capsys):
        code, data = run_json(capsys, 'check', 'square', '--theorem', 'partition')
        assert code == EXIT_OK
        assert [t['name'] for t in data['theorems']] == ['partition']

    def test_check_failure_exit_code(self, capsys, mocker):
        from semitop.verification.theorem_suite import SuiteReport, TheoremResult
        mocker.patch.object(cli, 'run_suite', return_value=SuiteReport(
            'square', [TheoremResult('partition', False, ['broken'])]))
        assert main(['check', 'square']) == EXIT_FAILED
        assert '[FAIL] partition' in capsys.readouterr().out

    def test_check_quasiregular_space_without_regular_point(self, capsys):
        code, data = run_json(capsys, 'check', 'quasiregular_without_regular')
        assert code == EXIT_OK
        assert data['passed'] is True


class TestGallery:
    """Test cases for the gallery command."""

    def test_list(self, capsys):
        code, data = run_json(capsys, 'gallery', '--list')
        assert code == EXIT_OK
        assert 'square' in data['fixtures']

    def test_document_to_stdout(self, capsys):
        assert main(['gallery', 'sierpinski']) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data == {'name': 'sierpinski', 'points': ['0', '1'], 'basis': [['1']]}

    def test_write_yaml(self, capsys, tmp_path):
        target = tmp_path / "square.yaml"
        assert main(['gallery', 'square', '--output', str(target), '--format', 'yaml']) == EXIT_OK
        assert target.read_text(encoding='utf-8').startswith('name: square')

    def test_unknown_fixture(self, capsys):
        assert main(['gallery', 'nope']) == EXIT_USAGE
        assert "Unknown fixture" in capsys.readouterr().err

    def test_json_error_payload(self, capsys):
        code, data = run_json(capsys, 'classify', 'nope')
        assert code == EXIT_USAGE
        assert data['error']['type'] == 'UnknownFixture'


class TestErrors:
    """Test cases for error handling and exit codes."""

    def test_schema_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"points": ["0"], "basis": [["zz"]]}), encoding='utf-8')
        code, data = run_json(capsys, 'classify', str(path))
        assert code == EXIT_USAGE
        assert data['error']['field'] == 'basis[0]'
        assert 'zz' in data['error']['message']

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"points": [', encoding='utf-8')
        code, data = run_json(capsys, 'partition', str(path))
        assert code == EXIT_USAGE
        assert data['error']['type'] == 'ParseError'
        assert data['error']['line'] == 1

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_argparse_usage(self):
        with pytest.raises(SystemExit) as excinfo:
            main(['check', 'square', '--theorem', 'fermat'])
        assert excinfo.value.code == 2

    def test_keyboard_interrupt(self, capsys, mocker):
        mocker.patch.object(cli, 'cmd_partition', side_effect=KeyboardInterrupt)
        mocker.patch.dict(cli.COMMANDS, {'partition': cli.cmd_partition})
        assert main(['partition', 'square']) == EXIT_FAILED
        assert 'Operation cancelled by user' in capsys.readouterr().out


class TestOracleDiff:
    """Test cases for the oracle-diff command."""

    def test_agrees(self, capsys):
        code, data = run_json(capsys, 'oracle-diff', '--iters', '10', '--n', '4', '--seed', '3')
        assert code == EXIT_OK
        assert data['agree'] is True
        assert data['checked'] + data['skipped'] == 10

    @pytest.mark.slow
    def test_agrees_at_full_bounds(self, capsys):
        code, data = run_json(capsys, 'oracle-diff', '--iters', '200', '--n', '8', '--k', '10',
                              '--seed', '5')
        assert code == EXIT_OK
        assert data['agree'] is True
        assert data['checked'] + data['skipped'] == 200

    def test_disagreement_writes_reproducer(self, capsys, mocker, tmp_path):
        mocker.patch.object(cli, 'compare_with_oracle', return_value=[
            OracleReport('closure', 'closure', '{0}', True, False)])
        target = tmp_path / "repro.json"
        code, data = run_json(capsys, 'oracle-diff', '--iters', '3', '--reproducer', str(target))
        assert code == EXIT_FAILED
        assert data['iteration'] == 0
        assert target.exists()

    def test_n_out_of_range(self):
        with pytest.raises(SystemExit):
            main(['oracle-diff', '--n', '99'])
