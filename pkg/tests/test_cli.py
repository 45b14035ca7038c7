"""Tests for the command line interface."""

import json
import math

import pytest

from steincert.cli.common import parse_degrees, parse_distance, parse_distances, parse_points
from steincert.errors import DomainError

FAST_CAPS = ['--degree-cap', '2000', '--k-verify', '4000']


def read_json(path):
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


class TestParsers:

    @pytest.mark.parametrize('text,value', [
        ('pi/2', math.pi / 2),
        ('2pi/3', 2 * math.pi / 3),
        ('0.5*pi', 0.5 * math.pi),
        ('pi', math.pi),
        ('1e-3', 1e-3),
        (' 0.25 ', 0.25),
    ])
    def test_distance(self, text, value):
        assert parse_distance(text) == pytest.approx(value)

    def test_distance_garbage(self):
        with pytest.raises(DomainError, match='distance'):
            parse_distance('half')

    def test_distance_list(self):
        assert parse_distances('') == []
        assert parse_distances('1.0, pi/4') == pytest.approx([1.0, math.pi / 4])

    def test_degrees(self):
        assert parse_degrees('0:3,7') == [0, 1, 2, 3, 7]

    def test_negative_degree(self):
        with pytest.raises(DomainError, match='degree'):
            parse_degrees('-1')

    @pytest.mark.parametrize('text', ['abc', '1:', '2,x', ''])
    def test_malformed_degrees(self, text):
        with pytest.raises(DomainError, match='degree'):
            parse_degrees(text)

    def test_points(self):
        assert parse_points('-1, 0.5,1') == [-1.0, 0.5, 1.0]

    @pytest.mark.parametrize('text', ['x', '0.5,half', ','])
    def test_malformed_points(self, text):
        with pytest.raises(DomainError, match='point'):
            parse_points(text)


class TestBound:

    def test_single_distance(self, invoke, tmp_path):
        out = tmp_path / 'bound.json'
        result = invoke('bound', '--space', 's2', '--n', '1', *FAST_CAPS, '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['bound'] == 0.5
        assert data['z'] == [0.5, 1.0]
        assert data['S'] is None
        assert data['feasibility']['verdict'] in ('Feasible', 'FeasibleUpToCap')
        assert data['decay_claim']['ok']

    def test_octonionic_plane(self, invoke, tmp_path):
        out = tmp_path / 'bound.json'
        result = invoke('bound', '--space', 'op2', '--n', '1', *FAST_CAPS, '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['alpha'] == 7.0
        assert data['bound'] <= 0.5

    def test_circle_is_refused(self, invoke):
        result = invoke('bound', '--space', 's1', '--n', '3')
        assert result.exit_code == 2
        assert 'counterexample' in result.output

    def test_unknown_space(self, invoke):
        result = invoke('bound', '--space', 'x7')
        assert result.exit_code == 2

    def test_human_format(self, invoke, tmp_path):
        out = tmp_path / 'bound.txt'
        result = invoke('bound', '--space', 's2', *FAST_CAPS, '--format', 'human', '--out', str(out))
        assert result.exit_code == 0, result.output
        assert 'bound: 0.5' in out.read_text(encoding='utf-8')

    @pytest.mark.slow
    def test_three_distances(self, invoke, tmp_path):
        out = tmp_path / 'bound.json'
        result = invoke('bound', '--space', 's2', '--n', '3', '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['bound'] <= 0.125
        assert len(data['distances']) == 3
        assert data['caps']['extrapolated_steps'] >= 1

    @pytest.mark.slow
    def test_complex_projective_plane(self, invoke, tmp_path):
        out = tmp_path / 'bound.json'
        result = invoke('bound', '--space', 'cp2', '--n', '2', *FAST_CAPS, '--out', str(out))
        assert result.exit_code == 0, result.output
        assert read_json(out)['bound'] <= 0.25

    @pytest.mark.slow
    def test_real_projective_plane(self, invoke, tmp_path):
        out = tmp_path / 'bound.json'
        result = invoke('bound', '--space', 'rp2', '--n', '3', '--k-verify', '10000',
                        '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['bound'] <= 0.125
        assert data['feasibility']['min_slack'] >= -1e-8
        assert data['decay_claim']['min_slack'] >= -1e-9

    @pytest.mark.slow
    def test_octonionic_plane_runs_out_of_precision(self, invoke):
        result = invoke('bound', '--space', 'op2', '--n', '3')
        assert result.exit_code == 3
        assert 'double precision' in result.output


class TestDistancesAndCertificate:

    def test_distances_csv(self, invoke, tmp_path):
        out = tmp_path / 'plan.csv'
        result = invoke('distances', '--space', 's2', '--n', '2', *FAST_CAPS,
                        '--format', 'csv', '--out', str(out))
        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 'index,distance,k0,u0,r,extrapolated'
        assert len(lines) == 3

    def test_certificate_with_bad_spacing(self, invoke, tmp_path):
        out = tmp_path / 'certificate.json'
        result = invoke('certificate', '--space', 's2', '--distances', '0.99,0.9', *FAST_CAPS,
                        '--out', str(out))
        assert result.exit_code == 4
        assert read_json(out)['spacing_ok'] is False


class TestLPSolve:

    def test_no_distances(self, invoke, tmp_path):
        out = tmp_path / 'lp.json'
        result = invoke('lp-solve', '--K', '3', '--out', str(out))
        assert result.exit_code == 0, result.output
        assert read_json(out)['value'] == pytest.approx(1.0)

    def test_right_angle(self, invoke, tmp_path):
        out = tmp_path / 'lp.json'
        result = invoke('lp-solve', '--space', 's2', '--distances', 'pi/2', '--K', '2',
                        '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['value'] == pytest.approx(1 / 3, abs=1e-9)
        assert data['status'] == 'Optimal'
        assert abs(data['gap']) <= 1e-9

    def test_out_of_range_distance(self, invoke):
        assert invoke('lp-solve', '--distances', '4.0').exit_code == 2


class TestCounterexample:

    def test_circle(self, invoke, tmp_path):
        out = tmp_path / 'arcs.json'
        result = invoke('counterexample', '--space', 's1', '--k', '3', '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['total_measure'] >= 1 / 8
        assert data['min_gap'] > 0
        assert data['samples'] == 20000

    def test_projective_line(self, invoke, tmp_path):
        out = tmp_path / 'arcs.json'
        result = invoke('counterexample', '--space', 'rp1', '--k', '1', '--samples', '5000',
                        '--out', str(out))
        assert result.exit_code == 0, result.output
        assert read_json(out)['d_k'] == pytest.approx(math.pi / 3, abs=1e-12)

    def test_csv_rows(self, invoke, tmp_path):
        out = tmp_path / 'arcs.csv'
        result = invoke('counterexample', '--space', 's1', '--k', '2', '--format', 'csv',
                        '--out', str(out))
        assert result.exit_code == 0, result.output
        assert len(out.read_text(encoding='utf-8').splitlines()) == 6

    def test_wrong_space(self, invoke):
        assert invoke('counterexample', '--space', 'cp2', '--k', '1').exit_code == 2

    def test_level_guard(self, invoke):
        assert invoke('counterexample', '--space', 's1', '--k', '13').exit_code == 2


class TestJacobiEval:

    def test_single_value(self, invoke, tmp_path):
        out = tmp_path / 'values.json'
        result = invoke('jacobi-eval', '--degrees', '2', '--points', '0.5', '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['values'][0]['P_2'] == pytest.approx(-0.125)
        assert data['largest_zeros']['2'] == pytest.approx(1 / math.sqrt(3))

    def test_csv_curve(self, invoke, tmp_path):
        out = tmp_path / 'values.csv'
        result = invoke('jacobi-eval', '--alpha', '1', '--beta', '0', '--degrees', '0:2',
                        '--samples', '11', '--derivative', '--format', 'csv', '--out', str(out))
        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 't,P_0,P_1,P_2,dP_0,dP_1,dP_2'
        assert len(lines) == 12

    def test_alpha_without_beta(self, invoke):
        assert invoke('jacobi-eval', '--alpha', '1', '--degrees', '2').exit_code == 2

    def test_point_outside_interval(self, invoke):
        assert invoke('jacobi-eval', '--degrees', '2', '--points', '1.5').exit_code == 2

    @pytest.mark.parametrize('args', [
        ('--degrees', 'abc'),
        ('--degrees', '1:'),
        ('--degrees', '2', '--points', 'x'),
    ])
    def test_malformed_input_is_usage_error(self, invoke, args):
        result = invoke('jacobi-eval', *args)
        assert result.exit_code == 2
        assert 'Traceback' not in result.output


class TestVerify:

    @pytest.mark.slow
    def test_sphere(self, invoke, tmp_path):
        out = tmp_path / 'verify.json'
        result = invoke('verify', '--space', 's2', '--degree-cap', '2000', '--out', str(out))
        assert result.exit_code == 0, result.output
        data = read_json(out)
        assert data['ok']
        assert all(data['checks'].values())

    def test_circle_is_refused(self, invoke):
        assert invoke('verify', '--space', 's1').exit_code == 2
