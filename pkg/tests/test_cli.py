import json
import subprocess
import sys

import pytest

import polyteach


def _run(args, capsys):
    status = polyteach.cli.main(args)
    out, err = capsys.readouterr()
    return status, out, err


def test_cli_main_empty():
    with pytest.raises(SystemExit):
        polyteach.cli.main([])


def test_parser_empty():
    with pytest.raises(SystemExit):
        parser = polyteach.cli.create_parser()
        parser.parse_args([])


def test_main_help():
    # Call with the --help option as a basic sanity check.
    with pytest.raises(SystemExit) as exinfo:
        polyteach.cli.main(["--help", ])
    assert exinfo.value.code == 0


def test_invalid_choice():
    with pytest.raises(SystemExit):
        polyteach.cli.main(['experiment', '--mode', 'train', '--n', '3'])


def test_count(capsys):
    status, out, _ = _run(['count', '--n', '3', '--d', '2'], capsys)
    assert status == 0
    data = json.loads(out)
    assert data == {'regions': 7, 'faces': 9, 'avg_teaching': '18/7',
                    'bounds': None}


def test_count_bounds(capsys):
    status, out, _ = _run(['count', '--n', '7', '--d', '3', '--dprime', '2'],
                          capsys)
    assert status == 0
    data = json.loads(out)
    assert data['regions'] == 29
    assert data['bounds']['regions'] == ['15', '63/2']


def test_count_domain(capsys):
    status, _, err = _run(['count', '--n', '0'], capsys)
    assert status == 2
    assert err.startswith('[ERROR] ')


def test_enumerate(filepath, capsys):
    path = filepath('triangle.json')
    status, out, _ = _run(['enumerate', '--arrangement', path, '--faces'],
                          capsys)
    assert status == 0
    data = json.loads(out)
    assert data['count'] == 7
    assert data['position'] == 'relaxed-general(2)'
    assert data['regions'][0]['signs'] == '+++'
    assert data['faces'] == {'total': 9, 'per_hyperplane': [3, 3, 3]}


def test_enumerate_csv(filepath, capsys):
    path = filepath('parallel.json')
    status, out, _ = _run(['enumerate', '--arrangement', path, '-f', 'csv'],
                          capsys)
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == 'signs,witness'
    assert [line.split(',')[0] for line in lines[1:]] == [
        '+++', '++-', '+--', '---']


def test_teach(filepath, capsys):
    path = filepath('triangle.json')
    status, out, _ = _run(['teach', '--arrangement', path,
                           '--region', '++-'], capsys)
    assert status == 0
    data = json.loads(out)
    assert data['size'] == 3
    assert data['target'] == '++-'


def test_teach_empty_region(filepath, capsys):
    path = filepath('triangle.json')
    status, _, err = _run(['teach', '--arrangement', path,
                           '--region', '--+'], capsys)
    assert status == 2
    assert err == '[ERROR] Region --+ is empty\n'


def test_teach_bad_signs(filepath, capsys):
    path = filepath('triangle.json')
    status, _, err = _run(['teach', '--arrangement', path,
                           '--region', '++'], capsys)
    assert status == 2
    assert 'has length 2, expected 3' in err


def test_census(filepath, capsys):
    path = filepath('triangle.json')
    status, out, _ = _run(['census', '--arrangement', path], capsys)
    assert status == 0
    data = json.loads(out)
    assert data == {'regions': 7, 'total': 18, 'mean': '18/7',
                    'histogram': {'2': 3, '3': 4}}


def test_invalid_infile(filepath, capsys):
    path = filepath('missing.json')
    status, _, err = _run(['census', '--arrangement', path], capsys)
    assert status == 2
    assert err[:22] == "[ERROR] Failed to read"


def test_invalid_outfile(filepath, capsys):
    path = filepath('triangle.json')
    outpath = filepath('/missing/census.json')
    status, _, err = _run(['census', '--arrangement', path, '-o', outpath],
                          capsys)
    assert status == 2
    assert err[:22] == "[ERROR] Failed to open"


def test_output_file(filepath, tmpdir):
    path = filepath('triangle.json')
    out_path = str(tmpdir.join('census.json'))
    assert polyteach.cli.main(['census', '--arrangement', path,
                               '-o', out_path]) == 0
    with open(out_path, encoding='utf-8') as f:
        assert json.load(f)['mean'] == '18/7'


def test_zero_denominator(filepath, capsys):
    path = filepath('zero_denominator.json')
    status, _, err = _run(['enumerate', '--arrangement', path], capsys)
    assert status == 2
    assert 'hyperplanes[0].bias' in err


def test_dichotomy(filepath, capsys):
    path = filepath('points4.json')
    status, out, _ = _run(['dichotomy', '--points', path, '--extreme'],
                          capsys)
    assert status == 0
    data = json.loads(out)
    assert data['classes'] == 4
    assert data['census']['mean'] == '3/2'
    assert {'positive': [0, 1, 2, 3], 'negative': [],
            'extreme': [0, 3]} in data['extreme']


def test_dichotomy_quadratic(filepath, capsys):
    path = filepath('points4.json')
    status, out, _ = _run(['dichotomy', '--points', path,
                           '--phi', 'monomial2'], capsys)
    assert status == 0
    assert json.loads(out)['classes'] == 7


def test_dichotomy_bad_phi(filepath, capsys):
    path = filepath('points4.json')
    status, _, err = _run(['dichotomy', '--points', path, '--phi', 'cubic'],
                          capsys)
    assert status == 2
    assert "Unknown feature map 'cubic'" in err


def test_rank(filepath, capsys):
    path = filepath('objects3.json')
    status, out, _ = _run(['rank', '--objects', path, '--census'], capsys)
    assert status == 0
    data = json.loads(out)
    assert data['objects'] == 3
    assert data['cells'] == 6
    assert data['census']['mean'] == '2'
    orders = sorted(tuple(r['ranking']) for r in data['rankings'])
    assert orders[0] == (0, 1, 2)


def test_worst_case(capsys):
    status, out, _ = _run(['worst-case', '--n', '4', '--d', '2'], capsys)
    assert status == 0
    data = json.loads(out)
    assert data['teaching_size'] == 4
    assert data['target'] == '----'
    assert len(data['arrangement']['hyperplanes']) == 4


def test_experiment(capsys):
    status, out, _ = _run(['experiment', '--mode', 'count-verify',
                           '--n', '4', '--d', '2', '--trials', '2'], capsys)
    assert status == 0
    data = json.loads(out)
    assert data['summary']['verdict'] == 'pass'
    assert len(data['records']) == 2


def test_experiment_csv(capsys):
    status, out, err = _run(['experiment', '--mode', 'worst-case',
                             '--n', '3', '-f', 'csv'], capsys)
    assert status == 0
    assert out.splitlines()[0] == 'trial,target,size,ok'
    assert json.loads(err)['verdict'] == 'pass'


def test_experiment_config_error(capsys):
    status, _, err = _run(['experiment', '--mode', 'dichotomy',
                           '--n', '3', '--d', '1'], capsys)
    assert status == 2
    assert err == '[ERROR] Mode dichotomy needs d >= 2\n'


@pytest.mark.parametrize('command', ['learn-active', 'learn-passive'])
def test_learn(command, capsys):
    status, out, _ = _run([command, '--n', '5', '--trials', '3',
                           '--seed', '7'], capsys)
    assert status == 0
    data = json.loads(out)
    assert data['config']['mode'] == command.split('-')[1]
    assert all(r['ok'] == 'true' for r in data['records'])


def test_script():
    # Call with the --help option as a basic sanity check.
    cmd = "{:s} -m polyteach --help".format(sys.executable)
    assert subprocess.call(cmd.split()) == 0


def test_package_functions(triangle):
    assert len(polyteach.regions(triangle)) == 7
    assert len(polyteach.regions([((1,), 0)])) == 2
    assert polyteach.teach(triangle, '---').ids == (0, 1)
    assert polyteach.census(triangle).mean == polyteach.counting.avg_teaching(
        3, 2)
    with pytest.raises(polyteach.EmptyConstraintRegion):
        polyteach.teach(triangle, (-1, -1, 1))


def test_not_utf8_infile(filepath, capsys):
    path = filepath('not_utf8.json')
    status, _, err = _run(['enumerate', '--arrangement', path], capsys)
    assert status == 2
    assert err[:22] == "[ERROR] Failed to read"


def test_count_csv(capsys):
    status, out, _ = _run(['count', '--n', '3', '--d', '2', '-f', 'csv'],
                          capsys)
    assert status == 0
    assert out.splitlines() == ['regions,faces,avg_teaching', '7,9,18/7']


def test_teach_csv(filepath, capsys):
    path = filepath('triangle.json')
    status, out, _ = _run(['teach', '--arrangement', path,
                           '--region', '++-', '-f', 'csv'], capsys)
    assert status == 0
    assert out.splitlines() == ['hyperplane,label', '0,+', '1,+', '2,-']


def test_rank_generic(tmpdir, capsys):
    path = tmpdir.join('collinear.json')
    path.write('{"dimension": 2, "points": [["0", "0"], ["1", "0"], '
               '["2", "0"]]}')
    status, out, _ = _run(['rank', '--objects', str(path)], capsys)
    assert status == 0
    assert json.loads(out)['cells'] == 4
    status, _, err = _run(['rank', '--objects', str(path), '--generic'],
                          capsys)
    assert status == 2
    assert 'not in generic position' in err
