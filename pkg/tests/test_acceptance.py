"""Acceptance suite: ten pinned criteria, each timed against its budget.

Run `pytest tests/test_acceptance.py -v` for one line per criterion; a
summary block with timings is printed at the end of the session.
"""

import itertools
import random
import time
from contextlib import contextmanager

from coevents import (Coevent, SampleSpace, DecoherenceMatrix, ideal_scheme,
                      infer, linear_scheme, load_bundled, monomial,
                      multiplicative_scheme, parse_coevent, parse_event,
                      parse_scenario, render_scenario)
from coevents import oracle
from coevents.cli import main
from coevents.measure import PreclusionSet
from coevents.scenario import ScenarioError


@contextmanager
def criterion(report, number, label, limit_s):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        report.append(f'criterion {number:2d}: FAIL - {label}')
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= limit_s:
        report.append(f'criterion {number:2d}: FAIL - {label} '
                      f'(over budget: {elapsed:.2f}s >= {limit_s:g}s)')
        raise AssertionError(
            f'criterion {number} exceeded its {limit_s:g}s budget: {elapsed:.2f}s')
    report.append(f'criterion {number:2d}: PASS - {label} '
                  f'({elapsed:.2f}s, budget {limit_s:g}s)')


def texts(coevents):
    return [str(phi) for phi in coevents]


def random_preclusions(rng, space, density=0.35):
    members = [ev for ev in space.events() if rng.random() < density]
    return PreclusionSet.explicit(space, members)


def test_criterion_01_two_slit(acceptance_report):
    with criterion(acceptance_report, 1,
                   'two-slit preclusions and multiplicative scheme', 1.0):
        scenario = parse_scenario(load_bundled('two_slit'))
        p = scenario.preclusion_set()
        assert [str(ev) for ev in p.events] == ['{}', '{g1 g3}']
        assert texts(multiplicative_scheme(p).coevents) == ['g2*', 'g4*']


def test_criterion_02_three_slit_all_schemes(acceptance_report):
    with criterion(acceptance_report, 2,
                   'three-slit results for all three schemes', 5.0):
        scenario = parse_scenario(load_bundled('three_slit'))
        space = scenario.space
        p = scenario.preclusion_set()

        result = multiplicative_scheme(p)
        assert texts(result.coevents) == ['a*b*']
        phi = result.coevents[0]
        for text, value in [('{a}', 0), ('{b}', 0), ('{c}', 0), ('{a c}', 0),
                            ('{b c}', 0), ('{a b}', 1), ('{a b c}', 1)]:
            assert phi(parse_event(text, space)) == value, text

        assert texts(linear_scheme(p).coevents) == ['a*+b*+c*']
        assert texts(ideal_scheme(p).coevents) == ['a*+b*+c*', 'a*b*']


def test_criterion_03_ab_correlation(acceptance_report):
    with criterion(acceptance_report, 3,
                   'correlated-pair schemes and inference', 1.0):
        scenario = parse_scenario(load_bundled('ab_correlation'))
        space = scenario.space
        p = scenario.preclusion_set()

        result = multiplicative_scheme(p)
        assert texts(result.coevents) == ['AB*', 'ab*']
        assert texts(ideal_scheme(p).coevents) == ['AB*', 'ab*']

        a_fires = parse_event('{AB Ab}', space)
        b_fires = parse_event('{AB aB}', space)
        b_quiet = parse_event('{Ab ab}', space)
        assert infer(result, [(a_fires, 1)], b_fires) == 'always-true'
        assert infer(result, [(a_fires, 1)], b_quiet) == 'always-false'


def test_criterion_04_census_at_n4(acceptance_report):
    with criterion(acceptance_report, 4,
                   'coevent census at n=4: 65536 total, 16 multiplicative', 10.0):
        space = SampleSpace(['a', 'b', 'c', 'd'])
        n_events = 1 << space.size
        total = 0
        multiplicative = []
        for phi in oracle.enumerate_coevents(space):
            total += 1
            table = oracle.table_of(phi)
            if table and oracle.pairwise_multiplicative(table, n_events):
                multiplicative.append(phi)
        assert total == 65536
        assert len(multiplicative) == 16
        # the sixteen are exactly the monomials (constant 1 included)
        expected = {Coevent.one(space)} | {
            monomial(ev) for ev in space.events() if ev.bits}
        assert set(multiplicative) == expected


def test_criterion_05_classical_limit(acceptance_report):
    with criterion(acceptance_report, 5,
                   'classical limit on 200 random downward-closed sets', 30.0):
        rng = random.Random(20260815)
        for trial in range(200):
            n = rng.randint(1, 4)
            space = SampleSpace('wxyz'[:n])
            chosen = rng.sample(range(n), rng.randrange(n))
            members = [
                space.event(space.names[i] for i in combo)
                for size in range(len(chosen) + 1)
                for combo in itertools.combinations(chosen, size)]
            p = PreclusionSet.explicit(space, members)
            assert p.is_classical()
            expected = [str(monomial(space.atom(space.names[i])))
                        for i in range(n) if i not in chosen]
            assert texts(multiplicative_scheme(p).coevents) == expected, trial


def test_criterion_06_oracle_equivalence(acceptance_report):
    with criterion(acceptance_report, 6,
                   'solver/oracle agreement on random preclusion sets', 60.0):
        rng = random.Random(1)
        for trial in range(100):
            space = SampleSpace('wxyz'[:rng.randint(1, 4)])
            p = random_preclusions(rng, space)
            assert (set(multiplicative_scheme(p).coevents)
                    == set(oracle.brute_multiplicative(p))), trial

        rng = random.Random(2)
        for trial in range(100):
            space = SampleSpace('wxyz'[:rng.randint(1, 4)])
            p = random_preclusions(rng, space)
            assert (set(linear_scheme(p).coevents)
                    == set(oracle.brute_linear(p))), trial

        rng = random.Random(3)
        for trial in range(50):
            space = SampleSpace('xyz')
            p = random_preclusions(rng, space)
            result = ideal_scheme(p)
            sets, weight = oracle.brute_min_cover(p)
            assert result.total_complexity == weight, trial
            assert tuple(result.generating_sets or ()) == sets, trial


def test_criterion_07_transform_involution(acceptance_report):
    with criterion(acceptance_report, 7,
                   'truth-table transform is an involution', 10.0):
        for n in (1, 2, 3):
            space = SampleSpace('abc'[:n])
            for table in range(1 << (1 << n)):
                phi = oracle.coevent_from_table(space, table)
                assert oracle.table_of(phi) == table
        rng = random.Random(4)
        space = SampleSpace(['a', 'b', 'c', 'd'])
        for _ in range(1000):
            table = rng.randrange(1 << 16)
            phi = oracle.coevent_from_table(space, table)
            assert oracle.table_of(phi) == table


def test_criterion_08_positivity_and_absorption(acceptance_report):
    with criterion(acceptance_report, 8,
                   'strong positivity and null-set absorption', 5.0):
        for name in ('two_slit', 'three_slit'):
            d = parse_scenario(load_bundled(name)).decoherence_matrix()
            assert d.is_strongly_positive(), name
            assert d.null_absorption_holds(), name
        # the correlated-pair file lists its zeros outright; amplitudes
        # (1,0,0,1) realize the same preclusion set, so check that matrix
        scenario = parse_scenario(load_bundled('ab_correlation'))
        d = DecoherenceMatrix.from_amplitudes(scenario.space, [1, 0, 0, 1])
        assert d.preclusions() == scenario.preclusion_set()
        assert d.is_strongly_positive()
        assert d.null_absorption_holds()


def test_criterion_09_non_unital_generator(acceptance_report):
    with criterion(acceptance_report, 9,
                   'two-slit ideal search keeps a non-unital pair generator', 5.0):
        scenario = parse_scenario(load_bundled('two_slit'))
        space = scenario.space
        p = scenario.preclusion_set()
        result = ideal_scheme(p)
        assert result.unique
        members = result.generating_sets[0]
        precluded_pair = parse_event('{g1 g3}', space)
        wanted = monomial(space.atom('g1')) + monomial(space.atom('g3'))
        assert wanted in members
        assert not wanted.is_unital()
        assert wanted.support == precluded_pair
        assert precluded_pair in p


def test_criterion_10_parser_and_cli_contract(acceptance_report, tmp_path, capsys):
    malformed = [
        '',
        'title only a title\n',
        'histories\nprecluded {}\n',
        'histories a a\nprecluded {}\n',
        'histories a+b\nprecluded {}\n',
        'histories a b\n',
        'histories a b\nhistories c d\nprecluded {a}\n',
        'histories a b\nfrobnicate 1\nprecluded {a}\n',
        'histories a b\nprecluded\n',
        'histories a b\nprecluded {q}\n',
        'histories a b\nprecluded {a\n',
        'histories a b\nprecluded a}\n',
        'histories a b\nprecluded {a a}\n',
        'histories a b\nprecluded a++b\n',
        'histories a b\namplitude a 1\n',
        'histories a b\namplitude a 1\namplitude a 1\namplitude b 1\n',
        'histories a b\namplitude q 1\namplitude b 1\n',
        'histories a b\namplitude a\namplitude b 1\n',
        'histories a b\namplitude a 1/0\namplitude b 1\n',
        'histories a b\namplitude a 0.5\namplitude b 1\n',
        'histories a b\namplitude a 1\namplitude b 1\nblock a\n',
        'histories a b\namplitude a 1\namplitude b 1\nblock a b\nblock a\n',
        'histories a b\nblock a b\n',
        'histories a b\ndmatrix 1 0\n',
        'histories a b\ndmatrix 1 0 0\ndmatrix 0 1\n',
        'histories a b\ndmatrix 0 1\ndmatrix 2 0\n',
        'histories a b\ndmatrix 1 x\ndmatrix 0 1\n',
        'histories a b\namplitude a 1\namplitude b 1\nprecluded {a}\n',
        'title t\ntitle t again\nhistories a\nprecluded {}\n',
    ]
    with criterion(acceptance_report, 10,
                   'bundled round trips; malformed corpus never crashes', 5.0):
        for name in ('two_slit', 'three_slit', 'ab_correlation',
                     'everything_precluded'):
            scenario = parse_scenario(load_bundled(name))
            canonical = render_scenario(scenario)
            assert parse_scenario(canonical) == scenario, name
            assert render_scenario(parse_scenario(canonical)) == canonical, name

        assert len(malformed) >= 20
        for index, text in enumerate(malformed):
            try:
                parse_scenario(text)
            except ScenarioError as exc:
                assert exc.diagnostics, index
                for diag in exc.diagnostics:
                    assert diag.line >= 1 and diag.column >= 1, index
                    assert diag.message
            else:
                raise AssertionError(f'malformed case {index} parsed cleanly')

            path = tmp_path / f'bad_{index}'
            path.write_text(text)
            code = main(['solve', str(path), '--scheme', 'multiplicative'])
            captured = capsys.readouterr()
            assert code == 2, index
            assert captured.err.strip(), index
