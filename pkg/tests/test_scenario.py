"""Scenario parsing with positioned diagnostics, rendering, bundled files."""

import json

import pytest

from coevents import (GaussianRational, ParseDiagnostic, ScenarioError,
                      bundled_names, ideal_scheme, linear_scheme, load_bundled,
                      multiplicative_scheme, parse_scenario, render_complex,
                      render_result, render_scenario)


def diagnostics_of(text):
    with pytest.raises(ScenarioError) as info:
        parse_scenario(text)
    return info.value.diagnostics


def positions(text):
    return [(d.line, d.column) for d in diagnostics_of(text)]


class TestBundled:

    def test_names(self):
        assert bundled_names() == (
            'ab_correlation', 'everything_precluded', 'three_slit', 'two_slit')

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            load_bundled('four_slit')

    def test_two_slit_contents(self, two_slit):
        assert two_slit.mode == 'amplitudes'
        assert two_slit.space.names == ('g1', 'g2', 'g3', 'g4')
        assert two_slit.amplitudes == tuple(
            GaussianRational(v) for v in (1, 1, -1, 1))
        assert [ev.labels for ev in two_slit.blocks] == [
            ('g1', 'g3'), ('g2', 'g4')]
        assert two_slit.title is not None

    def test_three_slit_defaults_to_one_block(self, three_slit):
        assert three_slit.mode == 'amplitudes'
        assert three_slit.blocks == (three_slit.space.full,)

    def test_ab_correlation_contents(self, ab_correlation):
        assert ab_correlation.mode == 'explicit'
        assert ab_correlation.decoherence_matrix() is None
        assert [str(ev) for ev in ab_correlation.precluded] == [
            '{Ab}', '{aB}', '{Ab aB}']

    def test_everything_precluded(self):
        scenario = parse_scenario(load_bundled('everything_precluded'))
        assert scenario.preclusion_set().precludes_everything()


class TestRoundTrip:

    @pytest.mark.parametrize('name', [
        'two_slit', 'three_slit', 'ab_correlation', 'everything_precluded'])
    def test_bundled(self, name):
        scenario = parse_scenario(load_bundled(name))
        canonical = render_scenario(scenario)
        assert parse_scenario(canonical) == scenario
        assert render_scenario(parse_scenario(canonical)) == canonical

    def test_dmatrix_scenario(self):
        text = ('histories x y\n'
                'dmatrix 1 1/2+1/2i\n'
                'dmatrix 1/2-1/2i 1\n')
        scenario = parse_scenario(text)
        assert scenario.mode == 'dmatrix'
        d = scenario.decoherence_matrix()
        assert d.entry(1, 0) == d.entry(0, 1).conjugate()
        assert render_complex(d.entry(0, 1)) == '1/2+1/2i'
        assert parse_scenario(render_scenario(scenario)) == scenario

    def test_sum_form_normalizes(self):
        a = parse_scenario('histories a b\nprecluded a+b\n')
        b = parse_scenario('histories a b\nprecluded {a b}\n')
        assert a == b

    def test_comments_and_blank_lines_ignored(self):
        text = ('# leading comment\n\n'
                'histories a b  # trailing comment\n'
                '\n'
                'precluded {a}\n')
        scenario = parse_scenario(text)
        assert scenario.space.names == ('a', 'b')
        assert [str(e) for e in scenario.precluded] == ['{a}']


class TestDiagnostics:

    def test_str_format(self):
        d = ParseDiagnostic(3, 7, 'boom')
        assert str(d) == '3:7: error: boom'

    def test_missing_histories(self):
        assert positions('precluded {a}\n') == [(1, 1)]

    def test_unknown_directive(self):
        text = 'histories a b\nfrobnicate 1\nprecluded {a}\n'
        assert (2, 1) in positions(text)
        assert any('frobnicate' in d.message for d in diagnostics_of(text))

    def test_duplicate_histories(self):
        text = 'histories a b\nhistories c\nprecluded {a}\n'
        assert (2, 1) in positions(text)

    def test_duplicate_label(self):
        assert (1, 15) in positions('histories a b a\nprecluded {a}\n')

    def test_reserved_character_in_label(self):
        diags = diagnostics_of('histories a b+c\nprecluded {a}\n')
        assert any('reserved' in d.message for d in diags)

    def test_no_mode(self):
        diags = diagnostics_of('histories a b\n')
        assert any('fixes no measure' in d.message for d in diags)

    def test_mode_conflict(self):
        text = 'histories a b\namplitude a 1\namplitude b 1\nprecluded {a}\n'
        diags = diagnostics_of(text)
        assert any('conflicting measure modes' in d.message for d in diags)

    def test_block_without_amplitudes(self):
        diags = diagnostics_of('histories a b\nblock a b\n')
        assert any("'block' lines without" in d.message for d in diags)

    def test_unknown_amplitude_label(self):
        assert (2, 11) in positions('histories a b\namplitude q 1\namplitude b 1\n')

    def test_duplicate_amplitude(self):
        text = 'histories a b\namplitude a 1\namplitude a 2\namplitude b 1\n'
        assert (3, 11) in positions(text)

    def test_missing_amplitude(self):
        diags = diagnostics_of('histories a b\namplitude a 1\n')
        assert any("missing amplitude for 'b'" in d.message for d in diags)

    def test_malformed_amplitude_position(self):
        # the column points into the bad number, not at the directive
        assert (2, 13) in positions('histories a b\namplitude a 1.5\namplitude b 1\n')

    def test_zero_denominator_position(self):
        assert (2, 15) in positions('histories a b\namplitude a 1/0\namplitude b 1\n')

    def test_block_overlap(self):
        text = ('histories a b c\namplitude a 1\namplitude b 1\namplitude c 1\n'
                'block a b\nblock b c\n')
        assert (6, 7) in positions(text)

    def test_block_not_covering(self):
        text = ('histories a b c\namplitude a 1\namplitude b 1\namplitude c 1\n'
                'block a b\n')
        diags = diagnostics_of(text)
        assert any("do not cover 'c'" in d.message for d in diags)

    def test_dmatrix_row_count(self):
        diags = diagnostics_of('histories a b\ndmatrix 1 0\n')
        assert any('needs 2 rows' in d.message for d in diags)

    def test_dmatrix_row_length(self):
        diags = diagnostics_of('histories a b\ndmatrix 1 0 0\ndmatrix 0 1\n')
        assert any('needs 2 entries' in d.message for d in diags)

    def test_dmatrix_not_hermitian(self):
        text = 'histories a b\ndmatrix 0 1\ndmatrix 2 0\n'
        diags = diagnostics_of(text)
        assert any('not Hermitian' in d.message for d in diags)
        assert (3, 9) in positions(text)

    def test_precluded_bad_event(self):
        assert (2, 14) in positions('histories a b\nprecluded {a q}\n')

    def test_precluded_missing_event(self):
        diags = diagnostics_of('histories a b\nprecluded\nprecluded {a}\n')
        assert any("'precluded' needs an event" in d.message for d in diags)

    def test_title_needs_text(self):
        diags = diagnostics_of('title\nhistories a\nprecluded {a}\n')
        assert any("'title' needs text" in d.message for d in diags)

    def test_all_problems_reported_at_once(self):
        text = ('histories a b\n'
                'amplitude a 1/0\n'
                'amplitude q 1\n'
                'frobnicate\n')
        diags = diagnostics_of(text)
        assert len(diags) >= 3
        lines = {d.line for d in diags}
        assert {2, 3, 4} <= lines


class TestRenderResult:

    def test_three_slit_text(self, three_slit):
        result = ideal_scheme(three_slit.preclusion_set())
        assert render_result(result) == (
            'a*+b*+c*  unital=yes  complexity=3\n'
            'a*b*  unital=yes  complexity=2\n'
            'generating set: total complexity 5, unique\n'
            '  a*+b*+c*  unital=yes  complexity=3\n'
            '  a*b*  unital=yes  complexity=2\n')

    def test_two_slit_text_warns_about_uncovered(self, two_slit):
        text = render_result(ideal_scheme(two_slit.preclusion_set()))
        assert 'g1*+g3*  unital=no  complexity=2' in text
        assert text.endswith(
            'warning: unital coevents do not cover all non-precluded events: '
            '{g1} {g3}\n')

    def test_no_viable_coevent(self):
        scenario = parse_scenario(load_bundled('everything_precluded'))
        result = multiplicative_scheme(scenario.preclusion_set())
        assert render_result(result) == 'no viable coevent\n'

    def test_json_schema(self, three_slit):
        result = ideal_scheme(three_slit.preclusion_set())
        document = json.loads(render_result(result, 'json'))
        assert document['scheme'] == 'ideal'
        assert document['coevents'] == ['a*+b*+c*', 'a*b*']
        assert document['total_complexity'] == 5
        assert document['unique'] is True
        assert document['generating_sets'] == [['a*+b*+c*', 'a*b*']]
        assert document['uncovered_by_unital'] == []
        assert [g['polynomial'] for g in document['generating_set']] == [
            'a*+b*+c*', 'a*b*']
        assert all(set(g) == {'polynomial', 'unital', 'complexity'}
                   for g in document['generating_set'])
        assert 'diagnostics' in document

    def test_json_for_linear(self, three_slit):
        result = linear_scheme(three_slit.preclusion_set())
        document = json.loads(render_result(result, 'json'))
        assert document['coevents'] == ['a*+b*+c*']
        assert 'generating_set' not in document

    def test_unknown_format(self, three_slit):
        result = linear_scheme(three_slit.preclusion_set())
        with pytest.raises(ValueError):
            render_result(result, 'yaml')

    def test_deterministic(self, three_slit):
        p = three_slit.preclusion_set()
        assert render_result(ideal_scheme(p), 'json') == render_result(
            ideal_scheme(p), 'json')
