"""Inference from preclusions alone: a perfectly correlated pair.

Two detectors, histories named by the joint outcome (uppercase fires).
Declaring {Ab}, {aB} and their sum {Ab aB} to be precluded forces the
admissible coevents to tie the detectors together: once you condition on
detector A firing, every surviving coevent makes B fire too.
"""

from coevents import (infer, load_bundled, multiplicative_scheme,
                      parse_event, parse_scenario, render_result)

scenario = parse_scenario(load_bundled('ab_correlation'))
space = scenario.space
p = scenario.preclusion_set()
print('precluded:', ' '.join(str(e) for e in p.events))

result = multiplicative_scheme(p)
print()
print('admissible coevents (multiplicative scheme):')
print(render_result(result), end='')

a_fires = parse_event('{AB Ab}', space)
b_fires = parse_event('{AB aB}', space)
b_quiet = parse_event('{Ab ab}', space)

print()
print('inference, conditioning on "A fires" = {AB Ab}:')
for label, query in [('B fires', b_fires), ('B stays quiet', b_quiet)]:
    verdict = infer(result, [(a_fires, 1)], query)
    print(f'  {label:14} ({query}): {verdict}')

print()
print('with no conditioning the individual outcomes stay open:')
for query in (a_fires, b_fires):
    print(f'  {str(query):8}: {infer(result, [], query)}')
