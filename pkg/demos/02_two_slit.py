"""Two-slit walkthrough: amplitudes to measure to admissible coevents.

Four histories gNk (slit N, detector site k) with amplitudes 1, 1, -1, 1
and interference blocks per site.  The second site interferes
destructively, so the event "arrived at site 1" has measure zero even
though each of its two histories alone has measure one.  What is real,
then?  The three schemes answer in slightly different ways.
"""

from coevents import (ideal_scheme, linear_scheme, load_bundled,
                      multiplicative_scheme, parse_scenario, render_result)

scenario = parse_scenario(load_bundled('two_slit'))
space = scenario.space
print(f'title: {scenario.title}')
print(f'histories: {" ".join(space.names)}')

d = scenario.decoherence_matrix()
print()
print('quantal measure of some events:')
for labels in [['g1'], ['g3'], ['g1', 'g3'], ['g2', 'g4'], list(space.names)]:
    ev = space.event(labels)
    print(f'  mu({str(ev):12}) = {d.measure(ev)}')

p = scenario.preclusion_set()
print()
print('precluded (measure-zero) events:', ' '.join(str(e) for e in p.events))

for solve in (multiplicative_scheme, linear_scheme, ideal_scheme):
    result = solve(p)
    print()
    print(f'--- {result.scheme} scheme ---')
    print(render_result(result), end='')

print()
print('note the ideal scheme keeps a non-unital generator g1*+g3* around:')
print('it is needed to generate the preclusive ideal, but since it maps the')
print('whole sample space to 0 it cannot itself be a possible reality, and')
print('the events {g1} and {g3} end up affirmed by no admissible coevent.')
