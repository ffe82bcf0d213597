"""Three-slit walkthrough: one detector, amplitudes 1, 1, -1.

With a single interference block, the events {a c} and {b c} are
precluded while every single slit has measure one and {a b} has measure
four.  No classical truth assignment survives this pattern: the
multiplicative scheme's answer a*b* says "the particle went through slits
a and b jointly", true on {a b} but false on {a}, {b} and {c} separately.
"""

from coevents import (ideal_generator, ideal_scheme, linear_scheme,
                      load_bundled, multiplicative_scheme, parse_scenario,
                      render_result)

scenario = parse_scenario(load_bundled('three_slit'))
space = scenario.space
d = scenario.decoherence_matrix()

print('measure table:')
for ev in space.events():
    print(f'  mu({str(ev):9}) = {d.measure(ev)}')

p = scenario.preclusion_set()
print()
print('precluded:', ' '.join(str(e) for e in p.events))

for solve in (multiplicative_scheme, linear_scheme, ideal_scheme):
    result = solve(p)
    print()
    print(f'--- {result.scheme} scheme ---')
    print(render_result(result), end='')

phi = multiplicative_scheme(p).coevents[0]
print()
print(f'truth table of the multiplicative answer {phi}:')
for ev in space.events():
    print(f'  {phi}({str(ev):9}) = {phi(ev)}')

g = ideal_generator(p)
print()
print(f'ideal generator (indicator of non-precluded events): {g}')
print('true on:', ' '.join(str(ev) for ev in space.events() if g(ev)))
