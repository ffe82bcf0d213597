"""Tour of the event algebra: a sample space and its Boolean ring.

Events over a finite set of histories form a ring over Z2 where addition
is symmetric difference and multiplication is intersection.  Union is a
derived operation: A u B = A + B + AB.
"""

from coevents import SampleSpace, parse_event

space = SampleSpace(['a', 'b', 'c'])
print(f'sample space: {list(space.names)}  ({space.size} histories,'
      f' {1 << space.size} events)')

ac = space.event(['a', 'c'])
bc = parse_event('{b c}', space)  # same thing, from text
print(f'A = {ac}, B = {bc}')
print(f'A + B   = {ac + bc}    (symmetric difference)')
print(f'A * B   = {ac * bc}      (intersection)')
print(f'A u B   = {ac | bc}  (union = A + B + AB)')
print(f'~A      = {~ac}      (complement)')
print(f'A + A   = {ac + ac}       (every element is its own negative)')

print()
print('sum form on input: "a+c" means {a} + {c}, so duplicates cancel:')
print(f'  parse("a+c")   -> {parse_event("a+c", space)}')
print(f'  parse("a+c+a") -> {parse_event("a+c+a", space)}')

print()
print('all events in enumeration order:')
print(' ', ' '.join(str(ev) for ev in space.events()))
