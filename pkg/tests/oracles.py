"""Brute-force reference computations, deliberately independent of the
package's algorithms."""

import itertools


def words(alphabet, max_length, min_length=0):
    for n in range(min_length, max_length + 1):
        yield from itertools.product(sorted(alphabet), repeat=n)


def reachable(machine):
    seen = {machine.start}
    frontier = [machine.start]
    while frontier:
        s = frontier.pop()
        for a in machine.alphabet:
            t = machine.transition[(s, a)]
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return seen


def output_after(machine, state, word):
    for a in word:
        state = machine.transition[(state, a)]
    return machine.output[state]


def nerode_class_count(machine):
    """Distinct behaviors among reachable states, comparing outputs on every
    word up to length n - 1 (enough to separate inequivalent states of an
    n-state machine)."""
    states = reachable(machine)
    probes = list(words(machine.alphabet, max(len(states) - 1, 0)))
    behaviors = {tuple(output_after(machine, s, w) for w in probes) for s in states}
    return len(behaviors)


def same_outputs_up_to(m1, m2, length):
    return all(
        output_after(m1, m1.start, w) == output_after(m2, m2.start, w)
        for w in words(m1.alphabet, length)
    )


def isomorphic_brute_force(rows1, rows2):
    """Exhaustive search over row and column permutations (tiny tables only)."""
    n = len(rows1)
    m = len(rows1[0]) if n else 0
    if (n, m) != (len(rows2), len(rows2[0]) if rows2 else 0):
        return False
    for rp in itertools.permutations(range(n)):
        for cp in itertools.permutations(range(m)):
            if all(rows1[i][j] == rows2[rp[i]][cp[j]] for i in range(n) for j in range(m)):
                return True
    return False
