"""Brute-force reference for fundamental solutions of the (a, b) family.

Scans every tuple in [1, box]^n, keeps solutions, and descends each one by
mutating its largest coordinate (smallest index on ties) while the result is
a positive integer tuple whose maximum strictly decreases.
Run: python3 tests/oracle/fundamentals.py
"""
from itertools import product
import math


def residual(lam, a, b, x):
    n = len(x)
    p = math.prod(x)
    s = sum(v * v for v in x)
    s += sum(lam[i] * math.prod(x[j] for j in range(n) if j != i) for i in range(n))
    return s - (a + sum(lam)) * p - b


def mutate(lam, b, x, i):
    others = [x[j] for j in range(len(x)) if j != i]
    num = sum(v * v for v in others) + lam[i] * math.prod(others) - b
    if num <= 0 or num % x[i]:
        return None
    y = list(x)
    y[i] = num // x[i]
    return y


def fundamentals(lam, a, b, box):
    n = len(lam)
    found = set()
    for x in product(range(1, box + 1), repeat=n):
        x = list(x)
        if residual(lam, a, b, x):
            continue
        while True:
            j = x.index(max(x))
            y = mutate(lam, b, x, j)
            if y is None or max(y) >= max(x):
                break
            x = y
        found.add(tuple(x))
    return sorted(found)


CASES = [
    ((0, 0, 0), 1, 0, 10),
    ((0, 0, 0), 3, 1, 12),
    ((0, 1, 2), 2, 3, 12),
    ((1, 1, 1), 1, 2, 12),
    ((0, 0, 0, 0), 1, 0, 8),
    ((0, 0, 0), 0, 5, 12),
]

if __name__ == "__main__":
    for lam, a, b, box in CASES:
        print(lam, "a=%d b=%d box=%d" % (a, b, box), fundamentals(lam, a, b, box))
