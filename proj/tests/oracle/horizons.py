"""Independent exact-rational reference runs used to freeze test horizons.

Uses only Python integers and fractions.Fraction; shares no code with the
C++ library. The word generator mirrors words::random_word (splitmix64,
uniform over the labels that differ from the previous one, with the
overdue-label rule). Run: python3 tests/oracle/horizons.py
"""
from fractions import Fraction
import math
import sys

MASK = 2**64 - 1


class SplitMix64:
    def __init__(self, seed):
        self.s = seed & MASK

    def next(self):
        self.s = (self.s + 0x9E3779B97F4A7C15) & MASK
        z = self.s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)


def random_word(n, length, seed, window=None):
    """1-based labels; window=None means no genericity enforcement."""
    rng = SplitMix64(seed)
    last_seen = [0] * (n + 1)
    word = []
    prev = 0
    for t in range(1, length + 1):
        pick = 0
        if window is not None:
            oldest, age = 0, -1
            for d in range(1, n + 1):
                if d != prev and t - last_seen[d] > age:
                    oldest, age = d, t - last_seen[d]
            if age >= window // 2:
                pick = oldest
        if pick == 0:
            choices = n if prev == 0 else n - 1
            r = rng.next() % choices
            pick = r + 1
            if prev != 0 and pick >= prev:
                pick += 1
        word.append(pick)
        last_seen[pick] = t
        prev = pick
    return word


def cyclic(n, length, start=1):
    return [((start - 1 + t) % n) + 1 for t in range(length)]


def mh_mutate(lam, x, i):
    n = len(x)
    others = [x[j] for j in range(n) if j != i - 1]
    num = sum(v * v for v in others) + lam[i - 1] * math.prod(others)
    assert num % x[i - 1] == 0
    y = list(x)
    y[i - 1] = num // x[i - 1]
    return y


def ratio_horizon(lam, tol=Fraction(1, 10**6), cap=40):
    n = len(lam)
    klam = n + sum(lam)
    x = [1] * n
    prev = None
    for t, i in enumerate(cyclic(n, cap)):
        p = math.prod(x[j] for j in range(n) if j != i - 1)
        x = mh_mutate(lam, x, i)
        k = Fraction(x[i - 1], p)
        assert prev is None or k > prev
        assert k <= klam
        prev = k
        if klam - k < tol:
            return t + 1
    return None


def interval_horizon(word, y0, x0, tol=Fraction(1, 10**6)):
    x, y = list(x0), list(y0)
    l = [Fraction(a, b) for a, b in zip(y, x)]
    width = max(l) - min(l)
    for t, i in enumerate(word):
        x[i - 1] = sum(x) - x[i - 1]
        y[i - 1] = sum(y) - y[i - 1]
        l = [Fraction(a, b) for a, b in zip(y, x)]
        w = max(l) - min(l)
        assert w <= width
        width = w
        if w < tol:
            return t + 1
    return None


def big_log(v):
    b = v.bit_length()
    if b <= 1000:
        return math.log(v)
    s = b - 64
    return math.log(v >> s) + s * math.log(2)


def q_spreads(lam, word):
    n = len(lam)
    x, e = [1] * n, [1] * n
    out = []
    for i in word:
        x = mh_mutate(lam, x, i)
        e[i - 1] = sum(e) - e[i - 1]
        q = [big_log(v) / ev for v, ev in zip(x, e)]
        out.append(max(q) - min(q))
    return out


def log_space_spreads(lam, word):
    """Float-only log-space evolution, used to pick horizons cheaply."""
    n = len(lam)
    klam = n + sum(lam)
    logs, e, out = [0.0] * n, [1] * n, []
    for i in word:
        j = i - 1
        rest = sum(logs) - logs[j]
        tail = math.exp(logs[j] - rest) if logs[j] - rest > -700 else 0.0
        tail += sum(lam[m] * math.exp(-logs[m]) for m in range(n) if m != j)
        logs[j] = rest + math.log(klam - tail)
        e[j] = sum(e) - e[j]
        q = [logs[m] / e[m] for m in range(n)]
        out.append((max(q) - min(q), max(logs) / math.log(2)))
    return out


GRID = [(0, 0, 0), (1, 1, 1), (0, 1, 2), (0, 0, 0, 0), (0, 1, 2, 3)]


def main():
    print("random_word(4, 12, seed=7, window=16):", random_word(4, 12, 7, 16))
    print("random_word(3, 12, seed=1):", random_word(3, 12, 1))

    for lam in GRID + [(1, 2, 3)]:
        print("ratio horizon (cyclic)", lam, ratio_horizon(lam))

    worst = 0
    for n in (3, 4, 5):
        x0 = [1] * n
        y0 = [2] + [1] * (n - 1)
        h = interval_horizon(cyclic(n, 400, start=2), y0, x0)
        worst = max(worst, h)
        for seed in range(1, 21):
            worst = max(worst, interval_horizon(random_word(n, 400, seed, 4 * n), y0, x0))
    print("interval horizon worst over cyclic-from-2 and seeds 1..20, n=3..5:", worst)

    # q-spread horizons: first step with spread < 1e-4 (log-space estimate),
    # then confirmed with exact big-integer chains below the bit cap.
    for lam in GRID:
        n = len(lam)
        words = [("cyclic", cyclic(n, 40))] + [
            ("random:%d" % s, random_word(n, 40, s, 4 * n)) for s in range(1, 6)]
        for name, w in words:
            sp = log_space_spreads(lam, w)
            first = next(t for t, (s, b) in enumerate(sp) if s < 1e-4) + 1
            exact = q_spreads(lam, w[:first])
            assert exact[-1] < 1e-4, (lam, name, exact[-1])
            incr = [t + 1 for t in range(1, first) if exact[t] > exact[t - 1]]
            blocks = [exact[t - 1] for t in range(4 * n, first + 1, 4 * n)]
            print("q horizon", lam, name, first, "bits %.3g" % sp[first - 1][1],
                  "increases", incr, "block-decreasing",
                  all(b2 < b1 for b1, b2 in zip(blocks, blocks[1:])))
            sys.stdout.flush()


if __name__ == "__main__":
    main()
