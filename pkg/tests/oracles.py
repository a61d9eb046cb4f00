"""Brute-force reference computations, deliberately naive and library-free."""
from itertools import product
from math import gcd


def axiom_failures(size, op):
    """Lists of failing instances for idempotency, right invertibility, self-distributivity."""
    idem = [a for a in range(size) if op(a, a) != a]
    inv = []
    for b in range(size):
        for x1 in range(size):
            for x2 in range(x1 + 1, size):
                if op(x1, b) == op(x2, b):
                    inv.append((x1, x2, b))
    sd = [(a, b, c) for a, b, c in product(range(size), repeat=3)
          if op(op(a, b), c) != op(op(a, c), op(b, c))]
    return idem, inv, sd


def cycles_of(images):
    seen = set()
    out = []
    for s in range(len(images)):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        x = images[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = images[x]
        out.append(tuple(cyc))
    return out


def cycle_type(images):
    return sorted(len(c) for c in cycles_of(images))


def apply_times(f, l, x):
    for _ in range(l):
        x = f(x)
    return x


def closure(size, op, seed):
    reached = {seed}
    todo = [seed]
    while todo:
        y = todo.pop()
        for b in range(size):
            z = op(y, b)
            if z not in reached:
                reached.add(z)
                todo.append(z)
    return reached


def coprime_count(m):
    if m == 1:
        return 1
    return sum(1 for r in range(1, m) if gcd(r, m) == 1)


def order_by_iteration(n, m):
    x, l = n % m, 1
    while x != 1 % m:
        x = x * n % m
        l += 1
    return l


def proper_count_by_iteration(size, n, b, p, i):
    """Points satisfying R_b^(p^i) x = x but no R_b^(p^j) x = x for j < i."""
    def r(x):
        return (n * x + (1 - n) * b) % size
    count = 0
    for x in range(size):
        if apply_times(r, p**i, x) != x:
            continue
        if any(apply_times(r, p**j, x) == x for j in range(i)):
            continue
        count += 1
    return count


def trial_factor(m):
    out = {}
    d = 2
    while m > 1:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    return sorted(out.items())
