"""Regenerate euler_3_2_2.json from the brute-force oracles only.

Run from the tests directory: ``python golden/generate.py``.
"""
import json
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
from oracles import closure, cycle_type, proper_count_by_iteration  # noqa: E402

n, p, k = 3, 2, 2
N = n ** (p**k) - 1


def op(a, b):
    return (n * a + (1 - n) * b) % N


patterns = {tuple(cycle_type([op(x, b) for x in range(N)])) for b in range(N)}
assert len(patterns) == 1
(pat,) = patterns
exponent = p**k - p ** (k - 1)
dividend = n**exponent - 1
golden = {
    "quandle": {"n": n, "p": p, "k": k, "modulus": str(N)},
    "profile": {str(length): str(mult) for length, mult in sorted(Counter(pat).items())},
    "proper_counts": [str(proper_count_by_iteration(N, n, 0, p, i)) for i in range(k + 1)],
    "orbit_of_zero": sorted(closure(N, op, 0)),
    "verify_prime_power": {
        "divisor": str(p**k),
        "exponent": str(exponent),
        "dividend": str(dividend),
        "quotient": str(dividend // p**k),
        "holds": dividend % p**k == 0,
    },
}
out = Path(__file__).with_name("euler_3_2_2.json")
out.write_text(json.dumps(golden, indent=2, sort_keys=True) + "\n")
