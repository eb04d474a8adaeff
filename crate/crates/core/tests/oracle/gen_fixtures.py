"""One-time generator for the oracle fixtures, using PARI/GP through cypari2.

Usage: python3 gen_fixtures.py OUT.json [count]

For each input (f, p) the oracle records the multiset of (degree, e, f) of the
p-adic irreducible factors of f and v_p of the index of Z_p[x]/(f) in its
normalization. f is split over Q first; each Q-irreducible g is handled by a
p-maximal nfinit, and cross terms are v_p(Res(g, h)).
"""

import json
import random
import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**8)

GOLDEN = [(4, 8, 4), (8, 8, 4), (4, 8, 28), (4, 8, 12)]


def oracle(coeffs, p):
    x = pari("x")
    f = pari.Pol(list(reversed(coeffs)))
    fac = pari.factor(f)
    gs = [fac[0][i] for i in range(len(fac[0]))]
    assert all(int(m) == 1 for m in fac[1]), "not squarefree"
    factors = []
    ind = 0
    for g in gs:
        if pari.poldegree(g) == 1:
            factors.append((1, 1, 1))
            continue
        nf = pari.nfinit([g, [p]])
        for pr in pari.idealprimedec(nf, p):
            e, fr = int(pr[2]), int(pr[3])
            factors.append((e * fr, e, fr))
        ind += int(pari.valuation(nf[3], p))  # nf.index
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            ind += int(pari.valuation(pari.polresultant(gs[i], gs[j]), p))
    return sorted(factors), ind


def random_input(rng):
    while True:
        p = rng.choice([2, 3, 5])
        n = rng.randint(1, 6)
        coeffs = [rng.randint(-40, 40) for _ in range(n)] + [1]
        f = pari.Pol(list(reversed(coeffs)))
        if pari.poldegree(pari.gcd(f, pari.deriv(f))) == 0:
            return coeffs, p


def main():
    path = sys.argv[1]
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 20
    rng = random.Random(20260101)
    cases = []
    for a, b, c in GOLDEN:
        cases.append(("golden", [c, b, a, 0, 1], 2))
    for _ in range(count):
        coeffs, p = random_input(rng)
        cases.append(("random", coeffs, p))
    out = []
    for kind, coeffs, p in cases:
        factors, ind = oracle(coeffs, p)
        out.append({
            "kind": kind,
            "prime": p,
            "coeffs": [str(c) for c in coeffs],
            "factors": [[d, e, f] for d, e, f in factors],
            "ind": ind,
        })
    version = ".".join(str(v) for v in pari.version())
    with open(path, "w") as fh:
        fh.write('{"oracle": "PARI/GP %s", "cases": [\n' % version)
        fh.write(",\n".join(json.dumps(c) for c in out))
        fh.write("\n]}\n")


if __name__ == "__main__":
    main()
