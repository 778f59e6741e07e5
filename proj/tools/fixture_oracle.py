#!/usr/bin/env python3
"""Brute-force L-polynomials for zeta fixtures.

Reads curve coefficients from `forge gen --json` and counts points of the
smooth model of y^2 = f(x) over F_{p^k}, k = 1..g, by plain enumeration in a
polynomial-basis extension field. Independent of the C++ counting code.
"""
import argparse
import itertools
import json
import subprocess
import sys


def find_irreducible(p, k):
    # For k <= 3 a monic polynomial without roots is irreducible.
    if k == 1:
        return [0, 1]
    if k > 3:
        raise SystemExit("extension degree above 3 is not supported")
    for tail in itertools.product(range(p), repeat=k):
        m = list(tail) + [1]
        if all(eval_poly_mod(m, x, p) != 0 for x in range(p)):
            return m
    raise SystemExit("no irreducible polynomial found")


def eval_poly_mod(m, x, p):
    r = 0
    for c in reversed(m):
        r = (r * x + c) % p
    return r


class Ext:
    def __init__(self, p, k):
        self.p, self.k = p, k
        self.m = find_irreducible(p, k)

    def mul(self, a, b):
        p, k = self.p, self.k
        r = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    r[i + j] = (r[i + j] + x * y) % p
        for d in range(2 * k - 2, k - 1, -1):
            c = r[d]
            if c:
                for i in range(k):
                    r[d - k + i] = (r[d - k + i] - c * self.m[i]) % p
        return r[:k]

    def add(self, a, b):
        return [(x + y) % self.p for x, y in zip(a, b)]

    def power(self, a, e):
        r = [1] + [0] * (self.k - 1)
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def chi(self, a):
        if not any(a):
            return 0
        q = self.p ** self.k
        r = self.power(a, (q - 1) // 2)
        return 1 if r == [1] + [0] * (self.k - 1) else -1

    def elements(self):
        for t in itertools.product(range(self.p), repeat=self.k):
            yield list(t)

    def const(self, c):
        return [c % self.p] + [0] * (self.k - 1)


def count(f, p, k):
    E = Ext(p, k)
    fc = [E.const(c) for c in f]
    n = 0
    for x in E.elements():
        y = [0] * k
        for c in reversed(fc):
            y = E.add(E.mul(y, x), c)
        n += 1 + E.chi(y)
    deg = len(f) - 1
    if deg % 2 == 1:
        n += 1
    else:
        n += 1 + E.chi(E.const(f[-1]))
    return n


def l_poly(g, p, counts):
    s = [p ** (k + 1) + 1 - counts[k] for k in range(g)]
    c = [1]
    for k in range(1, g + 1):
        acc = s[k - 1]
        for i in range(1, k):
            acc += c[i] * s[k - i - 1]
        assert acc % k == 0
        c.append(-acc // k)
    for j in range(1, g + 1):
        c.append(p ** j * c[g - j])
    return c


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--forge", required=True)
    ap.add_argument("--name", required=True)
    ap.add_argument("--genus", type=int, required=True)
    ap.add_argument("--prime", type=int, required=True)
    ap.add_argument("--v", required=True)
    ap.add_argument("--a", required=True)
    args = ap.parse_args()
    out = subprocess.run([args.forge, "gen", "--genus", str(args.genus), "--prime", str(args.prime),
                          "--v", args.v, "--a", args.a, "--json"], capture_output=True, text=True, check=True)
    pair = json.loads(out.stdout)
    g, p = args.genus, args.prime
    rec = {"name": args.name, "pair": pair}
    for key, label in (("C", "L_C"), ("Cprime", "L_Cprime")):
        f = [int(c) for c in pair[key]["coeffs"]]
        counts = [count(f, p, k) for k in range(1, g + 1)]
        rec[label] = l_poly(g, p, counts)
        rec[label.replace("L_", "counts_")] = counts
    json.dump(rec, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
