#!/usr/bin/env python3
"""Regenerates the JSON fixtures under fixtures/.

bc_dihedral_23_q5.json: base change to Q(sqrt 5) of the weight-one newform eta(z)eta(23z)
of level 23 and character (-23|.). Its Hecke eigenvalues are a_l = #{roots of x^3 - x - 1 mod l} - 1
for l != 23, and a_23 = 1. Weight one means unitary and arithmetic normalizations agree.

symbolic_d5_w53.json: level one, weight (5,3) over Q(sqrt 5) with an indeterminate eigenvalue at
every prime ideal and trivial central character.
"""
import json
import os
import sys

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n + 1) if sieve[i]]


def kronecker(D, l):
    if l == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = pow(D % l, (l - 1) // 2, l)
    return 0 if D % l == 0 else (1 if r == 1 else -1)


def a_dihedral(l):
    if l == 23:
        return 1
    return sum(1 for x in range(l) if (x ** 3 - x - 1) % l == 0) - 1


def chi23(l):
    return kronecker(-23, l)


def dump(name, doc):
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1, ensure_ascii=False)
        fh.write("\n")


def dihedral(coverage):
    eig, chis = [], []
    for l in primes_upto(coverage):
        s = kronecker(5, l)
        a, c = a_dihedral(l), chi23(l)
        if s == 1:
            for idx in (1, 2):
                eig.append({"ell": str(l), "index": "%d" % idx, "value": str(a)})
                chis.append({"ell": str(l), "index": "%d" % idx, "value": str(c)})
        elif s == -1:
            if l == 23:
                ap, cp = a * a, 0
            else:
                ap, cp = a * a - 2 * c, c * c
            eig.append({"ell": str(l), "index": "1", "value": str(ap)})
            chis.append({"ell": str(l), "index": "1", "value": str(cp)})
        else:
            eig.append({"ell": str(l), "index": "1", "value": str(a)})
            chis.append({"ell": str(l), "index": "1", "value": str(c)})
    return {
        "label": "bc-dihedral-23-over-q5",
        "source": "base change of eta(z)eta(23z), weight 1, level 23, character (-23|.)",
        "D": "5",
        "weight": ["1", "1"],
        "level_norm": "529",
        "chi_rational": {"modulus": "23", "generator_values": [{"generator": "5", "value": "1"}]},
        "chi_on_primes": chis,
        "eigenvalues": eig,
        "coverage_bound": str(coverage),
    }


def symbolic(coverage):
    eig, chis = [], []
    for l in primes_upto(coverage):
        s = kronecker(5, l)
        for idx in ((1, 2) if s == 1 else (1,)):
            eig.append({"ell": str(l), "index": str(idx), "value": "a_%d_%d" % (l, idx)})
            chis.append({"ell": str(l), "index": str(idx), "value": "1"})
    return {
        "label": "symbolic-q5-weight-5-3-level-1",
        "source": "indeterminate Hecke eigenvalues; weight (5,3), level 1, trivial character",
        "D": "5",
        "weight": ["5", "3"],
        "level_norm": "1",
        "chi_rational": {"modulus": "1", "generator_values": []},
        "chi_on_primes": chis,
        "eigenvalues": eig,
        "coverage_bound": str(coverage),
    }


def main():
    os.makedirs(os.path.join(OUT, "invalid"), exist_ok=True)
    dump("bc_dihedral_23_q5.json", dihedral(10000))
    dump("symbolic_d5_w53.json", symbolic(100))

    small = symbolic(50)
    bad = dict(small, weight=["4", "3"], label="non-paritious")
    dump("invalid/non_paritious.json", bad)
    inc = json.loads(json.dumps(small))
    inc["label"] = "incomplete"
    inc["eigenvalues"] = [e for e in inc["eigenvalues"] if not (e["ell"] == "11" and e["index"] == "2")]
    dump("invalid/incomplete_split_pair.json", inc)
    with open(os.path.join(OUT, "invalid", "malformed.json"), "w") as fh:
        fh.write('{"label": "truncated", "D": "5",\n  "weight": [5, 3\n')
    return 0


if __name__ == "__main__":
    sys.exit(main())
