#!/usr/bin/env python3
"""Writes the algebra, map and bundle fixtures under fixtures/.

Structure constants are computed here from matrices and exterior monomials
with Python fractions, independently of the C++ library.
"""
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures"


def s(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def table(basis, prod):
    """prod(i, j) -> {label: Fraction}; zero entries dropped."""
    out = []
    for a in basis:
        for b in basis:
            v = {k: s(c) for k, c in sorted(prod(a, b).items()) if c != 0}
            if v:
                out.append([a, b, v])
    return out


def write(name, obj):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def dialgebra(name, basis, parity, left, right, unit=None):
    obj = {
        "kind": "dialgebra",
        "name": name,
        "basis": [{"label": b, "parity": parity[b]} for b in basis],
        "products": {"left": table(basis, left), "right": table(basis, right)},
    }
    if unit:
        obj["unit"] = unit
    return obj


def leibniz(name, basis, parity, bracket):
    return {
        "kind": "leibniz",
        "name": name,
        "basis": [{"label": b, "parity": parity[b]} for b in basis],
        "products": {"bracket": table(basis, bracket)},
    }


# exterior algebra on n generators: monomials as sorted index tuples
def exterior(n):
    monos = [()] + [m for d in range(1, n + 1) for m in itertools.combinations(range(1, n + 1), d)]
    label = {m: "".join(f"th{i}" for i in m) or "1" for m in monos}
    inv = {v: k for k, v in label.items()}

    def mul(a, b):
        x, y = inv[a], inv[b]
        if set(x) & set(y):
            return {}
        sign = (-1) ** sum(1 for i in x for j in y if i > j)
        return {label[tuple(sorted(x + y))]: Fraction(sign)}

    basis = [label[m] for m in monos]
    parity = {label[m]: len(m) % 2 for m in monos}
    return basis, parity, mul


def truncated(n):
    basis = ["1", "t"] + [f"t{k}" for k in range(2, n)]
    deg = {b: k for k, b in enumerate(basis)}

    def mul(a, b):
        d = deg[a] + deg[b]
        return {basis[d]: Fraction(1)} if d < n else {}

    return basis, {b: 0 for b in basis}, mul


def matrices(p, q):
    N = p + q
    par = lambda i: 0 if i <= p else 1
    basis = [f"E{i}{j}" for i in range(1, N + 1) for j in range(1, N + 1)]
    parity = {f"E{i}{j}": (par(i) + par(j)) % 2 for i in range(1, N + 1) for j in range(1, N + 1)}

    def mul(a, b):
        i, j, k, l = int(a[1]), int(a[2]), int(b[1]), int(b[2])
        return {f"E{i}{l}": Fraction(1)} if j == k else {}

    return basis, parity, mul


# gl(p|q) over K from the matrix supercommutator
def gl(p, q):
    basis, parity, mul = matrices(p, q)

    def br(a, b):
        out = dict(mul(a, b))
        sign = -((-1) ** (parity[a] * parity[b]))
        for k, c in mul(b, a).items():
            out[k] = out.get(k, 0) + sign * c
        return out

    return basis, parity, br


def sl21():
    gb, gpar, gbr = gl(2, 1)
    off = [b for b in gb if b[1] != b[2]]
    basis = off + ["h1", "h2"]
    parity = {b: gpar[b] for b in off}
    parity.update(h1=0, h2=0)
    expand = {b: {b: Fraction(1)} for b in off}
    expand["h1"] = {"E11": Fraction(1), "E22": Fraction(-1)}
    expand["h2"] = {"E22": Fraction(1), "E33": Fraction(1)}

    def br(a, b):
        acc = {}
        for x, cx in expand[a].items():
            for y, cy in expand[b].items():
                for k, c in gbr(x, y).items():
                    acc[k] = acc.get(k, 0) + cx * cy * c
        out = {k: c for k, c in acc.items() if k[1] != k[2] and c != 0}
        d1, d2, d3 = (acc.get(f"E{i}{i}", 0) for i in (1, 2, 3))
        # d = a h1 + b h2 with d1 = a, d2 = b - a, d3 = b
        assert d2 == d3 - d1, "bracket left sl(2|1)"
        out["h1"], out["h2"] = d1, d3
        return out

    return basis, parity, br


def main():
    b, p, m = exterior(2)
    write("Lambda2.alg", dialgebra("Lambda2", b, p, m, m, unit="1"))

    def dmap(x):
        return {"th1": {"th2": Fraction(1)}}.get(x, {})

    def diff_left(x, y):
        out = {}
        for k, c in dmap(y).items():
            for r, cr in m(x, k).items():
                out[r] = out.get(r, 0) + c * cr
        return out

    def diff_right(x, y):
        out = {}
        for k, c in dmap(x).items():
            for r, cr in m(k, y).items():
                out[r] = out.get(r, 0) + c * cr
        return out

    write("diff_Lambda2.alg", dialgebra("diff(Lambda2)", b, p, diff_left, diff_right))
    write("d_Lambda2.map", {"kind": "linear_map", "images": {"th1": {"th2": "1"}}})

    # upper triangular 2x2 with d = ad E12
    ub = ["E11", "E12", "E22"]
    up = {x: 0 for x in ub}
    _, _, um = matrices(2, 0)

    def ud(x):
        out = {}
        for k, c in um("E12", x).items():
            out[k] = out.get(k, 0) + c
        for k, c in um(x, "E12").items():
            out[k] = out.get(k, 0) - c
        return out

    def lin(f, g):
        out = {}
        for k, c in f.items():
            for r, cr in g(k).items():
                out[r] = out.get(r, 0) + c * cr
        return out

    write("diff_UT2.alg", dialgebra("diff(UT2)", ub, up,
                                    lambda x, y: lin(ud(y), lambda k: um(x, k)),
                                    lambda x, y: lin(ud(x), lambda k: um(k, y))))

    b1, p1, m1 = exterior(1)
    write("Lambda1.alg", dialgebra("Lambda1", b1, p1, m1, m1, unit="1"))
    write("K.alg", dialgebra("K", ["1"], {"1": 0}, lambda x, y: {"1": Fraction(1)}, lambda x, y: {"1": Fraction(1)}, unit="1"))
    for n in (2, 3):
        bt, pt, mt = truncated(n)
        write(f"K_t{n}.alg", dialgebra(f"K[t]/t^{n}", bt, pt, mt, mt, unit="1"))
    bm, pm, mm = matrices(2, 0)
    write("M2_K.alg", dialgebra("M2", bm, pm, mm, mm, unit={"E11": "1", "E22": "1"}))

    for (pp, qq) in ((1, 1), (2, 1)):
        gb, gp, gbr = gl(pp, qq)
        write(f"gl_{pp}_{qq}_K.alg", leibniz(f"gl({pp},{qq},K)", gb, gp, gbr))
    sb, sp, sbr = sl21()
    write("sl_2_1_K.alg", leibniz("sl(2,1,K)", sb, sp, sbr))

    # sl(2|1) inside gl(2|1), with the Cartan elements named
    sub = {f"E{i}{j}": {f"E{i}{j}": "1"} for i in (1, 2, 3) for j in (1, 2, 3) if i != j}
    sub["h1"] = {"E11": "1", "E22": "-1"}
    sub["h2"] = {"E22": "1", "E33": "1"}
    write("sl_2_1_in_gl.sub", {"kind": "subspace", "vectors": sub})
    write("sl_2_1_all.sub", {"kind": "subspace", "vectors": {x: {x: "1"} for x in sb}})

    images = [[i, j, "1", {f"E{i}{j}": "1"}] for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    write("sl_2_1_units.stmap", {"kind": "steinberg_map", "coefficients": "K.alg", "images": images})
    bad = [list(e) for e in images]
    bad[0][3] = {"E12": "-1"}
    write("sl_2_1_units_negated.stmap", {"kind": "steinberg_map", "coefficients": "K.alg", "images": bad})

    write("D_e.alg", leibniz("De", ["e"], {"e": 0}, lambda x, y: {}))
    write("D_ce.alg", leibniz("Dce", ["c", "e"], {"c": 0, "e": 0}, lambda x, y: {}))

    write("model_a_Lambda2.bundle", {"kind": "model_a", "p": 2, "q": 1, "A": "Lambda2.alg"})
    write("model_a_M2_nophi.bundle", {
        "kind": "model_a", "p": 2, "q": 1, "A": "M2_K.alg", "D": "D_e.alg",
        "form": [["E12", "E21", {"e": "1"}]],
    })
    write("kappa_Lambda1.bundle", {"kind": "model_kappa", "g": {"sl": [2, 1]}, "kappa": "supertrace", "A": "Lambda1.alg"})
    write("kappa_viol_i.bundle", {
        "kind": "model_kappa", "g": {"sl": [2, 1]}, "kappa": "supertrace", "A": "K_t3.alg", "D": "D_e.alg",
        "phi": [["e", "t", {"t2": "1"}]], "form": [["t", "1", {"e": "1"}]],
    })
    write("kappa_viol_ii.bundle", {
        "kind": "model_kappa", "g": {"sl": [2, 1]}, "kappa": "supertrace", "A": "K_t2.alg", "D": "D_ce.alg",
        "phi": [["c", "t", {"t": "1"}]], "form": [["t", "1", {"e": "1"}]],
    })
    write("kappa_viol_iii.bundle", {
        "kind": "model_kappa", "g": {"sl": [2, 1]}, "kappa": "supertrace", "A": "K_t2.alg", "D": "D_e.alg",
        "form": [["1", "1", {"e": "1"}]],
    })
    write("kappa_central.bundle", {
        "kind": "model_kappa", "g": {"sl": [2, 1]}, "kappa": "supertrace", "A": "K_t2.alg", "D": "D_e.alg",
        "form": [["t", "1", {"e": "1"}]], "central": True,
    })


if __name__ == "__main__":
    main()
