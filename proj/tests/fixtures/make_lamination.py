#!/usr/bin/env python3
#   Copyright 2026 The posflag authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
"""Builds the lamination fixtures used by the closed-leaf tests.

A pair of pants is given by two cuff holonomies A1, A3 in SL(2) with rational
spectra; the third cuff is A5 = (A1 A3)^-1. The lamination has the three cuffs
as closed leaves and three infinite leaves joining the attracting (or
repelling) fixed points of the cuffs. The genus-2 variant doubles the pants
across its cuffs with the cuff reflections R1, R3, R5.

Every endpoint label gets a group word whose attracting fixed point it is, so
a decoration is recovered from any representation as stable flags.

Positions live on the boundary of the upper half-plane; clockwise means
decreasing x with infinity first. Entries may lie in Q or in Q(t), ordered at
t -> +infinity.

Usage: make_lamination.py OUTDIR
"""
import json
import sys

import sympy as sp

T = sp.Symbol("t")
INF = "inf"


def simp(x):
    return sp.cancel(sp.together(x))


def sign(x):
    x = simp(x)
    if x == 0:
        return 0
    num, den = sp.fraction(x)
    pn, pd = sp.Poly(num, T), sp.Poly(den, T)
    s = sp.sign(pn.LC()) * sp.sign(pd.LC())
    return int(s)


def lt(x, y):
    return sign(y - x) > 0


def mul(x, y):
    return [[simp(sum(x[i][k] * y[k][j] for k in range(2))) for j in range(2)] for i in range(2)]


def inv(m):
    a, b, c, d = m[0][0], m[0][1], m[1][0], m[1][1]
    dt = simp(a * d - b * c)
    return [[simp(d / dt), simp(-b / dt)], [simp(-c / dt), simp(a / dt)]]


def vec(x):
    return [sp.Integer(1), sp.Integer(0)] if x == INF else [x, sp.Integer(1)]


def act(m, x):
    v = vec(x)
    w = [simp(m[0][0] * v[0] + m[0][1] * v[1]), simp(m[1][0] * v[0] + m[1][1] * v[1])]
    return INF if w[1] == 0 else simp(w[0] / w[1])


def eigenvalues(m):
    """Both eigenvalues, larger absolute value first."""
    x = sp.Symbol("x")
    tr = simp(m[0][0] + m[1][1])
    dt = simp(m[0][0] * m[1][1] - m[0][1] * m[1][0])
    poly = sp.Poly(sp.expand(sp.numer(simp(x * x - tr * x + dt))), x, domain="QQ(t)")
    roots = []
    for fac, mult in sp.factor_list(poly)[1]:
        assert fac.degree() == 1, "spectrum not in the field"
        c1, c0 = fac.all_coeffs()
        roots += [simp(-c0.as_expr() / c1.as_expr())] * mult
    assert len(roots) == 2 and simp(roots[0] - roots[1]) != 0
    r0, r1 = roots
    absv = lambda z: z if sign(z) >= 0 else -z
    return (r0, r1) if lt(absv(r1), absv(r0)) else (r1, r0)


def fixed_point(m, lam):
    a, b, c, d = m[0][0], m[0][1], m[1][0], m[1][1]
    if b != 0:
        den = simp(lam - a)
        return INF if den == 0 else simp(b / den)
    if c != 0:
        return simp((lam - d) / c)
    return INF if simp(a - lam) == 0 else sp.Integer(0)


def attracting(m):
    return fixed_point(m, eigenvalues(m)[0])


def repelling(m):
    return fixed_point(m, eigenvalues(m)[1])


def eigen_ratio(m):
    l0, l1 = eigenvalues(m)
    return simp(l0 / l1)


def reflection_across_axis(m):
    u, v = attracting(m), repelling(m)
    p = [[vec(u)[0], vec(v)[0]], [vec(u)[1], vec(v)[1]]]
    return mul(mul(p, [[1, 0], [0, -1]]), inv(p))


def cw_rank(x):
    """Sort key along the clockwise order starting at infinity."""
    return None if x == INF else -x


def key_lt(p, q):
    kp, kq = cw_rank(p), cw_rank(q)
    if kp is None:
        return kq is not None
    if kq is None:
        return False
    return lt(kp, kq)


def cw_between(p, q, r):
    """q lies strictly inside the clockwise arc from p to r."""
    a, b, c = key_lt(p, q), key_lt(q, r), key_lt(r, p)
    return (a and b) or (b and c) or (c and a)


class Fixture:
    def __init__(self, a1, a3):
        r1 = reflection_across_axis(a1)
        r3 = reflection_across_axis(a3)
        a5 = inv(mul(a1, a3))
        r5 = reflection_across_axis(a5)
        self.gens = {
            "a": a1,
            "b": a3,
            "c": mul(mul(r1, a3), r1),
            "d": mul(r1, r3),
            "e": mul(r1, r5),
        }
        # a commutes with R1 only if its axis is the axis of R1, which holds by construction
        assert mul(mul(r1, a1), r1) == a1

    def word_matrix(self, w):
        m = [[sp.Integer(1), sp.Integer(0)], [sp.Integer(0), sp.Integer(1)]]
        for ch in w:
            g = self.gens[ch.lower()]
            m = mul(m, g if ch.islower() else inv(g))
        return m


def word_inverse(w):
    return "".join(ch.swapcase() for ch in reversed(w))


def reduce_word(w):
    out = []
    for ch in w:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def conj(u, w):
    return reduce_word(u + w + word_inverse(u))


# R1 w R1 in generator letters.
MIRROR1 = {"a": "a", "b": "c", "c": "b", "d": "D", "e": "E",
           "A": "A", "B": "C", "C": "B", "D": "d", "E": "e"}


def mirror(c, w):
    """Word for R_c w R_c, for w in the pants group."""
    m = "".join(MIRROR1[ch] for ch in w)
    if c == 1:
        return m
    return conj({3: "D", 5: "E"}[c], m)


def cuff_word(c):
    return {1: "a", 3: "b", 5: "BA"}[c]


def token_word(w):
    return " ".join(ch.lower() + ("^-1" if ch.isupper() else "") for ch in w)


NEXT = {1: 3, 3: 5, 5: 1}
PREV = {3: 1, 5: 3, 1: 5}


def build(fx, signs, double):
    points = {}

    def add(label, word):
        x = attracting(fx.word_matrix(word))
        for other, (_, x2) in points.items():
            assert other == label or x2 != x, (label, other)
        points[label] = (word, x)
        return label

    for c in (1, 3, 5):
        w = cuff_word(c)
        add(f"g{c}+", w)
        add(f"g{c}-", word_inverse(w))
    apex = {c: cuff_word(c) if signs[c] == 0 else word_inverse(cuff_word(c)) for c in (1, 3, 5)}
    vlab = {c: f"g{c}+" if signs[c] == 0 else f"g{c}-" for c in (1, 3, 5)}

    def pt(label):
        return points[label][1]

    # Third vertex of the second pants triangle across the edge (c, NEXT c).
    across = {}
    for c in (1, 3, 5):
        d, e = NEXT[c], NEXT[NEXT[c]]
        for u in (cuff_word(c), word_inverse(cuff_word(c))):
            w = conj(u, apex[e])
            z = attracting(fx.word_matrix(w))
            if cw_between(pt(vlab[c]), z, pt(vlab[d])) != cw_between(pt(vlab[c]), pt(vlab[e]), pt(vlab[d])):
                across[c] = add(f"s{c}", w)
                break
    assert len(across) == 3

    def mirrored(c, label):
        w = mirror(c, points[label][0])
        x = attracting(fx.word_matrix(w))
        for other, (_, x2) in points.items():
            if x2 == x:
                return other
        return add(f"r{c}:{label}", w)

    def cw_triangle(labels, start):
        rest = [l for l in labels if l != start]
        if not cw_between(pt(start), pt(rest[0]), pt(rest[1])):
            rest.reverse()
        return [start] + rest

    triangles = []
    tri_index = {}

    def add_triangle(tid, labels):
        tri_index[tid] = cw_triangle(labels, labels[0])
        triangles.append({"id": tid, "vertices": tri_index[tid]})

    def cuff_of(tid, c, cuff_labels):
        hits = [i for i, l in enumerate(tri_index[tid]) if cuff_labels.get(l) == c]
        assert len(hits) == 1
        return hits[0]

    add_triangle("t1", [vlab[1], vlab[3], vlab[5]])
    add_triangle("t2", [vlab[1], vlab[3], across[1]])
    spikes = {"t1": {vlab[1]: 1, vlab[3]: 3, vlab[5]: 5},
              "t2": {vlab[1]: 1, vlab[3]: 3, across[1]: 5}}

    # Leaf joining cuff c to cuff NEXT c, oriented toward NEXT c.
    def leaf_record(lid, plus, minus, third1, third2):
        if cw_between(pt(plus), pt(third1), pt(minus)):
            right, left = third1, third2
        else:
            right, left = third2, third1
        return {"id": lid, "plus": plus, "minus": minus, "left": left, "right": right}

    leaves = []
    for c in (1, 3, 5):
        d, e = NEXT[c], NEXT[NEXT[c]]
        leaves.append(leaf_record(f"h{c}{d}", vlab[d], vlab[c], vlab[e], across[c]))

    if double:
        m = {lab: mirrored(1, lab) for lab in [vlab[1], vlab[3], vlab[5], across[1], across[3], across[5]]}
        add_triangle("u1", [m[vlab[1]], m[vlab[3]], m[vlab[5]]])
        add_triangle("u2", [m[vlab[1]], m[vlab[3]], m[across[1]]])
        spikes["u1"] = {m[vlab[1]]: 1, m[vlab[3]]: 3, m[vlab[5]]: 5}
        spikes["u2"] = {m[vlab[1]]: 1, m[vlab[3]]: 3, m[across[1]]: 5}
        for c in (1, 3, 5):
            d, e = NEXT[c], NEXT[NEXT[c]]
            leaves.append(leaf_record(f"k{c}{d}", m[vlab[d]], m[vlab[c]], m[vlab[e]], m[across[c]]))

    closed = []
    for c in (1, 3, 5):
        gp, gm = f"g{c}+", f"g{c}-"
        d, b = NEXT[c], PREV[c]
        side = "right" if cw_between(pt(gp), pt(vlab[d]), pt(gm)) else "left"
        other = "left" if side == "right" else "right"
        direction = "with" if vlab[c] == gp else "against"
        sides = {side: {
            "direction": direction,
            "leaves": [{"leaf": f"h{c}{d}", "toward": False}, {"leaf": f"h{b}{c}", "toward": True}],
            "triangles": [{"triangle": tid, "vertex": cuff_of(tid, c, spikes[tid])} for tid in ("t1", "t2")],
        }}
        # Arc from the pants triangle t1 at this cuff to its mirror image across the cuff.
        tl = [vlab[c], vlab[d], vlab[NEXT[d]]]
        tr = [mirrored(c, l) for l in tl]
        assert tr[0] == vlab[c]

        def arc_vertex(tri):
            a0, u, w = tri
            far = gm if a0 == gp else gp
            # the edge (a0, w) faces the cuff when u and the far end lie on opposite sides of it
            if cw_between(pt(a0), pt(u), pt(w)) != cw_between(pt(a0), pt(far), pt(w)):
                return u
            return w

        rec = {"id": f"g{c}", "plus": gp, "minus": gm, side: arc_vertex(tl), other: arc_vertex(tr)}
        if double:
            assert ("right" if cw_between(pt(gp), pt(mirrored(c, vlab[d])), pt(gm)) else "left") == other
            sides[other] = {
                "direction": direction,
                "leaves": [{"leaf": f"k{c}{d}", "toward": False}, {"leaf": f"k{b}{c}", "toward": True}],
                "triangles": [{"triangle": tid, "vertex": cuff_of(tid, c, spikes[tid])} for tid in ("u1", "u2")],
            }
        rec["sides"] = sides
        closed.append(rec)

    import functools
    endpoints = sorted(points, key=functools.cmp_to_key(
        lambda p, q: -1 if key_lt(pt(p), pt(q)) else (1 if key_lt(pt(q), pt(p)) else 0)))
    lam = {
        "endpoints": endpoints,
        "triangles": triangles,
        "infinite_leaves": leaves,
        "closed_leaves": closed,
    }
    check_lamination(lam, pt)
    return {
        "lamination": lam,
        "points": {l: token_word(points[l][0]) for l in endpoints},
        "positions": {l: ("inf" if pt(l) == INF else encode(pt(l))) for l in endpoints},
        "holonomies": {f"g{c}": token_word(cuff_word(c)) for c in (1, 3, 5)},
        "eigenvalue_ratios": {f"g{c}": encode(eigen_ratio(fx.word_matrix(cuff_word(c)))) for c in (1, 3, 5)},
    }


def check_lamination(lam, pt):
    """No two leaves cross and every triangle is listed clockwise."""
    segs = [(x["plus"], x["minus"]) for x in lam["infinite_leaves"] + lam["closed_leaves"]]
    for i in range(len(segs)):
        for j in range(i):
            (a, b), (c, d) = segs[i], segs[j]
            if len({a, b, c, d}) < 4:
                continue
            assert cw_between(pt(a), pt(c), pt(b)) == cw_between(pt(a), pt(d), pt(b)), (a, b, c, d)
    for t in lam["triangles"]:
        u, v, w = (pt(l) for l in t["vertices"])
        assert cw_between(u, v, w)


def encode(x):
    x = simp(x)
    if not x.free_symbols:
        q = sp.Rational(x)
        return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"
    num, den = sp.fraction(x)
    pn, pd = sp.Poly(num, T), sp.Poly(den, T)
    lc = pd.LC()
    coeffs = [c / lc for c in reversed(pn.all_coeffs())], [c / lc for c in reversed(pd.all_coeffs())]
    scale = sp.ilcm(*[sp.Rational(c).q for c in coeffs[0] + coeffs[1]])
    return {"num": [str(sp.Integer(c * scale)) for c in coeffs[0]],
            "den": [str(sp.Integer(c * scale)) for c in coeffs[1]]}


def matrix_json(m):
    return {"n": 2, "entries": [[encode(x) for x in row] for row in m]}


def hexagon_cuffs():
    """Cuffs of the right-angled hexagon with ideal endpoints
    g1=(0,inf) g2=(7/2,-7/2) g3=(7,7/4) g4=(1,7/3) g5=(1/3,4/3) g6=(2/3,-2/3)."""
    Q = sp.Rational

    def refl(u, v):
        p = [[vec(u)[0], vec(v)[0]], [vec(u)[1], vec(v)[1]]]
        return mul(mul(p, [[1, 0], [0, -1]]), inv(p))

    r2 = refl(Q(7, 2), Q(-7, 2))
    r4 = refl(Q(1), Q(7, 3))
    r6 = refl(Q(2, 3), Q(-2, 3))
    return mul(r6, r2), mul(r2, r4)


def trace_cuffs(lam, mu, nu):
    """A1 = diag(lam, 1/lam) and A3 with tr A3 = mu + 1/mu, tr A1 A3 = -(nu + 1/nu)."""
    y = mu + 1 / mu
    z = -(nu + 1 / nu)
    a = simp((z - y / lam) / (lam - 1 / lam))
    d = simp(y - a)
    return [[lam, 0], [0, 1 / lam]], [[a, sp.Integer(1)], [simp(a * d - 1), d]]


def main():
    out = sys.argv[1]
    families = {
        "": hexagon_cuffs(),
        "ratfunc_": trace_cuffs(T, T + 1, T),
    }
    for prefix, (a1, a3) in families.items():
        fx = Fixture([[sp.sympify(x) for x in r] for r in a1], [[sp.sympify(x) for x in r] for r in a3])
        rep = {"genus": None, "projective": True,
               "generators": {k: matrix_json(fx.gens[k]) for k in sorted(fx.gens)}}
        for name, signs, double in [
            ("pants", {1: 0, 3: 0, 5: 0}, False),
            ("pants_against", {1: 1, 3: 1, 5: 1}, False),
            ("genus2", {1: 0, 3: 0, 5: 0}, True),
            ("genus2_mixed", {1: 0, 3: 1, 5: 0}, True),
        ]:
            if prefix and name not in ("pants", "genus2"):
                continue
            doc = build(fx, signs, double)
            doc["representation"] = rep
            with open(f"{out}/{prefix}{name}.json", "w") as f:
                json.dump(doc, f, indent=1, sort_keys=True)
                f.write("\n")


if __name__ == "__main__":
    main()
