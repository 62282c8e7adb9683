#!/usr/bin/env python3
"""Brute-force reference implementation used to regenerate golden/ files.

Everything here is deliberately naive (subset enumeration, permutation
scans) and shares no code with the C++ library, so the frozen values it
produces are an independent check on the fast paths.

Usage: python3 tools/golden_oracle.py [--out golden]
"""
import argparse
import itertools
import json
import os
import sys


def norm(e):
    a, b = e
    return (a, b) if a < b else (b, a)


def crosses(e, f):
    (a, b), (c, d) = norm(e), norm(f)
    return a < c < b < d or c < a < d < b


# ---------------------------------------------------------------- containment

def contains_linear(n, host, p, pat):
    hs = set(map(norm, host))
    img = []

    def rec(v):
        if v > p:
            return True
        lo = img[-1] + 1 if img else 1
        for x in range(lo, n - (p - v) + 1):
            if all(norm((img[u - 1], x)) in hs for u, w in pat if w == v and u < v) and \
               all(norm((img[w - 1], x)) in hs for u, w in pat if u == v and w < v):
                img.append(x)
                if rec(v + 1):
                    return True
                img.pop()
        return False

    return tuple(img) if rec(1) else None


def contains_cyclic(n, host, p, pat):
    hs = set(map(norm, host))
    for img in itertools.combinations(range(1, n + 1), p):
        for r in range(p):
            rot = img[r:] + img[:r]
            if all(norm((rot[u - 1], rot[v - 1])) in hs for u, v in pat):
                return rot
    return None


def contains(n, host, p, pat, mode):
    if p > n:
        return None
    return (contains_linear if mode == "ordered" else contains_cyclic)(n, host, p, pat)


# ---------------------------------------------------------------- chromatic

def chi_interval(n, edges):
    best = n
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(2, n + 1), k - 1):
            starts = (1,) + cuts
            part = {}
            idx = 0
            for v in range(1, n + 1):
                if idx + 1 < len(starts) and v >= starts[idx + 1]:
                    idx += 1
                part[v] = idx
            if all(part[u] != part[v] for u, v in edges):
                return k
    return best


def rotate(n, edges, r):
    return [norm(((u - 1 + r) % n + 1, (v - 1 + r) % n + 1)) for u, v in edges]


def mirror(n, edges):
    return sorted(norm((n + 1 - u, n + 1 - v)) for u, v in edges)


def chi_cyclic(n, edges):
    if not edges:
        return 1
    return min(chi_interval(n, rotate(n, edges, r)) for r in range(n))


# ---------------------------------------------------------------- trees

def prufer_trees(n):
    if n == 2:
        yield [(1, 2)]
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        deg = [1] * (n + 1)
        for x in seq:
            deg[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(1, n + 1) if deg[v] == 1)
            edges.append(norm((leaf, x)))
            deg[leaf] -= 1
            deg[x] -= 1
        u, v = [w for w in range(1, n + 1) if deg[w] == 1]
        edges.append((u, v))
        yield sorted(edges)


def is_increasing(edges):
    es = sorted(edges, key=lambda e: e[1] - e[0])
    lens = [b - a for a, b in es]
    if len(set(lens)) != len(lens):
        return False
    for (i, j), (i2, j2) in zip(es, es[1:]):
        if not ((i2 == i and j2 > j) or (j2 == j and i2 < i)):
            return False
    return True


def is_ztree(edges):
    """Exists hub ij whose core is an increasing tree with longest edge ij."""
    for i, j in edges:
        core = [e for e in edges if not ((e[0] == i and e[1] > j) or (e[1] == j and e[0] < i))]
        if is_increasing(core) and max(core, key=lambda e: e[1] - e[0]) == (i, j):
            return True
    return False


def cg_is_ztree(n, edges):
    return any(is_ztree(mirror(n, rotate(n, edges, r))) and chi_interval(n, rotate(n, edges, r)) == 2
               for r in range(n))


def adjacency(n, edges):
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def paths(n, edges, length):
    adj = adjacency(n, edges)
    out = []

    def rec(p):
        if len(p) == length + 1:
            out.append(tuple(p))
            return
        for w in sorted(adj[p[-1]]):
            if w not in p:
                rec(p + [w])

    for v in range(1, n + 1):
        rec([v])
    return out


def has_crossing_p4(n, edges):
    for p in paths(n, edges, 4):
        es = [(p[t], p[t + 1]) for t in range(4)]
        if any(crosses(a, b) for a, b in itertools.combinations(es, 2)):
            return True
    return False


def strictly_inside(x, a, b, n):
    """x on the open clockwise arc from a to b."""
    return 0 < (x - a) % n < (b - a) % n


def side(x, chord, n):
    a, b = chord
    return strictly_inside(x, a, b, n)


def p_family_kind(n, edges):
    ps = [p for p in paths(n, edges, 3) if p[0] < p[3] or True]
    found = None
    for P in ps:
        a, b, c, d = P
        if not crosses((a, b), (c, d)):
            continue
        for Q in ps:
            a2, b2, c2, d2 = Q
            if not crosses((a2, b2), (c2, d2)):
                continue
            shared = {b, c} & {b2, c2}
            if set(P) & set(Q) != shared:
                continue
            if crosses((b, c), (b2, c2)):
                continue
            if len(shared) == 2:
                # a,d and a2,d2 on opposite sides of the common chord
                s1 = side(a, (b, c), n)
                s2 = side(a2, (b, c), n)
                if s1 != s2:
                    return 2
                continue
            # b'c' (minus shared) on one side of bc; a,d on the other
            other = [x for x in (b2, c2) if x not in (b, c)]
            s_other = side(other[0], (b, c), n)
            if side(a, (b, c), n) == s_other:
                continue
            other2 = [x for x in (b, c) if x not in (b2, c2)]
            s_other2 = side(other2[0], (b2, c2), n)
            if side(a2, (b2, c2), n) == s_other2:
                continue
            return len(shared)
    return found


# ---------------------------------------------------------------- constructions

def pow2(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (j - i) & (j - i - 1) == 0]


def fh(s, kind):
    if s == 1:
        return [(1, 2)]
    h = s // 2
    prev = fh(h, kind)
    I, Ip, J, Jp = 0, h, 2 * h, 3 * h
    out = []

    def place(lo_off, hi_off):
        for u, v in prev:  # u in [1,h], v in [h+1,2h]
            out.append((lo_off + u, hi_off + v - h))

    if kind == "q":
        place(I, J)
        place(Ip, Jp)
        out += [(Ip + t, J + t) for t in range(1, h + 1)]
    else:
        place(I, Jp)
        place(Ip, J)
        out += [(I + t, J + t) for t in range(1, h + 1)]
    return sorted(out)


def gstar(n, a, b, c):
    es = set()
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if y - x < a or x <= b or y > n - c:
                es.add((x, y))
    return sorted(es)


def f_n(n):
    kappa = n.bit_length() - 1
    out = []
    for j in range(1, kappa):
        for i in range(1, n // 4 + 1):
            out.append(((2 * i - 1, 2 * i - 2 + 2 ** j), j))
    return out


# ---------------------------------------------------------------- extremal

def ex_naive(n, p, pat, mode):
    allpairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    best = -1
    for mask in range(1 << len(allpairs)):
        cnt = bin(mask).count("1")
        if cnt <= best:
            continue
        es = [allpairs[t] for t in range(len(allpairs)) if mask >> t & 1]
        if contains(n, es, p, pat, mode) is None:
            best = cnt
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="golden")
    args = ap.parse_args()

    # Obstruction catalog: minimal non-z-trees with chi_i = 2 up to 5 edges.
    catalog = []
    for k in range(1, 6):
        for t in prufer_trees(k + 1):
            if chi_interval(k + 1, t) != 2 or is_ztree(t):
                continue
            if any(contains(k + 1, t, len(c) + 1, c, "ordered") for c in catalog):
                continue
            catalog.append(t)
    print("catalog", catalog, file=sys.stderr)

    # fh_q / fh_r avoidance of the 4-edge catalog members.
    four = [c for c in catalog if len(c) == 4]
    fh_table = {}
    for kind in ("q", "r"):
        rows = {}
        s = 2
        while s <= 32:
            g = fh(s, kind)
            rows[str(2 * s)] = [contains(2 * s, g, 5, c, "ordered") is not None for c in four]
            s *= 2
        fh_table[kind] = rows
    print("fh", fh_table, file=sys.stderr)

    p_pattern = [(1, 3), (1, 4), (2, 4)]
    queries = [("ordered", p_pattern, n) for n in range(4, 8)]
    queries += [("ordered", c, n) for c in four[:2] for n in (5, 6)]
    queries += [("ordered", [(1, 3), (2, 3), (2, 4)], n) for n in range(4, 8)]
    queries += [("cg", [(1, 3), (1, 4), (2, 4)], n) for n in range(4, 8)]
    queries += [("cg", [(1, 2), (2, 3), (3, 4)], n) for n in range(4, 7)]
    queries += [("cg", [(1, 3), (2, 3), (2, 4)], n) for n in range(4, 8)]
    extremal = []
    for mode, pat, n in queries:
        p = max(max(e) for e in pat)
        value = ex_naive(n, p, pat, mode)
        print("ex", mode, pat, n, value, file=sys.stderr)
        extremal.append({"n": n, "mode": mode, "pattern": {"n": p, "edges": pat}, "value": value})

    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "catalog.json"), "w") as fh_out:
        fh_out.write('{"max_edges": 5, "patterns": [\n' +
                     ",\n".join(json.dumps({"n": len(c) + 1, "edges": c}) for c in catalog) + "\n]}\n")
    with open(os.path.join(args.out, "fh_containment.json"), "w") as fh_out:
        json.dump({"patterns": [{"n": 5, "edges": c} for c in four], "contains": fh_table}, fh_out)
        fh_out.write("\n")
    with open(os.path.join(args.out, "extremal.json"), "w") as fh_out:
        fh_out.write('{"values": [\n' + ",\n".join(json.dumps(v) for v in extremal) + "\n]}\n")


if __name__ == "__main__":
    main()
