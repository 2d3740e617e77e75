#!/usr/bin/env python3
"""Authors the generated fixture files.

Optimal handlebody diagrams are built from a disk whose boundary carries 2n
points: chords of one color are drawn inside the disk, chords of the other
color pair up boundary sides that are glued (orientation-reversing).

The genus-2 set is built from the disk obtained by cutting along the u-arcs
(v-arcs drawn, u-sides glued), so that reading it back through the v-cut is an
independent check of the chord conversion.

Usage: python3 author_fixtures.py [OUTDIR]
"""
import itertools
import json
import os
import sys

GREEN, RED = 0, 1  # green sorts first, like the library


def matchings(pts):
    if not pts:
        yield []
        return
    a = pts[0]
    for i in range(1, len(pts)):
        rest = pts[1:i] + pts[i + 1:]
        for m in matchings(rest):
            yield [(a, pts[i])] + m


def to_match(pairs, n):
    m = [0] * n
    for a, b in pairs:
        m[a], m[b] = b, a
    return tuple(m)


def faces(m):
    n, seen, f = len(m), [False] * len(m), 0
    for s in range(n):
        if seen[s]:
            continue
        f += 1
        d = s
        while not seen[d]:
            seen[d] = True
            d = (m[d] + 1) % n
    return f


def images(m, c):
    n = len(m)
    for flip in (False, True):
        for k in range(n):
            def pt(i):
                return ((n - 1 - i) if flip else i + 0 + k) % n if not flip else ((n - 1 - i) + k) % n
            mm, cc = [0] * n, [0] * n
            for i in range(n):
                mm[pt(i)] = pt(m[i])
                cc[pt(i)] = c[i]
            yield tuple(mm), tuple(cc)


def canonical(m, c):
    return min(images(m, c))


def code(m, c):
    return "".join("%x" % p for p in m) + "-" + "".join("gr"[x] for x in c)


def cross(a, b):
    (p, q), (r, s) = sorted(a), sorted(b)
    return (p < r < q) != (p < s < q)


def colored_classes(g):
    n = 4 * g
    out = set()
    for p in matchings(list(range(n))):
        m = to_match(p, n)
        if faces(m) != 1:
            continue
        chords = sorted((a, b) for a, b in p)
        for greens in itertools.combinations(chords, g):
            if any(cross(x, y) for x, y in itertools.combinations(greens, 2)):
                continue
            gp = {x for ch in greens for x in ch}
            c = tuple(GREEN if i in gp else RED for i in range(n))
            out.add(canonical(m, c))
    return sorted(out, key=lambda mc: code(*mc))


def build(m, drawn, drawn_kind, glued_kind):
    """Disk with points 0..n-1 counterclockwise; `drawn[i]` says whether the
    chord at point i is drawn (else its two sides are glued)."""
    n = len(m)
    chords = sorted((i, m[i]) for i in range(n) if i < m[i])
    dr = [ch for ch in chords if drawn[ch[0]]]
    gl = [ch for ch in chords if not drawn[ch[0]]]
    assert not any(cross(x, y) for x, y in itertools.combinations(dr, 2)), "drawn chords cross"
    out = lambda i: 2 * i
    inn = lambda i: 2 * ((i - 1) % n) + 1
    base_d = 2 * n
    base_g = base_d + 2 * len(dr)
    total = base_g + 2 * len(gl)
    sigma = [None] * total

    def link(cyc):
        for k in range(len(cyc)):
            sigma[cyc[k]] = cyc[(k + 1) % len(cyc)]

    for k, (a, b) in enumerate(dr):
        link([out(a), base_d + 2 * k, inn(a)])
        link([out(b), base_d + 2 * k + 1, inn(b)])
    for k, (p, q) in enumerate(gl):
        link([out(q), base_g + 2 * k, inn(p)])
        link([out(p), base_g + 2 * k + 1, inn(q)])
    alpha = [d ^ 1 for d in range(total)]
    labels = [{"edge": e, "kind": "BDY", "index": 0} for e in range(n)]
    labels += [{"edge": n + k, "kind": drawn_kind, "index": k} for k in range(len(dr))]
    labels += [{"edge": n + len(dr) + k, "kind": glued_kind, "index": k} for k in range(len(gl))]
    face_id = [None] * total
    for s in range(total):
        if face_id[s] is None:
            d = s
            while face_id[d] is None:
                face_id[d] = s
                d = sigma[alpha[d]]
    holes = sorted({face_id[out(i)] for i in range(n)})
    fam = {"U_GREEN_ARC": "u", "V_RED_ARC": "v"}
    curves = [{"family": fam[drawn_kind], "index": k, "edges": [n + k], "closed": False} for k in range(len(dr))]
    curves += [{"family": fam[glued_kind], "index": k, "edges": [n + len(dr) + k], "closed": False}
               for k in range(len(gl))]
    curves.sort(key=lambda c: (c["family"], c["index"]))
    return {"darts": total, "alpha": alpha, "sigma": sigma, "labels": labels, "holes": holes, "curves": curves}


def from_v_disk(m, c):
    """Greens drawn, reds glued."""
    return build(m, [x == GREEN for x in c], "U_GREEN_ARC", "V_RED_ARC")


def u_disk_word(m, c):
    """Boundary of the disk obtained by cutting along u: walking the one face
    of the base, each arrival at a green point crosses a u-side and each
    arrival at a red point is an end of a v-arc."""
    n = len(m)
    word, i = [], 0
    for _ in range(n):
        j = (i + 1) % n
        word.append(j)
        i = m[j]
    assert sorted(word) == list(range(n))
    pos = {p: k for k, p in enumerate(word)}
    mm = tuple(pos[m[p]] for p in word)
    cc = tuple(c[p] for p in word)
    return mm, cc


def from_u_disk(m, c):
    mm, cc = u_disk_word(m, c)
    return build(mm, [x == RED for x in cc], "V_RED_ARC", "U_GREEN_ARC")


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..")
    generated = {}
    # genus 1
    m, c = (2, 3, 0, 1), (GREEN, RED, GREEN, RED)
    generated["solid_torus"] = (from_v_disk(m, c), code(*canonical(m, c)))
    # genus 2, one fixture per colored class
    for k, (m, c) in enumerate(colored_classes(2)):
        generated["handlebody2_%s" % "abcde"[k]] = (from_u_disk(m, c), code(m, c))
    # each hole joined to the outer circle by a u-arc and a parallel v-arc
    m = (2, 3, 0, 1, 6, 7, 4, 5)
    c = (GREEN, RED, GREEN, RED, GREEN, RED, GREEN, RED)
    generated["parallel_pairs2"] = (from_v_disk(m, c), code(*canonical(m, c)))
    # the same with an extra u-arc cutting off a corner of the outer circle
    m = (2, 3, 0, 1, 6, 7, 4, 5, 9, 8)
    c = c + (GREEN, GREEN)
    generated["parallel_pairs2_extra_u"] = (from_v_disk(m, c), None)
    # a disk with two disjoint u-chords
    m, c = (1, 0, 3, 2), (GREEN,) * 4
    generated["d3_six_chords"] = (from_v_disk(m, c), None)
    for name, (data, _) in generated.items():
        with open(os.path.join(outdir, name + ".json"), "w") as f:
            json.dump(data, f, separators=(",", ":"))
            f.write("\n")
    print(json.dumps({k: v[1] for k, v in generated.items()}, indent=1))


if __name__ == "__main__":
    main()
