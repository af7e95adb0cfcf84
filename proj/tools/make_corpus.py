#!/usr/bin/env python3
"""Builds corpus/*.tangle and checks every file for planarity and sign
consistency.

Diagrams are assembled from horizontal slices (caps, cups and crossings of
adjacent strands), or cut out of a closed PD code along a Conway sphere.
Crossing slots are listed counterclockwise starting from the incoming
under-strand; a crossing is positive when the over-strand runs from slot d to
slot b.

    python3 tools/make_corpus.py            # write corpus/
    python3 tools/make_corpus.py --check    # only verify existing files
"""

import argparse
import itertools
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


class Tangle:
    """crossings: list of [sign, [a, b, c, d]]; boundary: {point: edge}."""

    def __init__(self, name, side, endpoints, crossings, boundary, loops=0, comment=""):
        self.name = name
        self.side = side
        self.endpoints = endpoints
        self.crossings = crossings
        self.boundary = boundary
        self.loops = loops
        self.comment = comment

    def text(self):
        out = []
        for line in self.comment.strip().splitlines():
            out.append("# " + line if line else "#")
        out += [f"tangle {self.name}", f"side {self.side}", f"endpoints {self.endpoints}"]
        for sign, slots in self.crossings:
            out.append("cross {} {}".format(sign, " ".join(map(str, slots))))
        if self.loops:
            out.append(f"loop {self.loops}")
        for p in sorted(self.boundary):
            out.append(f"boundary {p} {self.boundary[p]}")
        return "\n".join(out) + "\n"


def parse(text):
    t = Tangle(None, None, None, [], {})
    for raw in text.splitlines():
        w = raw.split("#")[0].split()
        if not w:
            continue
        if w[0] == "tangle":
            t.name = w[1]
        elif w[0] == "side":
            t.side = w[1]
        elif w[0] == "endpoints":
            t.endpoints = int(w[1])
        elif w[0] == "cross":
            t.crossings.append([w[1], [int(x) for x in w[2:6]]])
        elif w[0] == "loop":
            t.loops = int(w[1])
        elif w[0] == "boundary":
            t.boundary[int(w[1])] = int(w[2])
        else:
            raise ValueError(f"unknown directive {w[0]}")
    return t


# ---------------------------------------------------------------- checks


def edge_ends(slots_list, boundary):
    ends = {}
    for i, slots in enumerate(slots_list):
        for k, e in enumerate(slots):
            ends.setdefault(e, []).append(("x", i, k))
    for p, e in boundary.items():
        ends.setdefault(e, []).append(("b", p))
    return ends


def is_planar(slots_list, boundary, ccw_points):
    """Euler characteristic of the map whose vertices are the crossings plus
    one vertex for the complement of the disk. Around that vertex the points
    appear in the reverse of the disk's counterclockwise order."""
    ends = edge_ends(slots_list, boundary)
    if any(len(v) != 2 for v in ends.values()):
        return False
    rot_b = list(reversed(ccw_points))

    def rot(d):
        if d[0] == "x":
            return ("x", d[1], (d[2] + 1) % 4)
        i = rot_b.index(d[1])
        return ("b", rot_b[(i + 1) % len(rot_b)])

    def opp(d):
        a, b = ends[slots_list[d[1]][d[2]] if d[0] == "x" else boundary[d[1]]]
        return b if a == d else a

    darts = [("x", i, k) for i in range(len(slots_list)) for k in range(4)]
    darts += [("b", p) for p in boundary]
    seen, faces = set(), 0
    for d in darts:
        if d in seen:
            continue
        faces += 1
        while d not in seen:
            seen.add(d)
            d = rot(opp(d))
    uf = UnionFind()
    vertices = [("x", i) for i in range(len(slots_list))] + ([("b",)] if boundary else [])
    for v in vertices:
        uf.find(v)
    for a, b in ends.values():
        uf.union(a[:2] if a[0] == "x" else ("b",), b[:2] if b[0] == "x" else ("b",))
    comps = len({uf.find(v) for v in vertices})
    return len(vertices) - len(ends) + faces == 1 + comps


def orient(slots_list, boundary, start_points=()):
    """Orients every strand. Strands touching the boundary start at the first
    listed point of start_points that they contain (or their smaller point);
    closed components keep the under-strand direction of their first crossing.
    Returns (signs, rotated slots) with each tuple starting at the incoming
    under-strand."""
    ends = edge_ends(slots_list, boundary)
    incoming = {}

    def walk(d):
        # d is an end we are arriving at.
        while d[0] == "x" and (d[1], d[2]) not in incoming:
            i, k = d[1], d[2]
            incoming[(i, k)] = True
            incoming[(i, (k + 2) % 4)] = False
            e = slots_list[i][(k + 2) % 4]
            a, b = ends[e]
            d = b if a == ("x", i, (k + 2) % 4) else a

    order = list(start_points) + sorted(p for p in boundary if p not in start_points)
    done = set()
    for p in order:
        if p in done:
            continue
        a, b = ends[boundary[p]]
        nxt = b if a == ("b", p) else a
        walk(nxt)
        # find the far end of this strand so it is not restarted from there
        d = nxt
        while d[0] == "x":
            i, k = d[1], d[2]
            e = slots_list[i][(k + 2) % 4]
            a, b = ends[e]
            d = b if a == ("x", i, (k + 2) % 4) else a
        done.update({p, d[1]})
    for i in range(len(slots_list)):
        if (i, 0) not in incoming:
            walk(("x", i, 0))
    signs, rotated = [], []
    for i, s in enumerate(slots_list):
        r = list(s) if incoming[(i, 0)] else [s[2], s[3], s[0], s[1]]
        if incoming[(i, 0)] == incoming[(i, 2)]:
            raise ValueError("inconsistent orientation")
        # over-strand occupies the odd slots of the rotated tuple
        d_in = incoming[(i, 3)] if incoming[(i, 0)] else incoming[(i, 1)]
        signs.append("+" if d_in else "-")
        rotated.append(r)
    return signs, rotated


def check(t):
    """Planarity, edge multiplicities and sign consistency of a tangle file."""
    slots = [s for _, s in t.crossings]
    pts = list(range(1, t.endpoints + 1))
    if sorted(t.boundary) != pts:
        return "boundary points are not 1..2n"
    if t.endpoints == 0 and not slots:
        return None
    ccw = pts if t.side == "inside" else list(reversed(pts))
    if not is_planar(slots, t.boundary, ccw):
        return "not planar"
    # Slot a of every tuple is declared incoming; those declarations must be
    # consistent along strands and must produce the stated signs.
    stated = orient_from_stated(slots, t.boundary)
    if stated is None:
        return "crossing tuples do not admit a consistent orientation"
    for (sign, _), s in zip(t.crossings, stated):
        if s is not None and sign != s:
            return "crossing sign disagrees with orientation"
    return None


def orient_from_stated(slots_list, boundary):
    """Uses slot a of every tuple as incoming; returns computed signs, or None
    when the stated directions conflict along a strand."""
    ends = edge_ends(slots_list, boundary)
    incoming = {}
    for i in range(len(slots_list)):
        incoming[(i, 0)] = True
        incoming[(i, 2)] = False
    changed = True
    while changed:
        changed = False
        for e, (a, b) in ends.items():
            for u, v in ((a, b), (b, a)):
                if u[0] != "x" or v[0] != "x":
                    continue
                ku = (u[1], u[2])
                kv = (v[1], v[2])
                if ku in incoming:
                    want = not incoming[ku]
                    if kv in incoming and incoming[kv] != want:
                        return None
                    if kv not in incoming:
                        incoming[kv] = want
                        opp = (v[1], (v[2] + 2) % 4)
                        if opp in incoming and incoming[opp] == want:
                            return None
                        incoming[opp] = not want
                        changed = True
    signs = []
    for i in range(len(slots_list)):
        if (i, 1) not in incoming:
            # over-strand runs between boundary points only through this
            # crossing; any orientation is consistent, report as stated
            signs.append(None)
            continue
        signs.append("+" if incoming[(i, 3)] else "-")
    return signs


# ---------------------------------------------------------------- slices


class Slices:
    """Bottom-to-top construction. pos holds the current edge id at each
    strand position. Over-strand choice: '/' means the strand from
    bottom-left to top-right is on top."""

    def __init__(self, bottom):
        self.uf_split = UnionFind()
        self.uf_closed = UnionFind()
        self.next = 1
        self.crossings = []  # (level, slots with under-strand at 0 and 2)
        self.level = 0
        self.cut_level = None
        self.cut = None
        self.pos = [self.fresh() for _ in range(bottom)]
        self.bottom = list(self.pos)

    def fresh(self):
        e = self.next
        self.next += 1
        return e

    def cross(self, i, over):
        sw, se = self.pos[i], self.pos[i + 1]
        ne, nw = self.fresh(), self.fresh()
        if over == "/":
            slots = [se, ne, nw, sw]
        elif over == "\\":
            slots = [sw, se, ne, nw]
        else:
            raise ValueError(over)
        self.crossings.append((self.level, slots))
        self.pos[i], self.pos[i + 1] = nw, ne
        self.level += 1
        return self

    def cup(self, i):
        e = self.fresh()
        self.pos[i:i] = [e, e]
        return self

    def cap(self, i):
        a, b = self.pos[i], self.pos[i + 1]
        for uf in (self.uf_split, self.uf_closed):
            uf.union(a, b)
        del self.pos[i : i + 2]
        return self

    def cut_here(self):
        self.cut_level = self.level
        lower = list(self.pos)
        self.pos = [self.fresh() for _ in lower]
        for a, b in zip(lower, self.pos):
            self.uf_closed.union(a, b)
        self.cut = (lower, list(self.pos))
        self.level += 1
        return self


def relabel(crossings, boundary):
    """Canonical small labels: boundary points first, then slot order."""
    mapping = {}
    for p in sorted(boundary):
        mapping.setdefault(boundary[p], len(mapping) + 1)
    for _, s in crossings:
        for e in s:
            mapping.setdefault(e, len(mapping) + 1)
    return (
        [[sg, [mapping[e] for e in s]] for sg, s in crossings],
        {p: mapping[e] for p, e in boundary.items()},
    )


def count_loops(slots_list, boundary, all_edges, uf):
    used = {uf.find(e) for s in slots_list for e in s} | {uf.find(e) for e in boundary.values()}
    return len({uf.find(e) for e in all_edges} - used)


def rect_tangle(name, s, comment):
    """Inside tangle from a slice stack with bottom points numbered left to
    right and top points right to left; strands are oriented from the top."""
    uf = s.uf_split
    boundary = {}
    for j, e in enumerate(s.bottom):
        boundary[j + 1] = uf.find(e)
    top = list(reversed(s.pos))
    nb = len(s.bottom)
    for j, e in enumerate(top):
        boundary[nb + j + 1] = uf.find(e)
    slots = [[uf.find(e) for e in sl] for _, sl in s.crossings]
    loops = count_loops(slots, boundary, range(1, s.next), uf)
    starts = list(range(nb + 1, nb + len(top) + 1))
    signs, rotated = orient(slots, boundary, starts)
    crossings, boundary = relabel(list(zip(signs, rotated)), boundary)
    return Tangle(name, "inside", len(boundary), crossings, boundary, loops, comment)


def split_tangles(names, s, comments):
    """Closed diagram with a horizontal cut. The inside tangle is the part
    above the cut, the outside tangle the part below; points are numbered
    left to right along the cut on both sides."""
    assert not s.bottom and not s.pos and s.cut is not None
    ufc, ufs = s.uf_closed, s.uf_split
    closed_slots = [[ufc.find(e) for e in sl] for _, sl in s.crossings]
    signs, rot_closed = orient(closed_slots, {})
    # reuse the closed orientation on the pieces
    pieces = {"inside": ([], {}), "outside": ([], {})}
    for (lvl, sl), sg, rc, cs in zip(s.crossings, signs, rot_closed, closed_slots):
        side = "inside" if lvl > s.cut_level else "outside"
        shift = 0 if rc == cs else 2
        piece = [ufs.find(e) for e in sl]
        piece = piece[shift:] + piece[:shift]
        pieces[side][0].append([sg, piece])
    lower, upper = s.cut
    for p, (lo, up) in enumerate(zip(lower, upper), start=1):
        pieces["inside"][1][p] = ufs.find(up)
        pieces["outside"][1][p] = ufs.find(lo)
    out = []
    for side, name, comment in zip(("inside", "outside"), names[:2], comments[:2]):
        cr, bd = pieces[side]
        loops = 0
        cr, bd = relabel(cr, bd)
        out.append(Tangle(name, side, len(bd), cr, bd, loops, comment))
    cr, _ = relabel(list(zip(signs, rot_closed)), {})
    out.append(Tangle(names[2], "inside", 0, cr, {}, 0, comments[2]))
    return out


# ---------------------------------------------------------------- Conway sphere


def conway_split(pd, inside_set):
    """Cuts a closed PD code along the boundary of the crossing set. Returns
    (inside slots, outside slots, inside boundary, outside boundary) with the
    four points numbered counterclockwise around the inside disk."""
    ends = edge_ends(pd, {})
    cut = []
    for e, (a, b) in ends.items():
        if (a[1] in inside_set) != (b[1] in inside_set):
            cut.append(e)
    if len(cut) != 4:
        return None
    ins = sorted(inside_set)
    outs = [i for i in range(len(pd)) if i not in inside_set]
    in_slots = [list(pd[i]) for i in ins]
    out_slots = [list(pd[i]) for i in outs]
    for order in itertools.permutations(cut[1:]):
        ccw = [cut[0]] + list(order)
        bd = {p: e for p, e in enumerate(ccw, start=1)}
        if is_planar(in_slots, bd, [1, 2, 3, 4]) and is_planar(out_slots, bd, [4, 3, 2, 1]):
            return ins, outs, bd
    return None


# KT knot (K11n42) as a PD code with 1-based labels; under-strand in slots
# a and c, slots counterclockwise.
KT_PD = [
    (3, 1, 4, 22), (1, 7, 2, 6), (7, 3, 8, 2), (11, 4, 12, 5), (5, 12, 6, 13), (8, 17, 9, 18),
    (14, 9, 15, 10), (10, 20, 11, 19), (18, 14, 19, 13), (20, 15, 21, 16), (16, 21, 17, 22),
]
# Crossings enclosed by the Conway sphere used for the mutation; chosen so
# that the mutant is the Conway knot (Seifert genus 3 against 2 for KT).
KT_INSIDE = (1, 2, 3, 4, 5)


def kt_family():
    pd = [list(x) for x in KT_PD]
    assert is_planar(pd, {}, [])
    found = conway_split(pd, {i - 1 for i in KT_INSIDE})
    assert found, "no Conway sphere around the chosen crossings"
    ins, outs, bd = found
    signs, rot = orient(pd, {})
    sign_of = dict(enumerate(signs))
    rot_of = dict(enumerate(rot))

    def piece(idx):
        return [[sign_of[i], list(rot_of[i])] for i in idx]

    kt_in = relabel(piece(ins), bd)
    kt_out = relabel(piece(outs), bd)
    # mutant: the inside point p is glued where the outside point p - 2 sits
    e_in = {bd[p]: bd[(p + 1) % 4 + 1] for p in bd}
    mut = []
    for i in range(len(pd)):
        s = list(pd[i])
        if i in ins:
            # internal edges get fresh labels so they cannot meet outside ones
            s = [e_in[e] if e in e_in else e + 1000 for e in s]
        mut.append(s)
    assert is_planar(mut, {}, [])
    msigns, mrot = orient(mut, {})
    conway_closed = relabel(list(zip(msigns, mrot)), {})
    kt_closed = relabel(list(zip(signs, rot)), {})
    rot_in = relabel(piece(ins), {(p + 1) % 4 + 1: e for p, e in bd.items()})
    return kt_in, kt_out, rot_in, kt_closed, conway_closed, pd, mut


def seifert_genus(crossings):
    try:
        import spherogram
        from knot_floer_homology import pd_to_hfk
    except ImportError:
        return None
    link = spherogram.Link([tuple(s) for _, s in crossings])
    return pd_to_hfk(link.PD_code())["seifert_genus"]


# ---------------------------------------------------------------- corpus


def build():
    T = []

    T.append(Tangle("t_left", "inside", 4, [["+", [4, 1, 2, 3]]], {1: 1, 2: 2, 3: 3, 4: 4}, 0,
                    "One positive crossing. The 0-smoothing joins 1-4 and 2-3, i.e. the\n"
                    "inside matching (4,2)."))
    T.append(Tangle("t_right", "outside", 4, [["+", [1, 4, 3, 2]]], {1: 1, 2: 2, 3: 3, 4: 4}, 0,
                    "Outside partner of t_left; glued along shared labels it closes up to\n"
                    "the positive Hopf link (see hopf.tangle)."))
    T.append(Tangle("hopf", "inside", 0, [["+", [4, 1, 2, 3]], ["+", [1, 4, 3, 2]]], {}, 0,
                    "t_left and t_right glued along their shared edge labels."))
    T.append(Tangle("unknot", "inside", 0, [], {}, 1, "Crossingless unknot."))
    T.append(Tangle("two_loops", "inside", 0, [], {}, 2, "Two-component unlink."))
    T.append(Tangle("kink_pos", "inside", 0, [["+", [1, 1, 2, 2]]], {}, 0, "Unknot with one positive kink."))
    T.append(Tangle("kink_neg", "inside", 0, [["-", [2, 1, 1, 2]]], {}, 0, "Unknot with one negative kink."))
    T.append(Tangle("strand1", "inside", 2, [], {1: 1, 2: 1}, 0, "One crossingless arc."))
    T.append(Tangle("strand1_out", "outside", 2, [], {1: 1, 2: 1}, 0, "One crossingless arc, outside."))
    T.append(Tangle("strand2", "inside", 4, [], {1: 1, 2: 1, 3: 2, 4: 2}, 0,
                    "Two crossingless arcs forming the inside matching (2,4)."))

    # Closed trefoil as the plat closure of three half twists, cut after the
    # first twist.
    s = Slices(0).cup(0).cup(2).cross(1, "/").cut_here().cross(1, "/").cross(1, "/").cap(2).cap(0)
    T += split_tangles(
        ("trefoil_in", "trefoil_out", "trefoil"), s,
        ("Upper part of trefoil.tangle (two crossings).",
         "Lower part of trefoil.tangle (one crossing).",
         "Right-handed trefoil, all crossings positive."))

    s = Slices(0).cup(0).cup(2).cross(1, "/").cross(1, "/").cut_here().cross(0, "\\").cross(1, "/").cap(2).cap(0)
    T += split_tangles(
        ("fig8_in", "fig8_out", "fig8"), s,
        ("Upper part of fig8.tangle.", "Lower part of fig8.tangle.", "Figure-eight knot."))

    # Connected sum cut at its two-strand waist: n = 1 on both sides.
    s = (Slices(0).cup(0).cup(2).cross(1, "/").cross(1, "/").cross(1, "/").cap(2)
         .cut_here().cup(2).cross(1, "/").cross(1, "/").cross(0, "\\").cross(1, "/").cap(2).cap(0))
    T += split_tangles(
        ("sum_in", "sum_out", "sum"), s,
        ("Figure-eight half of sum.tangle, two endpoints.",
         "Trefoil half of sum.tangle, two endpoints.",
         "Connected sum of a trefoil and a figure-eight knot."))

    # Three bridges cut through all six strands.
    s = (Slices(0).cup(0).cup(2).cup(4).cross(1, "\\").cross(3, "\\").cross(2, "/")
         .cut_here().cross(1, "\\").cross(3, "\\").cross(2, "/").cap(4).cap(2).cap(0))
    T += split_tangles(
        ("bridge3_in", "bridge3_out", "bridge3"), s,
        ("Upper part of bridge3.tangle, six endpoints.",
         "Lower part of bridge3.tangle, six endpoints.",
         "Six-crossing link diagram in three-bridge position."))

    # Reidemeister moves applied to t_left. Strands are oriented top to
    # bottom as in t_left.
    T.append(rect_tangle("t_left_r1", Slices(2).cross(0, "/").cup(2).cross(1, "/").cap(2),
                         "t_left with a kink added on the right strand (Reidemeister I)."))
    T.append(rect_tangle("t_left_r2", Slices(2).cross(0, "/").cross(0, "/").cross(0, "\\"),
                         "t_left followed by a cancelling pair of crossings (Reidemeister II)."))
    base = Slices(2).cross(0, "/").cup(2)
    T.append(rect_tangle("t_left_r3a",
                         base.cross(1, "/").cross(0, "/").cross(1, "/").cross(0, "\\").cross(1, "\\").cap(2),
                         "t_left with a strand looped through it; r3b differs by one\n"
                         "Reidemeister III move."))
    base = Slices(2).cross(0, "/").cup(2)
    T.append(rect_tangle("t_left_r3b",
                         base.cross(0, "/").cross(1, "/").cross(0, "/").cross(0, "\\").cross(1, "\\").cap(2),
                         "t_left_r3a after a Reidemeister III move."))

    kt_in, kt_out, rot_in, kt_closed, conway_closed, pd, mut = kt_family()
    T.append(Tangle("kt_in", "inside", 4, *kt_in, 0,
                    "Inside of a Conway sphere in the Kinoshita-Terasaka knot."))
    T.append(Tangle("kt_out", "outside", 4, *kt_out, 0,
                    "Outside of the same Conway sphere; pairs with kt_in to give kt.tangle\n"
                    "and with conway_in to give conway.tangle."))
    T.append(Tangle("conway_in", "inside", 4, *rot_in, 0,
                    "kt_in with the marked point moved two segments (the mutation)."))
    T.append(Tangle("kt", "inside", 0, *kt_closed, 0, "Kinoshita-Terasaka knot, 11 crossings."))
    T.append(Tangle("conway", "inside", 0, *conway_closed, 0,
                    "Conway knot, the mutant of kt.tangle along the sphere of kt_in."))
    return T


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="verify existing corpus files only")
    args = ap.parse_args()
    if not args.check:
        CORPUS.mkdir(exist_ok=True)
        for t in build():
            (CORPUS / f"{t.name}.tangle").write_text(t.text())
    bad = 0
    for f in sorted(CORPUS.glob("*.tangle")):
        t = parse(f.read_text())
        err = check(t)
        if err:
            print(f"{f.name}: {err}")
            bad += 1
    for name in ("kt", "conway"):
        f = CORPUS / f"{name}.tangle"
        if f.exists():
            g = seifert_genus(parse(f.read_text()).crossings)
            if g is not None:
                print(f"{name}: seifert genus {g}")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
