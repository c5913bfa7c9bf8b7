"""Constructive two-distant-paths-or-hitting-ball solver.

Given ``G``, terminal sets ``X`` and ``Y`` and ``d >= 1``, :func:`solve`
returns either two disjoint X-Y paths at distance at least ``d`` or a vertex
whose ball of radius ``121 d`` meets every X-Y path.

Outline for ``d >= 2``.  Take a shortest X-Y path ``P = v_1 .. v_n`` and the
components of ``G - B(P, 5d)``.  A component holding both terminal sides
gives the second path at once.  Otherwise each component ``H`` is projected
to the interval of path indices at distance exactly ``5d + 1`` from it
(stretched to ``-58d`` / ``n + 58d`` when ``H`` meets X / Y).  Either the
maximal intervals contain an interlaced chain with buffer ``58d`` or a window
of ``P`` separates them, giving the ball.  Close consecutive chain members
are bridged by a wide component, or the gap gives the ball.  What remains is
a sequence of components along ``P``; the two paths weave between ``P`` and
groups of these components ("fruit trees").  A weave that comes out too close
exhibits a short connection between two groups; merging them strictly
shortens the group sequence, so the loop ends.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from collections.abc import Iterable, Sequence

from .certificates import Certificate, DistantPaths, HittingBall, menger_two_paths
from .graph_core import (
    Graph,
    Path,
    ball,
    bfs_layers,
    components_avoiding,
    is_xy_path,
    loop_erase,
    shortest_path_between,
    shortest_xy_path,
    subgraph_distance,
)
from .intervals import (
    IntervalSystem,
    clean_subsequence_indices,
    interlaced_indices,
    interlaced_or_separator,
    validate_system,
)

BALL_FACTOR = 121


class InvariantError(RuntimeError):
    """A property guaranteed by the correctness argument failed at runtime."""


@dataclass(frozen=True)
class Constants:
    d: int

    @property
    def d1(self) -> int:
        return 5 * self.d

    @property
    def d2(self) -> int:
        return 58 * self.d

    @property
    def c(self) -> int:
        return BALL_FACTOR

    @property
    def gap_close(self) -> int:
        return 24 * self.d

    @property
    def gap_route(self) -> int:
        return 12 * self.d

    @property
    def radius(self) -> int:
        return self.c * self.d


@dataclass(frozen=True)
class ComponentProfile:
    vertices: frozenset[int]
    a: int
    b: int
    contains_x: bool
    contains_y: bool

    @property
    def key(self) -> int:
        return min(self.vertices)

    @property
    def interval(self) -> tuple[int, int]:
        return self.a, self.b


@dataclass(frozen=True)
class BridgedSequence:
    entries: tuple[ComponentProfile, ...]
    tags: tuple[str, ...]

    @property
    def m(self) -> int:
        return self.tags.count("M")

    @property
    def s(self) -> int:
        return self.tags.count("S")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FruitTree:
    members: tuple[int, ...]
    composites: tuple[Path, ...]
    vertices: frozenset[int]

    @property
    def lo(self) -> int:
        return self.members[0]

    @property
    def hi(self) -> int:
        return self.members[-1]


Orchard = list[FruitTree]


@dataclass(frozen=True)
class Violation:
    p1: int
    p2: int
    category: str
    trees: tuple[int, int]
    witness_path: Path


@dataclass
class SolveTrace:
    branch: str = ""
    m: int = 0
    s: int = 0
    transcript: list[int] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    path: Path = ()
    sequence: BridgedSequence | None = None
    orchard: Orchard = field(default_factory=list)  # the one the final weave used


# ---------------------------------------------------------------------------
# profiles and the interval system


def component_profiles(g: Graph, p: Path, x, y, k: Constants) -> list[ComponentProfile]:
    x, y = set(x), set(y)
    n = len(p)
    near = ball(g, p, k.d1)
    comps = components_avoiding(g, near)
    comp_of = {v: ci for ci, comp in enumerate(comps) for v in comp}
    lo: list[int | None] = [None] * len(comps)
    hi: list[int | None] = [None] * len(comps)
    for j, v in enumerate(p, start=1):
        for u, du in bfs_layers(g, [v], limit=k.d1 + 1).items():
            if du == k.d1 + 1 and u in comp_of:
                ci = comp_of[u]
                if lo[ci] is None:
                    lo[ci] = j
                hi[ci] = j
    out = []
    for ci, comp in enumerate(comps):
        has_x = not comp.isdisjoint(x)
        has_y = not comp.isdisjoint(y)
        if has_x and has_y:
            raise ValueError("a component off the ball around P meets both X and Y")
        if lo[ci] is None:
            # a whole component of G without both terminal sides
            continue
        a = -k.d2 if has_x else lo[ci]
        b = n + k.d2 if has_y else hi[ci]
        out.append(ComponentProfile(comp, a, b, has_x, has_y))
    return out


def project_to_system(
    profiles: Sequence[ComponentProfile], n: int, k: Constants
) -> tuple[IntervalSystem, list[ComponentProfile]]:
    """Maximal intervals as a ``(-d2, n + d2, d2)``-system ordered by left end."""
    ranked = sorted(profiles, key=lambda h: (h.a, -h.b, h.key))
    kept = []
    reach = None
    for h in ranked:
        if reach is None or h.b > reach:
            kept.append(h)
            reach = h.b
    system = IntervalSystem(-k.d2, n + k.d2, k.d2, tuple(h.interval for h in kept))
    bad = validate_system(system)
    if bad:
        raise InvariantError(f"projected intervals do not form a system: {bad[0]}")
    return system, kept


def bridge(
    selected: Sequence[ComponentProfile],
    all_profiles: Sequence[ComponentProfile],
    k: Constants,
    n: int,
) -> BridgedSequence | int:
    """Insert a wide component between every close consecutive pair.

    Returns the 1-based index of ``P`` to centre the ball on when some close
    pair has no component spanning it.
    """
    chosen = {h.key for h in selected}
    pool = sorted(all_profiles, key=lambda h: h.key)
    entries: list[ComponentProfile] = [selected[0]]
    tags = ["M"]
    for h, h_next in zip(selected, selected[1:]):
        if h.b - h_next.a <= k.gap_close:
            wide = next(
                (
                    c
                    for c in pool
                    if c.key not in chosen and c.a <= h_next.a - k.d2 and c.b >= h.b + k.d2
                ),
                None,
            )
            if wide is None:
                return min(max(h_next.a, 1), n)
            if not (h.a <= wide.a and wide.b <= h_next.b):
                raise InvariantError("bridging component is not nested between its neighbours")
            entries.append(wide)
            tags.append("S")
        entries.append(h_next)
        tags.append("M")
    keys = [h.key for h in entries]
    if len(set(keys)) != len(keys):
        raise InvariantError("a component appears twice in the bridged sequence")
    return BridgedSequence(tuple(entries), tuple(tags))


def check_sequence_gaps(seq: BridgedSequence, k: Constants) -> None:
    for h, h_next in zip(seq.entries, seq.entries[1:]):
        if h.b - h_next.a < k.gap_close:
            raise InvariantError(
                f"consecutive anchors only {h.b - h_next.a} apart along P (need {k.gap_close})"
            )


def check_far_components(g: Graph, seq: BridgedSequence, k: Constants) -> None:
    near5 = k.d2 - 2 * k.d1 - 2 - k.gap_close
    near7 = k.d2 - 2 * k.d1 - 2
    ents = seq.entries
    for p_idx in range(len(ents)):
        if p_idx + 5 >= len(ents):
            break
        dist = bfs_layers(g, ents[p_idx].vertices, limit=near7)
        for q_idx in range(p_idx + 5, len(ents)):
            need = near7 if q_idx >= p_idx + 7 else near5
            closest = min((dist[v] for v in ents[q_idx].vertices if v in dist), default=None)
            if closest is not None and closest < need:
                raise InvariantError(
                    f"components {p_idx} and {q_idx} at distance {closest} < {need}"
                )


# ---------------------------------------------------------------------------
# fruit trees


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _edges(path: Path):
    return [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])]


def end_piece_counts(composites: Sequence[Path]) -> list[tuple[int, int]]:
    """For each composite path, the composite-path counts of the pieces (made
    of the earlier composites) that contain its two ends."""
    out = []
    for i, w in enumerate(composites):
        dsu = _DSU()
        for earlier in composites[:i]:
            for a, b in _edges(earlier):
                dsu.union(a, b)
        count: dict = {}
        for earlier in composites[:i]:
            root = dsu.find(earlier[0])
            count[root] = count.get(root, 0) + 1
        out.append((count.get(dsu.find(w[0]), 0), count.get(dsu.find(w[-1]), 0)))
    return out


def is_d_small(composites: Sequence[Path], d: int) -> bool:
    for w, (n_i, m_i) in zip(composites, end_piece_counts(composites)):
        if len(w) - 1 > (max(n_i, m_i) + 2) * d:
            return False
    return True


def contracts_to_tree(tree: FruitTree, seq: BridgedSequence) -> bool:
    node = {}
    for idx in tree.members:
        for v in seq.entries[idx].vertices:
            node[v] = ("H", idx)
    dsu = _DSU()
    for idx in tree.members:
        dsu.find(("H", idx))
    for w in tree.composites:
        if len(w) < 2:
            return False
        for a, b in zip(w, w[1:]):
            na, nb = node.get(a, a), node.get(b, b)
            if not dsu.union(na, nb):
                return False
    roots = {dsu.find(key) for key in dsu.parent}
    return len(roots) == 1


def tree_depth_check(g: Graph, tree: FruitTree, base: Iterable[int], d: int) -> bool:
    """Composite-path vertices stay within ``l * d`` of the components inside
    the tree, ``l`` being the size of their piece; pieces have at most four
    composite paths."""
    if not tree.composites:
        return True
    dsu = _DSU()
    for w in tree.composites:
        dsu.find(w[0])
        for a, b in zip(w, w[1:]):
            dsu.union(a, b)
    pieces: dict = {}
    for w in tree.composites:
        pieces.setdefault(dsu.find(w[0]), []).append(w)
    if any(len(ws) > 4 for ws in pieces.values()):
        return False
    inside = set(base) & tree.vertices
    depth = bfs_layers(g, inside, allowed=tree.vertices)
    for ws in pieces.values():
        bound = len(ws) * d
        for w in ws:
            if any(depth.get(v, bound + 1) > bound for v in w):
                return False
    return True


def validate_tree(g: Graph, tree: FruitTree, seq: BridgedSequence, d: int) -> None:
    members = set(tree.members)
    for w in tree.composites:
        for idx, h in enumerate(seq.entries):
            if idx not in members and not h.vertices.isdisjoint(w):
                raise InvariantError(f"composite path touches component {idx} outside its tree")
    if not contracts_to_tree(tree, seq):
        raise InvariantError("contracting the components of a fruit tree does not give a tree")
    if not is_d_small(tree.composites, d):
        raise InvariantError("fruit tree is not d-small")
    base = set().union(*(seq.entries[i].vertices for i in tree.members))
    if not tree_depth_check(g, tree, base, d):
        raise InvariantError("fruit tree has a deep or oversized composite piece")


def singleton_orchard(seq: BridgedSequence) -> Orchard:
    return [FruitTree((i,), (), h.vertices) for i, h in enumerate(seq.entries)]


def check_orchard(orchard: Orchard, seq: BridgedSequence) -> None:
    if orchard[0].lo != 0 or orchard[-1].hi != len(seq) - 1:
        raise InvariantError("orchard does not cover the sequence ends")
    for a, b in zip(orchard, orchard[1:]):
        if a.hi + 1 != b.lo:
            raise InvariantError("orchard trees do not chain")
    seen: set[int] = set()
    for tree in orchard:
        if not seen.isdisjoint(tree.vertices):
            raise InvariantError("orchard trees overlap")
        seen |= tree.vertices


# ---------------------------------------------------------------------------
# weaving


class _Walk:
    def __init__(self):
        self.vertices: list[int] = []
        self.labels: list[set] = []  # a junction vertex carries both segments' labels

    def add(self, seg: Sequence[int], label: tuple):
        seg = list(seg)
        if self.vertices and seg and self.vertices[-1] == seg[0]:
            self.labels[-1].add(label)
            seg = seg[1:]
        self.vertices.extend(seg)
        self.labels.extend({label} for _ in seg)

    @property
    def end(self) -> int:
        return self.vertices[-1]


class _Weaver:
    def __init__(self, g: Graph, seq: BridgedSequence, orchard: Orchard, p: Path, x, y, k: Constants):
        self.g, self.seq, self.orchard, self.p, self.k = g, seq, orchard, p, k
        self.x, self.y = frozenset(x), frozenset(y)
        self.t = len(orchard)
        self.n = len(p)
        self._a: dict[int, Path] = {}
        self._b: dict[int, Path] = {}

    # anchors are 1-based indices along P
    def alpha(self, i: int) -> int:
        if i == self.t - 1:
            return self.n
        return self.seq.entries[self.orchard[i].hi + 1].a

    def beta(self, i: int) -> int:
        return self.seq.entries[self.orchard[i].hi].b

    def A(self, i: int) -> Path:
        if i not in self._a:
            path = shortest_path_between(self.g, [self.p[self.alpha(i) - 1]], self.orchard[i + 1].vertices)
            if path is None or len(path) - 1 > self.k.d1 + 1:
                raise InvariantError(f"connector A_{i} missing or longer than d1 + 1")
            self._a[i] = path
        return self._a[i]

    def B(self, i: int) -> Path:
        if i not in self._b:
            path = shortest_path_between(self.g, self.orchard[i].vertices, [self.p[self.beta(i) - 1]])
            if path is None or len(path) - 1 > self.k.d1 + 1:
                raise InvariantError(f"connector B_{i} missing or longer than d1 + 1")
            self._b[i] = path
        return self._b[i]

    def left_end(self, i: int) -> int:
        if i == 0:
            return min(self.x & self.seq.entries[0].vertices)
        return self.A(i - 1)[-1]

    def right_end(self, i: int) -> int:
        if i == self.t - 1:
            return min(self.y & self.seq.entries[-1].vertices)
        return self.B(i)[0]

    def Q(self, i: int) -> Path:
        path = shortest_path_between(
            self.g, [self.left_end(i)], [self.right_end(i)], allowed=self.orchard[i].vertices
        )
        if path is None:
            raise InvariantError(f"fruit tree {i} is not connected")
        return path

    def along_p(self, s: int, e: int) -> list[int]:
        step = 1 if e >= s else -1
        return [self.p[j - 1] for j in range(s, e + step, step)]

    def run(self) -> tuple[_Walk, _Walk]:
        gap = self.k.gap_route
        walks = [_Walk(), _Walk()]
        walks[0].add(self.along_p(1, self.alpha(0)), ("P",))
        walks[1].add(self.Q(0), ("Q", 0))
        ia = 0  # walk currently ending at alpha_i
        i = 0
        t = self.t
        while i < t - 1:
            wa, wr = walks[ia], walks[1 - ia]
            nxt = self.orchard[i + 1]
            if i + 1 == t - 1 or len(nxt.members) >= 2:
                wa.add(self.A(i), ("A", i))
                wa.add(self.Q(i + 1), ("Q", i + 1))
                wr.add(self.B(i), ("B", i))
                wr.add(self.along_p(self.beta(i), self.alpha(i + 1)), ("P",))
                ia = 1 - ia
                i += 1
                continue
            tag = self.seq.tags[nxt.members[0]]
            if tag == "S":
                forward = self.alpha(i + 2) - self.beta(i)
                if forward >= gap or i + 3 > t - 1:
                    self._advance_two(wa, wr, i)
                    i += 2
                else:
                    self._advance_three(wa, wr, i)
                    i += 3
            elif abs(self.beta(i + 1) - self.beta(i)) >= gap:
                self._advance_two(wa, wr, i)
                i += 2
            else:
                wa.add(self.along_p(self.alpha(i), self.alpha(i + 1)), ("P",))
                wa.add(self.A(i + 1), ("A", i + 1))
                wa.add(self.Q(i + 2), ("Q", i + 2))
                wr.add(self.B(i), ("B", i))
                wr.add(self.along_p(self.beta(i), self.alpha(i + 2)), ("P",))
                ia = 1 - ia
                i += 2
        return walks[0], walks[1]

    def _advance_two(self, wa: _Walk, wr: _Walk, i: int):
        wa.add(self.A(i), ("A", i))
        wa.add(self.Q(i + 1), ("Q", i + 1))
        wa.add(self.B(i + 1), ("B", i + 1))
        wa.add(self.along_p(self.beta(i + 1), self.alpha(i + 2)), ("P",))
        wr.add(self.B(i), ("B", i))
        wr.add(self.along_p(self.beta(i), self.alpha(i + 1)), ("P",))
        wr.add(self.A(i + 1), ("A", i + 1))
        wr.add(self.Q(i + 2), ("Q", i + 2))

    def _advance_three(self, wa: _Walk, wr: _Walk, i: int):
        wa.add(self.A(i), ("A", i))
        wa.add(self.Q(i + 1), ("Q", i + 1))
        wa.add(self.B(i + 1), ("B", i + 1))
        wa.add(self.along_p(self.beta(i + 1), self.alpha(i + 3)), ("P",))
        wr.add(self.B(i), ("B", i))
        wr.add(self.along_p(self.beta(i), self.alpha(i + 2)), ("P",))
        wr.add(self.A(i + 2), ("A", i + 2))
        wr.add(self.Q(i + 3), ("Q", i + 3))

    def connector(self, label: tuple) -> tuple[Path, int, bool]:
        """Connector path, the tree it ends in, and whether that end is last."""
        kind, i = label
        if kind == "A":
            return self.A(i), i + 1, True
        return self.B(i), i, False


def p_separation(walk1: _Walk, walk2: _Walk, p: Path) -> int | float:
    index = {v: j for j, v in enumerate(p)}
    on1 = sorted(index[v] for v, lab in zip(walk1.vertices, walk1.labels) if ("P",) in lab)
    on2 = sorted(index[v] for v, lab in zip(walk2.vertices, walk2.labels) if ("P",) in lab)
    best = float("inf")
    for j in on1:
        pos = bisect.bisect_left(on2, j)
        for q in (pos - 1, pos):
            if 0 <= q < len(on2):
                best = min(best, abs(on2[q] - j))
    return best


def _finish(walk: _Walk, x, y) -> tuple[Path, dict[int, set]]:
    labels: dict[int, set] = {}
    for v, lab in zip(walk.vertices, walk.labels):
        labels.setdefault(v, set()).update(lab)
    path = loop_erase(walk.vertices)
    start = max(i for i, v in enumerate(path) if v in x)
    end = next(i for i in range(start, len(path)) if path[i] in y)
    return tuple(path[start : end + 1]), labels


def _classify(lab_q: set, lab_o: set, weaver: _Weaver):
    best = None
    for la in lab_q:
        if la[0] != "Q":
            continue
        for lb in lab_o:
            if lb[0] == "Q" and lb[1] != la[1]:
                return ("Q-Q", la, lb)
            if lb[0] in ("A", "B"):
                _, tree, _ = weaver.connector(lb)
                if tree != la[1] and best is None:
                    best = ("Q-connector", la, lb)
    return best


def weave(
    g: Graph,
    seq: BridgedSequence,
    orchard: Orchard,
    p: Path,
    x,
    y,
    k: Constants,
) -> tuple[Path, Path] | Violation:
    """Route two X-Y paths through the orchard and along ``P``.

    Returns the pair when they are at distance at least ``d``; otherwise a
    violation carrying a short path between two different trees.
    """
    weaver = _Weaver(g, seq, orchard, p, x, y, k)
    w1, w2 = weaver.run()
    sep = p_separation(w1, w2, p)
    if sep < k.gap_route:
        raise InvariantError(f"the two paths use P-positions only {sep} apart (need {k.gap_route})")
    (p1, lab1), (p2, lab2) = _finish(w1, weaver.x, weaver.y), _finish(w2, weaver.x, weaver.y)
    for path in (p1, p2):
        if not is_xy_path(g, path, weaver.x, weaver.y):
            raise InvariantError("woven route is not an X-Y path")
    if subgraph_distance(g, p1, p2) >= k.d:
        return p1, p2

    on2 = set(p2)
    found: dict[str, list] = {"Q-Q": [], "Q-connector": []}
    for u in p1:
        for v, dv in sorted(bfs_layers(g, [u], limit=k.d - 1).items(), key=lambda kv: (kv[1], kv[0])):
            if v not in on2:
                continue
            got = _classify(lab1[u], lab2[v], weaver)
            if got is not None:
                found[got[0]].append((dv, u, v, got[1], got[2]))
                continue
            got = _classify(lab2[v], lab1[u], weaver)
            if got is None:
                raise InvariantError(
                    f"paths meet outside the expected cases at {u} ~ {v}: "
                    f"{sorted(lab1[u])} / {sorted(lab2[v])}"
                )
            found[got[0]].append((dv, v, u, got[1], got[2]))
    for category in ("Q-Q", "Q-connector"):
        if found[category]:
            _, q_vertex, other, lq, lo = min(found[category], key=lambda r: (r[0], r[1], r[2]))
            return _violation(weaver, category, q_vertex, other, lq, lo)
    raise InvariantError("close pair found but not classified")


def _violation(weaver: _Weaver, category: str, u: int, v: int, lq: tuple, lo: tuple) -> Violation:
    link = shortest_path_between(weaver.g, [u], [v])
    if category == "Q-Q":
        return Violation(u, v, category, (lq[1], lo[1]), link)
    conn, tree, forward = weaver.connector(lo)
    pos = conn.index(v)
    tail = conn[pos:] if forward else conn[pos::-1]
    witness = tuple(loop_erase(list(link) + list(tail[1:])))
    return Violation(u, v, category, (lq[1], tree), witness)


# ---------------------------------------------------------------------------
# merging


def merge(g: Graph, orchard: Orchard, v: Violation, seq: BridgedSequence, k: Constants) -> Orchard:
    """Join the trees linked by the violation's witness into one tree."""
    if v.category not in ("Q-Q", "Q-connector"):
        raise InvariantError(f"cannot merge on a {v.category!r} violation")
    owner: dict[int, tuple] = {}
    in_tree = set()
    for ti, tree in enumerate(orchard):
        in_tree.update(tree.members)
        for u in tree.vertices:
            owner[u] = ("T", ti)
    for idx, h in enumerate(seq.entries):
        if idx not in in_tree:
            for u in h.vertices:
                owner[u] = ("F", idx)
    path = loop_erase(v.witness_path)
    if owner.get(path[0]) != ("T", v.trees[0]) or owner.get(path[-1]) != ("T", v.trees[1]):
        raise InvariantError("witness does not join the two violating trees")
    contacts = [i for i, u in enumerate(path) if u in owner]
    dsu = _DSU()
    new_paths: list[Path] = []
    for s, e in zip(contacts, contacts[1:]):
        if dsu.union(owner[path[s]], owner[path[e]]):
            new_paths.append(tuple(path[s : e + 1]))
    root = dsu.find(("T", v.trees[0]))
    group = sorted(key for key in dsu.parent if dsu.find(key) == root)
    merged_trees = sorted(i for kind, i in group if kind == "T")
    free = sorted(i for kind, i in group if kind == "F")
    if len(merged_trees) < 2:
        raise InvariantError("witness did not reach a second tree")

    members = set(free)
    vertices = set()
    composites: list[Path] = []
    for ti in merged_trees:
        members.update(orchard[ti].members)
        vertices |= orchard[ti].vertices
        composites.extend(orchard[ti].composites)
    for idx in free:
        vertices |= seq.entries[idx].vertices
    for w in new_paths:
        vertices.update(w)
    composites.extend(new_paths)
    new_tree = FruitTree(tuple(sorted(members)), tuple(composites), frozenset(vertices))
    validate_tree(g, new_tree, seq, k.d)

    out: Orchard = []
    placed = False
    for ti, tree in enumerate(orchard):
        if tree.hi < new_tree.lo:
            out.append(tree)
        elif tree.lo > new_tree.hi:
            if not placed:
                out.append(new_tree)
                placed = True
            out.append(tree)
        elif ti not in merged_trees and not (new_tree.lo <= tree.lo and tree.hi <= new_tree.hi):
            raise InvariantError("merged tree straddles an untouched tree")
    if not placed:
        out.append(new_tree)
    check_orchard(out, seq)
    if len(out) >= len(orchard):
        raise InvariantError("merge did not shrink the orchard")
    return out


# ---------------------------------------------------------------------------
# the solver


def _ball(center: int, k: Constants) -> HittingBall:
    return HittingBall(center, k.radius)


def solve_with_trace(g: Graph, x: Iterable[int], y: Iterable[int], d: int) -> tuple[Certificate, SolveTrace]:
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    if d < 1:
        raise ValueError("d must be positive")
    x = g.check_vertices(x)
    y = g.check_vertices(y)
    k = Constants(d)
    trace = SolveTrace()

    if d == 1:
        trace.branch = "menger"
        got = menger_two_paths(g, x, y)
        if isinstance(got, tuple):
            return DistantPaths(*got), trace
        return _ball(got, k), trace

    p = shortest_xy_path(g, x, y)
    if p is None:
        trace.branch = "no-path"
        return _ball(0, k), trace
    n = len(p)
    trace.path = p

    near = ball(g, p, k.d1)
    for comp in components_avoiding(g, near):
        w = shortest_xy_path(g, x & comp, y & comp, allowed=comp)
        if w is not None:
            trace.branch = "early-exit"
            return DistantPaths(p, w), trace

    profiles = component_profiles(g, p, x, y, k)
    system, kept = project_to_system(profiles, n, k)
    chain = interlaced_indices(system, k.d2)
    if chain is None:
        witness = interlaced_or_separator(system, k.d2)
        trace.branch = "separator"
        return _ball(p[min(max(witness.z, 1), n) - 1], k), trace
    sub = system.subsequence(chain)
    selected = [kept[chain[i]] for i in clean_subsequence_indices(sub, k.d2)]

    seq = bridge(selected, profiles, k, n)
    if isinstance(seq, int):
        trace.branch = "bridge"
        return _ball(p[seq - 1], k), trace
    trace.m, trace.s = seq.m, seq.s
    trace.sequence = seq
    check_sequence_gaps(seq, k)
    check_far_components(g, seq, k)

    trace.branch = "weave"
    orchard = singleton_orchard(seq)
    trace.transcript.append(len(orchard))
    while True:
        trace.orchard = orchard
        got = weave(g, seq, orchard, p, x, y, k)
        if isinstance(got, tuple):
            return DistantPaths(*got), trace
        trace.violations.append(got.category)
        orchard = merge(g, orchard, got, seq, k)
        trace.transcript.append(len(orchard))


def solve(g: Graph, x: Iterable[int], y: Iterable[int], d: int) -> Certificate:
    """Two disjoint X-Y paths at distance >= d, or a ball of radius 121 d
    meeting every X-Y path."""
    return solve_with_trace(g, x, y, d)[0]
