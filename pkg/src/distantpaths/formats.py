"""Text formats: the edge-list graph file, terminal lists, certificate
documents and a DOT rendering.

Graph file::

    # comments start with '#'
    n m
    u v        (m lines, 0-based ids)
"""
from __future__ import annotations

import hashlib
import json
from collections.abc import Iterable
from pathlib import Path as FsPath

from .certificates import Certificate, DistantPaths, HittingBall
from .graph_core import Graph


class FormatError(ValueError):
    """Malformed input file or document."""


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: not an integer in {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty graph file") from None
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise FormatError("vertex and edge counts must be nonnegative")
    edges = []
    seen = set()
    for lineno, line in lines:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, file has {len(edges)}")
    return Graph(n, edges)


def emit_graph(g: Graph) -> str:
    out = [f"{g.vertex_count} {g.edge_count}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(FsPath(path).read_text())


def parse_terminals(text: str) -> frozenset[int]:
    """Ids separated by commas and/or whitespace; '#' comments allowed."""
    ids = []
    for lineno, line in _data_lines(text):
        for tok in line.replace(",", " ").split():
            try:
                ids.append(int(tok))
            except ValueError:
                raise FormatError(f"line {lineno}: bad terminal id {tok!r}") from None
    return frozenset(ids)


def emit_terminals(vs: Iterable[int]) -> str:
    return ",".join(str(v) for v in sorted(vs)) + "\n"


def instance_digest(g: Graph, x: Iterable[int], y: Iterable[int], d: int) -> str:
    text = emit_graph(g) + "X " + emit_terminals(x) + "Y " + emit_terminals(y) + f"d {d}\n"
    return hashlib.sha256(text.encode()).hexdigest()


def certificate_to_dict(cert: Certificate, digest: str | None = None) -> dict:
    if isinstance(cert, DistantPaths):
        doc = {"type": "paths", "p1": list(cert.p1), "p2": list(cert.p2)}
    elif isinstance(cert, HittingBall):
        doc = {"type": "ball", "center": cert.center, "radius": cert.radius}
    else:
        raise TypeError(f"not a certificate: {cert!r}")
    if digest is not None:
        doc["digest"] = digest
    return doc


def emit_certificate(cert: Certificate, digest: str | None = None) -> str:
    return json.dumps(certificate_to_dict(cert, digest), sort_keys=True) + "\n"


def _int_list(doc: dict, key: str) -> tuple[int, ...]:
    val = doc.get(key)
    if not isinstance(val, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in val):
        raise FormatError(f"field {key!r} must be a list of integers")
    return tuple(val)


def parse_certificate(text: str) -> tuple[Certificate, str | None]:
    """The certificate and the digest it was issued for (None if absent)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("certificate must be a JSON object")
    digest = doc.get("digest")
    if digest is not None and not isinstance(digest, str):
        raise FormatError("digest must be a string")
    kind = doc.get("type")
    if kind == "paths":
        extra = set(doc) - {"type", "p1", "p2", "digest"}
        cert = DistantPaths(_int_list(doc, "p1"), _int_list(doc, "p2"))
    elif kind == "ball":
        extra = set(doc) - {"type", "center", "radius", "digest"}
        center, radius = doc.get("center"), doc.get("radius")
        for name, val in (("center", center), ("radius", radius)):
            if not isinstance(val, int) or isinstance(val, bool):
                raise FormatError(f"field {name!r} must be an integer")
        cert = HittingBall(center, radius)
    else:
        raise FormatError(f"unknown certificate type {kind!r}")
    if extra:
        raise FormatError(f"unexpected fields {sorted(extra)}")
    return cert, digest


def emit_dot(g: Graph, x=(), y=(), cert: Certificate | None = None) -> str:
    """Graphviz rendering; X boxes, Y diamonds, certificate paths coloured."""
    x, y = set(x), set(y)
    colour = {}
    edge_colour = {}
    if isinstance(cert, DistantPaths):
        for path, c in ((cert.p1, "blue"), (cert.p2, "red")):
            for v in path:
                colour[v] = c
            for u, v in zip(path, path[1:]):
                edge_colour[(min(u, v), max(u, v))] = c
    elif isinstance(cert, HittingBall):
        colour[cert.center] = "orange"
    lines = ["graph G {"]
    for v in g.vertices():
        attrs = []
        if v in x:
            attrs.append("shape=box")
        elif v in y:
            attrs.append("shape=diamond")
        if v in colour:
            attrs.append(f"color={colour[v]}")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for e in g.edges:
        attr = f" [color={edge_colour[e]}]" if e in edge_colour else ""
        lines.append(f"  {e[0]} -- {e[1]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
