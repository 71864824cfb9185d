"""Quiver and relation data model, construction from weight vectors, and I/O.

A quiver here is a finite directed multigraph with named arrows.  Arrows may
carry two optional integer annotations, ``var`` and ``base``: an arrow named
``x3_1`` is the multiplication-by-the-third-variable map based at index 1,
and the annotations record that pair (3, 1).  A relation is an ordered pair
of parallel paths whose difference is declared to vanish in the path algebra.

Three interchange formats are supported: a small line-oriented DSL, JSON,
and Graphviz DOT (output only).  All serializers are deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .grading import WeightVector


class ParseError(ValueError):
    """Malformed DSL input, with 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class ValidationError(ValueError):
    """Structurally invalid quiver data (dangling references, bad relations)."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
# arrow names of the form x<i>_<k> declare the (var, base) annotation
_ANNOTATED_NAME_RE = re.compile(r"x([1-9][0-9]*)_([0-9]+)$")


@dataclass(frozen=True)
class Arrow:
    id: int
    name: str
    source: int
    target: int
    var: int | None = None
    base: int | None = None


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        seen = set()
        for label in self.vertices:
            if label in seen:
                raise ValidationError(f"duplicate vertex label {label!r}")
            seen.add(label)
        names = set()
        for i, arrow in enumerate(self.arrows):
            if arrow.id != i:
                raise ValidationError(
                    f"arrow ids must be dense 0..{len(self.arrows) - 1}, "
                    f"got id {arrow.id} at position {i}")
            if arrow.name in names:
                raise ValidationError(f"duplicate arrow name {arrow.name!r}")
            names.add(arrow.name)
            for v in (arrow.source, arrow.target):
                if not 0 <= v < len(self.vertices):
                    raise ValidationError(
                        f"arrow {arrow.name!r} references vertex index {v}, "
                        f"but there are {len(self.vertices)} vertices")

    def index_of(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise ValidationError(f"unknown vertex {label!r}") from None

    def arrows_from(self, vertex: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def arrow_count_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Entry (k, l) is the number of arrows from vertex k to vertex l."""
        counts = [[0] * len(self.vertices) for _ in self.vertices]
        for a in self.arrows:
            counts[a.source][a.target] += 1
        return tuple(tuple(row) for row in counts)

    def topological_order(self) -> list[int] | None:
        """Vertices in topological order, or None if there is a cycle."""
        indeg = [0] * len(self.vertices)
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v, d in enumerate(indeg) if d == 0]
        order = []
        while ready:
            v = ready.pop()
            order.append(v)
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        ready.append(a.target)
        if len(order) != len(self.vertices):
            return None
        return order

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence in traversal order; () is the lazy path."""

    start: int
    arrows: tuple[int, ...] = ()

    def __len__(self):
        return len(self.arrows)


def path_end(quiver: Quiver, path: Path) -> int:
    validate_path(quiver, path)
    if not path.arrows:
        return path.start
    return quiver.arrows[path.arrows[-1]].target


def validate_path(quiver: Quiver, path: Path) -> None:
    """Raise ValidationError unless consecutive arrows compose."""
    if not 0 <= path.start < len(quiver.vertices):
        raise ValidationError(f"path start {path.start} is not a vertex index")
    at = path.start
    for aid in path.arrows:
        if not 0 <= aid < len(quiver.arrows):
            raise ValidationError(f"path references unknown arrow id {aid}")
        arrow = quiver.arrows[aid]
        if arrow.source != at:
            raise ValidationError(
                f"arrow {arrow.name!r} starts at vertex {arrow.source}, "
                f"but the path is at vertex {at}")
        at = arrow.target


def concatenate(quiver: Quiver, first: Path, second: Path) -> Path:
    """Traversal-order composition: walk first, then second."""
    if path_end(quiver, first) != second.start:
        raise ValidationError("paths do not compose: endpoint mismatch")
    return Path(first.start, first.arrows + second.arrows)


@dataclass(frozen=True)
class Relation:
    lhs: Path
    rhs: Path


@dataclass(frozen=True)
class QuiverWithRelations:
    quiver: Quiver
    relations: tuple[Relation, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        for rel in self.relations:
            for side in (rel.lhs, rel.rhs):
                validate_path(self.quiver, side)
            if rel.lhs.start != rel.rhs.start:
                raise ValidationError("relation sides start at different vertices")
            if path_end(self.quiver, rel.lhs) != path_end(self.quiver, rel.rhs):
                raise ValidationError("relation sides end at different vertices")


def build_gamma(w: WeightVector) -> QuiverWithRelations:
    """The commutation quiver with relations attached to a weight vector.

    Vertices are rho_1 .. rho_{N-1} where N is the weight total.  For each
    variable i there is an arrow x<i>_<k> from rho_k to rho_{k + a_i}
    whenever both indices lie in 1..N-1, so every arrow strictly increases
    the vertex index and the quiver is acyclic.  Two variables commute
    wherever both orders of application stay inside the index range, giving
    one length-2 relation per variable pair i < j and base k with
    1 <= k <= N - a_i - a_j - 1.
    """
    N = w.total
    vertices = tuple(f"rho{k}" for k in range(1, N))
    arrows = []
    arrow_at = {}  # (var, base) -> arrow id
    for i, a in enumerate(w.weights, start=1):
        for k in range(1, N - a):
            aid = len(arrows)
            arrows.append(Arrow(aid, f"x{i}_{k}", k - 1, k + a - 1, i, k))
            arrow_at[(i, k)] = aid
    quiver = Quiver(vertices, tuple(arrows))
    relations = []
    for i in range(1, w.n + 1):
        ai = w.weights[i - 1]
        for j in range(i + 1, w.n + 1):
            aj = w.weights[j - 1]
            for k in range(1, N - ai - aj):
                lhs = Path(k - 1, (arrow_at[(i, k)], arrow_at[(j, k + ai)]))
                rhs = Path(k - 1, (arrow_at[(j, k)], arrow_at[(i, k + aj)]))
                relations.append(Relation(lhs, rhs))
    return QuiverWithRelations(quiver, tuple(relations), w.weights)


# ---------------------------------------------------------------------------
# DSL
# ---------------------------------------------------------------------------

def parse_quiver_dsl(text: str) -> QuiverWithRelations:
    """Parse the line-oriented quiver DSL.

    Grammar (one directive per line, ``#`` starts a comment):

        vertices: <name> <name> ...
        arrow <name>: <src> -> <dst>
        relation: <arrow> <arrow> ... = <arrow> <arrow> ...

    Relation sides list arrow names in traversal order.  Arrow names of the
    form x<i>_<k> set the (var, base) annotation to (i, k).
    """
    vertices: list[str] = []
    arrow_specs: list[tuple[str, str, str]] = []
    relation_specs: list[tuple[list[str], list[str], int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        col = raw.index(stripped[0]) + 1

        if stripped.startswith("vertices:"):
            body = stripped[len("vertices:"):]
            for name in body.split():
                _require_name(name, lineno, raw)
                vertices.append(name)
        elif stripped.startswith("arrow"):
            m = re.match(r"arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*$", stripped)
            if m is None:
                raise ParseError(lineno, col, "expected 'arrow <name>: <src> -> <dst>'")
            for name in m.groups():
                _require_name(name, lineno, raw)
            arrow_specs.append(m.groups())
        elif stripped.startswith("relation:"):
            body = stripped[len("relation:"):]
            if body.count("=") != 1:
                raise ParseError(lineno, col, "relation needs exactly one '='")
            left, right = body.split("=")
            lhs, rhs = left.split(), right.split()
            if not lhs or not rhs:
                raise ParseError(lineno, col, "relation sides must be nonempty")
            for name in lhs + rhs:
                _require_name(name, lineno, raw)
            relation_specs.append((lhs, rhs, lineno))
        else:
            raise ParseError(lineno, col,
                             f"unrecognized directive {stripped.split()[0]!r}")

    index = {}
    for v, label in enumerate(vertices):
        if label in index:
            raise ValidationError(f"duplicate vertex {label!r}")
        index[label] = v

    arrows = []
    by_name = {}
    for aid, (name, src, dst) in enumerate(arrow_specs):
        if src not in index:
            raise ValidationError(f"unknown vertex {src!r}")
        if dst not in index:
            raise ValidationError(f"unknown vertex {dst!r}")
        if name in by_name:
            raise ValidationError(f"duplicate arrow {name!r}")
        var = base = None
        m = _ANNOTATED_NAME_RE.match(name)
        if m:
            var, base = int(m.group(1)), int(m.group(2))
        arrow = Arrow(aid, name, index[src], index[dst], var, base)
        arrows.append(arrow)
        by_name[name] = arrow

    quiver = Quiver(tuple(vertices), tuple(arrows))

    relations = []
    for lhs_names, rhs_names, lineno in relation_specs:
        sides = []
        for names in (lhs_names, rhs_names):
            for name in names:
                if name not in by_name:
                    raise ValidationError(f"unknown arrow {name!r}")
            ids = tuple(by_name[name].id for name in names)
            sides.append(Path(by_name[names[0]].source, ids))
        relations.append(Relation(sides[0], sides[1]))

    return QuiverWithRelations(quiver, tuple(relations))


def _require_name(name: str, lineno: int, raw: str) -> None:
    if _NAME_RE.match(name):
        return
    col = raw.find(name)
    raise ParseError(lineno, col + 1 if col >= 0 else 1,
                     f"invalid name {name!r}")


def serialize_dsl(qwr: QuiverWithRelations) -> str:
    quiver = qwr.quiver
    lines = ["vertices: " + " ".join(quiver.vertices)]
    for a in quiver.arrows:
        lines.append(f"arrow {a.name}: {quiver.vertices[a.source]} "
                     f"-> {quiver.vertices[a.target]}")
    for rel in qwr.relations:
        lhs = " ".join(quiver.arrows[i].name for i in rel.lhs.arrows)
        rhs = " ".join(quiver.arrows[i].name for i in rel.rhs.arrows)
        lines.append(f"relation: {lhs} = {rhs}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def to_json_dict(qwr: QuiverWithRelations) -> dict:
    for rel in qwr.relations:
        if not rel.lhs.arrows or not rel.rhs.arrows:
            raise ValidationError("cannot serialize a relation with an empty side")
    return {
        "vertices": list(qwr.quiver.vertices),
        "arrows": [
            {"id": a.id, "name": a.name, "src": a.source, "dst": a.target,
             "var": a.var, "base": a.base}
            for a in qwr.quiver.arrows
        ],
        "relations": [
            {"lhs": list(rel.lhs.arrows), "rhs": list(rel.rhs.arrows)}
            for rel in qwr.relations
        ],
    }


def to_json(qwr: QuiverWithRelations) -> str:
    return json.dumps(to_json_dict(qwr), indent=2) + "\n"


def from_json(text: str) -> QuiverWithRelations:
    data = json.loads(text)
    arrows = tuple(
        Arrow(d["id"], d["name"], d["src"], d["dst"], d.get("var"), d.get("base"))
        for d in data["arrows"])
    quiver = Quiver(tuple(data["vertices"]), arrows)
    relations = []
    for d in data.get("relations", []):
        sides = []
        for ids in (d["lhs"], d["rhs"]):
            if not ids:
                raise ValidationError("relation side must be a nonempty id list")
            sides.append(Path(quiver.arrows[ids[0]].source, tuple(ids)))
        relations.append(Relation(sides[0], sides[1]))
    return QuiverWithRelations(quiver, tuple(relations))


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

def export_dot(quiver: Quiver) -> str:
    """Graphviz digraph with one node per vertex, one labeled edge per arrow."""
    lines = ["digraph quiver {"]
    for label in quiver.vertices:
        lines.append(f'  "{label}";')
    for a in quiver.arrows:
        lines.append(f'  "{quiver.vertices[a.source]}" -> '
                     f'"{quiver.vertices[a.target]}" [label="{a.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
