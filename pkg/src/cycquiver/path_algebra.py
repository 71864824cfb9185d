"""Path algebra of a quiver with relations, as finite data.

For the commutation quiver of a weight vector the relations say that any
two adjacent arrow variables may be exchanged (at the matching bases), so
every path is equivalent to exactly one path whose variable indices are
weakly increasing along the traversal.  normal_form computes that
representative by adjacent swaps, each of which removes one inversion of
the variable sequence, so the rewriting terminates.

hom_basis and cartan_matrix count those sorted representatives.  They are
only trustworthy when the relation family really is confluent, which is a
property of the input, not of this code; cartan_matrix_oracle therefore
recomputes every dimension by exact linear algebra on the full path space
(no rewriting involved), and check_confluence stress-tests the rewriting
under randomized reduction orders.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .linalg import exact_rank
from .quiver import Path, Quiver, QuiverWithRelations, path_end, validate_path
from .reports import Assertion, CheckReport


class PathAlgebraError(Exception):
    pass


class InvalidPath(PathAlgebraError):
    """The path is not composable or references foreign arrows."""


class RewritingIncomplete(PathAlgebraError):
    """The quiver lacks the annotations or relations needed for sorting."""


class MissingRelationInstance(RewritingIncomplete):
    """An adjacent swap was needed but no relation instance provides it."""


class CyclicQuiver(PathAlgebraError):
    """The quiver has a directed cycle, so path spaces are infinite."""


class PathCapExceeded(PathAlgebraError):
    """Raw path count for some vertex pair exceeds the configured cap."""


# A normal form is an ordinary Path whose arrow variable indices are weakly
# increasing in traversal order; normal_form below guarantees that shape.
NormalForm = Path


def inversions(seq) -> int:
    seq = list(seq)
    return sum(1 for t in range(len(seq))
               for u in range(t + 1, len(seq)) if seq[t] > seq[u])


class Rewriter:
    """Rewriting engine for one quiver with relations.

    Builds the swap table once: for every relation whose sides are parallel
    length-2 paths, the side with strictly decreasing variables rewrites to
    the side with weakly increasing variables.
    """

    def __init__(self, qwr: QuiverWithRelations):
        self.qwr = qwr
        self.quiver = qwr.quiver
        self.outgoing = _adjacency(self.quiver)
        self.swap: dict[tuple[int, int], tuple[int, int]] = {}
        for rel in qwr.relations:
            for this, other in ((rel.lhs, rel.rhs), (rel.rhs, rel.lhs)):
                if len(this.arrows) != 2 or len(other.arrows) != 2:
                    continue
                tv = [self.quiver.arrows[i].var for i in this.arrows]
                ov = [self.quiver.arrows[i].var for i in other.arrows]
                if None in tv or None in ov:
                    continue
                if tv[0] > tv[1] and ov[0] <= ov[1]:
                    self.swap[tuple(this.arrows)] = tuple(other.arrows)

    def _vars(self, arrow_ids) -> list[int]:
        out = []
        for aid in arrow_ids:
            var = self.quiver.arrows[aid].var
            if var is None:
                raise RewritingIncomplete(
                    f"arrow {self.quiver.arrows[aid].name!r} has no variable "
                    "annotation; rewriting incomplete")
            out.append(var)
        return out

    def _check(self, path: Path) -> None:
        try:
            validate_path(self.quiver, path)
        except Exception as exc:
            raise InvalidPath(str(exc)) from exc

    def _swap_at(self, ids: list[int], t: int) -> None:
        pair = (ids[t], ids[t + 1])
        repl = self.swap.get(pair)
        if repl is None:
            a, b = (self.quiver.arrows[i].name for i in pair)
            raise MissingRelationInstance(
                f"no relation instance exchanges {a!r} then {b!r}; "
                "rewriting incomplete")
        ids[t], ids[t + 1] = repl

    def _step(self, ids: list[int], vars_: list[int], t: int, pending: int) -> int:
        # one swap; the inversion count must strictly decrease or rewriting
        # under this measure does not terminate (possible for hand-written
        # relation sets whose sides carry different variables)
        self._swap_at(ids, t)
        vars_[t], vars_[t + 1] = (self.quiver.arrows[ids[t]].var,
                                  self.quiver.arrows[ids[t + 1]].var)
        now = inversions(vars_)
        if now >= pending:
            raise RewritingIncomplete(
                "swap did not decrease the inversion count; "
                "rewriting incomplete")
        return now

    def normal_form(self, path: Path) -> Path:
        """Variable-sorted representative, by leftmost adjacent swaps."""
        self._check(path)
        ids = list(path.arrows)
        vars_ = self._vars(ids)
        pending = inversions(vars_)
        while pending:
            t = next(t for t in range(len(vars_) - 1) if vars_[t] > vars_[t + 1])
            pending = self._step(ids, vars_, t, pending)
        return Path(path.start, tuple(ids))

    def reduce_random(self, path: Path, rng: random.Random) -> Path:
        """Fully reduce, choosing a random applicable position each step."""
        self._check(path)
        ids = list(path.arrows)
        vars_ = self._vars(ids)
        pending = inversions(vars_)
        while True:
            spots = [t for t in range(len(vars_) - 1) if vars_[t] > vars_[t + 1]]
            if not spots:
                return Path(path.start, tuple(ids))
            t = rng.choice(spots)
            pending = self._step(ids, vars_, t, pending)

    def random_path(self, rng: random.Random) -> Path:
        start = rng.randrange(len(self.quiver.vertices))
        at = start
        ids = []
        budget = rng.randint(0, len(self.quiver.vertices))
        for _ in range(budget):
            options = self.outgoing[at]
            if not options:
                break
            arrow = rng.choice(options)
            ids.append(arrow.id)
            at = arrow.target
        return Path(start, tuple(ids))


def _adjacency(quiver: Quiver) -> list[list]:
    outgoing = [[] for _ in quiver.vertices]
    for a in quiver.arrows:
        outgoing[a.source].append(a)
    return outgoing


def normal_form(qwr: QuiverWithRelations, path: Path) -> Path:
    return Rewriter(qwr).normal_form(path)


def hom_basis(qwr: QuiverWithRelations, source: int, target: int) -> list[Path]:
    """All variable-sorted paths from source to target (vertex indices),
    in lexicographic order on variable sequences.

    Requires an acyclic quiver with variable annotations on every arrow.
    """
    quiver = qwr.quiver
    if not quiver.is_acyclic():
        raise CyclicQuiver("hom_basis needs an acyclic quiver")
    for v in (source, target):
        if not 0 <= v < len(quiver.vertices):
            raise InvalidPath(f"vertex index {v} out of range")
    outgoing = _adjacency(quiver)
    for row in outgoing:
        row.sort(key=lambda a: (a.var if a.var is not None else -1, a.id))
        for a in row:
            if a.var is None:
                raise RewritingIncomplete(
                    f"arrow {a.name!r} has no variable annotation")
    found: list[Path] = []

    def extend(at: int, ids: tuple[int, ...], min_var: int) -> None:
        if at == target:
            found.append(Path(source, ids))
            return  # acyclic: no extension can come back to the target
        for arrow in outgoing[at]:
            if arrow.var >= min_var:
                extend(arrow.target, ids + (arrow.id,), arrow.var)

    extend(source, (), 0)
    return found


@dataclass(frozen=True)
class CartanMatrix:
    """Table of path-space dimensions between idempotents, in vertex order."""

    vertices: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices),
                "matrix": [list(row) for row in self.matrix]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def cartan_matrix(qwr: QuiverWithRelations) -> CartanMatrix:
    """Dimension of each between-vertex space, counted by sorted paths."""
    V = len(qwr.quiver.vertices)
    rows = tuple(tuple(len(hom_basis(qwr, u, v)) for v in range(V))
                 for u in range(V))
    return CartanMatrix(qwr.quiver.vertices, rows)


def cartan_matrix_oracle(qwr: QuiverWithRelations,
                         path_cap: int = 200_000) -> CartanMatrix:
    """The same table by exact linear algebra, independent of any rewriting.

    For each vertex pair, take the vector space spanned by all composable
    paths, quotient by every two-sided multiple of every relation, and
    measure the quotient dimension by rational Gaussian elimination.
    Refuses with PathCapExceeded when some raw path list would exceed
    path_cap, and with CyclicQuiver when path spaces are infinite.
    """
    quiver = qwr.quiver
    order = quiver.topological_order()
    if order is None:
        raise CyclicQuiver("path spaces of a cyclic quiver are infinite")
    V = len(quiver.vertices)
    outgoing = _adjacency(quiver)
    for row in outgoing:
        row.sort(key=lambda a: a.id)

    # paths[v][u]: all arrow-id tuples from u to v; sources are processed in
    # reverse topological order, so every arrow target is already done
    paths: list[list[list[tuple[int, ...]]]] = [[[] for _ in range(V)]
                                                for _ in range(V)]
    for v in range(V):
        for u in reversed(order):
            here = [()] if u == v else []
            for arrow in outgoing[u]:
                for tail in paths[v][arrow.target]:
                    here.append((arrow.id,) + tail)
                    if len(here) > path_cap:
                        raise PathCapExceeded(
                            f"more than {path_cap} raw paths from vertex {u} "
                            f"to vertex {v}")
            paths[v][u] = here

    ends = [path_end(quiver, rel.lhs) for rel in qwr.relations]
    matrix = []
    for u in range(V):
        row = []
        for v in range(V):
            basis = paths[v][u]
            index = {p: i for i, p in enumerate(basis)}
            rows = []
            for rel, t_end in zip(qwr.relations, ends):
                for prefix in paths[rel.lhs.start][u]:
                    for suffix in paths[v][t_end]:
                        left = index[prefix + rel.lhs.arrows + suffix]
                        right = index[prefix + rel.rhs.arrows + suffix]
                        if left != right:
                            rows.append({left: 1, right: -1})
            row.append(len(basis) - exact_rank(rows))
        matrix.append(tuple(row))
    return CartanMatrix(quiver.vertices, tuple(matrix))


def check_confluence(qwr: QuiverWithRelations, trials: int, seed: int) -> CheckReport:
    """Reduce random paths under randomized rewrite orders; every reduction
    sequence must reach the deterministic normal form."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    rewriter = Rewriter(qwr)
    assertions = []
    divergences = 0
    nontrivial = 0
    for trial in range(trials):
        path = rewriter.random_path(rng)
        expected = rewriter.normal_form(path)
        if path.arrows and inversions(rewriter._vars(list(path.arrows))):
            nontrivial += 1
        for run in range(2):
            got = rewriter.reduce_random(path, rng)
            if got != expected:
                divergences += 1
                assertions.append(Assertion(
                    id=f"trial-{trial}-run-{run}",
                    status="fail",
                    detail=f"path {path} reduced to {got}, expected {expected}",
                ))
    assertions.append(Assertion(
        id="no-divergence",
        status="pass" if divergences == 0 else "fail",
        detail=(f"trials={trials} seed={seed} nontrivial={nontrivial} "
                f"divergences={divergences}"),
    ))
    return CheckReport("confluence", qwr.weights or (), assertions)
