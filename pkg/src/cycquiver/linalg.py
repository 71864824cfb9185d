"""Exact rank computation over the rationals, on sparse integer rows."""

from __future__ import annotations

from fractions import Fraction


def exact_rank(rows) -> int:
    """Rank of the span of the given rows (dicts column -> integer value).

    Gaussian elimination over Fraction; pivots are chosen as the smallest
    column index of each reduced row, so the result is deterministic.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                rank += 1
                break
            factor = row[lead] / pivot[lead]
            for c, v in pivot.items():
                nv = row.get(c, Fraction(0)) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        # a row reduced to nothing is dependent on earlier ones
    return rank
